#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "citor/errors.hpp"
#include "citor/harness.hpp"
#include "citor/report.hpp"

using namespace citor;

namespace {

// Exit codes.
constexpr int ok = 0;
constexpr int mismatch = 1;
constexpr int usage = 2;
constexpr int guardrail = 3;

bool is_guardrail(ErrorKind k) { return k == ErrorKind::too_large || k == ErrorKind::oracle_too_large; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"citor: Tor vanishing over complete intersections"};
  std::string script;
  std::vector<std::string> examples;
  std::string format;
  std::string field_tag = "f32003";
  Bounds bounds;
  bool timings = false;
  bool list = false;
  app.add_option("--script", script, "DSL script to run")->check(CLI::ExistingFile);
  app.add_option("--example", examples, "catalog example id (repeatable; 'all' runs every entry)");
  app.add_option("--format", format, "text or json (default: $CITOR_FORMAT, else text)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", field_tag, "coefficient field")
      ->check(CLI::IsMember({"f32003", "rational"}));
  app.add_option("--steps", bounds.steps, "resolution length (0: 2 dim R + 2 codim R + 4)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tor-bound", bounds.tor_bound, "largest Tor/Ext index")->check(CLI::Range(0, 64));
  app.add_option("--degree-bound", bounds.degree_bound, "Hilbert values per module, minus one")
      ->check(CLI::Range(0, 64));
  app.add_option("--seed", bounds.seed, "default seed for search");
  app.add_flag("--timings", timings, "print wall-clock timings (output is no longer byte-stable)");
  app.add_flag("--list", list, "list example, theorem and question ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  if (list) {
    std::cout << "examples:";
    for (const auto& id : example_ids()) std::cout << " " << id;
    std::cout << "\ntheorems:";
    for (const auto& id : theorem_ids()) std::cout << " " << id;
    std::cout << "\nquestions:";
    for (const auto& id : question_ids()) std::cout << " " << id;
    std::cout << "\n";
    return ok;
  }
  if (script.empty() && examples.empty()) {
    std::cerr << "citor: nothing to do; pass --script FILE or --example ID (see --help)\n";
    return usage;
  }
  if (format.empty()) {
    const char* env = std::getenv("CITOR_FORMAT");
    format = env ? env : "text";
  }

  ResultSet out;
  out.bounds = bounds;
  out.timings = timings;
  Format fmt;
  try {
    fmt = parse_format(format);
    out.field = Field::from_tag(field_tag);
  } catch (const Error& e) {
    std::cerr << "citor: " << e.what() << "\n";
    return usage;
  }

  try {
    if (!script.empty()) {
      std::ifstream in(script);
      std::stringstream buf;
      buf << in.rdbuf();
      Session s = parse_session(buf.str(), out.field);
      run_session(s, out);
    }
    for (const auto& id : examples) {
      if (id == "all") {
        for (const auto& each : example_ids()) run_example(each, out);
      } else {
        run_example(id, out);
      }
    }
  } catch (const Error& e) {
    std::cerr << "citor: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return is_guardrail(e.kind()) ? guardrail : usage;
  }

  std::cout << emit_report(out, fmt);
  if (out.guardrail) return guardrail;
  if (!out.errors.empty()) return usage;
  return out.mismatch() ? mismatch : ok;
}
