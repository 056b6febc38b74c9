#include <algorithm>
#include <sstream>

#include "citor/errors.hpp"
#include "citor/report.hpp"
#include "sections.hpp"

namespace citor {

bool ResultSet::mismatch() const {
  return std::any_of(examples.begin(), examples.end(), [](const ExampleReport& e) { return !e.pass(); });
}

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  fail(ErrorKind::parse_error, "unknown format '" + name + "' (text or json)");
}

namespace {

bool is_guardrail(ErrorKind k) { return k == ErrorKind::too_large || k == ErrorKind::oracle_too_large; }

int option(const Command& c, const std::string& key, int fallback) {
  auto it = c.options.find(key);
  return it == c.options.end() ? fallback : std::stoi(it->second);
}

int steps_for(const Command& c, const Bounds& b, const Ring& r) {
  int fallback = b.steps > 0 ? b.steps : default_steps(r);
  return option(c, "steps", fallback);
}

void run_command(const Session& s, const Command& c, ResultSet& out) {
  const Bounds& b = out.bounds;
  auto mod = [&](std::size_t i) -> const ModuleDecl& { return *s.find_module(c.args.at(i)); };
  ProfileOptions opts;
  opts.hilbert_count = b.degree_bound + 1;
  switch (c.kind) {
    case CommandKind::resolve: {
      const ModuleDecl& m = mod(0);
      ResolveOver over_kind = ResolveOver::quotient;
      auto it = c.options.find("over");
      if (it != c.options.end() && it->second == "ambient") over_kind = ResolveOver::ambient;
      FreeResolution res = resolve(m.module, over_kind, steps_for(c, b, *m.module.ring()));
      out.sections.push_back(detail::resolution_section(m.name, res));
      break;
    }
    case CommandKind::betti: {
      const ModuleDecl& m = mod(0);
      FreeResolution res = resolve(m.module, ResolveOver::quotient, steps_for(c, b, *m.module.ring()));
      out.sections.push_back(detail::betti_section(m.name, res));
      break;
    }
    case CommandKind::tor:
    case CommandKind::ext: {
      const ModuleDecl& m = mod(0);
      const ModuleDecl& n = mod(1);
      int bound = option(c, "bound", b.tor_bound);
      HomologyProfile p =
          c.kind == CommandKind::tor ? tor(m.module, n.module, bound, opts) : ext(m.module, n.module, bound, opts);
      out.sections.push_back(detail::homology_section(m.name, n.name, p, m.module.ring()->codim()));
      break;
    }
    case CommandKind::profile:
      out.sections.push_back(detail::profile_section(mod(0).name, mod(0).module));
      break;
    case CommandKind::pushforward:
      out.sections.push_back(detail::pushforward_section(mod(0).name, pushforward(mod(0).module)));
      break;
    case CommandKind::quasilift: {
      int split = option(c, "split", 0);
      out.sections.push_back(
          detail::quasilift_section(mod(0).name, quasi_lifting(mod(0).module, static_cast<std::size_t>(split))));
      break;
    }
    case CommandKind::check: {
      TheoremInstance inst{mod(0).module, c.args.size() > 1 ? std::optional<Module>(mod(1).module) : std::nullopt, 0,
                          std::nullopt, 0, ""};
      inst.bound = option(c, "bound", b.tor_bound);
      if (c.options.count("index")) inst.index = option(c, "index", 0);
      inst.w = option(c, "w", 0);
      inst.description = c.args.size() > 1 ? "M = " + c.args[0] + ", N = " + c.args[1] : "M = " + c.args[0];
      out.sections.push_back(detail::theorem_section(check_theorem(c.id, inst), out.timings));
      break;
    }
    case CommandKind::search: {
      SearchConfig cfg;
      cfg.ring = s.find_ring(c.args.at(0))->ring;
      cfg.question = c.id;
      cfg.samples = option(c, "samples", 20);
      cfg.seed = c.options.count("seed") ? static_cast<std::uint64_t>(option(c, "seed", 1)) : b.seed;
      cfg.bound = option(c, "bound", 6);
      cfg.shape.max_generators = option(c, "generators", cfg.shape.max_generators);
      cfg.shape.max_relations = option(c, "relations", cfg.shape.max_relations);
      cfg.shape.max_entry_degree = option(c, "degree", cfg.shape.max_entry_degree);
      for (const auto& [a, bname] : c.pairs) {
        cfg.extra.emplace_back(s.find_module(a)->module, s.find_module(bname)->module);
      }
      out.sections.push_back(detail::search_section(counterexample_search(cfg)));
      break;
    }
    case CommandKind::example:
      run_example(c.id, out);
      break;
  }
}

}  // namespace

void run_session(const Session& s, ResultSet& out) {
  out.field = s.field;
  for (const auto& r : s.rings) out.sections.push_back(detail::ring_section(r.name, r.ring));
  for (const auto& m : s.modules) out.sections.push_back(detail::module_section(m.name, m.ring, m.module));
  for (const auto& c : s.commands) {
    try {
      run_command(s, c, out);
    } catch (const Error& e) {
      out.errors.push_back("line " + std::to_string(c.line) + ": " + command_name(c.kind) + ": " +
                           error_kind_name(e.kind()) + ": " + e.what());
      if (is_guardrail(e.kind())) out.guardrail = true;
    }
  }
}

namespace {

const std::vector<std::string>& json_keys() {
  static const std::vector<std::string> keys = {"ring",        "module",          "betti",         "resolution",
                                                "profile",     "tor_profile",     "ext_profile",   "theorem_reports",
                                                "constructions", "searches",      "examples"};
  return keys;
}

std::string header_text(const ResultSet& r) {
  std::ostringstream os;
  os << "citor " << tool_version << "  field " << r.field.tag() << "  bounds: steps="
     << (r.bounds.steps > 0 ? std::to_string(r.bounds.steps) : "auto") << " tor=" << r.bounds.tor_bound
     << " degree=" << r.bounds.degree_bound << " seed=" << r.bounds.seed << "\n";
  return os.str();
}

}  // namespace

std::string emit_report(const ResultSet& r, Format f) {
  if (f == Format::text) {
    std::string out = header_text(r);
    for (const auto& s : r.sections) out += "\n" + s.text;
    if (!r.examples.empty()) {
      std::size_t pass = std::count_if(r.examples.begin(), r.examples.end(), [](const ExampleReport& e) {
        return e.pass();
      });
      out += "\nexamples: " + std::to_string(pass) + "/" + std::to_string(r.examples.size()) + " pass\n";
    }
    for (const auto& e : r.errors) out += "error: " + e + "\n";
    return out;
  }
  Json doc = Json::object();
  doc["tool_version"] = tool_version;
  doc["field_tag"] = r.field.tag();
  doc["bounds"] = {{"steps", r.bounds.steps},
                   {"tor_bound", r.bounds.tor_bound},
                   {"degree_bound", r.bounds.degree_bound},
                   {"seed", r.bounds.seed}};
  for (const auto& k : json_keys()) doc[k] = Json::array();
  for (const auto& s : r.sections) doc[s.key].push_back(s.data);
  Json prov = Json::array();
  for (const auto& e : r.examples) {
    for (const auto& c : e.checks) {
      prov.push_back({{"example", e.id}, {"check", c.name}, {"tag", c.provenance}, {"anchor", c.anchor}});
    }
  }
  doc["provenance"] = prov;
  doc["errors"] = r.errors;
  return doc.dump(2) + "\n";
}

}  // namespace citor
