#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "citor/session.hpp"

namespace citor {

using Json = nlohmann::ordered_json;

// One computed block of a report. key is the top-level field of the
// structured document it belongs to.
struct Section {
  std::string key;
  Json data;
  std::string text;
};

struct ExampleCheck {
  std::string name;
  std::string expected;
  std::string actual;
  // "PAPER", "TRIVIAL" or "DERIVED", with the quoted anchor.
  std::string provenance;
  std::string anchor;
  bool pass = false;
};

struct ExampleReport {
  std::string id;
  std::string title;
  std::vector<ExampleCheck> checks;
  double seconds = 0;

  bool pass() const;
};

struct ResultSet {
  Field field;
  Bounds bounds;
  std::vector<Section> sections;
  std::vector<ExampleReport> examples;
  // Commands that raised an error, with the error text.
  std::vector<std::string> errors;
  bool guardrail = false;
  // Wall-clock timings in the output; off keeps documents byte-stable.
  bool timings = false;

  bool mismatch() const;
};

const std::vector<std::string>& example_ids();
// Runs the catalog entry into `out`; throws unknown_id.
ExampleReport run_example(const std::string& id, ResultSet& out);
ExampleReport run_example(const std::string& id, const Field& field = Field::default_field());

// Executes the session's commands in order. Command errors are recorded in
// out.errors; guardrail errors also set out.guardrail.
void run_session(const Session& s, ResultSet& out);

enum class Format { text, json };

Format parse_format(const std::string& name);
std::string emit_report(const ResultSet& r, Format f);

}  // namespace citor
