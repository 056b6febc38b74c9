#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "citor/module.hpp"
#include "citor/random_module.hpp"

namespace citor {

enum class HypothesisStatus { satisfied, failed, model_level, undetermined };

// What a checklist line rests on.
enum class Basis {
  exact,      // computed invariant
  estimate,   // complexity read off a finite Betti window
  surrogate,  // a sufficient global condition replacing a statement about all primes
  window,     // only the computed range of indices was inspected
  model,      // automatic in the graded equicharacteristic setting
};

const char* hypothesis_status_name(HypothesisStatus s);
const char* basis_name(Basis b);

struct HypothesisLine {
  std::string text;
  HypothesisStatus status = HypothesisStatus::undetermined;
  std::string evidence;
  Basis basis = Basis::exact;

  bool ok() const { return status == HypothesisStatus::satisfied || status == HypothesisStatus::model_level; }
};

enum class Verdict { conclusion_holds, conclusion_fails, hypotheses_unmet };

const char* verdict_name(Verdict v);

struct TheoremInstance {
  Module m;
  // Second module; statements about a single module ignore it.
  std::optional<Module> n;
  // Largest Tor index computed; 0 picks max(8, 2c + 4).
  int bound = 0;
  // The index n of statements with "for some n"; searched for when absent.
  std::optional<int> index;
  // The integer w of the finite-length ladder statement.
  int w = 0;
  std::string description;
};

struct TheoremReport {
  std::string id;
  std::string statement;
  std::string instance;
  int bound = 0;
  std::vector<HypothesisLine> checklist;
  Verdict verdict = Verdict::hypotheses_unmet;
  bool asserted = false;
  std::string conclusion;
  std::string evidence;
  // Evidence tier behind a "for all i" conclusion, empty otherwise.
  std::string tier;
  double seconds = 0;

  std::string to_string(bool with_timing = true) const;
};

const std::vector<std::string>& theorem_ids();
// Throws unknown_id for ids outside theorem_ids().
TheoremReport check_theorem(const std::string& id, const TheoremInstance& inst);
// A report never asserts over a failed or undetermined line.
bool report_is_sound(const TheoremReport& r);

struct SearchConfig {
  RingPtr ring;
  // One of question_ids().
  std::string question;
  RandomModuleShape shape;
  int samples = 20;
  std::uint64_t seed = 1;
  int bound = 6;
  // Evaluated after the random samples, in order.
  std::vector<std::pair<Module, std::optional<Module>>> extra;
};

struct Finding {
  std::size_t index = 0;
  // "candidate" or "near-miss".
  std::string kind;
  std::string instance;
  std::vector<HypothesisLine> hypotheses;
  std::string conclusion;
  bool conclusion_holds = false;
};

struct SearchLog {
  std::string question;
  std::string statement;
  std::string ring;
  std::uint64_t seed = 0;
  int samples = 0;
  int bound = 0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  // Hypotheses held and the questioned conclusion held in the window.
  std::size_t confirmations = 0;
  std::size_t candidates = 0;
  std::size_t near_misses = 0;
  std::vector<Finding> findings;
  std::vector<std::string> skip_reasons;

  std::string to_string() const;
};

const std::vector<std::string>& question_ids();
SearchLog counterexample_search(const SearchConfig& cfg);

}  // namespace citor
