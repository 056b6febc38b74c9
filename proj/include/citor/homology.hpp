#pragma once

#include <optional>
#include <string>
#include <vector>

#include "citor/module.hpp"
#include "citor/resolution.hpp"

namespace citor {

// H_i(F ⊗ N) for a resolution F of M over R. Needs d_{i+1} unless the
// resolution terminated before it.
Module tor_module(const FreeResolution& res, const Module& n, int i);
// H^i(Hom(F, N)).
Module ext_module(const FreeResolution& res, const Module& n, int i);

// Hilbert values of a module starting at its lowest generator degree.
struct HilbertWindow {
  int start = 0;
  std::vector<long> values;

  bool operator==(const HilbertWindow&) const = default;
  std::string to_string() const;
};

HilbertWindow hilbert_window(const Module& m, int count);

struct HomologyEntry {
  int index = 0;
  Module module;  // minimal presentation
  bool vanishes = true;
  HilbertWindow hilbert;
  ExtInt depth;
  ExtInt dim;
  bool finite_length = true;
  std::size_t betti0 = 0;
};

// How a claim "vanishes for all i >= 1" is backed.
enum class EvidenceTier { pd_finite, window_periodicity, window_rigidity, window_only, not_vanishing };

const char* evidence_tier_name(EvidenceTier t);

struct VanishingEvidence {
  bool all_vanish = false;  // certified by a tier other than window_only
  bool window_vanishes = false;
  EvidenceTier tier = EvidenceTier::not_vanishing;
  std::string detail;
};

struct ProfileOptions {
  // Hilbert values recorded per entry.
  int hilbert_count = 9;
  // Compute depth/dim of each entry.
  bool with_depth = true;
  // Resolve the second argument instead of the first (Tor only).
  bool resolve_second = false;
};

struct HomologyProfile {
  std::string kind;  // "tor" or "ext"
  int bound = 0;
  std::vector<HomologyEntry> entries;  // indices 0..bound
  FreeResolution resolution;
  Periodicity periodicity;
  // Indices i >= 1 with i + 2 <= bound whose entries have equal Hilbert windows
  // and generator counts as entry i + 2.
  std::vector<int> distance_two_matches;

  const HomologyEntry& at(int i) const { return entries.at(static_cast<std::size_t>(i)); }
  std::string to_string() const;
};

HomologyProfile tor(const Module& m, const Module& n, int bound, const ProfileOptions& opts = {});
HomologyProfile ext(const Module& m, const Module& n, int bound, const ProfileOptions& opts = {});

// Evidence that Tor_i = 0 for every i >= 1, read off a Tor profile.
VanishingEvidence tor_vanishing(const HomologyProfile& tor_profile, std::size_t codim);

struct DepthFormulaReport {
  ExtInt depth_m;
  ExtInt depth_n;
  int depth_r = 0;
  ExtInt depth_tensor;
  ExtInt lhs;
  ExtInt rhs;
  bool hypothesis_ok = false;  // Tor vanishing certified
  bool asserted = false;       // formula asserted (only when the hypothesis is ok)
  bool holds = false;
  VanishingEvidence evidence;

  std::string to_string() const;
};

DepthFormulaReport depth_formula_check(const Module& m, const Module& n, int bound);

}  // namespace citor
