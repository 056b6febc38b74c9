#pragma once

#include <string>
#include <vector>

#include "citor/module.hpp"

namespace citor {

// One named exactness check with its outcome.
struct Certificate {
  std::string name;
  bool ok = false;
  std::string detail;
};

bool all_ok(const std::vector<Certificate>& certs);
std::string certificates_to_string(const std::vector<Certificate>& certs);

// 0 -> M -u-> R^m -> M1 -> 0 with u(x) = (f_1(x), ..., f_m(x)) for minimal
// generators f_j of M*.
struct PushforwardResult {
  Module source;
  // Minimal generators of M* as columns in the dual of the generators of M.
  Matrix functionals;
  // u on generators: rows are the m coordinates, columns the generators of M.
  Matrix embedding;
  std::size_t m = 0;
  Module pushforward;
  std::vector<Certificate> certificates;
};

// Requires M torsion-free over a certified ring; torsion raises
// hypothesis_missing with the torsion submodule in the message.
PushforwardResult pushforward(const Module& m);

struct PushforwardChain {
  // M_0 = M, M_1, ...
  std::vector<Module> modules;
  std::vector<PushforwardResult> steps;
  bool stopped_early = false;
  std::string stop_reason;
};

PushforwardChain pushforward_chain(const Module& m, int k);

// 0 -> E -> S'^m -> M1 -> 0 for R = S'/(f), with f the quotient generator at
// index `split`, and the sequence 0 -> M1(-deg f) -> E/fE -> M -> 0.
struct QuasiLiftingResult {
  PushforwardResult pushforward;
  RingPtr intermediate;
  Polynomial f;
  std::size_t split = 0;
  // E over S', minimal presentation.
  Module lifting;
  // E/fE over R.
  Module reduction;
  std::vector<Certificate> certificates;
  // depth_{S'} E = depth_R M1 + 1 when M1 != 0.
  bool depth_relation_checked = false;
  bool depth_relation_holds = false;
};

QuasiLiftingResult quasi_lifting(const Module& m, std::size_t split);

}  // namespace citor
