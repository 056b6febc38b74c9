#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citor/module.hpp"

namespace citor {

enum class ResolveOver { ambient, quotient };

// Minimal graded free resolution F_0 <- F_1 <- ... ; differentials[i-1] = d_i.
struct FreeResolution {
  RingPtr ring;  // the ring the resolution lives over
  ResolveOver over = ResolveOver::quotient;
  std::vector<Matrix> differentials;
  std::vector<int> f0_degrees;
  int requested_steps = 0;
  // The kernel became zero: the resolution is complete.
  bool terminated = false;
  bool minimal = true;

  std::size_t length() const { return differentials.size(); }
  // Generator degrees of F_i.
  std::vector<int> degrees(std::size_t i) const;
  std::size_t rank(std::size_t i) const { return degrees(i).size(); }
  // pd when terminated.
  std::optional<int> projective_dimension() const;
};

// Default truncation bound 2 dim R + 2c + 4.
int default_steps(const Ring& r);

FreeResolution resolve(const Module& m, ResolveOver over, int steps);
// d_i * d_{i+1} reduces to zero for every computed i.
bool verify_complex(const FreeResolution& res);

struct BettiTable {
  std::vector<long> betti;
  // graded[i][j] = number of generators of F_i in degree j.
  std::vector<std::map<int, long>> graded;
  int bound = 0;
  bool terminated = false;

  std::string to_string() const;
};

BettiTable betti_table(const FreeResolution& res);

struct ComplexityEstimate {
  int value = 0;
  bool at_least_window = false;  // differences never settled in the window
  bool conflict = false;         // the heuristic exceeded the codimension
  int window = 0;
  std::vector<std::vector<long>> differences;

  std::string to_string() const;
};

ComplexityEstimate complexity_estimate(const std::vector<long>& betti, int codim);

struct Periodicity {
  // False when the window was too short to look.
  bool tested = false;
  bool periodic = false;
  int period = 0;
  int onset = 0;

  std::string to_string() const;
};

Periodicity detect_periodicity(const FreeResolution& res);

}  // namespace citor
