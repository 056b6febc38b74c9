#pragma once

#include <cstdint>
#include <random>

#include "citor/module.hpp"

namespace citor {

struct RandomModuleShape {
  int max_generators = 4;
  int max_relations = 4;
  // Entries have degree 1..max_entry_degree.
  int max_entry_degree = 2;
  // Generator degrees are drawn from 0..max_shift.
  int max_shift = 1;
  // Probability that an entry is zero, in percent.
  int zero_percent = 40;
};

// Random homogeneous presentation over r, minimalized. The same engine state
// always gives the same module.
Module random_module(const RingPtr& r, std::mt19937_64& rng, const RandomModuleShape& shape = {});

}  // namespace citor
