#include "citor/random_module.hpp"

#include <algorithm>

namespace citor {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Polynomial random_form(const RingPtr& r, std::mt19937_64& rng, int degree) {
  const SpacePtr& s = r->space();
  Polynomial p = r->zero();
  const long terms = draw(rng, 1, 2);
  for (long t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::constant(s, draw(rng, -3, 3));
    for (int k = 0; k < degree; ++k) {
      auto v = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(s->nvars()) - 1));
      m = m * Polynomial::variable(s, v);
    }
    p = p + m;
  }
  return p;
}

}  // namespace

Module random_module(const RingPtr& r, std::mt19937_64& rng, const RandomModuleShape& shape) {
  const auto gens = static_cast<std::size_t>(draw(rng, 1, shape.max_generators));
  const auto rels = static_cast<std::size_t>(draw(rng, 1, shape.max_relations));
  std::vector<int> rows(gens);
  for (int& d : rows) d = static_cast<int>(draw(rng, 0, shape.max_shift));
  std::sort(rows.begin(), rows.end());
  const int top = rows.back();
  std::vector<int> cols(rels);
  for (int& d : cols) d = top + static_cast<int>(draw(rng, 1, shape.max_entry_degree));
  Matrix a(r->space(), rows, cols);
  for (std::size_t j = 0; j < rels; ++j) {
    for (std::size_t i = 0; i < gens; ++i) {
      const int e = cols[j] - rows[i];
      if (e < 1 || e > shape.max_entry_degree || draw(rng, 0, 99) < shape.zero_percent) continue;
      a.set(i, j, r->reduce(random_form(r, rng, e)));
    }
  }
  return Module(r, a).minimal();
}

}  // namespace citor
