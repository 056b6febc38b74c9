#include "citor/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "citor/errors.hpp"

namespace citor {

std::vector<int> FreeResolution::degrees(std::size_t i) const {
  if (i == 0) return f0_degrees;
  if (i <= differentials.size()) return differentials[i - 1].col_degrees();
  return {};
}

std::optional<int> FreeResolution::projective_dimension() const {
  if (!terminated) return std::nullopt;
  if (f0_degrees.empty()) return std::nullopt;
  return static_cast<int>(differentials.size());
}

int default_steps(const Ring& r) { return 2 * r.dimension() + 2 * static_cast<int>(r.codim()) + 4; }

FreeResolution resolve(const Module& m, ResolveOver over, int steps) {
  if (steps < 1) fail(ErrorKind::incompatible_operands, "resolution needs at least one step");
  FreeResolution res;
  res.over = over;
  res.requested_steps = steps;
  const Module& mm = m.minimal();
  res.f0_degrees = mm.degrees();
  Matrix cur;
  std::vector<Polynomial> ideal;
  if (over == ResolveOver::ambient) {
    res.ring = m.ring()->is_regular() ? m.ring() : m.ring()->ambient();
    cur = prune_presentation(mm.ambient_relations(), {});
    // Hilbert's syzygy theorem bounds the length by the number of variables.
    steps = static_cast<int>(m.ring()->nvars()) + 1;
  } else {
    res.ring = m.ring();
    ideal = m.ring()->ideal_gb();
    cur = mm.relations();
  }
  if (mm.generator_count() == 0) {
    res.terminated = true;
    return res;
  }
  for (int k = 1; k <= steps; ++k) {
    if (cur.cols() == 0) {
      res.terminated = true;
      break;
    }
    if (!cur.is_minimal()) res.minimal = false;
    res.differentials.push_back(cur);
    if (k == steps) break;
    cur = syzygies(cur, ideal);
  }
  if (over == ResolveOver::ambient && !res.terminated) {
    fail(ErrorKind::too_large, "ambient resolution did not terminate within the number of variables");
  }
  return res;
}

bool verify_complex(const FreeResolution& res) {
  const auto& ideal = res.ring->ideal_gb();
  for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i) {
    if (!reduce_matrix(res.differentials[i] * res.differentials[i + 1], ideal).is_zero()) return false;
  }
  return true;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < betti.size(); ++i) os << (i ? ", " : "") << betti[i];
  os << ")";
  if (terminated) {
    os << " terminated";
  } else {
    os << " through step " << bound;
  }
  return os.str();
}

BettiTable betti_table(const FreeResolution& res) {
  if (!res.minimal) fail(ErrorKind::minimality_required, "Betti numbers need a minimal resolution");
  BettiTable t;
  t.terminated = res.terminated;
  t.bound = res.requested_steps;
  std::size_t count = res.length() + 1;
  if (res.terminated) count = std::max<std::size_t>(count, static_cast<std::size_t>(res.requested_steps) + 1);
  for (std::size_t i = 0; i < count; ++i) {
    auto degs = res.degrees(i);
    t.betti.push_back(static_cast<long>(degs.size()));
    std::map<int, long> g;
    for (int d : degs) ++g[d];
    t.graded.push_back(std::move(g));
  }
  return t;
}

std::string ComplexityEstimate::to_string() const {
  std::ostringstream os;
  os << (at_least_window ? ">=" : "") << value << " (estimate from window " << window << ")";
  if (conflict) os << " [clamped to codimension]";
  return os.str();
}

namespace {

bool all_zero(const std::vector<long>& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// Smallest s >= 1 such that the order-s differences of some suffix of seq
// vanish, where the suffix covers at least half of seq. nullopt if no order up
// to max_order settles.
std::optional<int> settling_order(const std::vector<long>& seq, int max_order) {
  const std::size_t n = seq.size();
  for (int s = 1; s <= max_order; ++s) {
    const std::size_t need = std::max<std::size_t>(static_cast<std::size_t>(s) + 1, (n + 1) / 2);
    if (n < need) return std::nullopt;
    std::vector<long> diff(seq.end() - static_cast<std::ptrdiff_t>(need), seq.end());
    for (int k = 0; k < s; ++k) {
      for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
      diff.pop_back();
    }
    if (all_zero(diff)) return s;
  }
  return std::nullopt;
}

}  // namespace

ComplexityEstimate complexity_estimate(const std::vector<long>& betti, int codim) {
  ComplexityEstimate est;
  est.window = static_cast<int>(betti.size());
  const int needed = std::max(4, codim + 3);
  if (est.window < needed) {
    fail(ErrorKind::insufficient_window, "complexity needs at least " + std::to_string(needed) + " Betti numbers, got " +
                                             std::to_string(est.window));
  }
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] == 0) {
      est.value = 0;
      return est;
    }
  }
  // Tail from index 1, split by parity: Betti numbers over a complete
  // intersection are eventually quasi-polynomial of period two.
  std::vector<long> tail(betti.begin() + 1, betti.end());
  std::vector<long> row = tail;
  est.differences.push_back(row);
  for (int k = 0; k < codim + 1 && row.size() > 1; ++k) {
    std::vector<long> next;
    for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
    row = std::move(next);
    est.differences.push_back(row);
  }
  int value = 0;
  bool unsettled = false;
  for (std::size_t parity = 0; parity < 2; ++parity) {
    std::vector<long> sub;
    for (std::size_t i = parity; i < tail.size(); i += 2) sub.push_back(tail[i]);
    auto s = settling_order(sub, codim + 1);
    if (!s) {
      unsettled = true;
      value = std::max(value, codim + 1);
    } else {
      value = std::max(value, *s);
    }
  }
  est.at_least_window = unsettled;
  if (value > codim) {
    est.conflict = true;
    value = codim;
  }
  est.value = value;
  return est;
}

std::string Periodicity::to_string() const {
  if (!tested) return "periodicity not tested (fewer than 6 steps)";
  if (!periodic) return "not periodic";
  return "periodic, period " + std::to_string(period) + ", onset " + std::to_string(onset);
}

namespace {

// a == c * b for some nonzero constant c, returned through scale.
bool proportional(const Polynomial& a, const Polynomial& b, Coefficient& scale) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  scale = a.leading().coefficient * b.leading().coefficient.inverse();
  return a == b.scaled(scale);
}

// B[i][j] = r_i c_j A[pr[i]][pc[j]] for nonzero constants r, c.
bool scaled_equal(const Matrix& a, const Matrix& b, const std::vector<std::size_t>& pr,
                  const std::vector<std::size_t>& pc) {
  const std::size_t nr = b.rows(), nc = b.cols();
  std::vector<std::optional<Coefficient>> r(nr), c(nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      Coefficient s;
      if (!proportional(b.at(i, j), a.at(pr[i], pc[j]), s)) return false;
      if (b.at(i, j).is_zero()) continue;
      if (!r[i] && !c[j]) {
        r[i] = Coefficient::one(s.field());
        c[j] = s;
      } else if (!r[i]) {
        r[i] = s * c[j]->inverse();
      } else if (!c[j]) {
        c[j] = s * r[i]->inverse();
      } else if (!(*r[i] * *c[j] == s)) {
        return false;
      }
    }
  }
  return true;
}

bool equivalent(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<std::size_t> pr(a.rows()), pc(a.cols());
  std::iota(pr.begin(), pr.end(), 0);
  std::iota(pc.begin(), pc.end(), 0);
  if (a.rows() > 5 || a.cols() > 5) return scaled_equal(a, b, pr, pc);
  do {
    std::iota(pc.begin(), pc.end(), 0);
    do {
      if (scaled_equal(a, b, pr, pc)) return true;
    } while (std::next_permutation(pc.begin(), pc.end()));
  } while (std::next_permutation(pr.begin(), pr.end()));
  return false;
}

}  // namespace

Periodicity detect_periodicity(const FreeResolution& res) {
  Periodicity p;
  p.tested = true;
  if (res.terminated) return p;
  const int len = static_cast<int>(res.length());
  if (len < 6) fail(ErrorKind::insufficient_window, "periodicity detection needs at least 6 steps");
  for (int period = 1; period <= len / 3; ++period) {
    // Smallest onset from which every comparison in the window matches, with
    // at least two comparisons.
    for (int onset = 1; onset + period + 1 <= len; ++onset) {
      bool ok = true;
      for (int i = onset; i + period <= len && ok; ++i) {
        ok = equivalent(res.differentials[static_cast<std::size_t>(i - 1)],
                        res.differentials[static_cast<std::size_t>(i + period - 1)]);
      }
      if (ok) {
        p.periodic = true;
        p.period = period;
        p.onset = onset;
        return p;
      }
    }
  }
  return p;
}

}  // namespace citor
