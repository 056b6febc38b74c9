#include "citor/ring.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "citor/errors.hpp"
#include "citor/groebner.hpp"
#include "citor/parse.hpp"

namespace citor {

namespace {

std::string join_polys(const std::vector<Polynomial>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].to_string();
  }
  return out;
}

void require_homogeneous(const Polynomial& p, const std::string& what) {
  DegreeReport r = p.degree_report();
  if (!r.homogeneous) fail(ErrorKind::graded_violation, what + " " + p.to_string() + " is " + r.to_string());
}

bool is_monomial_ideal(const std::vector<Polynomial>& gb) {
  return std::all_of(gb.begin(), gb.end(), [](const Polynomial& p) { return p.size() == 1; });
}

// Minimal vertex covers of the supports of the generators, smallest first.
std::vector<PrimeIdeal> monomial_minimal_primes(const SpacePtr& space, const std::vector<Polynomial>& gb) {
  const std::size_t n = space->nvars();
  if (n > 20) fail(ErrorKind::too_large, "minimal primes: too many variables for cover enumeration");
  std::vector<std::uint32_t> supports;
  for (const auto& p : gb) {
    std::uint32_t mask = 0;
    const Monomial& m = p.leading().monomial;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) mask |= 1u << i;
    }
    supports.push_back(mask);
  }
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < masks.size(); ++s) masks[s] = s;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s : masks) {
    bool hits = std::all_of(supports.begin(), supports.end(), [&](std::uint32_t t) { return (t & s) != 0; });
    if (!hits) continue;
    bool contains_smaller = std::any_of(covers.begin(), covers.end(), [&](std::uint32_t c) { return (c & s) == c; });
    if (!contains_smaller) covers.push_back(s);
  }
  std::vector<PrimeIdeal> out;
  for (std::uint32_t c : covers) {
    PrimeIdeal p;
    for (std::size_t i = 0; i < n; ++i) {
      if (c & (1u << i)) p.generators.push_back(Polynomial::variable(space, i));
    }
    p.certificate = "monomial";
    out.push_back(std::move(p));
  }
  return out;
}

Polynomial random_form(const SpacePtr& s, int degree, std::mt19937_64& rng) {
  auto monos = monomials_of_degree(s->nvars(), degree);
  std::vector<Term> terms;
  for (int k = 0; k < 3; ++k) {
    long c = static_cast<long>(rng() % 19) - 9;
    terms.push_back(Term{monos[rng() % monos.size()], Coefficient(s->field, c)});
  }
  return Polynomial(s, std::move(terms));
}

bool ideal_subset(const std::vector<Polynomial>& gens, const std::vector<Polynomial>& target_gb) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const Polynomial& g) { return ideal_contains(target_gb, g); });
}

PrimeIdeal spot_check_prime(const SpacePtr& space, const std::vector<Polynomial>& ideal_gens,
                            const std::vector<Polynomial>& prime, const std::vector<std::vector<Polynomial>>& all,
                            std::mt19937_64& rng) {
  for (const auto& g : prime) require_homogeneous(g, "prime generator");
  std::vector<Polynomial> gb = ideal_groebner_basis(prime);
  const std::string label = "(" + join_polys(prime) + ")";
  if (!ideal_subset(ideal_gens, gb)) {
    fail(ErrorKind::hypothesis_missing, "declared prime " + label + " does not contain the ideal");
  }
  if (ideal_contains(gb, Polynomial::constant(space, 1))) {
    fail(ErrorKind::hypothesis_missing, "declared prime " + label + " is the unit ideal");
  }
  // Random products of non-members must stay outside.
  for (int k = 0; k < 40; ++k) {
    Polynomial a = reduce_polynomial(random_form(space, 1 + static_cast<int>(k % 2), rng), gb);
    Polynomial b = reduce_polynomial(random_form(space, 1 + static_cast<int>((k / 2) % 2), rng), gb);
    if (a.is_zero() || b.is_zero()) continue;
    if (ideal_contains(gb, a * b)) {
      fail(ErrorKind::hypothesis_missing, "declared prime " + label + " has zero-divisors: " + a.to_string() +
                                              " * " + b.to_string());
    }
  }
  // (P : g) = P for generators g of the other declared primes lying outside P.
  for (const auto& other : all) {
    for (const auto& g : other) {
      if (ideal_contains(gb, g)) continue;
      if (!ideal_subset(colon_ideal(prime, g), gb)) {
        fail(ErrorKind::hypothesis_missing, "declared prime " + label + " fails (P : " + g.to_string() + ") = P");
      }
    }
  }
  return PrimeIdeal{prime, "spot-checked"};
}

}  // namespace

std::string RegularSequenceCertificate::to_string() const {
  std::ostringstream os;
  os << (ok ? "ok" : "fail") << " dims";
  for (int d : dimensions) os << ' ' << d;
  if (!ok) os << " (step " << failed_step << ")";
  return os.str();
}

std::string PrimeIdeal::to_string() const {
  return "(" + join_polys(generators) + ") [" + certificate + "]";
}

bool ideal_contains(const std::vector<Polynomial>& ideal_gb, const Polynomial& p) {
  return reduce_polynomial(p, ideal_gb).is_zero();
}

std::vector<Polynomial> colon_ideal(const std::vector<Polynomial>& ideal, const Polynomial& g) {
  SpacePtr space = g.space();
  if (g.is_zero()) return {Polynomial::constant(space, 1)};
  std::vector<FreeModuleElement> cols{FreeModuleElement{{g}, {0}}};
  for (const auto& f : ideal) {
    if (!f.is_zero()) cols.push_back(FreeModuleElement{{f}, {0}});
  }
  Matrix m = Matrix::from_columns(space, {0}, cols);
  Matrix syz = syzygies(m);
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    if (!syz.at(0, j).is_zero()) out.push_back(syz.at(0, j));
  }
  return out;
}

RegularSequenceCertificate verify_regular_sequence(const Ring& r) {
  RegularSequenceCertificate cert;
  const std::size_t n = r.nvars();
  cert.dimensions.push_back(static_cast<int>(n));
  std::vector<Polynomial> prefix;
  for (std::size_t k = 0; k < r.generators().size(); ++k) {
    prefix.push_back(r.generators()[k]);
    int d = ideal_quotient_dimension(ideal_groebner_basis(prefix), n);
    cert.dimensions.push_back(d);
    if (cert.ok && d != static_cast<int>(n) - static_cast<int>(k) - 1) {
      cert.ok = false;
      cert.failed_step = static_cast<int>(k) + 1;
    }
  }
  return cert;
}

int ring_dimension(const Ring& r) { return ideal_quotient_dimension(r.ideal_gb(), r.nvars()); }

RingPtr make_ring(SpacePtr space, std::vector<Polynomial> quotient_gens,
                  std::optional<std::vector<std::vector<Polynomial>>> declared_primes, std::string name) {
  auto ring = std::make_shared<Ring>();
  ring->space_ = space;
  ring->name_ = std::move(name);
  for (const auto& f : quotient_gens) {
    if (!(*f.space() == *space)) fail(ErrorKind::incompatible_operands, "quotient generator over another ring");
    require_homogeneous(f, "quotient generator");
    if (f.is_zero()) {
      ring->warnings_.push_back("quotient generator is zero");
    } else if (f.degree() < 2) {
      ring->warnings_.push_back("quotient generator " + f.to_string() + " has degree " +
                                std::to_string(f.degree()) + " < 2");
    }
  }
  ring->gens_ = std::move(quotient_gens);
  ring->gb_ = ideal_groebner_basis(ring->gens_);
  ring->dimension_ = ring_dimension(*ring);
  ring->certificate_ = verify_regular_sequence(*ring);
  if (!ring->certificate_.ok) {
    ring->warnings_.push_back("quotient generators are not a regular sequence: " + ring->certificate_.to_string());
  }
  if (declared_primes) {
    ring->declared_primes_ = declared_primes;
    std::mt19937_64 rng(0x5eed);
    std::vector<PrimeIdeal> primes;
    for (const auto& p : *declared_primes) {
      primes.push_back(spot_check_prime(space, ring->gens_, p, *declared_primes, rng));
    }
    // Minimality: no declared prime contains another.
    for (std::size_t a = 0; a < primes.size(); ++a) {
      auto gb_a = ideal_groebner_basis(primes[a].generators);
      for (std::size_t b = 0; b < primes.size(); ++b) {
        if (a != b && ideal_subset(primes[b].generators, gb_a)) {
          fail(ErrorKind::hypothesis_missing, "declared primes are not minimal: " + primes[b].to_string() +
                                                  " is contained in " + primes[a].to_string());
        }
      }
    }
    ring->primes_ = std::move(primes);
  } else if (is_monomial_ideal(ring->gb_)) {
    ring->primes_ = monomial_minimal_primes(space, ring->gb_);
  }
  return ring;
}

RingPtr make_quotient_ring(const Field& field, const std::vector<std::string>& vars, const std::vector<int>& degrees,
                           const std::vector<std::string>& quotient_gens,
                           const std::vector<std::vector<std::string>>& declared_primes, const std::string& name) {
  if (!degrees.empty() && degrees.size() != vars.size()) {
    fail(ErrorKind::incompatible_operands, "degrees list has " + std::to_string(degrees.size()) + " entries for " +
                                               std::to_string(vars.size()) + " variables");
  }
  for (int d : degrees) {
    if (d != 1) fail(ErrorKind::graded_violation, "only the standard grading (all degrees 1) is supported");
  }
  SpacePtr space = make_space(field, vars);
  std::vector<Polynomial> gens;
  for (const auto& t : quotient_gens) gens.push_back(parse_polynomial(t, space));
  std::optional<std::vector<std::vector<Polynomial>>> primes;
  if (!declared_primes.empty()) {
    primes.emplace();
    for (const auto& p : declared_primes) {
      std::vector<Polynomial> ps;
      for (const auto& t : p) ps.push_back(parse_polynomial(t, space));
      primes->push_back(std::move(ps));
    }
  }
  return make_ring(space, std::move(gens), std::move(primes), name);
}

Polynomial Ring::parse(const std::string& text) const { return parse_polynomial(text, space_); }

Polynomial Ring::reduce(const Polynomial& p) const { return reduce_polynomial(p, gb_); }

RingPtr Ring::ambient() const { return make_ring(space_, {}, std::nullopt, name_.empty() ? "" : name_ + "_ambient"); }

RingPtr Ring::drop_generator(std::size_t k) const {
  if (k >= gens_.size()) fail(ErrorKind::incompatible_operands, "no quotient generator at index " + std::to_string(k));
  std::vector<Polynomial> rest;
  for (std::size_t j = 0; j < gens_.size(); ++j) {
    if (j != k) rest.push_back(gens_[j]);
  }
  return make_ring(space_, std::move(rest), std::nullopt, name_.empty() ? "" : name_ + "'");
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  if (!(*space_ == *o.space_) || gb_.size() != o.gb_.size()) return false;
  for (std::size_t i = 0; i < gb_.size(); ++i) {
    if (!(gb_[i] == o.gb_[i])) return false;
  }
  return true;
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << field().tag() << "[";
  for (std::size_t i = 0; i < nvars(); ++i) os << (i ? "," : "") << variables()[i];
  os << "]";
  if (!gens_.empty()) os << "/(" << join_polys(gens_) << ")";
  return os.str();
}

}  // namespace citor
