#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "citor/polynomial.hpp"

namespace citor {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// dims[k] = dim S/(f_1..f_k); ok iff each step drops the dimension by one.
struct RegularSequenceCertificate {
  bool ok = true;
  std::vector<int> dimensions;
  int failed_step = 0;  // 1-based step that failed, 0 when ok

  std::string to_string() const;
};

struct PrimeIdeal {
  std::vector<Polynomial> generators;
  // "monomial" (computed exactly) or "spot-checked" (user supplied).
  std::string certificate;

  std::string to_string() const;
};

// S = k[x1..xn] with standard grading, R = S/(f1..fc) with f homogeneous.
class Ring {
 public:
  SpacePtr space() const { return space_; }
  Field field() const { return space_->field; }
  std::size_t nvars() const { return space_->nvars(); }
  const std::vector<std::string>& variables() const { return space_->names; }
  const std::string& name() const { return name_; }

  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& ideal_gb() const { return gb_; }
  std::size_t codim() const { return gens_.size(); }
  int dimension() const { return dimension_; }
  int ambient_dimension() const { return static_cast<int>(nvars()); }
  bool is_regular() const { return gens_.empty(); }

  const RegularSequenceCertificate& regular_sequence() const { return certificate_; }
  bool certified() const { return certificate_.ok; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const std::optional<std::vector<PrimeIdeal>>& minimal_primes() const { return primes_; }

  Polynomial parse(const std::string& text) const;
  Polynomial zero() const { return Polynomial(space_); }
  Polynomial reduce(const Polynomial& p) const;

  RingPtr ambient() const;
  // S' = S/(f_j : j != k), so that this ring is S'/(f_k).
  RingPtr drop_generator(std::size_t k) const;

  bool same_as(const Ring& o) const;
  std::string describe() const;

 private:
  friend RingPtr make_quotient_ring(const Field&, const std::vector<std::string>&, const std::vector<int>&,
                                    const std::vector<std::string>&, const std::vector<std::vector<std::string>>&,
                                    const std::string&);
  friend RingPtr make_ring(SpacePtr, std::vector<Polynomial>, std::optional<std::vector<std::vector<Polynomial>>>,
                           std::string);

  SpacePtr space_;
  std::string name_;
  std::vector<Polynomial> gens_;
  std::vector<Polynomial> gb_;
  int dimension_ = 0;
  RegularSequenceCertificate certificate_;
  std::vector<std::string> warnings_;
  std::optional<std::vector<PrimeIdeal>> primes_;
  std::optional<std::vector<std::vector<Polynomial>>> declared_primes_;
};

// Validates homogeneity (graded-violation otherwise), computes the ideal's
// basis, dimension and regular-sequence certificate eagerly. Declared primes
// are spot-checked; monomial ideals get their minimal primes computed.
RingPtr make_ring(SpacePtr space, std::vector<Polynomial> quotient_gens,
                  std::optional<std::vector<std::vector<Polynomial>>> declared_primes = std::nullopt,
                  std::string name = "");

RingPtr make_quotient_ring(const Field& field, const std::vector<std::string>& vars, const std::vector<int>& degrees,
                           const std::vector<std::string>& quotient_gens,
                           const std::vector<std::vector<std::string>>& declared_primes = {},
                           const std::string& name = "");

RegularSequenceCertificate verify_regular_sequence(const Ring& r);
int ring_dimension(const Ring& r);

// Generators of (I : g) in S.
std::vector<Polynomial> colon_ideal(const std::vector<Polynomial>& ideal, const Polynomial& g);
bool ideal_contains(const std::vector<Polynomial>& ideal_gb, const Polynomial& p);

}  // namespace citor
