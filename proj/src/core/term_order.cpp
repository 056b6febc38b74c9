#include "citor/term_order.hpp"

namespace citor {

TermOrder& TermOrder::set_shifts(std::vector<int> shifts) {
  shifts_ = std::move(shifts);
  return *this;
}

TermOrder& TermOrder::set_blocks(std::vector<int> blocks) {
  blocks_ = std::move(blocks);
  return *this;
}

TermOrder& TermOrder::set_schreyer(std::uint32_t first_component, std::vector<SchreyerLead> leads) {
  schreyer_first_ = first_component;
  schreyer_ = std::move(leads);
  return *this;
}

const SchreyerLead* TermOrder::schreyer_lead(std::uint32_t c) const {
  if (extension_ != ModuleExtension::schreyer) return nullptr;
  if (c < schreyer_first_ || c - schreyer_first_ >= schreyer_.size()) return nullptr;
  return &schreyer_[c - schreyer_first_];
}

std::strong_ordering TermOrder::compare_plain(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                              std::uint32_t cb) const {
  if (extension_ == ModuleExtension::position_over_term) {
    if (ca != cb) return cb <=> ca;
    return compare_unchecked(a, b, kind_);
  }
  const int da = a.degree() + shift(ca);
  const int db = b.degree() + shift(cb);
  if (da != db) return da <=> db;
  auto r = compare_unchecked(a, b, kind_);
  if (r != 0) return r;
  return cb <=> ca;
}

std::strong_ordering TermOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                        std::uint32_t cb) const {
  const int ba = block(ca);
  const int bb = block(cb);
  if (ba != bb) return bb <=> ba;
  const SchreyerLead* la = schreyer_lead(ca);
  const SchreyerLead* lb = schreyer_lead(cb);
  if (la && lb) {
    auto r = compare_plain(a * la->monomial, la->component, b * lb->monomial, lb->component);
    if (r != 0) return r;
    return cb <=> ca;
  }
  return compare_plain(a, ca, b, cb);
}

}  // namespace citor
