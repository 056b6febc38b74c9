#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "citor/monomial.hpp"

namespace citor {

enum class ModuleExtension : std::uint8_t { term_over_position, position_over_term, schreyer };

// Lead term m*e_c of a lower-level vector, used to induce a Schreyer order.
struct SchreyerLead {
  Monomial monomial;
  std::uint32_t component = 0;
};

// Order on terms m*e_i of a graded free module. Components carry a degree
// shift (the degree of e_i) and a block id; a term in a lower block is always
// greater than one in a higher block, which gives elimination orders.
// Within a block, term-over-position compares shifted degree, then the
// monomial, then position (lower index greater). Components with a Schreyer
// lead compare m*lead in the order of the lead components instead.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(MonomialOrder kind, ModuleExtension ext = ModuleExtension::term_over_position)
      : kind_(kind), extension_(ext) {}

  MonomialOrder kind() const { return kind_; }
  ModuleExtension extension() const { return extension_; }

  TermOrder& set_shifts(std::vector<int> shifts);
  TermOrder& set_blocks(std::vector<int> blocks);
  // One entry per component; components without a Schreyer lead must not
  // appear in the vector (use a shorter vector or a separate block).
  TermOrder& set_schreyer(std::uint32_t first_component, std::vector<SchreyerLead> leads);

  int shift(std::uint32_t c) const { return c < shifts_.size() ? shifts_[c] : 0; }
  int block(std::uint32_t c) const { return c < blocks_.size() ? blocks_[c] : 0; }
  const std::vector<int>& shifts() const { return shifts_; }

  std::strong_ordering compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) const {
    return compare_unchecked(a, b, kind_);
  }

 private:
  std::strong_ordering compare_plain(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  const SchreyerLead* schreyer_lead(std::uint32_t c) const;

  MonomialOrder kind_ = MonomialOrder::grevlex;
  ModuleExtension extension_ = ModuleExtension::term_over_position;
  std::vector<int> shifts_;
  std::vector<int> blocks_;
  std::uint32_t schreyer_first_ = 0;
  std::vector<SchreyerLead> schreyer_;
};

}  // namespace citor
