#include "citor/catalog.hpp"

#include "citor/parse.hpp"

namespace citor::catalog {

namespace {

RingPtr standard(const Field& f, std::vector<std::string> vars, std::vector<std::string> ideal, std::string name) {
  return make_quotient_ring(f, vars, std::vector<int>(vars.size(), 1), ideal, {}, name);
}

}  // namespace

RingPtr ring_xy_zu(const Field& f) { return standard(f, {"x", "y", "z", "u"}, {"x*y", "z*u"}, "R"); }

RingPtr ring_xw_yz(const Field& f) {
  // Not a monomial ideal: the single minimal prime is the ideal itself.
  SpacePtr s = make_space(f, {"x", "y", "w", "z"});
  std::vector<Polynomial> gens{parse_polynomial("x*w - y*z", s)};
  return make_ring(s, gens, std::vector<std::vector<Polynomial>>{gens}, "R");
}

RingPtr ring_xy(const Field& f) { return standard(f, {"x", "y"}, {"x*y"}, "R"); }

RingPtr ring_xyz_xy(const Field& f) { return standard(f, {"x", "y", "z"}, {"x*y"}, "R"); }

Module cyclic(const RingPtr& r, const std::vector<std::string>& ideal, const std::string& name) {
  std::vector<Polynomial> gens;
  for (const auto& t : ideal) gens.push_back(r->parse(t));
  return Module::cyclic(r, gens, 0, name);
}

Module coker(const RingPtr& r, const std::vector<int>& shifts, const std::vector<std::vector<std::string>>& rows,
             const std::string& name) {
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& row : rows) {
    std::vector<Polynomial> ps;
    for (const auto& t : row) ps.push_back(r->parse(t));
    entries.push_back(std::move(ps));
  }
  return Module(r, Matrix::from_rows(r->space(), shifts, entries), name);
}

Module m_3_11(const RingPtr& r) { return cyclic(r, {"y", "u"}, "M"); }

Module n_3_11(const RingPtr& r) { return coker(r, {0, 0, 0}, {{"0", "u"}, {"-z", "x"}, {"y", "0"}}, "N"); }

Module m_3_14(const RingPtr& r) { return cyclic(r, {"x"}, "M"); }

Module n_3_14(const RingPtr& r) { return cyclic(r, {"x*z"}, "N"); }

Module m_4_4(const RingPtr& r) { return cyclic(r, {"z"}, "M"); }

Module m_4_5(const RingPtr& r) { return coker(r, {0, 0, 0, 0}, {{"w"}, {"y"}, {"x"}, {"z"}}, "M"); }

Module m_xy_x(const RingPtr& r) { return cyclic(r, {"x"}, "M"); }

Module m_xy_y(const RingPtr& r) { return cyclic(r, {"y"}, "N"); }

}  // namespace citor::catalog
