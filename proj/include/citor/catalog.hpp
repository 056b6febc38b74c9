#pragma once

#include <string>
#include <vector>

#include "citor/module.hpp"

// Rings and modules of the worked examples.
namespace citor::catalog {

// k[x,y,z,u]/(xy, zu)
RingPtr ring_xy_zu(const Field& f = Field::default_field());
// k[x,y,w,z]/(xw - yz)
RingPtr ring_xw_yz(const Field& f = Field::default_field());
// k[x,y]/(xy)
RingPtr ring_xy(const Field& f = Field::default_field());
// k[x,y,z]/(xy)
RingPtr ring_xyz_xy(const Field& f = Field::default_field());

// R/(y,u) over k[x,y,z,u]/(xy,zu).
Module m_3_11(const RingPtr& r);
// coker of the 3x2 matrix with rows (0,u), (-z,x), (y,0).
Module n_3_11(const RingPtr& r);
// R/(x) and R/(xz) over k[x,y,z,u]/(xy,zu).
Module m_3_14(const RingPtr& r);
Module n_3_14(const RingPtr& r);
// R/(z) over k[x,y,z]/(xy).
Module m_4_4(const RingPtr& r);
// coker of the column (w,y,x,z) over k[x,y,w,z]/(xw-yz).
Module m_4_5(const RingPtr& r);
// R/(x) and R/(y) over k[x,y]/(xy).
Module m_xy_x(const RingPtr& r);
Module m_xy_y(const RingPtr& r);

Module cyclic(const RingPtr& r, const std::vector<std::string>& ideal, const std::string& name = "");
Module coker(const RingPtr& r, const std::vector<int>& shifts, const std::vector<std::vector<std::string>>& rows,
             const std::string& name = "");

}  // namespace citor::catalog
