#pragma once

#include <string>
#include <vector>

#include "citor/groebner.hpp"
#include "citor/parse.hpp"

namespace testing_support {

inline citor::SpacePtr space(std::vector<std::string> names, citor::Field f = citor::Field::default_field()) {
  return citor::make_space(f, std::move(names));
}

inline citor::Polynomial poly(const citor::SpacePtr& s, const std::string& text) {
  return citor::parse_polynomial(text, s);
}

inline std::vector<citor::Polynomial> polys(const citor::SpacePtr& s, const std::vector<std::string>& texts) {
  std::vector<citor::Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(s, t));
  return out;
}

// Rows given as strings, target degrees as listed.
inline citor::Matrix matrix(const citor::SpacePtr& s, std::vector<int> row_degrees,
                            const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<citor::Polynomial>> entries;
  for (const auto& r : rows) entries.push_back(polys(s, r));
  return citor::Matrix::from_rows(s, std::move(row_degrees), entries);
}

}  // namespace testing_support
