#pragma once

#include <string>

#include "citor/constructions.hpp"
#include "citor/harness.hpp"
#include "citor/homology.hpp"
#include "citor/report.hpp"
#include "citor/resolution.hpp"

namespace citor::detail {

Json ext_json(const ExtInt& v);
std::string join(const std::vector<long>& v, const char* sep = ",");

Section ring_section(const std::string& name, const RingPtr& r);
Section module_section(const std::string& name, const std::string& ring, const Module& m);
Section betti_section(const std::string& name, const FreeResolution& res);
Section resolution_section(const std::string& name, const FreeResolution& res);
Section profile_section(const std::string& name, const Module& m);
// key is "tor_profile" or "ext_profile".
Section homology_section(const std::string& left, const std::string& right, const HomologyProfile& p,
                         std::size_t codim);
Section theorem_section(const TheoremReport& r, bool timings);
Section pushforward_section(const std::string& name, const PushforwardResult& r);
Section quasilift_section(const std::string& name, const QuasiLiftingResult& q);
Section search_section(const SearchLog& log);
Section example_section(const ExampleReport& r, bool timings);

}  // namespace citor::detail
