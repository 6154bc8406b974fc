#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <latcvx/latcvx.hpp>

namespace latcvx {

inline void PrintTo(const RatVector& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const Rational& r, std::ostream* os) { *os << r.str(); }

namespace testing {

inline Rational q(const char* s) { return Rational::parse(s); }

inline std::vector<RatVector> sorted(std::vector<RatVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<RatVector> sorted_desc(std::vector<RatVector> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace testing
}  // namespace latcvx
