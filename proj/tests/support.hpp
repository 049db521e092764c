#pragma once

#include <string>

#include "ecval/verify.hpp"

namespace ecval::testing {

inline WeierstrassModel model(const std::string& a) { return WeierstrassModel::parse(a); }
inline CurvePoint point(const std::string& xy) { return CurvePoint::parse(xy); }
inline Rational q(const std::string& s) { return Rational::parse(s); }

inline ReductionProfile profile_of(const std::string& a, const std::string& xy, long p) {
  return profile_from_input(model(a), point(xy), Prime(p));
}

}  // namespace ecval::testing
