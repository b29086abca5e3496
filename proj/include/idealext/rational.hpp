#ifndef IDEALEXT_RATIONAL_HPP
#define IDEALEXT_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace idealext {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace idealext

#endif  // IDEALEXT_RATIONAL_HPP
