#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace rainbow {

/// Exact rational used for every degree average and bound.
using Rational = boost::rational<std::int64_t>;

/// "5", "9/2", "-3/4".
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with decimal integers; throws PreconditionError.
Rational parse_rational(std::string_view text);

}  // namespace rainbow
