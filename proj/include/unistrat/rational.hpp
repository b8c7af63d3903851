#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace unistrat {

using Rational = boost::rational<std::int64_t>;

// "3", "-1", "3/2" -> exact rational.  Throws InputError on junk.
Rational parse_rational(const std::string& text);

// Canonical form: denominator omitted when 1, e.g. "-1", "3/2".
std::string format_rational(const Rational& r);

}  // namespace unistrat
