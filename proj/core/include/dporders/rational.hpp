#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "dporders/errors.hpp"

namespace dporders {

/// Exact rational scalar. All lattice arithmetic is exact; there is no
/// floating point anywhere in the engine and no tolerance in any comparison.
using Rat = boost::rational<std::int64_t>;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

/// Canonical textual form "p/q", lowest terms, q > 0. Integers render as
/// "p/1" so the form round-trips without a special case.
std::string rat_to_string(const Rat& r);

/// Accepts "p/q" or a bare integer "p". Throws ParseError otherwise.
Rat rat_from_string(const std::string& text);

} // namespace dporders
