#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rrpart {

// Exact partition counts. Counts grow super-polynomially, so no fixed width.
using Count = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Count& c) { return c.str(); }

}  // namespace rrpart
