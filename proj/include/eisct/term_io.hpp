#pragma once

#include <string>

#include "eisct/cterm.hpp"

namespace eisct {

// JSON term table. Exact fields render as strings ("p/q" for rationals,
// polynomial strings for numerator/denominator); numeric columns are doubles.
std::string term_table_json(const CTermTable& table, const ThetaConstants* theta = nullptr);

// CSV of (L, partial_sum, tail_bound); tail column empty without constants.
std::string term_table_csv(const CTermTable& table, const ThetaConstants* theta = nullptr);

}  // namespace eisct
