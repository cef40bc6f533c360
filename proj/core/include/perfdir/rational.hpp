#pragma once

#include <gmpxx.h>

#include <string>

namespace perfdir {

// Exact rational scalar. All weight values, line sums and report figures
// are carried as Rat; nothing in the library rounds.
using Rat = mpq_class;

// Builds a canonical rational from decimal integer strings. The denominator
// must be positive. Throws std::invalid_argument on malformed digits or
// den <= 0.
Rat rat_from_strings(const std::string& num, const std::string& den);

// "num/den" in lowest terms, denominator always spelled out ("5/1", "-2/3").
std::string fraction_string(const Rat& value);

std::string numerator_string(const Rat& value);
std::string denominator_string(const Rat& value);

// Exact value of a decimal literal such as "-0.125", "3", "2.5e-3".
// Throws std::invalid_argument on anything else.
Rat decimal_to_rational(const std::string& text);

// Parses "num/den" or a bare integer string.
Rat rat_from_fraction_string(const std::string& text);

}  // namespace perfdir
