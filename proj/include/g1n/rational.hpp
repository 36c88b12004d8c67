#pragma once

#include <gmpxx.h>

#include <string>

namespace g1n {

// Exact rational scalar used everywhere in the engine. No floating point
// enters any computation; doubles appear only in timing fields of reports.
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// Renders "p/q" with the denominator always written out, "18/1" included.
// The sign sits on the numerator.
std::string rat_to_string(const Rat& r);

// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument on
// anything else (including q == 0).
Rat rat_from_string(const std::string& s);

// Exact n! (n >= 0).
Rat factorial(int n);

}  // namespace g1n
