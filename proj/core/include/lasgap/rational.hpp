#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace lasgap {

// Exact rational scalar. Every certification decision is made in this type;
// doubles appear only in the dense eigensolver, the secular solver and the
// benchmarks.
using Rat = mpq_class;

// Accepts "p", "-p" or "p/q" built from decimal digits. Returns nullopt on
// anything else (floats, whitespace, empty strings, zero denominators).
// The result is canonical: lowest terms, positive denominator.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical textual form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rat& value);

inline double to_double(const Rat& value) { return value.get_d(); }

inline int sign_of(const Rat& value) { return sgn(value); }

// 2^e as an exact rational (e may be negative).
Rat pow2_rat(int e);

}  // namespace lasgap
