#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wigner {

// Exact rational arithmetic for the combinatorial engine and moment oracles.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_pow(const Rat& base, int k) {
    if (k < 0) throw std::invalid_argument("rat_pow: negative exponent");
    Rat acc = 1;
    for (int i = 0; i < k; ++i) acc *= base;
    return acc;
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

// floor(n * s) computed exactly for rational s.
inline long rat_floor_scaled(long n, const Rat& s) {
    BigInt num = numerator(s) * n;
    BigInt den = denominator(s);
    BigInt q = num / den;             // cpp_int division truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q.convert_to<long>();
}

// "3/4" -> 3/4, "0.25" -> 1/4, "2" -> 2.  Decimal strings convert exactly.
Rat parse_rat(const std::string& text);

// "9/50" or "3" when the denominator is one.
std::string rat_string(const Rat& r);

// A moment value that may be divergent (heavy-tailed atom laws).
struct MomentValue {
    bool finite = true;
    Rat value = 0;

    MomentValue() = default;
    MomentValue(Rat v) : finite(true), value(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    static MomentValue infinite() { return MomentValue(false); }

    MomentValue& operator*=(const MomentValue& o) {
        finite = finite && o.finite;
        if (finite) value *= o.value; else value = 0;
        return *this;
    }
    MomentValue& operator+=(const MomentValue& o) {
        finite = finite && o.finite;
        if (finite) value += o.value; else value = 0;
        return *this;
    }
    MomentValue& operator-=(const MomentValue& o) {
        finite = finite && o.finite;
        if (finite) value -= o.value; else value = 0;
        return *this;
    }

private:
    explicit MomentValue(bool f) : finite(f) {}
};

inline MomentValue operator*(MomentValue a, const MomentValue& b) { return a *= b; }
inline MomentValue operator+(MomentValue a, const MomentValue& b) { return a += b; }
inline MomentValue operator-(MomentValue a, const MomentValue& b) { return a -= b; }

}  // namespace wigner
