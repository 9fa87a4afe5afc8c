#ifndef GFW_PHASE_HPP
#define GFW_PHASE_HPP

#include <cmath>
#include <complex>

#include "gfw/error.hpp"

namespace gfw {

// An exact root of unity exp(2*pi*i*num/den) with den = 4p for a field of
// characteristic p. This group contains every phase the construction needs:
// the additive characters (p-th roots, exponent multiples of 4), +/-1 and
// +/-i (exponent multiples of p), and their products. Arithmetic is integer
// arithmetic on exponents, so phase identities can be checked bit-exactly;
// conversion to complex happens at the last moment.
struct UnitPhase {
    int num = 0;
    int den = 4;

    static UnitPhase one(int den) { return UnitPhase{0, den}; }

    static UnitPhase make(int num, int den) {
        num %= den;
        if (num < 0) num += den;
        return UnitPhase{num, den};
    }

    UnitPhase operator*(UnitPhase o) const {
        if (den != o.den) fail(Errc::MixedFields, "unit phases from different fields");
        return make(num + o.num, den);
    }

    UnitPhase conj() const { return make(-num, den); }

    UnitPhase pow(long long k) const {
        long long e = (static_cast<long long>(num) * k) % den;
        return make(static_cast<int>(e), den);
    }

    // Principal branch: the square root with argument in (-pi/2, pi/2].
    // Only even exponents occur (character values have exponent 4*tr).
    UnitPhase principal_sqrt() const {
        if (num % 2 != 0) fail(Errc::NoSolution, "principal_sqrt of odd exponent");
        int half = num / 2;
        if (num > den / 2) half += den / 2;
        return make(half, den);
    }

    bool operator==(const UnitPhase& o) const { return num == o.num && den == o.den; }
    bool operator!=(const UnitPhase& o) const { return !(*this == o); }

    std::complex<double> value() const {
        // Quarter-turn multiples convert exactly.
        if (den % 4 == 0 && num % (den / 4) == 0) {
            switch ((num / (den / 4)) % 4) {
                case 0: return {1.0, 0.0};
                case 1: return {0.0, 1.0};
                case 2: return {-1.0, 0.0};
                default: return {0.0, -1.0};
            }
        }
        double arg = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
        return {std::cos(arg), std::sin(arg)};
    }
};

}  // namespace gfw

#endif
