#pragma once

#include <compare>
#include <cstdint>

#include "syzcurve/errors.hpp"

namespace syzcurve {

enum class Var : int { x = 0, y = 1, z = 2 };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        default: return "z";
    }
}

// dim S_k = C(k+2, 2) for k >= 0, and 0 for the empty graded pieces.
inline long dim_S(long k) { return k < 0 ? 0 : (k + 2) * (k + 1) / 2; }

// A power product x^ex * y^ey * z^ez. Within one degree, monomials are
// ordered by decreasing ex, then decreasing ey; dense indices follow that
// order, so matrix layouts and rendered output are deterministic.
struct Monomial {
    int ex = 0, ey = 0, ez = 0;

    int degree() const { return ex + ey + ez; }

    int exponent(Var v) const {
        switch (v) {
            case Var::x: return ex;
            case Var::y: return ey;
            default: return ez;
        }
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        if (a.ex != b.ex) return b.ex <=> a.ex;
        return b.ey <=> a.ey;
    }

    Monomial times(const Monomial& o) const { return {ex + o.ex, ey + o.ey, ez + o.ez}; }

    Monomial times_power(Var v, int n) const {
        Monomial m = *this;
        switch (v) {
            case Var::x: m.ex += n; break;
            case Var::y: m.ey += n; break;
            default: m.ez += n; break;
        }
        return m;
    }

    // Position of this monomial in the dense basis of its graded piece,
    // a bijection onto {0, ..., dim S_k - 1}.
    long index() const {
        long t = long(ey) + ez;
        return t * (t + 1) / 2 + ez;
    }

    static Monomial at(int degree, long index) {
        if (degree < 0 || index < 0 || index >= dim_S(degree))
            throw RangeError("monomial index out of range");
        long t = 0;
        while ((t + 1) * (t + 2) / 2 <= index) ++t;
        long ez = index - t * (t + 1) / 2;
        long ey = t - ez;
        return Monomial{int(degree - t), int(ey), int(ez)};
    }
};

}  // namespace syzcurve
