#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>

#include "syzcurve/monomial.hpp"

namespace syzcurve {

using Rat = mpq_class;
using Int = mpz_class;

// Homogeneous polynomial in x, y, z with exact rational coefficients.
// Every stored monomial has the declared degree and no zero coefficient is
// kept. The zero polynomial still carries a nominal degree so that graded
// arithmetic stays well-typed.
class HomPoly {
public:
    HomPoly() = default;
    explicit HomPoly(int degree);

    static HomPoly monomial(Monomial m, const Rat& coeff);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    HomPoly& operator+=(const HomPoly& o);
    HomPoly& operator-=(const HomPoly& o);
    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    HomPoly scaled(const Rat& c) const;

    friend bool operator==(const HomPoly&, const HomPoly&) = default;

private:
    int degree_ = 0;
    std::map<Monomial, Rat> terms_;
};

HomPoly partial(const HomPoly& p, Var v);

// Canonical text form; parse_poly(render(p)) == p.
std::string render(const HomPoly& p);

// Substitute each variable by the integer linear form given by the matrix
// row: x -> a00 x + a01 y + a02 z, etc. Used for coordinate changes.
HomPoly apply_linear(const HomPoly& p, const std::array<std::array<long, 3>, 3>& a);

struct CurveContext {
    HomPoly f;
    HomPoly fx, fy, fz;
    int d = 0;
    int T = 0;  // 3d - 6
    bool assume_rational_cuspidal = false;

    const HomPoly& partial_of(Var v) const {
        switch (v) {
            case Var::x: return fx;
            case Var::y: return fy;
            default: return fz;
        }
    }
};

// Builds the curve context: partials, T = 3d - 6, and an exact check of the
// Euler relation x f_x + y f_y + z f_z = d f. Reducedness is not verified
// here; the Hilbert stabilization guard reports suspected non-reduced input.
CurveContext make_context(const HomPoly& f, bool assume_rational_cuspidal = false);

}  // namespace syzcurve
