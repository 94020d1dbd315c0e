#include "syzcurve/poly.hpp"

#include <sstream>

#include "syzcurve/errors.hpp"

namespace syzcurve {

HomPoly::HomPoly(int degree) : degree_(degree) {
    if (degree < 0) throw RangeError("polynomial degree must be nonnegative");
}

HomPoly HomPoly::monomial(Monomial m, const Rat& coeff) {
    HomPoly p(m.degree());
    p.add_term(m, coeff);
    return p;
}

Rat HomPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void HomPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (m.degree() != degree_)
        throw RangeError("term degree does not match polynomial degree");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
    if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
        throw RangeError("cannot add polynomials of different degrees");
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
    if (degree_ != o.degree_ && !o.is_zero() && !is_zero())
        throw RangeError("cannot subtract polynomials of different degrees");
    if (is_zero()) degree_ = o.degree_;
    for (const auto& [m, c] : o.terms_) add_term(m, Rat(-c));
    return *this;
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r(a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

HomPoly HomPoly::scaled(const Rat& c) const {
    HomPoly r(degree_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

HomPoly partial(const HomPoly& p, Var v) {
    HomPoly r(p.degree() > 0 ? p.degree() - 1 : 0);
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m.times_power(v, -1), c * e);
    }
    return r;
}

static void render_monomial(std::ostringstream& out, const Monomial& m, const Rat& abs_coeff) {
    bool need_star = false;
    if (abs_coeff != 1 || m.degree() == 0) {
        out << abs_coeff;
        need_star = true;
    }
    for (Var v : {Var::x, Var::y, Var::z}) {
        int e = m.exponent(v);
        if (e == 0) continue;
        if (need_star) out << "*";
        out << var_name(v);
        if (e > 1) out << "^" << e;
        need_star = true;
    }
}

std::string render(const HomPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        render_monomial(out, m, Rat(abs(c)));
        first = false;
    }
    return out.str();
}

HomPoly apply_linear(const HomPoly& p, const std::array<std::array<long, 3>, 3>& a) {
    std::array<HomPoly, 3> image;
    for (int i = 0; i < 3; ++i) {
        HomPoly form(1);
        form.add_term(Monomial{1, 0, 0}, Rat(a[i][0]));
        form.add_term(Monomial{0, 1, 0}, Rat(a[i][1]));
        form.add_term(Monomial{0, 0, 1}, Rat(a[i][2]));
        image[i] = form;
    }
    HomPoly r(p.degree());
    for (const auto& [m, c] : p.terms()) {
        HomPoly term(0);
        term.add_term(Monomial{0, 0, 0}, c);
        const int exps[3] = {m.ex, m.ey, m.ez};
        for (int i = 0; i < 3; ++i)
            for (int e = 0; e < exps[i]; ++e) term = term * image[i];
        r += term;
    }
    return r;
}

CurveContext make_context(const HomPoly& f, bool assume_rational_cuspidal) {
    if (f.is_zero()) throw ZeroPolynomial("curve equation is the zero polynomial");
    if (f.degree() < 2)
        throw DegreeTooSmall("curve degree must be at least 2, got " + std::to_string(f.degree()));
    CurveContext ctx;
    ctx.f = f;
    ctx.d = f.degree();
    ctx.T = 3 * ctx.d - 6;
    ctx.assume_rational_cuspidal = assume_rational_cuspidal;
    ctx.fx = partial(f, Var::x);
    ctx.fy = partial(f, Var::y);
    ctx.fz = partial(f, Var::z);

    HomPoly euler = HomPoly::monomial(Monomial{1, 0, 0}, 1) * ctx.fx;
    euler += HomPoly::monomial(Monomial{0, 1, 0}, 1) * ctx.fy;
    euler += HomPoly::monomial(Monomial{0, 0, 1}, 1) * ctx.fz;
    if (euler != f.scaled(ctx.d))
        throw EulerCheckFailed("Euler relation failed; arithmetic is broken");
    return ctx;
}

}  // namespace syzcurve
