#include "syzcurve/parse.hpp"

#include <cctype>
#include <map>
#include <set>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

// Mixed-degree polynomial used only while parsing; homogeneity is checked
// once the whole expression is expanded.
using TermMap = std::map<Monomial, Rat>;

void add_into(TermMap& dst, const Monomial& m, const Rat& c) {
    auto [it, inserted] = dst.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) dst.erase(it);
    }
}

TermMap mul(const TermMap& a, const TermMap& b) {
    TermMap r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) add_into(r, ma.times(mb), ca * cb);
    return r;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    TermMap run() {
        TermMap r = expression();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TermMap expression() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        TermMap acc = term();
        if (negate)
            for (auto& [m, c] : acc) c = -c;
        for (;;) {
            if (accept('+')) {
                for (const auto& [m, c] : term()) add_into(acc, m, c);
            } else if (accept('-')) {
                for (const auto& [m, c] : term()) add_into(acc, m, Rat(-c));
            } else {
                return acc;
            }
        }
    }

    TermMap term() {
        TermMap acc = factor();
        while (accept('*')) acc = mul(acc, factor());
        return acc;
    }

    TermMap factor() {
        TermMap base = primary();
        if (accept('^')) {
            long e = uinteger("exponent");
            if (e > 1000) fail("exponent too large");
            TermMap r;
            add_into(r, Monomial{0, 0, 0}, Rat(1));
            for (long i = 0; i < e; ++i) r = mul(r, base);
            return r;
        }
        return base;
    }

    TermMap primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            TermMap inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            TermMap r;
            Monomial m;
            if (c == 'x') m.ex = 1;
            if (c == 'y') m.ey = 1;
            if (c == 'z') m.ez = 1;
            add_into(r, m, Rat(1));
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat q(natural("number"));
            if (accept('/')) {
                Int den = natural("denominator");
                if (den == 0) fail("division by zero");
                q /= Rat(den);
            }
            TermMap r;
            add_into(r, Monomial{0, 0, 0}, q);
            return r;
        }
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    long uinteger(const std::string& what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected " + what);
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000L) fail(what + " too large");
            ++pos_;
        }
        return v;
    }

    // Arbitrary-precision digit string; coefficients are never truncated.
    Int natural(const std::string& what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected " + what);
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return Int(digits);
    }
};

}  // namespace

HomPoly parse_poly(const std::string& text) {
    Parser parser(text);
    TermMap terms = parser.run();
    if (terms.empty()) throw ZeroPolynomial("expression expands to the zero polynomial");
    std::set<int> degrees;
    for (const auto& [m, c] : terms) degrees.insert(m.degree());
    if (degrees.size() > 1) {
        std::string list;
        for (int d : degrees) list += (list.empty() ? "" : ", ") + std::to_string(d);
        throw NotHomogeneous("mixed term degrees {" + list + "}");
    }
    HomPoly p(*degrees.begin());
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

}  // namespace syzcurve
