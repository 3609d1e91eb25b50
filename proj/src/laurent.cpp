#include "lgtoric/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lgtoric {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("exponent overflow");
    return r;
}

} // namespace

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
    if (a.dim != b.dim) throw DimensionMismatch("exponent dimensions differ");
    ExpVec r(a.dim);
    for (int i = 0; i < a.dim; ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

ExpVec ExpVec::operator-() const {
    ExpVec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (e[static_cast<size_t>(i)] == INT32_MIN) throw Error("exponent overflow");
        r[i] = -e[static_cast<size_t>(i)];
    }
    return r;
}

Vec ExpVec::to_vec() const {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = static_cast<long>(e[static_cast<size_t>(i)]);
    return v;
}

ExpVec ExpVec::from_vec(const Vec& v) {
    ExpVec r(v.dim);
    for (int i = 0; i < v.dim; ++i) {
        if (!v[i].fits_sint_p()) throw Error("exponent out of range");
        long x = v[i].get_si();
        if (x < INT32_MIN || x > INT32_MAX) throw Error("exponent out of range");
        r[i] = static_cast<std::int32_t>(x);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::constant(int dim, Int c) {
    LaurentPolynomial f(dim);
    f.set(ExpVec(dim), std::move(c));
    return f;
}

LaurentPolynomial LaurentPolynomial::monomial(Int c, const ExpVec& e) {
    LaurentPolynomial f(e.dim);
    f.set(e, std::move(c));
    return f;
}

Int LaurentPolynomial::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::set(const ExpVec& e, Int c) {
    if (e.dim != dim_) throw DimensionMismatch("term dimension differs from polynomial");
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.dim_ != g.dim_) throw DimensionMismatch("polynomial dimensions differ");
    LaurentPolynomial r = f;
    for (const auto& [e, c] : g.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) {
            r.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

LaurentPolynomial sub(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    return add(f, g.scalar_mul(Int(-1)));
}

LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.dim_ != g.dim_) throw DimensionMismatch("polynomial dimensions differ");
    LaurentPolynomial r(f.dim_);
    for (const auto& [ea, ca] : f.terms_)
        for (const auto& [eb, cb] : g.terms_) {
            ExpVec e = ea + eb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Int prod = ca * cb;
                if (prod != 0) r.terms_.emplace(e, std::move(prod));
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPolynomial LaurentPolynomial::scalar_mul(const Int& k) const {
    LaurentPolynomial r(dim_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

LaurentPolynomial LaurentPolynomial::mul_monomial(const Int& c, const ExpVec& e) const {
    LaurentPolynomial r(dim_);
    if (c == 0) return r;
    for (const auto& [te, tc] : terms_) r.terms_.emplace(te + e, tc * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::pow_bounded(long i, const std::function<bool(const ExpVec&)>& keep) const {
    if (i < 0) throw Error("negative power");
    LaurentPolynomial acc = constant(dim_, 1);
    for (long k = 0; k < i; ++k) {
        acc = mul(acc, *this);
        if (keep) {
            LaurentPolynomial pruned(dim_);
            for (const auto& [e, c] : acc.terms_)
                if (keep(e)) pruned.terms_.emplace(e, c);
            acc = std::move(pruned);
        }
    }
    return acc;
}

LatticePolytope LaurentPolynomial::newton_polytope() const {
    std::vector<Vec> pts;
    for (const auto& [e, c] : terms_) pts.push_back(e.to_vec());
    if (pts.empty()) throw DegenerateInput("zero polynomial has no Newton polytope");
    return LatticePolytope::hull(pts);
}

LaurentPolynomial LaurentPolynomial::substitute_monomial(const UnimodularMap& u) const {
    if (!u.is_unimodular()) throw NotUnimodular("determinant is not +-1");
    if (u.dim != dim_) throw DimensionMismatch("map/polynomial dimensions differ");
    if (u.translation) throw NotUnimodular("translation part not allowed in a monomial substitution");
    LaurentPolynomial r(dim_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(ExpVec::from_vec(u.apply_linear(e.to_vec())), c);
    return r;
}

std::vector<Int> LaurentPolynomial::coefficient_multiset() const {
    std::vector<Int> out;
    for (const auto& [e, c] : terms_) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::string LaurentPolynomial::canonical_string() const {
    std::ostringstream os;
    os << dim_;
    for (const auto& [e, c] : terms_) {
        os << ";" << c;
        for (int i = 0; i < dim_; ++i) os << " " << e[i];
    }
    return os.str();
}

std::string LaurentPolynomial::content_hash() const {
    std::string s = canonical_string();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* hexd = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<size_t>(i)] = hexd[h & 15];
        h >>= 4;
    }
    return hex;
}

std::string LaurentPolynomial::to_expression() const {
    if (terms_.empty()) return "0";
    static const char* names = "xyz";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < dim_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty())
            os << a;
        else if (a == 1)
            os << vars;
        else
            os << a << "*" << vars;
    }
    return os.str();
}

// ---------------- expression parser ----------------

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int dim;

    Parser(const std::string& text, int d) : s(text), dim(d) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos));
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    LaurentPolynomial expr() {
        LaurentPolynomial r = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                r = add(r, term());
            } else if (c == '-') {
                ++pos;
                r = sub(r, term());
            } else {
                return r;
            }
        }
    }

    LaurentPolynomial term() {
        LaurentPolynomial r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = mul(r, factor());
            } else if (c == '/') {
                ++pos;
                r = divide(r, factor());
            } else {
                return r;
            }
        }
    }

    LaurentPolynomial divide(const LaurentPolynomial& num, const LaurentPolynomial& den) {
        if (den.support_size() != 1)
            fail("division is only supported by a single-term value");
        const auto& [de, dc] = *den.terms().begin();
        LaurentPolynomial r(dim);
        for (const auto& [e, c] : num.terms()) {
            if (c % dc != 0) fail("coefficient division is not exact");
            r.set(e + (-de), c / dc);
        }
        return r;
    }

    LaurentPolynomial factor() {
        LaurentPolynomial b = base();
        if (peek() == '^') {
            ++pos;
            Int k = integer();
            if (k >= 0) {
                if (k > 64) fail("exponent too large");
                LaurentPolynomial r = LaurentPolynomial::constant(dim, 1);
                for (long i = 0; i < k.get_si(); ++i) r = mul(r, b);
                return r;
            }
            if (b.support_size() != 1) fail("negative power of a non-monomial");
            LaurentPolynomial r = LaurentPolynomial::constant(dim, 1);
            for (Int i = 0; i < -k; ++i) r = divide(r, b);
            return r;
        }
        return b;
    }

    LaurentPolynomial base() {
        char c = peek();
        if (c == '(') {
            ++pos;
            LaurentPolynomial r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos;
            return base().scalar_mul(Int(-1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPolynomial::constant(dim, integer());
        int vi = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
        if (vi < 0 || vi >= dim) fail("expected a variable or number");
        ++pos;
        ExpVec e(dim);
        e[vi] = 1;
        return LaurentPolynomial::monomial(Int(1), e);
    }
};

} // namespace

LaurentPolynomial parse_laurent(const std::string& text, int dim) {
    Parser p(text, dim);
    LaurentPolynomial r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace lgtoric
