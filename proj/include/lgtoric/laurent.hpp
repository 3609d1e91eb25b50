#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lgtoric/polytope.hpp"
#include "lgtoric/vec.hpp"

namespace lgtoric {

/// Exponent vector. Exponents stay tiny, so fixed-width storage with checked
/// addition; coefficients are arbitrary precision.
struct ExpVec {
    int dim = 3;
    std::array<std::int32_t, 3> e{};

    ExpVec() = default;
    ExpVec(int d) : dim(d) {}
    ExpVec(std::int32_t a, std::int32_t b) : dim(2), e{a, b, 0} {}
    ExpVec(std::int32_t a, std::int32_t b, std::int32_t c) : dim(3), e{a, b, c} {}

    std::int32_t& operator[](int i) { return e[static_cast<size_t>(i)]; }
    std::int32_t operator[](int i) const { return e[static_cast<size_t>(i)]; }

    friend ExpVec operator+(const ExpVec& a, const ExpVec& b); // overflow-checked
    ExpVec operator-() const;
    bool is_zero() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    bool operator==(const ExpVec& o) const { return dim == o.dim && e == o.e; }
    bool operator<(const ExpVec& o) const {
        if (dim != o.dim) return dim < o.dim;
        return e < o.e;
    }

    Vec to_vec() const;
    static ExpVec from_vec(const Vec& v); // throws if out of int32 range
};

/// Sparse Laurent polynomial with exact integer coefficients.
/// Term map iterates in lexicographic exponent order; zero coefficients are
/// never stored.
class LaurentPolynomial {
  public:
    using Terms = std::map<ExpVec, Int>;

    explicit LaurentPolynomial(int dim = 3) : dim_(dim) {}
    static LaurentPolynomial constant(int dim, Int c);
    static LaurentPolynomial monomial(Int c, const ExpVec& e);

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const ExpVec& e) const;
    Int constant_term() const { return coefficient(ExpVec(dim_)); }

    void set(const ExpVec& e, Int c); // drops zero

    friend LaurentPolynomial add(const LaurentPolynomial& f, const LaurentPolynomial& g);
    friend LaurentPolynomial sub(const LaurentPolynomial& f, const LaurentPolynomial& g);
    friend LaurentPolynomial mul(const LaurentPolynomial& f, const LaurentPolynomial& g);
    LaurentPolynomial scalar_mul(const Int& k) const;
    LaurentPolynomial mul_monomial(const Int& c, const ExpVec& e) const;
    bool operator==(const LaurentPolynomial& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

    /// f^i with terms filtered through `keep` after every multiplication.
    /// keep == nullptr computes the full power.
    LaurentPolynomial pow_bounded(long i, const std::function<bool(const ExpVec&)>& keep = nullptr) const;

    LatticePolytope newton_polytope() const; // throws DegenerateInput via hull
    LaurentPolynomial substitute_monomial(const UnimodularMap& u) const; // throws NotUnimodular

    /// Multiset of coefficients, sorted (used by invariance tests and hashing).
    std::vector<Int> coefficient_multiset() const;

    std::string canonical_string() const; // "c1 e11 e12 e13; c2 ..." in term order
    std::string content_hash() const;     // FNV-1a 64 over canonical_string, hex

    std::string to_expression() const;    // human-readable, deterministic

  private:
    int dim_;
    Terms terms_;
};

/// Expression parser: integer coefficients, variables x,y[,z], *, /, +, -, ^
/// with integer exponents; division only by single-term values whose
/// coefficient divides exactly. Round-trips through the term list.
LaurentPolynomial parse_laurent(const std::string& text, int dim = 3); // throws ParseError

} // namespace lgtoric
