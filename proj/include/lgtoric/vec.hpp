#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lgtoric/errors.hpp"

namespace lgtoric {

using Int = mpz_class;
using Rat = mpq_class;

/// Lattice vector of dimension 2 or 3. Unused trailing coordinates stay zero.
struct Vec {
    int dim = 3;
    std::array<Int, 3> c{};

    Vec() = default;
    Vec(int d) : dim(d) {}
    Vec(Int a, Int b) : dim(2), c{std::move(a), std::move(b), 0} {}
    Vec(Int a, Int b, Int d) : dim(3), c{std::move(a), std::move(b), std::move(d)} {}

    Int& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Int& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    friend Vec operator+(const Vec& a, const Vec& b);
    friend Vec operator-(const Vec& a, const Vec& b);
    Vec operator-() const;
    Vec scaled(const Int& k) const;

    bool operator==(const Vec& o) const { return dim == o.dim && c == o.c; }
    bool operator!=(const Vec& o) const { return !(*this == o); }
    bool operator<(const Vec& o) const; // lexicographic
    bool is_zero() const;

    std::string str() const;
};

Int dot(const Vec& a, const Vec& b);
Vec cross(const Vec& a, const Vec& b); // dim-3 only
Int content(const Vec& v);             // gcd of coordinates, >= 0
Vec primitive(const Vec& v);           // v / content(v); zero vector stays zero

/// Rank of a set of vectors (over Q), dim <= 3.
int rank(const std::vector<Vec>& vs);

/// Integer matrix with |det| = 1, plus an optional translation part.
/// Translations only make sense for affine 2D work; the lattice-geometry and
/// Laurent operations that require a linear map reject maps that carry one.
struct UnimodularMap {
    int dim = 3;
    std::array<std::array<Int, 3>, 3> m{}; // row major
    std::optional<Vec> translation;

    static UnimodularMap identity(int dim);
    static UnimodularMap from_rows(const std::vector<std::vector<Int>>& rows);

    Int det() const;
    bool is_unimodular() const;
    Vec apply_linear(const Vec& v) const;
    Vec apply(const Vec& v) const; // linear part + translation
    UnimodularMap inverse() const; // translation inverted too
    UnimodularMap compose(const UnimodularMap& inner) const; // applies inner first

    std::vector<std::vector<Int>> rows() const;
};

/// Membership of a vector in the sublattice spanned by `gens` (exact).
bool in_lattice(const Vec& target, const std::vector<Vec>& gens);

} // namespace lgtoric
