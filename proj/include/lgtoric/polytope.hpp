#pragma once

#include <string>
#include <vector>

#include "lgtoric/vec.hpp"

namespace lgtoric {

/// Inequality <normal, x> >= -offset with primitive inward normal.
struct Facet {
    Vec normal;
    Int offset;
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
};

struct RatVec {
    int dim = 3;
    std::array<Rat, 3> c{};
    Rat& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return c[static_cast<size_t>(i)]; }
    bool operator==(const RatVec& o) const { return dim == o.dim && c == o.c; }
    bool operator<(const RatVec& o) const;
    bool is_integral() const;
    Vec round_to_lattice() const; // only valid when integral
};

struct LatticeCount {
    long all = 0;
    long interior = 0;
    std::vector<Vec> points;
};

class RationalPolytope;

/// Full-dimensional lattice polytope in dim 2 or 3, immutable.
/// Vertices are the exact extreme points, in canonical order
/// (counterclockwise from the lexicographic minimum in 2D, sorted in 3D);
/// facets carry primitive inward normals.
class LatticePolytope {
  public:
    static LatticePolytope hull(const std::vector<Vec>& points);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return verts_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const Vec& p) const;
    bool origin_interior() const;

    bool is_reflexive() const;      // throws OriginNotInterior
    RationalPolytope dual() const;  // throws OriginNotInterior
    Int normalized_volume() const;  // dim! * euclidean volume, exact
    LatticeCount lattice_points() const;

    LatticePolytope apply(const UnimodularMap& u) const; // throws NotUnimodular

    /// Canonical GL(dim,Z)-invariant byte string, lowercase hex.
    std::string normal_form_hex() const; // throws OriginNotInterior

    bool operator==(const LatticePolytope& o) const {
        return dim_ == o.dim_ && verts_ == o.verts_;
    }

  private:
    LatticePolytope() = default;
    int dim_ = 0;
    std::vector<Vec> verts_;
    std::vector<Facet> facets_;
};

/// Polytope with rational vertices; produced by dualization, so the defining
/// inequalities <v, u> >= -1 (one per vertex v of the source) are kept.
class RationalPolytope {
  public:
    struct Ineq {
        Vec normal;  // integer, not necessarily primitive
        Int rhs_num; // <normal, x> >= rhs_num (rhs is integer here: -1 per source vertex)
    };

    RationalPolytope(int dim, std::vector<RatVec> verts, std::vector<Ineq> ineqs)
        : dim_(dim), verts_(std::move(verts)), ineqs_(std::move(ineqs)) {}

    int dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return verts_; }
    const std::vector<Ineq>& inequalities() const { return ineqs_; }

    bool is_integral() const;
    LatticePolytope to_lattice() const; // throws DegenerateInput if not integral

    Rat normalized_volume() const;
    LatticeCount lattice_points() const;

  private:
    int dim_;
    std::vector<RatVec> verts_;
    std::vector<Ineq> ineqs_;
};

} // namespace lgtoric
