#include "lgtoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lgtoric {

namespace {

// ---- generic 2D angular order around the centroid (T = Int or Rat) ----

template <typename T>
int half_of(const T& x, const T& y) {
    // 0 for upper half plane (y > 0, or y == 0 and x > 0), 1 otherwise
    if (y > 0) return 0;
    if (y == 0 && x > 0) return 0;
    return 1;
}

// Sorts indices of 2-component deltas counterclockwise starting in the upper half.
template <typename T>
std::vector<size_t> angular_order(const std::vector<std::array<T, 2>>& d) {
    std::vector<size_t> idx(d.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        int ha = half_of(d[a][0], d[a][1]), hb = half_of(d[b][0], d[b][1]);
        if (ha != hb) return ha < hb;
        T cr = d[a][0] * d[b][1] - d[a][1] * d[b][0];
        if (cr != 0) return cr > 0;
        // same ray: nearer point first (squared length)
        T la = d[a][0] * d[a][0] + d[a][1] * d[a][1];
        T lb = d[b][0] * d[b][0] + d[b][1] * d[b][1];
        return la < lb;
    });
    return idx;
}

Int cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain; returns strict vertices counterclockwise.
std::vector<Vec> hull2d(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Vec> lo, up;
    for (const Vec& p : pts) {
        while (lo.size() >= 2 && cross2(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (up.size() >= 2 && cross2(up[up.size() - 2], up.back(), *it) <= 0) up.pop_back();
        up.push_back(*it);
    }
    lo.pop_back();
    up.pop_back();
    lo.insert(lo.end(), up.begin(), up.end());
    // normalize to CCW, then rotate so the lexicographic minimum comes first
    Int sh = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        const Vec& a = lo[i];
        const Vec& b = lo[(i + 1) % lo.size()];
        sh += a[0] * b[1] - a[1] * b[0];
    }
    if (sh < 0) std::reverse(lo.begin(), lo.end());
    size_t start = 0;
    for (size_t i = 1; i < lo.size(); ++i)
        if (lo[i] < lo[start]) start = i;
    std::rotate(lo.begin(), lo.begin() + static_cast<long>(start), lo.end());
    return lo;
}

struct FacetKey {
    std::vector<Int> n;
    Int c;
    bool operator<(const FacetKey& o) const {
        if (n != o.n) return n < o.n;
        return c < o.c;
    }
};

} // namespace

bool RatVec::operator<(const RatVec& o) const {
    if (dim != o.dim) return dim < o.dim;
    for (int i = 0; i < dim; ++i) {
        int cm = ::cmp(c[static_cast<size_t>(i)], o.c[static_cast<size_t>(i)]);
        if (cm != 0) return cm < 0;
    }
    return false;
}

bool RatVec::is_integral() const {
    for (int i = 0; i < dim; ++i)
        if (c[static_cast<size_t>(i)].get_den() != 1) return false;
    return true;
}

Vec RatVec::round_to_lattice() const {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = c[static_cast<size_t>(i)].get_num();
    return v;
}

LatticePolytope LatticePolytope::hull(const std::vector<Vec>& points) {
    if (points.empty()) throw DegenerateInput("no points");
    int dim = points.front().dim;
    for (const Vec& p : points)
        if (p.dim != dim) throw DimensionMismatch("mixed dimensions in point set");
    std::vector<Vec> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (static_cast<int>(pts.size()) < dim + 1)
        throw DegenerateInput("need at least dim+1 distinct points");
    {
        std::vector<Vec> diffs;
        for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
        if (rank(diffs) < dim) throw DegenerateInput("points are not full-dimensional");
    }

    LatticePolytope P;
    P.dim_ = dim;

    if (dim == 2) {
        P.verts_ = hull2d(pts);
        size_t n = P.verts_.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec& a = P.verts_[i];
            const Vec& b = P.verts_[(i + 1) % n];
            Vec d = b - a;
            Vec nrm(-d[1], d[0]); // inward for CCW boundary
            nrm = primitive(nrm);
            P.facets_.push_back({nrm, -dot(nrm, a)});
        }
        std::sort(P.facets_.begin(), P.facets_.end(), [](const Facet& x, const Facet& y) {
            if (!(x.normal == y.normal)) return x.normal < y.normal;
            return x.offset < y.offset;
        });
        return P;
    }

    // dim == 3: enumerate supporting planes through point triples
    std::set<FacetKey> fk;
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
                if (nrm.is_zero()) continue;
                nrm = primitive(nrm);
                Int v0 = dot(nrm, pts[i]);
                bool all_ge = true, all_le = true;
                for (size_t t = 0; t < n && (all_ge || all_le); ++t) {
                    int cm = ::cmp(dot(nrm, pts[t]), v0);
                    if (cm < 0) all_ge = false;
                    if (cm > 0) all_le = false;
                }
                if (all_ge) fk.insert({{nrm[0], nrm[1], nrm[2]}, -v0});
                if (all_le) fk.insert({{-nrm[0], -nrm[1], -nrm[2]}, v0});
            }
    for (const FacetKey& f : fk) {
        Vec nrm(f.n[0], f.n[1], f.n[2]);
        P.facets_.push_back({nrm, f.c});
    }
    for (const Vec& p : pts) {
        std::vector<Vec> tight;
        for (const Facet& f : P.facets_)
            if (dot(f.normal, p) == -f.offset) tight.push_back(f.normal);
        if (rank(tight) == 3) P.verts_.push_back(p);
    }
    std::sort(P.verts_.begin(), P.verts_.end());
    return P;
}

bool LatticePolytope::contains(const Vec& p) const {
    if (p.dim != dim_) throw DimensionMismatch("point/polytope dimensions differ");
    for (const Facet& f : facets_)
        if (dot(f.normal, p) < -f.offset) return false;
    return true;
}

bool LatticePolytope::origin_interior() const {
    for (const Facet& f : facets_)
        if (f.offset <= 0) return false;
    return true;
}

bool LatticePolytope::is_reflexive() const {
    if (!origin_interior()) throw OriginNotInterior("origin is not strictly interior");
    for (const Facet& f : facets_)
        if (f.offset != 1) return false;
    return true;
}

RationalPolytope LatticePolytope::dual() const {
    if (!origin_interior()) throw OriginNotInterior("origin is not strictly interior");
    std::vector<RatVec> dverts;
    for (const Facet& f : facets_) {
        RatVec u;
        u.dim = dim_;
        for (int i = 0; i < dim_; ++i) {
            u[i] = Rat(f.normal[i], f.offset);
            u[i].canonicalize();
        }
        dverts.push_back(u);
    }
    std::sort(dverts.begin(), dverts.end());
    std::vector<RationalPolytope::Ineq> ineqs;
    for (const Vec& v : verts_) ineqs.push_back({v, Int(-1)});
    return RationalPolytope(dim_, std::move(dverts), std::move(ineqs));
}

Int LatticePolytope::normalized_volume() const {
    if (dim_ == 2) {
        Int s = 0;
        size_t n = verts_.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec& a = verts_[i];
            const Vec& b = verts_[(i + 1) % n];
            s += a[0] * b[1] - a[1] * b[0];
        }
        return abs(s); // CCW shoelace = 2 * area
    }
    // cone from verts_[0] over the facets that do not contain it
    const Vec& apex = verts_[0];
    Int total = 0;
    for (const Facet& f : facets_) {
        if (dot(f.normal, apex) == -f.offset) continue;
        std::vector<Vec> fv;
        for (const Vec& v : verts_)
            if (dot(f.normal, v) == -f.offset) fv.push_back(v);
        // cyclic order within the facet plane
        int ax = 0;
        for (int i = 1; i < 3; ++i)
            if (abs(f.normal[i]) > abs(f.normal[ax])) ax = i;
        int u = (ax + 1) % 3, w = (ax + 2) % 3;
        Vec sum(dim_);
        for (const Vec& v : fv) sum = sum + v;
        Int k(static_cast<long>(fv.size()));
        std::vector<std::array<Int, 2>> deltas;
        for (const Vec& v : fv) deltas.push_back({v[u] * k - sum[u], v[w] * k - sum[w]});
        std::vector<size_t> order = angular_order(deltas);
        for (size_t i = 1; i + 1 < order.size(); ++i) {
            Vec a = fv[order[0]] - apex, b = fv[order[i]] - apex, c = fv[order[i + 1]] - apex;
            total += abs(dot(a, cross(b, c)));
        }
    }
    return total;
}

LatticeCount LatticePolytope::lattice_points() const {
    LatticeCount out;
    std::array<Int, 3> lo{}, hi{};
    for (int i = 0; i < dim_; ++i) {
        lo[static_cast<size_t>(i)] = verts_[0][i];
        hi[static_cast<size_t>(i)] = verts_[0][i];
        for (const Vec& v : verts_) {
            if (v[i] < lo[static_cast<size_t>(i)]) lo[static_cast<size_t>(i)] = v[i];
            if (v[i] > hi[static_cast<size_t>(i)]) hi[static_cast<size_t>(i)] = v[i];
        }
    }
    Vec p(dim_);
    auto scan = [&](auto&& self, int coord) -> void {
        if (coord == dim_) {
            bool inside = true, strict = true;
            for (const Facet& f : facets_) {
                Int v = dot(f.normal, p) + f.offset;
                if (v < 0) { inside = false; break; }
                if (v == 0) strict = false;
            }
            if (inside) {
                ++out.all;
                if (strict) ++out.interior;
                out.points.push_back(p);
            }
            return;
        }
        for (Int t = lo[static_cast<size_t>(coord)]; t <= hi[static_cast<size_t>(coord)]; ++t) {
            p[coord] = t;
            self(self, coord + 1);
        }
    };
    scan(scan, 0);
    return out;
}

LatticePolytope LatticePolytope::apply(const UnimodularMap& u) const {
    if (!u.is_unimodular()) throw NotUnimodular("determinant is not +-1");
    if (u.dim != dim_) throw DimensionMismatch("map/polytope dimensions differ");
    if (u.translation && dim_ != 2)
        throw NotUnimodular("translations are only supported for 2D affine work");
    std::vector<Vec> mapped;
    for (const Vec& v : verts_) mapped.push_back(u.apply(v));
    return hull(mapped);
}

bool RationalPolytope::is_integral() const {
    for (const RatVec& v : verts_)
        if (!v.is_integral()) return false;
    return true;
}

LatticePolytope RationalPolytope::to_lattice() const {
    if (!is_integral()) throw DegenerateInput("polytope has non-integral vertices");
    std::vector<Vec> pts;
    for (const RatVec& v : verts_) pts.push_back(v.round_to_lattice());
    return LatticePolytope::hull(pts);
}

Rat RationalPolytope::normalized_volume() const {
    if (dim_ == 2) {
        // cyclic order around the centroid, then shoelace
        std::array<Rat, 2> c{};
        for (const RatVec& v : verts_) {
            c[0] += v[0];
            c[1] += v[1];
        }
        Rat k(static_cast<long>(verts_.size()));
        std::vector<std::array<Rat, 2>> deltas;
        for (const RatVec& v : verts_) deltas.push_back({v[0] * k - c[0], v[1] * k - c[1]});
        std::vector<size_t> order = angular_order(deltas);
        Rat s = 0;
        for (size_t i = 0; i < order.size(); ++i) {
            const RatVec& a = verts_[order[i]];
            const RatVec& b = verts_[order[(i + 1) % order.size()]];
            s += a[0] * b[1] - a[1] * b[0];
        }
        return abs(s);
    }
    const RatVec& apex = verts_[0];
    auto on_facet = [&](const Ineq& q, const RatVec& v) {
        Rat s = 0;
        for (int i = 0; i < 3; ++i) s += Rat(q.normal[i]) * v[i];
        return s == Rat(q.rhs_num);
    };
    Rat total = 0;
    for (const Ineq& q : ineqs_) {
        if (on_facet(q, apex)) continue;
        std::vector<RatVec> fv;
        for (const RatVec& v : verts_)
            if (on_facet(q, v)) fv.push_back(v);
        if (fv.size() < 3) continue;
        int ax = 0;
        for (int i = 1; i < 3; ++i)
            if (abs(q.normal[i]) > abs(q.normal[ax])) ax = i;
        int u = (ax + 1) % 3, w = (ax + 2) % 3;
        std::array<Rat, 2> c{};
        for (const RatVec& v : fv) {
            c[0] += v[u];
            c[1] += v[w];
        }
        Rat k(static_cast<long>(fv.size()));
        std::vector<std::array<Rat, 2>> deltas;
        for (const RatVec& v : fv) deltas.push_back({v[u] * k - c[0], v[w] * k - c[1]});
        std::vector<size_t> order = angular_order(deltas);
        auto diff = [&](const RatVec& a) {
            std::array<Rat, 3> d;
            for (int i = 0; i < 3; ++i) d[static_cast<size_t>(i)] = a[i] - apex[i];
            return d;
        };
        for (size_t i = 1; i + 1 < order.size(); ++i) {
            auto a = diff(fv[order[0]]), b = diff(fv[order[i]]), cc = diff(fv[order[i + 1]]);
            Rat det = a[0] * (b[1] * cc[2] - b[2] * cc[1]) - a[1] * (b[0] * cc[2] - b[2] * cc[0])
                    + a[2] * (b[0] * cc[1] - b[1] * cc[0]);
            total += abs(det);
        }
    }
    return total;
}

LatticeCount RationalPolytope::lattice_points() const {
    LatticeCount out;
    std::array<Int, 3> lo{}, hi{};
    for (int i = 0; i < dim_; ++i) {
        Rat mn = verts_[0][i], mx = verts_[0][i];
        for (const RatVec& v : verts_) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        mpz_fdiv_q(lo[static_cast<size_t>(i)].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_cdiv_q(hi[static_cast<size_t>(i)].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    }
    Vec p(dim_);
    auto scan = [&](auto&& self, int coord) -> void {
        if (coord == dim_) {
            bool inside = true, strict = true;
            for (const Ineq& q : ineqs_) {
                Int v = dot(q.normal, p) - q.rhs_num;
                if (v < 0) { inside = false; break; }
                if (v == 0) strict = false;
            }
            if (inside) {
                ++out.all;
                if (strict) ++out.interior;
                out.points.push_back(p);
            }
            return;
        }
        for (Int t = lo[static_cast<size_t>(coord)]; t <= hi[static_cast<size_t>(coord)]; ++t) {
            p[coord] = t;
            self(self, coord + 1);
        }
    };
    scan(scan, 0);
    return out;
}

} // namespace lgtoric
