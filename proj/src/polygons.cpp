#include "lgtoric/polygons.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lgtoric {

namespace {

// fast exact int64 path for the box search; coordinates stay in [-3,3]
using P2 = std::array<std::int64_t, 2>;

std::vector<P2> hull2(std::vector<P2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cr = [](const P2& o, const P2& a, const P2& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<P2> lo, up;
    for (const P2& p : pts) {
        while (lo.size() >= 2 && cr(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (up.size() >= 2 && cr(up[up.size() - 2], up.back(), *it) <= 0) up.pop_back();
        up.push_back(*it);
    }
    lo.pop_back();
    up.pop_back();
    lo.insert(lo.end(), up.begin(), up.end());
    std::int64_t sh = 0;
    for (size_t i = 0; i < lo.size(); ++i) {
        const P2& a = lo[i];
        const P2& b = lo[(i + 1) % lo.size()];
        sh += a[0] * b[1] - a[1] * b[0];
    }
    if (sh < 0) std::reverse(lo.begin(), lo.end());
    return lo;
}

// true iff the origin is the only interior lattice point (checked inside the
// polygon's own bounding box)
bool origin_only_interior(const std::vector<P2>& ccw) {
    std::int64_t xlo = ccw[0][0], xhi = xlo, ylo = ccw[0][1], yhi = ylo;
    for (const P2& p : ccw) {
        xlo = std::min(xlo, p[0]);
        xhi = std::max(xhi, p[0]);
        ylo = std::min(ylo, p[1]);
        yhi = std::max(yhi, p[1]);
    }
    bool saw_origin = false;
    size_t n = ccw.size();
    for (std::int64_t x = xlo; x <= xhi; ++x)
        for (std::int64_t y = ylo; y <= yhi; ++y) {
            bool strict = true;
            for (size_t i = 0; i < n && strict; ++i) {
                const P2& a = ccw[i];
                const P2& b = ccw[(i + 1) % n];
                if ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) <= 0) strict = false;
            }
            if (!strict) continue;
            if (x == 0 && y == 0)
                saw_origin = true;
            else
                return false;
        }
    return saw_origin;
}

LatticePolytope to_polytope(const std::vector<P2>& verts) {
    std::vector<Vec> pts;
    for (const P2& p : verts) pts.push_back(Vec(Int(p[0]), Int(p[1])));
    return LatticePolytope::hull(pts);
}

} // namespace

long polygon_degree(const LatticePolytope& P) {
    Rat v = P.dual().normalized_volume();
    if (v.get_den() != 1) throw Error("non-integral dual volume for a reflexive polygon");
    return static_cast<long>(v.get_num().get_si());
}

LatticePolytope polygon_blowup(const LatticePolytope& P, const Vec& v1, const Vec& v2) {
    if (P.dim() != 2) throw DimensionMismatch("blow-up is a 2D operation");
    const auto& verts = P.vertices();
    size_t n = verts.size(), i1 = n, i2 = n;
    for (size_t i = 0; i < n; ++i) {
        if (verts[i] == v1) i1 = i;
        if (verts[i] == v2) i2 = i;
    }
    if (i1 == n || i2 == n) throw Error("not vertices of the polygon");
    if ((i1 + 1) % n != i2 && (i2 + 1) % n != i1)
        throw Error("vertices are not adjacent");
    Int det = v1[0] * v2[1] - v1[1] * v2[0];
    if (det != 1 && det != -1)
        throw SingularFixedPoint("fixed point is singular: |det| = " + Int(abs(det)).get_str());
    std::vector<Vec> pts(verts);
    pts.push_back(v1 + v2);
    LatticePolytope Q = LatticePolytope::hull(pts);
    if (!Q.is_reflexive())
        throw LeavesCanonicalFamily("blow-up left the reflexive family");
    return Q;
}

std::vector<PolygonClass> enumerate_reflexive_polygons() {
    constexpr std::int64_t B = 3;
    std::vector<P2> box;
    for (std::int64_t x = -B; x <= B; ++x)
        for (std::int64_t y = -B; y <= B; ++y)
            if (x != 0 || y != 0) box.push_back({x, y});

    std::set<std::vector<P2>> seen;    // every hull examined
    std::vector<std::vector<P2>> work; // reflexive polygons pending growth

    auto consider = [&](std::vector<P2> pts) {
        std::vector<P2> h = hull2(std::move(pts));
        if (h.size() < 3) return;
        std::vector<P2> key = h;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        if (!origin_only_interior(h)) return;
        work.push_back(std::move(h));
    };

    size_t nb = box.size();
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = i + 1; j < nb; ++j)
            for (size_t k = j + 1; k < nb; ++k) consider({box[i], box[j], box[k]});
    for (size_t i = 0; i < nb; ++i)
        for (size_t j = i + 1; j < nb; ++j)
            for (size_t k = j + 1; k < nb; ++k)
                for (size_t l = k + 1; l < nb; ++l) consider({box[i], box[j], box[k], box[l]});

    std::map<std::string, PolygonClass> classes;
    for (size_t qi = 0; qi < work.size(); ++qi) {
        std::vector<P2> P = work[qi]; // grow by one box vertex at a time
        for (const P2& p : box) {
            std::vector<P2> ext = P;
            ext.push_back(p);
            consider(std::move(ext));
        }
        LatticePolytope L = to_polytope(P);
        std::string nf = L.normal_form_hex();
        if (!classes.count(nf)) {
            PolygonClass pc{L, nf, polygon_degree(L)};
            if (!L.is_reflexive()) throw Error("enumerated polygon is not reflexive");
            classes.emplace(nf, std::move(pc));
        }
    }

    std::vector<PolygonClass> out;
    for (auto& [nf, pc] : classes) {
        for (const Vec& v : pc.representative.vertices())
            if (abs(v[0]) > B || abs(v[1]) > B)
                throw Error("class representative escaped the search box");
        out.push_back(std::move(pc));
    }
    std::sort(out.begin(), out.end(), [](const PolygonClass& a, const PolygonClass& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.nf_hex < b.nf_hex;
    });
    if (out.size() != 16)
        throw Error("reflexive polygon enumeration found " + std::to_string(out.size()) +
                    " classes, expected 16");
    return out;
}

DelPezzoGraph build_del_pezzo_graph() {
    DelPezzoGraph g;
    g.nodes = enumerate_reflexive_polygons();
    std::map<std::string, int> index;
    for (size_t i = 0; i < g.nodes.size(); ++i) index[g.nodes[i].nf_hex] = static_cast<int>(i);

    std::set<std::pair<int, int>> edges;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const LatticePolytope& P = g.nodes[i].representative;
        const auto& verts = P.vertices();
        size_t n = verts.size();
        for (size_t k = 0; k < n; ++k) {
            const Vec& v1 = verts[k];
            const Vec& v2 = verts[(k + 1) % n];
            Int det = v1[0] * v2[1] - v1[1] * v2[0];
            if (det != 1 && det != -1) continue;
            LatticePolytope Q = polygon_blowup(P, v1, v2);
            auto it = index.find(Q.normal_form_hex());
            if (it == index.end()) throw Error("blow-up left the classified family");
            edges.insert({static_cast<int>(i), it->second});
        }
    }
    g.edges.assign(edges.begin(), edges.end());

    auto closure = [&](std::vector<char> r) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, b] : g.edges)
                if (r[static_cast<size_t>(a)] && !r[static_cast<size_t>(b)]) {
                    r[static_cast<size_t>(b)] = 1;
                    changed = true;
                }
        }
        return r;
    };
    std::vector<char> from_p2(g.nodes.size(), 0), from_roots(g.nodes.size(), 0);
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.nodes[i].degree == 9) {
            from_p2[i] = 1;
            from_roots[i] = 1;
        }
        if (g.nodes[i].degree == 8) from_roots[i] = 1;
    }
    g.reachable_from_p2 = closure(from_p2);
    g.reachable_from_roots = closure(from_roots);
    return g;
}

std::string del_pezzo_dot(const DelPezzoGraph& g) {
    std::ostringstream os;
    os << "digraph del_pezzo_tree {\n";
    os << "  rankdir=TB;\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const PolygonClass& pc = g.nodes[i];
        os << "  n" << i + 1 << " [label=\"N" << i + 1 << " deg=" << pc.degree
           << " v=" << pc.representative.vertices().size() << "\"];\n";
    }
    for (const auto& [a, b] : g.edges)
        os << "  n" << a + 1 << " -> n" << b + 1 << " [label=\"blowup\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace lgtoric
