#include "lgtoric/mutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lgtoric {

namespace {

ExpVec clear_pivot(ExpVec e, int pivot) {
    e[pivot] = 0;
    return e;
}

struct Levels {
    LaurentPolynomial up, mid, down; // pivot levels +1, 0, -1, pivot coordinate zeroed
};

Levels split_levels(const LaurentPolynomial& f, int pivot) {
    Levels L{LaurentPolynomial(f.dim()), LaurentPolynomial(f.dim()), LaurentPolynomial(f.dim())};
    for (const auto& [e, c] : f.terms()) {
        int lv = e[pivot];
        if (lv < -1 || lv > 1)
            throw PivotExponentOutOfRange("pivot exponent " + std::to_string(lv) +
                                          " outside {-1,0,1}");
        LaurentPolynomial& tgt = lv == 1 ? L.up : lv == 0 ? L.mid : L.down;
        tgt.set(clear_pivot(e, pivot), c);
    }
    return L;
}

bool pivot_free(const LaurentPolynomial& g, int pivot) {
    for (const auto& [e, c] : g.terms())
        if (e[pivot] != 0) return false;
    return true;
}

LaurentPolynomial shift_pivot(const LaurentPolynomial& g, int pivot, int lv) {
    ExpVec m(g.dim());
    m[pivot] = lv;
    return g.mul_monomial(Int(1), m);
}

// ---------- bounded exact factor search over a 2D exponent lattice ----------

using P2 = std::array<std::int64_t, 2>;
using Coeffs2 = std::map<P2, Int>;

std::int64_t igcd(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::vector<P2> hull2_i64(std::vector<P2> pts) {
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

// Lattice points of the convex hull of a CCW vertex path (possibly degenerate).
std::vector<P2> path_lattice_points(const std::vector<P2>& path) {
    P2 base = path[0];
    P2 dir{0, 0};
    bool planar = false;
    for (const P2& p : path) {
        P2 d{p[0] - base[0], p[1] - base[1]};
        if (d[0] == 0 && d[1] == 0) continue;
        if (dir[0] == 0 && dir[1] == 0)
            dir = d;
        else if (dir[0] * d[1] - dir[1] * d[0] != 0) {
            planar = true;
            break;
        }
    }
    if (!planar) {
        std::set<P2> out(path.begin(), path.end());
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            P2 a = path[i], b = path[i + 1];
            std::int64_t dx = b[0] - a[0], dy = b[1] - a[1];
            std::int64_t g = igcd(dx, dy);
            for (std::int64_t k = 1; k < g; ++k) out.insert({a[0] + dx / g * k, a[1] + dy / g * k});
        }
        return {out.begin(), out.end()};
    }
    std::int64_t xlo = path[0][0], xhi = xlo, ylo = path[0][1], yhi = ylo;
    for (const P2& p : path) {
        xlo = std::min(xlo, p[0]);
        xhi = std::max(xhi, p[0]);
        ylo = std::min(ylo, p[1]);
        yhi = std::max(yhi, p[1]);
    }
    std::vector<P2> out;
    size_t n = path.size();
    for (std::int64_t x = xlo; x <= xhi; ++x)
        for (std::int64_t y = ylo; y <= yhi; ++y) {
            bool inside = true;
            for (size_t i = 0; i < n && inside; ++i) {
                P2 a = path[i], b = path[(i + 1) % n];
                if ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) < 0) inside = false;
            }
            if (inside) out.push_back({x, y});
        }
    return out;
}

struct SummandPair {
    std::vector<P2> s1, s2; // anchored: w-minimum at the origin
    P2 shift;               // g1 is translated by this after solving
};

std::int64_t wkey(const P2& w, const P2& p) { return w[0] * p[0] + w[1] * p[1]; }

P2 anchor_at_wmin(std::vector<P2>& pts, const P2& w) {
    P2 best = pts[0];
    for (const P2& p : pts)
        if (wkey(w, p) < wkey(w, best)) best = p;
    for (P2& p : pts) {
        p[0] -= best[0];
        p[1] -= best[1];
    }
    std::sort(pts.begin(), pts.end());
    return best;
}

/// All Minkowski summand pairs of the hull of `support`, via edge splits.
std::vector<SummandPair> summand_pairs(const std::vector<P2>& support, const P2& w) {
    std::vector<P2> hull = hull2_i64(support);
    std::vector<SummandPair> out;

    if (hull.size() <= 2) {
        P2 a = hull.front(), b = hull.back();
        std::int64_t g = hull.size() == 1 ? 0 : igcd(b[0] - a[0], b[1] - a[1]);
        P2 d = g > 0 ? P2{(b[0] - a[0]) / g, (b[1] - a[1]) / g} : P2{0, 0};
        P2 base = a;
        if (g > 0 && wkey(w, d) < 0) { // anchor from the w-smaller end
            d = {-d[0], -d[1]};
            base = b;
        }
        for (std::int64_t k = 0; k <= g; ++k) {
            SummandPair sp;
            for (std::int64_t i = 0; i <= k; ++i) sp.s1.push_back({d[0] * i, d[1] * i});
            for (std::int64_t i = 0; i <= g - k; ++i) sp.s2.push_back({d[0] * i, d[1] * i});
            sp.shift = base;
            out.push_back(std::move(sp));
        }
        return out;
    }

    size_t n = hull.size();
    std::vector<P2> dirs(n);
    std::vector<std::int64_t> lens(n);
    for (size_t i = 0; i < n; ++i) {
        P2 a = hull[i], b = hull[(i + 1) % n];
        std::int64_t g = igcd(b[0] - a[0], b[1] - a[1]);
        dirs[i] = {(b[0] - a[0]) / g, (b[1] - a[1]) / g};
        lens[i] = g;
    }
    std::vector<P2> hv = hull;
    P2 ah = anchor_at_wmin(hv, w);

    std::vector<std::int64_t> pick(n, 0);
    std::vector<std::int64_t> sx(n + 1, 0), sy(n + 1, 0);
    for (size_t i = n; i-- > 0;) {
        sx[i] = sx[i + 1] + lens[i] * std::abs(dirs[i][0]);
        sy[i] = sy[i + 1] + lens[i] * std::abs(dirs[i][1]);
    }
    auto rec = [&](auto&& self, size_t i, std::int64_t px, std::int64_t py) -> void {
        if (std::abs(px) > sx[i] || std::abs(py) > sy[i]) return;
        if (i == n) {
            if (px != 0 || py != 0) return;
            auto walk = [&](bool first) {
                std::vector<P2> path{{0, 0}};
                for (size_t e = 0; e < n; ++e) {
                    std::int64_t k = first ? pick[e] : lens[e] - pick[e];
                    if (k == 0) continue;
                    P2 last = path.back();
                    path.push_back({last[0] + dirs[e][0] * k, last[1] + dirs[e][1] * k});
                }
                if (path.size() > 1) path.pop_back(); // closing vertex repeats the start
                return path;
            };
            SummandPair sp;
            sp.s1 = path_lattice_points(walk(true));
            sp.s2 = path_lattice_points(walk(false));
            anchor_at_wmin(sp.s1, w);
            anchor_at_wmin(sp.s2, w);
            sp.shift = ah;
            out.push_back(std::move(sp));
            return;
        }
        for (std::int64_t k = 0; k <= lens[i]; ++k) {
            pick[i] = k;
            self(self, i + 1, px + dirs[i][0] * k, py + dirs[i][1] * k);
        }
        pick[i] = 0;
    };
    rec(rec, 0, 0, 0);
    return out;
}

Int positive_divisors_of(const Int& a, std::vector<Int>& out) {
    Int n = abs(a);
    for (Int d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return n;
}

// Exact coefficient solver: unknown values on the two candidate supports,
// resolved by constraint propagation over the convolution equations with
// divisor branching where a product of two unknowns is isolated.
struct FactorSearch {
    const Coeffs2& target; // A anchored at the origin
    std::vector<P2> s1, s2;
    std::vector<std::pair<Coeffs2, Coeffs2>> found;
    long budget = 20000; // branch states; paper-sized inputs use a handful

    Int aval(const P2& p) const {
        auto it = target.find(p);
        return it == target.end() ? Int(0) : it->second;
    }

    struct State {
        Coeffs2 c1, c2;
        std::set<P2> u1, u2; // unsolved points
    };

    // one convolution equation, reduced against the solved part
    struct Eq {
        Int constant;                        // solved x solved contributions
        std::map<std::pair<int, P2>, Int> lin; // (side, point) -> coefficient
        std::vector<std::pair<P2, P2>> quad;   // unsolved x unsolved pairs
    };

    Eq equation_at(const State& st, const P2& z) const {
        Eq eq;
        eq.constant = 0;
        for (const P2& p : s1) {
            P2 q{z[0] - p[0], z[1] - p[1]};
            bool p_solved = !st.u1.count(p);
            auto qi = std::lower_bound(s2.begin(), s2.end(), q);
            if (qi == s2.end() || *qi != q) continue;
            bool q_solved = !st.u2.count(q);
            if (p_solved && q_solved) {
                auto i1 = st.c1.find(p);
                auto i2 = st.c2.find(q);
                if (i1 != st.c1.end() && i2 != st.c2.end())
                    eq.constant += i1->second * i2->second;
            } else if (p_solved) {
                auto i1 = st.c1.find(p);
                if (i1 != st.c1.end() && i1->second != 0) eq.lin[{2, q}] += i1->second;
            } else if (q_solved) {
                auto i2 = st.c2.find(q);
                if (i2 != st.c2.end() && i2->second != 0) eq.lin[{1, p}] += i2->second;
            } else {
                eq.quad.push_back({p, q});
            }
        }
        // contributions can cancel to zero; a zero coefficient is no constraint
        for (auto it = eq.lin.begin(); it != eq.lin.end();)
            it = it->second == 0 ? eq.lin.erase(it) : std::next(it);
        return eq;
    }

    void assign(State& st, int side, const P2& p, const Int& val) {
        if (side == 1) {
            st.u1.erase(p);
            if (val != 0) st.c1[p] = val;
        } else {
            st.u2.erase(p);
            if (val != 0) st.c2[p] = val;
        }
    }

    void finish(State& st) {
        Coeffs2 prod;
        for (const auto& [p, cp] : st.c1)
            for (const auto& [q, cq] : st.c2) prod[{p[0] + q[0], p[1] + q[1]}] += cp * cq;
        for (auto it = prod.begin(); it != prod.end();)
            it = it->second == 0 ? prod.erase(it) : std::next(it);
        if (prod == target) found.push_back({st.c1, st.c2});
    }

    void solve(State st) {
        if (--budget < 0) return;
        while (true) {
            if (st.u1.empty() && st.u2.empty()) {
                finish(st);
                return;
            }
            // gather all product points touching an unknown
            std::set<P2> zs;
            for (const P2& p : s1)
                for (const P2& q : s2) zs.insert({p[0] + q[0], p[1] + q[1]});

            bool progress = false;
            // pass 1: forced single-unknown equations
            for (const P2& z : zs) {
                Eq eq = equation_at(st, z);
                if (!eq.quad.empty() || eq.lin.size() != 1) continue;
                const auto& [key, coeff] = *eq.lin.begin();
                Int rhs = aval(z) - eq.constant;
                if (rhs % coeff != 0) return; // contradiction
                assign(st, key.first, key.second, rhs / coeff);
                progress = true;
                break;
            }
            if (progress) continue;

            // pass 2: two linear equations sharing the same two unknowns
            {
                std::map<std::set<std::pair<int, P2>>, std::vector<P2>> by_vars;
                for (const P2& z : zs) {
                    Eq eq = equation_at(st, z);
                    if (!eq.quad.empty() || eq.lin.size() != 2) continue;
                    std::set<std::pair<int, P2>> vars;
                    for (const auto& [k, cf] : eq.lin) vars.insert(k);
                    by_vars[vars].push_back(z);
                }
                for (const auto& [vars, pts] : by_vars) {
                    if (pts.size() < 2) continue;
                    for (size_t i = 0; i < pts.size() && !progress; ++i)
                        for (size_t j = i + 1; j < pts.size() && !progress; ++j) {
                            Eq e1 = equation_at(st, pts[i]);
                            Eq e2 = equation_at(st, pts[j]);
                            auto it1 = e1.lin.begin();
                            Int a1 = it1->second;
                            auto k1 = it1->first;
                            Int b1 = std::next(it1)->second;
                            auto k2 = std::next(it1)->first;
                            Int a2 = e2.lin.at(k1), b2 = e2.lin.at(k2);
                            Int det = a1 * b2 - a2 * b1;
                            if (det == 0) continue;
                            Int r1 = aval(pts[i]) - e1.constant;
                            Int r2 = aval(pts[j]) - e2.constant;
                            Int xnum = r1 * b2 - r2 * b1;
                            Int ynum = a1 * r2 - a2 * r1;
                            if (xnum % det != 0 || ynum % det != 0) return;
                            assign(st, k1.first, k1.second, xnum / det);
                            assign(st, k2.first, k2.second, ynum / det);
                            progress = true;
                        }
                    if (progress) break;
                }
            }
            if (progress) continue;

            // pass 3: an isolated quadratic u*v = rhs -> divisor branch
            const Eq* best = nullptr;
            Eq best_eq;
            P2 best_z{0, 0};
            for (const P2& z : zs) {
                Eq eq = equation_at(st, z);
                if (eq.quad.size() != 1 || !eq.lin.empty()) continue;
                best_eq = eq;
                best_z = z;
                best = &best_eq;
                break;
            }
            if (best) {
                auto [p, q] = best_eq.quad.front();
                Int rhs = aval(best_z) - best_eq.constant;
                std::vector<std::pair<Int, Int>> cand;
                if (rhs == 0) {
                    // one of the two factors vanishes; branch on which
                    for (int side = 0; side < 2; ++side) {
                        State ns = st;
                        if (side == 0)
                            assign(ns, 1, p, Int(0));
                        else
                            assign(ns, 2, q, Int(0));
                        solve(std::move(ns));
                    }
                    return;
                }
                std::vector<Int> divs;
                positive_divisors_of(rhs, divs);
                for (const Int& d : divs)
                    for (int sgn = 0; sgn < 2; ++sgn) {
                        Int uu = sgn ? Int(-d) : d;
                        cand.push_back({uu, rhs / uu});
                    }
                for (const auto& [uu, vv] : cand) {
                    State ns = st;
                    assign(ns, 1, p, uu);
                    assign(ns, 2, q, vv);
                    solve(std::move(ns));
                }
                return;
            }

            // stuck: no usable equation remains for this support pair
            return;
        }
    }
};

} // namespace

bool validate_decomposition(const LaurentPolynomial& f, const MutationData& d) {
    LaurentPolynomial g = f;
    if (d.conjugation) g = f.substitute_monomial(*d.conjugation);
    for (const auto& [e, c] : g.terms())
        if (e[d.pivot] < -1 || e[d.pivot] > 1)
            throw PivotExponentOutOfRange("pivot exponent outside {-1,0,1}");
    if (d.g1.is_zero() || d.g2.is_zero()) return false;
    for (const LaurentPolynomial* gi : {&d.g1, &d.g2, &d.g3, &d.g4})
        if (!pivot_free(*gi, d.pivot)) return false;
    LaurentPolynomial rhs = add(add(shift_pivot(mul(d.g1, d.g2), d.pivot, 1), d.g3),
                                shift_pivot(d.g4, d.pivot, -1));
    return rhs == g;
}

LaurentPolynomial mutate(const LaurentPolynomial& f, const MutationData& d) {
    if (!validate_decomposition(f, d))
        throw InvalidDecomposition("f does not equal x*g1*g2 + g3 + g4/x for the given data");
    LaurentPolynomial res = add(add(shift_pivot(d.g1, d.pivot, 1), d.g3),
                                shift_pivot(mul(d.g2, d.g4), d.pivot, -1));
    if (d.conjugation) res = res.substitute_monomial(d.conjugation->inverse());
    return res;
}

std::vector<MutationData> find_decompositions(const LaurentPolynomial& f, int pivot,
                                              int max_support) {
    if (f.dim() != 3) throw DimensionMismatch("decomposition search expects 3 variables");
    Levels L = split_levels(f, pivot);
    std::vector<MutationData> out;
    if (L.up.is_zero()) return out;

    int u = pivot == 0 ? 1 : 0;
    int v = pivot == 2 ? 1 : 2;

    std::vector<P2> support;
    Coeffs2 A;
    for (const auto& [e, c] : L.up.terms()) {
        P2 p{e[u], e[v]};
        A[p] = c;
        support.push_back(p);
    }

    std::int64_t span = 1;
    for (const P2& p : support) span = std::max({span, std::abs(p[0]), std::abs(p[1])});
    P2 w{1, 16 * span + 8};

    std::set<std::string> seen;
    auto lift = [&](const Coeffs2& coeffs, P2 shift) {
        LaurentPolynomial g(3);
        for (const auto& [p, c] : coeffs) {
            if (c == 0) continue;
            ExpVec e(3);
            e[u] = static_cast<std::int32_t>(p[0] + shift[0]);
            e[v] = static_cast<std::int32_t>(p[1] + shift[1]);
            g.set(e, c);
        }
        return g;
    };

    for (SummandPair& sp : summand_pairs(support, w)) {
        if (static_cast<int>(sp.s1.size()) > 4 * max_support ||
            static_cast<int>(sp.s2.size()) > 4 * max_support)
            continue;

        Coeffs2 Ap;
        for (const auto& [p, c] : A) Ap[{p[0] - sp.shift[0], p[1] - sp.shift[1]}] = c;
        auto it0 = Ap.find({0, 0});
        if (it0 == Ap.end() || it0->second == 0) continue;
        Int a0 = it0->second;

        std::sort(sp.s1.begin(), sp.s1.end());
        std::sort(sp.s2.begin(), sp.s2.end());
        FactorSearch fs{Ap, sp.s1, sp.s2, {}, 20000};

        std::vector<Int> divs;
        positive_divisors_of(a0, divs);
        for (const Int& d : divs) {
            FactorSearch::State st;
            st.c1[{0, 0}] = d;
            st.c2[{0, 0}] = a0 / d;
            st.u1.insert(sp.s1.begin(), sp.s1.end());
            st.u2.insert(sp.s2.begin(), sp.s2.end());
            st.u1.erase({0, 0});
            st.u2.erase({0, 0});
            fs.solve(std::move(st));
        }

        for (auto& [c1, c2] : fs.found) {
            MutationData md(3);
            md.pivot = pivot;
            md.g1 = lift(c1, sp.shift);
            md.g2 = lift(c2, {0, 0});
            md.g3 = L.mid;
            md.g4 = L.down;
            if (static_cast<int>(md.g1.support_size()) > max_support ||
                static_cast<int>(md.g2.support_size()) > max_support)
                continue;
            std::string sig = md.g1.canonical_string() + "|" + md.g2.canonical_string();
            if (!seen.insert(sig).second) continue;
            if (!validate_decomposition(f, md)) continue;
            out.push_back(std::move(md));
        }
    }
    return out;
}

} // namespace lgtoric
