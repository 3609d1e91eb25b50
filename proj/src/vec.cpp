#include "lgtoric/vec.hpp"

#include <sstream>

namespace lgtoric {

Vec operator+(const Vec& a, const Vec& b) {
    if (a.dim != b.dim) throw DimensionMismatch("vector dimensions differ");
    Vec r(a.dim);
    for (int i = 0; i < a.dim; ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.dim != b.dim) throw DimensionMismatch("vector dimensions differ");
    Vec r(a.dim);
    for (int i = 0; i < a.dim; ++i) r[i] = a[i] - b[i];
    return r;
}

Vec Vec::operator-() const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) r[i] = -c[static_cast<size_t>(i)];
    return r;
}

Vec Vec::scaled(const Int& k) const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) r[i] = c[static_cast<size_t>(i)] * k;
    return r;
}

bool Vec::operator<(const Vec& o) const {
    if (dim != o.dim) return dim < o.dim;
    for (int i = 0; i < dim; ++i) {
        int cmp = ::cmp(c[static_cast<size_t>(i)], o.c[static_cast<size_t>(i)]);
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

bool Vec::is_zero() const {
    for (int i = 0; i < dim; ++i)
        if (c[static_cast<size_t>(i)] != 0) return false;
    return true;
}

std::string Vec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim; ++i) os << (i ? "," : "") << c[static_cast<size_t>(i)];
    os << ")";
    return os.str();
}

Int dot(const Vec& a, const Vec& b) {
    if (a.dim != b.dim) throw DimensionMismatch("vector dimensions differ");
    Int s = 0;
    for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
    return s;
}

Vec cross(const Vec& a, const Vec& b) {
    if (a.dim != 3 || b.dim != 3) throw DimensionMismatch("cross product needs dim 3");
    return Vec(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

Int content(const Vec& v) {
    Int g = 0;
    for (int i = 0; i < v.dim; ++i) {
        Int a = abs(v[i]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

Vec primitive(const Vec& v) {
    Int g = content(v);
    if (g == 0 || g == 1) return v;
    Vec r(v.dim);
    for (int i = 0; i < v.dim; ++i) r[i] = v[i] / g;
    return r;
}

int rank(const std::vector<Vec>& vs) {
    std::vector<Vec> basis;
    for (const Vec& t : vs) {
        if (basis.empty()) {
            if (!t.is_zero()) basis.push_back(t);
        } else if (basis.size() == 1) {
            if (t.dim == 2) {
                if (basis[0][0] * t[1] - basis[0][1] * t[0] != 0) basis.push_back(t);
            } else {
                if (!cross(basis[0], t).is_zero()) basis.push_back(t);
            }
        } else if (basis.size() == 2 && t.dim == 3) {
            if (dot(cross(basis[0], basis[1]), t) != 0) basis.push_back(t);
        }
    }
    return static_cast<int>(basis.size());
}

UnimodularMap UnimodularMap::identity(int dim) {
    UnimodularMap u;
    u.dim = dim;
    for (int i = 0; i < dim; ++i) u.m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return u;
}

UnimodularMap UnimodularMap::from_rows(const std::vector<std::vector<Int>>& rows) {
    UnimodularMap u;
    u.dim = static_cast<int>(rows.size());
    if (u.dim != 2 && u.dim != 3) throw NotUnimodular("matrix must be 2x2 or 3x3");
    for (int i = 0; i < u.dim; ++i) {
        if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != u.dim)
            throw NotUnimodular("matrix must be square");
        for (int j = 0; j < u.dim; ++j)
            u.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    return u;
}

Int UnimodularMap::det() const {
    const auto& a = m;
    if (dim == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
         - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
         + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

bool UnimodularMap::is_unimodular() const {
    Int d = det();
    return d == 1 || d == -1;
}

Vec UnimodularMap::apply_linear(const Vec& v) const {
    if (v.dim != dim) throw DimensionMismatch("map/vector dimensions differ");
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
        Int s = 0;
        for (int j = 0; j < dim; ++j) s += m[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[j];
        r[i] = s;
    }
    return r;
}

Vec UnimodularMap::apply(const Vec& v) const {
    Vec r = apply_linear(v);
    if (translation) r = r + *translation;
    return r;
}

UnimodularMap UnimodularMap::inverse() const {
    Int d = det();
    if (d != 1 && d != -1) throw NotUnimodular("matrix determinant is not +-1");
    UnimodularMap r;
    r.dim = dim;
    if (dim == 2) {
        r.m[0][0] = m[1][1] * d;
        r.m[0][1] = -m[0][1] * d;
        r.m[1][0] = -m[1][0] * d;
        r.m[1][1] = m[0][0] * d;
    } else {
        // adjugate / det with det = +-1
        auto cof = [&](int i, int j) -> Int {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            return m[static_cast<size_t>(r0)][static_cast<size_t>(c0)] * m[static_cast<size_t>(r1)][static_cast<size_t>(c1)]
                 - m[static_cast<size_t>(r0)][static_cast<size_t>(c1)] * m[static_cast<size_t>(r1)][static_cast<size_t>(c0)];
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = cof(j, i) * d;
    }
    if (translation) r.translation = -(r.apply_linear(*translation));
    return r;
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& inner) const {
    if (dim != inner.dim) throw DimensionMismatch("map dimensions differ");
    UnimodularMap r;
    r.dim = dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Int s = 0;
            for (int k = 0; k < dim; ++k)
                s += m[static_cast<size_t>(i)][static_cast<size_t>(k)] * inner.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
            r.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    if (inner.translation || translation) {
        Vec t(dim);
        if (inner.translation) t = apply_linear(*inner.translation);
        if (translation) t = t + *translation;
        r.translation = t;
    }
    return r;
}

std::vector<std::vector<Int>> UnimodularMap::rows() const {
    std::vector<std::vector<Int>> out;
    for (int i = 0; i < dim; ++i) {
        std::vector<Int> row;
        for (int j = 0; j < dim; ++j) row.push_back(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        out.push_back(std::move(row));
    }
    return out;
}

bool in_lattice(const Vec& target, const std::vector<Vec>& gens) {
    if (gens.empty()) return target.is_zero();
    int dim = gens.front().dim;
    // Row-reduce the generator matrix to Hermite form, then solve by columns.
    std::vector<std::vector<Int>> rows;
    for (const Vec& g : gens) {
        std::vector<Int> r(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) r[static_cast<size_t>(i)] = g[i];
        rows.push_back(std::move(r));
    }
    std::vector<Int> t(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) t[static_cast<size_t>(i)] = target[i];

    size_t pivot_row = 0;
    for (int col = 0; col < dim && pivot_row < rows.size(); ++col) {
        while (true) {
            size_t best = rows.size();
            for (size_t r = pivot_row; r < rows.size(); ++r)
                if (rows[r][static_cast<size_t>(col)] != 0 &&
                    (best == rows.size() ||
                     abs(rows[r][static_cast<size_t>(col)]) < abs(rows[best][static_cast<size_t>(col)])))
                    best = r;
            if (best == rows.size()) break; // column already clear below pivot
            std::swap(rows[pivot_row], rows[best]);
            bool others = false;
            for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][static_cast<size_t>(col)] == 0) continue;
                Int q = rows[r][static_cast<size_t>(col)] / rows[pivot_row][static_cast<size_t>(col)];
                for (int c2 = 0; c2 < dim; ++c2)
                    rows[r][static_cast<size_t>(c2)] -= q * rows[pivot_row][static_cast<size_t>(c2)];
                if (rows[r][static_cast<size_t>(col)] != 0) others = true;
            }
            if (!others) break;
        }
        if (rows[pivot_row][static_cast<size_t>(col)] != 0) {
            // eliminate target component at this pivot if divisible
            Int p = rows[pivot_row][static_cast<size_t>(col)];
            if (t[static_cast<size_t>(col)] % p != 0) {
                // keep going: later columns cannot fix an indivisible pivot column
                return false;
            }
            Int q = t[static_cast<size_t>(col)] / p;
            for (int c2 = 0; c2 < dim; ++c2) t[static_cast<size_t>(c2)] -= q * rows[pivot_row][static_cast<size_t>(c2)];
            ++pivot_row;
        }
    }
    for (int i = 0; i < dim; ++i)
        if (t[static_cast<size_t>(i)] != 0) return false;
    return true;
}

} // namespace lgtoric
