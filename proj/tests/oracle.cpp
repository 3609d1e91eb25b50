#include "oracle.hpp"

#include <vector>

namespace lgtoric::oracle {

LaurentPolynomial naive_power(const LaurentPolynomial& f, long i) {
    LaurentPolynomial acc = LaurentPolynomial::constant(f.dim(), 1);
    for (long k = 0; k < i; ++k) acc = mul(acc, f);
    return acc;
}

std::vector<Int> naive_periods(const LaurentPolynomial& f, long N) {
    std::vector<Int> out;
    LaurentPolynomial acc = LaurentPolynomial::constant(f.dim(), 1);
    out.push_back(1);
    for (long k = 1; k <= N; ++k) {
        acc = mul(acc, f);
        out.push_back(acc.constant_term());
    }
    return out;
}

namespace {

// p = sum lambda_i q_i with sum lambda_i = 1, lambda >= 0, over a fixed subset:
// exact rational Gaussian elimination on the (dim+1) x k system.
bool in_simplex_hull(const Vec& p, const std::vector<Vec>& q) {
    int dim = p.dim;
    size_t k = q.size();
    size_t rows = static_cast<size_t>(dim) + 1;
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(k + 1));
    for (int r = 0; r < dim; ++r) {
        for (size_t c = 0; c < k; ++c) A[static_cast<size_t>(r)][c] = Rat(q[c][r]);
        A[static_cast<size_t>(r)][k] = Rat(p[r]);
    }
    for (size_t c = 0; c <= k; ++c) A[static_cast<size_t>(dim)][c] = 1;

    std::vector<size_t> pivot_col;
    size_t pr = 0;
    for (size_t c = 0; c < k && pr < rows; ++c) {
        size_t sel = rows;
        for (size_t r = pr; r < rows; ++r)
            if (A[r][c] != 0) { sel = r; break; }
        if (sel == rows) continue;
        std::swap(A[pr], A[sel]);
        Rat inv = A[pr][c];
        for (size_t cc = 0; cc <= k; ++cc) A[pr][cc] /= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || A[r][c] == 0) continue;
            Rat f = A[r][c];
            for (size_t cc = 0; cc <= k; ++cc) A[r][cc] -= f * A[pr][cc];
        }
        pivot_col.push_back(c);
        ++pr;
    }
    for (size_t r = pr; r < rows; ++r)
        if (A[r][k] != 0) return false; // inconsistent
    if (pr < k) return false;           // underdetermined subset; a smaller one will decide
    for (size_t r = 0; r < pr; ++r)
        if (A[r][k] < 0) return false;
    return true;
}

} // namespace

bool is_extreme_point(const Vec& p, const std::vector<Vec>& others) {
    int dim = p.dim;
    size_t n = others.size();
    // Caratheodory: p lies in the hull iff it lies in the hull of some
    // affinely independent subset of size <= dim+1
    std::vector<size_t> idx;
    auto rec = [&](auto&& self, size_t start, size_t want) -> bool {
        if (idx.size() == want) {
            std::vector<Vec> sub;
            for (size_t i : idx) sub.push_back(others[i]);
            return in_simplex_hull(p, sub);
        }
        for (size_t i = start; i < n; ++i) {
            idx.push_back(i);
            if (self(self, i + 1, want)) return true;
            idx.pop_back();
        }
        return false;
    };
    for (size_t k = 1; k <= static_cast<size_t>(dim) + 1 && k <= n; ++k) {
        idx.clear();
        if (rec(rec, 0, k)) return false; // representable: not extreme
    }
    return true;
}

} // namespace lgtoric::oracle
