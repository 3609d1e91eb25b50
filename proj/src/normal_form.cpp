#include "lgtoric/polytope.hpp"

#include <algorithm>
#include <set>
#include <map>
#include <sstream>

namespace lgtoric {

namespace {

// Row-style Hermite form of a dim x n integer matrix (canonical under left
// multiplication by GL(dim,Z)): echelon pivots positive, entries above a pivot
// reduced to [0, pivot).
std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> H) {
    size_t d = H.size(), n = H[0].size();
    size_t piv = 0;
    for (size_t col = 0; col < n && piv < d; ++col) {
        while (true) {
            size_t nz = d, cnt = 0;
            for (size_t r = piv; r < d; ++r)
                if (H[r][col] != 0) {
                    ++cnt;
                    if (nz == d || abs(H[r][col]) < abs(H[nz][col])) nz = r;
                }
            if (cnt <= 1) break;
            for (size_t r = piv; r < d; ++r) {
                if (r == nz || H[r][col] == 0) continue;
                Int q = H[r][col] / H[nz][col];
                for (size_t c = 0; c < n; ++c) H[r][c] -= q * H[nz][c];
            }
        }
        size_t r0 = d;
        for (size_t r = piv; r < d; ++r)
            if (H[r][col] != 0) { r0 = r; break; }
        if (r0 == d) continue;
        std::swap(H[r0], H[piv]);
        if (H[piv][col] < 0)
            for (size_t c = 0; c < n; ++c) H[piv][c] = -H[piv][c];
        for (size_t r = 0; r < piv; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H[r][col].get_mpz_t(), H[piv][col].get_mpz_t());
            if (q != 0)
                for (size_t c = 0; c < n; ++c) H[r][c] -= q * H[piv][c];
        }
        ++piv;
    }
    return H;
}

struct SearchState {
    std::vector<size_t> rows;
    std::vector<std::vector<size_t>> groups;
};

// All (row order, column order) pairs maximizing the permuted pairing matrix
// lexicographically (row-major scan).
std::vector<std::vector<size_t>> max_vpm_column_orders(const std::vector<std::vector<Int>>& M) {
    size_t m = M.size(), n = M[0].size();
    std::vector<SearchState> states(1);
    states[0].groups.resize(1);
    for (size_t c = 0; c < n; ++c) states[0].groups[0].push_back(c);

    for (size_t depth = 0; depth < m; ++depth) {
        std::vector<Int> best;
        std::vector<std::pair<size_t, size_t>> winners; // (state index, row)
        for (size_t si = 0; si < states.size(); ++si) {
            const SearchState& st = states[si];
            for (size_t r = 0; r < m; ++r) {
                if (std::find(st.rows.begin(), st.rows.end(), r) != st.rows.end()) continue;
                std::vector<Int> vec;
                vec.reserve(n);
                for (const auto& g : st.groups) {
                    std::vector<Int> vals;
                    for (size_t c : g) vals.push_back(M[r][c]);
                    std::sort(vals.begin(), vals.end(), std::greater<Int>());
                    for (Int& v : vals) vec.push_back(std::move(v));
                }
                if (best.empty() && winners.empty()) {
                    best = vec;
                    winners = {{si, r}};
                } else {
                    int cm = 0;
                    for (size_t i = 0; i < n && cm == 0; ++i) cm = ::cmp(vec[i], best[i]);
                    if (cm > 0) {
                        best = vec;
                        winners = {{si, r}};
                    } else if (cm == 0) {
                        winners.push_back({si, r});
                    }
                }
            }
        }
        std::vector<SearchState> next;
        std::set<std::pair<std::vector<size_t>, std::vector<std::vector<size_t>>>> seen;
        for (auto [si, r] : winners) {
            const SearchState& st = states[si];
            SearchState ns;
            ns.rows = st.rows;
            ns.rows.push_back(r);
            for (const auto& g : st.groups) {
                std::map<Int, std::vector<size_t>, std::greater<Int>> by;
                for (size_t c : g) by[M[r][c]].push_back(c);
                for (auto& [v, cols] : by) ns.groups.push_back(cols);
            }
            if (seen.insert({ns.rows, ns.groups}).second) next.push_back(std::move(ns));
        }
        states = std::move(next);
    }

    std::vector<std::vector<size_t>> orders;
    std::set<std::vector<size_t>> seen;
    for (const SearchState& st : states) {
        std::vector<size_t> tau;
        for (const auto& g : st.groups)
            for (size_t c : g) tau.push_back(c);
        if (seen.insert(tau).second) orders.push_back(tau);
    }
    return orders;
}

} // namespace

std::string LatticePolytope::normal_form_hex() const {
    if (!origin_interior()) throw OriginNotInterior("origin is not strictly interior");
    size_t m = facets_.size(), n = verts_.size();
    std::vector<std::vector<Int>> M(m, std::vector<Int>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) M[i][j] = dot(facets_[i].normal, verts_[j]);

    std::string best;
    for (const auto& tau : max_vpm_column_orders(M)) {
        std::vector<std::vector<Int>> A(static_cast<size_t>(dim_), std::vector<Int>(n));
        for (size_t j = 0; j < n; ++j)
            for (int i = 0; i < dim_; ++i) A[static_cast<size_t>(i)][j] = verts_[tau[j]][i];
        auto H = hnf_rows(std::move(A));
        std::ostringstream os;
        os << "NF " << dim_ << " " << n;
        for (const auto& row : H)
            for (const Int& v : row) os << " " << v;
        std::string s = os.str();
        if (best.empty() || s < best) best = std::move(s);
    }
    static const char* hexd = "0123456789abcdef";
    std::string hex;
    hex.reserve(best.size() * 2);
    for (unsigned char ch : best) {
        hex.push_back(hexd[ch >> 4]);
        hex.push_back(hexd[ch & 15]);
    }
    return hex;
}

} // namespace lgtoric
