#include "lgtoric/period.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

namespace lgtoric {

namespace {

struct FacetI64 {
    std::array<std::int64_t, 3> n{};
    std::int64_t c = 0;
};

struct Pruner {
    bool active = false;
    bool origin_interior = false;
    int dim = 3;
    std::vector<FacetI64> facets;

    // is -e reachable in exactly m more factors, i.e. -e in m * Newton(f)?
    bool member_scaled(const ExpVec& e, long m) const {
        for (const FacetI64& f : facets) {
            std::int64_t v = 0;
            for (int i = 0; i < dim; ++i) v += f.n[static_cast<size_t>(i)] * e[i];
            if (v > f.c * m) return false;
        }
        return true;
    }

    bool keep(const ExpVec& e, long remaining) const {
        if (!active) return true;
        if (e.is_zero()) return true; // constant terms are read out, never pruned
        if (remaining == 0) return false;
        if (origin_interior) return member_scaled(e, remaining);
        for (long m = 1; m <= remaining; ++m)
            if (member_scaled(e, m)) return true;
        return false;
    }
};

Pruner make_pruner(const LaurentPolynomial& f) {
    Pruner p;
    p.dim = f.dim();
    constexpr long cap = 1000000; // keeps the scaled dot products inside int64
    try {
        LatticePolytope nt = f.newton_polytope();
        for (const Facet& fc : nt.facets()) {
            FacetI64 g;
            for (int i = 0; i < p.dim; ++i) {
                if (!fc.normal[i].fits_slong_p()) return p; // stay unpruned
                g.n[static_cast<size_t>(i)] = fc.normal[i].get_si();
                if (std::abs(g.n[static_cast<size_t>(i)]) > cap) return p;
            }
            if (!fc.offset.fits_slong_p()) return p;
            g.c = fc.offset.get_si();
            if (std::abs(g.c) > cap) return p;
            p.facets.push_back(g);
        }
        p.origin_interior = nt.origin_interior();
        p.active = true;
    } catch (const DegenerateInput&) {
        // low-dimensional support: powering stays cheap without pruning
    }
    return p;
}

using TermVec = std::vector<std::pair<ExpVec, Int>>;

void sort_fold(TermVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t r = 0; r < v.size();) {
        size_t r2 = r + 1;
        Int sum = std::move(v[r].second);
        while (r2 < v.size() && v[r2].first == v[r].first) {
            sum += v[r2].second;
            ++r2;
        }
        if (sum != 0) {
            v[w].first = v[r].first;
            v[w].second = std::move(sum);
            ++w;
        }
        r = r2;
    }
    v.resize(w);
}

TermVec multiply_step(const TermVec& acc, const TermVec& f, const Pruner& pr, long remaining,
                      bool parallel) {
    TermVec out;
#ifdef _OPENMP
    if (parallel && acc.size() >= 64) {
        std::vector<TermVec> partial;
#pragma omp parallel
        {
#pragma omp single
            partial.resize(static_cast<size_t>(omp_get_num_threads()));
            TermVec& local = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (long ai = 0; ai < static_cast<long>(acc.size()); ++ai) {
                for (const auto& [eb, cb] : f) {
                    ExpVec e = acc[static_cast<size_t>(ai)].first + eb;
                    if (!pr.keep(e, remaining)) continue;
                    local.emplace_back(e, acc[static_cast<size_t>(ai)].second * cb);
                }
            }
        }
        size_t total = 0;
        for (const TermVec& p : partial) total += p.size();
        out.reserve(total);
        for (TermVec& p : partial)
            for (auto& t : p) out.push_back(std::move(t));
        sort_fold(out);
        return out;
    }
#else
    (void)parallel;
#endif
    out.reserve(acc.size() * f.size() / 2 + 1);
    for (const auto& [ea, ca] : acc)
        for (const auto& [eb, cb] : f) {
            ExpVec e = ea + eb;
            if (!pr.keep(e, remaining)) continue;
            out.emplace_back(e, ca * cb);
        }
    sort_fold(out);
    return out;
}

} // namespace

PeriodSequence period_sequence(const LaurentPolynomial& f, long N, const PeriodOptions& opts) {
    if (N < 0) throw Error("negative depth");
    if (N > 100000) throw Error("depth too large");
    std::string hash = f.content_hash();
    if (!opts.cache_dir.empty()) {
        PeriodSequence cached;
        if (cache_load(opts.cache_dir, hash, cached) && cached.depth >= N) {
            cached.values.resize(static_cast<size_t>(N) + 1);
            cached.depth = N;
            return cached;
        }
    }

    PeriodSequence out;
    out.source_hash = hash;
    out.depth = N;
    out.values.assign(static_cast<size_t>(N) + 1, Int(0));
    out.values[0] = 1;

    Pruner pr = make_pruner(f);
    TermVec fv;
    for (const auto& [e, c] : f.terms()) fv.emplace_back(e, c);

    TermVec acc;
    acc.emplace_back(ExpVec(f.dim()), Int(1));
    for (long k = 1; k <= N; ++k) {
        acc = multiply_step(acc, fv, pr, N - k, opts.parallel);
        ExpVec zero(f.dim());
        auto it = std::lower_bound(acc.begin(), acc.end(), zero,
                                   [](const auto& a, const ExpVec& e) { return a.first < e; });
        if (it != acc.end() && it->first == zero) out.values[static_cast<size_t>(k)] = it->second;
        if (acc.empty()) break;
    }

    if (!opts.cache_dir.empty()) cache_store(opts.cache_dir, out);
    return out;
}

PeriodEqual period_equal(const LaurentPolynomial& f, const LaurentPolynomial& g, long N,
                         const PeriodOptions& opts) {
    if (f.dim() != g.dim()) throw DimensionMismatch("polynomial dimensions differ");
    PeriodSequence a = period_sequence(f, N, opts);
    PeriodSequence b = period_sequence(g, N, opts);
    for (long i = 0; i <= N; ++i)
        if (a.values[static_cast<size_t>(i)] != b.values[static_cast<size_t>(i)])
            return {false, i};
    return {true, -1};
}

ReferenceCheck check_reference(const LaurentPolynomial& f, const std::vector<Int>& ref,
                               const PeriodOptions& opts) {
    ReferenceCheck out;
    if (ref.empty()) {
        out.length_warning = true;
        return out; // vacuous pass
    }
    long n = static_cast<long>(ref.size()) - 1;
    PeriodSequence seq = period_sequence(f, n, opts);
    out.compared = n + 1;
    for (long i = 0; i <= n; ++i)
        if (seq.values[static_cast<size_t>(i)] != ref[static_cast<size_t>(i)]) {
            out.mismatches.push_back(i);
            out.pass = false;
        }
    return out;
}

std::vector<long> forced_zero_indices(const LaurentPolynomial& f, long N) {
    std::vector<long> out;
    if (f.is_zero()) return out;
    std::vector<Vec> exps;
    for (const auto& [e, c] : f.terms()) exps.push_back(e.to_vec());
    Vec base = exps.front();
    std::vector<Vec> gens;
    for (size_t i = 1; i < exps.size(); ++i) gens.push_back(exps[i] - base);
    for (long i = 1; i <= N; ++i) {
        // a_i can be nonzero only if 0 = sum of i exponents, i.e. -i*base in the
        // difference lattice
        if (!in_lattice(base.scaled(Int(-i)), gens)) out.push_back(i);
    }
    return out;
}

bool cache_load(const std::string& dir, const std::string& hash, PeriodSequence& out) {
    std::filesystem::path p = std::filesystem::path(dir) / (hash + ".json");
    std::ifstream in(p);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
        out.depth = j.at("N").get<long>();
        out.values.clear();
        for (const auto& v : j.at("values")) out.values.emplace_back(v.get<std::string>());
        out.source_hash = hash;
    } catch (...) {
        return false; // tolerate corrupt or missing entries
    }
    return static_cast<long>(out.values.size()) == out.depth + 1;
}

void cache_store(const std::string& dir, const PeriodSequence& seq) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    nlohmann::json j;
    j["N"] = seq.depth;
    std::vector<std::string> vals;
    for (const Int& v : seq.values) vals.push_back(v.get_str());
    j["values"] = vals;
    std::filesystem::path fin = std::filesystem::path(dir) / (seq.source_hash + ".json");
    std::filesystem::path tmp = fin;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream o(tmp);
        o << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, fin, ec); // atomic replace on POSIX
    if (ec) std::filesystem::remove(tmp, ec);
}

} // namespace lgtoric
