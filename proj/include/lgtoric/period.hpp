#pragma once

#include <string>
#include <vector>

#include "lgtoric/laurent.hpp"

namespace lgtoric {

struct PeriodOptions {
    bool parallel = true;      // OpenMP in the powering kernel
    std::string cache_dir;     // empty: cache disabled
};

struct PeriodSequence {
    std::vector<Int> values;   // a_0 .. a_N
    std::string source_hash;
    long depth = 0;
};

/// values[i] = constant term of f^i for i = 0..N, computed exactly with
/// pruned powering: after k factors a term e survives only if -e can still be
/// reached by the remaining i-k factors, tested on the scaled Newton facets.
PeriodSequence period_sequence(const LaurentPolynomial& f, long N, const PeriodOptions& opts = {});

struct PeriodEqual {
    bool equal = true;
    long first_mismatch = -1;
};
PeriodEqual period_equal(const LaurentPolynomial& f, const LaurentPolynomial& g, long N,
                         const PeriodOptions& opts = {});

struct ReferenceCheck {
    bool pass = true;
    bool length_warning = false;
    long compared = 0;
    std::vector<long> mismatches;
};
ReferenceCheck check_reference(const LaurentPolynomial& f, const std::vector<Int>& ref,
                               const PeriodOptions& opts = {});

/// Indices i in [0, N] for which the exponent-lattice congruence already
/// forces a_i = 0 (zero cannot be written as a sum of i exponents).
std::vector<long> forced_zero_indices(const LaurentPolynomial& f, long N);

// cache plumbing (advisory; atomic file replace)
bool cache_load(const std::string& dir, const std::string& hash, PeriodSequence& out);
void cache_store(const std::string& dir, const PeriodSequence& seq);

} // namespace lgtoric
