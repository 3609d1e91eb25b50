#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <unistd.h>

#include "lgtoric/period.hpp"
#include "oracle.hpp"

using namespace lgtoric;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

PeriodOptions serial() {
    PeriodOptions o;
    o.parallel = false;
    return o;
}

} // namespace

TEST_CASE("period prefixes of the two root polynomials") {
    LaurentPolynomial f1 = parse_laurent("x + y + z + 1/(x*y*z)");
    PeriodSequence s = period_sequence(f1, 8, serial());
    CHECK(s.values == ints({1, 0, 0, 0, 24, 0, 0, 0, 2520}));
    CHECK(s.values == oracle::naive_periods(f1, 8));

    LaurentPolynomial f25 = parse_laurent("x + y + z + 1/(x*y) + 1/(y*z)");
    CHECK(period_sequence(f25, 3, serial()).values == ints({1, 0, 0, 12}));
    CHECK(oracle::naive_periods(f25, 3) == ints({1, 0, 0, 12}));
}

TEST_CASE("a single monomial never returns to the constant") {
    PeriodSequence s = period_sequence(parse_laurent("x"), 5, serial());
    CHECK(s.values == ints({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("pruning stays sound when the origin is not interior to the Newton polytope") {
    // origin on the boundary: central binomial constants survive
    LaurentPolynomial f = parse_laurent("x + 1/x + y", 2);
    PeriodSequence s = period_sequence(f, 6, serial());
    CHECK(s.values == ints({1, 0, 2, 0, 6, 0, 20}));
    CHECK(s.values == oracle::naive_periods(f, 6));

    // origin strictly outside: everything past a_0 vanishes
    LaurentPolynomial g = parse_laurent("x + y + z + x*y*z");
    CHECK(period_sequence(g, 5, serial()).values == oracle::naive_periods(g, 5));
    CHECK(period_sequence(g, 5, serial()).values == ints({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("parallel kernel matches the serial kernel") {
    for (const char* e : {"x + y + z + 1/(x*y*z) + 1/x",
                          "(x + y + z + 1)^4/(x*y*z)",
                          "2*x + y - z + 3/(x*y) + 1/(y*z) - 1/(x*y*z)"}) {
        LaurentPolynomial f = parse_laurent(e);
        PeriodOptions par;
        par.parallel = true;
        CHECK(period_sequence(f, 10, par).values == period_sequence(f, 10, serial()).values);
    }
}

TEST_CASE("pruned engine equals the naive oracle on sample rows") {
    for (const char* e :
         {"x + y + z + 1/(x*y*z) + 1/x + 1/y + 1/(y*z)",
          "x + y + 2*z + 1/(x*y*z) + 2/x + 2/y + 1/z + y*z/x + x*z/y",
          "(y + z + 1)^2*((y + z + 1)^2 + 2*x*(y + z + 1) + x^2)/(x*y*z) - 12"}) {
        LaurentPolynomial f = parse_laurent(e);
        CHECK(period_sequence(f, 6, serial()).values == oracle::naive_periods(f, 6));
    }
}

TEST_CASE("period_equal") {
    LaurentPolynomial p1 = parse_laurent("x*y + x*z + x*y*z + x/y + x/z + x + 1/x");
    LaurentPolynomial f2 = parse_laurent("x + y + z + 1/(x*y*z) + 1/x");
    CHECK(period_equal(p1, p1, 8).equal);
    PeriodEqual pe = period_equal(p1, f2, 10);
    CHECK(pe.equal);

    LaurentPolynomial p3 =
        parse_laurent("x*y + x*z + x*y*z + x/y + x/z + x/(y*z) + 2*x + 1/x");
    LaurentPolynomial p4 =
        parse_laurent("x*y + x*z + x*y*z + x/y + x/z + x/(y*z) + 3*x + 1/x");
    PeriodEqual ne = period_equal(p3, p4, 10);
    CHECK_FALSE(ne.equal);
    CHECK(ne.first_mismatch == 2);
}

TEST_CASE("reference checks") {
    LaurentPolynomial f1 = parse_laurent("x + y + z + 1/(x*y*z)");
    ReferenceCheck ok = check_reference(f1, ints({1, 0, 0, 0, 24}));
    CHECK(ok.pass);
    CHECK_FALSE(ok.length_warning);
    CHECK(ok.compared == 5);

    ReferenceCheck bad = check_reference(f1, ints({1, 0, 0, 0, 23}));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.mismatches.size() == 1);
    CHECK(bad.mismatches[0] == 4);

    ReferenceCheck empty = check_reference(f1, {});
    CHECK(empty.pass);
    CHECK(empty.length_warning);
}

TEST_CASE("support congruences force zeros") {
    LaurentPolynomial f1 = parse_laurent("x + y + z + 1/(x*y*z)");
    std::vector<long> z1 = forced_zero_indices(f1, 8);
    CHECK(z1 == std::vector<long>{1, 2, 3, 5, 6, 7});

    LaurentPolynomial f25 = parse_laurent("x + y + z + 1/(x*y) + 1/(y*z)");
    std::vector<long> z25 = forced_zero_indices(f25, 6);
    CHECK(z25 == std::vector<long>{1, 2, 4, 5});

    for (const auto* f : {&f1, &f25}) {
        PeriodSequence s = period_sequence(*f, 8, serial());
        for (long i : forced_zero_indices(*f, 8))
            CHECK(s.values[static_cast<size_t>(i)] == 0);
    }
}

TEST_CASE("period is invariant under monomial substitution") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> entry(-3, 3);
    LaurentPolynomial f = parse_laurent("x + y + z + 1/(x*y*z) + 1/x + 1/y");
    PeriodSequence base = period_sequence(f, 8, serial());
    for (int iter = 0; iter < 20; ++iter) {
        UnimodularMap u = UnimodularMap::identity(3);
        for (int s = 0; s < 6; ++s) {
            int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
            if (a == b) continue;
            UnimodularMap sh = UnimodularMap::identity(3);
            sh.m[static_cast<size_t>(a)][static_cast<size_t>(b)] = entry(rng);
            u = u.compose(sh);
        }
        CHECK(period_sequence(f.substitute_monomial(u), 8, serial()).values == base.values);
    }
}

TEST_CASE("cache stores and reuses sequences") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / ("lgtoric_cache_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    PeriodOptions o;
    o.parallel = false;
    o.cache_dir = dir.string();

    LaurentPolynomial f = parse_laurent("x + y + z + 1/(x*y*z) + 1/x");
    PeriodSequence a = period_sequence(f, 8, o);
    CHECK(std::filesystem::exists(dir / (f.content_hash() + ".json")));

    PeriodSequence b = period_sequence(f, 5, o); // shorter: served from the cache
    CHECK(std::vector<Int>(a.values.begin(), a.values.begin() + 6) == b.values);

    PeriodSequence c = period_sequence(f, 10, o); // deeper: recomputed and stored
    PeriodSequence loaded;
    REQUIRE(cache_load(o.cache_dir, f.content_hash(), loaded));
    CHECK(loaded.depth == 10);
    CHECK(loaded.values == c.values);

    // deleting the cache is always safe
    std::filesystem::remove_all(dir);
    CHECK(period_sequence(f, 4, o).values ==
          std::vector<Int>(a.values.begin(), a.values.begin() + 5));
    std::filesystem::remove_all(dir);
}
