#include <doctest.h>

#include <random>

#include "lgtoric/json_io.hpp"
#include "lgtoric/mutation.hpp"
#include "lgtoric/period.hpp"
#include "oracle.hpp"

using namespace lgtoric;

namespace {

PeriodOptions serial() {
    PeriodOptions o;
    o.parallel = false;
    return o;
}

MutationData decomposition(const std::string& g1, const std::string& g2, const std::string& g3,
                           const std::string& g4, int pivot = 0) {
    MutationData d(3);
    d.pivot = pivot;
    d.g1 = parse_laurent(g1);
    d.g2 = parse_laurent(g2);
    d.g3 = parse_laurent(g3);
    d.g4 = parse_laurent(g4);
    return d;
}

const char* P1 = "x*y + x*z + x*y*z + x/y + x/z + x + 1/x";
const char* P3 = "x*y + x*z + x*y*z + x/y + x/z + x/(y*z) + 2*x + 1/x";
const char* P4 = "x*y + x*z + x*y*z + x/y + x/z + x/(y*z) + 3*x + 1/x";

// g1 and g2 coincide up to sign and a monomial factor
bool same_up_to_unit(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.support_size() != b.support_size()) return false;
    const auto& [ea, ca] = *a.terms().begin();
    const auto& [eb, cb] = *b.terms().begin();
    for (const Int& sign : {Int(1), Int(-1)}) {
        if (ca * sign != cb) continue;
        LaurentPolynomial shifted = a.mul_monomial(sign, eb + (-ea));
        if (shifted == b) return true;
    }
    return false;
}

} // namespace

TEST_CASE("worked decomposition of p1 validates and mutates to p2") {
    LaurentPolynomial p1 = parse_laurent(P1);
    MutationData d = decomposition("z + z/y + 1", "y + 1/z", "0", "1");
    CHECK(validate_decomposition(p1, d));
    LaurentPolynomial p2 = mutate(p1, d);
    CHECK(p2 == parse_laurent("x*(z + z/y + 1) + (y + 1/z)/x"));
    CHECK(period_equal(p1, p2, 10, serial()).equal);
    // the move changes the Newton polytope here
    CHECK_FALSE(p1.newton_polytope() == p2.newton_polytope());
}

TEST_CASE("mismatched data is rejected") {
    LaurentPolynomial f1 = parse_laurent("x + y + z + 1/(x*y*z)");
    MutationData d = decomposition("1", "y + z + 1", "0", "1/(y*z)");
    CHECK_FALSE(validate_decomposition(f1, d));
    CHECK_THROWS_AS(mutate(f1, d), InvalidDecomposition);

    MutationData zero = decomposition("0", "y", "0", "1");
    CHECK_FALSE(validate_decomposition(parse_laurent("x*y + 1/x"), zero));

    CHECK_THROWS_AS(validate_decomposition(parse_laurent("x^2 + 1/x"), d),
                    PivotExponentOutOfRange);
}

TEST_CASE("g2 = 1 leaves the polynomial unchanged") {
    LaurentPolynomial p1 = parse_laurent(P1);
    MutationData d = decomposition("(z + z/y + 1)*(y + 1/z)", "1", "0", "1");
    CHECK(validate_decomposition(p1, d));
    CHECK(mutate(p1, d) == p1);
}

TEST_CASE("worked decompositions of p3 and p4") {
    LaurentPolynomial p3 = parse_laurent(P3);
    MutationData d3 = decomposition("((y*z + 1)/z/y)*(y + 1)", "z + 1", "0", "1");
    CHECK(validate_decomposition(p3, d3));
    LaurentPolynomial m3 = mutate(p3, d3);
    CHECK(m3 == parse_laurent("x*((y*z + 1)/z/y)*(y + 1) + (z + 1)/x"));
    CHECK(period_equal(p3, m3, 10, serial()).equal);

    LaurentPolynomial p4 = parse_laurent(P4);
    MutationData d4 = decomposition("(y*z + z + 1)/y/z", "y*z + y + 1", "0", "1");
    CHECK(validate_decomposition(p4, d4));
    LaurentPolynomial m4 = mutate(p4, d4);
    CHECK(period_equal(p4, m4, 10, serial()).equal);

    // the two cone polynomials model different varieties
    CHECK_FALSE(period_equal(p3, p4, 10, serial()).equal);
}

TEST_CASE("search finds the worked decomposition of p1") {
    LaurentPolynomial p1 = parse_laurent(P1);
    std::vector<MutationData> found = find_decompositions(p1, 0, 6);
    CHECK(!found.empty());
    LaurentPolynomial g1 = parse_laurent("z + z/y + 1");
    LaurentPolynomial g2 = parse_laurent("y + 1/z");
    bool has = false;
    for (const MutationData& d : found) {
        CHECK(validate_decomposition(p1, d));
        CHECK(period_equal(p1, mutate(p1, d), 10, serial()).equal);
        if (same_up_to_unit(d.g1, g1) && same_up_to_unit(d.g2, g2)) has = true;
    }
    CHECK(has);
}

TEST_CASE("search on trivial and empty inputs") {
    std::vector<MutationData> triv = find_decompositions(parse_laurent("x + 1/x"), 0, 8);
    REQUIRE(triv.size() == 1);
    CHECK(triv[0].g1 == LaurentPolynomial::constant(3, 1));
    CHECK(triv[0].g2 == LaurentPolynomial::constant(3, 1));
    CHECK(mutate(parse_laurent("x + 1/x"), triv[0]) == parse_laurent("x + 1/x"));

    CHECK(find_decompositions(parse_laurent("y + 1/y"), 0, 8).empty());
}

TEST_CASE("search recovers planted factorizations") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> e(-1, 1), c(1, 3), pick(0, 2);
    int recovered = 0, trials = 0;
    for (int iter = 0; iter < 25; ++iter) {
        LaurentPolynomial g1(3), g2(3), g3(3), g4(3);
        auto fill = [&](LaurentPolynomial& g, int nterms) {
            for (int i = 0; i < nterms; ++i) {
                ExpVec ev(3);
                ev[1] = e(rng);
                ev[2] = e(rng);
                g.set(ev, Int(c(rng)));
            }
            if (g.is_zero()) g.set(ExpVec(3), Int(1));
        };
        fill(g1, 2 + pick(rng));
        fill(g2, 2);
        fill(g3, pick(rng));
        fill(g4, 1 + pick(rng) % 2);
        LaurentPolynomial f(3);
        {
            ExpVec up(3), down(3);
            up[0] = 1;
            down[0] = -1;
            f = add(add(mul(g1, g2).mul_monomial(Int(1), up), g3),
                    g4.mul_monomial(Int(1), down));
        }
        ++trials;
        std::vector<MutationData> found = find_decompositions(f, 0, 8);
        bool has = false;
        for (const MutationData& d : found) {
            CHECK(validate_decomposition(f, d));
            if ((same_up_to_unit(d.g1, g1) && same_up_to_unit(d.g2, g2)) ||
                (same_up_to_unit(d.g1, g2) && same_up_to_unit(d.g2, g1)))
                has = true;
        }
        if (has) ++recovered;
    }
    // the planted pair must be recovered (up to units) in every trial
    CHECK(recovered == trials);
}

TEST_CASE("reverse move through a conjugation recovers the periods of p1") {
    LaurentPolynomial p1 = parse_laurent(P1);
    LaurentPolynomial p2 = parse_laurent("x*(z + z/y + 1) + (y + 1/z)/x");

    // mutating p2 with g1' = g1, g2' = 1 returns p2 unchanged
    MutationData keep = decomposition("z + z/y + 1", "1", "0", "y + 1/z");
    CHECK(validate_decomposition(p2, keep));
    CHECK(mutate(p2, keep) == p2);

    // with the pivot reversed (x -> 1/x) the factors swap and the move undoes itself
    UnimodularMap flip = UnimodularMap::from_rows(
        {{Int(-1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}});
    MutationData rev = decomposition("1", "y + 1/z", "0", "z + z/y + 1");
    rev.conjugation = flip;
    CHECK(validate_decomposition(p2, rev));
    LaurentPolynomial back = mutate(p2, rev);
    CHECK(period_equal(back, p1, 10, serial()).equal);
}

TEST_CASE("mutation data serialization round trip") {
    MutationData d = decomposition("z + z/y + 1", "y + 1/z", "0", "1");
    d.conjugation = UnimodularMap::identity(3);
    MutationData back = mutation_from_json(mutation_to_json(d));
    CHECK(back.pivot == d.pivot);
    CHECK(back.g1 == d.g1);
    CHECK(back.g2 == d.g2);
    CHECK(back.g3 == d.g3);
    CHECK(back.g4 == d.g4);
    CHECK(back.conjugation.has_value());
}
