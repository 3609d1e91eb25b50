#pragma once

#include <optional>
#include <vector>

#include "lgtoric/laurent.hpp"

namespace lgtoric {

/// Decomposition data for the move  f = x*g1*g2 + g3 + g4/x  ->  x*g1 + g3 + g2*g4/x,
/// where x is the pivot coordinate. An optional conjugation maps f into pivot
/// position first; the mutated result is mapped back.
struct MutationData {
    int pivot = 0;
    LaurentPolynomial g1, g2, g3, g4;
    std::optional<UnimodularMap> conjugation;

    MutationData(int dim = 3) : g1(dim), g2(dim), g3(dim), g4(dim) {}
};

/// True iff f equals x*g1*g2 + g3 + g4/x exactly (after conjugation, if any).
/// Throws PivotExponentOutOfRange when f has pivot exponents outside {-1,0,1}.
bool validate_decomposition(const LaurentPolynomial& f, const MutationData& d);

/// Applies the move; throws InvalidDecomposition unless validate passes.
LaurentPolynomial mutate(const LaurentPolynomial& f, const MutationData& d);

/// Enumerates decompositions of f's pivot-level +1 part into g1*g2, with each
/// factor's support bounded by max_support. Searches candidate Newton-polytope
/// summand pairs exhaustively and solves the coefficients exactly.
std::vector<MutationData> find_decompositions(const LaurentPolynomial& f, int pivot,
                                              int max_support = 8);

} // namespace lgtoric
