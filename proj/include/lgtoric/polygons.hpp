#pragma once

#include <string>
#include <vector>

#include "lgtoric/polytope.hpp"

namespace lgtoric {

/// GL(2,Z)-class of a reflexive polygon (fan polytope of a toric del Pezzo
/// surface with canonical singularities).
struct PolygonClass {
    LatticePolytope representative; // reflexive, the concrete polygon found
    std::string nf_hex;             // class key
    long degree = 0;                // normalized area of the dual
};

/// All reflexive polygons up to GL(2,Z): exhaustive search over lattice
/// polygons with the origin as their only interior point, vertices inside
/// [-3,3]^2, grown from triangles and quadrilaterals by vertex addition.
/// Result is sorted by (degree descending, normal form); the count is checked
/// to be 16 and every class representative lies inside the box.
std::vector<PolygonClass> enumerate_reflexive_polygons();

/// Blow-up of the smooth torus-fixed point spanned by adjacent vertices
/// (v1, v2): adds the vertex v1+v2. Throws SingularFixedPoint when
/// |det(v1,v2)| != 1 and LeavesCanonicalFamily if the result is not reflexive.
LatticePolytope polygon_blowup(const LatticePolytope& P, const Vec& v1, const Vec& v2);

long polygon_degree(const LatticePolytope& P); // normalized area of the dual

struct DelPezzoGraph {
    std::vector<PolygonClass> nodes;
    std::vector<std::pair<int, int>> edges; // node indices, parallel edges collapsed
    std::vector<char> reachable_from_p2;    // per node
    std::vector<char> reachable_from_roots; // P^2 plus the degree-8 classes
};

DelPezzoGraph build_del_pezzo_graph();

std::string del_pezzo_dot(const DelPezzoGraph& g);

} // namespace lgtoric
