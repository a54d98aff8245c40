#ifndef STRATA_FIXTURES_HPP
#define STRATA_FIXTURES_HPP

#include <memory>

#include "strata/stratified_complex.hpp"

namespace strata {
namespace fixtures {

// boundary of the standard (d+1)-simplex, coherently oriented, with the
// standard-simplex vertex coordinates
std::shared_ptr<StratifiedComplex> boundary_simplex(int d);

// the 7-vertex triangulation of the torus (every pair of vertices an edge)
std::shared_ptr<StratifiedComplex> torus7();

// suspension with two cone points at depth 0, appended as the two largest
// vertex ids (north first)
std::shared_ptr<StratifiedComplex> suspension(const StratifiedComplex& X, const std::string& name);

// suspension of the 7-vertex torus: 28 tetrahedra, singular set of two points
std::shared_ptr<StratifiedComplex> suspended_torus();

// solve facet orientations for coherence by propagating across shared
// codimension-1 faces; throws if the complex is not orientable
std::vector<int> coherent_orientation(int n, const std::vector<Simplex>& facets);

}  // namespace fixtures
}  // namespace strata

#endif
