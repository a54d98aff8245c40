#ifndef STRATA_GEOM_KERNEL_HPP
#define STRATA_GEOM_KERNEL_HPP

#include <optional>
#include <vector>

#include "strata/exact_linalg.hpp"
#include "strata/stratified_complex.hpp"

namespace strata {

struct MixedMode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ModeUnsupported : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Simplices either by membership in one complex or by exact rational
// coordinate matrices (vertices as columns of points in Q^N).
struct Polyhedron {
    const StratifiedComplex* complex = nullptr;  // combinatorial mode
    std::vector<Simplex> simplices;

    std::vector<std::vector<std::vector<Rat>>> geometric;  // geometric mode: per simplex, vertex points

    bool is_combinatorial() const { return complex != nullptr; }
};

// Dimension of the common intersection of the given simplices; -1 if empty.
// Combinatorial mode: the simplex spanned by the shared vertices.  Geometric
// mode: dimension of the affine hull of the feasible set, by exact rational
// LP (relative-interior support detection + kernel rank).
int multi_intersection_dim(const Polyhedron& P);

// Max dimension of the intersection of P with the open stratum at depth d;
// -1 if the intersection is empty.  Combinatorial mode only.
int stratum_restricted_dim(const Polyhedron& P, int d);

// Exact rational LP, simplex method with Bland's rule.
// maximize c.x subject to A x = b, x >= 0.
struct LpResult {
    bool feasible = false;
    bool unbounded = false;
    Rat value;
    std::vector<Rat> point;
};
LpResult lp_maximize(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                     const std::vector<Rat>& c);

}  // namespace strata

#endif
