#ifndef STRATA_STRATIFIED_COMPLEX_HPP
#define STRATA_STRATIFIED_COMPLEX_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strata/exact_linalg.hpp"

namespace strata {

using Simplex = std::vector<int>;  // sorted vertex ids; the sorted tuple is the positive generator

struct UnknownSimplex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotValidated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string simplex_to_string(const Simplex& s);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string to_text() const;
};

// Finite simplicial complex with a skeleton filtration (per-simplex depth),
// facet orientations, and optional exact rational vertex coordinates.
//
// depth(s) is the least m with s contained in the m-skeleton X^m; the
// interior of s lies in the open stratum of that index.  Defaults to n,
// overridden per simplex at construction.
class StratifiedComplex {
public:
    StratifiedComplex(std::string name, int n, int vertex_count,
                      std::vector<Simplex> facets, std::vector<int> orientations,
                      std::map<Simplex, int> depth_overrides = {},
                      std::vector<std::vector<Rat>> coords = {});

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    int vertex_count() const { return vertex_count_; }

    const std::vector<Simplex>& facets() const { return facets_; }
    int orientation(const Simplex& facet) const;

    bool has_simplex(const Simplex& s) const;
    int depth(const Simplex& s) const;
    // all simplices of dimension d, sorted
    const std::vector<Simplex>& simplices(int d) const;
    std::size_t simplex_count() const;

    bool has_coords() const { return !coords_.empty(); }
    const std::vector<std::vector<Rat>>& coords() const { return coords_; }

    // depth values actually realized by some simplex, ascending
    const std::vector<int>& realized_depths() const { return realized_depths_; }

    // max over faces t <= s with depth(t) <= m of dim(t); -1 if none
    int skeleton_intersection_dim(const Simplex& s, int m) const;
    // max over faces t <= s with depth(t) == d of dim(t); -1 if none:
    // the dimension of the intersection with the open stratum at depth d
    int open_stratum_dim(const Simplex& s, int d) const;

    ValidationReport validate() const;
    bool validated() const;  // cached validate().ok()

private:
    std::string name_;
    int n_;
    int vertex_count_;
    std::vector<Simplex> facets_;
    std::map<Simplex, int> facet_orientation_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<Simplex, int> depth_;
    std::vector<std::vector<Rat>> coords_;
    std::vector<int> realized_depths_;
    mutable std::optional<bool> validated_;
};

// common face of two simplices of one complex (simplex on the shared vertices)
Simplex common_face(const Simplex& a, const Simplex& b);

// dimension of the (possibly empty) common face of several simplices; -1 if empty
int combinatorial_intersection_dim(const std::vector<Simplex>& simplices);

// First barycentric subdivision.  Depth is inherited from the top element of
// each flag; orientations come from the subdivision chain operator, so the
// subdivided fundamental cycle is the subdivision of the original one.
// Barycenter ids are assigned by (dimension descending, simplex lex).
struct Subdivision {
    std::shared_ptr<StratifiedComplex> complex;
    std::map<Simplex, int> barycenter;                 // original simplex -> new vertex id
    // original facet -> list of (flag facet, sign) in the subdivided complex
    std::map<Simplex, std::vector<std::pair<Simplex, int>>> facet_pieces;
};
Subdivision barycentric_subdivide(const StratifiedComplex& X);

// k-fold product with the staircase (shuffle) triangulation under the
// lexicographic order on vertex tuples.  Product simplices are chains in the
// coordinatewise partial order; the stratum tuple of a cell is the tuple of
// depths of its coordinate carriers.
class ProductComplex : public StratifiedComplex {
public:
    ProductComplex(std::string name, int n, int vertex_count, std::vector<Simplex> facets,
                   std::vector<int> orientations, std::map<Simplex, int> depths,
                   const StratifiedComplex* base, int k, std::vector<std::vector<int>> tuples);

    const StratifiedComplex& base() const { return *base_; }
    int factors() const { return k_; }

    const std::vector<int>& tuple_of_vertex(int v) const { return tuples_[v]; }
    int vertex_of_tuple(const std::vector<int>& t) const;

    // sorted set of i-th coordinates of the cell's vertex tuples (a simplex of the base)
    Simplex carrier(const Simplex& s, int i) const;
    std::vector<int> stratum_tuple(const Simplex& s) const;

private:
    const StratifiedComplex* base_;
    int k_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> tuple_index_;
};

std::shared_ptr<ProductComplex> product_complex(const StratifiedComplex& X, int k,
                                                std::size_t max_facets = 200000);

}  // namespace strata

#endif
