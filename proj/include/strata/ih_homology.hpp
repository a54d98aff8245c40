#ifndef STRATA_IH_HOMOLOGY_HPP
#define STRATA_IH_HOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "strata/chain_algebra.hpp"
#include "strata/perversity.hpp"
#include "strata/stratified_complex.hpp"

namespace strata {

// dim(s cap X^(n-k)) <= i - k + p(k) for all k = 2..n; empty intersections
// pass vacuously.
bool allowable(const StratifiedComplex& X, const Simplex& s, const Perversity& p);

// allowability of the reduced chain and its reduced boundary
bool allowable_chain(const Chain& xi, const Perversity& p);

// Integer basis of { xi in span(allowable i-simplices) : boundary xi
// allowable }, canonicalized by Hermite reduction.
std::vector<Chain> intersection_chain_basis(const StratifiedComplex& X, int degree,
                                            const Perversity& p);

// Homology with generators.  Free generators come first, then torsion
// generators in divisibility order.
struct HomologyDegree {
    int degree = 0;
    long free_rank = 0;
    std::vector<Int> torsion;      // each > 1, dividing the next
    std::vector<Chain> generators;  // free generators, then torsion generators

    // internals for expressing cycles in this basis
    std::vector<Chain> chain_basis;   // echelon basis of the chain group in this degree
    IntMatrix cycle_basis;            // columns: cycle lattice in chain-basis coordinates
    SmithForm cycle_smith;
    IntMatrix U;                      // Smith transform of the image matrix
    std::vector<Int> smith_diag;
    std::vector<std::size_t> gen_slots;  // Smith slots of the emitted generators
};

class HomologyResult {
public:
    HomologyResult() : cx_(nullptr) {}
    HomologyResult(const StratifiedComplex* cx, std::optional<Perversity> p,
                   std::vector<HomologyDegree> degrees)
        : cx_(cx), p_(std::move(p)), degrees_(std::move(degrees)) {}

    const StratifiedComplex* complex() const { return cx_; }
    const std::optional<Perversity>& perversity() const { return p_; }
    const std::vector<HomologyDegree>& degrees() const { return degrees_; }
    const HomologyDegree& at(int d) const;

    long rank(int d) const;
    const std::vector<Int>& torsion(int d) const;
    std::vector<Chain> generators(int d) const;

    // Coordinates of a cycle's class over at(d).generators: free coordinates
    // exact, torsion coordinates reduced mod the coefficient.  nullopt when
    // the chain is not a cycle of the underlying chain group.
    std::optional<std::vector<Int>> class_of(const Chain& z) const;

    std::string to_text() const;

private:
    const StratifiedComplex* cx_;
    std::optional<Perversity> p_;
    std::vector<HomologyDegree> degrees_;
};

// Intersection homology for a perversity, or ordinary homology when p is
// absent.
HomologyResult homology(const StratifiedComplex& X, const std::optional<Perversity>& p);

}  // namespace strata

#endif
