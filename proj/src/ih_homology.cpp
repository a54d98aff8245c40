#include "strata/ih_homology.hpp"

#include <sstream>

namespace strata {

bool allowable(const StratifiedComplex& X, const Simplex& s, const Perversity& p) {
    if (p.n() != X.n()) throw DimensionMismatch("allowable: perversity n differs from complex n");
    const int i = static_cast<int>(s.size()) - 1;
    for (int k = 2; k <= X.n(); ++k) {
        int d = X.skeleton_intersection_dim(s, X.n() - k);
        if (d < 0) continue;  // empty intersection
        if (d > i - k + p(k)) return false;
    }
    return true;
}

bool allowable_chain(const Chain& xi, const Perversity& p) {
    const StratifiedComplex& X = *xi.complex();
    for (const auto& [s, c] : xi.terms())
        if (!allowable(X, s, p)) return false;
    Chain b = xi.boundary();
    for (const auto& [s, c] : b.terms())
        if (!allowable(X, s, p)) return false;
    return true;
}

std::vector<Chain> intersection_chain_basis(const StratifiedComplex& X, int degree,
                                            const Perversity& p) {
    if (!X.validated()) throw NotValidated("intersection_chain_basis: complex fails validation");
    std::vector<Simplex> allowed;
    for (const auto& s : X.simplices(degree))
        if (allowable(X, s, p)) allowed.push_back(s);

    std::vector<Simplex> blocked;  // non-allowable simplices one degree down
    std::map<Simplex, std::size_t> blocked_index;
    if (degree >= 1)
        for (const auto& s : X.simplices(degree - 1))
            if (!allowable(X, s, p)) {
                blocked_index[s] = blocked.size();
                blocked.push_back(s);
            }

    // kernel of: allowable span -> C_(degree-1) / allowable span
    IntMatrix Q(blocked.size(), allowed.size());
    for (std::size_t j = 0; j < allowed.size(); ++j) {
        const Simplex& s = allowed[j];
        for (std::size_t a = 0; a < s.size(); ++a) {
            Simplex face = s;
            face.erase(face.begin() + a);
            if (face.empty()) continue;
            auto it = blocked_index.find(face);
            if (it != blocked_index.end()) Q(it->second, j) += (a % 2 == 0) ? 1 : -1;
        }
    }
    auto kernel = kernel_basis(Q);

    IntMatrix rows(kernel.size(), allowed.size());
    for (std::size_t i = 0; i < kernel.size(); ++i)
        for (std::size_t j = 0; j < allowed.size(); ++j) rows(i, j) = kernel[i][j];
    IntMatrix canon = hermite_row_basis(rows);

    // rows of the Hermite basis are in echelon order: the leading simplex of
    // each chain is its pivot, which makes membership solves back-substitution
    std::vector<Chain> basis;
    for (std::size_t i = 0; i < canon.rows(); ++i) {
        Chain c(&X, degree);
        for (std::size_t j = 0; j < allowed.size(); ++j)
            if (canon(i, j) != 0) c.add(allowed[j], canon(i, j));
        basis.push_back(std::move(c));
    }
    return basis;
}

namespace {

// coordinates over an echelon basis (increasing leading simplices)
std::optional<std::vector<Int>> echelon_coordinates(const std::vector<Chain>& basis,
                                                    const Chain& z) {
    std::vector<Int> coords(basis.size());
    Chain residual = z;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto& lead = *basis[j].terms().begin();
        Int c = residual.coefficient(lead.first);
        if (c == 0) continue;
        if (c % lead.second != 0) return std::nullopt;
        Int q = c / lead.second;
        coords[j] = q;
        residual += basis[j] * (-q);
    }
    if (!residual.empty()) return std::nullopt;
    return coords;
}

std::optional<std::vector<Int>> smith_solve(const SmithForm& f, std::size_t cols,
                                            const std::vector<Int>& b) {
    std::vector<Int> c = f.U.apply(b);
    std::vector<Int> y(cols);
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int d = i < f.diag.size() ? f.diag[i] : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return f.V.apply(y);
}

}  // namespace

const HomologyDegree& HomologyResult::at(int d) const {
    for (const auto& hd : degrees_)
        if (hd.degree == d) return hd;
    throw std::out_of_range("HomologyResult: degree out of range");
}

long HomologyResult::rank(int d) const {
    if (d < 0 || d >= static_cast<int>(degrees_.size())) return 0;
    return at(d).free_rank;
}

const std::vector<Int>& HomologyResult::torsion(int d) const {
    static const std::vector<Int> none;
    if (d < 0 || d >= static_cast<int>(degrees_.size())) return none;
    return at(d).torsion;
}

std::vector<Chain> HomologyResult::generators(int d) const {
    if (d < 0 || d >= static_cast<int>(degrees_.size())) return {};
    return at(d).generators;
}

std::optional<std::vector<Int>> HomologyResult::class_of(const Chain& z) const {
    if (!z.boundary().empty()) return std::nullopt;
    if (z.degree() < 0 || z.degree() >= static_cast<int>(degrees_.size())) return std::nullopt;
    const HomologyDegree& hd = at(z.degree());
    if (z.empty()) return std::vector<Int>(hd.gen_slots.size(), Int(0));

    auto coords = echelon_coordinates(hd.chain_basis, z);
    if (!coords) return std::nullopt;
    auto y = smith_solve(hd.cycle_smith, hd.cycle_basis.cols(), *coords);
    if (!y) return std::nullopt;
    std::vector<Int> u = hd.U.apply(*y);
    std::vector<Int> out;
    for (std::size_t slot : hd.gen_slots) {
        Int d = slot < hd.smith_diag.size() ? hd.smith_diag[slot] : Int(0);
        Int v = u[slot];
        if (d > 1) {
            v %= d;
            if (v < 0) v += d;
        }
        out.push_back(v);
    }
    return out;
}

std::string HomologyResult::to_text() const {
    std::ostringstream os;
    for (const auto& hd : degrees_) {
        os << "H_" << hd.degree << ": rank " << hd.free_rank;
        if (!hd.torsion.empty()) {
            os << ", torsion";
            for (const auto& t : hd.torsion) os << " Z/" << t;
        }
        os << '\n';
    }
    return os.str();
}

HomologyResult homology(const StratifiedComplex& X, const std::optional<Perversity>& p) {
    if (!X.validated()) throw NotValidated("homology: complex fails validation");
    const int n = X.n();

    std::vector<std::vector<Chain>> basis(n + 1);
    for (int d = 0; d <= n; ++d) {
        if (p.has_value()) {
            basis[d] = intersection_chain_basis(X, d, *p);
        } else {
            for (const auto& s : X.simplices(d)) {
                Chain c(&X, d);
                c.add(s, 1);
                basis[d].push_back(std::move(c));
            }
        }
    }

    // boundary maps in basis coordinates
    std::vector<IntMatrix> bmat(n + 2);  // bmat[d]: degree d -> d-1
    for (int d = 0; d <= n; ++d) {
        const std::size_t cols = basis[d].size();
        const std::size_t rows = (d >= 1) ? basis[d - 1].size() : 0;
        IntMatrix A(rows, cols);
        if (d >= 1) {
            for (std::size_t j = 0; j < cols; ++j) {
                Chain db = basis[d][j].boundary();
                if (db.empty()) continue;
                auto coords = echelon_coordinates(basis[d - 1], db);
                if (!coords)
                    throw std::logic_error("homology: boundary leaves the chain subcomplex");
                A.set_column(j, *coords);
            }
        }
        bmat[d] = std::move(A);
    }
    bmat[n + 1] = IntMatrix(basis[n].size(), 0);

    std::vector<HomologyDegree> out;
    for (int d = 0; d <= n; ++d) {
        HomologyDegree hd;
        hd.degree = d;
        hd.chain_basis = basis[d];

        auto kernel = kernel_basis(bmat[d]);
        IntMatrix K(basis[d].size(), kernel.size());
        for (std::size_t j = 0; j < kernel.size(); ++j) K.set_column(j, kernel[j]);
        hd.cycle_basis = K;
        hd.cycle_smith = smith_normal_form(K);

        // image of the next boundary in cycle coordinates
        IntMatrix Y(kernel.size(), bmat[d + 1].cols());
        for (std::size_t j = 0; j < bmat[d + 1].cols(); ++j) {
            auto col = smith_solve(hd.cycle_smith, kernel.size(), bmat[d + 1].column(j));
            if (!col) throw std::logic_error("homology: boundary is not a cycle");
            Y.set_column(j, *col);
        }
        SmithForm f = smith_normal_form(Y);
        hd.U = f.U;
        hd.smith_diag = f.diag;

        // free slots (diag 0 or beyond rank), then torsion slots (diag > 1)
        std::vector<std::size_t> free_slots, torsion_slots;
        for (std::size_t j = 0; j < kernel.size(); ++j) {
            Int dj = j < f.diag.size() ? f.diag[j] : Int(0);
            if (dj == 0)
                free_slots.push_back(j);
            else if (dj > 1)
                torsion_slots.push_back(j);
        }
        hd.free_rank = static_cast<long>(free_slots.size());
        for (std::size_t j : torsion_slots) hd.torsion.push_back(f.diag[j]);

        auto emit = [&](std::size_t slot) {
            std::vector<Int> y = f.Uinv.column(slot);
            std::vector<Int> coords = K.apply(y);
            Chain g(&X, d);
            for (std::size_t b = 0; b < coords.size(); ++b) {
                if (coords[b] == 0) continue;
                g += basis[d][b] * coords[b];
            }
            hd.generators.push_back(std::move(g));
            hd.gen_slots.push_back(slot);
        };
        for (std::size_t j : free_slots) emit(j);
        for (std::size_t j : torsion_slots) emit(j);

        out.push_back(std::move(hd));
    }
    return HomologyResult(&X, p, std::move(out));
}

}  // namespace strata
