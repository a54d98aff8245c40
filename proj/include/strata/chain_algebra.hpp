#ifndef STRATA_CHAIN_ALGEBRA_HPP
#define STRATA_CHAIN_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/exact_linalg.hpp"
#include "strata/stratified_complex.hpp"

namespace strata {

struct NotOriented : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DualizationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ProductUnavailable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Sparse simplicial chain with exact coefficients, canonical (no zero
// entries), homogeneous of one degree.
template <class R>
class BasicChain {
public:
    BasicChain() : cx_(nullptr), degree_(0) {}
    BasicChain(const StratifiedComplex* cx, int degree) : cx_(cx), degree_(degree) {}

    const StratifiedComplex* complex() const { return cx_; }
    int degree() const { return degree_; }
    bool empty() const { return coef_.empty(); }
    const std::map<Simplex, R>& terms() const { return coef_; }

    R coefficient(const Simplex& s) const {
        auto it = coef_.find(s);
        return it == coef_.end() ? R(0) : it->second;
    }

    void add(const Simplex& s, const R& c) {
        if (c == 0) return;
        if (static_cast<int>(s.size()) - 1 != degree_)
            throw std::invalid_argument("chain: simplex dimension does not match degree");
        if (cx_ && !cx_->has_simplex(s))
            throw UnknownSimplex("chain: simplex not in complex: " + simplex_to_string(s));
        auto [it, fresh] = coef_.try_emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    BasicChain& operator+=(const BasicChain& o) {
        for (const auto& [s, c] : o.coef_) add(s, c);
        return *this;
    }
    BasicChain operator+(const BasicChain& o) const {
        BasicChain r = *this;
        r += o;
        return r;
    }
    BasicChain operator-(const BasicChain& o) const {
        BasicChain r = *this;
        for (const auto& [s, c] : o.coef_) r.add(s, -c);
        return r;
    }
    BasicChain operator*(const R& k) const {
        BasicChain r(cx_, degree_);
        if (k == 0) return r;
        for (const auto& [s, c] : coef_) r.coef_[s] = c * k;
        return r;
    }
    BasicChain operator-() const { return *this * R(-1); }
    bool operator==(const BasicChain& o) const { return degree_ == o.degree_ && coef_ == o.coef_; }

    BasicChain boundary() const {
        BasicChain r(cx_, degree_ - 1);
        for (const auto& [s, c] : coef_)
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                if (face.empty()) continue;
                r.add(face, (i % 2 == 0) ? c : -c);
            }
        return r;
    }

    std::vector<Simplex> support() const {
        std::vector<Simplex> out;
        for (const auto& [s, c] : coef_) out.push_back(s);
        return out;
    }

private:
    const StratifiedComplex* cx_;
    int degree_;
    std::map<Simplex, R> coef_;
};

using Chain = BasicChain<Int>;
using QChain = BasicChain<Rat>;

QChain to_rational(const Chain& c);
std::optional<Chain> to_integral(const QChain& c);

// Degree-homogeneous simplicial cochain.  The coboundary is the unsigned
// transpose of the boundary: (delta x)(s) = x(boundary s).
template <class R>
class BasicCochain {
public:
    BasicCochain() : cx_(nullptr), degree_(0) {}
    BasicCochain(const StratifiedComplex* cx, int degree) : cx_(cx), degree_(degree) {}

    const StratifiedComplex* complex() const { return cx_; }
    int degree() const { return degree_; }
    bool empty() const { return coef_.empty(); }
    const std::map<Simplex, R>& terms() const { return coef_; }

    R value(const Simplex& s) const {
        auto it = coef_.find(s);
        return it == coef_.end() ? R(0) : it->second;
    }

    void add(const Simplex& s, const R& c) {
        if (c == 0) return;
        if (static_cast<int>(s.size()) - 1 != degree_)
            throw std::invalid_argument("cochain: simplex dimension does not match degree");
        auto [it, fresh] = coef_.try_emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coef_.erase(it);
        }
    }

    BasicCochain operator+(const BasicCochain& o) const {
        BasicCochain r = *this;
        for (const auto& [s, c] : o.coef_) r.add(s, c);
        return r;
    }
    BasicCochain operator*(const R& k) const {
        BasicCochain r(cx_, degree_);
        if (k == 0) return r;
        for (const auto& [s, c] : coef_) r.coef_[s] = c * k;
        return r;
    }
    bool operator==(const BasicCochain& o) const {
        return degree_ == o.degree_ && coef_ == o.coef_;
    }

    BasicCochain coboundary() const {
        BasicCochain r(cx_, degree_ + 1);
        if (!cx_) return r;
        for (const auto& s : cx_->simplices(degree_ + 1)) {
            R v(0);
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                auto it = coef_.find(face);
                if (it != coef_.end()) v += (i % 2 == 0) ? it->second : -it->second;
            }
            if (v != 0) r.coef_[s] = v;
        }
        return r;
    }

private:
    const StratifiedComplex* cx_;
    int degree_;
    std::map<Simplex, R> coef_;
};

using Cochain = BasicCochain<Int>;
using QCochain = BasicCochain<Rat>;

// value 1 on every vertex; two-sided cup unit
template <class R>
BasicCochain<R> unit_cocycle(const StratifiedComplex& X) {
    BasicCochain<R> u(&X, 0);
    for (const auto& v : X.simplices(0)) u.add(v, R(1));
    return u;
}

// Front-face/back-face cup product under the global vertex order:
// (x cup y)([v0..v_{p+q}]) = x([v0..v_p]) * y([v_p..v_{p+q}]).
// Associative on the nose; delta(x cup y) = delta x cup y + (-1)^p x cup delta y.
template <class R>
BasicCochain<R> cup(const BasicCochain<R>& x, const BasicCochain<R>& y);

// Cap product, back-face evaluation:
//   x cap s = (-1)^(p*dim s + p(p-1)/2) * x(last p+1 vertices) * (front face).
// The sign makes both contracts hold exactly:
//   boundary(x cap c) = delta x cap c + (-1)^p x cap boundary c
//   (x cup y) cap c   = x cap (y cap c)
template <class R>
BasicChain<R> cap(const BasicCochain<R>& x, const BasicChain<R>& c);

// Coherently oriented sum of facets; boundary is exactly zero.
Chain fundamental_cycle(const StratifiedComplex& X);

// Chain shifted into degree d + m; support is the support of the underlying
// chain, boundary picks up (-1)^m.
template <class R>
struct BasicShiftedChain {
    BasicChain<R> chain;
    int shift = 0;

    int degree() const { return chain.degree() + shift; }
    BasicShiftedChain boundary() const {
        BasicShiftedChain r{chain.boundary(), shift};
        if (shift % 2 != 0) r.chain = -r.chain;
        return r;
    }
    bool operator==(const BasicShiftedChain& o) const {
        return shift == o.shift && chain == o.chain;
    }
};

using ShiftedChain = BasicShiftedChain<Int>;
using QShiftedChain = BasicShiftedChain<Rat>;

// Signed Poincare duality (-1)^(m|x|) S^(-m)(x cap fundamental cycle);
// degree-0 chain map: boundary(pd x) = pd(delta x).
template <class R>
BasicShiftedChain<R> pd(const BasicCochain<R>& x);

// Koszul-graded sum of simplex tuples with per-slot shifts.  Canonical at
// simplex-tuple granularity, so supports reflect boundary cancellation.
class TensorChain {
public:
    TensorChain() : cx_(nullptr), degree_(0) {}
    TensorChain(const StratifiedComplex* cx, std::vector<int> slot_shifts, int degree)
        : cx_(cx), shifts_(std::move(slot_shifts)), degree_(degree) {}

    static TensorChain uniform_shift(const StratifiedComplex* cx, int arity, int shift,
                                     int degree) {
        return TensorChain(cx, std::vector<int>(arity, shift), degree);
    }

    const StratifiedComplex* complex() const { return cx_; }
    int arity() const { return static_cast<int>(shifts_.size()); }
    const std::vector<int>& slot_shifts() const { return shifts_; }
    int degree() const { return degree_; }
    bool empty() const { return terms_.empty(); }
    const std::map<std::vector<Simplex>, Int>& terms() const { return terms_; }

    void add(const std::vector<Simplex>& tuple, const Int& c);

    TensorChain operator+(const TensorChain& o) const;
    TensorChain operator-() const;
    TensorChain operator*(const Int& k) const;
    bool operator==(const TensorChain& o) const {
        return shifts_ == o.shifts_ && degree_ == o.degree_ && terms_ == o.terms_;
    }

    // Koszul boundary: slot l contributes (-1)^(m_l + sum of shifted degrees
    // left of l); exact cancellation at tuple granularity.
    TensorChain boundary() const;

    // tensor product of simple chains, one per slot
    static TensorChain simple(const std::vector<const Chain*>& slots,
                              const std::vector<int>& shifts);

private:
    const StratifiedComplex* cx_;
    std::vector<int> shifts_;
    int degree_;
    std::map<std::vector<Simplex>, Int> terms_;
};

// Tensor chain with the shifts pulled out in front: S^shift applied to a
// tensor of unshifted slots.
struct ShiftedTensorChain {
    TensorChain tensor;  // slot shifts all zero
    int shift = 0;

    int degree() const { return tensor.degree() + shift; }
    ShiftedTensorChain boundary() const {
        ShiftedTensorChain r{tensor.boundary(), shift};
        if (shift % 2 != 0) r.tensor = -r.tensor;
        return r;
    }
    bool operator==(const ShiftedTensorChain& o) const {
        return shift == o.shift && tensor == o.tensor;
    }
};

// Interleaving isomorphism S^(m1)x1 (x) ... (x) S^(mk)xk ->
// (-1)^(sum_{i>=2} m_i sum_{j<i} |x_j|) S^(sum m_i)(x1 (x) ... (x) xk).
// A chain isomorphism; involutive on supports, so it is its own inverse
// up to the shift bookkeeping.
ShiftedTensorChain theta(const TensorChain& t);
TensorChain theta_inverse(const ShiftedTensorChain& t, const std::vector<int>& slot_shifts);

// Eilenberg-Zilber shuffle cross product of unshifted chains, landing in the
// staircase triangulation of the product.  A monomorphism and a chain map.
Chain cross(const std::vector<const Chain*>& factors, const ProductComplex& P);
QChain cross(const std::vector<const QChain*>& factors, const ProductComplex& P);

// e_2, the elementary symmetric polynomial of degree two
long e2(const std::vector<int>& m);

// (-1)^(e2(shifts)) * S^(sum shifts) cross . theta; degree-0 chain
// monomorphism from the shifted tensor complex to shifted chains on the
// product.
ShiftedChain bar_epsilon(const TensorChain& t, const ProductComplex& P);

// Cochain pullback along a coordinate projection of the product, and the
// cochain cross product x1 cross ... cross xk = pr1* x1 cup ... cup prk* xk.
template <class R>
BasicCochain<R> pullback_projection(const BasicCochain<R>& x, const ProductComplex& P, int slot);
template <class R>
BasicCochain<R> cochain_cross(const std::vector<const BasicCochain<R>*>& xs,
                              const ProductComplex& P);

// Inverse duality at homology level: a cocycle x with pd(x) - S^(-m)C a
// shifted boundary, found by exact linear solve.  Throws DualizationFailed
// when the class lies outside the image of duality (expected on general
// pseudomanifolds).
Cochain solve_dual_int(const Chain& C);
QCochain solve_dual(const Chain& C);

}  // namespace strata

#endif
