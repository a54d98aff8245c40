#include "strata/chain_algebra.hpp"

#include <algorithm>
#include <functional>

namespace strata {

QChain to_rational(const Chain& c) {
    QChain r(c.complex(), c.degree());
    for (const auto& [s, v] : c.terms()) r.add(s, Rat(v));
    return r;
}

std::optional<Chain> to_integral(const QChain& c) {
    Chain r(c.complex(), c.degree());
    for (const auto& [s, v] : c.terms()) {
        if (denominator(v) != 1) return std::nullopt;
        r.add(s, numerator(v));
    }
    return r;
}

template <class R>
BasicCochain<R> cup(const BasicCochain<R>& x, const BasicCochain<R>& y) {
    if (x.complex() != y.complex())
        throw std::invalid_argument("cup: cochains on different complexes");
    BasicCochain<R> r(x.complex(), x.degree() + y.degree());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            if (a.back() != b.front()) continue;
            Simplex s = a;
            s.insert(s.end(), b.begin() + 1, b.end());
            if (!std::is_sorted(s.begin(), s.end())) continue;
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
            if (x.complex() && !x.complex()->has_simplex(s)) continue;
            r.add(s, ca * cb);
        }
    return r;
}

template BasicCochain<Int> cup(const BasicCochain<Int>&, const BasicCochain<Int>&);
template BasicCochain<Rat> cup(const BasicCochain<Rat>&, const BasicCochain<Rat>&);

namespace {

int cap_sign(int p, int N) {
    long e = static_cast<long>(p) * N + static_cast<long>(p) * (p - 1) / 2;
    return parity_sign(e);
}

}  // namespace

template <class R>
BasicChain<R> cap(const BasicCochain<R>& x, const BasicChain<R>& c) {
    const int p = x.degree();
    const int N = c.degree();
    BasicChain<R> r(c.complex(), N - p);
    if (N - p < 0) return r;
    const int sign = cap_sign(p, N);
    for (const auto& [s, coef] : c.terms()) {
        Simplex back(s.end() - (p + 1), s.end());
        R v = x.value(back);
        if (v == 0) continue;
        Simplex front(s.begin(), s.begin() + (N - p) + 1);
        r.add(front, (sign > 0) ? coef * v : -(coef * v));
    }
    return r;
}

template BasicChain<Int> cap(const BasicCochain<Int>&, const BasicChain<Int>&);
template BasicChain<Rat> cap(const BasicCochain<Rat>&, const BasicChain<Rat>&);

Chain fundamental_cycle(const StratifiedComplex& X) {
    if (!X.validated()) throw NotValidated("fundamental_cycle: complex fails validation");
    Chain g(&X, X.n());
    for (const auto& f : X.facets()) g.add(f, X.orientation(f));
    return g;
}

template <class R>
BasicShiftedChain<R> pd(const BasicCochain<R>& x) {
    if (!x.complex()) throw std::invalid_argument("pd: cochain without complex");
    const StratifiedComplex& X = *x.complex();
    const int m = X.n();
    BasicChain<R> gamma(&X, m);
    {
        Chain g = fundamental_cycle(X);
        for (const auto& [s, c] : g.terms()) gamma.add(s, R(c));
    }
    BasicChain<R> capped = cap(x, gamma);
    if (parity_sign(static_cast<long>(m) * x.degree()) < 0) capped = -capped;
    return BasicShiftedChain<R>{std::move(capped), -m};
}

template BasicShiftedChain<Int> pd(const BasicCochain<Int>&);
template BasicShiftedChain<Rat> pd(const BasicCochain<Rat>&);

void TensorChain::add(const std::vector<Simplex>& tuple, const Int& c) {
    if (c == 0) return;
    if (static_cast<int>(tuple.size()) != arity())
        throw std::invalid_argument("tensor chain: tuple arity mismatch");
    int deg = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (cx_ && !cx_->has_simplex(tuple[i]))
            throw UnknownSimplex("tensor chain: simplex not in complex");
        deg += static_cast<int>(tuple[i].size()) - 1 + shifts_[i];
    }
    if (deg != degree_)
        throw std::invalid_argument("tensor chain: tuple degree does not match chain degree");
    auto [it, fresh] = terms_.try_emplace(tuple, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorChain TensorChain::operator+(const TensorChain& o) const {
    if (shifts_ != o.shifts_) throw std::invalid_argument("tensor chain: shift mismatch");
    TensorChain r = *this;
    for (const auto& [t, c] : o.terms_) r.add(t, c);
    return r;
}

TensorChain TensorChain::operator-() const { return *this * Int(-1); }

TensorChain TensorChain::operator*(const Int& k) const {
    TensorChain r(cx_, shifts_, degree_);
    if (k == 0) return r;
    for (const auto& [t, c] : terms_) r.terms_[t] = c * k;
    return r;
}

TensorChain TensorChain::boundary() const {
    TensorChain r(cx_, shifts_, degree_ - 1);
    for (const auto& [tuple, c] : terms_) {
        long left = 0;  // sum of shifted degrees to the left of the active slot
        for (std::size_t l = 0; l < tuple.size(); ++l) {
            const Simplex& s = tuple[l];
            long sign_exp = left + shifts_[l];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                if (face.empty()) continue;
                std::vector<Simplex> t = tuple;
                t[l] = std::move(face);
                Int v = (i % 2 == 0) ? c : -c;
                if (parity_sign(sign_exp) < 0) v = -v;
                r.add(t, v);
            }
            left += static_cast<int>(s.size()) - 1 + shifts_[l];
        }
    }
    return r;
}

TensorChain TensorChain::simple(const std::vector<const Chain*>& slots,
                                const std::vector<int>& shifts) {
    if (slots.empty() || slots.size() != shifts.size())
        throw std::invalid_argument("tensor chain: bad slot data");
    int degree = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) degree += slots[i]->degree() + shifts[i];
    TensorChain r(slots[0]->complex(), shifts, degree);
    std::vector<Simplex> tuple(slots.size());
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int c) {
        if (i == slots.size()) {
            r.add(tuple, c);
            return;
        }
        for (const auto& [s, v] : slots[i]->terms()) {
            tuple[i] = s;
            rec(i + 1, c * v);
        }
    };
    rec(0, Int(1));
    return r;
}

ShiftedTensorChain theta(const TensorChain& t) {
    int total_shift = 0;
    for (int m : t.slot_shifts()) total_shift += m;
    TensorChain flat = TensorChain::uniform_shift(t.complex(), t.arity(), 0,
                                                  t.degree() - total_shift);
    for (const auto& [tuple, c] : t.terms()) {
        long e = 0, partial = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i >= 1) e += static_cast<long>(t.slot_shifts()[i]) * partial;
            partial += static_cast<int>(tuple[i].size()) - 1;
        }
        flat.add(tuple, parity_sign(e) < 0 ? -c : c);
    }
    return ShiftedTensorChain{std::move(flat), total_shift};
}

TensorChain theta_inverse(const ShiftedTensorChain& t, const std::vector<int>& slot_shifts) {
    int total = 0;
    for (int m : slot_shifts) total += m;
    if (total != t.shift) throw std::invalid_argument("theta_inverse: shift mismatch");
    TensorChain out(t.tensor.complex(), slot_shifts, t.degree());
    for (const auto& [tuple, c] : t.tensor.terms()) {
        long e = 0, partial = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i >= 1) e += static_cast<long>(slot_shifts[i]) * partial;
            partial += static_cast<int>(tuple[i].size()) - 1;
        }
        out.add(tuple, parity_sign(e) < 0 ? -c : c);
    }
    return out;
}

namespace {

// staircase paths through one tuple of simplices, with inversion-parity signs
template <class R>
void cross_tuple(const std::vector<Simplex>& cells, const R& coef, const ProductComplex& P,
                 BasicChain<R>& out) {
    const std::size_t k = cells.size();
    std::vector<int> pos(k, 0), word;
    std::vector<int> current(k);
    for (std::size_t j = 0; j < k; ++j) current[j] = cells[j][0];
    Simplex verts{P.vertex_of_tuple(current)};

    std::function<void()> rec = [&]() {
        bool done = true;
        for (std::size_t i = 0; i < k; ++i)
            if (pos[i] + 1 < static_cast<int>(cells[i].size())) done = false;
        if (done) {
            int inv = 0;
            for (std::size_t a = 0; a < word.size(); ++a)
                for (std::size_t b = a + 1; b < word.size(); ++b)
                    if (word[a] > word[b]) ++inv;
            out.add(verts, (inv % 2 == 0) ? coef : -coef);
            return;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (pos[i] + 1 >= static_cast<int>(cells[i].size())) continue;
            ++pos[i];
            int saved = current[i];
            current[i] = cells[i][pos[i]];
            word.push_back(static_cast<int>(i));
            verts.push_back(P.vertex_of_tuple(current));
            rec();
            verts.pop_back();
            word.pop_back();
            current[i] = saved;
            --pos[i];
        }
    };
    rec();
}

template <class R>
BasicChain<R> cross_impl(const std::vector<const BasicChain<R>*>& factors,
                         const ProductComplex& P) {
    if (static_cast<int>(factors.size()) != P.factors())
        throw ProductUnavailable("cross: arity does not match product complex");
    int degree = 0;
    for (const auto* f : factors) {
        if (f->complex() != &P.base())
            throw ProductUnavailable("cross: factor lives on a different complex");
        degree += f->degree();
    }
    BasicChain<R> out(&P, degree);
    std::vector<Simplex> cells(factors.size());
    std::function<void(std::size_t, R)> rec = [&](std::size_t i, R c) {
        if (i == factors.size()) {
            cross_tuple(cells, c, P, out);
            return;
        }
        for (const auto& [s, v] : factors[i]->terms()) {
            cells[i] = s;
            rec(i + 1, c * v);
        }
    };
    rec(0, R(1));
    return out;
}

}  // namespace

Chain cross(const std::vector<const Chain*>& factors, const ProductComplex& P) {
    return cross_impl(factors, P);
}
QChain cross(const std::vector<const QChain*>& factors, const ProductComplex& P) {
    return cross_impl(factors, P);
}

long e2(const std::vector<int>& m) {
    long e = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) e += static_cast<long>(m[i]) * m[j];
    return e;
}

ShiftedChain bar_epsilon(const TensorChain& t, const ProductComplex& P) {
    if (t.arity() != P.factors())
        throw ProductUnavailable("bar_epsilon: arity does not match product complex");
    ShiftedTensorChain flat = theta(t);
    int total_shift = flat.shift;
    Chain out(&P, t.degree() - total_shift);
    const int sign = parity_sign(e2(t.slot_shifts()));
    for (const auto& [tuple, c] : flat.tensor.terms())
        cross_tuple<Int>(tuple, sign > 0 ? c : -c, P, out);
    return ShiftedChain{std::move(out), total_shift};
}

template <class R>
BasicCochain<R> pullback_projection(const BasicCochain<R>& x, const ProductComplex& P, int slot) {
    BasicCochain<R> out(&P, x.degree());
    for (const auto& s : P.simplices(x.degree())) {
        // projection must be nondegenerate: all coordinates distinct
        Simplex proj;
        proj.reserve(s.size());
        bool degenerate = false;
        int prev = -1;
        for (int v : s) {
            int coord = P.tuple_of_vertex(v)[slot];
            if (coord == prev) {
                degenerate = true;
                break;
            }
            proj.push_back(coord);
            prev = coord;
        }
        if (degenerate) continue;
        R v = x.value(proj);
        if (v != 0) out.add(s, v);
    }
    return out;
}

template BasicCochain<Int> pullback_projection(const BasicCochain<Int>&, const ProductComplex&, int);
template BasicCochain<Rat> pullback_projection(const BasicCochain<Rat>&, const ProductComplex&, int);

template <class R>
BasicCochain<R> cochain_cross(const std::vector<const BasicCochain<R>*>& xs,
                              const ProductComplex& P) {
    if (static_cast<int>(xs.size()) != P.factors())
        throw ProductUnavailable("cochain_cross: arity does not match product complex");
    BasicCochain<R> acc = pullback_projection(*xs[0], P, 0);
    for (std::size_t i = 1; i < xs.size(); ++i)
        acc = cup(acc, pullback_projection(*xs[i], P, static_cast<int>(i)));
    return acc;
}

template BasicCochain<Int> cochain_cross(const std::vector<const BasicCochain<Int>*>&,
                                         const ProductComplex&);
template BasicCochain<Rat> cochain_cross(const std::vector<const BasicCochain<Rat>*>&,
                                         const ProductComplex&);

namespace {

// Columns: cocycle unknowns x_tau, then bounding-chain unknowns w_rho.
// Rows: coboundary of x vanishes, then (-1)^(m(m-i)) x cap Gamma - dw = C.
template <class R>
std::optional<BasicCochain<R>> solve_dual_impl(const Chain& C) {
    const StratifiedComplex& X = *C.complex();
    const int m = X.n();
    const int i = C.degree();
    const int p = m - i;
    if (p < 0 || p > m) throw std::invalid_argument("solve_dual: degree out of range");
    if (!C.boundary().empty()) throw std::invalid_argument("solve_dual: input is not a cycle");

    const auto& taus = X.simplices(p);
    const auto& rhos = X.simplices(i + 1);
    const auto& cocycle_rows = X.simplices(p + 1);
    const auto& chain_rows = X.simplices(i);

    std::map<Simplex, std::size_t> tau_index, rho_index, crow_index, srow_index;
    for (std::size_t a = 0; a < taus.size(); ++a) tau_index[taus[a]] = a;
    for (std::size_t a = 0; a < rhos.size(); ++a) rho_index[rhos[a]] = a;
    for (std::size_t a = 0; a < cocycle_rows.size(); ++a) crow_index[cocycle_rows[a]] = a;
    for (std::size_t a = 0; a < chain_rows.size(); ++a) srow_index[chain_rows[a]] = a;

    const std::size_t rows = cocycle_rows.size() + chain_rows.size();
    const std::size_t cols = taus.size() + rhos.size();
    IntMatrix M(rows, cols);

    // delta x = 0
    for (std::size_t r = 0; r < cocycle_rows.size(); ++r) {
        const Simplex& s = cocycle_rows[r];
        for (std::size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + j);
            auto it = tau_index.find(face);
            if (it != tau_index.end()) M(r, it->second) += (j % 2 == 0) ? 1 : -1;
        }
    }

    // (-1)^(m(m-i)) x cap Gamma - boundary w = C
    const int dual_sign = parity_sign(static_cast<long>(m) * p);
    const int cs = cap_sign(p, m);
    Chain gamma = fundamental_cycle(X);
    for (const auto& [f, orient] : gamma.terms()) {
        Simplex back(f.end() - (p + 1), f.end());
        Simplex front(f.begin(), f.begin() + i + 1);
        auto rt = srow_index.find(front);
        auto ct = tau_index.find(back);
        if (rt == srow_index.end() || ct == tau_index.end()) continue;
        M(cocycle_rows.size() + rt->second, ct->second) += Int(dual_sign * cs) * orient;
    }
    for (std::size_t j = 0; j < rhos.size(); ++j) {
        const Simplex& rho = rhos[j];
        for (std::size_t a = 0; a < rho.size(); ++a) {
            Simplex face = rho;
            face.erase(face.begin() + a);
            auto it = srow_index.find(face);
            if (it != srow_index.end())
                M(cocycle_rows.size() + it->second, taus.size() + j) -= (a % 2 == 0) ? 1 : -1;
        }
    }

    BasicCochain<R> x(&X, p);
    if constexpr (std::is_same_v<R, Int>) {
        std::vector<Int> b(rows);
        for (const auto& [s, c] : C.terms()) b[cocycle_rows.size() + srow_index.at(s)] = c;
        auto sol = solve_int(M, b);
        if (!sol) return std::nullopt;
        for (std::size_t a = 0; a < taus.size(); ++a)
            if ((*sol)[a] != 0) x.add(taus[a], (*sol)[a]);
    } else {
        std::vector<Rat> b(rows);
        for (const auto& [s, c] : C.terms()) b[cocycle_rows.size() + srow_index.at(s)] = Rat(c);
        auto sol = solve_rat(M, b);
        if (!sol) return std::nullopt;
        for (std::size_t a = 0; a < taus.size(); ++a)
            if ((*sol)[a] != 0) x.add(taus[a], (*sol)[a]);
    }
    return x;
}

}  // namespace

Cochain solve_dual_int(const Chain& C) {
    auto x = solve_dual_impl<Int>(C);
    if (!x)
        throw DualizationFailed("solve_dual: no integral cocycle dualizes the class (degree " +
                                std::to_string(C.degree()) + ")");
    return *x;
}

QCochain solve_dual(const Chain& C) {
    auto x = solve_dual_impl<Rat>(C);
    if (!x)
        throw DualizationFailed("solve_dual: class lies outside the image of duality (degree " +
                                std::to_string(C.degree()) + ")");
    return *x;
}

}  // namespace strata
