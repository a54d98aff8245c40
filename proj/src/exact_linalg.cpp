#include "strata/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace strata {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = data_[i][j];
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (data_[i][k] == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) += data_[i][k] * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = data_[i][j] - o(i, j);
    return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: dimension mismatch in apply");
    std::vector<Int> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i][j] != 0 && v[j] != 0) r[i] += data_[i][j] * v[j];
    return r;
}

bool IntMatrix::is_zero() const {
    for (const auto& row : data_)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = data_[i][j];
    return c;
}

void IntMatrix::set_column(std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < rows_; ++i) data_[i][j] = v[i];
}

namespace {

struct SnfState {
    IntMatrix M, U, Uinv, V, Vinv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
        for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv(i, a), Uinv(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
        for (std::size_t j = 0; j < Vinv.cols(); ++j) std::swap(Vinv(a, j), Vinv(b, j));
    }
    // row a += q * row b
    void add_row(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (M(b, j) != 0) M(a, j) += q * M(b, j);
        for (std::size_t j = 0; j < U.cols(); ++j)
            if (U(b, j) != 0) U(a, j) += q * U(b, j);
        for (std::size_t i = 0; i < Uinv.rows(); ++i)
            if (Uinv(i, a) != 0) Uinv(i, b) -= q * Uinv(i, a);
    }
    // col a += q * col b
    void add_col(std::size_t a, std::size_t b, const Int& q) {
        if (q == 0) return;
        for (std::size_t i = 0; i < M.rows(); ++i)
            if (M(i, b) != 0) M(i, a) += q * M(i, b);
        for (std::size_t i = 0; i < V.rows(); ++i)
            if (V(i, b) != 0) V(i, a) += q * V(i, b);
        for (std::size_t j = 0; j < Vinv.cols(); ++j)
            if (Vinv(a, j) != 0) Vinv(b, j) -= q * Vinv(a, j);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < M.cols(); ++j) M(a, j) = -M(a, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(a, j) = -U(a, j);
        for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, a) = -Uinv(i, a);
    }
};

// Deterministic pivot choice: minimal absolute value, first position in
// row-major scan on ties.  Keeps coefficient growth down on incidence-style
// matrices.
bool find_pivot(const IntMatrix& M, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < M.rows(); ++i)
        for (std::size_t j = t; j < M.cols(); ++j) {
            const Int& x = M(i, j);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    return found;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M0) {
    SnfState s;
    s.M = M0;
    s.U = IntMatrix::identity(M0.rows());
    s.Uinv = IntMatrix::identity(M0.rows());
    s.V = IntMatrix::identity(M0.cols());
    s.Vinv = IntMatrix::identity(M0.cols());

    const std::size_t limit = std::min(M0.rows(), M0.cols());
    std::size_t t = 0;
    while (t < limit) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(s.M, t, pi, pj)) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < s.M.rows(); ++i) {
                if (s.M(i, t) == 0) continue;
                Int q = floor_div(s.M(i, t), s.M(t, t));
                s.add_row(i, t, -q);
                if (s.M(i, t) != 0) {
                    // remainder becomes the smaller pivot
                    s.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < s.M.cols(); ++j) {
                if (s.M(t, j) == 0) continue;
                Int q = floor_div(s.M(t, j), s.M(t, t));
                s.add_col(j, t, -q);
                if (s.M(t, j) != 0) {
                    s.swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the submatrix
                for (std::size_t i = t + 1; i < s.M.rows() && clean; ++i)
                    for (std::size_t j = t + 1; j < s.M.cols() && clean; ++j)
                        if (s.M(i, j) % s.M(t, t) != 0) {
                            s.add_row(t, i, 1);
                            clean = false;
                        }
            }
        }
        if (s.M(t, t) < 0) s.negate_row(t);
        ++t;
    }

    SmithForm out;
    out.U = std::move(s.U);
    out.Uinv = std::move(s.Uinv);
    out.V = std::move(s.V);
    out.Vinv = std::move(s.Vinv);
    out.diag.resize(limit);
    for (std::size_t i = 0; i < limit; ++i) out.diag[i] = s.M(i, i);
    for (std::size_t i = 0; i < limit; ++i)
        if (out.diag[i] != 0) ++out.rank;
    return out;
}

std::size_t rank(const IntMatrix& M) { return smith_normal_form(M).rank; }

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& M) {
    SmithForm f = smith_normal_form(M);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = f.rank; j < M.cols(); ++j) basis.push_back(f.V.column(j));
    return basis;
}

std::optional<std::vector<Int>> solve_int(const IntMatrix& M, const std::vector<Int>& b) {
    if (b.size() != M.rows()) throw std::invalid_argument("solve_int: dimension mismatch");
    SmithForm f = smith_normal_form(M);
    std::vector<Int> c = f.U.apply(b);
    std::vector<Int> y(M.cols());
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

std::optional<std::vector<Rat>> solve_rat(const IntMatrix& M, const std::vector<Rat>& b) {
    if (b.size() != M.rows()) throw std::invalid_argument("solve_rat: dimension mismatch");
    // rational Gauss on an augmented copy
    std::size_t R = M.rows(), C = M.cols();
    std::vector<std::vector<Rat>> a(R, std::vector<Rat>(C + 1));
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) a[i][j] = Rat(M(i, j));
        a[i][C] = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < C && r < R; ++j) {
        std::size_t p = r;
        while (p < R && a[p][j] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        Rat inv = a[r][j];
        for (std::size_t k = j; k <= C; ++k) a[r][k] /= inv;
        for (std::size_t i = 0; i < R; ++i) {
            if (i == r || a[i][j] == 0) continue;
            Rat q = a[i][j];
            for (std::size_t k = j; k <= C; ++k) a[i][k] -= q * a[r][k];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < R; ++i)
        if (a[i][C] != 0) return std::nullopt;
    std::vector<Rat> x(C);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][C];
    return x;
}

IntMatrix hermite_row_basis(const IntMatrix& M0) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < M0.rows(); ++i) {
        std::vector<Int> r(M0.cols());
        for (std::size_t j = 0; j < M0.cols(); ++j) r[j] = M0(i, j);
        rows.push_back(std::move(r));
    }
    const std::size_t C = M0.cols();
    std::size_t top = 0;
    for (std::size_t col = 0; col < C && top < rows.size(); ++col) {
        // gcd-reduce the column below `top` to a single entry
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool cleared = true;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int q = floor_div(rows[i][col], rows[top][col]);
                for (std::size_t j = 0; j < C; ++j) rows[i][j] -= q * rows[top][j];
                if (rows[i][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[top][col] == 0) continue;
        if (rows[top][col] < 0)
            for (std::size_t j = 0; j < C; ++j) rows[top][j] = -rows[top][j];
        for (std::size_t i = 0; i < top; ++i) {
            Int q = floor_div(rows[i][col], rows[top][col]);
            if (q != 0)
                for (std::size_t j = 0; j < C; ++j) rows[i][j] -= q * rows[top][j];
        }
        ++top;
    }
    IntMatrix out(top, C);
    for (std::size_t i = 0; i < top; ++i)
        for (std::size_t j = 0; j < C; ++j) out(i, j) = rows[i][j];
    return out;
}

}  // namespace strata
