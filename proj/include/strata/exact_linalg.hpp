#ifndef STRATA_EXACT_LINALG_HPP
#define STRATA_EXACT_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <vector>

namespace strata {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense matrix of arbitrary-precision integers.  All elimination is exact;
// there is no machine-word fast path.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, std::vector<Int>(cols)) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i][j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i][j]; }

    bool operator==(const IntMatrix& o) const { return data_ == o.data_; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // M * v
    bool is_zero() const;

    std::vector<Int> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Int>& v);

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Int>> data_;
};

// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
// Inverses are tracked so callers can pull generators back through the
// transform.
struct SmithForm {
    IntMatrix U, Uinv, V, Vinv;
    std::vector<Int> diag;   // length min(rows, cols)
    std::size_t rank = 0;    // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& M);

std::size_t rank(const IntMatrix& M);

// Basis of the integer kernel lattice.  Vectors are primitive and form a
// basis of a direct summand.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& M);

// Exact solves of M x = b.  Integer mode fails (nullopt) when no integral
// solution exists; rational mode fails only when the system is inconsistent.
std::optional<std::vector<Int>> solve_int(const IntMatrix& M, const std::vector<Int>& b);
std::optional<std::vector<Rat>> solve_rat(const IntMatrix& M, const std::vector<Rat>& b);

// Row-style Hermite normal form of the lattice spanned by the rows of M.
// The result is the canonical basis (pivots positive, entries above pivots
// reduced); zero rows are dropped.
IntMatrix hermite_row_basis(const IntMatrix& M);

}  // namespace strata

#endif
