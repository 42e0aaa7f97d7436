#pragma once

#include <utility>
#include <vector>

#include "lca/scalar.hpp"

namespace lca {

// Dense matrix of field scalars.  Storage is row-major; most operators in
// the models are very sparse, so the multiplication kernels skip zeroes.
class Op {
  public:
    Op() = default;
    Op(int rows, int cols, Backend b)
        : r_(rows), c_(cols), b_(b), a_((size_t)rows * cols, Scalar::of_backend_zero(b)) {}

    static Op identity(int n, Backend b);
    static Op zeros(int rows, int cols, Backend b) { return Op(rows, cols, b); }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Backend backend() const { return b_; }

    Scalar &at(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const Scalar &at(int i, int j) const { return a_[(size_t)i * c_ + j]; }

    Op operator+(const Op &o) const;
    Op operator-(const Op &o) const;
    Op operator*(const Op &o) const;
    Op operator*(const Scalar &s) const;
    Op operator-() const { return *this * Scalar::integer(-1); }
    Op &operator+=(const Op &o);
    Op &operator-=(const Op &o) { return *this += o * Scalar::integer(-1); }

    // accumulate s * o into this (avoids temporaries in hot loops)
    void axpy(const Scalar &s, const Op &o);

    Op transpose() const;
    Op conj_transpose() const;
    Op conj() const;
    Op to_float() const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Op &o) const;

    // max |entry| of this - o under the numeric embedding
    double residual(const Op &o) const;
    double max_abs() const;

    Op kron(const Op &o) const;

    int rank() const;
    Op inverse() const;                       // throws SingularMatrix
    std::vector<Op> nullspace_columns() const;  // basis of right kernel
    Op column_space_basis() const;            // full-column-rank basis of image

    Scalar trace() const;

  private:
    int r_ = 0, c_ = 0;
    Backend b_ = Backend::Exact;
    std::vector<Scalar> a_;
};

// Basis of {X : A_k X = X B_k for every pair}; matrices X are square of
// the common dimension.  Used for commutants and Gram-type systems.
std::vector<Op> solve_intertwiners(const std::vector<std::pair<Op, Op>> &pairs);

// Commutant dimension of a set of operators.
int commutant_dimension(const std::vector<Op> &ops);

// Change of basis onto im(P) for an idempotent P: returns (C, L) with
// columns of C spanning im(P) and L * C = Id, so X restricted = L X C.
std::pair<Op, Op> image_restriction(const Op &P);

}  // namespace lca
