#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lca/op.hpp"

namespace lca {

// Dense coefficient vector of an algebra element in the structure basis.
using Elem = std::vector<Scalar>;

struct SparseTerm {
    int k;
    Scalar c;
};
using SparseVec = std::vector<SparseTerm>;

struct Irrep {
    std::string label;
    int dim = 1;
    std::vector<Op> mats;  // tau(e_i), one per basis element
};

// Finite-dimensional modular ribbon Hopf-*-algebra given by structure
// constants in a fixed basis, together with its irreducible representations.
struct HopfAlgebra {
    std::string name;
    int dim = 0;
    Backend backend = Backend::Exact;
    int conductor = 1;  // cyclotomic field the exact data lives in
    std::vector<std::string> basis_names;

    std::vector<std::vector<SparseVec>> mult;  // e_i e_j = sum_k mult[i][j]
    Elem unit;
    std::vector<Op> coproduct;  // Delta(e_i) as dim x dim coefficient matrix
    Elem counit_row;            // eps(e_i)
    Op antipode;                // column j = coefficients of S(e_j)
    std::optional<Op> star;     // column j = coefficients of e_j^*; antilinear
    Elem ribbon;                // v
    std::optional<Elem> kappa;  // central square root of v, when available
    Op R;                       // R-matrix coefficients R_{ab} on e_a (x) e_b

    std::vector<Irrep> irreps;
    int trivial_irrep = -1;

    // --- element algebra ---
    Elem zero_elem() const { return Elem(dim, Scalar::of_backend_zero(backend)); }
    Elem basis_elem(int i) const;
    Elem mul(const Elem &a, const Elem &b) const;
    Elem add(const Elem &a, const Elem &b) const;
    Elem scale(const Elem &a, const Scalar &s) const;
    Scalar counit(const Elem &a) const;
    Elem apply_antipode(const Elem &a) const;
    Elem apply_star(const Elem &a) const;  // throws if star missing
    Elem inverse(const Elem &a) const;     // solves in the algebra
    Elem power(const Elem &a, long k) const;
    bool elem_eq(const Elem &a, const Elem &b) const;
    bool is_central(const Elem &a) const;

    Op delta(const Elem &a) const;       // coefficient matrix of Delta(a)
    Op left_mult_matrix(const Elem &a) const;
    Op right_mult_matrix(const Elem &a) const;

    // tensor-square helpers; arguments/results are coefficient matrices
    Op tensor2_mul(const Op &A, const Op &B) const;
    Op tensor2_swap(const Op &A) const { return A.transpose(); }
    Op tensor2_inverse(const Op &A) const;
    Op tensor2_star(const Op &A) const;
    Op tensor2_of(const Elem &a, const Elem &b) const;
    Op R_inverse() const;  // (S (x) id)(R)

    Op irrep_apply(int I, const Elem &a) const;

    // evaluation of an element against one irrep leg:
    // (tau^I (x) id)(Delta(a)) etc. are assembled by callers.

    // --- distinguished elements (computed, cached) ---
    const Elem &grouplike_g() const;    // implements S^2, from v^{-1} S(r^2) r^1
    const Elem &drinfeld_u() const;     // sum S(r^2) r^1
    const Elem &vacuum_projector() const;  // minimal central idempotent P^0
    Elem central_idempotent(int I) const;
    const Elem &right_integral() const;    // mu with mu(P^0) = 1, as a functional row
    Scalar integral_eval(const Elem &a) const;

    int conjugate_irrep(int I) const;  // via invariants in V^I (x) V^J

    mutable std::map<std::string, Elem> cache_;
    mutable std::optional<Op> wedderburn_inv_;
    const Op &wedderburn_inverse() const;  // inverse of basis -> blocks map

    void validate_shapes() const;  // structural sanity, throws
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// One check line of the axiom report.
struct CheckLine {
    std::string name;
    enum class Status { Pass, Fail, Skipped } status;
    double residual = 0.0;
};

struct AxiomReport {
    std::vector<CheckLine> lines;
    bool passed() const {
        for (const auto &l : lines)
            if (l.status == CheckLine::Status::Fail) return false;
        return true;
    }
    double max_residual() const {
        double m = 0;
        for (const auto &l : lines) m = std::max(m, l.residual);
        return m;
    }
};

// Verifies the full axiom suite: algebra/coalgebra/bialgebra/antipode,
// quasitriangularity, Yang-Baxter, ribbon, star compatibilities (skipped
// when no star is supplied), and that the irreps form a complete
// irreducible family.
AxiomReport check_axioms(const HopfAlgebra &h);

}  // namespace lca
