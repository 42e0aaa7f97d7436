#pragma once

#include "lca/hopf.hpp"

namespace lca {

// Element of G_a (x) End(W): one operator per structure-basis element of
// the auxiliary copy G_a.  Currents, holonomies and monodromies of the
// lattice models are all of this shape.
struct Universal {
    const HopfAlgebra *H = nullptr;
    int w = 0;
    std::vector<Op> comp;  // comp[a] pairs with basis element e_a

    Universal() = default;
    Universal(const HopfAlgebra &h, int carrier);

    // sum_ab T_ab e_a (x) act(e_b) for a coefficient matrix T in G (x) G
    // and an algebra action on the carrier
    static Universal from_tensor2(const HopfAlgebra &h, const Op &T,
                                  const std::vector<Op> &act);
    // x (x) Id for a central x (used for ribbon powers on the first leg)
    static Universal central_scalar(const HopfAlgebra &h, const Elem &x, int carrier);
    static Universal unit_universal(const HopfAlgebra &h, int carrier);

    Universal mul(const Universal &o) const;
    Universal lmul_op(const Op &A) const;  // (1 (x) A) . this
    Universal rmul_op(const Op &A) const;  // this . (1 (x) A)
    Universal scale(const Scalar &s) const;
    Universal add(const Universal &o) const;
    Universal sub(const Universal &o) const;

    // comps pushed through a linear map of the first leg (matrix columns
    // give images of basis elements)
    Universal apply_first_leg(const Op &M) const;

    // inverse, valid for elements obeying the R-twisted functoriality
    // X^1 X^2 = R Delta_a(X); verified, throws SingularMatrix otherwise
    Universal inverse() const;

    Op counit_contract() const;           // (eps (x) id)
    Op eval_irrep(const Irrep &ir) const; // (tau (x) id), carrier V (x) W
    Universal kron_right(int n, bool left_factor) const;  // extend carrier by Id_n

    bool equals(const Universal &o) const;
    double residual(const Universal &o) const;
    bool is_unit() const { return equals(unit_universal(*H, w)); }
};

namespace rel {

// A factor of a relation in G_a (x) G_a (x) End(W).  `cst` entries are
// coefficient matrices acting on the two auxiliary legs only.
struct Factor {
    enum class Kind { Const2, Leg1, Leg2, DeltaA } kind;
    const Op *C = nullptr;
    const Universal *X = nullptr;
};
Factor cst(const Op &C);
Factor leg1(const Universal &X);
Factor leg2(const Universal &X);
Factor delta_a(const Universal &X);

// Max residual between two products of factors, evaluated entry by entry
// over the (dim G)^2 coefficient pairs without materializing either side.
double two_leg_residual(const HopfAlgebra &h, const std::vector<Factor> &lhs,
                        const std::vector<Factor> &rhs);

}  // namespace rel

}  // namespace lca
