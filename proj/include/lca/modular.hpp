#pragma once

#include "lca/hopf.hpp"

namespace lca {

struct NonIntegerMultiplicity : NumericError {
    using NumericError::NumericError;
};
struct DimensionMismatch : NumericError {
    using NumericError::NumericError;
};

// Derived representation-theoretic data: quantum dimensions, S/T matrices,
// fusion multiplicities and label conjugation.
struct ModularData {
    HopfPtr algebra;
    std::vector<Scalar> qdim;      // d_I
    Scalar normalizer;             // 1/sqrt(sum d_I^2)
    Op s_unnormalized;             // (tr_q (x) tr_q)(R'R)
    Op s;                          // normalizer * s_unnormalized
    std::vector<Scalar> t_diag;    // tau^I(v) scalar; the phase convention
                                   // leaves the overall factor at 1
    std::vector<std::vector<std::vector<int>>> fusion;  // N[I][J][K]
    std::vector<int> conjugate;    // I -> Ibar with N^{I Ibar}_0 = 1
    bool modular = false;          // rank(S) == number of irreps
    double verlinde_residual = 0;  // float check of the eigenvalue formula,
                                   // only meaningful when modular
};

Scalar quantum_trace(const HopfAlgebra &h, int I, const Op &X);
Scalar quantum_dimension(const HopfAlgebra &h, int I);

ModularData modular_data(HopfPtr h);

}  // namespace lca
