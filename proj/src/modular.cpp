#include "lca/modular.hpp"

#include <complex>

namespace lca {

Scalar quantum_trace(const HopfAlgebra &h, int I, const Op &X) {
    const Irrep &ir = h.irreps[I];
    if (X.rows() != ir.dim || X.cols() != ir.dim)
        throw DimensionMismatch("quantum trace of wrong-sized operator");
    return (X * h.irrep_apply(I, h.grouplike_g())).trace();
}

Scalar quantum_dimension(const HopfAlgebra &h, int I) {
    return quantum_trace(h, I, Op::identity(h.irreps[I].dim, h.backend));
}

namespace {

// rank of (tau^I (x) tau^J)Delta(z) without forming the big Kronecker sum
// more than once
Op delta_image(const HopfAlgebra &h, int I, int J, const Elem &z) {
    const Irrep &a = h.irreps[I], &b = h.irreps[J];
    Op out(a.dim * b.dim, a.dim * b.dim, h.backend);
    Op dz = h.delta(z);
    for (int p = 0; p < h.dim; ++p)
        for (int q = 0; q < h.dim; ++q) {
            const Scalar &c = dz.at(p, q);
            if (c.is_zero()) continue;
            out.axpy(c, a.mats[p].kron(b.mats[q]));
        }
    return out;
}

}  // namespace

ModularData modular_data(HopfPtr hp) {
    const HopfAlgebra &h = *hp;
    int k = (int)h.irreps.size();
    ModularData md;
    md.algebra = hp;

    for (int I = 0; I < k; ++I) md.qdim.push_back(quantum_dimension(h, I));

    // trace vectors tq^I(e_a) once, then contract with the monodromy
    std::vector<std::vector<Scalar>> tq(k);
    for (int I = 0; I < k; ++I)
        for (int a = 0; a < h.dim; ++a)
            tq[I].push_back(quantum_trace(h, I, h.irreps[I].mats[a]));

    Op m2 = h.tensor2_mul(h.R.transpose(), h.R);
    md.s_unnormalized = Op(k, k, h.backend);
    for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b) {
            const Scalar &c = m2.at(a, b);
            if (c.is_zero()) continue;
            for (int I = 0; I < k; ++I) {
                if (tq[I][a].is_zero()) continue;
                for (int J = 0; J < k; ++J) {
                    Scalar &dst = md.s_unnormalized.at(I, J);
                    dst = dst + c * tq[I][a] * tq[J][b];
                }
            }
        }

    Scalar sum = Scalar::of_backend_zero(h.backend);
    for (int I = 0; I < k; ++I) sum = sum + md.qdim[I] * md.qdim[I];
    unsigned long global_dim;
    if (h.backend == Backend::Exact)
        global_dim = (unsigned long)sum.rational_value().get_num().get_ui();
    else
        global_dim = (unsigned long)std::lround(sum.to_complex().real());
    md.normalizer = Scalar::of_backend_one(h.backend) /
                    sqrt_integer(global_dim, h.conductor, h.backend);
    md.s = md.s_unnormalized * md.normalizer;
    md.modular = md.s_unnormalized.rank() == k;

    for (int I = 0; I < k; ++I) {
        Op m = h.irrep_apply(I, h.ribbon);
        md.t_diag.push_back(m.at(0, 0));
    }

    md.fusion.assign(k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
    std::vector<Elem> zs;
    for (int K = 0; K < k; ++K) zs.push_back(h.central_idempotent(K));
    for (int I = 0; I < k; ++I)
        for (int J = 0; J < k; ++J)
            for (int K = 0; K < k; ++K) {
                int r = delta_image(h, I, J, zs[K]).rank();
                if (r % h.irreps[K].dim != 0)
                    throw NonIntegerMultiplicity("central idempotent rank not a "
                                                 "multiple of the irrep dimension");
                md.fusion[I][J][K] = r / h.irreps[K].dim;
            }

    md.conjugate.assign(k, -1);
    for (int I = 0; I < k; ++I) {
        for (int J = 0; J < k; ++J)
            if (md.fusion[I][J][h.trivial_irrep] == 1) {
                if (md.conjugate[I] != -1)
                    throw NumericError("conjugate label not unique");
                md.conjugate[I] = J;
            }
        if (md.conjugate[I] == -1) throw NumericError("conjugate label not found");
    }

    if (md.modular) {
        // Verlinde: columns of S diagonalize every fusion matrix with
        // eigenvalues S_IJ / S_0J
        Op sf = md.s.to_float();
        int tv = h.trivial_irrep;
        double worst = 0;
        for (int I = 0; I < k; ++I) {
            Op n(k, k, Backend::Float);
            for (int J = 0; J < k; ++J)
                for (int K = 0; K < k; ++K)
                    n.at(J, K) = Scalar::integer(md.fusion[I][J][K]).to_float();
            for (int J = 0; J < k; ++J) {
                std::complex<double> lam =
                    sf.at(I, J).to_complex() / sf.at(tv, J).to_complex();
                for (int K = 0; K < k; ++K) {
                    std::complex<double> lhs = 0;
                    for (int L = 0; L < k; ++L)
                        lhs += n.at(K, L).to_complex() * sf.at(L, J).to_complex();
                    worst = std::max(worst,
                                     std::abs(lhs - lam * sf.at(K, J).to_complex()));
                }
            }
        }
        md.verlinde_residual = worst;
    }
    return md;
}

}  // namespace lca
