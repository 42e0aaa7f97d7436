#pragma once

#include "lca/lattice.hpp"

namespace lca {

struct InstanceMismatch : NumericError {
    using NumericError::NumericError;
};

// Wrap externally supplied generator images (site operators plus currents
// with their inverses) as a LatticeModel, deriving holonomies, monodromies
// and the right sector, so the usual relation checker applies.
LatticeModel assemble_model(HopfPtr h, int N, int w,
                            std::vector<std::vector<Op>> site_ops,
                            std::vector<Universal> J,
                            std::vector<Universal> J_inv);

// Gluing of a length-M and a length-N closed chain at their marked sites;
// enumeration starts from the gluing point, the glued site itself sits at
// position 0 and carries the coproduct action.
struct GluedRep {
    const LatticeModel *left = nullptr, *right = nullptr;
    LatticeModel model;      // assembled K_{M+N-1} rep on W_left (x) W_right
    RelationReport report;   // homomorphism property
};

GluedRep lambda_glue(const LatticeModel &a, const LatticeModel &b);
GluedRep lambda_tilde_glue(const LatticeModel &a, const LatticeModel &b);

// K = tilde-glued kappa times the inverse of the two local kappas; the two
// gluings are intertwined by the star operation through K.
struct StarGlue {
    Op K;
    RelationReport report;
};

StarGlue star_intertwiner(const LatticeModel &a, const LatticeModel &b);

// Block-spin restrictions: images of the length-(N-1) algebra inside a
// length-N model, by merging the last link (gamma) or the first one (c).
LatticeModel gamma_restrict(const LatticeModel &hat);
LatticeModel c_restrict(const LatticeModel &hat);

struct DecompositionReport {
    std::vector<std::vector<int>> mult;   // m[K][L]
    std::vector<std::vector<int>> ranks;  // rank of chi^K_L chi^L_R
    double residual = 0;                  // resolve-identity defect of the chi
    bool consistent = false;              // sum rule against the carrier dim
};

DecompositionReport decompose(const LatticeModel &m, const ModularData &md);

struct BlockspinReport {
    LatticeModel restricted;
    RelationReport report;   // homomorphism + projector embedding
    DecompositionReport dec;
};

BlockspinReport blockspin_gamma(const LatticeModel &hat, const ModularData &md);
BlockspinReport blockspin_c(const LatticeModel &hat, const ModularData &md);

// p_i = iota_i(P^0) for i = 1..N-1 and their product P_N.
struct LocalProjectors {
    std::vector<Op> p;
    Op P;
    RelationReport report;
};

LocalProjectors local_projectors(const LatticeModel &m);

// Site-preserving coproduct: restriction of the glued c-composite to the
// image of the left-leg projector P_N.
struct DeltaRep {
    LatticeModel model;  // K_N rep on the projected subspace
    Op P, C, L;          // projector on W (x) W, section and retraction
    RelationReport report;
};

DeltaRep delta_tensor(const LatticeModel &a, const LatticeModel &b);

// Max residual of (id (x) glue_{N,L}) o glue_{M,L+N-1} against
// (glue_{M,N} (x) id) o glue_{M+N-1,L} on all generators.
double coassociativity_check(const LatticeModel &a, const LatticeModel &b,
                             const LatticeModel &c);

// Max residual of (gamma (x) gamma) o Delta_N against Delta_{N+1} o gamma
// on all generators, evaluated inside a pair of length-(N+1) models.
double blockspin_compat_residual(const LatticeModel &ahat,
                                 const LatticeModel &bhat);

// Tensoring with the length-N vacuum on either side reproduces the
// labelled length-N model, one copy each; one report line per product.
RelationReport functor_check(HopfPtr h, const ModularData &md, int N,
                             const std::vector<std::pair<int, int>> &labels);

}  // namespace lca
