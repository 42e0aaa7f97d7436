#pragma once

#include "lca/modular.hpp"
#include "lca/universal.hpp"

namespace lca {

struct NegativeQuantumDimension : NumericError {
    using NumericError::NumericError;
};
struct KappaMissing : NumericError {
    using NumericError::NumericError;
};

// Regular carrier of the one-site algebra: the dual space with the
// twisted product action, plus the two site translations and the
// invariant vector.
struct SiteRep {
    HopfPtr algebra;
    int dim = 0;
    std::vector<Op> u_comp;   // component operators of u, dual-basis indexed
    std::vector<Op> i0, i1;   // left/right translations per basis element
    std::vector<Scalar> vacuum;
};

SiteRep build_site_rep(HopfPtr h);

// One representation of the periodic-lattice current algebra on
// R^{(N-1)} (x) V^I (x) V^J, with all generators and derived currents as
// explicit matrices / universal elements.
struct LatticeModel {
    HopfPtr algebra;
    SiteRep site_rep;
    int N = 1, I = 0, J = 0;
    int w = 0;

    // site_ops[n][k] = image of iota_n(e_k); n = 0..N-1, site 0 is the
    // marked site carrying the monodromy tails
    std::vector<std::vector<Op>> site_ops;
    std::vector<std::vector<Op>> theta;  // theta[nu-1][k] = theta_nu(e_k), nu=1..N

    std::vector<Universal> U;       // holonomies U_nu, nu = 1..N-1
    Universal M, Minv;              // left monodromy
    std::vector<Universal> J_cur, J_inv;   // currents J_n, n = 1..N
    std::vector<Universal> N_plus, N_minus;  // per site n = 0..N-1
    std::vector<Universal> J_right;
    Universal M_right;

    Op site_op(int n, const Elem &xi) const;  // n taken mod N
    Universal delta_at(int n, const Elem &xi) const;  // (id (x) iota_n)Delta(xi)
    Universal ribbon_aux(const Universal &x, long power) const;  // v_a^power . x
    std::vector<Op> generator_images() const;  // site ops + U/M components
};

LatticeModel build_lattice_rep(HopfPtr h, int N, int I, int J);
void derive_currents(LatticeModel &m);  // called by the builder, reusable
void derive_right_sector(LatticeModel &m);  // N_pm, right currents from J_cur/J_inv
inline LatticeModel build_K1_rep(HopfPtr h, int I, int J) {
    return build_lattice_rep(h, 1, I, J);
}

struct RelationReport {
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

RelationReport check_relations(const LatticeModel &m);

struct CenterData {
    std::vector<Op> c_left, c_right;      // central elements per label
    std::vector<Op> chi_left, chi_right;  // projectors (modular instances)
    RelationReport report;                // centrality / Verlinde / projector checks
};

CenterData center_and_projectors(const LatticeModel &m, const ModularData &md);

int irreducibility(const LatticeModel &m);

struct StarReport {
    RelationReport report;
    Op gram;  // solved inner product H
    bool positive = false;
};

StarReport star_structure(const LatticeModel &m);

struct OmegaReport {
    RelationReport report;
    int gns_rank = 0;
    int expected_rank = 0;
    bool psd = false;
};

// The invariant functional on monomials in current components times a
// site element, realized on the diagonal sum of the D^{Ibar I}_N.
OmegaReport omega_functional(HopfPtr h, int N);

// Exact pivoted symmetric elimination: (is psd, rank) of a Hermitian matrix.
std::pair<bool, int> hermitian_psd_rank(Op g);

}  // namespace lca
