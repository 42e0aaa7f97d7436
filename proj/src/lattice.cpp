#include "lca/lattice.hpp"

#include <algorithm>
#include <complex>
#include <functional>

namespace lca {

namespace {

Op embed_at(const std::vector<int> &dims, int idx, const Op &o, Backend b) {
    int pre = 1, post = 1;
    for (int i = 0; i < (int)dims.size(); ++i) {
        if (i < idx) pre *= dims[i];
        if (i > idx) post *= dims[i];
    }
    Op r = Op::identity(pre, b).kron(o);
    return post == 1 ? r : r.kron(Op::identity(post, b));
}

}  // namespace

SiteRep build_site_rep(HopfPtr hp) {
    const HopfAlgebra &h = *hp;
    int d = h.dim;
    SiteRep s;
    s.algebra = hp;
    s.dim = d;

    // twisted left multiplication by dual-basis states:
    // component i sends f_j to sum_k (R Delta(e_k))_{ij} f_k
    s.u_comp.assign(d, Op(d, d, h.backend));
    for (int k = 0; k < d; ++k) {
        Op rd = h.tensor2_mul(h.R, h.coproduct[k]);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const Scalar &c = rd.at(i, j);
                if (!c.is_zero()) s.u_comp[i].at(k, j) = c;
            }
    }

    // right translation f_m -> sum_a [e_a xi]_m f_a and left translation
    // by the antipode image
    s.i1.assign(d, Op(d, d, h.backend));
    s.i0.assign(d, Op(d, d, h.backend));
    for (int t = 0; t < d; ++t) {
        for (int a = 0; a < d; ++a)
            for (const auto &term : h.mult[a][t]) s.i1[t].at(a, term.k) = term.c;
        Elem st = h.apply_antipode(h.basis_elem(t));
        for (int a = 0; a < d; ++a) {
            Elem prod = h.mul(st, h.basis_elem(a));
            for (int m = 0; m < d; ++m)
                if (!prod[m].is_zero()) s.i0[t].at(a, m) = prod[m];
        }
    }

    s.vacuum = h.counit_row;
    return s;
}

Op LatticeModel::site_op(int n, const Elem &xi) const {
    const auto &mats = site_ops[((n % N) + N) % N];
    Op r(w, w, algebra->backend);
    for (int k = 0; k < algebra->dim; ++k)
        if (!xi[k].is_zero()) r.axpy(xi[k], mats[k]);
    return r;
}

Universal LatticeModel::delta_at(int n, const Elem &xi) const {
    return Universal::from_tensor2(*algebra, algebra->delta(xi),
                                   site_ops[((n % N) + N) % N]);
}

Universal LatticeModel::ribbon_aux(const Universal &x, long power) const {
    return x.apply_first_leg(algebra->left_mult_matrix(algebra->power(algebra->ribbon, power)));
}

std::vector<Op> LatticeModel::generator_images() const {
    std::vector<Op> out;
    for (const auto &mats : site_ops)
        for (const auto &o : mats) out.push_back(o);
    for (const auto &u : U)
        for (const auto &o : u.comp) out.push_back(o);
    for (const auto &o : M.comp) out.push_back(o);
    return out;
}

void derive_right_sector(LatticeModel &m) {
    const HopfAlgebra &h = *m.algebra;
    int N = m.N;

    m.N_plus.clear();
    m.N_minus.clear();
    for (int n = 0; n < N; ++n) {
        m.N_plus.push_back(Universal::from_tensor2(h, h.R.transpose(), m.site_ops[n]));
        m.N_minus.push_back(Universal::from_tensor2(h, h.R_inverse(), m.site_ops[n]));
    }

    // right currents and the right monodromy; inverses of N come from
    // flipping/inverting the coefficient tensor, never from solving
    m.J_right.clear();
    for (int n = 1; n <= N; ++n) {
        Universal nm_inv =
            Universal::from_tensor2(h, h.R, m.site_ops[n % N]);
        m.J_right.push_back(nm_inv.mul(m.J_inv[n - 1]).mul(m.N_plus[n - 1]));
    }
    Universal mr = m.J_right[N - 1];
    for (int n = N - 1; n >= 1; --n) mr = mr.mul(m.J_right[n - 1]);
    m.M_right = m.ribbon_aux(mr, 1 - (long)N);
}

void derive_currents(LatticeModel &m) {
    int N = m.N;

    m.J_cur.clear();
    m.J_inv.clear();
    if (N == 1) {
        m.J_cur.push_back(m.M);
        m.J_inv.push_back(m.Minv);
    } else {
        std::vector<Universal> uinv;
        for (const auto &u : m.U) uinv.push_back(u.inverse());
        m.J_cur.push_back(m.U[0]);
        for (int nu = 2; nu <= N - 1; ++nu)
            m.J_cur.push_back(m.ribbon_aux(uinv[nu - 2].mul(m.U[nu - 1]), 1));
        m.J_cur.push_back(m.ribbon_aux(uinv[N - 2].mul(m.M), 1));
        for (const auto &j : m.J_cur) m.J_inv.push_back(j.inverse());
    }

    derive_right_sector(m);
}

LatticeModel build_lattice_rep(HopfPtr hp, int N, int I, int J) {
    const HopfAlgebra &h = *hp;
    int d = h.dim;
    LatticeModel m;
    m.algebra = hp;
    m.N = N;
    m.I = I;
    m.J = J;
    m.site_rep = build_site_rep(hp);

    int dI = h.irreps[I].dim, dJ = h.irreps[J].dim;
    std::vector<int> dims(N - 1, d);
    dims.push_back(dI * dJ);
    m.w = dI * dJ;
    for (int i = 0; i < N - 1; ++i) m.w *= d;

    // theta tails: theta_1 is the counit, theta_nu adds the left
    // translation at factor nu-1 through the coproduct
    m.theta.assign(N, std::vector<Op>());
    for (int k = 0; k < d; ++k)
        m.theta[0].push_back(Op::identity(m.w, h.backend) * h.counit_row[k]);
    for (int nu = 2; nu <= N; ++nu) {
        std::vector<Op> cur(d, Op(m.w, m.w, h.backend));
        for (int k = 0; k < d; ++k) {
            const Op &dk = h.coproduct[k];
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                    const Scalar &c = dk.at(p, q);
                    if (c.is_zero()) continue;
                    Op i0q = embed_at(dims, nu - 2, m.site_rep.i0[q], h.backend);
                    cur[k].axpy(c, m.theta[nu - 2][p] * i0q);
                }
        }
        m.theta[nu - 1] = std::move(cur);
    }

    // two-label action on the last factor
    std::vector<Op> dij(d, Op(m.w, m.w, h.backend));
    for (int k = 0; k < d; ++k) {
        const Op &dk = h.coproduct[k];
        for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) {
                const Scalar &c = dk.at(r, s);
                if (c.is_zero()) continue;
                Op o = h.irreps[I].mats[r].kron(h.irreps[J].mats[s]);
                dij[k].axpy(c, embed_at(dims, N - 1, o, h.backend));
            }
    }

    m.site_ops.assign(N, std::vector<Op>());
    for (int k = 0; k < d; ++k) {
        Op o(m.w, m.w, h.backend);
        const Op &dk = h.coproduct[k];
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                const Scalar &c = dk.at(p, q);
                if (c.is_zero()) continue;
                o.axpy(c, m.theta[N - 1][p] * dij[q]);
            }
        m.site_ops[0].push_back(o);
    }
    for (int n = 1; n < N; ++n)
        for (int k = 0; k < d; ++k)
            m.site_ops[n].push_back(embed_at(dims, n - 1, m.site_rep.i1[k], h.backend));

    // holonomies with their R-matrix tails
    for (int nu = 1; nu <= N - 1; ++nu) {
        Universal tail = Universal::from_tensor2(h, h.R_inverse(), m.theta[nu - 1]);
        Universal base(h, m.w);
        for (int a = 0; a < d; ++a)
            base.comp[a] = embed_at(dims, nu - 1, m.site_rep.u_comp[a], h.backend);
        m.U.push_back(tail.mul(base));
    }

    Op mono = h.tensor2_mul(h.R.transpose(), h.R);
    Op mono_inv = h.tensor2_mul(h.R_inverse(), h.R_inverse().transpose());
    std::vector<Op> tauI(d);
    for (int a = 0; a < d; ++a)
        tauI[a] = embed_at(dims, N - 1,
                           h.irreps[I].mats[a].kron(Op::identity(dJ, h.backend)),
                           h.backend);
    Universal tail_m = Universal::from_tensor2(h, h.R_inverse(), m.theta[N - 1]);
    Universal tail_p = Universal::from_tensor2(h, h.R, m.theta[N - 1]);
    m.M = tail_m.mul(Universal::from_tensor2(h, mono, tauI)).mul(tail_p);
    m.Minv = tail_m.mul(Universal::from_tensor2(h, mono_inv, tauI)).mul(tail_p);

    derive_currents(m);
    return m;
}

namespace {

struct Lines {
    std::vector<CheckLine> v;
    void add(const std::string &name, double r) {
        v.push_back({name, r <= float_tol() ? CheckLine::Status::Pass
                                            : CheckLine::Status::Fail,
                     r});
    }
    void skip(const std::string &name) {
        v.push_back({name, CheckLine::Status::Skipped, 0.0});
    }
};

double one_leg_max(const LatticeModel &m,
                   const std::function<double(const Elem &)> &f) {
    double worst = 0;
    for (int k = 0; k < m.algebra->dim; ++k)
        worst = std::max(worst, f(m.algebra->basis_elem(k)));
    return worst;
}

}  // namespace

RelationReport check_relations(const LatticeModel &m) {
    const HopfAlgebra &h = *m.algebra;
    int N = m.N;
    Lines out;
    Op rp = h.R.transpose();
    Op rinv = h.R_inverse();
    Op nn = h.tensor2_mul(rp, h.R);  // coefficient tensor of the site braids

    auto name_n = [](const std::string &base, int n) {
        return base + " [" + std::to_string(n) + "]";
    };
    auto name_nm = [](const std::string &base, int n, int mm) {
        return base + " [" + std::to_string(n) + "," + std::to_string(mm) + "]";
    };

    for (int n = 1; n <= N; ++n) {
        const Universal &j = m.J_cur[n - 1];
        if (N > 1) {
            out.add(name_n("current multiplication table", n),
                    rel::two_leg_residual(h, {rel::leg1(j), rel::leg2(j)},
                                          {rel::cst(h.R), rel::delta_a(j)}));
            out.add(name_n("current exchange on one link", n),
                    rel::two_leg_residual(h, {rel::cst(rp), rel::leg1(j), rel::leg2(j)},
                                          {rel::leg2(j), rel::leg1(j), rel::cst(h.R)}));
        }
        out.add(name_n("current inverse", n),
                std::max(j.mul(m.J_inv[n - 1]).residual(Universal::unit_universal(h, m.w)),
                         m.J_inv[n - 1].mul(j).residual(Universal::unit_universal(h, m.w))));
    }

    // adjacent-link exchange needs the two links to share exactly one
    // site; at N = 2 they close up on both ends and only the holonomy
    // presentation below constrains the pair
    for (int n = 1; n <= N && N > 2; ++n) {
        int np1 = n % N + 1;
        const Universal &a = m.J_cur[n - 1], &b = m.J_cur[np1 - 1];
        out.add(name_nm("adjacent links braid", n, np1),
                rel::two_leg_residual(h, {rel::leg1(a), rel::cst(h.R), rel::leg2(b)},
                                      {rel::leg2(b), rel::leg1(a)}));
        for (int mm = 1; mm <= N; ++mm) {
            if (mm == n || mm == n % N + 1 || n == mm % N + 1) continue;
            const Universal &c = m.J_cur[mm - 1];
            out.add(name_nm("distant links commute", n, mm),
                    rel::two_leg_residual(h, {rel::leg1(a), rel::leg2(c)},
                                          {rel::leg2(c), rel::leg1(a)}));
        }
    }

    if (N > 1) {
        for (int n = 1; n <= N; ++n) {
            const Universal &j = m.J_cur[n - 1];
            out.add(name_n("gauge action, outgoing site", n),
                    one_leg_max(m, [&](const Elem &xi) {
                        return j.lmul_op(m.site_op(n, xi)).residual(j.mul(m.delta_at(n, xi)));
                    }));
            out.add(name_n("gauge action, incoming site", n),
                    one_leg_max(m, [&](const Elem &xi) {
                        return m.delta_at(n - 1, xi).mul(j).residual(
                            j.rmul_op(m.site_op(n - 1, xi)));
                    }));
            for (int mm = 0; mm < N; ++mm) {
                if (mm == n % N || mm == (n - 1) % N) continue;
                out.add(name_nm("gauge action, distant site", n, mm),
                        one_leg_max(m, [&](const Elem &xi) {
                            Op o = m.site_op(mm, xi);
                            return j.lmul_op(o).residual(j.rmul_op(o));
                        }));
            }
        }
    }

    for (int n = 0; n < N; ++n) {
        Universal nb = Universal::from_tensor2(h, nn, m.site_ops[n]);
        out.add(name_n("site braid multiplication table", n),
                rel::two_leg_residual(h, {rel::leg1(nb), rel::cst(h.R), rel::leg2(nb)},
                                      {rel::cst(h.R), rel::delta_a(nb)}));
        out.add(name_n("site braid reflection", n),
                rel::two_leg_residual(
                    h,
                    {rel::cst(rp), rel::leg1(nb), rel::cst(h.R), rel::leg2(nb)},
                    {rel::leg2(nb), rel::cst(rp), rel::leg1(nb), rel::cst(h.R)}));
    }
    for (int n = 1; n <= N && N > 1; ++n) {
        const Universal &j = m.J_cur[n - 1];
        Universal nb_n = Universal::from_tensor2(h, nn, m.site_ops[n % N]);
        Universal nb_p = Universal::from_tensor2(h, nn, m.site_ops[n - 1]);
        out.add(name_n("site braid against outgoing current", n),
                rel::two_leg_residual(
                    h, {rel::leg2(nb_n), rel::leg1(j)},
                    {rel::leg1(j), rel::cst(h.R), rel::leg2(nb_n), rel::cst(rp)}));
        out.add(name_n("site braid against incoming current", n),
                rel::two_leg_residual(
                    h, {rel::leg1(j), rel::leg2(nb_p)},
                    {rel::cst(h.R), rel::leg2(nb_p), rel::cst(rp), rel::leg1(j)}));
    }

    for (int n = 1; n <= N; ++n) {
        const Universal &jr = m.J_right[n - 1];
        if (N > 1)
            out.add(name_n("right current multiplication table", n),
                    rel::two_leg_residual(h, {rel::leg2(jr), rel::leg1(jr)},
                                          {rel::cst(h.R), rel::delta_a(jr)}));
        // adjacent right currents braid cleanly only when the two links
        // meet in a single site
        if (N > 2) {
            int np1 = n % N + 1;
            const Universal &jr2 = m.J_right[np1 - 1];
            out.add(name_nm("right current braid", n, np1),
                    rel::two_leg_residual(h,
                                          {rel::leg2(jr2), rel::cst(h.R), rel::leg1(jr)},
                                          {rel::leg1(jr), rel::leg2(jr2)}));
        }
        for (int mm = 1; mm <= N; ++mm) {
            const Universal &jl = m.J_cur[mm - 1];
            out.add(name_nm("left and right currents commute", n, mm),
                    rel::two_leg_residual(h, {rel::leg1(jr), rel::leg2(jl)},
                                          {rel::leg2(jl), rel::leg1(jr)}));
        }
    }

    out.add("monodromy multiplication table",
            rel::two_leg_residual(h, {rel::leg1(m.M), rel::cst(h.R), rel::leg2(m.M)},
                                  {rel::cst(h.R), rel::delta_a(m.M)}));
    out.add("right monodromy multiplication table",
            rel::two_leg_residual(h,
                                  {rel::leg2(m.M_right), rel::cst(h.R), rel::leg1(m.M_right)},
                                  {rel::cst(h.R), rel::delta_a(m.M_right)}));
    out.add("monodromy inverse",
            std::max(m.M.mul(m.Minv).residual(Universal::unit_universal(h, m.w)),
                     m.Minv.mul(m.M).residual(Universal::unit_universal(h, m.w))));
    out.add("monodromy commutes with the marked site action",
            one_leg_max(m, [&](const Elem &xi) {
                Universal dn = m.delta_at(0, xi);
                return dn.mul(m.M).residual(m.M.mul(dn));
            }));
    out.add("right monodromy commutes with the flipped marked site action",
            one_leg_max(m, [&](const Elem &xi) {
                Universal dn = Universal::from_tensor2(
                    h, m.algebra->delta(xi).transpose(), m.site_ops[0]);
                return dn.mul(m.M_right).residual(m.M_right.mul(dn));
            }));

    // generator presentation used to assemble the representation
    for (int nu = 1; nu <= N - 1; ++nu) {
        const Universal &u = m.U[nu - 1];
        out.add(name_n("holonomy multiplication table", nu),
                rel::two_leg_residual(h, {rel::leg1(u), rel::leg2(u)},
                                      {rel::cst(h.R), rel::delta_a(u)}));
        out.add(name_n("holonomy gauge action at its own site", nu),
                one_leg_max(m, [&](const Elem &xi) {
                    return u.lmul_op(m.site_op(nu, xi)).residual(u.mul(m.delta_at(nu, xi)));
                }));
        out.add(name_n("holonomy gauge action at the marked site", nu),
                one_leg_max(m, [&](const Elem &xi) {
                    return m.delta_at(0, xi).mul(u).residual(u.rmul_op(m.site_op(0, xi)));
                }));
        for (int mu = nu + 1; mu <= N - 1; ++mu) {
            const Universal &u2 = m.U[mu - 1];
            out.add(name_nm("holonomy exchange", nu, mu),
                    rel::two_leg_residual(h,
                                          {rel::cst(rp), rel::leg1(u), rel::leg2(u2)},
                                          {rel::leg2(u2), rel::leg1(u)}));
        }
        out.add(name_n("holonomy against the monodromy", nu),
                rel::two_leg_residual(h,
                                      {rel::cst(rp), rel::leg1(u), rel::leg2(m.M)},
                                      {rel::leg2(m.M), rel::cst(rp), rel::leg1(u)}));
    }
    if (N > 1) {
        Universal prod = m.J_cur[0];
        for (int n = 2; n <= N; ++n) prod = prod.mul(m.J_cur[n - 1]);
        out.add("monodromy as ordered current product",
                m.M.residual(m.ribbon_aux(prod, 1 - (long)N)));
    }

    double site_comm = 0;
    for (int n = 0; n < N; ++n)
        for (int mm = n + 1; mm < N; ++mm)
            for (int k = 0; k < h.dim; ++k)
                for (int l = 0; l < h.dim; ++l)
                    site_comm = std::max(site_comm,
                                         (m.site_ops[n][k] * m.site_ops[mm][l])
                                             .residual(m.site_ops[mm][l] * m.site_ops[n][k]));
    out.add("site copies commute", site_comm);

    double site_hom = 0;
    for (int n = 0; n < N; ++n)
        for (int k = 0; k < h.dim; ++k)
            for (int l = 0; l < h.dim; ++l) {
                Op lhs = m.site_ops[n][k] * m.site_ops[n][l];
                Op rhs(m.w, m.w, h.backend);
                for (const auto &t : h.mult[k][l]) rhs.axpy(t.c, m.site_ops[n][t.k]);
                site_hom = std::max(site_hom, lhs.residual(rhs));
            }
    out.add("site actions are algebra maps", site_hom);

    RelationReport rep;
    rep.lines = std::move(out.v);
    return rep;
}

CenterData center_and_projectors(const LatticeModel &m, const ModularData &md) {
    const HopfAlgebra &h = *m.algebra;
    int k = (int)h.irreps.size();
    CenterData cd;
    Lines out;

    for (int I = 0; I < k; ++I) {
        Op cl(m.w, m.w, h.backend), cr(m.w, m.w, h.backend);
        for (int a = 0; a < h.dim; ++a) {
            Scalar t = quantum_trace(h, I, h.irreps[I].mats[a]);
            if (t.is_zero()) continue;
            cl.axpy(t, m.M.comp[a]);
            cr.axpy(t, m.M_right.comp[a]);
        }
        cd.c_left.push_back(cl);
        cd.c_right.push_back(cr);
    }

    double central = 0;
    auto gens = m.generator_images();
    for (int I = 0; I < k; ++I)
        for (const auto &g : gens) {
            central = std::max(central, (cd.c_left[I] * g).residual(g * cd.c_left[I]));
            central = std::max(central, (cd.c_right[I] * g).residual(g * cd.c_right[I]));
        }
    out.add("monodromy traces are central", central);

    double verlinde = 0;
    for (int I = 0; I < k; ++I)
        for (int J = 0; J < k; ++J) {
            Op lhs_l = cd.c_left[I] * cd.c_left[J];
            Op lhs_r = cd.c_right[I] * cd.c_right[J];
            Op rhs_l(m.w, m.w, h.backend), rhs_r(m.w, m.w, h.backend);
            for (int K = 0; K < k; ++K) {
                if (md.fusion[I][J][K] == 0) continue;
                Scalar c = Scalar::integer(md.fusion[I][J][K]);
                rhs_l.axpy(c, cd.c_left[K]);
                rhs_r.axpy(c, cd.c_right[K]);
            }
            verlinde = std::max(verlinde, lhs_l.residual(rhs_l));
            verlinde = std::max(verlinde, lhs_r.residual(rhs_r));
        }
    out.add("monodromy traces close onto the fusion ring", verlinde);

    if (md.modular) {
        for (int I = 0; I < k; ++I) {
            Op chl(m.w, m.w, h.backend), chr(m.w, m.w, h.backend);
            for (int J = 0; J < k; ++J) {
                Scalar c = md.normalizer * md.qdim[I] * md.s.at(I, md.conjugate[J]);
                if (c.is_zero()) continue;
                chl.axpy(c, cd.c_left[J]);
                chr.axpy(c, cd.c_right[J]);
            }
            cd.chi_left.push_back(chl);
            cd.chi_right.push_back(chr);
        }
        double idem = 0;
        Op suml(m.w, m.w, h.backend);
        for (int I = 0; I < k; ++I) {
            suml += cd.chi_left[I];
            for (int J = 0; J < k; ++J) {
                Op p = cd.chi_left[I] * cd.chi_left[J];
                Op q = cd.chi_right[I] * cd.chi_right[J];
                Op el = I == J ? cd.chi_left[I] : Op(m.w, m.w, h.backend);
                Op er = I == J ? cd.chi_right[I] : Op(m.w, m.w, h.backend);
                idem = std::max({idem, p.residual(el), q.residual(er)});
            }
        }
        out.add("central projectors are orthogonal idempotents", idem);
        out.add("central projectors resolve the identity",
                suml.residual(Op::identity(m.w, h.backend)));

        double characteristic = 0;
        for (int K = 0; K < k; ++K)
            for (int L = 0; L < k; ++L) {
                Op p = cd.chi_left[K] * cd.chi_right[L];
                Op expect = (K == m.I && L == m.J) ? Op::identity(m.w, h.backend)
                                                   : Op(m.w, m.w, h.backend);
                characteristic = std::max(characteristic, p.residual(expect));
            }
        out.add("projector pair detects the labels", characteristic);
    } else {
        out.skip("central projectors are orthogonal idempotents");
        out.skip("central projectors resolve the identity");
        out.skip("projector pair detects the labels");
    }

    cd.report.lines = std::move(out.v);
    return cd;
}

int irreducibility(const LatticeModel &m) {
    return commutant_dimension(m.generator_images());
}

std::pair<bool, int> hermitian_psd_rank(Op g) {
    int n = g.rows();
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    int rank = 0;
    double scale = std::max(1.0, g.max_abs());
    while (!active.empty()) {
        int piv = -1;
        double best = 0;
        for (int i : active) {
            double v = g.at(i, i).abs_num();
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (piv < 0 || best <= 1e-12 * scale) {
            // zero diagonal: any remaining off-diagonal mass breaks psd
            for (int i : active)
                for (int j : active)
                    if (g.at(i, j).abs_num() > 1e-9 * scale) return {false, rank};
            return {true, rank};
        }
        std::complex<double> p = g.at(piv, piv).to_complex();
        if (p.real() <= 0 || std::abs(p.imag()) > 1e-9 * scale) return {false, rank};
        Scalar pv = g.at(piv, piv);
        for (int i : active) {
            if (i == piv) continue;
            Scalar f = g.at(i, piv) / pv;
            if (f.is_zero()) continue;
            for (int j : active) {
                if (j == piv) continue;
                g.at(i, j) = g.at(i, j) - f * g.at(piv, j);
            }
        }
        ++rank;
        std::vector<int> next;
        for (int i : active)
            if (i != piv) next.push_back(i);
        active = std::move(next);
    }
    return {true, rank};
}

StarReport star_structure(const LatticeModel &m) {
    const HopfAlgebra &h = *m.algebra;
    if (!h.kappa) throw KappaMissing("instance has no ribbon square root");
    if (!h.star) throw KappaMissing("instance has no star structure");
    int N = m.N, d = h.dim;
    StarReport sr;
    Lines out;

    Elem kinv = h.inverse(*h.kappa);
    Op ts = h.tensor2_mul(h.tensor2_mul(h.delta(kinv), h.tensor2_of(*h.kappa, *h.kappa)),
                          h.R_inverse());
    Op ts_inv = h.tensor2_mul(h.tensor2_mul(h.R, h.tensor2_of(kinv, kinv)),
                              h.delta(*h.kappa));

    std::vector<Universal> s_fwd, s_inv;
    for (int n = 0; n < N; ++n) {
        s_fwd.push_back(Universal::from_tensor2(h, ts, m.site_ops[n]));
        s_inv.push_back(Universal::from_tensor2(h, ts_inv, m.site_ops[n]));
    }

    std::vector<Universal> jstar;
    for (int n = 1; n <= N; ++n)
        jstar.push_back(s_inv[n % N].mul(m.J_inv[n - 1]).mul(s_fwd[n - 1]));

    // solve D(x)^dag H = H D(x^*) over all generators, with the current
    // components tied to their starred partners through the auxiliary star
    const Op &st = *h.star;
    std::vector<std::pair<Op, Op>> pairs;
    for (int n = 0; n < N; ++n)
        for (int k = 0; k < d; ++k)
            pairs.push_back({m.site_ops[n][k].conj_transpose(),
                             m.site_op(n, h.apply_star(h.basis_elem(k)))});
    for (int n = 1; n <= N; ++n)
        for (int b = 0; b < d; ++b) {
            Op a(m.w, m.w, h.backend);
            for (int aa = 0; aa < d; ++aa) {
                const Scalar &c = st.at(b, aa);
                if (c.is_zero()) continue;
                a.axpy(c, m.J_cur[n - 1].comp[aa].conj_transpose());
            }
            pairs.push_back({a, jstar[n - 1].comp[b]});
        }
    auto sols = solve_intertwiners(pairs);

    Op H = Op::identity(m.w, h.backend);
    bool found = false;
    for (const auto &s : sols) {
        Op cand = s + s.conj_transpose();
        auto [psd, rank] = hermitian_psd_rank(cand);
        if (psd && rank == m.w) {
            H = cand;
            found = true;
            break;
        }
        cand = (s - s.conj_transpose()) * Scalar::complex_num({0, -1});
        if (h.backend == Backend::Float) {
            auto [psd2, rank2] = hermitian_psd_rank(cand);
            if (psd2 && rank2 == m.w) {
                H = cand;
                found = true;
                break;
            }
        }
    }
    if (found) {
        // normalize so the first diagonal entry is 1
        H = H * H.at(0, 0).inv();
    }
    sr.positive = found;
    out.v.push_back({"positive invariant inner product exists",
                     found ? CheckLine::Status::Pass : CheckLine::Status::Fail,
                     0.0});

    if (found) {
        Op Hinv = H.inverse();
        auto adjoint = [&](const Op &x) { return Hinv * x.conj_transpose() * H; };
        auto star_universal = [&](const std::vector<Universal> &js, int idx) {
            Universal r(h, m.w);
            for (int b = 0; b < d; ++b)
                for (int aa = 0; aa < d; ++aa) {
                    const Scalar &c = st.at(b, aa);
                    if (c.is_zero()) continue;
                    r.comp[b].axpy(c, adjoint(js[idx].comp[aa]));
                }
            return r;
        };

        double starres = 0;
        for (int n = 1; n <= N; ++n)
            starres = std::max(starres,
                               star_universal(m.J_cur, n - 1).residual(jstar[n - 1]));
        out.add("current adjoints match the twisted inversion formula", starres);

        double invol = 0;
        for (int n = 1; n <= N; ++n)
            invol = std::max(invol,
                             star_universal(jstar, n - 1).residual(m.J_cur[n - 1]));
        out.add("star is an involution on the currents", invol);

        double siteres = 0;
        for (int n = 0; n < N; ++n)
            for (int k = 0; k < d; ++k)
                siteres = std::max(
                    siteres, adjoint(m.site_ops[n][k])
                                 .residual(m.site_op(n, h.apply_star(h.basis_elem(k)))));
        out.add("site adjoints follow the algebra star", siteres);
    }

    sr.gram = H;
    sr.report.lines = std::move(out.v);
    return sr;
}

OmegaReport omega_functional(HopfPtr hp, int N) {
    const HopfAlgebra &h = *hp;
    int k = (int)h.irreps.size();
    OmegaReport orp;
    Lines out;

    auto md = modular_data(hp);
    for (int I = 0; I < k; ++I)
        if (md.qdim[I].to_complex().real() <= 0)
            throw NegativeQuantumDimension("quantum dimension not positive");

    // diagonal models with their invariant cyclic vectors
    std::vector<LatticeModel> models;
    std::vector<Op> vac;
    std::vector<Scalar> weight;
    Scalar total = Scalar::of_backend_zero(h.backend);
    for (int I = 0; I < k; ++I) total = total + md.qdim[I] * md.qdim[I];
    for (int I = 0; I < k; ++I) {
        int Ibar = md.conjugate[I];
        models.push_back(build_lattice_rep(hp, N, Ibar, I));
        const LatticeModel &m = models.back();
        // invariant vector: image of the vacuum projector on the last factor
        Op p = m.site_op(0, h.vacuum_projector());
        Op basis = p.column_space_basis();
        if (basis.cols() != 1)
            throw NumericError("invariant subspace of the diagonal block is not a line");
        Op v(m.w, 1, h.backend);
        // assemble Omega^{(N-1)} (x) omega_I from the site vacua
        int dI = h.irreps[Ibar].dim * h.irreps[I].dim;
        std::vector<Scalar> full;
        full.reserve(m.w);
        // product basis order: sites first, then the label factor
        {
            std::vector<Scalar> acc(1, Scalar::of_backend_one(h.backend));
            for (int s = 0; s < N - 1; ++s) {
                std::vector<Scalar> nxt;
                nxt.reserve(acc.size() * h.dim);
                for (const auto &c : acc)
                    for (int t = 0; t < h.dim; ++t) nxt.push_back(c * m.site_rep.vacuum[t]);
                acc = std::move(nxt);
            }
            for (const auto &c : acc)
                for (int t = 0; t < dI; ++t) full.push_back(c * basis.at(t, 0));
        }
        for (int i = 0; i < m.w; ++i) v.at(i, 0) = full[i];
        vac.push_back(v);
        weight.push_back(md.qdim[I] * md.qdim[I] / total);
    }

    auto inner = [&](const Op &a, const Op &b) {
        return (a.conj_transpose() * b).at(0, 0);
    };
    auto omega_of = [&](const std::vector<Op> &ops) {
        // one operator per diagonal block
        Scalar r = Scalar::of_backend_zero(h.backend);
        for (int I = 0; I < k; ++I)
            r = r + weight[I] * inner(vac[I], ops[I] * vac[I]) / inner(vac[I], vac[I]);
        return r;
    };

    auto lift_site = [&](int n, const Elem &xi) {
        std::vector<Op> ops;
        for (int I = 0; I < k; ++I) ops.push_back(models[I].site_op(n, xi));
        return ops;
    };
    double eps_res = 0;
    for (int n = 0; n < N; ++n)
        for (int t = 0; t < h.dim; ++t) {
            Elem xi = h.basis_elem(t);
            Scalar v = omega_of(lift_site(n, xi));
            eps_res = std::max(eps_res, (v - h.counit(xi)).abs_num());
        }
    out.add("functional restricts to the counit on every site", eps_res);

    // a single current component with a nontrivial label is annihilated
    double cur_res = 0;
    for (int n = 1; n <= N; ++n)
        for (int L = 0; L < k; ++L) {
            const Irrep &ir = h.irreps[L];
            for (int a = 0; a < ir.dim; ++a)
                for (int b = 0; b < ir.dim; ++b) {
                    std::vector<Op> ops;
                    for (int I = 0; I < k; ++I) {
                        Op o(models[I].w, models[I].w, h.backend);
                        for (int t = 0; t < h.dim; ++t) {
                            const Scalar &c = ir.mats[t].at(a, b);
                            if (c.is_zero()) continue;
                            o.axpy(c, models[I].J_cur[n - 1].comp[t]);
                        }
                        ops.push_back(o);
                    }
                    Scalar v = omega_of(ops);
                    Scalar expect = (L == h.trivial_irrep && a == b)
                                        ? Scalar::of_backend_one(h.backend)
                                        : Scalar::of_backend_zero(h.backend);
                    cur_res = std::max(cur_res, (v - expect).abs_num());
                }
        }
    out.add("single current insertions carry trivial label only", cur_res);

    // GNS space: monomial states over all label/component choices per link
    struct Choice {
        int label, a, b;
    };
    std::vector<Choice> comps;
    for (int L = 0; L < k; ++L)
        for (int a = 0; a < h.irreps[L].dim; ++a)
            for (int b = 0; b < h.irreps[L].dim; ++b) comps.push_back({L, a, b});
    long count = 1;
    for (int n = 0; n < N; ++n) count *= (long)comps.size();

    std::vector<std::vector<Op>> states;
    for (long c = 0; c < count; ++c) {
        long rem = c;
        std::vector<Op> psi;
        for (int I = 0; I < k; ++I) psi.push_back(vac[I]);
        for (int n = N; n >= 1; --n) {
            const Choice &ch = comps[rem % comps.size()];
            rem /= comps.size();
            for (int I = 0; I < k; ++I) {
                Op o(models[I].w, models[I].w, h.backend);
                for (int t = 0; t < h.dim; ++t) {
                    const Scalar &cf = h.irreps[ch.label].mats[t].at(ch.a, ch.b);
                    if (cf.is_zero()) continue;
                    o.axpy(cf, models[I].J_cur[n - 1].comp[t]);
                }
                psi[I] = o * psi[I];
            }
        }
        states.push_back(std::move(psi));
    }

    Op gram((int)states.size(), (int)states.size(), h.backend);
    for (int i = 0; i < (int)states.size(); ++i)
        for (int j = 0; j < (int)states.size(); ++j) {
            Scalar g = Scalar::of_backend_zero(h.backend);
            for (int I = 0; I < k; ++I)
                g = g + weight[I] * inner(states[i][I], states[j][I]) /
                            inner(vac[I], vac[I]);
            gram.at(i, j) = g;
        }
    auto [psd, rank] = hermitian_psd_rank(gram);
    orp.psd = psd;
    orp.gns_rank = rank;
    orp.expected_rank = 0;
    for (int I = 0; I < k; ++I) orp.expected_rank += models[I].w;
    out.v.push_back({"vacuum correlation matrix is positive semidefinite",
                     psd ? CheckLine::Status::Pass : CheckLine::Status::Fail, 0.0});
    out.add("cyclic space fills the diagonal sum",
            rank == orp.expected_rank ? 0.0 : 1.0);

    orp.report.lines = std::move(out.v);
    return orp;
}

}  // namespace lca
