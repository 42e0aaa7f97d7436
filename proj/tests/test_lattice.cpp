#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/instances.hpp"
#include "lca/lattice.hpp"

using namespace lca;

namespace {

void require_report(const RelationReport &rep) {
    for (const auto &l : rep.lines) {
        INFO(l.name, " residual ", l.residual);
        CHECK(l.status != CheckLine::Status::Fail);
    }
}

// tau^1 component of a universal element for the cyclic instances
Op label_one(const HopfAlgebra &h, const Universal &x) {
    Op r(x.w, x.w, h.backend);
    for (int a = 0; a < h.dim; ++a)
        r.axpy(h.irreps[1].mats[a].at(0, 0), x.comp[a]);
    return r;
}

}  // namespace

TEST_CASE("site representation of the cyclic instances") {
    for (int p : {2, 3, 5}) {
        auto h = make_zq(p, Backend::Exact);
        SiteRep s = build_site_rep(h);
        REQUIRE(s.dim == p);

        // u obeys the same multiplication table as a current
        Universal u(*h, p);
        u.comp = s.u_comp;
        CHECK(rel::two_leg_residual(*h, {rel::leg1(u), rel::leg2(u)},
                                    {rel::cst(h->R), rel::delta_a(u)}) < float_tol());

        // covariance of the two translations
        for (int t = 0; t < p; ++t) {
            Elem xi = h->basis_elem(t);
            Op dx = h->delta(xi);
            CHECK(u.lmul_op(s.i1[t])
                      .residual(u.mul(Universal::from_tensor2(*h, dx, s.i1))) <
                  float_tol());
            CHECK(Universal::from_tensor2(*h, dx, s.i0).mul(u).residual(
                      u.rmul_op(s.i0[t])) < float_tol());
        }

        // invariant vector
        for (int t = 0; t < p; ++t) {
            Op om(p, 1, h->backend);
            for (int i = 0; i < p; ++i) om.at(i, 0) = s.vacuum[i];
            Scalar e = h->counit(h->basis_elem(t));
            CHECK((s.i1[t] * om).residual(om * e) < float_tol());
            CHECK((s.i0[t] * om).residual(om * e) < float_tol());
        }
    }
}

TEST_CASE("one-site models of the cyclic instances") {
    int p = 3;
    auto h = make_zq(p, Backend::Exact);
    Scalar q = Scalar::zeta(4 * p, 4);
    auto md = modular_data(h);
    for (int s = 0; s < p; ++s)
        for (int t = 0; t < p; ++t) {
            LatticeModel m = build_K1_rep(h, s, t);
            REQUIRE(m.w == 1);
            require_report(check_relations(m));

            // known eigenvalues of the marked-site action and the central
            // monodromy trace
            Op g0 = m.site_op(0, h->basis_elem(1));
            Scalar want_g = Scalar::of_backend_one(h->backend);
            for (int i = 0; i < s + t; ++i) want_g = want_g * q;
            CHECK((g0.at(0, 0) - want_g).abs_num() < float_tol());

            CenterData cd = center_and_projectors(m, md);
            require_report(cd.report);
            // the first monodromy trace sees the left label conjugately
            Scalar want_c = Scalar::of_backend_one(h->backend);
            for (int i = 0; i < 2 * s; ++i) want_c = want_c * q;
            INFO("c = ", cd.c_left[1].at(0, 0).str());
            CHECK((cd.c_left[1].at(0, 0) - want_c).abs_num() < float_tol());

            CHECK(irreducibility(m) == 1);
        }
}

TEST_CASE("cyclic lattice models satisfy the full relation set") {
    struct Case {
        int p, N, s, t;
    };
    for (Case c : {Case{3, 2, 0, 0}, Case{3, 2, 1, 2}, Case{3, 3, 2, 1},
                   Case{5, 2, 1, 3}}) {
        auto h = make_zq(c.p, Backend::Exact);
        LatticeModel m = build_lattice_rep(h, c.N, c.s, c.t);
        require_report(check_relations(m));
        CHECK(irreducibility(m) == 1);
        auto md = modular_data(h);
        CenterData cd = center_and_projectors(m, md);
        require_report(cd.report);
    }
}

TEST_CASE("closed form of the cyclic chain") {
    int p = 3, N = 3;
    auto h = make_zq(p, Backend::Exact);
    Scalar q = Scalar::zeta(4 * p, 4);
    Scalar qh = q * q;  // square root of q on the even sublattice
    LatticeModel m = build_lattice_rep(h, N, 1, 2);

    // w_n = q^{(1-p)/2} tau^1-component of J_n
    std::vector<Op> w;
    Scalar pref = qh;
    for (int i = 0; i < p - 2; ++i) pref = pref * qh;  // qh^(p-1) = q^{(p-1)/2}...
    pref = pref.inv();                                 // q^{(1-p)/2}
    for (int n = 1; n <= N; ++n) w.push_back(label_one(*h, m.J_cur[n - 1]) * pref);

    Op id = Op::identity(m.w, h->backend);
    for (int n = 0; n < N; ++n) {
        Op pw = id;
        for (int i = 0; i < p; ++i) pw = pw * w[n];
        CHECK(pw.residual(id) < float_tol());
    }

    Elem g = h->basis_elem(1);
    for (int n = 1; n <= N; ++n) {
        Op gn = m.site_op(n, g), gm = m.site_op(n - 1, g);
        CHECK((gn * w[n - 1]).residual(w[n - 1] * gn * q) < float_tol());
        CHECK((w[n - 1] * gm).residual(gm * w[n - 1] * q) < float_tol());
    }
    for (int n = 1; n <= N; ++n) {
        Op a = w[n - 1], b = w[n % N];
        CHECK((a * b).residual(b * a * q.inv()) < float_tol());
    }

    // left monodromy in its normal-ordered form; the overall phase is
    // fixed by the one-dimensional ribbon component
    Scalar tv = h->irrep_apply(1, h->ribbon).at(0, 0);
    CHECK((tv - qh).abs_num() < float_tol());
    Op prod = id;
    for (int n = 0; n < N; ++n) prod = prod * w[n];
    Scalar phase = Scalar::of_backend_one(h->backend);
    for (int i = 0; i < (p - 1) * N; ++i) phase = phase * qh;
    for (int i = 0; i < N - 1; ++i) phase = phase / tv;
    CHECK(label_one(*h, m.M).residual(prod * phase) < float_tol());

    // holonomies agree with the ordered products up to a scalar
    for (int nu = 1; nu <= N - 1; ++nu) {
        Op lhs = label_one(*h, m.U[nu - 1]);
        Op rhs = id;
        for (int n = 0; n < nu; ++n) rhs = rhs * w[n];
        Scalar ratio;
        bool got = false;
        for (int i = 0; i < m.w && !got; ++i)
            for (int j = 0; j < m.w && !got; ++j)
                if (!rhs.at(i, j).is_zero()) {
                    ratio = lhs.at(i, j) / rhs.at(i, j);
                    got = true;
                }
        REQUIRE(got);
        CHECK(lhs.residual(rhs * ratio) < float_tol());
    }
}

TEST_CASE("star structure of the cyclic models") {
    for (int N : {1, 2, 3}) {
        auto h = make_zq(3, Backend::Exact);
        LatticeModel m = build_lattice_rep(h, N, 1, 0);
        StarReport sr = star_structure(m);
        require_report(sr.report);
        CHECK(sr.positive);
        CHECK(sr.gram.residual(Op::identity(m.w, h->backend)) < float_tol());
    }
}

TEST_CASE("star structure is unavailable for the doubles") {
    auto h = make_double_of_group(symmetric_group_3(), Backend::Exact, "D(S3)");
    LatticeModel m = build_K1_rep(h, 0, 0);
    CHECK_THROWS_AS(star_structure(m), KappaMissing);
}

TEST_CASE("one-site models of the double of S3") {
    auto h = make_double_of_group(symmetric_group_3(), Backend::Exact, "D(S3)");
    auto md = modular_data(h);
    int k = (int)h->irreps.size();
    // every label with a one-dimensional left factor, plus a higher pair
    std::vector<std::pair<int, int>> labels;
    for (int I = 0; I < k; ++I)
        if (h->irreps[I].dim >= 2) {
            labels.push_back({I, 0});
            labels.push_back({0, I});
            labels.push_back({I, md.conjugate[I]});
            break;
        }
    labels.push_back({0, 0});
    labels.push_back({1, 1});
    for (auto [I, J] : labels) {
        LatticeModel m = build_K1_rep(h, I, J);
        require_report(check_relations(m));
        CHECK(irreducibility(m) == 1);
        CenterData cd = center_and_projectors(m, md);
        require_report(cd.report);
    }
}

TEST_CASE("two-site model of the double of S3") {
    auto h = make_double_of_group(symmetric_group_3(), Backend::Exact, "D(S3)");
    LatticeModel m = build_lattice_rep(h, 2, 0, 0);
    require_report(check_relations(m));
    CHECK(irreducibility(m) == 1);
}

TEST_CASE("invariant functional and its cyclic space") {
    for (int N : {1, 2}) {
        auto h = make_zq(3, Backend::Exact);
        OmegaReport orp = omega_functional(h, N);
        require_report(orp.report);
        CHECK(orp.psd);
        CHECK(orp.gns_rank == orp.expected_rank);
    }
    {
        auto h = make_double_of_group(symmetric_group_3(), Backend::Exact, "D(S3)");
        OmegaReport orp = omega_functional(h, 1);
        require_report(orp.report);
        CHECK(orp.psd);
        CHECK(orp.gns_rank == orp.expected_rank);
    }
}
