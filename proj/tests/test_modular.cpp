#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lca/instances.hpp"
#include "lca/modular.hpp"

using namespace lca;

TEST_CASE("quantum traces, cyclic") {
    auto h = make_zq(5);
    for (int I = 0; I < 5; ++I) {
        CHECK(quantum_dimension(*h, I) == Scalar::integer(1));
        CHECK(quantum_trace(*h, I, Op::identity(1, h->backend)) ==
              quantum_dimension(*h, I));
    }
    CHECK_THROWS_AS(quantum_trace(*h, 0, Op::identity(2, h->backend)),
                    DimensionMismatch);
}

TEST_CASE("quantum dimensions, double of S3") {
    auto h = make_double_of_group(symmetric_group_3());
    Scalar sum = Scalar::integer(0);
    for (int I = 0; I < 8; ++I) {
        Scalar d = quantum_dimension(*h, I);
        CHECK(d == Scalar::integer(h->irreps[I].dim));  // g = e here
        sum = sum + d * d;
    }
    CHECK(sum == Scalar::integer(36));
}

TEST_CASE("modular data, Z3") {
    auto h = make_zq(3);
    auto md = modular_data(h);
    CHECK(md.modular);
    // unnormalized entries q^{2rs} with q = zeta_3
    for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
            CHECK(md.s_unnormalized.at(r, s) == Scalar::zeta(3, (2 * r * s) % 3));
    // normalized S is unitary
    Op prod = md.s * md.s.conj_transpose();
    CHECK(prod.residual(Op::identity(3, h->backend)) < 1e-12);
    CHECK(md.s.residual(md.s.transpose()) < 1e-12);
    // trivial row: S_0J = N d_J
    for (int J = 0; J < 3; ++J)
        CHECK(md.s.at(h->trivial_irrep, J) == md.normalizer * md.qdim[J]);
    CHECK(md.verlinde_residual < 1e-9);
}

TEST_CASE("even levels are not modular") {
    for (int p : {4, 6}) {
        CAPTURE(p);
        auto md = modular_data(make_zq(p));
        CHECK(!md.modular);
    }
}

TEST_CASE("fusion rules, Z5") {
    auto h = make_zq(5);
    auto md = modular_data(h);
    for (int K = 0; K < 5; ++K)
        CHECK(md.fusion[2][3][K] == (K == h->trivial_irrep ? 1 : 0));
    for (int I = 0; I < 5; ++I)
        for (int J = 0; J < 5; ++J)
            for (int K = 0; K < 5; ++K) {
                CHECK(md.fusion[h->trivial_irrep][J][K] == (J == K ? 1 : 0));
                CHECK(md.fusion[I][J][K] == md.fusion[J][I][K]);
            }
    // labels add mod 5, expressed through conjugation
    for (int r = 0; r < 5; ++r) CHECK(md.conjugate[r] == (5 - r) % 5);
}

TEST_CASE("modular data, double of S3") {
    auto h = make_double_of_group(symmetric_group_3());
    auto md = modular_data(h);
    CHECK(md.modular);
    Op prod = md.s * md.s.conj_transpose();
    CHECK(prod.residual(Op::identity(8, h->backend)) < 1e-12);
    CHECK(md.s.residual(md.s.transpose()) < 1e-12);
    CHECK(md.verlinde_residual < 1e-9);
    for (int I = 0; I < 8; ++I) {
        CHECK(md.conjugate[md.conjugate[I]] == I);
        CHECK(md.conjugate[h->trivial_irrep] == h->trivial_irrep);
        for (int J = 0; J < 8; ++J) {
            int lhs = h->irreps[I].dim * h->irreps[J].dim, rhs = 0;
            for (int K = 0; K < 8; ++K) {
                rhs += md.fusion[I][J][K] * h->irreps[K].dim;
                CHECK(md.fusion[I][J][K] == md.fusion[J][I][K]);
            }
            CHECK(lhs == rhs);
        }
    }
}
