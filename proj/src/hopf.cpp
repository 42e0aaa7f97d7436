#include "lca/hopf.hpp"

#include <algorithm>
#include <sstream>

namespace lca {

Elem HopfAlgebra::basis_elem(int i) const {
    Elem e = zero_elem();
    e[i] = Scalar::of_backend_one(backend);
    return e;
}

Elem HopfAlgebra::mul(const Elem &a, const Elem &b) const {
    Elem out = zero_elem();
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar f = a[i] * b[j];
            for (const auto &t : mult[i][j]) out[t.k] += f * t.c;
        }
    }
    return out;
}

Elem HopfAlgebra::add(const Elem &a, const Elem &b) const {
    Elem out = a;
    for (int i = 0; i < dim; ++i)
        if (!b[i].is_zero()) out[i] += b[i];
    return out;
}

Elem HopfAlgebra::scale(const Elem &a, const Scalar &s) const {
    Elem out = zero_elem();
    if (s.is_zero()) return out;
    for (int i = 0; i < dim; ++i)
        if (!a[i].is_zero()) out[i] = a[i] * s;
    return out;
}

Scalar HopfAlgebra::counit(const Elem &a) const {
    Scalar s = Scalar::of_backend_zero(backend);
    for (int i = 0; i < dim; ++i)
        if (!a[i].is_zero()) s += a[i] * counit_row[i];
    return s;
}

Elem HopfAlgebra::apply_antipode(const Elem &a) const {
    Elem out = zero_elem();
    for (int j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (int i = 0; i < dim; ++i)
            if (!antipode.at(i, j).is_zero()) out[i] += antipode.at(i, j) * a[j];
    }
    return out;
}

Elem HopfAlgebra::apply_star(const Elem &a) const {
    if (!star) throw NumericError("instance carries no star structure");
    Elem out = zero_elem();
    for (int j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        Scalar cj = a[j].conj();
        for (int i = 0; i < dim; ++i)
            if (!star->at(i, j).is_zero()) out[i] += star->at(i, j) * cj;
    }
    return out;
}

Op HopfAlgebra::left_mult_matrix(const Elem &a) const {
    Op L(dim, dim, backend);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j)
            for (const auto &t : mult[i][j]) L.at(t.k, j) += a[i] * t.c;
    }
    return L;
}

Op HopfAlgebra::right_mult_matrix(const Elem &a) const {
    Op Rm(dim, dim, backend);
    for (int j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (int i = 0; i < dim; ++i)
            for (const auto &t : mult[i][j]) Rm.at(t.k, i) += a[j] * t.c;
    }
    return Rm;
}

Elem HopfAlgebra::inverse(const Elem &a) const {
    Op L = left_mult_matrix(a);
    Op Li = L.inverse();
    Elem out = zero_elem();
    for (int i = 0; i < dim; ++i) {
        Scalar s = Scalar::of_backend_zero(backend);
        for (int j = 0; j < dim; ++j)
            if (!unit[j].is_zero()) s += Li.at(i, j) * unit[j];
        out[i] = s;
    }
    return out;
}

Elem HopfAlgebra::power(const Elem &a, long k) const {
    if (k < 0) return power(inverse(a), -k);
    Elem acc = unit, base = a;
    while (k) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

bool HopfAlgebra::elem_eq(const Elem &a, const Elem &b) const {
    for (int i = 0; i < dim; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool HopfAlgebra::is_central(const Elem &a) const {
    return left_mult_matrix(a) == right_mult_matrix(a);
}

Op HopfAlgebra::delta(const Elem &a) const {
    Op out(dim, dim, backend);
    for (int i = 0; i < dim; ++i)
        if (!a[i].is_zero()) out.axpy(a[i], coproduct[i]);
    return out;
}

Op HopfAlgebra::tensor2_mul(const Op &A, const Op &B) const {
    Op out(dim, dim, backend);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (int p = 0; p < dim; ++p)
                for (int q = 0; q < dim; ++q) {
                    if (B.at(p, q).is_zero()) continue;
                    Scalar f = A.at(i, j) * B.at(p, q);
                    for (const auto &t1 : mult[i][p]) {
                        Scalar f1 = f * t1.c;
                        for (const auto &t2 : mult[j][q]) out.at(t1.k, t2.k) += f1 * t2.c;
                    }
                }
        }
    return out;
}

Op HopfAlgebra::tensor2_of(const Elem &a, const Elem &b) const {
    Op out(dim, dim, backend);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j)
            if (!b[j].is_zero()) out.at(i, j) = a[i] * b[j];
    }
    return out;
}

Op HopfAlgebra::tensor2_star(const Op &A) const {
    if (!star) throw NumericError("instance carries no star structure");
    return (*star) * A.conj() * star->transpose();
}

Op HopfAlgebra::R_inverse() const {
    // (S (x) id)(R)
    Op out(dim, dim, backend);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            if (R.at(a, b).is_zero()) continue;
            for (int i = 0; i < dim; ++i)
                if (!antipode.at(i, a).is_zero())
                    out.at(i, b) += antipode.at(i, a) * R.at(a, b);
        }
    return out;
}

Op HopfAlgebra::tensor2_inverse(const Op &A) const {
    // left-regular realization on G (x) G; intended for small instances
    int D = dim * dim;
    Op L(D, D, backend);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (A.at(i, j).is_zero()) continue;
            for (int p = 0; p < dim; ++p)
                for (int q = 0; q < dim; ++q)
                    for (const auto &t1 : mult[i][p]) {
                        Scalar f = A.at(i, j) * t1.c;
                        for (const auto &t2 : mult[j][q])
                            L.at(t1.k * dim + t2.k, p * dim + q) += f * t2.c;
                    }
        }
    Op Li = L.inverse();
    // read off the image of 1 (x) 1
    Op out(dim, dim, backend);
    for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) {
            Scalar s = Scalar::of_backend_zero(backend);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    Scalar u = unit[i] * unit[j];
                    if (!u.is_zero()) s += Li.at(p * dim + q, i * dim + j) * u;
                }
            out.at(p, q) = s;
        }
    return out;
}

Op HopfAlgebra::irrep_apply(int I, const Elem &a) const {
    const Irrep &ir = irreps[I];
    Op out(ir.dim, ir.dim, backend);
    for (int i = 0; i < dim; ++i)
        if (!a[i].is_zero()) out.axpy(a[i], ir.mats[i]);
    return out;
}

const Elem &HopfAlgebra::drinfeld_u() const {
    auto it = cache_.find("u");
    if (it != cache_.end()) return it->second;
    Elem u = zero_elem();
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            if (R.at(a, b).is_zero()) continue;
            // S(r^2) r^1
            Elem term = mul(apply_antipode(basis_elem(b)), basis_elem(a));
            u = add(u, scale(term, R.at(a, b)));
        }
    return cache_.emplace("u", std::move(u)).first->second;
}

const Elem &HopfAlgebra::grouplike_g() const {
    auto it = cache_.find("g");
    if (it != cache_.end()) return it->second;
    // g^{-1} = v^{-1} sum S(r^2) r^1
    Elem ginv = mul(inverse(ribbon), drinfeld_u());
    return cache_.emplace("g", inverse(ginv)).first->second;
}

const Op &HopfAlgebra::wedderburn_inverse() const {
    if (wedderburn_inv_) return *wedderburn_inv_;
    int D = 0;
    for (const auto &ir : irreps) D += ir.dim * ir.dim;
    if (D != dim) throw NumericError("irreps do not form a complete family");
    Op T(D, dim, backend);
    for (int k = 0; k < dim; ++k) {
        int off = 0;
        for (const auto &ir : irreps) {
            for (int a = 0; a < ir.dim; ++a)
                for (int b = 0; b < ir.dim; ++b)
                    T.at(off + a * ir.dim + b, k) = ir.mats[k].at(a, b);
            off += ir.dim * ir.dim;
        }
    }
    wedderburn_inv_ = T.inverse();
    return *wedderburn_inv_;
}

Elem HopfAlgebra::central_idempotent(int I) const {
    const Op &Ti = wedderburn_inverse();
    Elem out = zero_elem();
    int off = 0;
    for (int J = 0; J < (int)irreps.size(); ++J) {
        if (J == (int)I) {
            for (int a = 0; a < irreps[J].dim; ++a) {
                int row = off + a * irreps[J].dim + a;
                for (int k = 0; k < dim; ++k)
                    if (!Ti.at(k, row).is_zero()) out[k] += Ti.at(k, row);
            }
        }
        off += irreps[J].dim * irreps[J].dim;
    }
    return out;
}

const Elem &HopfAlgebra::vacuum_projector() const {
    auto it = cache_.find("P0");
    if (it != cache_.end()) return it->second;
    if (trivial_irrep < 0) throw NumericError("no trivial irrep identified");
    return cache_.emplace("P0", central_idempotent(trivial_irrep)).first->second;
}

const Elem &HopfAlgebra::right_integral() const {
    auto it = cache_.find("mu");
    if (it != cache_.end()) return it->second;
    // (mu (x) id) Delta(xi) = mu(xi) 1 for all xi
    Op sys(dim * dim, dim, backend);
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            int eq = i * dim + k;
            for (int j = 0; j < dim; ++j)
                if (!coproduct[i].at(j, k).is_zero()) sys.at(eq, j) += coproduct[i].at(j, k);
            if (!unit[k].is_zero()) sys.at(eq, i) -= unit[k];
        }
    auto ns = sys.nullspace_columns();
    if (ns.size() != 1) throw NumericError("right integral space is not one-dimensional");
    Elem mu = zero_elem();
    for (int i = 0; i < dim; ++i) mu[i] = ns[0].at(i, 0);
    // normalize mu(P^0) = 1
    const Elem &p0 = vacuum_projector();
    Scalar val = Scalar::of_backend_zero(backend);
    for (int i = 0; i < dim; ++i)
        if (!p0[i].is_zero()) val += mu[i] * p0[i];
    if (val.is_zero()) throw NumericError("integral vanishes on vacuum projector");
    Scalar inv = val.inv();
    for (auto &x : mu) x = x * inv;
    return cache_.emplace("mu", std::move(mu)).first->second;
}

Scalar HopfAlgebra::integral_eval(const Elem &a) const {
    const Elem &mu = right_integral();
    Scalar s = Scalar::of_backend_zero(backend);
    for (int i = 0; i < dim; ++i)
        if (!a[i].is_zero()) s += mu[i] * a[i];
    return s;
}

int HopfAlgebra::conjugate_irrep(int I) const {
    const Elem &p0 = vacuum_projector();
    for (int J = 0; J < (int)irreps.size(); ++J) {
        // multiplicity of the trivial in V^I (x) V^J
        Op D = delta(p0);
        Op proj(irreps[I].dim * irreps[J].dim, irreps[I].dim * irreps[J].dim, backend);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                if (!D.at(a, b).is_zero())
                    proj += irreps[I].mats[a].kron(irreps[J].mats[b]) * D.at(a, b);
        if (proj.rank() == 1) return J;
    }
    throw NumericError("no conjugate label found");
}

void HopfAlgebra::validate_shapes() const {
    if ((int)mult.size() != dim || (int)coproduct.size() != dim ||
        (int)unit.size() != dim || (int)counit_row.size() != dim ||
        (int)ribbon.size() != dim || R.rows() != dim || R.cols() != dim ||
        antipode.rows() != dim)
        throw NumericError("inconsistent structure data shapes");
}

// ---------------------------------------------------------------------------
// axiom checker
// ---------------------------------------------------------------------------

namespace {

using Key3 = std::array<int, 3>;
using Ten3 = std::map<Key3, Scalar>;

void ten3_add(Ten3 &t, const Key3 &k, const Scalar &s) {
    if (s.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end())
        t.emplace(k, s);
    else
        it->second += s;
}

Ten3 ten3_mul(const HopfAlgebra &h, const Ten3 &A, const Ten3 &B) {
    Ten3 out;
    for (const auto &[ka, va] : A) {
        if (va.is_zero()) continue;
        for (const auto &[kb, vb] : B) {
            if (vb.is_zero()) continue;
            Scalar f = va * vb;
            for (const auto &t1 : h.mult[ka[0]][kb[0]]) {
                Scalar f1 = f * t1.c;
                for (const auto &t2 : h.mult[ka[1]][kb[1]]) {
                    Scalar f2 = f1 * t2.c;
                    for (const auto &t3 : h.mult[ka[2]][kb[2]])
                        ten3_add(out, {t1.k, t2.k, t3.k}, f2 * t3.c);
                }
            }
        }
    }
    return out;
}

double ten3_residual(const Ten3 &A, const Ten3 &B) {
    double m = 0;
    for (const auto &[k, v] : A) {
        auto it = B.find(k);
        Scalar o = it == B.end() ? Scalar() : it->second;
        if (v.is_exact() && o.is_exact() && v == o) continue;
        m = std::max(m, std::abs(v.to_complex() - o.to_complex()));
    }
    for (const auto &[k, v] : B)
        if (A.find(k) == A.end()) m = std::max(m, v.abs_num());
    return m;
}

// embed an R-type tensor into legs (i, j) of a 3-leg tensor
Ten3 embed_R(const HopfAlgebra &h, int leg_a, int leg_b) {
    Ten3 out;
    for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b) {
            if (h.R.at(a, b).is_zero()) continue;
            for (int u = 0; u < h.dim; ++u) {
                if (h.unit[u].is_zero()) continue;
                Key3 k{u, u, u};
                k[leg_a] = a;
                k[leg_b] = b;
                // remaining leg carries the unit expansion
                int rem = 3 - leg_a - leg_b;
                k[rem] = u;
                ten3_add(out, k, h.R.at(a, b) * h.unit[u]);
            }
        }
    return out;
}

double elem_residual(const HopfAlgebra &h, const Elem &a, const Elem &b) {
    double m = 0;
    for (int i = 0; i < h.dim; ++i) {
        if (a[i].is_exact() && b[i].is_exact() && a[i] == b[i]) continue;
        m = std::max(m, std::abs(a[i].to_complex() - b[i].to_complex()));
    }
    return m;
}

}  // namespace

AxiomReport check_axioms(const HopfAlgebra &h) {
    AxiomReport rep;
    double tol = h.backend == Backend::Exact ? 0.0 : float_tol();
    auto record = [&](const std::string &name, double resid) {
        rep.lines.push_back({name,
                             resid <= tol ? CheckLine::Status::Pass : CheckLine::Status::Fail,
                             resid});
    };
    auto skip = [&](const std::string &name) {
        rep.lines.push_back({name, CheckLine::Status::Skipped, 0.0});
    };

    // associativity and unit
    {
        double r = 0;
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                Elem ij = h.mul(h.basis_elem(i), h.basis_elem(j));
                for (int k = 0; k < h.dim; ++k) {
                    Elem l = h.mul(ij, h.basis_elem(k));
                    Elem m2 = h.mul(h.basis_elem(i), h.mul(h.basis_elem(j), h.basis_elem(k)));
                    r = std::max(r, elem_residual(h, l, m2));
                }
            }
        record("associativity", r);
        double ru = 0;
        for (int i = 0; i < h.dim; ++i) {
            ru = std::max(ru, elem_residual(h, h.mul(h.unit, h.basis_elem(i)), h.basis_elem(i)));
            ru = std::max(ru, elem_residual(h, h.mul(h.basis_elem(i), h.unit), h.basis_elem(i)));
        }
        record("unit law", ru);
    }

    // coassociativity and counit law
    {
        double r = 0, rc = 0;
        for (int i = 0; i < h.dim; ++i) {
            Op D = h.coproduct[i];
            Ten3 lhs, rhs;
            for (int a = 0; a < h.dim; ++a)
                for (int b = 0; b < h.dim; ++b) {
                    if (D.at(a, b).is_zero()) continue;
                    const Op &Da = h.coproduct[a];
                    for (int c = 0; c < h.dim; ++c)
                        for (int d = 0; d < h.dim; ++d)
                            if (!Da.at(c, d).is_zero())
                                ten3_add(lhs, {c, d, b}, D.at(a, b) * Da.at(c, d));
                    const Op &Db = h.coproduct[b];
                    for (int c = 0; c < h.dim; ++c)
                        for (int d = 0; d < h.dim; ++d)
                            if (!Db.at(c, d).is_zero())
                                ten3_add(rhs, {a, c, d}, D.at(a, b) * Db.at(c, d));
                }
            r = std::max(r, ten3_residual(lhs, rhs));
            // counit law
            Elem left = h.zero_elem(), right = h.zero_elem();
            for (int a = 0; a < h.dim; ++a)
                for (int b = 0; b < h.dim; ++b) {
                    if (D.at(a, b).is_zero()) continue;
                    left[b] += D.at(a, b) * h.counit_row[a];
                    right[a] += D.at(a, b) * h.counit_row[b];
                }
            rc = std::max(rc, elem_residual(h, left, h.basis_elem(i)));
            rc = std::max(rc, elem_residual(h, right, h.basis_elem(i)));
        }
        record("coassociativity", r);
        record("counit law", rc);
    }

    // bialgebra compatibility
    {
        double r = 0;
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                Op lhs = h.delta(h.mul(h.basis_elem(i), h.basis_elem(j)));
                Op rhs = h.tensor2_mul(h.coproduct[i], h.coproduct[j]);
                r = std::max(r, lhs.residual(rhs));
            }
        r = std::max(r, h.delta(h.unit).residual(h.tensor2_of(h.unit, h.unit)));
        record("coproduct is an algebra map", r);
        double re = 0;
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                Scalar lhs = h.counit(h.mul(h.basis_elem(i), h.basis_elem(j)));
                Scalar rhs = h.counit_row[i] * h.counit_row[j];
                if (!(lhs == rhs)) re = std::max(re, std::abs(lhs.to_complex() - rhs.to_complex()));
            }
        if (!(h.counit(h.unit) == Scalar::of_backend_one(h.backend))) re = std::max(re, 1.0);
        record("counit is an algebra map", re);
    }

    // antipode
    {
        double r = 0, ra = 0;
        for (int i = 0; i < h.dim; ++i) {
            const Op &D = h.coproduct[i];
            Elem l = h.zero_elem(), rr = h.zero_elem();
            for (int a = 0; a < h.dim; ++a)
                for (int b = 0; b < h.dim; ++b) {
                    if (D.at(a, b).is_zero()) continue;
                    l = h.add(l, h.scale(h.mul(h.apply_antipode(h.basis_elem(a)), h.basis_elem(b)),
                                         D.at(a, b)));
                    rr = h.add(rr, h.scale(h.mul(h.basis_elem(a), h.apply_antipode(h.basis_elem(b))),
                                           D.at(a, b)));
                }
            Elem target = h.scale(h.unit, h.counit_row[i]);
            r = std::max(r, elem_residual(h, l, target));
            r = std::max(r, elem_residual(h, rr, target));
        }
        record("antipode law", r);
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                Elem lhs = h.apply_antipode(h.mul(h.basis_elem(i), h.basis_elem(j)));
                Elem rhs = h.mul(h.apply_antipode(h.basis_elem(j)), h.apply_antipode(h.basis_elem(i)));
                ra = std::max(ra, elem_residual(h, lhs, rhs));
            }
        record("antipode antihomomorphism", ra);
    }

    // quasitriangularity
    {
        Op Rinv = h.R_inverse();
        Op unit2 = h.tensor2_of(h.unit, h.unit);
        double r = std::max(h.tensor2_mul(h.R, Rinv).residual(unit2),
                            h.tensor2_mul(Rinv, h.R).residual(unit2));
        record("R invertibility", r);

        double ri = 0;
        for (int i = 0; i < h.dim; ++i) {
            Op lhs = h.tensor2_mul(h.R, h.coproduct[i]);
            Op rhs = h.tensor2_mul(h.coproduct[i].transpose(), h.R);
            ri = std::max(ri, lhs.residual(rhs));
        }
        record("R intertwines coproducts", ri);

        // (Delta (x) id) R = R13 R23 ; (id (x) Delta) R = R13 R12
        Ten3 dR, Rd;
        for (int a = 0; a < h.dim; ++a)
            for (int b = 0; b < h.dim; ++b) {
                if (h.R.at(a, b).is_zero()) continue;
                const Op &Da = h.coproduct[a];
                for (int c = 0; c < h.dim; ++c)
                    for (int d = 0; d < h.dim; ++d)
                        if (!Da.at(c, d).is_zero()) ten3_add(dR, {c, d, b}, h.R.at(a, b) * Da.at(c, d));
                const Op &Db = h.coproduct[b];
                for (int c = 0; c < h.dim; ++c)
                    for (int d = 0; d < h.dim; ++d)
                        if (!Db.at(c, d).is_zero()) ten3_add(Rd, {a, c, d}, h.R.at(a, b) * Db.at(c, d));
            }
        Ten3 R12 = embed_R(h, 0, 1), R13 = embed_R(h, 0, 2), R23 = embed_R(h, 1, 2);
        double rq = ten3_residual(dR, ten3_mul(h, R13, R23));
        rq = std::max(rq, ten3_residual(Rd, ten3_mul(h, R13, R12)));
        record("hexagon identities", rq);

        Ten3 ybe_l = ten3_mul(h, ten3_mul(h, R12, R13), R23);
        Ten3 ybe_r = ten3_mul(h, ten3_mul(h, R23, R13), R12);
        record("Yang-Baxter", ten3_residual(ybe_l, ybe_r));
    }

    // ribbon element
    {
        double r = h.is_central(h.ribbon) ? 0.0 : 1.0;
        record("ribbon centrality", r);
        Elem vinv = h.inverse(h.ribbon);
        record("ribbon counit", elem_residual(h, h.scale(h.unit, h.counit(h.ribbon)), h.unit));
        record("ribbon antipode", elem_residual(h, h.apply_antipode(h.ribbon), h.ribbon));
        Op lhs = h.tensor2_mul(h.R.transpose(), h.R);
        Op rhs = h.tensor2_mul(h.tensor2_of(h.ribbon, h.ribbon), h.delta(vinv));
        record("ribbon factorization of the monodromy", lhs.residual(rhs));
    }

    if (h.kappa) {
        double r = elem_residual(h, h.mul(*h.kappa, *h.kappa), h.ribbon);
        if (!h.is_central(*h.kappa)) r = std::max(r, 1.0);
        record("kappa squares to the ribbon", r);
    } else {
        skip("kappa squares to the ribbon");
    }

    // star structure
    if (h.star) {
        double r = 0;
        for (int i = 0; i < h.dim; ++i)
            r = std::max(r, elem_residual(h, h.apply_star(h.apply_star(h.basis_elem(i))),
                                          h.basis_elem(i)));
        record("star involution", r);
        double ram = 0;
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) {
                Elem lhs = h.apply_star(h.mul(h.basis_elem(i), h.basis_elem(j)));
                Elem rhs = h.mul(h.apply_star(h.basis_elem(j)), h.apply_star(h.basis_elem(i)));
                ram = std::max(ram, elem_residual(h, lhs, rhs));
            }
        record("star antimultiplicativity", ram);
        double rd = 0;
        for (int i = 0; i < h.dim; ++i) {
            Op lhs = h.tensor2_star(h.coproduct[i]);
            Op rhs = h.delta(h.apply_star(h.basis_elem(i))).transpose();
            rd = std::max(rd, lhs.residual(rhs));
        }
        record("star flips the coproduct", rd);
        record("star of R", h.tensor2_star(h.R).residual(h.R_inverse().transpose()));
        record("ribbon unitarity",
               elem_residual(h, h.mul(h.apply_star(h.ribbon), h.ribbon), h.unit));
        record("grouplike unitarity",
               elem_residual(h, h.mul(h.apply_star(h.grouplike_g()), h.grouplike_g()), h.unit));
        if (h.kappa)
            record("kappa unitarity",
                   elem_residual(h, h.mul(h.apply_star(*h.kappa), *h.kappa), h.unit));
        else
            skip("kappa unitarity");
    } else {
        skip("star involution");
        skip("star antimultiplicativity");
        skip("star flips the coproduct");
        skip("star of R");
        skip("ribbon unitarity");
        skip("grouplike unitarity");
        skip("kappa unitarity");
    }

    // representations
    {
        double r = 0;
        for (const auto &ir : h.irreps) {
            for (int i = 0; i < h.dim; ++i)
                for (int j = 0; j < h.dim; ++j) {
                    Op rhs(ir.dim, ir.dim, h.backend);
                    for (const auto &t : h.mult[i][j]) rhs.axpy(t.c, ir.mats[t.k]);
                    r = std::max(r, (ir.mats[i] * ir.mats[j]).residual(rhs));
                }
            r = std::max(r, h.irrep_apply((int)(&ir - h.irreps.data()), h.unit)
                                .residual(Op::identity(ir.dim, h.backend)));
        }
        record("irreps are algebra maps", r);

        double rc = 0;
        for (const auto &ir : h.irreps)
            if (commutant_dimension(ir.mats) != 1) rc = 1.0;
        record("irreps are irreducible", rc);

        int D = 0;
        for (const auto &ir : h.irreps) D += ir.dim * ir.dim;
        double rw = (D == h.dim) ? 0.0 : 1.0;
        if (rw == 0.0) {
            try {
                h.wedderburn_inverse();
            } catch (const NumericError &) {
                rw = 1.0;
            }
        }
        record("irreps form a complete family", rw);

        double rt = 1.0;
        if (h.trivial_irrep >= 0 && h.irreps[h.trivial_irrep].dim == 1) {
            rt = 0.0;
            for (int i = 0; i < h.dim; ++i) {
                Scalar got = h.irreps[h.trivial_irrep].mats[i].at(0, 0);
                if (!(got == h.counit_row[i]))
                    rt = std::max(rt, std::abs(got.to_complex() - h.counit_row[i].to_complex()));
            }
        }
        record("trivial irrep matches the counit", rt);
    }

    return rep;
}

}  // namespace lca
