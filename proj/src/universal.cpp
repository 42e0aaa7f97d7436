#include "lca/universal.hpp"

#include <map>
#include <stdexcept>

namespace lca {

Universal::Universal(const HopfAlgebra &h, int carrier) : H(&h), w(carrier) {
    comp.assign(h.dim, Op(w, w, h.backend));
}

Universal Universal::from_tensor2(const HopfAlgebra &h, const Op &T,
                                  const std::vector<Op> &act) {
    Universal u(h, act.empty() ? 0 : act[0].rows());
    for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b) {
            const Scalar &c = T.at(a, b);
            if (c.is_zero()) continue;
            u.comp[a].axpy(c, act[b]);
        }
    return u;
}

Universal Universal::central_scalar(const HopfAlgebra &h, const Elem &x, int carrier) {
    Universal u(h, carrier);
    Op id = Op::identity(carrier, h.backend);
    for (int a = 0; a < h.dim; ++a)
        if (!x[a].is_zero()) u.comp[a].axpy(x[a], id);
    return u;
}

Universal Universal::unit_universal(const HopfAlgebra &h, int carrier) {
    return central_scalar(h, h.unit, carrier);
}

Universal Universal::mul(const Universal &o) const {
    Universal r(*H, w);
    for (int a = 0; a < H->dim; ++a) {
        if (comp[a].is_zero()) continue;
        for (int b = 0; b < H->dim; ++b) {
            if (H->mult[a][b].empty() || o.comp[b].is_zero()) continue;
            Op prod = comp[a] * o.comp[b];
            for (const auto &t : H->mult[a][b]) r.comp[t.k].axpy(t.c, prod);
        }
    }
    return r;
}

Universal Universal::lmul_op(const Op &A) const {
    Universal r(*H, w);
    for (int a = 0; a < H->dim; ++a) r.comp[a] = A * comp[a];
    return r;
}

Universal Universal::rmul_op(const Op &A) const {
    Universal r(*H, w);
    for (int a = 0; a < H->dim; ++a) r.comp[a] = comp[a] * A;
    return r;
}

Universal Universal::scale(const Scalar &s) const {
    Universal r(*H, w);
    for (int a = 0; a < H->dim; ++a) r.comp[a] = comp[a] * s;
    return r;
}

Universal Universal::add(const Universal &o) const {
    Universal r = *this;
    for (int a = 0; a < H->dim; ++a) r.comp[a] += o.comp[a];
    return r;
}

Universal Universal::sub(const Universal &o) const {
    Universal r = *this;
    for (int a = 0; a < H->dim; ++a) r.comp[a] -= o.comp[a];
    return r;
}

Universal Universal::apply_first_leg(const Op &M) const {
    Universal r(*H, w);
    for (int a = 0; a < H->dim; ++a) {
        if (comp[a].is_zero()) continue;
        for (int b = 0; b < H->dim; ++b) {
            const Scalar &c = M.at(b, a);
            if (c.is_zero()) continue;
            r.comp[b].axpy(c, comp[a]);
        }
    }
    return r;
}

Universal Universal::inverse() const {
    // For X with X^1 X^2 = R Delta_a(X) the map phi(y) = S(y) c0^{-1},
    // c0 = sum_ab R_ab e_a S(e_b), turns X into a two-sided inverse.
    Elem c0 = H->zero_elem();
    for (int a = 0; a < H->dim; ++a)
        for (int b = 0; b < H->dim; ++b) {
            const Scalar &c = H->R.at(a, b);
            if (c.is_zero()) continue;
            Elem t = H->mul(H->basis_elem(a), H->apply_antipode(H->basis_elem(b)));
            c0 = H->add(c0, H->scale(t, c));
        }
    Elem c0i = H->inverse(c0);
    Op phi = H->right_mult_matrix(c0i) * H->antipode;
    Universal y = apply_first_leg(phi);
    // X . y = 1 (x) E with E the counit leg of X; absorb E
    Op e = mul(y).counit_contract();
    y = y.rmul_op(e.inverse());
    if (y.mul(*this).residual(unit_universal(*H, w)) > float_tol())
        throw SingularMatrix("universal element has no inverse of R-twisted type");
    return y;
}

Op Universal::counit_contract() const {
    Op r(w, w, H->backend);
    for (int a = 0; a < H->dim; ++a) {
        const Scalar &c = H->counit_row[a];
        if (c.is_zero()) continue;
        r.axpy(c, comp[a]);
    }
    return r;
}

Op Universal::eval_irrep(const Irrep &ir) const {
    Op r(ir.dim * w, ir.dim * w, H->backend);
    for (int a = 0; a < H->dim; ++a) {
        if (comp[a].is_zero()) continue;
        const Op &m = ir.mats[a];
        for (int i = 0; i < ir.dim; ++i)
            for (int j = 0; j < ir.dim; ++j) {
                const Scalar &c = m.at(i, j);
                if (c.is_zero()) continue;
                for (int p = 0; p < w; ++p)
                    for (int q = 0; q < w; ++q) {
                        const Scalar &x = comp[a].at(p, q);
                        if (x.is_zero()) continue;
                        Scalar &dst = r.at(i * w + p, j * w + q);
                        dst = dst + c * x;
                    }
            }
    }
    return r;
}

Universal Universal::kron_right(int n, bool left_factor) const {
    Universal r(*H, w * n);
    Op id = Op::identity(n, H->backend);
    for (int a = 0; a < H->dim; ++a)
        r.comp[a] = left_factor ? comp[a].kron(id) : id.kron(comp[a]);
    return r;
}

bool Universal::equals(const Universal &o) const {
    for (int a = 0; a < H->dim; ++a)
        if (comp[a].residual(o.comp[a]) > float_tol()) return false;
    return true;
}

double Universal::residual(const Universal &o) const {
    double r = 0.0;
    for (int a = 0; a < H->dim; ++a) r = std::max(r, comp[a].residual(o.comp[a]));
    return r;
}

namespace rel {

Factor cst(const Op &C) { return Factor{Factor::Kind::Const2, &C, nullptr}; }
Factor leg1(const Universal &X) { return Factor{Factor::Kind::Leg1, nullptr, &X}; }
Factor leg2(const Universal &X) { return Factor{Factor::Kind::Leg2, nullptr, &X}; }
Factor delta_a(const Universal &X) { return Factor{Factor::Kind::DeltaA, nullptr, &X}; }

namespace {

// word of carrier operators picked up while multiplying out the legs;
// the relations of the models never need more than four letters
struct Word {
    int len = 0;
    std::array<std::pair<const Universal *, int>, 4> at{};
    bool operator<(const Word &o) const {
        if (len != o.len) return len < o.len;
        for (int i = 0; i < len; ++i)
            if (at[i] != o.at[i]) return at[i] < o.at[i];
        return false;
    }
};

using Key = std::pair<int, int>;
using TermMap = std::map<Key, std::map<Word, Scalar>>;

void accumulate(TermMap &dst, const Key &k, const Word &wd, const Scalar &c) {
    auto &slot = dst[k];
    auto it = slot.find(wd);
    if (it == slot.end())
        slot.emplace(wd, c);
    else
        it->second = it->second + c;
}

TermMap expand(const HopfAlgebra &h, const std::vector<Factor> &fs) {
    TermMap cur;
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) {
            Scalar c = h.unit[i] * h.unit[j];
            if (!c.is_zero()) cur[{i, j}][Word{}] = c;
        }
    for (const auto &f : fs) {
        TermMap next;
        for (const auto &[key, terms] : cur) {
            auto [i, j] = key;
            for (const auto &[wd, coeff] : terms) {
                if (coeff.is_zero()) continue;
                switch (f.kind) {
                    case Factor::Kind::Const2:
                        for (int a = 0; a < h.dim; ++a)
                            for (int b = 0; b < h.dim; ++b) {
                                const Scalar &c = f.C->at(a, b);
                                if (c.is_zero()) continue;
                                for (const auto &t1 : h.mult[i][a])
                                    for (const auto &t2 : h.mult[j][b])
                                        accumulate(next, {t1.k, t2.k}, wd,
                                                   coeff * c * t1.c * t2.c);
                            }
                        break;
                    case Factor::Kind::Leg1:
                        for (int a = 0; a < h.dim; ++a) {
                            Word nw = wd;
                            nw.at[nw.len++] = {f.X, a};
                            for (const auto &t : h.mult[i][a])
                                accumulate(next, {t.k, j}, nw, coeff * t.c);
                        }
                        break;
                    case Factor::Kind::Leg2:
                        for (int a = 0; a < h.dim; ++a) {
                            Word nw = wd;
                            nw.at[nw.len++] = {f.X, a};
                            for (const auto &t : h.mult[j][a])
                                accumulate(next, {i, t.k}, nw, coeff * t.c);
                        }
                        break;
                    case Factor::Kind::DeltaA:
                        for (int k = 0; k < h.dim; ++k) {
                            Word nw = wd;
                            nw.at[nw.len++] = {f.X, k};
                            const Op &D = h.coproduct[k];
                            for (int a = 0; a < h.dim; ++a)
                                for (int b = 0; b < h.dim; ++b) {
                                    const Scalar &c = D.at(a, b);
                                    if (c.is_zero()) continue;
                                    for (const auto &t1 : h.mult[i][a])
                                        for (const auto &t2 : h.mult[j][b])
                                            accumulate(next, {t1.k, t2.k}, nw,
                                                       coeff * c * t1.c * t2.c);
                                }
                        }
                        break;
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// the same words show up under many coefficient keys, so their carrier
// products are cached per relation (std::map nodes are stable under the
// recursive prefix fill)
const Op &word_product(const HopfAlgebra &h, const Word &wd, int w,
                       std::map<Word, Op> &cache) {
    auto it = cache.find(wd);
    if (it != cache.end()) return it->second;
    Op r(0, 0, h.backend);
    if (wd.len == 0) {
        r = Op::identity(w, h.backend);
    } else {
        Word pre = wd;
        --pre.len;
        pre.at[pre.len] = {};
        r = word_product(h, pre, w, cache) *
            wd.at[wd.len - 1].first->comp[wd.at[wd.len - 1].second];
    }
    return cache.emplace(wd, std::move(r)).first->second;
}

Op eval_terms(const HopfAlgebra &h, const std::map<Word, Scalar> *terms, int w,
              std::map<Word, Op> &cache) {
    Op r(w, w, h.backend);
    if (!terms) return r;
    for (const auto &[wd, c] : *terms) {
        if (c.is_zero()) continue;
        r.axpy(c, word_product(h, wd, w, cache));
    }
    return r;
}

}  // namespace

double two_leg_residual(const HopfAlgebra &h, const std::vector<Factor> &lhs,
                        const std::vector<Factor> &rhs) {
    int w = 0;
    for (const auto &f : lhs)
        if (f.X) { w = f.X->w; break; }
    if (w == 0)
        for (const auto &f : rhs)
            if (f.X) { w = f.X->w; break; }
    if (w == 0) throw std::invalid_argument("relation has no carrier operators");

    TermMap L = expand(h, lhs), R = expand(h, rhs);
    std::map<Word, Op> cache;
    double worst = 0.0;
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) {
            Key k{i, j};
            auto li = L.find(k);
            auto ri = R.find(k);
            if (li == L.end() && ri == R.end()) continue;
            Op a = eval_terms(h, li == L.end() ? nullptr : &li->second, w, cache);
            Op b = eval_terms(h, ri == R.end() ? nullptr : &ri->second, w, cache);
            worst = std::max(worst, a.residual(b));
        }
    return worst;
}

}  // namespace rel

}  // namespace lca
