#include "lca/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lca {

void GroupTable::validate() const {
    int n = order();
    if (n == 0 || (int)table.size() != n) throw InvalidGroupTable("empty or ragged table");
    for (const auto &row : table) {
        if ((int)row.size() != n) throw InvalidGroupTable("ragged table row");
        std::set<int> seen(row.begin(), row.end());
        if ((int)seen.size() != n || *seen.begin() < 0 || *seen.rbegin() >= n)
            throw InvalidGroupTable("table rows must be permutations");
    }
    for (int j = 0; j < n; ++j) {
        std::set<int> seen;
        for (int i = 0; i < n; ++i) seen.insert(table[i][j]);
        if ((int)seen.size() != n) throw InvalidGroupTable("table columns must be permutations");
    }
    // associativity (cubic but the groups here are tiny)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InvalidGroupTable("table is not associative");
    identity();  // throws when missing
}

int GroupTable::identity() const {
    for (int e = 0; e < order(); ++e) {
        bool ok = true;
        for (int g = 0; g < order(); ++g)
            if (table[e][g] != g || table[g][e] != g) {
                ok = false;
                break;
            }
        if (ok) return e;
    }
    throw InvalidGroupTable("no identity element");
}

int GroupTable::inv(int g) const {
    int e = identity();
    for (int h = 0; h < order(); ++h)
        if (table[g][h] == e) return h;
    throw InvalidGroupTable("missing inverse");
}

int GroupTable::elem_order(int g) const {
    int e = identity(), x = g, k = 1;
    while (x != e) {
        x = table[x][g];
        ++k;
    }
    return k;
}

int GroupTable::exponent() const {
    int ex = 1;
    for (int g = 0; g < order(); ++g) ex = std::lcm(ex, elem_order(g));
    return ex;
}

bool GroupTable::is_abelian() const {
    for (int a = 0; a < order(); ++a)
        for (int b = 0; b < a; ++b)
            if (table[a][b] != table[b][a]) return false;
    return true;
}

GroupTable cyclic_group(int n) {
    GroupTable g;
    for (int i = 0; i < n; ++i) g.names.push_back("g" + std::to_string(i));
    g.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
    return g;
}

GroupTable symmetric_group_3() {
    // permutations of {0,1,2} listed as e, (123), (132), (12), (13), (23)
    std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    std::vector<std::string> names = {"e", "c3", "c3c3", "t12", "t13", "t23"};
    GroupTable g;
    g.names = names;
    int n = 6;
    g.table.assign(n, std::vector<int>(n));
    auto compose = [&](int a, int b) {  // (a*b)(x) = a(b(x))
        std::array<int, 3> r;
        for (int x = 0; x < 3; ++x) r[x] = perms[a][perms[b][x]];
        for (int k = 0; k < n; ++k)
            if (perms[k] == r) return k;
        return -1;
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = compose(a, b);
    return g;
}

// ---------------------------------------------------------------------------
// Z_q family
// ---------------------------------------------------------------------------

HopfPtr make_zq(int p, Backend b) {
    if (p < 2) throw NumericError("p must be at least 2");
    auto hp = std::make_shared<HopfAlgebra>();
    HopfAlgebra &h = *hp;
    h.name = "Z_" + std::to_string(p);
    h.dim = p;
    h.backend = b;
    h.conductor = 4 * p;  // big enough for q, q^{1/2} bookkeeping and 1/sqrt(p)

    auto q_pow = [&](long k) {
        Scalar s = Scalar::zeta(h.conductor, 4 * k);  // zeta_{4p}^{4k} = q^k
        return b == Backend::Exact ? s : s.to_float();
    };
    Scalar one = Scalar::of_backend_one(b);
    Scalar inv_p = Scalar::rational(Rat(1, p));
    if (b == Backend::Float) inv_p = inv_p.to_float();

    for (int s = 0; s < p; ++s) h.basis_names.push_back("g^" + std::to_string(s));
    h.mult.assign(p, std::vector<SparseVec>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) h.mult[i][j] = {{(i + j) % p, one}};
    h.unit = h.zero_elem();
    h.unit[0] = one;
    h.counit_row.assign(p, one);
    h.coproduct.clear();
    for (int s = 0; s < p; ++s) {
        Op d(p, p, b);
        d.at(s, s) = one;
        h.coproduct.push_back(d);
    }
    h.antipode = Op(p, p, b);
    for (int s = 0; s < p; ++s) h.antipode.at((p - s) % p, s) = one;
    h.star = h.antipode;  // (g^s)^* = g^{-s}

    h.R = Op(p, p, b);
    for (int a = 0; a < p; ++a)
        for (int c = 0; c < p; ++c) h.R.at(a, c) = q_pow(-(long)a * c) * inv_p;

    h.ribbon = h.zero_elem();
    for (int a = 0; a < p; ++a) {
        Scalar s = Scalar::of_backend_zero(b);
        for (int r = 0; r < p; ++r) s += q_pow(-(long)r * r - (long)r * a);
        h.ribbon[a] = s * inv_p;
    }
    if (p % 2 == 1) {
        // q^{1/2} realized as q^{(p+1)/2}; kappa = sum q^{-r^2/2} P_r
        long half = (p + 1) / 2;
        Elem k = h.zero_elem();
        for (int a = 0; a < p; ++a) {
            Scalar s = Scalar::of_backend_zero(b);
            for (int r = 0; r < p; ++r) s += q_pow(-half * r * r - (long)r * a);
            k[a] = s * inv_p;
        }
        h.kappa = std::move(k);
    }

    for (int r = 0; r < p; ++r) {
        Irrep ir;
        ir.label = std::to_string(r);
        ir.dim = 1;
        for (int s = 0; s < p; ++s) {
            Op m(1, 1, b);
            m.at(0, 0) = q_pow((long)r * s);
            ir.mats.push_back(m);
        }
        h.irreps.push_back(std::move(ir));
    }
    h.trivial_irrep = 0;
    h.validate_shapes();
    return hp;
}

// ---------------------------------------------------------------------------
// Drinfeld double of a finite group
// ---------------------------------------------------------------------------

namespace {

// Characters of an abelian subgroup, built by extending along a chain of
// cyclic steps.  Returns one dense value-row per character, indexed by
// position in `elems`.
std::vector<std::vector<Scalar>> abelian_characters(const GroupTable &g,
                                                    const std::vector<int> &elems,
                                                    int conductor, int exponent,
                                                    Backend back) {
    int e = g.identity();
    auto zeta_E = [&](long t) {
        Scalar s = Scalar::zeta(conductor, t * (conductor / exponent));
        return back == Backend::Exact ? s : s.to_float();
    };
    std::map<int, int> pos;
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = (int)i;

    std::vector<int> sub = {e};                      // current subgroup
    std::vector<std::map<int, Scalar>> chars = {{{e, Scalar::of_backend_one(back)}}};
    while (sub.size() < elems.size()) {
        int z = -1;
        std::set<int> in_sub(sub.begin(), sub.end());
        for (int cand : elems)
            if (!in_sub.count(cand)) {
                z = cand;
                break;
            }
        // relative order of z
        int m = 1, zp = z;
        while (!in_sub.count(zp)) {
            zp = g.mul(zp, z);
            ++m;
        }
        // zp = z^m lies in the subgroup
        std::vector<int> new_sub;
        for (int h : sub)
            for (int j = 0, x = h; j < m; ++j, x = g.mul(x, z)) new_sub.push_back(x);
        std::vector<std::map<int, Scalar>> new_chars;
        for (const auto &chi : chars) {
            Scalar target = chi.at(zp);
            int found = 0;
            for (long t = 0; t < exponent; ++t) {
                Scalar zt = zeta_E(t);
                if (zt.pow(m) == target) {
                    std::map<int, Scalar> ext;
                    for (int h : sub) {
                        Scalar base = chi.at(h);
                        int x = h;
                        Scalar ph = Scalar::of_backend_one(back);
                        for (int j = 0; j < m; ++j) {
                            ext[x] = base * ph;
                            x = g.mul(x, z);
                            ph = ph * zt;
                        }
                    }
                    new_chars.push_back(std::move(ext));
                    ++found;
                }
            }
            if (found != m) throw NumericError("character extension failed");
        }
        sub = std::move(new_sub);
        chars = std::move(new_chars);
    }
    std::vector<std::vector<Scalar>> out;
    for (const auto &chi : chars) {
        std::vector<Scalar> row(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) row[i] = chi.at(elems[i]);
        out.push_back(std::move(row));
    }
    return out;
}

struct CentralizerRep {
    std::string label;
    int dim;
    std::vector<Op> mats;  // indexed by position in the centralizer list
};

// Irreps of a centralizer subgroup: abelian via characters, otherwise the
// order-6 nonabelian case (only shape arising for the shipped doubles).
std::vector<CentralizerRep> centralizer_irreps(const GroupTable &g,
                                               const std::vector<int> &z, int conductor,
                                               Backend back) {
    std::vector<CentralizerRep> reps;
    std::map<int, int> pos;
    for (size_t i = 0; i < z.size(); ++i) pos[z[i]] = (int)i;
    bool abelian = true;
    for (int a : z)
        for (int c : z)
            if (g.mul(a, c) != g.mul(c, a)) abelian = false;
    if (abelian) {
        int ex = 1;
        for (int a : z) ex = std::lcm(ex, g.elem_order(a));
        auto chars = abelian_characters(g, z, conductor, ex, back);
        for (size_t k = 0; k < chars.size(); ++k) {
            CentralizerRep r;
            r.label = "chi" + std::to_string(k);
            r.dim = 1;
            for (size_t i = 0; i < z.size(); ++i) {
                Op m(1, 1, back);
                m.at(0, 0) = chars[k][i];
                r.mats.push_back(m);
            }
            reps.push_back(std::move(r));
        }
        return reps;
    }
    if (z.size() != 6) throw NumericError("unsupported nonabelian centralizer");
    // order 6 nonabelian: find a of order 3, b of order 2 with b a b = a^2
    int a = -1, bb = -1;
    for (int x : z)
        if (g.elem_order(x) == 3) a = x;
    for (int x : z)
        if (g.elem_order(x) == 2) bb = x;
    if (a < 0 || bb < 0) throw NumericError("unsupported nonabelian centralizer");
    Scalar one = Scalar::of_backend_one(back);
    Scalar w = Scalar::zeta(conductor, conductor / 3);
    if (back == Backend::Float) w = w.to_float();
    auto build = [&](const Op &ma, const Op &mb, const std::string &lbl, int dim) {
        CentralizerRep r;
        r.label = lbl;
        r.dim = dim;
        r.mats.assign(z.size(), Op(dim, dim, back));
        // enumerate a^j b^k
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 2; ++k) {
                int el = g.identity();
                for (int t = 0; t < j; ++t) el = g.mul(el, a);
                for (int t = 0; t < k; ++t) el = g.mul(el, bb);
                Op m = Op::identity(dim, back);
                for (int t = 0; t < j; ++t) m = m * ma;
                for (int t = 0; t < k; ++t) m = m * mb;
                r.mats[pos.at(el)] = m;
            }
        return r;
    };
    Op triv(1, 1, back), sgn(1, 1, back);
    triv.at(0, 0) = one;
    sgn.at(0, 0) = one;
    Op ta(1, 1, back), tb(1, 1, back);
    ta.at(0, 0) = one;
    tb.at(0, 0) = -one;
    reps.push_back(build(triv, sgn, "triv", 1));
    reps.push_back(build(ta, tb, "sgn", 1));
    Op ma(2, 2, back), mb(2, 2, back);
    ma.at(0, 0) = w;
    ma.at(1, 1) = w * w;
    mb.at(0, 1) = one;
    mb.at(1, 0) = one;
    reps.push_back(build(ma, mb, "std", 2));
    // sanity: homomorphism property
    for (const auto &r : reps)
        for (int x : z)
            for (int y : z)
                if (!((r.mats[pos.at(x)] * r.mats[pos.at(y)]) == r.mats[pos.at(g.mul(x, y))]))
                    throw NumericError("centralizer representation build failed");
    return reps;
}

}  // namespace

HopfPtr make_double_of_group(const GroupTable &g, Backend b, const std::string &name) {
    g.validate();
    int n = g.order();
    int e = g.identity();
    auto hp = std::make_shared<HopfAlgebra>();
    HopfAlgebra &h = *hp;
    h.name = name.empty() ? "D(G" + std::to_string(n) + ")" : name;
    h.dim = n * n;
    h.backend = b;
    h.conductor = std::lcm(4, g.exponent());
    Scalar one = Scalar::of_backend_one(b);

    auto idx = [&](int gg, int x) { return gg * n + x; };  // delta_g (x) x
    for (int gg = 0; gg < n; ++gg)
        for (int x = 0; x < n; ++x)
            h.basis_names.push_back("d[" + g.names[gg] + "]." + g.names[x]);

    h.mult.assign(h.dim, std::vector<SparseVec>(h.dim));
    for (int gg = 0; gg < n; ++gg)
        for (int x = 0; x < n; ++x)
            for (int hh = 0; hh < n; ++hh)
                for (int y = 0; y < n; ++y)
                    if (gg == g.mul(g.mul(x, hh), g.inv(x)))
                        h.mult[idx(gg, x)][idx(hh, y)] = {{idx(gg, g.mul(x, y)), one}};
    h.unit = h.zero_elem();
    for (int gg = 0; gg < n; ++gg) h.unit[idx(gg, e)] = one;
    h.counit_row = h.zero_elem();
    for (int x = 0; x < n; ++x) h.counit_row[idx(e, x)] = one;
    for (int gg = 0; gg < n; ++gg)
        for (int x = 0; x < n; ++x) {
            Op d(h.dim, h.dim, b);
            for (int a = 0; a < n; ++a) {
                int bb = g.mul(g.inv(a), gg);  // a * bb = gg
                d.at(idx(a, x), idx(bb, x)) = one;
            }
            h.coproduct.push_back(d);
        }
    h.antipode = Op(h.dim, h.dim, b);
    for (int gg = 0; gg < n; ++gg)
        for (int x = 0; x < n; ++x) {
            int xg = g.mul(g.mul(g.inv(x), g.inv(gg)), x);
            h.antipode.at(idx(xg, g.inv(x)), idx(gg, x)) = one;
        }
    // No star is attached: the axioms demanded of it cannot hold on the
    // double of a nonabelian group, so star-dependent checks are skipped.
    h.star.reset();

    h.R = Op(h.dim, h.dim, b);
    for (int gg = 0; gg < n; ++gg)
        for (int hh = 0; hh < n; ++hh) h.R.at(idx(gg, e), idx(hh, gg)) = one;

    h.ribbon = h.zero_elem();
    for (int gg = 0; gg < n; ++gg) h.ribbon[idx(gg, g.inv(gg))] = one;
    h.kappa.reset();

    // conjugacy classes
    std::vector<int> class_of(n, -1);
    std::vector<std::vector<int>> classes;
    for (int gg = 0; gg < n; ++gg) {
        if (class_of[gg] >= 0) continue;
        std::vector<int> cls;
        for (int x = 0; x < n; ++x) {
            int c = g.mul(g.mul(x, gg), g.inv(x));
            if (class_of[c] < 0) {
                class_of[c] = (int)classes.size();
                cls.push_back(c);
            }
        }
        classes.push_back(cls);
    }

    for (const auto &cls : classes) {
        int r = cls[0];
        // centralizer of the representative
        std::vector<int> cent;
        for (int x = 0; x < n; ++x)
            if (g.mul(x, r) == g.mul(r, x)) cent.push_back(x);
        // coset representatives k_c with c = k_c r k_c^{-1}
        std::map<int, int> kc;
        for (int x = 0; x < n; ++x) {
            int c = g.mul(g.mul(x, r), g.inv(x));
            if (!kc.count(c)) kc[c] = x;
        }
        std::map<int, int> cpos;
        for (size_t i = 0; i < cls.size(); ++i) cpos[cls[i]] = (int)i;
        std::map<int, int> zpos;
        for (size_t i = 0; i < cent.size(); ++i) zpos[cent[i]] = (int)i;

        for (const auto &rho : centralizer_irreps(g, cent, h.conductor, b)) {
            Irrep ir;
            ir.label = g.names[r] + "." + rho.label;
            ir.dim = (int)cls.size() * rho.dim;
            ir.mats.assign(h.dim, Op(ir.dim, ir.dim, b));
            for (int gg = 0; gg < n; ++gg)
                for (int x = 0; x < n; ++x) {
                    Op &m = ir.mats[idx(gg, x)];
                    for (int c : cls) {
                        int tc = g.mul(g.mul(x, c), g.inv(x));
                        if (gg != tc) continue;
                        // z = k_{tc}^{-1} x k_c lies in the centralizer
                        int z = g.mul(g.mul(g.inv(kc[tc]), x), kc[c]);
                        const Op &rz = rho.mats[zpos.at(z)];
                        for (int u = 0; u < rho.dim; ++u)
                            for (int v = 0; v < rho.dim; ++v)
                                m.at(cpos[tc] * rho.dim + u, cpos[c] * rho.dim + v) = rz.at(u, v);
                    }
                }
            h.irreps.push_back(std::move(ir));
        }
    }
    // trivial irrep: class of the identity with the trivial character
    for (size_t I = 0; I < h.irreps.size(); ++I) {
        if (h.irreps[I].dim != 1) continue;
        bool triv = true;
        for (int i = 0; i < h.dim && triv; ++i)
            if (!(h.irreps[I].mats[i].at(0, 0) == h.counit_row[i])) triv = false;
        if (triv) {
            h.trivial_irrep = (int)I;
            break;
        }
    }
    h.validate_shapes();
    return hp;
}

}  // namespace lca
