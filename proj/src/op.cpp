#include "lca/op.hpp"

#include <algorithm>
#include <map>

namespace lca {

namespace {
// Relative pivot threshold for the float backend rank decisions.
constexpr double kFloatPivotTol = 1e-8;
}

Op Op::identity(int n, Backend b) {
    Op m(n, n, b);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::of_backend_one(b);
    return m;
}

Op Op::operator+(const Op &o) const {
    Op out = *this;
    out += o;
    return out;
}

Op &Op::operator+=(const Op &o) {
    if (r_ != o.r_ || c_ != o.c_) throw NumericError("shape mismatch in add");
    for (size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
    return *this;
}

Op Op::operator-(const Op &o) const {
    Op out = *this;
    out -= o;
    return out;
}

Op Op::operator*(const Op &o) const {
    if (c_ != o.r_) throw NumericError("shape mismatch in mul");
    Op out(r_, o.c_, b_ == Backend::Float || o.b_ == Backend::Float ? Backend::Float : Backend::Exact);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Scalar &x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Scalar &y = o.at(k, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

Op Op::operator*(const Scalar &s) const {
    Op out(r_, c_, b_);
    if (s.is_zero()) return out;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!a_[i].is_zero()) out.a_[i] = a_[i] * s;
    return out;
}

void Op::axpy(const Scalar &s, const Op &o) {
    if (s.is_zero()) return;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!o.a_[i].is_zero()) a_[i] += s * o.a_[i];
}

Op Op::transpose() const {
    Op out(c_, r_, b_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Op Op::conj() const {
    Op out(r_, c_, b_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].conj();
    return out;
}

Op Op::conj_transpose() const { return conj().transpose(); }

Op Op::to_float() const {
    Op out(r_, c_, Backend::Float);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].to_float();
    return out;
}

bool Op::is_zero() const {
    for (const auto &x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Op::is_identity() const {
    if (r_ != c_) return false;
    return *this == identity(r_, b_);
}

bool Op::operator==(const Op &o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

double Op::residual(const Op &o) const {
    if (r_ != o.r_ || c_ != o.c_) throw NumericError("shape mismatch in residual");
    double m = 0;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i].is_exact() && o.a_[i].is_exact() && a_[i] == o.a_[i]) continue;
        m = std::max(m, std::abs(a_[i].to_complex() - o.a_[i].to_complex()));
    }
    return m;
}

double Op::max_abs() const {
    double m = 0;
    for (const auto &x : a_) m = std::max(m, x.abs_num());
    return m;
}

Op Op::kron(const Op &o) const {
    Op out(r_ * o.r_, c_ * o.c_, b_ == Backend::Float || o.b_ == Backend::Float ? Backend::Float : b_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            const Scalar &x = at(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < o.r_; ++k)
                for (int l = 0; l < o.c_; ++l) {
                    const Scalar &y = o.at(k, l);
                    if (!y.is_zero()) out.at(i * o.r_ + k, j * o.c_ + l) = x * y;
                }
        }
    return out;
}

Scalar Op::trace() const {
    Scalar t = Scalar::of_backend_zero(b_);
    for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
    return t;
}

namespace {

// Pivot search helper shared by the elimination kernels.
int find_pivot(const Op &m, int row_from, int col, double thresh) {
    if (m.backend() == Backend::Exact) {
        for (int i = row_from; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) return i;
        return -1;
    }
    int best = -1;
    double best_abs = thresh;
    for (int i = row_from; i < m.rows(); ++i) {
        double v = m.at(i, col).abs_num();
        if (v > best_abs) {
            best_abs = v;
            best = i;
        }
    }
    return best;
}

void swap_rows(Op &m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

// Reduced row echelon form in place; returns pivot column list.
std::vector<int> rref(Op &m) {
    double thresh = m.backend() == Backend::Float ? kFloatPivotTol * std::max(1.0, m.max_abs()) : 0.0;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = find_pivot(m, row, col, thresh);
        if (p < 0) continue;
        swap_rows(m, row, p);
        Scalar inv = m.at(row, col).inv();
        for (int j = col; j < m.cols(); ++j)
            if (!m.at(row, j).is_zero()) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < m.cols(); ++j)
                if (!m.at(row, j).is_zero()) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Fraction-free Bareiss elimination; rank only.  Keeps intermediate
// entries as quotients of minors, which controls coefficient blow-up on
// exact data.
int bareiss_rank(Op m) {
    int rank = 0;
    Scalar prev = Scalar::of_backend_one(m.backend());
    double thresh = m.backend() == Backend::Float ? kFloatPivotTol * std::max(1.0, m.max_abs()) : 0.0;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = find_pivot(m, row, col, thresh);
        if (p < 0) continue;
        swap_rows(m, row, p);
        const Scalar piv = m.at(row, col);
        for (int i = row + 1; i < m.rows(); ++i) {
            const Scalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) {
                Scalar v = m.at(i, j) * piv - f * m.at(row, j);
                m.at(i, j) = v / prev;
            }
        }
        prev = piv;
        ++rank;
        ++row;
    }
    return rank;
}

}  // namespace

int Op::rank() const { return bareiss_rank(*this); }

Op Op::inverse() const {
    if (r_ != c_) throw NumericError("inverse of non-square");
    Op aug(r_, 2 * c_, b_);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_ + i) = Scalar::of_backend_one(b_);
    }
    auto pivots = rref(aug);
    if ((int)pivots.size() != r_ || pivots.back() >= c_)
        throw SingularMatrix("matrix not invertible");
    Op out(r_, c_, b_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(i, j) = aug.at(i, c_ + j);
    return out;
}

std::vector<Op> Op::nullspace_columns() const {
    Op m = *this;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<Op> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        Op v(c_, 1, b_);
        v.at(free, 0) = Scalar::of_backend_one(b_);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v.at(pivots[pi], 0) = -m.at((int)pi, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Op Op::column_space_basis() const {
    Op m = *this;
    auto pivots = rref(m);
    Op out(r_, (int)pivots.size(), b_);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (int i = 0; i < r_; ++i) out.at(i, (int)k) = at(i, pivots[k]);
    return out;
}

std::vector<Op> solve_intertwiners(const std::vector<std::pair<Op, Op>> &pairs) {
    if (pairs.empty()) throw NumericError("no constraints given");
    Backend b = pairs[0].first.backend();
    int w = pairs[0].first.rows();
    // unknown X is w x w; equations A X - X B = 0 stacked
    int rows = (int)pairs.size() * w * w;
    Op sys(rows, w * w, b);
    int base = 0;
    for (const auto &[A, B] : pairs) {
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j) {
                int eq = base + i * w + j;
                for (int k = 0; k < w; ++k) {
                    if (!A.at(i, k).is_zero()) sys.at(eq, k * w + j) += A.at(i, k);
                    if (!B.at(k, j).is_zero()) sys.at(eq, i * w + k) -= B.at(k, j);
                }
            }
        base += w * w;
    }
    std::vector<Op> xs;
    for (auto &v : sys.nullspace_columns()) {
        Op X(w, w, b);
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < w; ++j) X.at(i, j) = v.at(i * w + j, 0);
        xs.push_back(std::move(X));
    }
    return xs;
}

namespace {

// Sparse RREF specialized for the ad_A kernel below: rows are sparse maps
// column -> scalar.  Good enough because model operators are monomial-like.
using SparseRow = std::map<int, Scalar>;

void sparse_rref(std::vector<SparseRow> &rows, std::vector<int> &pivot_cols) {
    std::map<int, size_t> pivot_of_col;
    for (size_t ri = 0; ri < rows.size(); ++ri) {
        SparseRow &row = rows[ri];
        // reduce against existing pivots
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = row.begin(); it != row.end();) {
                if (it->second.is_zero()) {
                    it = row.erase(it);
                    continue;
                }
                auto pv = pivot_of_col.find(it->first);
                if (pv != pivot_of_col.end()) {
                    Scalar f = it->second;
                    const SparseRow &prow = rows[pv->second];
                    for (const auto &[c, v] : prow) {
                        auto slot = row.find(c);
                        if (slot == row.end())
                            row[c] = -(f * v);
                        else
                            slot->second -= f * v;
                    }
                    changed = true;
                    break;
                }
                ++it;
            }
        }
        for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
        if (row.empty()) continue;
        int pc = row.begin()->first;
        Scalar inv = row.begin()->second.inv();
        for (auto &[c, v] : row) v = v * inv;
        // back-substitute into earlier pivot rows
        for (auto &[col, ri2] : pivot_of_col) {
            (void)col;
            SparseRow &prow = rows[ri2];
            auto slot = prow.find(pc);
            if (slot == prow.end() || slot->second.is_zero()) continue;
            Scalar f = slot->second;
            for (const auto &[c, v] : row) {
                auto s2 = prow.find(c);
                if (s2 == prow.end())
                    prow[c] = -(f * v);
                else
                    s2->second -= f * v;
            }
        }
        pivot_of_col[pc] = ri;
        pivot_cols.push_back(pc);
    }
}

// Basis of {X : A X = X A} computed sparsely.
std::vector<Op> kernel_of_ad(const Op &A) {
    int w = A.rows();
    Backend b = A.backend();
    std::vector<SparseRow> rows;
    rows.reserve((size_t)w * w);
    for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) {
            SparseRow row;
            for (int k = 0; k < w; ++k) {
                if (!A.at(i, k).is_zero()) {
                    Scalar &slot = row[k * w + j];
                    slot += A.at(i, k);
                }
                if (!A.at(k, j).is_zero()) {
                    Scalar &slot = row[i * w + k];
                    slot -= A.at(k, j);
                }
            }
            for (auto it = row.begin(); it != row.end();)
                it = it->second.is_zero() ? row.erase(it) : std::next(it);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    std::vector<int> pivot_cols;
    sparse_rref(rows, pivot_cols);
    std::vector<bool> is_pivot(w * w, false);
    std::map<int, SparseRow *> row_of_pivot;
    {
        size_t k = 0;
        for (auto &r : rows) {
            if (r.empty()) continue;
            (void)k;
            row_of_pivot[r.begin()->first] = &r;
            is_pivot[r.begin()->first] = true;
        }
    }
    std::vector<Op> basis;
    for (int free = 0; free < w * w; ++free) {
        if (is_pivot[free]) continue;
        Op X(w, w, b);
        X.at(free / w, free % w) = Scalar::of_backend_one(b);
        for (auto &[pc, prow] : row_of_pivot) {
            auto it = prow->find(free);
            if (it != prow->end() && !it->second.is_zero())
                X.at(pc / w, pc % w) = -it->second;
        }
        basis.push_back(std::move(X));
    }
    return basis;
}

}  // namespace

int commutant_dimension(const std::vector<Op> &ops) {
    if (ops.empty()) throw NumericError("empty operator set");
    int w = ops[0].rows();
    Backend b = ops[0].backend();
    // Seed with the centralizer of the first operator, then cut down by
    // the rest; avoids ever forming the full w^2 x w^2 system.
    std::vector<Op> basis = kernel_of_ad(ops[0]);
    for (size_t oi = 1; oi < ops.size() && basis.size() > 1; ++oi) {
        const Op &A = ops[oi];
        int m = (int)basis.size();
        Op sys(w * w, m, b);
        for (int j = 0; j < m; ++j) {
            Op C = A * basis[j] - basis[j] * A;
            for (int i = 0; i < w; ++i)
                for (int k = 0; k < w; ++k) sys.at(i * w + k, j) = C.at(i, k);
        }
        auto ns = sys.nullspace_columns();
        std::vector<Op> next;
        for (auto &v : ns) {
            Op X(w, w, b);
            for (int j = 0; j < m; ++j) X.axpy(v.at(j, 0), basis[j]);
            next.push_back(std::move(X));
        }
        basis = std::move(next);
    }
    return (int)basis.size();
}

std::pair<Op, Op> image_restriction(const Op &P) {
    Op C = P.column_space_basis();
    int w = P.rows(), r = C.cols();
    Op aug(w, r + w, P.backend());
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < r; ++j) aug.at(i, j) = C.at(i, j);
        aug.at(i, r + i) = Scalar::of_backend_one(P.backend());
    }
    rref(aug);
    Op L(r, w, P.backend());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < w; ++j) L.at(i, j) = aug.at(i, r + j);
    return {C, L};
}

}  // namespace lca
