#pragma once

// Explicit diagonalization of walk matrices over the Laurent ring by
// invertible row and column operations.
//
// The engine peels the dissection one boundary piece at a time. For a
// boundary piece of degree d sitting (after a rotation of labels) on the arc
// n, n+1, ..., N with interior diagonal {1, n} (N the current size,
// n = N-d+2), subtracting suitable unit multiples of column 1 and column n
// from the arc columns, and of rows 1 and n from the arc rows, splits off a
// (d-2) x (d-2) corner block while the leading n x n block stays exactly the
// walk matrix of the peeled dissection with the boundary edge weights
// n..N merged into one composite weight. The corner block is a unit-scalar
// multiple of the standard unit block
//
//   U_ii = 1+y, U_ij = (u_i...u_{j-1}) y (i<j), U_ij = (u_j...u_{i-1})^{-1} (i>j)
//
// whose reduction to diag(-u_1, ..., -u_{s-1}, (u_1...u_{s-1})^{-1} (1+y+...+y^s))
// is implemented separately (reduce_unit_block). The recursion bottoms out
// at the trivial polygon, handled by diagonalize_trivial's operation
// sequence. All operation coefficients are unit monomials or derived from
// unit pivots, so P and Q stay invertible over the ring; everything is
// verified by exact matrix multiplication before returning.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/complement.hpp"
#include "frieze/dissection.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"
#include "frieze/matrix.hpp"
#include "frieze/walks.hpp"

namespace frieze {

struct ElementaryOp {
    enum class Kind { add_multiple, scale, permute };
    Kind kind = Kind::add_multiple;
    int target = 0, source = 0; // 1-based; add_multiple: target += coeff * source
    LaurentPoly coeff;          // add_multiple coefficient or scale unit
    std::vector<int> perm;      // permute: new index i takes old index perm[i-1]
};

using OpLog = std::vector<ElementaryOp>;

inline void apply_row_op(PolyMatrix& a, const ElementaryOp& op) {
    switch (op.kind) {
        case ElementaryOp::Kind::add_multiple: a.row_add(op.target, op.source, op.coeff); break;
        case ElementaryOp::Kind::scale: a.row_scale(op.target, op.coeff); break;
        case ElementaryOp::Kind::permute: a.permute_rows(op.perm); break;
    }
}

inline void apply_col_op(PolyMatrix& a, const ElementaryOp& op) {
    switch (op.kind) {
        case ElementaryOp::Kind::add_multiple: a.col_add(op.target, op.source, op.coeff); break;
        case ElementaryOp::Kind::scale: a.col_scale(op.target, op.coeff); break;
        case ElementaryOp::Kind::permute: a.permute_cols(op.perm); break;
    }
}

/// Replays logged operations against w: returns P * w * Q without needing P
/// and Q themselves (row and column operations commute across the product).
inline PolyMatrix replay_ops(PolyMatrix w, const OpLog& row_ops, const OpLog& col_ops) {
    for (const auto& op : row_ops) apply_row_op(w, op);
    for (const auto& op : col_ops) apply_col_op(w, op);
    return w;
}

/// Invertible transform pair with its paper trail: p * (input matrix) * q
/// == d, where d is diagonal. det_p and det_q are units, tracked op by op
/// and cross-checked against an independent expansion for small sizes.
struct DiagonalForm {
    PolyMatrix p, d, q;
    LaurentPoly det_p, det_q;
    OpLog row_ops, col_ops;
};

namespace detail {

/// Accumulates row/column operations against a working matrix while
/// maintaining p * w * q == a and the determinants of p and q.
class TransformSession {
  public:
    explicit TransformSession(const PolyMatrix& w)
        : a_(w), p_(PolyMatrix::identity(w.var_set(), w.size())), q_(PolyMatrix::identity(w.var_set(), w.size())),
          det_p_(LaurentPoly::one(w.var_set())), det_q_(LaurentPoly::one(w.var_set())) {}

    const PolyMatrix& a() const { return a_; }
    const LaurentPoly& entry(int i, int j) const { return a_.at(i, j); }
    int size() const { return a_.size(); }
    VarSet var_set() const { return a_.var_set(); }

    void row_add(int t, int s, const LaurentPoly& coeff) {
        if (coeff.is_zero()) return;
        ElementaryOp op{ElementaryOp::Kind::add_multiple, t, s, coeff, {}};
        apply_row_op(a_, op);
        apply_row_op(p_, op);
        row_ops_.push_back(std::move(op));
    }

    void col_add(int t, int s, const LaurentPoly& coeff) {
        if (coeff.is_zero()) return;
        ElementaryOp op{ElementaryOp::Kind::add_multiple, t, s, coeff, {}};
        apply_col_op(a_, op);
        apply_col_op(q_, op);
        col_ops_.push_back(std::move(op));
    }

    void row_scale(int t, const LaurentPoly& unit) {
        if (!unit.is_unit()) throw DomainError("row_scale: scale factor must be a unit");
        if (unit.is_one()) return;
        ElementaryOp op{ElementaryOp::Kind::scale, t, 0, unit, {}};
        apply_row_op(a_, op);
        apply_row_op(p_, op);
        det_p_ = det_p_ * unit;
        row_ops_.push_back(std::move(op));
    }

    void col_scale(int t, const LaurentPoly& unit) {
        if (!unit.is_unit()) throw DomainError("col_scale: scale factor must be a unit");
        if (unit.is_one()) return;
        ElementaryOp op{ElementaryOp::Kind::scale, t, 0, unit, {}};
        apply_col_op(a_, op);
        apply_col_op(q_, op);
        det_q_ = det_q_ * unit;
        col_ops_.push_back(std::move(op));
    }

    void permute_rows(const std::vector<int>& perm) {
        ElementaryOp op{ElementaryOp::Kind::permute, 0, 0, LaurentPoly(), perm};
        apply_row_op(a_, op);
        apply_row_op(p_, op);
        det_p_ = det_p_ * Int(permutation_sign(perm));
        row_ops_.push_back(std::move(op));
    }

    void permute_cols(const std::vector<int>& perm) {
        ElementaryOp op{ElementaryOp::Kind::permute, 0, 0, LaurentPoly(), perm};
        apply_col_op(a_, op);
        apply_col_op(q_, op);
        det_q_ = det_q_ * Int(permutation_sign(perm));
        col_ops_.push_back(std::move(op));
    }

    /// Clears entry (r, target_col) using the unit pivot at (r, pivot_col).
    void clear_col_entry(int r, int target_col, int pivot_col) {
        const LaurentPoly& value = a_.at(r, target_col);
        if (value.is_zero()) return;
        col_add(target_col, pivot_col, -(value * a_.at(r, pivot_col).inverse_of_unit()));
    }

    /// Clears entry (target_row, c) using the unit pivot at (pivot_row, c).
    void clear_row_entry(int target_row, int c, int pivot_row) {
        const LaurentPoly& value = a_.at(target_row, c);
        if (value.is_zero()) return;
        row_add(target_row, pivot_row, -(value * a_.at(pivot_row, c).inverse_of_unit()));
    }

    /// Paired sign flip at position t: leaves a_ unchanged (diagonal
    /// matrices only), flips the sign of both determinants.
    void flip_sign_pair(int t) {
        const LaurentPoly minus_one = LaurentPoly::constant(var_set(), -1);
        row_scale(t, minus_one);
        col_scale(t, minus_one);
    }

    DiagonalForm finalize(const PolyMatrix& w, int expand_guard = 14) {
        if (!a_.is_diagonal()) throw Error("diagonalization failed: result is not diagonal");
        if (!(p_ * w * q_ == a_)) throw Error("diagonalization failed: p * w * q != d");
        if (!det_p_.is_unit() || !det_q_.is_unit()) throw Error("diagonalization failed: non-unit determinant");
        if (a_.size() <= expand_guard) {
            if (!(det_expand(p_) == det_p_)) throw Error("diagonalization failed: det(p) mismatch");
            if (!(det_expand(q_) == det_q_)) throw Error("diagonalization failed: det(q) mismatch");
        }
        return DiagonalForm{std::move(p_), std::move(a_), std::move(q_), std::move(det_p_), std::move(det_q_),
                            std::move(row_ops_), std::move(col_ops_)};
    }

  private:
    PolyMatrix a_, p_, q_;
    LaurentPoly det_p_, det_q_;
    OpLog row_ops_, col_ops_;
};

/// The unit v with value == v * expected, if value is a unit multiple.
/// Relies on the canonical term order being multiplication-invariant, so the
/// minimal terms of value and expected differ by exactly that unit.
inline LaurentPoly unit_quotient(const LaurentPoly& value, const LaurentPoly& expected, const char* what) {
    if (value.is_zero() || expected.is_zero())
        throw Error(std::string(what) + ": zero where a unit multiple was expected");
    const auto& [vm, vc] = *value.terms().begin();
    const auto& [em, ec] = *expected.terms().begin();
    Int ratio;
    if (vc == ec)
        ratio = 1;
    else if (vc == -ec)
        ratio = -1;
    else
        throw Error(std::string(what) + ": leading coefficients are not unit-related");
    LaurentPoly u = LaurentPoly::monomial(value.var_set(), vm * em.inverse(), ratio);
    if (!(u * expected == value)) throw Error(std::string(what) + ": value is not a unit multiple of the target");
    return u;
}

/// Column/row reduction of the trivial polygon's walk matrix, acting on the
/// leading d x d block: afterwards the block is
/// diag(w_1, ..., w_{d-1}, w_d * (1 + e x^d + ... + (e x^d)^{d-2})) with
/// e = w_1...w_d. Only unit pivots are divided by.
inline void trivial_block_ops(TransformSession& s, int d, const std::vector<LaurentPoly>& w, const LaurentPoly& x) {
    // right-to-left so each subtraction sees the original previous column
    for (int i = d; i >= 2; --i) s.col_add(i, i - 1, -(w[i - 2] * x));
    // columns 3..d in turn clear rows 2..d-1 of column 1, accumulating the
    // geometric sum at the bottom
    for (int r = 2; r <= d - 1; ++r) s.clear_col_entry(r, 1, r + 1);
    // rows 1..d-1 clear the subdiagonal remnants at (i, i)
    for (int i = 2; i <= d; ++i) s.clear_row_entry(i, i, i - 1);
    // cycle columns so the pivots line up on the diagonal
    std::vector<int> perm(s.size());
    for (int j = 1; j <= s.size(); ++j) perm[j - 1] = j;
    for (int j = 1; j <= d - 1; ++j) perm[j - 1] = j + 1;
    perm[d - 1] = 1;
    s.permute_cols(perm);
}

/// Unit-block reduction on rows/columns off+1..off+s. Works on any unit
/// scalar multiple of the standard block: coefficients are either the given
/// units or derived from live unit pivots.
inline void unit_block_ops(TransformSession& s, int off, int sz, const std::vector<LaurentPoly>& units) {
    if (static_cast<int>(units.size()) != sz - 1)
        throw DomainError("unit_block_ops: need one unit per adjacent column pair");
    for (const auto& u : units)
        if (!u.is_unit()) throw DomainError("unit_block_ops: non-unit coefficient");
    for (int i = sz; i >= 2; --i) s.col_add(off + i, off + i - 1, -units[i - 2]);
    for (int r = 1; r <= sz - 1; ++r) s.clear_col_entry(off + r, off + 1, off + r + 1);
    for (int i = 2; i <= sz; ++i) s.clear_row_entry(off + i, off + i, off + i - 1);
    if (sz > 1) {
        std::vector<int> perm(s.size());
        for (int j = 1; j <= s.size(); ++j) perm[j - 1] = j;
        for (int j = 1; j <= sz - 1; ++j) perm[off + j - 1] = off + j + 1;
        perm[off + sz - 1] = off + 1;
        s.permute_cols(perm);
    }
}

} // namespace detail

/// Explicit standard unit block used by the corner reduction.
inline PolyMatrix unit_block_matrix(int s, const LaurentPoly& y, const std::vector<LaurentPoly>& units) {
    if (s < 1) throw DomainError("unit_block_matrix: size must be positive");
    if (static_cast<int>(units.size()) != s - 1) throw DomainError("unit_block_matrix: need s-1 units");
    const VarSet vs = y.var_set();
    for (const auto& u : units) {
        require_same(vs, u.var_set(), "unit_block_matrix");
        if (!u.is_unit()) throw DomainError("unit_block_matrix: units must be +-monomials");
    }
    PolyMatrix m(vs, s);
    const LaurentPoly one = LaurentPoly::one(vs);
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) {
            if (i == j) {
                m.at(i, j) = one + y;
            } else if (i < j) {
                LaurentPoly prod = one;
                for (int k = i; k <= j - 1; ++k) prod = prod * units[k - 1];
                m.at(i, j) = prod * y;
            } else {
                LaurentPoly prod = one;
                for (int k = j; k <= i - 1; ++k) prod = prod * units[k - 1];
                m.at(i, j) = prod.inverse_of_unit();
            }
        }
    return m;
}

/// Reduces the standard unit block to
/// diag(-u_1, ..., -u_{s-1}, (u_1...u_{s-1})^{-1} (1 + y + ... + y^s)),
/// returning p, d, q with p * U * q == d, det p = (-1)^{s-1}, det q = 1.
inline DiagonalForm reduce_unit_block(int s, const LaurentPoly& y, const std::vector<LaurentPoly>& units) {
    const PolyMatrix u = unit_block_matrix(s, y, units);
    detail::TransformSession session(u);
    detail::unit_block_ops(session, 0, s, units);
    if (s % 2 == 0) session.flip_sign_pair(s);

    // expected diagonal
    const VarSet vs = y.var_set();
    std::vector<LaurentPoly> diag;
    LaurentPoly delta = LaurentPoly::one(vs);
    for (const auto& un : units) {
        diag.push_back(-un);
        delta = delta * un;
    }
    diag.push_back(delta.inverse_of_unit() * geometric_sum(y, s));
    if (!(session.a() == PolyMatrix::diagonal_matrix(vs, diag)))
        throw Error("reduce_unit_block: unexpected diagonal");
    return session.finalize(u);
}

/// Diagonalizes the walk matrix of the trivial d-gon with the given unit
/// monomial edge weights (default: the symbolic edge variables), yielding
/// p * W * q == diag(w_1, ..., w_{d-1}, w_d * sum_{j=0}^{d-2} (e x^d)^j)
/// with e = w_1...w_d and x the piece variable, det p = (-1)^{d-1},
/// det q = 1.
inline DiagonalForm diagonalize_trivial(int d, std::vector<LaurentPoly> edge_weights = {}) {
    if (d < 3) throw DomainError("diagonalize_trivial: degree must be at least 3");
    const Dissection triv = build_dissection(d, {});
    if (edge_weights.empty()) {
        edge_weights.reserve(d);
        for (int i = 1; i <= d; ++i) edge_weights.push_back(LaurentPoly::variable(triv.var_set(), edge_var(i)));
    }
    if (static_cast<int>(edge_weights.size()) != d)
        throw DomainError("diagonalize_trivial: need one weight per boundary edge");
    const VarSet vs = edge_weights.front().var_set();
    if (vs.pieces < 1) throw DomainError("diagonalize_trivial: variable set lacks a piece variable");
    for (const auto& w : edge_weights) {
        require_same(vs, w.var_set(), "diagonalize_trivial");
        if (!w.is_unit()) throw DomainError("diagonalize_trivial: edge weights must be unit monomials");
    }

    const PolyMatrix w = weighted_walk_matrix(triv, edge_weights);
    const LaurentPoly x = LaurentPoly::variable(vs, piece_var(1));
    detail::TransformSession session(w);
    detail::trivial_block_ops(session, d, edge_weights, x);
    if (d % 2 == 0) session.flip_sign_pair(d);

    LaurentPoly e = LaurentPoly::one(vs);
    for (const auto& wt : edge_weights) e = e * wt;
    std::vector<LaurentPoly> diag(edge_weights.begin(), edge_weights.end() - 1);
    diag.push_back(edge_weights.back() * geometric_sum(e * x.pow(d), d - 2));
    if (!(session.a() == PolyMatrix::diagonal_matrix(vs, diag)))
        throw Error("diagonalize_trivial: unexpected diagonal");
    return session.finalize(w);
}

namespace detail {

struct PeelState {
    int n = 0;
    std::vector<std::vector<int>> pieces; // ccw vertex lists in current labels
    std::vector<int> orig_id;
    std::vector<std::pair<int, int>> diagonals; // current labels, a < b
    std::vector<LaurentPoly> edge_weights;      // unit monomials, size n
};

inline int state_next(const PeelState& st, int v) { return v % st.n + 1; }
inline int state_prev(const PeelState& st, int v) { return (v + st.n - 2) % st.n + 1; }

inline bool state_is_diagonal_edge(const PeelState& st, int u, int v) {
    return state_next(st, u) != v && state_next(st, v) != u;
}

inline int diagonal_edge_count(const PeelState& st, const std::vector<int>& piece) {
    int cnt = 0;
    const int k = static_cast<int>(piece.size());
    for (int idx = 0; idx < k; ++idx)
        if (state_is_diagonal_edge(st, piece[idx], piece[(idx + 1) % k])) ++cnt;
    return cnt;
}

/// Boundary piece to peel next: the one containing the largest current
/// vertex label; rare ties (two boundary pieces sharing that vertex) go to
/// the lexicographically larger descending vertex list.
inline int pick_peel_piece(const PeelState& st) {
    int best = -1;
    std::vector<int> best_key;
    for (int idx = 0; idx < static_cast<int>(st.pieces.size()); ++idx) {
        if (diagonal_edge_count(st, st.pieces[idx]) != 1) continue;
        std::vector<int> key = st.pieces[idx];
        std::sort(key.begin(), key.end(), std::greater<int>());
        if (best < 0 || key > best_key) {
            best = idx;
            best_key = std::move(key);
        }
    }
    if (best < 0) throw Error("diagonalize: no boundary piece found");
    return best;
}

} // namespace detail

/// Diagonalizes the walk matrix of the dissection in the given flavor:
/// p * W * q == diag(S_1, ..., S_m, 1, ..., 1) where
/// S_l = 1 + y_l + ... + y_l^{d_l - 2} and y_l is eps*c*x_l^2 (xq flavor),
/// c*x_l^2 (x flavor) or 1 (arithmetic flavor, giving S_l = d_l - 1).
/// Entries follow piece-id order; p, q are invertible over the ring (over Z
/// in the arithmetic flavor) and everything is verified by exact
/// multiplication before returning.
inline DiagonalForm diagonalize(const Dissection& dis, Flavor flavor) {
    const VarSet vs = dis.var_set();
    const WeightMatrix wm = weight_matrix(dis, flavor);
    const PolyMatrix& w = wm.matrix();
    detail::TransformSession session(w);

    detail::PeelState st;
    st.n = dis.n;
    st.pieces = dis.pieces;
    st.diagonals = dis.diagonals;
    st.orig_id.resize(dis.pieces.size());
    for (int l = 1; l <= dis.piece_count(); ++l) st.orig_id[l - 1] = l;
    st.edge_weights.reserve(dis.n);
    for (int i = 1; i <= dis.n; ++i)
        st.edge_weights.push_back(flavor == Flavor::xq ? LaurentPoly::variable(vs, edge_var(i))
                                                       : LaurentPoly::one(vs));

    auto piece_x = [&](int orig) {
        return flavor == Flavor::arithmetic ? LaurentPoly::one(vs) : LaurentPoly::variable(vs, piece_var(orig));
    };

    ComplementContext ctx(dis);
    const LaurentPoly eps_c = flavor == Flavor::xq ? ctx.eps_monomial() * ctx.c_monomial()
                              : flavor == Flavor::x ? ctx.c_monomial()
                                                    : LaurentPoly::one(vs);

    std::vector<std::pair<int, int>> nontrivial; // (position, original piece id)

    while (st.pieces.size() > 1) {
        const int idx = detail::pick_peel_piece(st);
        const int d = static_cast<int>(st.pieces[idx].size());
        const int big_n = st.n;
        const int small_n = big_n - d + 2;

        // arc start: the unique piece vertex whose predecessor is outside
        int a = 0;
        {
            std::vector<char> in_piece(big_n + 1, 0);
            for (int v : st.pieces[idx]) in_piece[v] = 1;
            for (int v : st.pieces[idx])
                if (!in_piece[detail::state_prev(st, v)]) a = v;
        }
        if (a == 0) throw Error("diagonalize: boundary piece has no arc start");

        // rotate labels so the piece occupies small_n..big_n (and vertex 1)
        if (a != small_n) {
            auto rho = [&](int v) { return (v - a + small_n - 1 + big_n) % big_n + 1; };
            auto rho_inv = [&](int v) { return (v - small_n + a - 1 + big_n) % big_n + 1; };
            std::vector<int> perm(session.size());
            for (int i = 1; i <= session.size(); ++i) perm[i - 1] = i <= big_n ? rho_inv(i) : i;
            session.permute_rows(perm);
            session.permute_cols(perm);

            for (auto& piece : st.pieces) {
                for (int& v : piece) v = rho(v);
                auto it = std::min_element(piece.begin(), piece.end());
                std::rotate(piece.begin(), it, piece.end());
            }
            for (auto& [u, v] : st.diagonals) {
                u = rho(u), v = rho(v);
                if (u > v) std::swap(u, v);
            }
            std::sort(st.diagonals.begin(), st.diagonals.end());
            std::vector<LaurentPoly> wts;
            wts.reserve(big_n);
            for (int i = 1; i <= big_n; ++i) wts.push_back(st.edge_weights[rho_inv(i) - 1]);
            st.edge_weights = std::move(wts);
        }

        const LaurentPoly x = piece_x(st.orig_id[idx]);
        auto weight_range = [&](int from, int to) { // w_from * ... * w_to
            LaurentPoly p = LaurentPoly::one(vs);
            for (int s = from; s <= to; ++s) p = p * st.edge_weights[s - 1];
            return p;
        };

        // split off the arc columns and rows
        for (int j = small_n + 1; j <= big_n; ++j) {
            const LaurentPoly cw1 = weight_range(j, big_n) * x.pow(big_n + 1 - j);
            const LaurentPoly cn = weight_range(small_n, j - 1) * x.pow(j - small_n);
            session.col_add(j, 1, -cw1.inverse_of_unit());
            session.col_add(j, small_n, -cn);
        }
        for (int j = small_n + 1; j <= big_n; ++j) {
            const LaurentPoly cw1 = weight_range(j, big_n) * x.pow(big_n + 1 - j);
            const LaurentPoly cn = weight_range(small_n, j - 1) * x.pow(j - small_n);
            session.row_add(j, 1, -cw1);
            session.row_add(j, small_n, -cn.inverse_of_unit());
        }

        // reduce the corner block
        const int s = d - 2;
        std::vector<LaurentPoly> units;
        for (int i = 1; i <= s - 1; ++i) units.push_back(st.edge_weights[small_n + i - 1] * x);
        detail::unit_block_ops(session, small_n, s, units);

        // normalize the block diagonal to (1, ..., 1, geometric sum)
        for (int i = 1; i <= s - 1; ++i)
            session.col_scale(small_n + i, session.entry(small_n + i, small_n + i).inverse_of_unit());
        const int pos = big_n;
        const LaurentPoly expected = geometric_sum(eps_c * x * x, d - 2);
        const LaurentPoly u0 = detail::unit_quotient(session.entry(pos, pos), expected, "diagonalize");
        session.col_scale(pos, u0.inverse_of_unit());
        nontrivial.emplace_back(pos, st.orig_id[idx]);

        // peel the piece off the bookkeeping state
        const LaurentPoly merged = weight_range(small_n, big_n) * x.pow(d - 2);
        st.pieces.erase(st.pieces.begin() + idx);
        st.orig_id.erase(st.orig_id.begin() + idx);
        std::erase(st.diagonals, std::make_pair(1, small_n));
        st.edge_weights.resize(small_n);
        st.edge_weights[small_n - 1] = merged;
        st.n = small_n;
    }

    // base case: trivial polygon
    {
        const int d = st.n;
        const LaurentPoly x = piece_x(st.orig_id.front());
        detail::trivial_block_ops(session, d, st.edge_weights, x);
        for (int i = 1; i <= d - 1; ++i) session.col_scale(i, session.entry(i, i).inverse_of_unit());
        const LaurentPoly expected = geometric_sum(eps_c * x * x, d - 2);
        const LaurentPoly u0 = detail::unit_quotient(session.entry(d, d), expected, "diagonalize");
        session.col_scale(d, u0.inverse_of_unit());
        nontrivial.emplace_back(d, st.orig_id.front());
    }

    // sort the nontrivial entries into piece-id order, ones behind them
    std::sort(nontrivial.begin(), nontrivial.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<int> perm;
    std::vector<char> taken(session.size() + 1, 0);
    for (const auto& [pos, piece] : nontrivial) {
        perm.push_back(pos);
        taken[pos] = 1;
    }
    for (int i = 1; i <= session.size(); ++i)
        if (!taken[i]) perm.push_back(i);
    session.permute_rows(perm);
    session.permute_cols(perm);

    // the diagonal must be exactly the declared one
    std::vector<LaurentPoly> diag;
    for (int l = 1; l <= dis.piece_count(); ++l) {
        const LaurentPoly xl = piece_x(l);
        diag.push_back(geometric_sum(eps_c * xl * xl, dis.walk_cap(l)));
    }
    for (int i = dis.piece_count(); i < dis.n; ++i) diag.push_back(LaurentPoly::one(vs));
    if (!(session.a() == PolyMatrix::diagonal_matrix(vs, diag)))
        throw Error("diagonalize: unexpected diagonal");

    return session.finalize(w);
}

} // namespace frieze
