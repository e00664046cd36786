#pragma once

// Dense square matrices over the Laurent ring, plus a division-free
// determinant. Everything is exact; no pivoting heuristics, no fractions.

#include <string>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"

namespace frieze {

class PolyMatrix {
  public:
    PolyMatrix() = default;

    PolyMatrix(VarSet vs, int n) : vs_(vs), n_(n), e_(static_cast<std::size_t>(n) * n, LaurentPoly::zero(vs)) {
        if (n < 1) throw DomainError("PolyMatrix: size must be positive");
    }

    static PolyMatrix identity(VarSet vs, int n) {
        PolyMatrix m(vs, n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = LaurentPoly::one(vs);
        return m;
    }

    int size() const { return n_; }
    const VarSet& var_set() const { return vs_; }

    LaurentPoly& at(int i, int j) { return e_[index(i, j)]; }
    const LaurentPoly& at(int i, int j) const { return e_[index(i, j)]; }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.n_ == b.n_ && a.vs_ == b.vs_ && a.e_ == b.e_;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        require_same(a.vs_, b.vs_, "matrix multiply");
        if (a.n_ != b.n_) throw DomainError("matrix multiply: size mismatch");
        PolyMatrix r(a.vs_, a.n_);
        for (int i = 1; i <= a.n_; ++i)
            for (int k = 1; k <= a.n_; ++k) {
                const LaurentPoly& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 1; j <= a.n_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j).add_product(aik, b.at(k, j));
                }
            }
        return r;
    }

    bool is_diagonal() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }

    std::vector<LaurentPoly> diagonal() const {
        std::vector<LaurentPoly> d;
        d.reserve(n_);
        for (int i = 1; i <= n_; ++i) d.push_back(at(i, i));
        return d;
    }

    static PolyMatrix diagonal_matrix(VarSet vs, const std::vector<LaurentPoly>& entries) {
        PolyMatrix m(vs, static_cast<int>(entries.size()));
        for (int i = 1; i <= m.size(); ++i) {
            require_same(vs, entries[i - 1].var_set(), "diagonal_matrix");
            m.at(i, i) = entries[i - 1];
        }
        return m;
    }

    // elementary operations (1-based rows/columns)

    /// row[t] += coeff * row[s]
    void row_add(int t, int s, const LaurentPoly& coeff) {
        check_index(t), check_index(s);
        if (t == s) throw DomainError("row_add: target equals source");
        for (int j = 1; j <= n_; ++j)
            if (!at(s, j).is_zero()) at(t, j) += coeff * at(s, j);
    }

    /// col[t] += coeff * col[s]
    void col_add(int t, int s, const LaurentPoly& coeff) {
        check_index(t), check_index(s);
        if (t == s) throw DomainError("col_add: target equals source");
        for (int i = 1; i <= n_; ++i)
            if (!at(i, s).is_zero()) at(i, t) += coeff * at(i, s);
    }

    void row_scale(int t, const LaurentPoly& unit) {
        check_index(t);
        for (int j = 1; j <= n_; ++j) at(t, j) = unit * at(t, j);
    }

    void col_scale(int t, const LaurentPoly& unit) {
        check_index(t);
        for (int i = 1; i <= n_; ++i) at(i, t) = unit * at(i, t);
    }

    /// new row i = old row perm[i-1] (perm is a 1-based permutation image list)
    void permute_rows(const std::vector<int>& perm) {
        check_perm(perm);
        std::vector<LaurentPoly> next(e_.size(), LaurentPoly::zero(vs_));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) next[index(i, j)] = at(perm[i - 1], j);
        e_ = std::move(next);
    }

    /// new col j = old col perm[j-1]
    void permute_cols(const std::vector<int>& perm) {
        check_perm(perm);
        std::vector<LaurentPoly> next(e_.size(), LaurentPoly::zero(vs_));
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) next[index(i, j)] = at(i, perm[j - 1]);
        e_ = std::move(next);
    }

  private:
    std::size_t index(int i, int j) const {
        check_index(i), check_index(j);
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    void check_index(int i) const {
        if (i < 1 || i > n_)
            throw DomainError("PolyMatrix: index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    }

    void check_perm(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_) throw DomainError("PolyMatrix: permutation size mismatch");
        std::vector<char> seen(n_, 0);
        for (int v : perm) {
            check_index(v);
            if (seen[v - 1]++) throw DomainError("PolyMatrix: not a permutation");
        }
    }

    VarSet vs_;
    int n_ = 0;
    std::vector<LaurentPoly> e_;
};

/// Sign of a permutation given as 1-based images.
inline int permutation_sign(std::vector<int> perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        while (perm[i] != static_cast<int>(i) + 1) {
            std::swap(perm[i], perm[perm[i] - 1]);
            sign = -sign;
        }
    return sign;
}

/// Determinant by Laplace expansion over column subsets: dp[S] is the
/// determinant of the submatrix on rows 1..|S| and columns S, built rank by
/// rank. Division-free, O(2^n * n) ring operations. Guarded at n <= 14.
inline LaurentPoly det_expand(const PolyMatrix& a, int guard = 14) {
    const int n = a.size();
    if (n > guard)
        throw GuardExceeded("det_expand: size " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
    std::vector<LaurentPoly> dp(std::size_t(1) << n, LaurentPoly::zero(a.var_set()));
    dp[0] = LaurentPoly::one(a.var_set());
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        const int k = __builtin_popcount(mask); // row k of the growing minor
        LaurentPoly& acc = dp[mask];
        int idx = 0;
        for (int c = 0; c < n; ++c) {
            if (!(mask & (std::uint32_t(1) << c))) continue;
            const LaurentPoly& entry = a.at(k, c + 1);
            if (!entry.is_zero() && !dp[mask ^ (std::uint32_t(1) << c)].is_zero())
                acc.add_product(entry, dp[mask ^ (std::uint32_t(1) << c)], ((k - 1) + idx) % 2 == 0 ? 1 : -1);
            ++idx;
        }
    }
    return dp.back();
}

} // namespace frieze
