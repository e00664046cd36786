#pragma once

// Smith normal form over the integers, with unimodular transforms.
//
// smith_normal_form computes the canonical form: nonnegative diagonal
// entries, each dividing the next. The walk-count matrix of a dissection
// also admits a second, structurally meaningful diagonal form
// diag(d_1 - 1, ..., d_m - 1, 1, ..., 1) listing the piece degrees; it is
// equivalent to the canonical form over Z but not equal to it (the
// divisibility chain usually fails). theorem_diagonal_form produces that
// form by specializing the Laurent-ring diagonalization, whose operation
// coefficients all collapse to integers in the arithmetic flavor.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "frieze/diagonal_form.hpp"
#include "frieze/dissection.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"
#include "frieze/walks.hpp"

namespace frieze {

class IntMatrix {
  public:
    IntMatrix(int n, Int fill = 0) : n_(n), e_(static_cast<size_t>(n) * n, std::move(fill)) {
        if (n < 1) throw DomainError("IntMatrix: size must be positive");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }

    Int& at(int i, int j) {
        check(i), check(j);
        return e_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
    }
    const Int& at(int i, int j) const {
        check(i), check(j);
        return e_[static_cast<size_t>(i - 1) * n_ + (j - 1)];
    }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    IntMatrix operator*(const IntMatrix& o) const {
        if (n_ != o.n_) throw DomainError("IntMatrix: size mismatch in product");
        IntMatrix r(n_);
        for (int i = 1; i <= n_; ++i)
            for (int k = 1; k <= n_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 1; j <= n_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    bool is_diagonal() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && at(i, j) != 0) return false;
        return true;
    }

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        d.reserve(n_);
        for (int i = 1; i <= n_; ++i) d.push_back(at(i, i));
        return d;
    }

  private:
    void check(int i) const {
        if (i < 1 || i > n_) throw DomainError("IntMatrix: index out of range");
    }

    int n_;
    std::vector<Int> e_;
};

/// Division-free determinant by dynamic programming over column subsets.
inline Int det_expand(const IntMatrix& a, int guard = 20) {
    const int n = a.size();
    if (n > guard) throw GuardExceeded("det_expand: matrix size " + std::to_string(n) + " exceeds guard");
    std::vector<Int> dp(size_t{1} << n, 0);
    dp[0] = 1;
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        const int k = __builtin_popcountll(mask); // row k of the growing minor
        int idx = 0;
        for (int c = 0; c < n; ++c) {
            const size_t bit = size_t{1} << c;
            if (!(mask & bit)) continue;
            if ((k - 1 + idx) % 2 == 0)
                dp[mask] += a.at(k, c + 1) * dp[mask ^ bit];
            else
                dp[mask] -= a.at(k, c + 1) * dp[mask ^ bit];
            ++idx;
        }
    }
    return dp.back();
}

/// u * (input) * v == s with s in Smith normal form and det u, det v = +-1.
struct SmithForm {
    IntMatrix u, s, v;
    Int det_u, det_v;
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
    const int n = m.size();
    IntMatrix a = m, u = IntMatrix::identity(n), v = IntMatrix::identity(n);
    Int det_u = 1, det_v = 1;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 1; c <= n; ++c) {
            std::swap(a.at(i, c), a.at(j, c));
            std::swap(u.at(i, c), u.at(j, c));
        }
        det_u = -det_u;
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 1; r <= n; ++r) {
            std::swap(a.at(r, i), a.at(r, j));
            std::swap(v.at(r, i), v.at(r, j));
        }
        det_v = -det_v;
    };
    auto row_add = [&](int t, int s_, const Int& c) { // row t += c * row s_
        for (int j = 1; j <= n; ++j) {
            a.at(t, j) += c * a.at(s_, j);
            u.at(t, j) += c * u.at(s_, j);
        }
    };
    auto col_add = [&](int t, int s_, const Int& c) { // col t += c * col s_
        for (int i = 1; i <= n; ++i) {
            a.at(i, t) += c * a.at(i, s_);
            v.at(i, t) += c * v.at(i, s_);
        }
    };
    auto negate_row = [&](int i) {
        for (int j = 1; j <= n; ++j) {
            a.at(i, j) = -a.at(i, j);
            u.at(i, j) = -u.at(i, j);
        }
        det_u = -det_u;
    };

    for (int k = 1; k <= n; ++k) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            int pi = 0, pj = 0;
            for (int i = k; i <= n; ++i)
                for (int j = k; j <= n; ++j) {
                    const Int& x = a.at(i, j);
                    if (x == 0) continue;
                    if (pi == 0 || cmp(abs(x), abs(a.at(pi, pj))) < 0) pi = i, pj = j;
                }
            if (pi == 0) break; // trailing block is zero
            swap_rows(k, pi), swap_cols(k, pj);

            bool reduced = false;
            for (int i = k + 1; i <= n; ++i)
                if (a.at(i, k) != 0) {
                    row_add(i, k, -(a.at(i, k) / a.at(k, k)));
                    reduced = true;
                }
            for (int j = k + 1; j <= n; ++j)
                if (a.at(k, j) != 0) {
                    col_add(j, k, -(a.at(k, j) / a.at(k, k)));
                    reduced = true;
                }
            // remainders may survive truncated division; repeat until clean
            bool clean = true;
            for (int i = k + 1; i <= n && clean; ++i) clean = a.at(i, k) == 0;
            for (int j = k + 1; j <= n && clean; ++j) clean = a.at(k, j) == 0;
            if (!clean) continue;
            (void)reduced;

            // pivot must divide the rest of the block
            int bi = 0, bj = 0;
            for (int i = k + 1; i <= n && bi == 0; ++i)
                for (int j = k + 1; j <= n; ++j)
                    if (a.at(i, j) % a.at(k, k) != 0) {
                        bi = i, bj = j;
                        break;
                    }
            if (bi == 0) break;
            (void)bj;
            row_add(k, bi, 1); // pulls the offending row in and restarts
        }
        if (a.at(k, k) < 0) negate_row(k);
    }

    if (!(u * m * v == a)) throw Error("smith_normal_form: transform verification failed");
    return SmithForm{std::move(u), std::move(a), std::move(v), std::move(det_u), std::move(det_v)};
}

/// Converts a matrix of constant polynomials to an integer matrix.
inline IntMatrix to_int_matrix(const PolyMatrix& m) {
    IntMatrix r(m.size());
    for (int i = 1; i <= m.size(); ++i)
        for (int j = 1; j <= m.size(); ++j) r.at(i, j) = m.at(i, j).constant_value();
    return r;
}

/// Integer diagonal form diag(d_1 - 1, ..., d_m - 1, 1, ..., 1) of the
/// walk-count matrix, with unimodular u, v: the arithmetic-flavor
/// diagonalization has integer transforms of determinant +-1.
struct TheoremForm {
    IntMatrix u, s, v;
    Int det_u, det_v;
};

inline TheoremForm theorem_diagonal_form(const Dissection& d) {
    DiagonalForm f = diagonalize(d, Flavor::arithmetic);
    TheoremForm t{to_int_matrix(f.p), to_int_matrix(f.d), to_int_matrix(f.q), f.det_p.constant_value(),
                  f.det_q.constant_value()};
    const IntMatrix m = to_int_matrix(weight_matrix(d, Flavor::arithmetic).matrix());
    if (!(t.u * m * t.v == t.s)) throw Error("theorem_diagonal_form: transform verification failed");
    if (abs(t.det_u) != 1 || abs(t.det_v) != 1) throw Error("theorem_diagonal_form: transforms are not unimodular");
    return t;
}

} // namespace frieze
