#pragma once

// Closed-form determinants of walk matrices and the banded Toeplitz variant.
//
// For a dissection with pieces of degrees d_1..d_m (c and eps as in
// complement.hpp) the determinant of the walk matrix is
//
//   arithmetic:  (-1)^{n-1} * prod_l (d_l - 1)
//   x flavor:    (-1)^{n-1} * prod_l (1 + (c x_l^2) + ... + (c x_l^2)^{d_l-2})
//   xq flavor:   (-1)^{n-1} * eps * prod_l (1 + (eps c x_l^2) + ... + (eps c x_l^2)^{d_l-2})
//
// so it only depends on the multiset of piece degrees once pieces of equal
// degree are matched up. det_formula evaluates these products; det_expand
// (matrix.hpp) is the independent expansion route. The two are never
// collapsed into one code path.

#include <string>
#include <vector>

#include "frieze/complement.hpp"
#include "frieze/dissection.hpp"
#include "frieze/laurent.hpp"
#include "frieze/matrix.hpp"
#include "frieze/walks.hpp"

namespace frieze {

/// Structured closed form: sign * prefactor * prod(piece_factors).
struct DetFactors {
    int sign = 1;              // (-1)^{n-1}
    LaurentPoly prefactor;     // eps for the xq flavor, 1 otherwise
    std::vector<LaurentPoly> piece_factors; // geometric sums, piece-id order

    LaurentPoly expanded() const {
        LaurentPoly r = prefactor * Int(sign);
        for (const auto& f : piece_factors) r = r * f;
        return r;
    }
};

inline DetFactors det_formula_factors(const Dissection& d, Flavor flavor) {
    const VarSet vs = d.var_set();
    ComplementContext ctx(d);
    DetFactors out;
    out.sign = (d.n - 1) % 2 == 0 ? 1 : -1;
    out.prefactor = flavor == Flavor::xq ? ctx.eps_monomial() : LaurentPoly::one(vs);

    const LaurentPoly base = flavor == Flavor::xq ? ctx.eps_monomial() * ctx.c_monomial()
                             : flavor == Flavor::x ? ctx.c_monomial()
                                                   : LaurentPoly::one(vs);
    for (int l = 1; l <= d.piece_count(); ++l) {
        const LaurentPoly xl2 = flavor == Flavor::arithmetic
                                    ? LaurentPoly::one(vs)
                                    : LaurentPoly::monomial(vs, Monomial::var(piece_var(l), 2));
        out.piece_factors.push_back(geometric_sum(base * xl2, d.walk_cap(l)));
    }
    return out;
}

/// The closed-form determinant of weight_matrix(d, flavor), expanded.
inline LaurentPoly det_formula(const Dissection& d, Flavor flavor) {
    return det_formula_factors(d, flavor).expanded();
}

/// Banded Toeplitz matrix of size d-m over VarSet{1 piece, d-m edges} with
/// x = x_1 and q = q_{d-m}: zero diagonal, x^{j-i-1} above it and
/// q * x^{d-1-(i-j)} below it. Coincides with the walk matrix of the
/// trivial (d-m)-gon with edge weights (1, ..., 1, q x^m).
inline PolyMatrix toeplitz_matrix(int d, int m) {
    if (d < 3) throw DomainError("toeplitz_matrix: degree must be at least 3");
    if (m < 0 || m > d - 2) throw DomainError("toeplitz_matrix: band offset must lie in 0..d-2");
    const int size = d - m;
    const VarSet vs{1, size};
    PolyMatrix t(vs, size);
    const Monomial x = Monomial::var(piece_var(1));
    const Monomial q = Monomial::var(edge_var(size));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) {
            if (i == j) continue;
            t.at(i, j) = i < j ? LaurentPoly::monomial(vs, x.pow(j - i - 1))
                               : LaurentPoly::monomial(vs, q * x.pow(d - 1 - (i - j)));
        }
    return t;
}

/// Closed form for det(toeplitz_matrix(d, m)):
/// (-1)^{d-m-1} * q * x^m * sum_{j=0}^{d-2-m} (q x^d)^j.
inline LaurentPoly toeplitz_det_formula(int d, int m) {
    if (d < 3) throw DomainError("toeplitz_det_formula: degree must be at least 3");
    if (m < 0 || m > d - 2) throw DomainError("toeplitz_det_formula: band offset must lie in 0..d-2");
    const int size = d - m;
    const VarSet vs{1, size};
    const LaurentPoly x = LaurentPoly::variable(vs, piece_var(1));
    const LaurentPoly q = LaurentPoly::variable(vs, edge_var(size));
    const int sign = (size - 1) % 2 == 0 ? 1 : -1;
    return Int(sign) * q * x.pow(m) * geometric_sum(q * x.pow(d), d - 2 - m);
}

} // namespace frieze
