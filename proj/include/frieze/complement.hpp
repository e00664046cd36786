#pragma once

// Complement maps on walk weights. For a dissection with piece degrees d_l,
// set cap_l = d_l - 2, c = prod x_l^{cap_l} (the weight of the unique walk
// from i to i-1) and eps = q_1 * ... * q_n. The piece complement phi sends a
// monomial with piece exponents e_l (0 <= e_l <= cap_l) to the one with
// exponents cap_l - e_l; the full complement psi additionally flips each
// edge exponent in {0,1}. Both fix coefficients termwise, both are
// involutions, and both swap the (i,j) and (j,i) entries of the matching
// weight matrix flavor: phi for the x flavor, psi for the xq flavor.

#include <string>
#include <utility>

#include "frieze/dissection.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"
#include "frieze/walks.hpp"

namespace frieze {

class ComplementContext {
  public:
    explicit ComplementContext(Dissection d) : d_(std::move(d)) {}

    const Dissection& dissection() const { return d_; }
    VarSet var_set() const { return d_.var_set(); }

    /// c = prod_l x_l^{d_l - 2}
    LaurentPoly c_monomial() const {
        Monomial m;
        for (int l = 1; l <= d_.piece_count(); ++l) m = m * Monomial::var(piece_var(l), d_.walk_cap(l));
        return LaurentPoly::monomial(var_set(), m);
    }

    /// eps = q_1 * ... * q_n
    LaurentPoly eps_monomial() const {
        Monomial m;
        for (int i = 1; i <= d_.n; ++i) m = m * Monomial::var(edge_var(i));
        return LaurentPoly::monomial(var_set(), m);
    }

    int piece_cap(int l) const { return d_.walk_cap(l); }

  private:
    Dissection d_;
};

namespace detail {

inline LaurentPoly complement(const ComplementContext& ctx, const LaurentPoly& f, bool with_edges,
                              const char* what) {
    require_same(ctx.var_set(), f.var_set(), what);
    const Dissection& d = ctx.dissection();
    LaurentPoly out = LaurentPoly::zero(ctx.var_set());
    for (const auto& [mono, coeff] : f.terms()) {
        Monomial image;
        for (const auto& [v, e] : mono.exponents()) {
            if (v.kind == VarKind::piece) continue;
            if (!with_edges)
                throw DomainError(std::string(what) + ": edge variable present in a piece-only complement");
            if (e < 0 || e > 1)
                throw DomainError(std::string(what) + ": edge exponent " + std::to_string(e) + " outside {0,1}");
        }
        for (int l = 1; l <= d.piece_count(); ++l) {
            const int e = mono.exponent(piece_var(l));
            if (e < 0 || e > ctx.piece_cap(l))
                throw DomainError(std::string(what) + ": exponent " + std::to_string(e) + " of piece " +
                                  std::to_string(l) + " outside 0.." + std::to_string(ctx.piece_cap(l)));
            image = image * Monomial::var(piece_var(l), ctx.piece_cap(l) - e);
        }
        if (with_edges)
            for (int i = 1; i <= d.n; ++i) image = image * Monomial::var(edge_var(i), 1 - mono.exponent(edge_var(i)));
        out += LaurentPoly::monomial(ctx.var_set(), image, coeff);
    }
    return out;
}

} // namespace detail

/// Piece complement: termwise e_l -> cap_l - e_l. Input must mention only
/// piece variables, each within its cap.
inline LaurentPoly complement_phi(const ComplementContext& ctx, const LaurentPoly& f) {
    return detail::complement(ctx, f, false, "complement_phi");
}

/// Full complement: piece exponents e_l -> cap_l - e_l and edge exponents
/// e_i -> 1 - e_i (each edge exponent must be 0 or 1).
inline LaurentPoly complement_psi(const ComplementContext& ctx, const LaurentPoly& f) {
    return detail::complement(ctx, f, true, "complement_psi");
}

struct SymmetryReport {
    bool ok = true;
    int i = 0, j = 0; // first failing entry pair when !ok

    explicit operator bool() const { return ok; }
};

/// Verifies the complement symmetry of a weight matrix: zero diagonal and
/// complement(entry(i,j)) == entry(j,i) for all i != j, using phi for the x
/// flavor and psi for the xq flavor. The arithmetic flavor has no complement
/// symmetry (use check_plain_symmetry).
inline SymmetryReport check_complementary_symmetry(const WeightMatrix& w) {
    if (w.flavor() == Flavor::arithmetic)
        throw DomainError("check_complementary_symmetry: defined for the x and xq flavors only");
    ComplementContext ctx(w.dissection());
    const bool full = w.flavor() == Flavor::xq;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j <= w.size(); ++j) {
            if (i == j) {
                if (!w.at(i, i).is_zero()) return {false, i, i};
                continue;
            }
            const LaurentPoly image =
                full ? complement_psi(ctx, w.at(i, j)) : complement_phi(ctx, w.at(i, j));
            if (!(image == w.at(j, i))) return {false, i, j};
        }
    return {};
}

/// Plain transpose symmetry with zero diagonal (the arithmetic walk-count
/// matrix satisfies it).
inline SymmetryReport check_plain_symmetry(const WeightMatrix& w) {
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i; j <= w.size(); ++j) {
            if (i == j) {
                if (!w.at(i, i).is_zero()) return {false, i, i};
            } else if (!(w.at(i, j) == w.at(j, i))) {
                return {false, i, j};
            }
        }
    return {};
}

} // namespace frieze
