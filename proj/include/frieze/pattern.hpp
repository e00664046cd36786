#pragma once

// Generalized frieze patterns and their adjacent 2x2 minors.
//
// Arranging the walk matrix entries v_{i, i+r} by diagonal r gives a
// periodic array in the style of a frieze: row 0 is zero, row 1 holds the
// boundary edge weights, and row n-1 returns to (a complement of) row 1.
// For a triangulated polygon with all weights set to 1 this is a classical
// pattern of positive integers with the unimodular rule
// v_{i,j} v_{i+1,j+1} - v_{i,j+1} v_{i+1,j} = 1 for the inner entries;
// general dissections and symbolic weights deform the rule: the adjacent
// minor attached to boundary edges e and f is zero unless the dual path of
// pieces from e to f threads through diagonals that consecutively share a
// vertex (a zig-zag), in which case it is an explicit unit monomial
// (minor_formula). On the main diagonal the minor degenerates to -eps*c,
// the negated product of all edge and piece variables to their caps.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "frieze/complement.hpp"
#include "frieze/dissection.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"
#include "frieze/walks.hpp"

namespace frieze {

/// Walk matrix entries rearranged by diagonals: entry(r, i) = v_{i, i+r}.
/// Rows run 0..n-1; the column index is periodic with period n.
class FriezePattern {
  public:
    explicit FriezePattern(WeightMatrix w) : w_(std::move(w)) {}

    int size() const { return w_.size(); }
    Flavor flavor() const { return w_.flavor(); }
    const WeightMatrix& weights() const { return w_; }
    const Dissection& dissection() const { return w_.dissection(); }

    const LaurentPoly& entry(int r, int i) const {
        const int n = w_.size();
        if (r < 0 || r > n - 1) throw DomainError("FriezePattern::entry: row out of range");
        const int ii = ((i - 1) % n + n) % n + 1;
        return w_.at(ii, (ii - 1 + r) % n + 1);
    }

  private:
    WeightMatrix w_;
};

inline FriezePattern build_frieze(const Dissection& d, Flavor flavor) {
    return FriezePattern(weight_matrix(d, flavor));
}

struct FriezeRenderOptions {
    int periods = 2;
    bool show_zero_row = false;
    bool latex = false;
    int max_entry_width = 24; // longer entries become [k] references; 0 disables
};

namespace detail {

/// "q1^-1*x2^3" -> "q_{1}^{-1} x_{2}^{3}" for math-mode output.
inline std::string latex_poly(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == '*') {
            out += ' ';
        } else if (ch == '^') {
            out += "^{";
            size_t j = i + 1;
            if (j < s.size() && s[j] == '-') out += s[j++];
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) out += s[j++];
            out += '}';
            i = j - 1;
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            out += ch;
            size_t j = i + 1;
            std::string digits;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) digits += s[j++];
            if (!digits.empty()) out += "_{" + digits + "}";
            i = j - 1;
        } else {
            out += ch;
        }
    }
    return out;
}

} // namespace detail

/// Plain-text diamond (or LaTeX array) of the pattern rows over the given
/// number of periods. Oversized entries are elided to bracketed references
/// with a legend below the figure.
inline std::string render_frieze(const FriezePattern& p, const VarNames& names, FriezeRenderOptions opt = {}) {
    if (opt.periods < 1) throw DomainError("render_frieze: need at least one period");
    if (opt.max_entry_width < 0) throw DomainError("render_frieze: negative entry width");
    const int n = p.size();
    const int r_lo = opt.show_zero_row ? 0 : 1;
    const int r_hi = n - 1;
    const int cols = opt.periods * n;

    std::vector<std::string> legend;
    std::map<std::string, int> seen;
    std::vector<std::vector<std::string>> grid(r_hi - r_lo + 1, std::vector<std::string>(cols));
    size_t width = 1;
    for (int r = r_lo; r <= r_hi; ++r)
        for (int c = 0; c < cols; ++c) {
            std::string s = p.entry(r, c + 1).str(names);
            if (opt.max_entry_width > 0 && s.size() > static_cast<size_t>(opt.max_entry_width)) {
                auto [it, fresh] = seen.try_emplace(s, static_cast<int>(legend.size()) + 1);
                if (fresh) legend.push_back(s);
                s = "[" + std::to_string(it->second) + "]";
            }
            width = std::max(width, s.size());
            grid[r - r_lo][c] = std::move(s);
        }

    std::string out;
    if (opt.latex) {
        const int ncols = 2 * (cols - 1) + (r_hi - r_lo) + 1;
        out += "\\begin{array}{*{" + std::to_string(ncols) + "}{c}}\n";
        for (int r = r_lo; r <= r_hi; ++r) {
            std::vector<std::string> cells(ncols);
            for (int c = 0; c < cols; ++c) cells[2 * c + (r - r_lo)] = detail::latex_poly(grid[r - r_lo][c]);
            for (int k = 0; k < ncols; ++k) {
                out += cells[k];
                out += k + 1 < ncols ? " & " : " \\\\";
            }
            out += '\n';
        }
        out += "\\end{array}\n";
        for (size_t k = 0; k < legend.size(); ++k)
            out += "% [" + std::to_string(k + 1) + "] = " + legend[k] + "\n";
        return out;
    }

    out += "rows " + std::to_string(r_lo) + ".." + std::to_string(r_hi) + ", period " + std::to_string(n) + ", " +
           std::to_string(opt.periods) + (opt.periods == 1 ? " period\n" : " periods\n");
    const size_t half = (width + 3) / 2;
    for (int r = r_lo; r <= r_hi; ++r) {
        std::string line;
        for (int c = 0; c < cols; ++c) {
            const std::string& s = grid[r - r_lo][c];
            const size_t pos = (2 * c + (r - r_lo)) * half + (width - s.size()) / 2;
            if (line.size() < pos + s.size()) line.resize(pos + s.size(), ' ');
            line.replace(pos, s.size(), s);
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    for (size_t k = 0; k < legend.size(); ++k) out += "[" + std::to_string(k + 1) + "] = " + legend[k] + "\n";
    return out;
}

/// 2x2 minor on rows i, i+1 and columns j, j+1 (cyclically), the deformed
/// unimodular rule attached to boundary edges e_i and e_j.
inline LaurentPoly frieze_minor(const WeightMatrix& w, int i, int j) {
    const int n = w.size();
    detail::check_vertex_range(i, n, "frieze_minor");
    detail::check_vertex_range(j, n, "frieze_minor");
    const int i1 = i % n + 1, j1 = j % n + 1;
    return w.at(i, j) * w.at(i1, j1) - w.at(i, j1) * w.at(i1, j);
}

/// Zig-zag between boundary edges: the dual path of pieces from piece(e) to
/// piece(f) whose crossed diagonals, together with e and f, consecutively
/// share a vertex.
struct ZigZag {
    int e = 0, f = 0;
    std::vector<std::pair<int, int>> sequence; // e, crossed diagonals, f (as vertex pairs)
    std::vector<int> pieces;                   // dual path piece ids
};

inline std::optional<ZigZag> find_zigzag(const Dissection& d, int e, int f) {
    detail::check_vertex_range(e, d.n, "find_zigzag");
    detail::check_vertex_range(f, d.n, "find_zigzag");
    if (e == f) throw DomainError("find_zigzag: edges must differ");
    const int pe = d.edge_piece[e - 1], pf = d.edge_piece[f - 1];

    // unique dual path: breadth-first search in the dual tree
    std::vector<int> parent_piece(d.piece_count() + 1, 0), parent_diag(d.piece_count() + 1, -1);
    std::queue<int> bfs;
    bfs.push(pe);
    parent_piece[pe] = pe;
    while (!bfs.empty()) {
        const int l = bfs.front();
        bfs.pop();
        if (l == pf) break;
        for (int di : d.piece_diags[l - 1]) {
            const auto& [a, b] = d.diag_pieces[di];
            const int other = a == l ? b : a;
            if (parent_piece[other] == 0) {
                parent_piece[other] = l;
                parent_diag[other] = di;
                bfs.push(other);
            }
        }
    }
    ZigZag z;
    z.e = e, z.f = f;
    std::vector<int> rev_diags;
    for (int l = pf; l != pe; l = parent_piece[l]) {
        z.pieces.push_back(l);
        rev_diags.push_back(parent_diag[l]);
    }
    z.pieces.push_back(pe);
    std::reverse(z.pieces.begin(), z.pieces.end());

    z.sequence.push_back({e, d.next_vertex(e)});
    for (auto it = rev_diags.rbegin(); it != rev_diags.rend(); ++it) z.sequence.push_back(d.diagonals[*it]);
    z.sequence.push_back({f, d.next_vertex(f)});

    auto share_vertex = [](const std::pair<int, int>& a, const std::pair<int, int>& b) {
        return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
    };
    for (size_t k = 0; k + 1 < z.sequence.size(); ++k)
        if (!share_vertex(z.sequence[k], z.sequence[k + 1])) return std::nullopt;
    return z;
}

/// Pieces carrying at most one vertex of the closed walk j+1, j+2, ..., i:
/// these contribute their squared variables to the e_i, e_j minor.
inline std::vector<int> zigzag_pieces(const Dissection& d, int i, int j) {
    detail::check_vertex_range(i, d.n, "zigzag_pieces");
    detail::check_vertex_range(j, d.n, "zigzag_pieces");
    if (i == j) throw DomainError("zigzag_pieces: edges must differ");
    // v lies on the route iff its ccw offset from j falls in [1, offset of i]
    const int len = (i - j + d.n) % d.n;
    std::vector<int> out;
    for (int l = 1; l <= d.piece_count(); ++l) {
        int cnt = 0;
        for (int v : d.pieces[l - 1]) {
            const int off = (v - j + d.n) % d.n;
            if (off >= 1 && off <= len) ++cnt;
        }
        if (cnt <= 1) out.push_back(l);
    }
    return out;
}

/// Closed form of the adjacent minor for boundary edges e_i, e_j: zero
/// without a zig-zag, -eps*c on the diagonal, and otherwise the unit
/// monomial q_i q_j (prod of q_k^2 strictly between i and j)
/// (prod of x_b^{2(d_b-2)} over the zig-zag pieces).
inline LaurentPoly minor_formula(const Dissection& d, int i, int j, Flavor flavor = Flavor::xq) {
    detail::check_vertex_range(i, d.n, "minor_formula");
    detail::check_vertex_range(j, d.n, "minor_formula");
    const VarSet vs = d.var_set();
    if (i == j) {
        ComplementContext ctx(d);
        switch (flavor) {
            case Flavor::xq: return -(ctx.eps_monomial() * ctx.c_monomial());
            case Flavor::x: return -ctx.c_monomial();
            case Flavor::arithmetic: return LaurentPoly::constant(vs, -1);
        }
    }
    if (!find_zigzag(d, i, j)) return LaurentPoly::zero(vs);
    LaurentPoly out = LaurentPoly::one(vs);
    if (flavor == Flavor::xq) {
        out = out * LaurentPoly::variable(vs, edge_var(i)) * LaurentPoly::variable(vs, edge_var(j));
        for (int k = d.next_vertex(i); k != j; k = d.next_vertex(k))
            out = out * LaurentPoly::variable(vs, edge_var(k)).pow(2);
    }
    if (flavor != Flavor::arithmetic)
        for (int l : zigzag_pieces(d, i, j))
            out = out * LaurentPoly::variable(vs, piece_var(l)).pow(2 * d.walk_cap(l));
    return out;
}

} // namespace frieze
