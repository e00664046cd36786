#pragma once

// Dissections of a convex polygon. Vertices of the n-gon are labeled 1..n
// counterclockwise; boundary edge e_i joins i and i+1 (indices mod n, so e_n
// joins n and 1). A dissection is a set of pairwise noncrossing diagonals; it
// cuts the polygon into pieces (cells). Pieces get canonical 1-based ids:
// each piece is stored as its counterclockwise vertex list rotated to start
// at its smallest vertex, and pieces are sorted lexicographically by that
// list. Piece id l is what the piece variable x_l binds to. A piece of
// degree d (a d-gon) contributes d-2 to the total: sum(d_k - 2) = n - 2.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frieze/errors.hpp"
#include "frieze/varset.hpp"

namespace frieze {

struct Dissection {
    int n = 0;
    std::vector<std::pair<int, int>> diagonals;  // normalized a < b, sorted
    std::vector<std::vector<int>> pieces;        // canonical ccw vertex lists
    std::vector<int> degrees;                    // degrees[l-1] = |pieces[l-1]|

    // derived incidence data, filled by build_dissection
    std::vector<std::vector<int>> at_vertex;      // fan-ordered piece ids per vertex (index v-1)
    std::vector<int> edge_piece;                  // piece id owning boundary edge e_i (index i-1)
    std::vector<std::pair<int, int>> diag_pieces; // the two piece ids flanking diagonals[k]
    std::vector<std::vector<int>> piece_diags;    // indices into `diagonals` per piece (index l-1)

    int piece_count() const { return static_cast<int>(pieces.size()); }
    bool is_trivial() const { return diagonals.empty(); }
    VarSet var_set() const { return VarSet{piece_count(), n}; }

    int degree(int piece_id) const { return degrees[piece_id - 1]; }
    int walk_cap(int piece_id) const { return degrees[piece_id - 1] - 2; }

    /// Type of the dissection as a sorted multiset of piece degrees.
    std::vector<int> type_multiset() const {
        std::vector<int> t = degrees;
        std::sort(t.begin(), t.end());
        return t;
    }

    bool piece_has_vertex(int piece_id, int v) const {
        const auto& p = pieces[piece_id - 1];
        return std::find(p.begin(), p.end(), v) != p.end();
    }

    int next_vertex(int v) const { return v % n + 1; }
    int prev_vertex(int v) const { return (v + n - 2) % n + 1; }

    /// Number of boundary edges of the piece (degree minus diagonal count).
    int boundary_edge_count(int piece_id) const {
        return degree(piece_id) - static_cast<int>(piece_diags[piece_id - 1].size());
    }
};

namespace detail {

inline void check_vertex_range(int v, int n, const char* what) {
    if (v < 1 || v > n)
        throw DomainError(std::string(what) + ": vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
}

/// True iff w lies strictly inside the ccw arc from a to b.
inline bool in_open_arc(int w, int a, int b, int n) {
    const int off_w = (w - a + n) % n;
    const int off_b = (b - a + n) % n;
    return off_w > 0 && off_w < off_b;
}

/// Chords {a,b} and {c,d} cross in the open disk iff all four endpoints are
/// distinct and exactly one of c, d lies strictly inside the arc (a, b).
inline bool chords_cross(std::pair<int, int> x, std::pair<int, int> y, int n) {
    const auto [a, b] = x;
    const auto [c, d] = y;
    if (a == c || a == d || b == c || b == d) return false;
    return in_open_arc(c, a, b, n) != in_open_arc(d, a, b, n);
}

/// Splits `verts` (a ccw sub-polygon) along the noncrossing chords `diags`
/// into faces, appending each face's ccw vertex list to `out`.
inline void split_faces(const std::vector<int>& verts, const std::vector<std::pair<int, int>>& diags,
                        std::vector<std::vector<int>>& out) {
    if (diags.empty()) {
        out.push_back(verts);
        return;
    }
    auto pos_of = [&](int v) {
        auto it = std::find(verts.begin(), verts.end(), v);
        return static_cast<int>(it - verts.begin());
    };
    const auto [a, b] = diags.front();
    int ia = pos_of(a), ib = pos_of(b);
    if (ia > ib) std::swap(ia, ib);

    std::vector<int> inner(verts.begin() + ia, verts.begin() + ib + 1);
    std::vector<int> outer(verts.begin() + ib, verts.end());
    outer.insert(outer.end(), verts.begin(), verts.begin() + ia + 1);

    std::vector<std::pair<int, int>> inner_diags, outer_diags;
    for (std::size_t k = 1; k < diags.size(); ++k) {
        int pc = pos_of(diags[k].first), pd = pos_of(diags[k].second);
        if (pc > pd) std::swap(pc, pd);
        if (pc >= ia && pd <= ib)
            inner_diags.push_back(diags[k]);
        else
            outer_diags.push_back(diags[k]);
    }
    split_faces(inner, inner_diags, out);
    split_faces(outer, outer_diags, out);
}

inline int env_guard(const char* name, int fallback) {
    if (const char* s = std::getenv(name)) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v >= 3 && v <= 64) return static_cast<int>(v);
    }
    return fallback;
}

} // namespace detail

/// Validates the input and derives pieces plus all incidence data.
/// Diagonals may come in any order and orientation; duplicates, adjacent or
/// out-of-range endpoints, and crossings are rejected.
inline Dissection build_dissection(int n, std::vector<std::pair<int, int>> diagonals) {
    if (n < 3) throw InvalidDissection("build_dissection: polygon needs at least 3 vertices");
    for (auto& [a, b] : diagonals) {
        for (int v : {a, b})
            if (v < 1 || v > n)
                throw InvalidDissection("build_dissection: vertex " + std::to_string(v) + " outside 1.." +
                                        std::to_string(n));
        if (a > b) std::swap(a, b);
        if (a == b) throw InvalidDissection("build_dissection: degenerate chord at vertex " + std::to_string(a));
        if (b - a == 1 || (a == 1 && b == n))
            throw InvalidDissection("build_dissection: chord (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") is a boundary edge, not a diagonal");
    }
    std::sort(diagonals.begin(), diagonals.end());
    for (std::size_t i = 0; i + 1 < diagonals.size(); ++i)
        if (diagonals[i] == diagonals[i + 1])
            throw InvalidDissection("build_dissection: duplicate diagonal (" + std::to_string(diagonals[i].first) +
                                    "," + std::to_string(diagonals[i].second) + ")");
    for (std::size_t i = 0; i < diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < diagonals.size(); ++j)
            if (detail::chords_cross(diagonals[i], diagonals[j], n))
                throw InvalidDissection("build_dissection: diagonals (" + std::to_string(diagonals[i].first) + "," +
                                        std::to_string(diagonals[i].second) + ") and (" +
                                        std::to_string(diagonals[j].first) + "," +
                                        std::to_string(diagonals[j].second) + ") cross");

    Dissection d;
    d.n = n;
    d.diagonals = diagonals;

    std::vector<int> all(n);
    for (int v = 1; v <= n; ++v) all[v - 1] = v;
    detail::split_faces(all, diagonals, d.pieces);

    for (auto& piece : d.pieces) {
        auto it = std::min_element(piece.begin(), piece.end());
        std::rotate(piece.begin(), it, piece.end());
    }
    std::sort(d.pieces.begin(), d.pieces.end());

    d.degrees.reserve(d.pieces.size());
    for (const auto& piece : d.pieces) d.degrees.push_back(static_cast<int>(piece.size()));

    // fan order at v: pieces sweep from the side of edge (v-1, v) around to
    // the side of edge (v, v+1); sorting by decreasing ccw offset of the
    // farthest neighbor of v inside each piece realizes exactly that sweep.
    d.at_vertex.assign(n, {});
    for (int v = 1; v <= n; ++v) {
        std::vector<std::pair<int, int>> keyed; // (offset key, piece id)
        for (int l = 1; l <= d.piece_count(); ++l) {
            const auto& piece = d.pieces[l - 1];
            auto it = std::find(piece.begin(), piece.end(), v);
            if (it == piece.end()) continue;
            const int k = static_cast<int>(piece.size());
            const int idx = static_cast<int>(it - piece.begin());
            const int before = piece[(idx + k - 1) % k];
            const int after = piece[(idx + 1) % k];
            const int key = std::max((before - v + n) % n, (after - v + n) % n);
            keyed.emplace_back(key, l);
        }
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [key, l] : keyed) d.at_vertex[v - 1].push_back(l);
    }

    d.edge_piece.assign(n, 0);
    d.piece_diags.assign(d.pieces.size(), {});
    for (int l = 1; l <= d.piece_count(); ++l) {
        const auto& piece = d.pieces[l - 1];
        const int k = static_cast<int>(piece.size());
        for (int idx = 0; idx < k; ++idx) {
            int u = piece[idx], w = piece[(idx + 1) % k];
            if (w == d.next_vertex(u)) {
                d.edge_piece[u - 1] = l; // boundary edge e_u
            } else {
                auto key = std::minmax(u, w);
                auto it = std::lower_bound(d.diagonals.begin(), d.diagonals.end(),
                                           std::make_pair(key.first, key.second));
                d.piece_diags[l - 1].push_back(static_cast<int>(it - d.diagonals.begin()));
            }
        }
        std::sort(d.piece_diags[l - 1].begin(), d.piece_diags[l - 1].end());
    }

    d.diag_pieces.assign(d.diagonals.size(), {0, 0});
    for (int l = 1; l <= d.piece_count(); ++l)
        for (int di : d.piece_diags[l - 1]) {
            auto& pr = d.diag_pieces[di];
            (pr.first == 0 ? pr.first : pr.second) = l;
        }

    return d;
}

/// Pieces incident to vertex v, ordered as the fan around v sweeps ccw from
/// the side of boundary edge (v-1, v) to the side of (v, v+1).
inline std::vector<int> pieces_at_vertex(const Dissection& d, int v) {
    detail::check_vertex_range(v, d.n, "pieces_at_vertex");
    return d.at_vertex[v - 1];
}

/// Piece ids with exactly one diagonal edge. Errors on the trivial
/// dissection, whose single piece has no diagonal at all.
inline std::vector<int> boundary_pieces(const Dissection& d) {
    if (d.is_trivial()) throw DomainError("boundary_pieces: trivial dissection has no boundary piece");
    std::vector<int> out;
    for (int l = 1; l <= d.piece_count(); ++l)
        if (d.piece_diags[l - 1].size() == 1) out.push_back(l);
    return out;
}

inline int dissection_guard_n() { return detail::env_guard("FRIEZE_GUARD_N", 12); }

/// Calls fn for every dissection of the n-gon (including the trivial one),
/// in a fixed deterministic order. Guarded: n <= 12 unless FRIEZE_GUARD_N
/// raises the limit.
inline void enumerate_dissections(int n, const std::function<void(const Dissection&)>& fn) {
    if (n < 3) throw InvalidDissection("enumerate_dissections: polygon needs at least 3 vertices");
    const int guard = dissection_guard_n();
    if (n > guard)
        throw GuardExceeded("enumerate_dissections: n = " + std::to_string(n) + " exceeds guard " +
                            std::to_string(guard) + " (override with FRIEZE_GUARD_N)");

    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) all.emplace_back(a, b);

    std::vector<std::pair<int, int>> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        fn(build_dissection(n, chosen));
        for (std::size_t i = from; i < all.size(); ++i) {
            bool ok = true;
            for (const auto& c : chosen)
                if (detail::chords_cross(c, all[i], n)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(all[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

inline std::vector<Dissection> all_dissections(int n) {
    std::vector<Dissection> out;
    enumerate_dissections(n, [&](const Dissection& d) { out.push_back(d); });
    return out;
}

/// Deterministic pseudo-random dissection: recursively either stops or cuts
/// the current cell along a random admissible chord. Every dissection has
/// positive probability but the distribution is not uniform.
inline Dissection random_dissection(int n, std::uint64_t seed) {
    if (n < 3) throw InvalidDissection("random_dissection: polygon needs at least 3 vertices");
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
    std::vector<std::pair<int, int>> diags;

    std::function<void(const std::vector<int>&)> cut = [&](const std::vector<int>& verts) {
        const int k = static_cast<int>(verts.size());
        if (k < 4) return;
        if (rng() % 4 == 0) return; // stop this cell

        // admissible chords of the cell: index pairs (i, j), j - i >= 2,
        // excluding the closing side (0, k-1)
        std::vector<std::pair<int, int>> chords;
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j)
                if (!(i == 0 && j == k - 1)) chords.emplace_back(i, j);
        const auto [i, j] = chords[rng() % chords.size()];
        diags.emplace_back(verts[i], verts[j]);

        std::vector<int> inner(verts.begin() + i, verts.begin() + j + 1);
        std::vector<int> outer(verts.begin() + j, verts.end());
        outer.insert(outer.end(), verts.begin(), verts.begin() + i + 1);
        cut(inner);
        cut(outer);
    };

    std::vector<int> all(n);
    for (int v = 1; v <= n; ++v) all[v - 1] = v;
    cut(all);
    return build_dissection(n, diags);
}

} // namespace frieze
