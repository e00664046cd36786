#pragma once

// Counterclockwise walks around a dissected polygon and the matrices they
// fill. A walk from i to j visits the vertices strictly between i and j in
// ccw order and picks, at each visited vertex, one piece incident to it; a
// piece of degree d may be picked at most d-2 times along one walk (its
// cap). There is no walk from i to i; the walk from i to i+1 is empty.
//
// Weights: each pick of piece l contributes the piece variable x_l, and the
// traversed boundary edges i, i+1, ..., j-1 contribute their edge variables,
// so the full weight of a walk is (prod x_l over picks) * q_i * ... * q_{j-1}.
// Flavors drop parts of this: `x` keeps only piece variables, `arithmetic`
// counts walks.
//
// Matrix entries are computed by a prefix DP over the visited vertices whose
// state is the per-piece usage count, pruned to pieces that can still be
// picked later; walks are never materialized. enumerate_walks is the
// independent reference (and the thing the DP is cross-checked against).

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frieze/dissection.hpp"
#include "frieze/errors.hpp"
#include "frieze/laurent.hpp"
#include "frieze/matrix.hpp"

namespace frieze {

enum class Flavor { arithmetic, x, xq };

inline const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::arithmetic: return "arithmetic";
        case Flavor::x: return "x";
        case Flavor::xq: return "xq";
    }
    return "?";
}

struct Walk {
    int from = 0;
    int to = 0;
    std::vector<int> pieces; // piece picked at each visited vertex, in ccw order

    friend bool operator==(const Walk&, const Walk&) = default;
};

namespace detail {

/// Vertices strictly between i and j in ccw order (empty when j == i+1).
inline std::vector<int> walk_route(const Dissection& d, int i, int j) {
    check_vertex_range(i, d.n, "walk");
    check_vertex_range(j, d.n, "walk");
    if (i == j) throw DomainError("walk: endpoints coincide, no walks exist");
    std::vector<int> route;
    for (int v = d.next_vertex(i); v != j; v = d.next_vertex(v)) route.push_back(v);
    return route;
}

} // namespace detail

/// Product q_i * q_{i+1} * ... * q_{j-1} of the edge variables swept ccw
/// from i to j.
inline LaurentPoly edge_interval_product(const Dissection& d, int i, int j) {
    detail::check_vertex_range(i, d.n, "edge_interval_product");
    detail::check_vertex_range(j, d.n, "edge_interval_product");
    Monomial m;
    for (int s = i; s != j; s = d.next_vertex(s)) m = m * Monomial::var(edge_var(s));
    return LaurentPoly::monomial(d.var_set(), m);
}

/// All walks from i to j in lexicographic order of their piece-id sequences.
/// Intended as a reference implementation; exponentially many in the worst
/// case, so use the matrix DP for anything but small polygons.
inline std::vector<Walk> enumerate_walks(const Dissection& d, int i, int j) {
    if (i == j) return {};
    const std::vector<int> route = detail::walk_route(d, i, j);
    std::vector<Walk> out;
    std::vector<int> used(d.piece_count() + 1, 0);
    std::vector<int> picks;
    picks.reserve(route.size());

    std::vector<std::vector<int>> options; // piece ids at each route vertex, ascending
    for (int v : route) {
        auto opts = d.at_vertex[v - 1];
        std::sort(opts.begin(), opts.end());
        options.push_back(std::move(opts));
    }

    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t == route.size()) {
            out.push_back(Walk{i, j, picks});
            return;
        }
        for (int l : options[t]) {
            if (used[l] >= d.walk_cap(l)) continue;
            ++used[l];
            picks.push_back(l);
            rec(t + 1);
            picks.pop_back();
            --used[l];
        }
    };
    rec(0);
    return out;
}

/// Weight of one walk under the given flavor. Validates the walk: one pick
/// per visited vertex, each pick incident to its vertex, caps respected.
inline LaurentPoly walk_weight(const Dissection& d, const Walk& w, Flavor flavor) {
    const std::vector<int> route = detail::walk_route(d, w.from, w.to);
    if (w.pieces.size() != route.size())
        throw DomainError("walk_weight: walk from " + std::to_string(w.from) + " to " + std::to_string(w.to) +
                          " must pick " + std::to_string(route.size()) + " pieces, got " +
                          std::to_string(w.pieces.size()));
    std::vector<int> used(d.piece_count() + 1, 0);
    Monomial m;
    for (std::size_t t = 0; t < route.size(); ++t) {
        const int l = w.pieces[t];
        if (l < 1 || l > d.piece_count()) throw DomainError("walk_weight: piece id out of range");
        if (!d.piece_has_vertex(l, route[t]))
            throw DomainError("walk_weight: piece " + std::to_string(l) + " is not incident to vertex " +
                              std::to_string(route[t]));
        if (++used[l] > d.walk_cap(l))
            throw DomainError("walk_weight: piece " + std::to_string(l) + " picked more than " +
                              std::to_string(d.walk_cap(l)) + " times");
        if (flavor != Flavor::arithmetic) m = m * Monomial::var(piece_var(l));
    }
    LaurentPoly weight = LaurentPoly::monomial(d.var_set(), m);
    if (flavor == Flavor::xq) weight = weight * edge_interval_product(d, w.from, w.to);
    return weight;
}

namespace detail {

/// Sum over admissible pick sequences along route(i -> j) of the product of
/// piece variables (or of 1s when counting). DP over route positions; the
/// state is the vector of per-piece usage counts with irrelevant pieces
/// (those incident to no later route vertex) zeroed out, which caps the
/// state space independently of walk length.
inline LaurentPoly pick_sum(const Dissection& d, int i, int j, bool symbolic) {
    const VarSet vs = d.var_set();
    const std::vector<int> route = walk_route(d, i, j);
    const int m = d.piece_count();

    // pieces incident to route[t..] for pruning
    std::vector<std::vector<char>> relevant(route.size() + 1, std::vector<char>(m + 1, 0));
    for (int t = static_cast<int>(route.size()) - 1; t >= 0; --t) {
        relevant[t] = relevant[t + 1];
        for (int l : d.at_vertex[route[t] - 1]) relevant[t][l] = 1;
    }

    using State = std::vector<std::uint8_t>;
    std::map<State, LaurentPoly> cur;
    cur.emplace(State(m, 0), LaurentPoly::one(vs));

    for (std::size_t t = 0; t < route.size(); ++t) {
        std::map<State, LaurentPoly> next;
        auto opts = d.at_vertex[route[t] - 1];
        std::sort(opts.begin(), opts.end());
        for (const auto& [state, acc] : cur) {
            for (int l : opts) {
                if (state[l - 1] >= d.walk_cap(l)) continue;
                State s = state;
                ++s[l - 1];
                for (int p = 1; p <= m; ++p)
                    if (!relevant[t + 1][p]) s[p - 1] = 0;
                LaurentPoly w = symbolic ? acc * LaurentPoly::variable(vs, piece_var(l)) : acc;
                auto [it, inserted] = next.try_emplace(std::move(s), std::move(w));
                if (!inserted) it->second += w; // w moved only on insert
            }
        }
        cur = std::move(next);
    }

    LaurentPoly total = LaurentPoly::zero(vs);
    for (const auto& [state, acc] : cur) total += acc;
    return total;
}

} // namespace detail

class WeightMatrix {
  public:
    WeightMatrix(Dissection d, Flavor flavor, PolyMatrix mat)
        : dissection_(std::move(d)), flavor_(flavor), mat_(std::move(mat)) {
        if (mat_.size() != dissection_.n) throw DomainError("WeightMatrix: size mismatch");
    }

    const Dissection& dissection() const { return dissection_; }
    Flavor flavor() const { return flavor_; }
    int size() const { return mat_.size(); }
    const PolyMatrix& matrix() const { return mat_; }
    const LaurentPoly& at(int i, int j) const { return mat_.at(i, j); }

  private:
    Dissection dissection_;
    Flavor flavor_;
    PolyMatrix mat_;
};

/// Walk matrix with arbitrary unit-monomial boundary edge weights in place
/// of the edge variables: entry (i,j) = (sum of walk pick-products in the
/// piece variables) * w_i * ... * w_{j-1}. The plain flavors are the special
/// cases w = q (xq), w = 1 (x), and additionally x = 1 (arithmetic).
inline PolyMatrix weighted_walk_matrix(const Dissection& d, const std::vector<LaurentPoly>& edge_weights) {
    if (static_cast<int>(edge_weights.size()) != d.n)
        throw DomainError("weighted_walk_matrix: need one weight per boundary edge");
    const VarSet vs = edge_weights.empty() ? d.var_set() : edge_weights.front().var_set();
    for (const auto& w : edge_weights) {
        require_same(vs, w.var_set(), "weighted_walk_matrix");
        if (!w.is_unit()) throw DomainError("weighted_walk_matrix: edge weights must be unit monomials");
    }
    if (vs.pieces < d.piece_count())
        throw DomainError("weighted_walk_matrix: variable set lacks the piece variables");

    PolyMatrix m(vs, d.n);
    for (int i = 1; i <= d.n; ++i) {
        LaurentPoly prefix = LaurentPoly::one(vs); // w_i * ... * w_{j-1}
        for (int step = 1; step < d.n; ++step) {
            const int j0 = (i - 1 + step) % d.n + 1;
            prefix = prefix * edge_weights[(i - 1 + step - 1) % d.n];
            LaurentPoly picks = detail::pick_sum(d, i, j0, true);
            // pick_sum works over d.var_set(); re-embed into vs
            LaurentPoly embedded = LaurentPoly::zero(vs);
            for (const auto& [mono, coeff] : picks.terms()) embedded += LaurentPoly::monomial(vs, mono, coeff);
            m.at(i, j0) = embedded * prefix;
        }
    }
    return m;
}

/// The walk matrix of the dissection in the requested flavor:
///   arithmetic -> walk counts, x -> piece-variable weights,
///   xq -> piece-variable weights times the swept edge variables.
inline WeightMatrix weight_matrix(const Dissection& d, Flavor flavor) {
    const VarSet vs = d.var_set();
    PolyMatrix m(vs, d.n);
    for (int i = 1; i <= d.n; ++i)
        for (int j = 1; j <= d.n; ++j) {
            if (i == j) continue;
            LaurentPoly entry = detail::pick_sum(d, i, j, flavor != Flavor::arithmetic);
            if (flavor == Flavor::xq) entry = entry * edge_interval_product(d, i, j);
            m.at(i, j) = std::move(entry);
        }
    return WeightMatrix(d, flavor, std::move(m));
}

/// Entrywise substitution. The flavor of the result is re-derived from the
/// variables that actually remain (edge variables -> xq, piece variables
/// only -> x, none -> arithmetic).
inline WeightMatrix specialize(const WeightMatrix& w, const std::map<VarId, LaurentPoly>& assignment) {
    PolyMatrix m(w.matrix().var_set(), w.size());
    bool has_edge = false, has_piece = false;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j <= w.size(); ++j) {
            m.at(i, j) = w.at(i, j).substitute(assignment);
            for (const auto& [mono, coeff] : m.at(i, j).terms())
                for (const auto& [v, e] : mono.exponents())
                    (v.kind == VarKind::edge ? has_edge : has_piece) = true;
        }
    const Flavor f = has_edge ? Flavor::xq : (has_piece ? Flavor::x : Flavor::arithmetic);
    return WeightMatrix(w.dissection(), f, std::move(m));
}

} // namespace frieze
