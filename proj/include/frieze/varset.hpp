#pragma once

// Variables of the Laurent polynomial ring
//
//     R = Z[x_1^{\pm 1},...,x_m^{\pm 1}; q_1^{\pm 1},...,q_n^{\pm 1}]
//
// attached to a dissected polygon: one piece variable x_l per piece and one
// edge variable q_i per boundary edge. A VarId is the stable identity of a
// variable (kind + 1-based index); a VarSet only records how many of each
// kind exist. Edge variables order before piece variables; together with the
// index this fixes the deterministic display order, nothing more.

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frieze/errors.hpp"

namespace frieze {

enum class VarKind : std::uint8_t { edge = 0, piece = 1 };

struct VarId {
    VarKind kind{VarKind::edge};
    std::int32_t index{0}; // 1-based

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

constexpr VarId piece_var(int l) { return VarId{VarKind::piece, l}; }
constexpr VarId edge_var(int i) { return VarId{VarKind::edge, i}; }

/// Number of piece and edge variables a polynomial may mention. Two
/// polynomials interoperate only if their VarSets are equal.
struct VarSet {
    std::int32_t pieces = 0;
    std::int32_t edges = 0;

    constexpr bool contains(VarId v) const {
        const int limit = v.kind == VarKind::piece ? pieces : edges;
        return v.index >= 1 && v.index <= limit;
    }

    friend constexpr bool operator==(const VarSet&, const VarSet&) = default;

    std::string str() const {
        return "{pieces: " + std::to_string(pieces) + ", edges: " + std::to_string(edges) + "}";
    }
};

inline void require_same(const VarSet& a, const VarSet& b, const char* what) {
    if (!(a == b))
        throw VarSetMismatch(std::string(what) + ": variable sets differ, " + a.str() + " vs " + b.str());
}

/// Display names. Defaults are x1..xm / q1..qn; piece names can be replaced
/// (e.g. a,b,c,d) for rendering and parsing. Names must be nonempty, start
/// with a letter, continue with letters/digits/underscore, and be distinct.
class VarNames {
  public:
    explicit VarNames(VarSet vs) : vs_(vs) {}

    VarNames(VarSet vs, std::vector<std::string> piece_names) : vs_(vs), piece_names_(std::move(piece_names)) {
        if (static_cast<int>(piece_names_.size()) != vs.pieces)
            throw DomainError("VarNames: expected " + std::to_string(vs.pieces) + " piece names, got " +
                              std::to_string(piece_names_.size()));
        for (const auto& nm : piece_names_)
            if (!valid_name(nm)) throw DomainError("VarNames: invalid variable name '" + nm + "'");
        for (std::size_t i = 0; i < piece_names_.size(); ++i)
            for (std::size_t j = i + 1; j < piece_names_.size(); ++j)
                if (piece_names_[i] == piece_names_[j])
                    throw DomainError("VarNames: duplicate variable name '" + piece_names_[i] + "'");
    }

    const VarSet& var_set() const { return vs_; }

    std::string name(VarId v) const {
        if (!vs_.contains(v)) throw DomainError("VarNames::name: variable outside the variable set");
        if (v.kind == VarKind::piece && !piece_names_.empty()) return piece_names_[v.index - 1];
        return (v.kind == VarKind::piece ? "x" : "q") + std::to_string(v.index);
    }

    /// All (name, id) pairs; used by the parser for longest-match lookup.
    std::vector<std::pair<std::string, VarId>> entries() const {
        std::vector<std::pair<std::string, VarId>> out;
        out.reserve(static_cast<std::size_t>(vs_.pieces + vs_.edges));
        for (int i = 1; i <= vs_.edges; ++i) out.emplace_back(name(edge_var(i)), edge_var(i));
        for (int l = 1; l <= vs_.pieces; ++l) out.emplace_back(name(piece_var(l)), piece_var(l));
        return out;
    }

    std::optional<VarId> find(std::string_view s) const {
        for (int i = 1; i <= vs_.edges; ++i)
            if (name(edge_var(i)) == s) return edge_var(i);
        for (int l = 1; l <= vs_.pieces; ++l)
            if (name(piece_var(l)) == s) return piece_var(l);
        return std::nullopt;
    }

    static bool valid_name(std::string_view s) {
        if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        return true;
    }

  private:
    VarSet vs_;
    std::vector<std::string> piece_names_; // empty -> defaults
};

} // namespace frieze
