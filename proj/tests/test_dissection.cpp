#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "frieze/dissection.hpp"

using namespace frieze;

TEST_CASE("heptagon pieces come out canonical") {
    const Dissection d = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    REQUIRE(d.piece_count() == 4);
    CHECK(d.pieces[0] == std::vector<int>{1, 2, 7});
    CHECK(d.pieces[1] == std::vector<int>{2, 3, 6, 7});
    CHECK(d.pieces[2] == std::vector<int>{3, 4, 6});
    CHECK(d.pieces[3] == std::vector<int>{4, 5, 6});
    CHECK(d.degrees == std::vector<int>{3, 4, 3, 3});
    CHECK(d.type_multiset() == std::vector<int>{3, 3, 3, 4});
    CHECK(d.walk_cap(2) == 2);
    CHECK_FALSE(d.is_trivial());
    CHECK(d.var_set() == VarSet{4, 7});

    // fan order at a vertex: farthest ccw reach first
    CHECK(pieces_at_vertex(d, 2) == std::vector<int>{1, 2});
    CHECK(pieces_at_vertex(d, 5) == std::vector<int>{4});
    CHECK(pieces_at_vertex(d, 6) == std::vector<int>{4, 3, 2});

    CHECK(d.edge_piece[0] == 1); // e_1 = (1,2)
    CHECK(d.edge_piece[1] == 2); // e_2 = (2,3)
    CHECK(d.edge_piece[4] == 4); // e_5 = (5,6)
    CHECK(boundary_pieces(d) == std::vector<int>{1, 4});
    CHECK(d.diag_pieces[0] == std::pair<int, int>{1, 2}); // (2,7)
    CHECK(d.diag_pieces[1] == std::pair<int, int>{2, 3}); // (3,6)
}

TEST_CASE("piece degrees always sum to one polygon") {
    for (int n = 3; n <= 7; ++n)
        for (const auto& d : all_dissections(n)) {
            int total = 0;
            for (int l = 1; l <= d.piece_count(); ++l) total += d.walk_cap(l);
            CHECK(total == n - 2);
            CHECK(static_cast<int>(d.diagonals.size()) == d.piece_count() - 1);
            for (int v = 1; v <= n; ++v) CHECK(!pieces_at_vertex(d, v).empty());
            for (int e = 0; e < n; ++e) CHECK(d.edge_piece[e] >= 1);
            if (!d.is_trivial())
                for (const auto& [a, b] : d.diag_pieces) {
                    CHECK(a >= 1);
                    CHECK(b > a);
                }
        }
}

TEST_CASE("enumeration hits the little Schroeder counts") {
    const int counts[] = {1, 3, 11, 45, 197, 903, 4279};
    for (int n = 3; n <= 9; ++n) {
        const auto all = all_dissections(n);
        CHECK(static_cast<int>(all.size()) == counts[n - 3]);
        std::set<std::vector<std::pair<int, int>>> seen;
        for (const auto& d : all) seen.insert(d.diagonals);
        CHECK(seen.size() == all.size());
    }
}

TEST_CASE("invalid inputs are rejected") {
    CHECK_THROWS_AS(build_dissection(2, {}), InvalidDissection);
    CHECK_THROWS_AS(build_dissection(5, {{1, 1}}), InvalidDissection);
    CHECK_THROWS_AS(build_dissection(5, {{1, 2}}), InvalidDissection); // boundary edge
    CHECK_THROWS_AS(build_dissection(5, {{1, 5}}), InvalidDissection); // boundary edge, wrapped
    CHECK_THROWS_AS(build_dissection(5, {{0, 3}}), InvalidDissection);
    CHECK_THROWS_AS(build_dissection(5, {{1, 6}}), InvalidDissection);
    CHECK_THROWS_AS(build_dissection(5, {{1, 3}, {1, 3}}), InvalidDissection);
    CHECK_THROWS_AS(build_dissection(5, {{3, 1}, {2, 4}}), InvalidDissection); // crossing
    CHECK_THROWS_AS(build_dissection(6, {{1, 3}, {2, 6}}), InvalidDissection); // crossing
    // sharing an endpoint is not crossing
    CHECK_NOTHROW(build_dissection(6, {{1, 3}, {3, 6}}));
}

TEST_CASE("enumeration guard blocks runaway sizes") {
    CHECK_THROWS_AS(all_dissections(13), GuardExceeded);
    setenv("FRIEZE_GUARD_N", "3", 1);
    CHECK_THROWS_AS(all_dissections(4), GuardExceeded);
    setenv("FRIEZE_GUARD_N", "13", 1);
    CHECK_NOTHROW(build_dissection(13, {}));
    unsetenv("FRIEZE_GUARD_N");
}

TEST_CASE("random dissections are valid and reproducible") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        const Dissection a = random_dissection(n, seed);
        const Dissection b = random_dissection(n, seed);
        CHECK(a.diagonals == b.diagonals);
        CHECK(a.n == n);
        int total = 0;
        for (int l = 1; l <= a.piece_count(); ++l) total += a.walk_cap(l);
        CHECK(total == n - 2);
    }
    // seeds eventually disagree
    bool differ = false;
    for (uint64_t seed = 1; seed <= 20 && !differ; ++seed)
        differ = random_dissection(8, seed).diagonals != random_dissection(8, seed + 1).diagonals;
    CHECK(differ);
}
