#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "frieze/walks.hpp"

using namespace frieze;

TEST_CASE("heptagon walks from 1 to 4 in pick order") {
    const Dissection d = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    const auto walks = enumerate_walks(d, 1, 4);
    REQUIRE(walks.size() == 4);
    CHECK(walks[0].pieces == std::vector<int>{1, 2});
    CHECK(walks[1].pieces == std::vector<int>{1, 3});
    CHECK(walks[2].pieces == std::vector<int>{2, 2});
    CHECK(walks[3].pieces == std::vector<int>{2, 3});

    const VarNames names(d.var_set(), {"a", "b", "c", "d"});
    CHECK(walk_weight(d, walks[1], Flavor::x).str(names) == "a*c");
    CHECK(walk_weight(d, walks[1], Flavor::xq).str(names) == "q1*q2*q3*a*c");
    CHECK(walk_weight(d, walks[2], Flavor::arithmetic) == LaurentPoly::one(d.var_set()));
}

TEST_CASE("route endpoints behave") {
    const Dissection d = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    const VarNames names(d.var_set(), {"a", "b", "c", "d"});

    // one step: the empty walk
    const auto step = enumerate_walks(d, 3, 4);
    REQUIRE(step.size() == 1);
    CHECK(step[0].pieces.empty());
    CHECK(walk_weight(d, step[0], Flavor::xq).str(names) == "q3");

    // the long way around is forced
    const auto around = enumerate_walks(d, 2, 1);
    REQUIRE(around.size() == 1);
    CHECK(walk_weight(d, around[0], Flavor::x).str(names) == "a*b^2*c*d");

    // no walks from a vertex to itself, matching the zero matrix diagonal
    CHECK(enumerate_walks(d, 3, 3).empty());
    CHECK_THROWS_AS(enumerate_walks(d, 0, 3), DomainError);
}

TEST_CASE("walk weights reject bad walks") {
    const Dissection d = build_dissection(5, {{2, 4}, {2, 5}});
    CHECK_THROWS_AS(walk_weight(d, Walk{1, 3, {1, 1}}, Flavor::x), DomainError); // wrong length
    CHECK_THROWS_AS(walk_weight(d, Walk{2, 4, {1}}, Flavor::x), DomainError);    // piece not at vertex
    CHECK_THROWS_AS(walk_weight(d, Walk{1, 4, {2, 2}}, Flavor::x), DomainError); // cap exceeded
    CHECK_NOTHROW(walk_weight(d, Walk{1, 4, {1, 2}}, Flavor::x));
}

TEST_CASE("matrix entries equal walk sums everywhere") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& d : all_dissections(n))
            for (Flavor fl : {Flavor::arithmetic, Flavor::x, Flavor::xq}) {
                const WeightMatrix w = weight_matrix(d, fl);
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (i == j) {
                            CHECK(w.at(i, j).is_zero());
                            continue;
                        }
                        LaurentPoly total = LaurentPoly::zero(d.var_set());
                        for (const auto& walk : enumerate_walks(d, i, j)) total += walk_weight(d, walk, fl);
                        CHECK(total == w.at(i, j));
                    }
            }
}

TEST_CASE("heptagon golden rows") {
    const Dissection d = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    const WeightMatrix counts = weight_matrix(d, Flavor::arithmetic);
    const int expected[7][7] = {{0, 1, 2, 4, 6, 2, 1}, {1, 0, 1, 2, 3, 1, 1}, {2, 1, 0, 1, 2, 1, 1},
                                {4, 2, 1, 0, 1, 1, 2}, {6, 3, 2, 1, 0, 1, 3}, {2, 1, 1, 1, 1, 0, 1},
                                {1, 1, 1, 2, 3, 1, 0}};
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            CHECK(counts.at(i, j) == LaurentPoly::constant(d.var_set(), expected[i - 1][j - 1]));

    const VarNames names(d.var_set(), {"a", "b", "c", "d"});
    const WeightMatrix wx = weight_matrix(d, Flavor::x);
    CHECK(wx.at(1, 4) == LaurentPoly::parse("a*b + a*c + b^2 + b*c", names));
    CHECK(wx.at(1, 7) == LaurentPoly::parse("a*b^2*c*d", names));
    const WeightMatrix wq = weight_matrix(d, Flavor::xq);
    CHECK(wq.at(1, 3) == LaurentPoly::parse("q1*q2", names) * LaurentPoly::parse("a + b", names));
    CHECK(wq.at(3, 1) ==
          LaurentPoly::parse("q3*q4*q5*q6*q7*c*d", names) * LaurentPoly::parse("a*b + b^2", names));
}

TEST_CASE("custom edge weights generalize both flavors") {
    const Dissection d = build_dissection(6, {{2, 6}, {3, 5}});
    const VarSet vs = d.var_set();
    std::vector<LaurentPoly> ones(6, LaurentPoly::one(vs));
    CHECK(weighted_walk_matrix(d, ones) == weight_matrix(d, Flavor::x).matrix());

    std::vector<LaurentPoly> qs;
    for (int i = 1; i <= 6; ++i) qs.push_back(LaurentPoly::variable(vs, edge_var(i)));
    CHECK(weighted_walk_matrix(d, qs) == weight_matrix(d, Flavor::xq).matrix());

    CHECK_THROWS_AS(weighted_walk_matrix(d, std::vector<LaurentPoly>(5, LaurentPoly::one(vs))), DomainError);
    std::vector<LaurentPoly> bad(6, LaurentPoly::one(vs));
    bad[2] = bad[2] + bad[2]; // 2 is not a unit
    CHECK_THROWS_AS(weighted_walk_matrix(d, bad), DomainError);
}

TEST_CASE("specialization maps between flavors") {
    const Dissection d = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    const WeightMatrix wq = weight_matrix(d, Flavor::xq);
    const LaurentPoly one = LaurentPoly::one(d.var_set());

    std::map<VarId, LaurentPoly> kill_edges;
    for (int i = 1; i <= 7; ++i) kill_edges[edge_var(i)] = one;
    const WeightMatrix wx = specialize(wq, kill_edges);
    CHECK(wx.matrix() == weight_matrix(d, Flavor::x).matrix());
    CHECK(wx.flavor() == Flavor::x);

    std::map<VarId, LaurentPoly> kill_all = kill_edges;
    for (int l = 1; l <= 4; ++l) kill_all[piece_var(l)] = one;
    const WeightMatrix wa = specialize(wq, kill_all);
    CHECK(wa.matrix() == weight_matrix(d, Flavor::arithmetic).matrix());
    CHECK(wa.flavor() == Flavor::arithmetic);
}
