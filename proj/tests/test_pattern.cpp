#include <catch2/catch_amalgamated.hpp>

#include "frieze/complement.hpp"
#include "frieze/pattern.hpp"

using namespace frieze;

namespace {

const Dissection& pentagon() {
    static const Dissection d = build_dissection(5, {{2, 4}, {2, 5}});
    return d;
}

} // namespace

TEST_CASE("pattern rows of the pentagon") {
    const FriezePattern pa = build_frieze(pentagon(), Flavor::arithmetic);
    const VarSet vs = pentagon().var_set();
    const int row2[] = {3, 1, 2, 2, 1};
    for (int i = 1; i <= 5; ++i) {
        CHECK(pa.entry(0, i).is_zero());
        CHECK(pa.entry(1, i) == LaurentPoly::one(vs));
        CHECK(pa.entry(2, i) == LaurentPoly::constant(vs, row2[i - 1]));
        CHECK(pa.entry(4, i) == LaurentPoly::one(vs));
    }
    CHECK(pa.entry(2, 6) == pa.entry(2, 1));
    CHECK(pa.entry(2, 0) == pa.entry(2, 5));
    CHECK_THROWS_AS(pa.entry(5, 1), DomainError);
    CHECK_THROWS_AS(pa.entry(-1, 1), DomainError);

    const FriezePattern px = build_frieze(pentagon(), Flavor::x);
    const VarNames names(vs);
    const char* xrow2[] = {"x1 + x2 + x3", "x2", "x2 + x3", "x1 + x3", "x1"};
    for (int i = 1; i <= 5; ++i) CHECK(px.entry(2, i) == LaurentPoly::parse(xrow2[i - 1], names));
    for (int i = 1; i <= 5; ++i) CHECK(px.entry(4, i) == LaurentPoly::parse("x1*x2*x3", names));
}

TEST_CASE("diamond rendering") {
    const FriezePattern pa = build_frieze(pentagon(), Flavor::arithmetic);
    const VarNames names(pentagon().var_set());
    CHECK(render_frieze(pa, names) ==
          "rows 1..4, period 5, 2 periods\n"
          "1   1   1   1   1   1   1   1   1   1\n"
          "  3   1   2   2   1   3   1   2   2   1\n"
          "    2   1   3   1   2   2   1   3   1   2\n"
          "      1   1   1   1   1   1   1   1   1   1\n");

    const FriezePattern px = build_frieze(pentagon(), Flavor::x);
    FriezeRenderOptions opt;
    opt.periods = 1;
    opt.show_zero_row = true;
    opt.max_entry_width = 8;
    const std::string out = render_frieze(px, names, opt);
    CHECK(out.find("rows 0..4, period 5, 1 period\n") != std::string::npos);
    CHECK(out.find("[1] = x1 + x2 + x3\n") != std::string::npos);
    CHECK(out.find("[2] = x1*x2 + x2*x3\n") != std::string::npos);
    CHECK(out.find("[3] = x1*x2 + x1*x3 + x2*x3\n") != std::string::npos);
    CHECK(out.find("[4] = x1*x2 + x1*x3\n") != std::string::npos);

    FriezeRenderOptions lopt;
    lopt.periods = 1;
    lopt.latex = true;
    const std::string tex = render_frieze(px, names, lopt);
    CHECK(tex.find("\\begin{array}{*{12}{c}}") != std::string::npos);
    CHECK(tex.find("\\end{array}") != std::string::npos);
    CHECK(tex.find("x_{1} x_{2} x_{3}") != std::string::npos);

    CHECK_THROWS_AS(render_frieze(pa, names, FriezeRenderOptions{0, false, false, 24}), DomainError);
}

TEST_CASE("zig-zag paths between boundary edges") {
    const auto z = find_zigzag(pentagon(), 1, 3);
    REQUIRE(z.has_value());
    CHECK(z->sequence == std::vector<std::pair<int, int>>{{1, 2}, {2, 5}, {2, 4}, {3, 4}});
    CHECK(z->pieces == std::vector<int>{1, 3, 2});

    // both edges on one piece: they must share a vertex
    const Dissection hept = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    CHECK(!find_zigzag(hept, 2, 6).has_value());
    const auto adj = find_zigzag(hept, 4, 5);
    REQUIRE(adj.has_value());
    CHECK(adj->pieces == std::vector<int>{4});
    CHECK(adj->sequence == std::vector<std::pair<int, int>>{{4, 5}, {5, 6}});

    CHECK_THROWS_AS(find_zigzag(pentagon(), 2, 2), DomainError);
    CHECK_THROWS_AS(find_zigzag(pentagon(), 0, 3), DomainError);
}

TEST_CASE("minor values and the closed formula") {
    const VarNames names(pentagon().var_set());
    CHECK(minor_formula(pentagon(), 1, 3).str(names) == "q1*q2^2*q3*x2^2");
    CHECK(minor_formula(pentagon(), 3, 1).str(names) == "q1*q3*q4^2*q5^2*x1^2*x3^2");

    const Dissection hept = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    CHECK(minor_formula(hept, 2, 6).is_zero());

    for (int n = 5; n <= 6; ++n)
        for (const auto& d : all_dissections(n))
            for (Flavor fl : {Flavor::arithmetic, Flavor::x, Flavor::xq}) {
                const WeightMatrix w = weight_matrix(d, fl);
                const ComplementContext ctx(d);
                LaurentPoly diag_value = LaurentPoly::constant(d.var_set(), -1);
                if (fl != Flavor::arithmetic) diag_value = -ctx.c_monomial();
                if (fl == Flavor::xq) diag_value = diag_value * ctx.eps_monomial();
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        const LaurentPoly m = frieze_minor(w, i, j);
                        CHECK(m == minor_formula(d, i, j, fl));
                        if (i == j) CHECK(m == diag_value);
                    }
            }
}
