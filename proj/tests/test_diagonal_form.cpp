#include <catch2/catch_amalgamated.hpp>

#include "frieze/determinant.hpp"
#include "frieze/diagonal_form.hpp"

using namespace frieze;

namespace {

LaurentPoly diag_product(const PolyMatrix& d) {
    LaurentPoly p = LaurentPoly::one(d.var_set());
    for (int i = 1; i <= d.size(); ++i) p = p * d.at(i, i);
    return p;
}

} // namespace

TEST_CASE("trivial polygons reduce to the closed diagonal") {
    for (int d = 3; d <= 6; ++d) {
        const Dissection triv = build_dissection(d, {});
        const VarSet vs = triv.var_set();
        const DiagonalForm f = diagonalize_trivial(d);

        LaurentPoly eps = LaurentPoly::one(vs);
        for (int i = 1; i <= d; ++i) eps = eps * LaurentPoly::variable(vs, edge_var(i));
        const LaurentPoly x = LaurentPoly::variable(vs, piece_var(1));
        std::vector<LaurentPoly> expected;
        for (int i = 1; i <= d - 1; ++i) expected.push_back(LaurentPoly::variable(vs, edge_var(i)));
        expected.push_back(LaurentPoly::variable(vs, edge_var(d)) * geometric_sum(eps * x.pow(d), d - 2));
        CHECK(f.d == PolyMatrix::diagonal_matrix(vs, expected));

        CHECK(f.det_p == LaurentPoly::constant(vs, d % 2 ? 1 : -1));
        CHECK(f.det_q == LaurentPoly::one(vs));

        const PolyMatrix w = weight_matrix(triv, Flavor::xq).matrix();
        CHECK(f.p * w * f.q == f.d);
        CHECK(replay_ops(w, f.row_ops, f.col_ops) == f.d);
    }
}

TEST_CASE("trivial reduction with custom unit weights") {
    const VarSet vs{1, 4};
    const VarNames names(vs);
    std::vector<LaurentPoly> wts{
        LaurentPoly::parse("q1", names), LaurentPoly::parse("q2*x1", names),
        LaurentPoly::parse("q3*x1^2", names), LaurentPoly::parse("q4", names)};
    const DiagonalForm f = diagonalize_trivial(4, wts);
    const PolyMatrix w = weighted_walk_matrix(build_dissection(4, {}), wts);
    CHECK(f.p * w * f.q == f.d);
    const LaurentPoly e = wts[0] * wts[1] * wts[2] * wts[3];
    const LaurentPoly x = LaurentPoly::parse("x1", names);
    CHECK(f.d.at(4, 4) == wts[3] * geometric_sum(e * x.pow(4), 2));
    CHECK(f.det_p == LaurentPoly::constant(vs, -1));
    CHECK(f.det_q == LaurentPoly::one(vs));
}

TEST_CASE("unit block shape and determinant") {
    const VarSet vs{1, 4};
    const VarNames names(vs);
    const LaurentPoly y = LaurentPoly::parse("q4*x1^2", names);
    const auto unit = [&](int i) { return LaurentPoly::parse("q" + std::to_string(i), names); };

    const PolyMatrix u3 = unit_block_matrix(3, y, {unit(1), unit(2)});
    CHECK(u3.at(1, 1) == LaurentPoly::one(vs) + y);
    CHECK(u3.at(1, 2) == unit(1) * y);
    CHECK(u3.at(1, 3) == unit(1) * unit(2) * y);
    CHECK(u3.at(2, 1) == unit(1).inverse_of_unit());
    CHECK(u3.at(3, 1) == (unit(1) * unit(2)).inverse_of_unit());

    for (int s = 1; s <= 4; ++s) {
        std::vector<LaurentPoly> units;
        for (int i = 1; i < s; ++i) units.push_back(unit(i));
        CHECK(det_expand(unit_block_matrix(s, y, units)) == geometric_sum(y, s));
    }
}

TEST_CASE("unit block reduction") {
    const VarSet vs{1, 3};
    const VarNames names(vs);
    const LaurentPoly y = LaurentPoly::parse("x1 + q1", names);
    for (int s = 1; s <= 3; ++s) {
        std::vector<LaurentPoly> units;
        LaurentPoly delta = LaurentPoly::one(vs);
        for (int i = 1; i < s; ++i) {
            units.push_back(LaurentPoly::parse("q" + std::to_string(i) + "*x1^" + std::to_string(i), names));
            delta = delta * units.back();
        }
        const DiagonalForm f = reduce_unit_block(s, y, units);
        CHECK(f.p * unit_block_matrix(s, y, units) * f.q == f.d);
        CHECK(f.d.at(s, s) == delta.inverse_of_unit() * geometric_sum(y, s));
        for (int i = 1; i < s; ++i) CHECK(f.d.at(i, i) == -units[i - 1]);
        CHECK(f.det_p == LaurentPoly::constant(vs, s % 2 ? 1 : -1));
        CHECK(f.det_q == LaurentPoly::one(vs));
    }
}

TEST_CASE("heptagon diagonal forms") {
    const Dissection dis = build_dissection(7, {{2, 7}, {3, 6}, {4, 6}});
    const VarSet vs = dis.var_set();
    const VarNames names(vs, {"a", "b", "c", "d"});

    const DiagonalForm fx = diagonalize(dis, Flavor::x);
    const char* expected_x[] = {"1 + a^3*b^2*c*d", "1 + a*b^4*c*d + a^2*b^8*c^2*d^2",
                                "1 + a*b^2*c^3*d", "1 + a*b^2*c*d^3", "1", "1", "1"};
    for (int i = 1; i <= 7; ++i) CHECK(fx.d.at(i, i) == LaurentPoly::parse(expected_x[i - 1], names));
    CHECK(fx.det_p == LaurentPoly::constant(vs, -1));
    CHECK(fx.det_q == LaurentPoly::constant(vs, -1));
    CHECK(fx.p * weight_matrix(dis, Flavor::x).matrix() * fx.q == fx.d);

    const DiagonalForm fa = diagonalize(dis, Flavor::arithmetic);
    const int expected_a[] = {2, 3, 2, 2, 1, 1, 1};
    for (int i = 1; i <= 7; ++i)
        CHECK(fa.d.at(i, i) == LaurentPoly::constant(vs, expected_a[i - 1]));

    // entries for the richest flavor follow one closed pattern per piece
    const DiagonalForm fq = diagonalize(dis, Flavor::xq);
    const ComplementContext ctx(dis);
    const LaurentPoly eps_c = ctx.eps_monomial() * ctx.c_monomial();
    for (int l = 1; l <= 4; ++l) {
        const LaurentPoly xl = LaurentPoly::variable(vs, piece_var(l));
        CHECK(fq.d.at(l, l) == geometric_sum(eps_c * xl.pow(2), dis.walk_cap(l)));
    }
    for (int i = 5; i <= 7; ++i) CHECK(fq.d.at(i, i) == LaurentPoly::one(vs));
}

TEST_CASE("square with one diagonal") {
    const Dissection dis = build_dissection(4, {{1, 3}});
    const VarNames names(dis.var_set());
    const DiagonalForm f = diagonalize(dis, Flavor::xq);
    CHECK(f.d.at(1, 1) == LaurentPoly::parse("1 + q1*q2*q3*q4*x1^3*x2", names));
    CHECK(f.d.at(2, 2) == LaurentPoly::parse("1 + q1*q2*q3*q4*x1*x2^3", names));
    CHECK(f.d.at(3, 3) == LaurentPoly::one(dis.var_set()));
    CHECK(f.d.at(4, 4) == LaurentPoly::one(dis.var_set()));
}

TEST_CASE("every small dissection diagonalizes consistently") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& dis : all_dissections(n))
            for (Flavor fl : {Flavor::arithmetic, Flavor::x, Flavor::xq}) {
                const DiagonalForm f = diagonalize(dis, fl);
                // dets of p and q link the two determinant routes through d
                CHECK(det_formula(dis, fl) * f.det_p * f.det_q == diag_product(f.d));
                if (n == 5 && fl == Flavor::xq) {
                    const PolyMatrix w = weight_matrix(dis, fl).matrix();
                    CHECK(replay_ops(w, f.row_ops, f.col_ops) == f.d);
                }
            }
}
