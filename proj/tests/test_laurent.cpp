#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "frieze/laurent.hpp"

using namespace frieze;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, const VarSet& vs, int terms) {
    LaurentPoly p = LaurentPoly::zero(vs);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int l = 1; l <= vs.pieces; ++l)
            if (rng() % 2) m = m * Monomial::var(piece_var(l), static_cast<int>(rng() % 7) - 3);
        for (int i = 1; i <= vs.edges; ++i)
            if (rng() % 3 == 0) m = m * Monomial::var(edge_var(i), static_cast<int>(rng() % 5) - 2);
        p += LaurentPoly::monomial(vs, m, static_cast<long>(rng() % 11) - 5);
    }
    return p;
}

// exact evaluation at nonzero rational points, the independent oracle for
// ring arithmetic
mpq_class eval(const LaurentPoly& p, const std::map<VarId, mpq_class>& point) {
    mpq_class total = 0;
    for (const auto& [mono, coeff] : p.terms()) {
        mpq_class term(coeff);
        for (const auto& [var, exp] : mono.exponents()) {
            const mpq_class& v = point.at(var);
            for (int k = 0; k < (exp > 0 ? exp : -exp); ++k) term *= exp > 0 ? v : 1 / v;
        }
        total += term;
    }
    return total;
}

std::map<VarId, mpq_class> random_point(std::mt19937_64& rng, const VarSet& vs) {
    std::map<VarId, mpq_class> pt;
    auto draw = [&] {
        long v = static_cast<long>(rng() % 7) - 3;
        if (v == 0) v = 4;
        return mpq_class(v);
    };
    for (int l = 1; l <= vs.pieces; ++l) pt[piece_var(l)] = draw();
    for (int i = 1; i <= vs.edges; ++i) pt[edge_var(i)] = draw();
    return pt;
}

} // namespace

TEST_CASE("polynomial identities expand canonically") {
    const VarSet vs{3, 2};
    const VarNames names(vs, {"a", "b", "c"});
    const LaurentPoly a = LaurentPoly::parse("a", names), b = LaurentPoly::parse("b", names),
                      c = LaurentPoly::parse("c", names);

    CHECK((a + b) * (b + c) == a * b + a * c + b * b + b * c);
    CHECK((a + b) - (b + a) == LaurentPoly::zero(vs));
    CHECK((a - b) * (a + b) == a * a - b * b);
    CHECK((a + b).str(names) == "a + b");
    CHECK(((a + b) * (b + c)).str(names) == "a*b + a*c + b^2 + b*c");
    CHECK(LaurentPoly::zero(vs).str(names) == "0");
    CHECK((-LaurentPoly::one(vs)).str(names) == "-1");
}

TEST_CASE("random expression trees agree with rational evaluation") {
    std::mt19937_64 rng(11);
    const VarSet vs{2, 3};
    for (int trial = 0; trial < 40; ++trial) {
        const LaurentPoly p = random_poly(rng, vs, 4), q = random_poly(rng, vs, 3), r = random_poly(rng, vs, 3);
        CHECK((p + q) * r == p * r + q * r);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        const auto pt = random_point(rng, vs);
        CHECK(eval(p * q - q * p, pt) == 0);
        CHECK(eval((p + q) * r, pt) == eval(p * r, pt) + eval(q * r, pt));
        CHECK(eval(p - p, pt) == 0);
        CHECK(eval(p * q, pt) == eval(p, pt) * eval(q, pt));
    }
}

TEST_CASE("coefficients are exact big integers") {
    const VarSet vs{1, 0};
    LaurentPoly p = LaurentPoly::monomial(vs, Monomial::var(piece_var(1), 1), Int(1000000));
    for (int k = 0; k < 5; ++k) p = p * p; // coefficient (10^6)^32 = 10^192
    Int expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 10, 192);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.terms().begin()->second == expected);
    CHECK(p.terms().begin()->first.exponent(piece_var(1)) == 32);
}

TEST_CASE("units invert, non-units refuse") {
    const VarSet vs{2, 1};
    const VarNames names(vs);
    const LaurentPoly u = LaurentPoly::parse("-q1^-3*x2^5", names);
    CHECK(u.is_unit());
    CHECK(u * u.inverse_of_unit() == LaurentPoly::one(vs));
    CHECK(u.inverse_of_unit().str(names) == "-q1^3*x2^-5");

    CHECK_FALSE(LaurentPoly::parse("x1 + x2", names).is_unit());
    CHECK_FALSE(LaurentPoly::parse("2*x1", names).is_unit());
    CHECK_FALSE(LaurentPoly::zero(vs).is_unit());
    CHECK_THROWS_AS(LaurentPoly::parse("x1 + x2", names).inverse_of_unit(), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("2", names).inverse_of_unit(), DomainError);
    CHECK(LaurentPoly::parse("x1 + x2", names).unit_inverse() == std::nullopt);
}

TEST_CASE("degrees track single variables") {
    const VarSet vs{2, 1};
    const VarNames names(vs);
    const LaurentPoly p = LaurentPoly::parse("x1^3*x2 - q1^-2*x1^-4", names);
    CHECK(p.degree_in(piece_var(1)) == 3);
    CHECK(p.min_degree_in(piece_var(1)) == -4);
    CHECK(p.degree_in(edge_var(1)) == 0);
    CHECK(p.min_degree_in(edge_var(1)) == -2);
    CHECK_THROWS_AS(LaurentPoly::zero(vs).degree_in(piece_var(1)), DomainError);
}

TEST_CASE("powers respect units") {
    const VarSet vs{2, 0};
    const VarNames names(vs);
    const LaurentPoly xy = LaurentPoly::parse("x1*x2", names);
    CHECK(xy.pow(-2).str(names) == "x1^-2*x2^-2");
    CHECK(xy.pow(0) == LaurentPoly::one(vs));
    CHECK_THROWS_AS(LaurentPoly::parse("x1 + x2", names).pow(-1), DomainError);
    CHECK(LaurentPoly::parse("x1 + x2", names).pow(2) == LaurentPoly::parse("x1^2 + 2*x1*x2 + x2^2", names));
}

TEST_CASE("parse round-trips the canonical print") {
    std::mt19937_64 rng(23);
    const VarSet vs{3, 2};
    const VarNames plain(vs);
    const VarNames fancy(vs, {"alpha", "beta", "ab"});
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly p = random_poly(rng, vs, 5);
        CHECK(LaurentPoly::parse(p.str(plain), plain) == p);
        CHECK(LaurentPoly::parse(p.str(fancy), fancy) == p);
    }
    // implicit products bind the longest declared name first
    CHECK(LaurentPoly::parse("2ab", fancy) == LaurentPoly::monomial(vs, Monomial::var(piece_var(3), 1), 2));
    CHECK(LaurentPoly::parse("q1^-1*x2^3 - 2", plain).str(plain) == "q1^-1*x2^3 - 2");
}

TEST_CASE("parse rejects malformed input") {
    const VarSet vs{2, 1};
    const VarNames names(vs);
    CHECK_THROWS_AS(LaurentPoly::parse("", names), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("2 +", names), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("x9", names), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("q0", names), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("x1^", names), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("x1**2", names), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("x1*", names), DomainError);
    CHECK_THROWS_AS(LaurentPoly::parse("(x1)", names), DomainError);
}

TEST_CASE("mixing variable sets is an error") {
    const LaurentPoly p = LaurentPoly::one(VarSet{2, 1});
    const LaurentPoly q = LaurentPoly::one(VarSet{2, 2});
    CHECK_THROWS_AS(p + q, VarSetMismatch);
    CHECK_THROWS_AS(p * q, VarSetMismatch);
}

TEST_CASE("geometric sums telescope") {
    const VarSet vs{1, 1};
    const VarNames names(vs);
    const LaurentPoly y = LaurentPoly::parse("q1*x1^2", names);
    for (int k = 0; k <= 5; ++k) {
        const LaurentPoly s = geometric_sum(y, k);
        CHECK((LaurentPoly::one(vs) - y) * s == LaurentPoly::one(vs) - y.pow(k + 1));
    }
    CHECK(geometric_sum(y, 0) == LaurentPoly::one(vs));
}

TEST_CASE("substitution is simultaneous") {
    const VarSet vs{2, 0};
    const VarNames names(vs);
    const LaurentPoly p = LaurentPoly::parse("x1^2*x2 + x2", names);
    std::map<VarId, LaurentPoly> swap{{piece_var(1), LaurentPoly::parse("x2", names)},
                                      {piece_var(2), LaurentPoly::parse("x1", names)}};
    CHECK(p.substitute(swap) == LaurentPoly::parse("x2^2*x1 + x1", names));
    CHECK(p.substitute(swap).substitute(swap) == p);

    std::map<VarId, LaurentPoly> square{{piece_var(1), LaurentPoly::parse("x1^2", names)}};
    CHECK(p.substitute(square).degree_in(piece_var(1)) == 4);
}
