#include <doctest.h>

#include <random>

#include "hcw/multipoly.hpp"
#include "hcw/poly_parse.hpp"
#include "hcw/random_util.hpp"

using namespace hcw;

namespace {

MultiPoly random_poly(const VarList& vars, std::mt19937_64& rng, int max_terms = 4,
                      int max_degree = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vars.size()) - 1);
    MultiPoly p = MultiPoly::zero(vars);
    int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Expo e(vars.size(), 0);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) e[pick(rng)] += 1;
        p.add_term(e, random_rational(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-4, -8).to_string() == "1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(6).to_string() == "6");
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(7, 3) / Rational(7, 3)).is_one());
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational::from_string("-5/10") == Rational(-1, 2));
    CHECK(Rational::from_string("12") == Rational(12));
    CHECK_THROWS(Rational::from_string("a/b"));
}

TEST_CASE("gaussian rationals") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(Rational(-1)));
    GaussianRational z(Rational(1), Rational(2));
    CHECK(z * z.conj() == GaussianRational(z.norm_sq()));
    CHECK((z / z) == GaussianRational(Rational(1)));
    CHECK_THROWS_AS(z / GaussianRational(Rational(0)), std::domain_error);
}

TEST_CASE("polynomial evaluation") {
    VarList v = u_vars(2);
    MultiPoly p = parse_poly("u1^2 - u2^2", v);
    CHECK(p.eval({Rational(1), Rational(1)}) == Rational(0));
    CHECK(p.eval({Rational(2), Rational(1)}) == Rational(3));
    MultiPoly q = parse_poly("2*u1*u2", v);
    CHECK(q.eval({Rational(1, 2), Rational(3)}) == Rational(3));
    CHECK_THROWS_AS(p.eval({Rational(1)}), std::invalid_argument);
}

TEST_CASE("partial derivatives") {
    VarList v2 = u_vars(2);
    CHECK(parse_poly("u1^2 - u2^2", v2).partial({VarFamily::u, 1}) == parse_poly("2*u1", v2));
    CHECK(parse_poly("u1^2", v2).partial({VarFamily::u, 2}).is_zero());
    VarList v3 = u_vars(3);
    CHECK(parse_poly("u1*u2*u3", v3).partial({VarFamily::u, 1}) == parse_poly("u2*u3", v3));
    CHECK_THROWS_AS(parse_poly("u1", v2).partial({VarFamily::u, 5}), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("u1", v2).partial({VarFamily::x, 1}), std::invalid_argument);
}

TEST_CASE("composition") {
    VarList xv = x_vars(2);
    VarList uv = u_vars(2);
    MultiPoly f = parse_poly("x1 + x2", xv);
    std::vector<MultiPoly> subst = {MultiPoly::variable_at(uv, 0), MultiPoly::variable_at(uv, 1)};
    CHECK(f.compose(subst) == parse_poly("u1 + u2", uv));

    VarList x1v = x_vars(1);
    MultiPoly g = parse_poly("x1^2", x1v);
    CHECK(g.compose({parse_poly("u1 + u2", uv)}) ==
          parse_poly("u1^2 + 2*u1*u2 + u2^2", uv));

    CHECK_THROWS_AS(f.compose({MultiPoly::variable_at(uv, 0)}), std::invalid_argument);
}

TEST_CASE("ring and composition properties on random polynomials") {
    std::mt19937_64 rng(42);
    VarList uv = u_vars(3);
    VarList xv = x_vars(2);
    for (int t = 0; t < 50; ++t) {
        MultiPoly p = random_poly(uv, rng);
        MultiPoly q = random_poly(uv, rng);
        MultiPoly r = random_poly(uv, rng);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK(p.partial_at(0).partial_at(1) == p.partial_at(1).partial_at(0));
    }
    for (int t = 0; t < 25; ++t) {
        MultiPoly f = random_poly(xv, rng);
        std::vector<MultiPoly> subst = {random_poly(uv, rng), random_poly(uv, rng)};
        std::vector<Rational> a = {random_rational(rng), random_rational(rng),
                                   random_rational(rng)};
        Rational lhs = f.compose(subst).eval(a);
        Rational rhs = f.eval({subst[0].eval(a), subst[1].eval(a)});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("no zero terms are stored") {
    VarList v = u_vars(2);
    MultiPoly p = parse_poly("u1 + u2", v);
    MultiPoly q = parse_poly("u1 - u2", v);
    MultiPoly sum = p + q - parse_poly("2*u1", v);
    CHECK(sum.is_zero());
    CHECK(sum.term_count() == 0);
}

TEST_CASE("string round trip") {
    std::mt19937_64 rng(7);
    VarList v = u_vars(4);
    for (int t = 0; t < 40; ++t) {
        MultiPoly p = random_poly(v, rng, 6, 4);
        CHECK(parse_poly(p.to_string(), v) == p);
    }
    CHECK(parse_poly("0", v).is_zero());
    CHECK_THROWS(parse_poly("u9", v));
    CHECK_THROWS(parse_poly("x1", v));
}
