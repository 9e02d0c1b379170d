#include <catch2/catch_amalgamated.hpp>

#include "dynqg/rational.hpp"

#include <random>

using namespace dynqg;

namespace {

// Random small rational function in nv variables, built from a seeded RNG so
// failures reproduce.
RatFunc random_ratfunc(std::mt19937& rng, int nv, bool nonzero = false) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), nterms(1, 3);
    auto random_poly = [&](bool force_nonzero) {
        Poly p(nv);
        int tries = 0;
        do {
            p = Poly(nv);
            int k = nterms(rng);
            for (int t = 0; t < k; ++t) {
                Expo e(nv);
                for (int i = 0; i < nv; ++i) e[i] = deg(rng);
                Poly term(nv);
                term.set_term(e, coef(rng));
                p = p + term;
            }
        } while (force_nonzero && p.is_zero() && ++tries < 50);
        if (force_nonzero && p.is_zero()) p = Poly(nv, 1);
        return p;
    };
    Poly num = random_poly(nonzero);
    Poly den = random_poly(true);
    return RatFunc(num, den);
}

}  // namespace

TEST_CASE("polynomial basics") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = (x + y) * (x - y) + Poly(2, 1);
    CHECK(p == x * x - y * y + Poly(2, 1));
    CHECK(p.degree_in(0) == 2);
    CHECK(p.total_degree() == 2);
    CHECK((p - p).is_zero());
}

TEST_CASE("exact division and gcd") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly a = (x + y) * (x + y) * (x - y);
    Poly b = (x + y) * (x * x + Poly(2, 1));
    Poly g = poly_gcd(a, b);
    CHECK(a.divided_by(g).has_value());
    CHECK(b.divided_by(g).has_value());
    // gcd is x + y up to a unit; primitive with positive lead, so exactly x+y.
    CHECK(g == x + y);
    CHECK(!a.divided_by(b).has_value());
}

TEST_CASE("ratfunc normalization is canonical") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    RatFunc f(x * x - y * y, x + y);
    RatFunc g(x - y, Poly(2, 1));
    CHECK(f == g);
    RatFunc h((x - y) * Poly(2, Rat(3)), Poly(2, Rat(3)));
    CHECK(h == g);
}

TEST_CASE("field axioms on random inputs") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 40; ++it) {
        RatFunc a = random_ratfunc(rng, 3);
        RatFunc b = random_ratfunc(rng, 3);
        RatFunc c = random_ratfunc(rng, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc(3));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RatFunc(3, 1));
            CHECK(a.pow(-2) == (a * a).inverse());
        }
    }
}

TEST_CASE("substitution") {
    // f(x,y) = (x^2 - y)/(x + 1), substitute x := t, y := t^2 - rational check
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    RatFunc f(x * x - y, x + Poly(2, 1));
    std::vector<RatFunc> imgs = {RatFunc::variable(1, 0),
                                 RatFunc::variable(1, 0) * RatFunc::variable(1, 0)};
    CHECK(subst(f, imgs).is_zero());

    // pole detection: substitute y := x^2 into 1/(x^2 - y)
    RatFunc g(Poly(2, 1), x * x - y);
    std::vector<RatFunc> imgs2 = {RatFunc::variable(1, 0),
                                  RatFunc::variable(1, 0) * RatFunc::variable(1, 0)};
    CHECK_THROWS(subst(g, imgs2));
}

TEST_CASE("remap variables") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    RatFunc f(x + y, x - y);
    RatFunc g = f.remap(3, {2, 0});
    Poly a = Poly::variable(3, 2), b = Poly::variable(3, 0);
    CHECK(g == RatFunc(a + b, a - b));
}
