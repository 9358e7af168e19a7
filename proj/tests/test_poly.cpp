#include <doctest.h>

#include <random>

#include "aqmds/error.hpp"
#include "aqmds/poly.hpp"

using namespace aqmds;
using gf::Element;
using gf::Poly;

namespace {

Poly from_ints(std::initializer_list<int> xs) {
    Poly p;
    for (int x : xs) p.emplace_back(x);
    return p;
}

Poly random_poly(std::mt19937& rng, int q, int deg) {
    std::uniform_int_distribution<int> d(0, q - 1);
    Poly p;
    for (int i = 0; i < deg; ++i) p.emplace_back(d(rng));
    p.emplace_back(1);
    return p;
}

}  // namespace

TEST_CASE("known binary irreducibles") {
    auto f = gf::make_field(2);
    CHECK(gf::find_irreducible(*f, 1) == from_ints({0, 1}));
    CHECK(gf::find_irreducible(*f, 2) == from_ints({1, 1, 1}));
    CHECK(gf::find_irreducible(*f, 3) == from_ints({1, 1, 0, 1}));
    CHECK(gf::find_irreducible(*f, 4) == from_ints({1, 1, 0, 0, 1}));
    CHECK(gf::find_irreducible(*f, 5) == from_ints({1, 0, 1, 0, 0, 1}));
}

TEST_CASE("x^2 + 1 is irreducible over GF(3) and GF(7), reducible over GF(5)") {
    CHECK(gf::is_irreducible(*gf::make_field(3), from_ints({1, 0, 1})));
    CHECK(gf::is_irreducible(*gf::make_field(7), from_ints({1, 0, 1})));
    CHECK_FALSE(gf::is_irreducible(*gf::make_field(5), from_ints({1, 0, 1})));
}

TEST_CASE("division identity a = (a div b) b + (a mod b) via degree bookkeeping") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 4, 5, 8, 9}) {
        auto f = gf::make_field(q);
        for (int t = 0; t < 50; ++t) {
            Poly a = random_poly(rng, q, 6), b = random_poly(rng, q, 3);
            Poly r = gf::poly_mod(*f, a, b);
            CHECK(gf::degree(r) < 3);
            // a - r is divisible by b
            CHECK(gf::poly_mod(*f, gf::poly_sub(*f, a, r), b).empty());
            // evaluation is a ring homomorphism
            for (int x = 0; x < q; ++x) {
                Element e{x};
                CHECK(gf::poly_eval(*f, gf::poly_mul(*f, a, b), e) ==
                      f->mul(gf::poly_eval(*f, a, e), gf::poly_eval(*f, b, e)));
            }
        }
    }
}

TEST_CASE("trial division and Ben-Or agree") {
    std::mt19937 rng(11);
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto f = gf::make_field(q);
        for (int deg = 1; deg <= 6; ++deg) {
            for (int t = 0; t < 20; ++t) {
                Poly p = random_poly(rng, q, deg);
                const bool td = gf::is_irreducible_trial_division(*f, p);
                CHECK(gf::is_irreducible_ben_or(*f, p) == td);
                CHECK(gf::is_irreducible(*f, p) == td);
            }
        }
    }
}

TEST_CASE("products are reducible") {
    std::mt19937 rng(5);
    for (int q : {2, 3, 4, 5, 9, 16}) {
        auto f = gf::make_field(q);
        for (int t = 0; t < 20; ++t) {
            Poly a = random_poly(rng, q, 1 + t % 3), b = random_poly(rng, q, 2 + t % 2);
            CHECK_FALSE(gf::is_irreducible(*f, gf::poly_mul(*f, a, b)));
        }
    }
}

TEST_CASE("find_irreducible returns the first irreducible in counter order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto f = gf::make_field(q);
        for (int deg = 1; deg <= 4; ++deg) {
            const Poly found = gf::find_irreducible(*f, deg);
            REQUIRE(gf::degree(found) == deg);
            CHECK(found.back() == f->one());
            CHECK(gf::is_irreducible_trial_division(*f, found));
            // every earlier monic candidate is reducible
            long rank = 0, scale = 1;
            for (int i = 0; i < deg; ++i, scale *= q) rank += found[i].value() * scale;
            for (long r = 0; r < rank; ++r) {
                Poly c;
                long x = r;
                for (int i = 0; i < deg; ++i, x /= q) c.emplace_back(static_cast<int>(x % q));
                c.emplace_back(1);
                REQUIRE_FALSE(gf::is_irreducible_trial_division(*f, c));
            }
        }
    }
}

TEST_CASE("irreducible polynomials of degree >= 2 have no roots") {
    for (int q : {3, 4, 5, 7, 8, 9, 16, 25}) {
        auto f = gf::make_field(q);
        for (int deg = 2; deg <= q - 1 && deg <= 8; ++deg) CHECK_FALSE(gf::has_root(*f, gf::find_irreducible(*f, deg)));
    }
}

TEST_CASE("find_irreducible rejects degree 0") {
    CHECK_THROWS_AS(gf::find_irreducible(*gf::make_field(5), 0), Error);
}
