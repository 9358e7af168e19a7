#include <doctest.h>

#include <set>

#include "aqmds/error.hpp"
#include "aqmds/gf.hpp"
#include "oracles.hpp"

using namespace aqmds;
using gf::Element;

namespace {

const std::vector<int> kOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64};

bool naive_is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("prime power decomposition matches trial factoring") {
    for (int q = 0; q <= 200; ++q) {
        auto [p, m] = gf::prime_power_decompose(q);
        int expect_p = 0, expect_m = 0;
        for (int c = 2; c <= q; ++c) {
            if (!naive_is_prime(c)) continue;
            int r = q, e = 0;
            while (r % c == 0) {
                r /= c;
                ++e;
            }
            if (r == 1 && e > 0) {
                expect_p = c;
                expect_m = e;
            }
        }
        CHECK_MESSAGE(p == expect_p, "q=", q);
        CHECK_MESSAGE(m == expect_m, "q=", q);
    }
}

TEST_CASE("make_field rejects bad orders") {
    for (int q : {0, 1, 6, 10, 12, 36, 63}) {
        try {
            gf::make_field(q);
            FAIL("accepted q=", q);
        } catch (const Error& e) {
            CHECK(e.kind() == Errc::not_prime_power);
        }
    }
    try {
        gf::make_field(81);
        FAIL("accepted q=81");
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::cap_exceeded);
    }
}

TEST_CASE("small moduli") {
    CHECK(gf::make_field(4)->modulus() == std::vector<int>{1, 1, 1});
    CHECK(gf::make_field(8)->modulus() == std::vector<int>{1, 1, 0, 1});
    CHECK(gf::make_field(16)->modulus() == std::vector<int>{1, 1, 0, 0, 1});
    CHECK(gf::make_field(9)->modulus() == std::vector<int>{1, 0, 1});
    CHECK(gf::make_field(5)->modulus() == std::vector<int>{0, 1});
}

TEST_CASE("modulus is the smallest irreducible: all smaller monic candidates have a factor") {
    for (int q : kOrders) {
        auto f = gf::make_field(q);
        if (f->m() == 1) continue;
        const int p = f->p(), m = f->m();
        const auto& mod = f->modulus();
        REQUIRE(mod.size() == static_cast<std::size_t>(m + 1));
        CHECK(mod.back() == 1);
        // Rank of the modulus among monic degree-m polynomials, digit 0 least significant.
        long rank = 0, scale = 1;
        for (int i = 0; i < m; ++i) {
            rank += mod[i] * scale;
            scale *= p;
        }
        // Every smaller candidate is reducible: it splits as a product of two
        // monic polynomials of positive degree.
        auto reducible = [&](const std::vector<int>& c) {
            std::set<std::vector<int>> products;
            for (int d = 1; 2 * d <= m; ++d) {
                long na = 1, nb = 1;
                for (int i = 0; i < d; ++i) na *= p;
                for (int i = 0; i < m - d; ++i) nb *= p;
                for (long a = 0; a < na; ++a)
                    for (long b = 0; b < nb; ++b) {
                        std::vector<int> A(d + 1), B(m - d + 1), P(m + 1, 0);
                        long x = a;
                        for (int i = 0; i < d; ++i, x /= p) A[i] = x % p;
                        A[d] = 1;
                        x = b;
                        for (int i = 0; i < m - d; ++i, x /= p) B[i] = x % p;
                        B[m - d] = 1;
                        for (int i = 0; i <= d; ++i)
                            for (int j = 0; j <= m - d; ++j) P[i + j] = (P[i + j] + A[i] * B[j]) % p;
                        if (P == c) return true;
                    }
            }
            return false;
        };
        if (q > 32) continue;  // exhaustive factor check kept small
        for (long r = 0; r <= rank; ++r) {
            std::vector<int> c(m + 1);
            long x = r;
            for (int i = 0; i < m; ++i, x /= p) c[i] = x % p;
            c[m] = 1;
            CHECK_MESSAGE(reducible(c) == (r < rank), "q=", q, " candidate rank ", r);
        }
    }
}

TEST_CASE("table arithmetic agrees with polynomial arithmetic for every pair") {
    for (int q : kOrders) {
        auto f = gf::make_field(q);
        oracle::NaiveField nf(*f);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                REQUIRE(f->add(Element{a}, Element{b}).value() == nf.add(a, b));
                REQUIRE(f->sub(Element{a}, Element{b}).value() == nf.sub(a, b));
                REQUIRE(f->mul(Element{a}, Element{b}).value() == nf.mul(a, b));
            }
    }
}

TEST_CASE("field axioms, exhaustive for q <= 16") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        auto f = gf::make_field(q);
        const auto els = f->elements();
        for (Element a : els) {
            CHECK(f->add(a, f->zero()) == a);
            CHECK(f->mul(a, f->one()) == a);
            CHECK(f->add(a, f->neg(a)) == f->zero());
            if (!a.is_zero()) CHECK(f->mul(a, f->inv(a)) == f->one());
            for (Element b : els) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                if (!b.is_zero()) CHECK(f->mul(f->div(a, b), b) == a);
                for (Element c : els) {
                    REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                    REQUIRE(f->add(a, f->add(b, c)) == f->add(f->add(a, b), c));
                    REQUIRE(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                }
            }
        }
    }
}

TEST_CASE("generator is primitive and the smallest primitive element") {
    for (int q : kOrders) {
        auto f = gf::make_field(q);
        oracle::NaiveField nf(*f);
        auto order = [&](int a) {
            int x = a, k = 1;
            while (x != 1) {
                x = nf.mul(x, a);
                ++k;
            }
            return k;
        };
        const int g = f->generator().value();
        CHECK(order(g) == q - 1);
        for (int a = 1; a < g; ++a) CHECK(order(a) < q - 1);
        for (int d = 1; d < q - 1; ++d)
            if ((q - 1) % d == 0) CHECK(f->pow(f->generator(), d) != f->one());
        CHECK(f->pow(f->generator(), q - 1) == f->one());
    }
}

TEST_CASE("exp and log are inverse") {
    for (int q : kOrders) {
        auto f = gf::make_field(q);
        for (int a = 1; a < q; ++a) CHECK(f->exp(f->log(Element{a})) == Element{a});
        for (int e = 0; e < q - 1; ++e) CHECK(f->log(f->exp(e)) == e);
    }
}

TEST_CASE("pow handles zero and negative exponents") {
    auto f = gf::make_field(9);
    CHECK(f->pow(f->zero(), 0) == f->one());
    CHECK(f->pow(f->zero(), 3) == f->zero());
    for (int a = 1; a < 9; ++a) {
        CHECK(f->pow(Element{a}, -1) == f->inv(Element{a}));
        CHECK(f->pow(Element{a}, 8) == f->one());
        CHECK(f->mul(f->pow(Element{a}, -2), f->pow(Element{a}, 2)) == f->one());
    }
}

TEST_CASE("errors: division by zero and foreign elements") {
    auto f = gf::make_field(7);
    try {
        f->inv(f->zero());
        FAIL("inverted zero");
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::division_by_zero);
    }
    try {
        f->element(7);
        FAIL("accepted index 7 in GF(7)");
    } catch (const Error& e) {
        CHECK(e.kind() == Errc::field_mismatch);
    }
    CHECK_THROWS_AS(f->mul(Element{9}, Element{1}), Error);
}

TEST_CASE("element sums vanish in characteristic 2 beyond GF(2)") {
    for (int q : kOrders) {
        auto f = gf::make_field(q);
        oracle::NaiveField nf(*f);
        int s = 0, si = 0, s2 = 0;
        for (int a = 1; a < q; ++a) {
            s = nf.add(s, a);
            si = nf.add(si, nf.inv(a));
            s2 = nf.add(s2, nf.mul(a, a));
        }
        const auto sums = gf::element_sums(*f);
        CHECK(sums.sum.value() == s);
        CHECK(sums.inverse_sum.value() == si);
        CHECK(sums.square_sum.value() == s2);
        if (f->p() == 2 && f->m() >= 2) {
            CHECK(sums.sum.is_zero());
            CHECK(sums.inverse_sum.is_zero());
            CHECK(sums.square_sum.is_zero());
        }
    }
}

TEST_CASE("make_field is deterministic") {
    auto a = gf::make_field(27);
    auto b = gf::make_field(27);
    CHECK(*a == *b);
    CHECK(a->modulus() == b->modulus());
    for (int x = 0; x < 27; ++x)
        for (int y = 0; y < 27; ++y) CHECK(a->mul(Element{x}, Element{y}) == b->mul(Element{x}, Element{y}));
}
