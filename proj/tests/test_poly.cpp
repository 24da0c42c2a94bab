#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detloc/polynomial.hpp"

using namespace detloc;

namespace {
const FieldId Q = FieldId::rationals();
Polynomial P(const std::string& s) { return Polynomial::parse(s, Q); }
}  // namespace

TEST_CASE("polynomial addition") {
    CHECK(P("vz - wy") + P("wy") == P("vz"));
    Polynomial f = P("3uv^2z - 1/2wy");
    CHECK(f + Polynomial::zero(Q) == f);
    Polynomial d3 = P("uy - vx");
    CHECK(d3 + (-d3) == Polynomial::zero(Q));
}

TEST_CASE("polynomial multiplication") {
    Polynomial d3 = P("uy - vx");
    CHECK(d3 * Polynomial::one(Q) == d3);
    // Telescoping at zeta = 2: (x - y)(x + y) = x^2 - y^2.
    CHECK(P("x - y") * P("x + y") == P("x^2 - y^2"));
    CHECK(P("u") * P("v") == P("uv"));
}

TEST_CASE("multidegrees from the grading table") {
    CHECK(multidegree_of(P("uy - vx")) == Multidegree{{1, 1, 0, 1}});
    CHECK(multidegree_of(P("vz - wy")) == Multidegree{{0, 1, 1, 1}});
    CHECK(multidegree_of(P("wx - uz")) == Multidegree{{1, 0, 1, 1}});
    CHECK_THROWS_AS(multidegree_of(P("u + x")), Inhomogeneous);
    CHECK_THROWS_AS(multidegree_of(Polynomial::zero(Q)), std::invalid_argument);
}

TEST_CASE("monomial orders") {
    Monomial u = Monomial::var(0), v = Monomial::var(1);
    CHECK(monomial_cmp(u, v, MonomialOrder::lex()) == std::strong_ordering::greater);
    CHECK(monomial_cmp(u.pow(2), u * v, MonomialOrder::degrevlex()) ==
          std::strong_ordering::greater);
    CHECK(monomial_cmp(u, u, MonomialOrder::degrevlex()) == std::strong_ordering::equal);
}

TEST_CASE("monomial order axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(0, 3);
    auto sample = [&] {
        Monomial m;
        for (int i = 0; i < kNumVars; ++i) m.exponent(i) = static_cast<int>(d(rng));
        return m;
    };
    for (auto order : {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                       MonomialOrder::degrevlex_last(3)}) {
        for (int i = 0; i < 300; ++i) {
            Monomial a = sample(), b = sample(), c = sample();
            if (!a.is_one())
                CHECK(monomial_cmp(Monomial::one(), a, order) == std::strong_ordering::less);
            auto ab = monomial_cmp(a, b, order);
            CHECK(monomial_cmp(a * c, b * c, order) == ab);
        }
    }
}

TEST_CASE("multidegree is additive on products") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(0, 2);
    std::uniform_int_distribution<int> pick(0, 2);
    const char* minors[3] = {"vz - wy", "wx - uz", "uy - vx"};
    for (int i = 0; i < 50; ++i) {
        Monomial m;
        for (int v = 0; v < kNumVars; ++v) m.exponent(v) = static_cast<int>(d(rng));
        Polynomial f = P(minors[pick(rng)]) * Polynomial(m, Q);
        Polynomial g = P(minors[pick(rng)]);
        CHECK(multidegree_of(f * g) == multidegree_of(f) + multidegree_of(g));
    }
}

TEST_CASE("minors are homogeneous of total degree two") {
    for (const char* s : {"vz - wy", "wx - uz", "uy - vx"}) {
        Polynomial f = P(s);
        CHECK(multidegree_of(f).total() == 2);
        CHECK(f.total_degree() == 2);
    }
}

TEST_CASE("parse and print round-trip") {
    for (const char* s : {"vz - wy", "3uv^2z - 1/2wy", "u^4 + 2uvz - 7/3x^2y^2z^2",
                          "1", "0", "-u"}) {
        Polynomial f = P(s);
        CHECK(Polynomial::parse(f.str(), Q) == f);
    }
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> e(0, 3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = Polynomial::zero(Q);
        for (int terms = 0; terms < 4; ++terms) {
            Monomial m;
            for (int v = 0; v < kNumVars; ++v) m.exponent(v) = e(rng);
            f = f + Polynomial(m, FieldElement(num(rng), den(rng), Q));
        }
        CHECK(Polynomial::parse(f.str(), Q) == f);
    }
    CHECK_THROWS_AS(P("1/0u"), std::invalid_argument);
    // Canonical printing: descending degrevlex order with explicit signs.
    CHECK(P("vz - wy").str() == "-wy + vz");
    CHECK(P("uy - vx").str() == "-vx + uy");
}

TEST_CASE("prime field polynomials collapse signs") {
    FieldId f2 = FieldId::prime(2);
    CHECK(Polynomial::parse("vz - wy", f2) == Polynomial::parse("vz + wy", f2));
}

TEST_CASE("monomial enumeration by multidegree") {
    auto ms = monomials_of_multidegree(Multidegree{{1, 1, 0, 1}});
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == Monomial::parse("vx"));
    CHECK(ms[1] == Monomial::parse("uy"));
    CHECK(monomials_of_multidegree(Multidegree{{-1, 0, 0, 0}}).empty());
    CHECK(monomials_of_multidegree(Multidegree{{0, 0, 0, 1}}).empty());
    auto big = monomials_of_multidegree(Multidegree{{2, 1, 0, 2}});
    for (const auto& m : big) CHECK(m.multidegree() == Multidegree{{2, 1, 0, 2}});
}

TEST_CASE("masks") {
    CHECK(mask_name(mask_parse("uxy")) == "uxy");
    CHECK(mask_product(mask_parse("vz")) == Monomial::parse("vz"));
    CHECK(masks_of_size(3).size() == 20);
    CHECK(masks_of_size(0).size() == 1);
}
