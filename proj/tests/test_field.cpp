#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "detloc/field.hpp"

using namespace detloc;

TEST_CASE("rational arithmetic is exact and normalized") {
    FieldId q = FieldId::rationals();
    CHECK(FieldElement(1, 2, q) + FieldElement(1, 3, q) == FieldElement(5, 6, q));
    CHECK(FieldElement(2, 3, q) * FieldElement(3, 2, q) == FieldElement::one(q));
    FieldElement a(7, 13, q);
    CHECK(a + FieldElement::zero(q) == a);
    CHECK(a * FieldElement::one(q) == a);
    // lowest terms, positive denominator
    FieldElement b(2, -4, q);
    CHECK(b == FieldElement(-1, 2, q));
    CHECK(b.value().get_den() == 2);
    CHECK(FieldElement(1, 3, q).inverse() == FieldElement(3, q));
}

TEST_CASE("prime field arithmetic") {
    FieldId f5 = FieldId::prime(5);
    CHECK(FieldElement(3, f5) + FieldElement(4, f5) == FieldElement(2, f5));
    FieldId f7 = FieldId::prime(7);
    CHECK(FieldElement(2, f7) * FieldElement(4, f7) == FieldElement(1, f7));
    CHECK(FieldElement(2, f5).inverse() == FieldElement(3, f5));
    CHECK(FieldElement(-1, f5) == FieldElement(4, f5));
}

TEST_CASE("inverse failures") {
    FieldId q = FieldId::rationals();
    CHECK_THROWS_AS(FieldElement::zero(q).inverse(), ZeroInverse);
    FieldId f2 = FieldId::prime(2);
    CHECK_THROWS_AS(FieldElement(4, f2).inverse(), CharacteristicObstruction);
}

TEST_CASE("field mismatch is rejected") {
    FieldId q = FieldId::rationals();
    FieldId f5 = FieldId::prime(5);
    CHECK_THROWS_AS(FieldElement(1, q) + FieldElement(1, f5), FieldMismatch);
}

TEST_CASE("characteristic must be prime") {
    CHECK_THROWS_AS(FieldId::prime(1), BadField);
    CHECK_THROWS_AS(FieldId::prime(4), BadField);
    CHECK_THROWS_AS(FieldId::prime(9), BadField);
    for (unsigned p : {2u, 3u, 5u, 7u}) CHECK(FieldId::prime(p).characteristic() == p);
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> d(-40, 40);
    auto sample = [&](FieldId f) {
        if (f.is_rational()) {
            long den = 0;
            while (den == 0) den = d(rng);
            return FieldElement(d(rng), den, f);
        }
        return FieldElement(d(rng), f);
    };
    for (FieldId f : {FieldId::rationals(), FieldId::prime(5), FieldId::prime(7)}) {
        for (int i = 0; i < 200; ++i) {
            FieldElement a = sample(f), b = sample(f), c = sample(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == FieldElement::zero(f));
            if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement::one(f));
        }
    }
}

TEST_CASE("inverses of the series coefficients 1..t-1") {
    for (int t : {2, 3, 4, 5}) {
        FieldId q = FieldId::rationals();
        for (int m = 1; m <= t - 1; ++m) CHECK_NOTHROW(FieldElement(m, q).inverse());
        for (unsigned p : {2u, 3u}) {
            FieldId fp = FieldId::prime(p);
            for (int m = 1; m <= t - 1; ++m) {
                if (m % p == 0)
                    CHECK_THROWS_AS(FieldElement(m, fp).inverse(), CharacteristicObstruction);
                else
                    CHECK_NOTHROW(FieldElement(m, fp).inverse());
            }
        }
    }
}

TEST_CASE("scalar parsing") {
    FieldId q = FieldId::rationals();
    CHECK(FieldElement::parse("3/4", q) == FieldElement(3, 4, q));
    CHECK(FieldElement::parse("-2", q) == FieldElement(-2, q));
    FieldId f5 = FieldId::prime(5);
    CHECK(FieldElement::parse("9", f5) == FieldElement(4, f5));
}
