#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detloc/matrix.hpp"

using namespace detloc;

namespace {
const FieldId Q = FieldId::rationals();

ExactMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
    size_t r = rows.size(), c = rows.begin()->size();
    ExactMatrix m(r, c, Q);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long v : row) m.at(i, j++) = FieldElement(v, Q);
        ++i;
    }
    return m;
}
}  // namespace

TEST_CASE("rref and rank") {
    ExactMatrix m = make({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(m.rank() == 2);
    auto pivots = m.rref();
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 1);
    // RREF is canonical: reducing twice changes nothing.
    ExactMatrix again = m;
    again.rref();
    CHECK(again == m);
}

TEST_CASE("kernel basis") {
    ExactMatrix m = make({{1, 2, 3}, {2, 4, 6}});
    auto kb = m.kernel_basis();
    REQUIRE(kb.size() == 2);
    for (const auto& v : kb) {
        for (size_t r = 0; r < m.rows(); ++r) {
            FieldElement acc = FieldElement::zero(Q);
            for (size_t c = 0; c < m.cols(); ++c) acc = acc + m.at(r, c) * v[c];
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("column space membership") {
    ExactMatrix m = make({{1, 0}, {0, 1}, {1, 1}});
    CHECK(in_column_space(m, {FieldElement(1, Q), FieldElement(2, Q), FieldElement(3, Q)}));
    CHECK_FALSE(in_column_space(m, {FieldElement(1, Q), FieldElement(2, Q), FieldElement(4, Q)}));
}

TEST_CASE("exact linear solves") {
    ExactMatrix m = make({{1, 2}, {3, 4}});
    auto x = solve(m, {FieldElement(5, Q), FieldElement(6, Q)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == FieldElement(-4, Q));
    CHECK((*x)[1] == FieldElement(9, 2, Q));
    // Underdetermined: the canonical solution pins free variables to zero.
    ExactMatrix wide = make({{1, 1, 1}});
    auto y = solve(wide, {FieldElement(3, Q)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == FieldElement(3, Q));
    CHECK((*y)[1].is_zero());
    // Inconsistent.
    ExactMatrix tall = make({{1, 0}, {1, 0}});
    CHECK_FALSE(solve(tall, {FieldElement(1, Q), FieldElement(2, Q)}).has_value());
}

TEST_CASE("exact rational elimination has no drift") {
    // A classically ill-conditioned pattern: Hilbert-like matrix.
    ExactMatrix m(4, 4, Q);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) m.at(i, j) = FieldElement(1, static_cast<long>(i + j + 1), Q);
    CHECK(m.rank() == 4);
}

TEST_CASE("prime field elimination") {
    FieldId f2 = FieldId::prime(2);
    ExactMatrix m(2, 2, f2);
    m.at(0, 0) = FieldElement(1, f2);
    m.at(0, 1) = FieldElement(1, f2);
    m.at(1, 0) = FieldElement(1, f2);
    m.at(1, 1) = FieldElement(1, f2);
    CHECK(m.rank() == 1);
}
