#include <doctest.h>

#include "scfact/periodic.hpp"

using namespace scfact;

namespace {

// a_1 = a_2 = -1, a_3 = 2 (the 2cos(2*pi*n/3) cycle, 1-based phase)
CoefficientSequence cos_cycle(const RingDescriptor& ring) {
    return CoefficientSequence::periodic(
        {from_int(ring, -1), from_int(ring, -1), from_int(ring, 2)}, 1);
}

} // namespace

TEST_CASE("alpha/beta tables") {
    auto q = RingDescriptor::rationals();
    SUBCASE("example with b = 1") {
        auto t = alpha_beta(cos_cycle(q), CoefficientSequence::constant(ring_one(q)));
        CHECK(t.p == 3);
        long long alpha[] = {0, 1, -1, 2, 3}, beta[] = {1, 0, 1, -1, -1};
        for (int j = 0; j <= 4; ++j) {
            CHECK(values_equal(t.alpha[j], from_int(q, alpha[j])));
            CHECK(values_equal(t.beta[j], from_int(q, beta[j])));
        }
        auto quad = periodic_quadratic(t);
        CHECK(to_string(quad.a2) == "2");
        CHECK(to_string(quad.a1) == "-4");
        CHECK(to_string(quad.a0) == "1");
    }
    SUBCASE("example with b = -1") {
        auto t = alpha_beta(cos_cycle(q), CoefficientSequence::constant(from_int(q, -1)));
        long long alpha[] = {0, 1, -1, 0, 1}, beta[] = {1, 0, -1, 1, 3};
        for (int j = 0; j <= 4; ++j) {
            CHECK(values_equal(t.alpha[j], from_int(q, alpha[j])));
            CHECK(values_equal(t.beta[j], from_int(q, beta[j])));
        }
        auto quad = periodic_quadratic(t);
        CHECK(is_zero(quad.a2));
        CHECK(is_zero(quad.a1));
        CHECK(to_string(quad.a0) == "-3");
    }
    SUBCASE("constant coefficients reduce to r^2 - a r - b") {
        auto a = CoefficientSequence::constant(from_int(q, 5));
        auto b = CoefficientSequence::constant(from_int(q, 7));
        auto quad = periodic_quadratic(alpha_beta(a, b));
        CHECK(to_string(quad.a2) == "1");
        CHECK(to_string(quad.a1) == "-5");
        CHECK(to_string(quad.a0) == "-7");
    }
    SUBCASE("table columns solve the recurrence") {
        auto a = cos_cycle(q);
        auto b = CoefficientSequence::constant(ring_one(q));
        auto t = alpha_beta(a, b);
        for (long long j = 1; j <= t.p; ++j) {
            CHECK(values_equal(t.alpha[j + 1],
                               ring_add(ring_mul(a.eval(j), t.alpha[j]),
                                        ring_mul(b.eval(j), t.alpha[j - 1]))));
            CHECK(values_equal(t.beta[j + 1],
                               ring_add(ring_mul(a.eval(j), t.beta[j]),
                                        ring_mul(b.eval(j), t.beta[j - 1]))));
        }
    }
}

TEST_CASE("periodic eigensequence search over Q upgrades to QuadraticExt(2)") {
    auto q = RingDescriptor::rationals();
    auto search = find_periodic_eigenseq(cos_cycle(q),
                                         CoefficientSequence::constant(ring_one(q)));
    REQUIRE(search.extension.has_value());
    CHECK(search.extension->ext_d() == 2);
    REQUIRE(search.results.size() == 2);
    for (const auto& res : search.results) {
        CHECK(res.success);
        CHECK(res.closes);
        CHECK(res.unitary);
        CHECK(res.l_witness_ok);
    }
    // the root (2 - sqrt(2))/2 generates r_2 = 1 + sqrt(2), r_3 = -2 + sqrt(2)
    const PeriodicSearchResult* low = nullptr;
    for (const auto& res : search.results)
        if (to_string(res.r1) == "1-1/2*sqrt(2)") low = &res;
    REQUIRE(low != nullptr);
    CHECK(to_string(low->terms[1]) == "1+1*sqrt(2)");
    CHECK(to_string(low->terms[2]) == "-2+1*sqrt(2)");
}

TEST_CASE("periodic search in Z7 and the resulting factorization") {
    auto z7 = RingDescriptor::modular(7);
    auto a = cos_cycle(z7);
    auto b = CoefficientSequence::constant(ring_one(z7));
    auto search = find_periodic_eigenseq(a, b);
    REQUIRE(search.results.size() == 2);
    const PeriodicSearchResult* r3 = nullptr;
    for (const auto& res : search.results) {
        CHECK(res.success);
        if (res.r1.as_residue() == 3) r3 = &res;
    }
    REQUIRE(r3 != nullptr);
    CHECK(r3->terms[1].as_residue() == 4);
    CHECK(r3->terms[2].as_residue() == 1);

    // rho = -(r_1 r_2 r_3)^{-1} = 4
    RingValue prod = ring_mul(r3->terms[0], ring_mul(r3->terms[1], r3->terms[2]));
    CHECK(ring_neg(ring_inverse(prod)).as_residue() == 4);

    // a success result plugs straight into sc_factorize
    LinearRecurrence rec(z7, {a, b}, CoefficientSequence::constant(ring_zero(z7)),
                         {from_int(z7, 1), from_int(z7, 4)});
    auto alpha = Eigensequence::user_supplied(r3->terms, true);
    auto f = sc_factorize(rec, alpha);
    solve_via_factorization(f, 48);
}

TEST_CASE("degenerate quadratic yields no periodic eigensequence") {
    auto q = RingDescriptor::rationals();
    auto search = find_periodic_eigenseq(cos_cycle(q),
                                         CoefficientSequence::constant(from_int(q, -1)));
    CHECK(search.degenerate);
    CHECK(search.results.empty());
}

TEST_CASE("constant case reduces to eigenvalues") {
    auto q = RingDescriptor::rationals();
    // r^2 - r - 2 = (r - 2)(r + 1)
    auto search = find_periodic_eigenseq(CoefficientSequence::constant(from_int(q, 1)),
                                         CoefficientSequence::constant(from_int(q, 2)));
    REQUIRE(search.results.size() == 2);
    for (const auto& res : search.results) {
        CHECK(res.success);
        CHECK(res.terms.size() == 1);
    }
}

TEST_CASE("non-minimal declared periods are accepted") {
    auto q = RingDescriptor::rationals();
    // constant 1 declared with period 2: true eigensequence period divides 2
    auto a = CoefficientSequence::periodic({from_int(q, 1), from_int(q, 1)}, 1);
    auto b = CoefficientSequence::constant(from_int(q, 2));
    auto search = find_periodic_eigenseq(a, b);
    CHECK(search.table.p == 2);
    bool found2 = false;
    for (const auto& res : search.results)
        if (res.success && values_equal(res.r1, from_int(q, 2))) found2 = true;
    CHECK(found2);
}
