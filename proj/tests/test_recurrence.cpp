#include <doctest.h>

#include "scfact/recurrence.hpp"

using namespace scfact;

namespace {

LinearRecurrence fibonacci(const RingDescriptor& ring, long long x0, long long x1) {
    auto one = CoefficientSequence::constant(ring_one(ring));
    return LinearRecurrence(ring, {one, one},
                            CoefficientSequence::constant(ring_zero(ring)),
                            {from_int(ring, x0), from_int(ring, x1)});
}

} // namespace

TEST_CASE("fibonacci iteration") {
    auto z = RingDescriptor::integers();
    auto s = iterate(fibonacci(z, 0, 1), 10);
    CHECK(to_string(s.term(10)) == "55");
    CHECK(to_string(s.term(2)) == "1");
    CHECK(to_string(s.term(9)) == "34");
}

TEST_CASE("periodic coefficient recurrence x_{3j} = x_0") {
    // x_{n+1} = a_n x_n - x_{n-1}, a periodic (-1,-1,2) with 1-based phase
    auto q = RingDescriptor::rationals();
    auto a = CoefficientSequence::periodic({from_int(q, -1), from_int(q, -1), from_int(q, 2)}, 1);
    auto b = CoefficientSequence::constant(from_int(q, -1));
    LinearRecurrence rec(q, {a, b}, CoefficientSequence::constant(ring_zero(q)),
                         {from_int(q, 0), from_int(q, 1)});
    auto s = iterate(rec, 60);
    for (long long j = 0; j <= 20; ++j) CHECK(values_equal(s.term(3 * j), s.term(0)));
}

TEST_CASE("chebyshev recurrence on a sampled grid") {
    auto sd = RingDescriptor::sampled({0.5});
    auto a0 = CoefficientSequence::formula("2*s", sd);
    auto a1 = CoefficientSequence::constant(from_int(sd, -1));
    LinearRecurrence rec(sd, {a0, a1}, CoefficientSequence::constant(ring_zero(sd)),
                         {from_int(sd, 1), RingValue::make_samples(sd, {0.5})});
    auto s = iterate(rec, 5);
    CHECK(s.term(5).as_samples()[0] == doctest::Approx(0.5)); // T_5(0.5)
}

TEST_CASE("unitary solution detection") {
    auto z = RingDescriptor::integers();
    auto check0 = is_unitary_solution(fibonacci(z, 0, 1), 10);
    CHECK_FALSE(check0.unitary);
    CHECK(check0.fails_at == 0);
    CHECK(check0.classification == ElementClass::Zero);

    // mod 11 from (1,1): F_10 = 55 = 0 mod 11
    auto z11 = RingDescriptor::modular(11);
    auto check11 = is_unitary_solution(fibonacci(z11, 1, 1), 50);
    CHECK_FALSE(check11.unitary);
    CHECK(check11.fails_at == 9); // x_9 = 55 with x_0 = x_1 = 1

    // geometric solutions with ratio a root of r^2 = r + 1 mod 11 stay unitary
    for (long long ratio : {8, 4}) {
        std::vector<RingValue> init{from_int(z11, 1), from_int(z11, ratio)};
        auto rec = fibonacci(z11, 1, 1).with_initials(init);
        auto chk = is_unitary_solution(rec, 50);
        CHECK(chk.unitary);
    }
}

TEST_CASE("bessel recurrence produces positive unitary solutions") {
    auto sd = RingDescriptor::sampled({0.5, 1.0, 2.0});
    auto a0 = CoefficientSequence::formula("2*n/s", sd);
    auto a1 = CoefficientSequence::constant(ring_one(sd));
    LinearRecurrence rec(sd, {a0, a1}, CoefficientSequence::constant(ring_zero(sd)),
                         {ring_one(sd), ring_one(sd)});
    CHECK(is_unitary_solution(rec, 10).unitary);

    auto u = positive_unitary_solution(rec, 10);
    // u_2(s) = 2/s + 1: at s=1 -> 3; u_3(1) = 13; u_4(2) = 17
    CHECK(u.term(2).as_samples()[1] == doctest::Approx(3.0));
    CHECK(u.term(3).as_samples()[1] == doctest::Approx(13.0));
    CHECK(u.term(2).as_samples()[2] == doctest::Approx(2.0));
    CHECK(u.term(3).as_samples()[2] == doctest::Approx(5.0));
    CHECK(u.term(4).as_samples()[2] == doctest::Approx(17.0));
}

TEST_CASE("positive solution hypothesis violations") {
    auto rf = RingDescriptor::real_float();
    auto zero = CoefficientSequence::constant(ring_zero(rf));
    LinearRecurrence rec(rf, {zero, zero}, zero, {ring_one(rf), ring_one(rf)});
    CHECK_THROWS_AS(positive_unitary_solution(rec, 5), HypothesisViolated);

    auto neg = CoefficientSequence::constant(from_int(rf, -1));
    LinearRecurrence rec2(rf, {neg, neg}, zero, {ring_one(rf), ring_one(rf)});
    CHECK_THROWS_AS(positive_unitary_solution(rec2, 5), HypothesisViolated);
}

TEST_CASE("nonrecursive enumeration in Z8") {
    auto z8 = RingDescriptor::modular(8);
    auto res = enumerate_nonrecursive(from_int(z8, 4), from_int(z8, 2), 4);
    CHECK_FALSE(res.recursive_multiplier.has_value());
    // 4t + 2u = 0 mod 8: u even -> t in {0,4} shifted... verify {0,4}^4 subset
    std::size_t in_04 = 0;
    for (const auto& seq : res.sequences) {
        bool all04 = true;
        for (const auto& t : seq) {
            long long v = t.as_residue();
            all04 &= (v == 0 || v == 4);
        }
        in_04 += all04;
        // every branch satisfies the equation
        for (std::size_t n = 0; n + 1 < seq.size(); ++n)
            CHECK(is_zero(ring_add(ring_mul(from_int(z8, 4), seq[n + 1]),
                                   ring_mul(from_int(z8, 2), seq[n]))));
    }
    CHECK(in_04 == 16); // all of {0,4}^4 appears
}

TEST_CASE("nonrecursive enumeration collapses in Z9") {
    auto z9 = RingDescriptor::modular(9);
    auto res = enumerate_nonrecursive(from_int(z9, 4), from_int(z9, 2), 5,
                                      from_int(z9, 1));
    REQUIRE(res.recursive_multiplier.has_value());
    // multiplier -2 * 7 = -14 = 4 mod 9
    CHECK(res.recursive_multiplier->as_residue() == 4);
    REQUIRE(res.sequences.size() == 1);
    CHECK(res.sequences[0][1].as_residue() == 4);
    CHECK(res.sequences[0][2].as_residue() == 7);
}

TEST_CASE("nonrecursive with c=1 d=0 forces zero tail") {
    auto z8 = RingDescriptor::modular(8);
    auto res = enumerate_nonrecursive(ring_one(z8), ring_zero(z8), 4, from_int(z8, 5));
    REQUIRE(res.sequences.size() == 1);
    CHECK(res.sequences[0][0].as_residue() == 5);
    for (std::size_t n = 1; n < 4; ++n) CHECK(is_zero(res.sequences[0][n]));
}

TEST_CASE("cofactor reconstruction of the Z8 tables") {
    auto z8 = RingDescriptor::modular(8);
    auto mk = [&](std::initializer_list<long long> vals) {
        std::vector<RingValue> out;
        for (long long v : vals) out.push_back(from_int(z8, v));
        return out;
    };
    auto alpha = [&](long long) { return from_int(z8, -1); };

    auto t1 = mk({4, 4, 4, 4, 4, 0, 0, 0, 0, 0, 4, 4, 4, 4, 4});
    auto x1 = cofactor_reconstruct(t1, alpha, from_int(z8, 1), 15);
    auto expect1 = mk({1, 3, 1, 3, 1, 3, 5, 3, 5, 3, 5, 7, 5, 7, 5, 7});
    REQUIRE(x1.size() == expect1.size());
    for (std::size_t i = 0; i < x1.size(); ++i) CHECK(values_equal(x1[i], expect1[i]));

    auto t2 = mk({4, 0, 4, 0, 0, 4, 0, 0, 0, 4, 0, 0, 0, 0, 4});
    auto x2 = cofactor_reconstruct(t2, alpha, from_int(z8, 1), 15);
    auto expect2 = mk({1, 3, 5, 7, 1, 7, 5, 3, 5, 3, 1, 7, 1, 7, 1, 3});
    REQUIRE(x2.size() == expect2.size());
    for (std::size_t i = 0; i < x2.size(); ++i) CHECK(values_equal(x2[i], expect2[i]));
}

TEST_CASE("solution stream residual soundness") {
    auto q = RingDescriptor::rationals();
    auto a0 = CoefficientSequence::formula("1/(n+1)", q);
    auto a1 = CoefficientSequence::constant(ring_one(q));
    LinearRecurrence rec(q, {a0, a1}, CoefficientSequence::constant(from_int(q, 3)),
                         {from_int(q, 1), from_int(q, 2)});
    auto s = iterate(rec, 40);
    for (long long n = 1; n < 40; ++n) {
        RingValue rhs = ring_add(
            ring_add(ring_mul(a0.eval(n), s.term(n)), ring_mul(a1.eval(n), s.term(n - 1))),
            from_int(q, 3));
        CHECK(values_equal(s.term(n + 1), rhs));
    }
}

TEST_CASE("finite ring solutions are eventually periodic") {
    auto z7 = RingDescriptor::modular(7);
    auto a = CoefficientSequence::periodic({from_int(z7, -1), from_int(z7, -1), from_int(z7, 2)},
                                           1);
    LinearRecurrence rec(z7, {a, CoefficientSequence::constant(from_int(z7, -1))},
                         CoefficientSequence::constant(ring_one(z7)),
                         {from_int(z7, 1), from_int(z7, 2)});
    auto s = iterate(rec, 200);
    // state (x_n, x_{n+1}, phase) has at most 7*7*3 = 147 values; find the period
    bool periodic = false;
    for (long long p = 3; p <= 147 && !periodic; p += 3) {
        periodic = true;
        for (long long n = 150; n < 190; ++n)
            periodic &= values_equal(s.term(n), s.term(n + p));
    }
    CHECK(periodic);
}
