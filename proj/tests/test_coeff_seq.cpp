#include <doctest.h>

#include <random>

#include "scfact/coeff_seq.hpp"

using namespace scfact;

TEST_CASE("periodic evaluation with offset") {
    auto q = RingDescriptor::rationals();
    // a_1 = a_2 = -1, a_3 = 2 with 1-based phase: offset 1
    auto a = CoefficientSequence::periodic(
        {from_int(q, -1), from_int(q, -1), from_int(q, 2)}, 1);
    CHECK(to_string(a.eval(1)) == "-1");
    CHECK(to_string(a.eval(2)) == "-1");
    CHECK(to_string(a.eval(3)) == "2");
    CHECK(to_string(a.eval(4)) == "-1"); // a_4 = a_1

    // offset 0 (default): spec convention, n=3 lands on the first value
    auto a0 = CoefficientSequence::periodic(
        {from_int(q, -1), from_int(q, -1), from_int(q, 2)});
    CHECK(to_string(a0.eval(3)) == "-1");
}

TEST_CASE("constant and table sequences") {
    auto z = RingDescriptor::integers();
    auto c = CoefficientSequence::constant(from_int(z, 1));
    CHECK(to_string(c.eval(0)) == "1");
    CHECK(to_string(c.eval(1000)) == "1");

    auto t = CoefficientSequence::table({from_int(z, 1), from_int(z, 1), from_int(z, 1),
                                         from_int(z, 0)},
                                        from_int(z, 1));
    CHECK(to_string(t.eval(3)) == "0");
    CHECK(to_string(t.eval(4)) == "1");
}

TEST_CASE("formula evaluation") {
    auto z = RingDescriptor::integers();
    auto f = CoefficientSequence::formula("2*n", z);
    CHECK(to_string(f.eval(5)) == "10");

    auto q = RingDescriptor::rationals();
    auto inv = CoefficientSequence::formula("1/n", q);
    CHECK(to_string(inv.eval(4)) == "1/4");

    auto rf = RingDescriptor::real_float();
    auto trig = CoefficientSequence::formula("2*cos(2*pi*n/3)", rf);
    CHECK(trig.eval(3).as_real() == doctest::Approx(2.0));
    CHECK(trig.eval(1).as_real() == doctest::Approx(-1.0));
}

TEST_CASE("parse errors carry offsets") {
    auto rf = RingDescriptor::real_float();
    try {
        parse_expression("cos(n", rf);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
    }
    CHECK_THROWS_AS(parse_expression("foo+1", rf), ParseError);
    auto z = RingDescriptor::integers();
    CHECK_THROWS_AS(parse_expression("cos(n)", z), TypeError);
    CHECK_THROWS_AS(parse_expression("pi", z), TypeError);
    CHECK_THROWS_AS(parse_expression("n^(1/2)", z), ParseError);
}

TEST_CASE("precedence and associativity") {
    auto z = RingDescriptor::integers();
    auto e = parse_expression("2+3*4", z);
    CHECK(to_string(eval_expression(e, z, 0)) == "14");
    CHECK(to_string(eval_expression(parse_expression("10-3-2", z), z, 0)) == "5");
    CHECK(to_string(eval_expression(parse_expression("-2^2", z), z, 0)) == "-4");
    CHECK(to_string(eval_expression(parse_expression("(10-4)*2", z), z, 0)) == "12");
    auto q = RingDescriptor::rationals();
    CHECK(to_string(eval_expression(parse_expression("12/3/2", q), q, 0)) == "2");
}

TEST_CASE("pretty-print round trip") {
    auto rf = RingDescriptor::real_float();
    for (const char* text : {"2*cos(2*pi*n/3)", "1/n", "n^2-3*n+1", "-(n+1)*(n-1)",
                             "sqrt(n+1)", "2.5*n", "sin(pi*n)/2", "3/4*n"}) {
        auto ast = parse_expression(text, rf);
        auto printed = pretty_print(ast);
        auto reparsed = parse_expression(printed, rf);
        CHECK(ast_equal(ast, reparsed));
        CHECK(pretty_print(reparsed) == printed);
    }
}

TEST_CASE("periodicity property") {
    std::mt19937 rng(42);
    auto z7 = RingDescriptor::modular(7);
    std::vector<RingValue> vals;
    for (int i = 0; i < 5; ++i) vals.push_back(from_int(z7, rng() % 7));
    auto s = CoefficientSequence::periodic(vals, 2);
    for (int i = 0; i < 60; ++i) {
        long long n = rng() % 1000;
        CHECK(values_equal(s.eval(n), s.eval(n + 5)));
    }
}

TEST_CASE("sampled formula evaluates pointwise in s") {
    auto sd = RingDescriptor::sampled({0.5, 1.0, 2.0});
    auto f = CoefficientSequence::formula("2*n/s", sd);
    auto v = f.eval(3);
    CHECK(v.as_samples()[0] == doctest::Approx(12.0));
    CHECK(v.as_samples()[1] == doctest::Approx(6.0));
    CHECK(v.as_samples()[2] == doctest::Approx(3.0));
    CHECK_THROWS_AS(parse_expression("s+1", RingDescriptor::real_float()), TypeError);
}
