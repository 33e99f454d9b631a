#include <doctest.h>

#include "scfact/json_io.hpp"

using namespace scfact;

TEST_CASE("ring descriptors round-trip") {
    std::vector<RingDescriptor> rings = {
        RingDescriptor::integers(),
        RingDescriptor::rationals(),
        RingDescriptor::modular(8),
        RingDescriptor::quadratic_ext(2),
        RingDescriptor::boolean_set(4),
        RingDescriptor::sampled({0.5, 1.0, 2.0}, 1e-12),
        RingDescriptor::real_float(1e-10),
    };
    for (const auto& r : rings) CHECK(ring_from_json(ring_to_json(r)) == r);

    CHECK(ring_to_json(RingDescriptor::modular(8)).dump() == R"({"kind":"modular","m":8})");
    CHECK(ring_to_json(RingDescriptor::quadratic_ext(2)).dump() ==
          R"({"kind":"quadratic_ext","d":2})");
    CHECK(ring_from_json(parse_json_text(R"({"kind":"sampled","grid":[0.5,1.0,2.0]})"))
              .tolerance() == 1e-12);
    CHECK_THROWS_AS(ring_from_json(parse_json_text(R"({"kind":"modular","m":8,"x":1})")),
                    ParseError);
    CHECK_THROWS_AS(ring_from_json(parse_json_text(R"({"kind":"galois"})")), ParseError);
}

TEST_CASE("values round-trip with the documented encodings") {
    SUBCASE("rationals as canonical strings") {
        auto q = RingDescriptor::rationals();
        auto v = RingValue::make_rational(q, BigRat(3, 2));
        CHECK(value_to_json(v) == Json("3/2"));
        CHECK(values_equal(value_from_json(value_to_json(v), q), v));
        CHECK(values_equal(value_from_json(Json(7), q), from_int(q, 7)));
    }
    SUBCASE("quadratic extension as p/q objects") {
        auto e2 = RingDescriptor::quadratic_ext(2);
        auto v = RingValue::make_quadratic(e2, BigRat(1), BigRat(1));
        CHECK(value_to_json(v).dump() == R"({"p":"1","q":"1"})");
        CHECK(values_equal(value_from_json(value_to_json(v), e2), v));
    }
    SUBCASE("boolean sets as sorted element lists") {
        auto bs = RingDescriptor::boolean_set(4);
        auto v = RingValue::make_boolean(bs, 0b0101);
        CHECK(value_to_json(v).dump() == "[1,3]"); // matches to_string's "{1,3}"
        CHECK(values_equal(value_from_json(value_to_json(v), bs), v));
        CHECK_THROWS_AS(value_from_json(parse_json_text("[5]"), bs), ParseError);
        CHECK_THROWS_AS(value_from_json(parse_json_text("[0]"), bs), ParseError);
    }
    SUBCASE("samples as arrays, residues and integers as numbers") {
        auto grid = RingDescriptor::sampled({0.5, 2.0});
        auto v = RingValue::make_samples(grid, {1.5, -3.0});
        CHECK(value_to_json(v).dump() == "[1.5,-3.0]");
        CHECK(values_equal(value_from_json(value_to_json(v), grid), v));
        auto z7 = RingDescriptor::modular(7);
        CHECK(value_from_json(Json(10), z7).as_residue() == 3);
        auto z = RingDescriptor::integers();
        BigInt big = BigInt("123456789012345678901234567890");
        auto big_v = RingValue::make_integer(z, big);
        CHECK(values_equal(value_from_json(value_to_json(big_v), z), big_v));
        CHECK_THROWS_AS(value_from_json(Json("3/2"), z), ParseError);
    }
}

TEST_CASE("coefficient sequences round-trip") {
    auto q = RingDescriptor::rationals();
    SUBCASE("periodic with offset") {
        auto s = CoefficientSequence::periodic({from_int(q, -1), from_int(q, -1), from_int(q, 2)}, 1);
        Json j = sequence_to_json(s);
        CHECK(j["kind"] == "periodic");
        CHECK(j["period"] == 3);
        CHECK(j["offset"] == 1);
        auto back = sequence_from_json(j, q);
        for (long long n = 1; n <= 9; ++n) CHECK(values_equal(back.eval(n), s.eval(n)));
    }
    SUBCASE("formula text survives") {
        auto s = CoefficientSequence::formula("2*n+1/2", q);
        auto back = sequence_from_json(sequence_to_json(s), q);
        for (long long n = 0; n <= 5; ++n) CHECK(values_equal(back.eval(n), s.eval(n)));
    }
    SUBCASE("callback sequences materialize as tables") {
        auto s = CoefficientSequence::callback(q, [&](long long n) { return from_int(q, n * n); });
        Json j = sequence_to_json(s, 8);
        CHECK(j["kind"] == "table");
        auto back = sequence_from_json(j, q);
        for (long long n = 0; n <= 8; ++n) CHECK(values_equal(back.eval(n), s.eval(n)));
    }
    SUBCASE("schema violations carry a path") {
        CHECK_THROWS_WITH_AS(sequence_from_json(parse_json_text(R"({"kind":"periodic"})"), q),
                             doctest::Contains("sequence"), ParseError);
        CHECK_THROWS_AS(
            sequence_from_json(
                parse_json_text(R"({"kind":"periodic","period":2,"values":[1,2,3]})"), q),
            ParseError);
        CHECK_THROWS_AS(
            sequence_from_json(parse_json_text(R"({"kind":"constant","value":1,"x":2})"), q),
            ParseError);
    }
}

TEST_CASE("recurrences round-trip and validate") {
    auto z7 = RingDescriptor::modular(7);
    LinearRecurrence rec(z7,
                         {CoefficientSequence::periodic(
                              {from_int(z7, -1), from_int(z7, -1), from_int(z7, 2)}, 1),
                          CoefficientSequence::constant(ring_one(z7))},
                         CoefficientSequence::constant(ring_zero(z7)),
                         {from_int(z7, 1), from_int(z7, 4)}, 1);
    Json j = recurrence_to_json(rec);
    auto back = recurrence_from_json(j);
    CHECK(back.ring() == z7);
    CHECK(back.order() == 2);
    CHECK(back.start_index() == 1);
    auto a = iterate(rec, 30), b = iterate(back, 30);
    for (long long n = 0; n <= 30; ++n) CHECK(values_equal(a.term(n), b.term(n)));

    SUBCASE("missing forcing defaults to zero") {
        Json hom = j;
        hom.erase("forcing");
        CHECK(recurrence_from_json(hom).forcing().is_constant_zero());
    }
    SUBCASE("wrong initial count is rejected") {
        Json bad = j;
        bad["initials"] = Json::array({1});
        CHECK_THROWS_WITH_AS(recurrence_from_json(bad), doctest::Contains("initial"),
                             ParseError);
    }
    SUBCASE("order must match the coefficient count") {
        Json bad = j;
        bad["order"] = 3;
        CHECK_THROWS_AS(recurrence_from_json(bad), ParseError);
    }
}

TEST_CASE("factorizations round-trip and re-verify") {
    auto q = RingDescriptor::rationals();
    // Fibonacci with the golden-ratio eigensequence seeded from 1
    LinearRecurrence fib(q,
                         {CoefficientSequence::constant(ring_one(q)),
                          CoefficientSequence::constant(ring_one(q))},
                         CoefficientSequence::constant(ring_zero(q)),
                         {ring_zero(q), ring_one(q)});
    auto alpha = Eigensequence::from_seed(fib, {ring_one(q)});
    auto f = sc_factorize(fib, alpha);
    Json j = factorization_to_json(f, 24);
    auto back = factorization_from_json(j);
    auto x = solve_via_factorization(back, 20);
    CHECK(values_equal(x[10], from_int(q, 55)));

    SUBCASE("tampered alpha terms fail re-verification") {
        Json bad = j;
        bad["alpha"]["terms"][2] = "5";
        CHECK_THROWS_AS(solve_via_factorization(factorization_from_json(bad), 20),
                        NotAnEigensequence);
    }
}

TEST_CASE("periodic search reports serialize") {
    auto z7 = RingDescriptor::modular(7);
    auto a = CoefficientSequence::periodic(
        {from_int(z7, -1), from_int(z7, -1), from_int(z7, 2)}, 1);
    auto b = CoefficientSequence::constant(ring_one(z7));
    Json j = periodic_search_to_json(find_periodic_eigenseq(a, b));
    CHECK(j["degenerate"] == false);
    REQUIRE(j["results"].size() == 2);
    CHECK(j["results"][0]["success"] == true);
    CHECK(j["results"][0]["terms"].size() == 3);
    CHECK(j["results"][0]["l_witness_ok"] == true);
}

TEST_CASE("CSV and JSON term streams") {
    auto q = RingDescriptor::rationals();
    std::vector<RingValue> terms = {ring_zero(q), ring_one(q),
                                    RingValue::make_rational(q, BigRat(3, 2))};
    CHECK(terms_to_csv(terms) == "n,value\n0,0\n1,1\n2,3/2\n");
    CHECK(terms_to_csv(terms, 5) == "n,value\n5,0\n6,1\n7,3/2\n");
    CHECK(terms_to_json(terms).dump() == R"(["0","1","3/2"])");
}

TEST_CASE("malformed JSON reports the byte offset") {
    try {
        parse_json_text("{\"a\": }");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() > 0);
    }
}
