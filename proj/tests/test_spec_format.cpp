#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "hklab/errors.hpp"
#include "hklab/spec_format.hpp"

using namespace hklab;

TEST_CASE("parsing the quadric spec") {
    InputSpec spec = parse_spec("char 5; vars x y z; rel x^2+y^2+z^2; ideal J = y, z;");
    REQUIRE(spec.ring);
    CHECK(spec.ring->p == 5);
    CHECK(spec.ring->vars == std::vector<std::string>{"x", "y", "z"});
    REQUIRE(spec.relations.size() == 1);
    CHECK(spec.relations[0].term_count() == 3);
    REQUIRE(spec.ideals.size() == 1);
    CHECK(spec.ideals[0].first == "J");
    CHECK(spec.ideals[0].second.size() == 2);
}

TEST_CASE("composite characteristic is rejected with a position") {
    try {
        parse_spec("char 4; vars x;");
        FAIL("expected InvalidCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_characteristic);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("unknown variables are rejected with a position") {
    try {
        parse_spec("char 5; vars x y;\nideal J = y, w;");
        FAIL("expected UnknownVariable");
    } catch (const Error& e) {
        CHECK(e.code() == errc::unknown_variable);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_spec("char 5; vars x y\nrel x^2;");  // missing semicolon
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.code() == errc::syntax_error);
    }
    CHECK_THROWS_AS(parse_spec("rel x;"), Error);             // no ring yet
    CHECK_THROWS_AS(parse_spec("char 5; vars x; frob x;"), Error);  // unknown stmt
    CHECK_THROWS_AS(parse_spec("char 5; vars x; ideal J = x; ideal J = x;"), Error);
}

TEST_CASE("expression grammar: juxtaposition, parentheses, unary minus, powers") {
    InputSpec spec = parse_spec(
        "char 7; vars x y;"
        "rel 2x^2 - 3*x y + (x + y)^2;"
        "rel -x - -y;"
        "rel x(x+y);");
    Ring ring = spec.ring;
    Polynomial x = Polynomial::variable(ring, 0), y = Polynomial::variable(ring, 1);
    CHECK(spec.relations[0] ==
          x.pow(2).scaled(2) - (x * y).scaled(3) + (x + y).pow(2));
    CHECK(spec.relations[1] == -x + y);
    CHECK(spec.relations[2] == x * (x + y));
}

TEST_CASE("comments and whitespace are ignored") {
    InputSpec spec = parse_spec("# a quadric\nchar 5; # five\nvars x y z;\nrel x^2+y^2+z^2;\n");
    CHECK(spec.relations.size() == 1);
}

TEST_CASE("coefficients reduce modulo p") {
    InputSpec spec = parse_spec("char 5; vars x; rel 7x - 2x;");
    REQUIRE(spec.relations.size() == 1);
    CHECK(spec.relations[0] == Polynomial::zero(spec.ring));
}

TEST_CASE("render/parse round trip on a generated corpus") {
    std::vector<std::string> corpus = {
        "char 5; vars x y z; rel x^2+y^2+z^2; ideal J = y, z;",
        "char 5; vars x y z; ideal m = x, y, z;",
        "char 2; vars u v; rel u^2 + u v; ideal I = u;",
        "char 3; vars a b c d; rel a b - c d; ideal P = a, b; ideal Q = c, d;",
        "char 7; vars x; ideal J = x^2;",
        "char 11; vars x y; rel x^3 - y^2;",
        "char 5; vars x y; ideal A = x^2, y; ideal B = x, y;",
        "char 13; vars s t u; rel s^2 + 2t^2 + 3u^2; ideal J = t, u;",
        "char 5; vars x0 x1 x2 x3; rel x0^3+x1^3+x2^3+x3^3; ideal J = x1, x2, x3;",
        "char 3; vars x y; rel x^2 y + x y^2;",
        "char 2; vars x y z w; rel x y + z w; ideal J = x, z;",
        "char 7; vars p q; rel p^4 + q^4 + p q;",
        "char 5; vars x y; rel (x+y)^2 - x y;",
        "char 19; vars x y; ideal J = 17x + 2y;",
        "char 5; vars x y z; rel x^2+y^2+z^2; ideal J = y+z, y-z;",
        "char 101; vars x y; rel 100 x^2 + y;",
        "char 5; vars x y; rel x^2; rel y^3; ideal J = x y;",
        "char 3; vars a; ideal I = a^9;",
        "char 7; vars x y z; ideal J = x - y, y - z, z^2;",
        "char 5; vars x y; rel 4x^3 + 3y^3 + 2 x y;",
        "char 2; vars x y z; rel x^2 + y z; ideal J = y, z;",
    };
    REQUIRE(corpus.size() >= 20);
    for (const auto& text : corpus) {
        InputSpec first = parse_spec(text);
        std::string rendered = render_spec(first);
        InputSpec second = parse_spec(rendered);
        CHECK(first == second);
        // rendering is a fixed point
        CHECK(render_spec(second) == rendered);
    }
}

TEST_CASE("mangled inputs throw Error instead of crashing") {
    std::mt19937 rng(2718281);
    const std::string alphabet = "charvsideyl xyz0123456789;=+-*^(),#\n\t ";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 60);
    int parsed_ok = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        int n = len(rng);
        for (int i = 0; i < n; ++i) text.push_back(alphabet[pick(rng)]);
        try {
            parse_spec(text);
            ++parsed_ok;  // rare but legal (e.g. empty or comment-only input)
        } catch (const Error&) {
            // any structured error is acceptable
        }
    }
    CHECK(parsed_ok >= 0);

    // truncations of a valid spec must also fail cleanly
    std::string good = "char 5; vars x y z; rel x^2+y^2+z^2; ideal J = y, z;";
    for (size_t cut = 1; cut < good.size(); ++cut) {
        try {
            parse_spec(good.substr(0, cut));
        } catch (const Error&) {
        }
    }
}
