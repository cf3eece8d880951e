#include "ecode/io.hpp"

#include <stdexcept>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "support.hpp"

using namespace ecode;
using namespace ecode::test;

TEST_CASE("binary matrix round trip") {
    BitMatrix m = bmat({"1010", "0111"});
    std::string text = to_text(m);
    CHECK(text == "GF2 2 4\n1010\n0111\n");
    CHECK(parse_gf2(text) == m);

    BitMatrix empty(0, 3);
    CHECK(parse_gf2(to_text(empty)) == empty);
}

TEST_CASE("e-matrix round trip") {
    EMatrix m = emat({"k0tz", "zz0k"});
    std::string text = to_text(m);
    CHECK(text == "E 2 4\nk0tz\nzz0k\n");
    CHECK(parse_ematrix(text) == m);
}

TEST_CASE("whitespace and comments are tolerated") {
    EMatrix m = parse_ematrix(
        "# generator below\n"
        "\n"
        "E 2 3\n"
        "k 0 t\n"
        "\tz z\t0\n"
        "# trailing remark\n");
    CHECK(m == emat({"k0t", "zz0"}));

    BitMatrix b = parse_gf2("GF2 1 4\n1 0 1 1\n");
    CHECK(b == bmat({"1011"}));
}

TEST_CASE("parse errors carry the exact position") {
    // Symbol 'q' sits on line 3 at column 4.
    try {
        parse_ematrix("# c\nE 1 4\nk 0q t\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.col == 4);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    // Row too short: reported at the end of the offending row.
    CHECK_THROWS_AS(parse_ematrix("E 1 3\nk0\n"), ParseError);
    // Row too long.
    CHECK_THROWS_AS(parse_ematrix("E 1 2\nk0z\n"), ParseError);
    // Missing rows.
    CHECK_THROWS_AS(parse_ematrix("E 2 2\nk0\n"), ParseError);
    // Bad header.
    CHECK_THROWS_AS(parse_ematrix("E2 2\nkk\nkk\n"), ParseError);
    CHECK_THROWS_AS(parse_ematrix("GF2 1 2\n10\n"), ParseError);
    CHECK_THROWS_AS(parse_gf2("E 1 2\nk0\n"), ParseError);
    // Trailing content after the matrix.
    CHECK_THROWS_AS(parse_ematrix("E 1 2\nk0\nk0\n"), ParseError);

    try {
        parse_gf2("GF2 2 3\n101\n1x1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.col == 2);
    }
}

TEST_CASE("fixture parsing") {
    std::string text =
        "# two entries\n"
        "E 1 2\n"
        "kk\n"
        "expect n=2 k=1 d=2 l=1 table=l1.1\n"
        "\n"
        "E 2 4\n"
        "k0k0\n"
        "0k0k\n"
        "expect k=2 n=4 table=l2.1 l=2 d=2\n";
    auto entries = parse_fixture(text);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].generator == emat({"kk"}));
    CHECK(entries[0].n == 2);
    CHECK(entries[0].k == 1);
    CHECK(entries[0].d == 2);
    CHECK(entries[0].l == 1);
    CHECK(entries[0].table == "l1.1");
    CHECK(entries[0].line == 2);
    // Field order inside the expect line is free.
    CHECK(entries[1].n == 4);
    CHECK(entries[1].k == 2);
    CHECK(entries[1].d == 2);
    CHECK(entries[1].l == 2);
    CHECK(entries[1].table == "l2.1");

    CHECK(parse_fixture("# nothing\n").empty());

    // Missing field.
    CHECK_THROWS_AS(parse_fixture("E 1 2\nkk\nexpect n=2 k=1 d=2 l=1\n"), ParseError);
    // Matrix without its expect line.
    CHECK_THROWS_AS(parse_fixture("E 1 2\nkk\n"), ParseError);
    // Unknown key.
    CHECK_THROWS_AS(parse_fixture("E 1 2\nkk\nexpect n=2 k=1 d=2 l=1 table=x q=1\n"),
                    ParseError);
    // Non-numeric value.
    CHECK_THROWS_AS(parse_fixture("E 1 2\nkk\nexpect n=two k=1 d=2 l=1 table=x\n"),
                    ParseError);
}

TEST_CASE("summary json") {
    ECode c = ECode::from_generators(emat({"k0k0", "0k0k"}));
    CHECK(to_json(summarize(c)) ==
          R"({"d":2,"free":true,"hull_rank":2,"k":2,"n":4})");

    ECode zero = ECode::from_generators(EMatrix(0, 3));
    CHECK(to_json(summarize(zero)) ==
          R"({"d":null,"free":true,"hull_rank":0,"k":0,"n":3})");

    ECode nonfree = ECode::from_generators(emat({"z0"}));
    CHECK(to_json(summarize(nonfree)) ==
          R"({"d":1,"free":false,"hull_rank":null,"k":1,"n":2})");
}

TEST_CASE("read_file reports missing paths") {
    CHECK_THROWS_AS(read_file("/nonexistent/' no such file"), std::runtime_error);
}
