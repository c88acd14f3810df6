#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ellred/batch.hpp"
#include "ellred/expr.hpp"
#include "testutil.hpp"

using namespace ellred;
using ellred::testing::Rng;

TEST_CASE("expression parsing: precedence and associativity") {
    auto qt = BaseField::t_adic_over_q();
    CHECK(parse_element("4/27", qt) == qt->from_rational(Rational(4, 27)));
    CHECK(parse_element("1-2-3", qt) == qt->from_int(-4));
    CHECK(parse_element("12/2/3", qt) == qt->from_int(2));
    CHECK(parse_element("2+3*4", qt) == qt->from_int(14));
    CHECK(parse_element("-2^2", qt) == qt->from_int(-4));
    CHECK(parse_element("2*t^2", qt) == qt->from_int(2) * qt->t() * qt->t());
    CHECK(parse_element("t^-2", qt) == qt->t().pow(-2));
    CHECK(parse_element("(3*t^2-1)/(3*t^4)", qt) ==
          (qt->from_int(3) * qt->t().pow(2) - qt->one()) / (qt->from_int(3) * qt->t().pow(4)));
}

TEST_CASE("expression parsing: errors carry positions") {
    auto qt = BaseField::t_adic_over_q();
    auto q5 = BaseField::p_adic(5);
    CHECK_THROWS_AS(parse_element("t/(t-t)", qt), ParseError);
    CHECK_THROWS_AS(parse_element("1+", qt), ParseError);
    CHECK_THROWS_AS(parse_element("(1", qt), ParseError);
    CHECK_THROWS_AS(parse_element("1+%", qt), ParseError);
    CHECK_THROWS_AS(parse_element("t+1", q5), ParseError);      // t not in Q
    CHECK_THROWS_AS(parse_element("X+1", qt), ParseError);      // X not a field element
    CHECK_THROWS_AS(parse_element("2^t", qt), ParseError);      // exponent must be a literal
    try {
        parse_element("1+%", qt);
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("generator parsing") {
    auto qt = BaseField::t_adic_over_q();
    AffineGenerator g = parse_generator("t^-1*X", qt);
    CHECK(g.e == qt->t().pow(-1));
    CHECK(g.f == qt->zero());
    AffineGenerator g2 = parse_generator("(2*t)*(3*X+t)", qt);
    CHECK(g2.e == qt->from_int(6) * qt->t());
    CHECK(g2.f == qt->from_int(2) * qt->t().pow(2));
    CHECK_THROWS_AS(parse_generator("t", qt), DomainError);
    CHECK_THROWS_AS(parse_generator("X^2", qt), DomainError);
    CHECK_THROWS_AS(parse_generator("1/X", qt), DomainError);
}

TEST_CASE("element serialization round-trips") {
    Rng rng(41);
    for (const auto& field : ellred::testing::all_field_kinds()) {
        for (int iter = 0; iter < 60; ++iter) {
            BaseElement x = rng.element(field, 3);
            CHECK(parse_element(x.str(), field) == x);
        }
    }
    // field descriptors round-trip as well
    for (const auto& field : ellred::testing::all_field_kinds()) {
        auto back = field_from_json(field_to_json(field));
        CHECK(*back == *field);
    }
    auto rs = BaseField::t_adic_over_q(Semantics::RealSigns);
    CHECK(*field_from_json(field_to_json(rs)) == *rs);
}

TEST_CASE("value serialization") {
    CHECK(value_to_json(Value::of(Rational(-10))).dump() == R"x(["-10"])x");
    CHECK(value_to_json(Value::of(Rational(1, 2))).dump() == R"x(["1/2"])x");
    CHECK(value_to_json(Value::of(Rational(1), Rational(1))).dump() == R"x(["1","1"])x");
    CHECK(value_to_json(Value::infinity(1)).dump() == R"x("inf")x");
}

TEST_CASE("run_classify: worked records") {
    std::istringstream in(
        R"x({"id":"ex-laurent","base_field":{"kind":"t-adic","semantics":"real-signs"},"a":"(3*t^2-1)/(3*t^4)","b":"-2*(9*t^2+1)/(27*t^6)"})x"
        "\n"
        R"x({"id":"good5","base_field":{"kind":"p-adic","p":5},"a":"1","b":"1"})x"
        "\n"
        R"x({"id":"singular","base_field":{"kind":"p-adic","p":5},"a":"-3","b":"2"})x"
        "\n");
    std::ostringstream out;
    auto result = run_classify(in, out, ClassifyOptions{});
    CHECK(result.records == 3);
    CHECK(result.errors == 1);

    std::istringstream lines(out.str());
    std::string line;

    REQUIRE(std::getline(lines, line));
    Json j1 = Json::parse(line);
    CHECK(j1["id"] == "ex-laurent");
    CHECK(j1["reduction"] == "not_potential_good");
    CHECK(j1["omega_star"] == 1);
    CHECK(j1["v_delta"] == Json::array({"-10"}));
    CHECK(j1["v_a3"] == Json::array({"-12"}));
    CHECK(j1["v_b2"] == Json::array({"-12"}));
    CHECK(j1["residue"]["kind"] == "conic");
    CHECK(j1["residue"]["class"] == Json::array({"-1", "-1"}));

    REQUIRE(std::getline(lines, line));
    Json j2 = Json::parse(line);
    CHECK(j2["reduction"] == "good");
    CHECK(j2["omega_star"] == 1);
    CHECK(j2["residue"]["kind"] == "elliptic");
    CHECK(j2["residue"]["a_bar"] == "1");
    CHECK(j2["residue"]["b_bar"] == "1");
    CHECK(j2["residue"]["delta_bar"] == "1");

    REQUIRE(std::getline(lines, line));
    Json j3 = Json::parse(line);
    CHECK(j3.contains("error"));
    CHECK(std::string(j3["error"]).find("singular") != std::string::npos);
    CHECK(j3["line"] == 3);

    CHECK(!std::getline(lines, line));
}

TEST_CASE("run_classify: malformed lines do not abort the stream") {
    std::istringstream in("this is not json\n"
                          R"x({"id":"ok","base_field":{"kind":"p-adic","p":5},"a":"1","b":"1"})x"
                          "\n\n"
                          R"x({"id":"nofield","a":"1","b":"1"})x"
                          "\n");
    std::ostringstream out;
    auto result = run_classify(in, out, ClassifyOptions{});
    // one output object per input line, blank lines included
    CHECK(result.records == 4);
    CHECK(result.errors == 3);
    std::istringstream lines(out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(Json::parse(line).contains("error"));
    std::getline(lines, line);
    CHECK(Json::parse(line)["omega_star"] == 1);
    std::getline(lines, line);
    Json blank = Json::parse(line);
    CHECK(blank.contains("error"));
    CHECK(blank["line"] == 3);
    std::getline(lines, line);
    CHECK(Json::parse(line).contains("error"));
}

TEST_CASE("run_classify: parallel output preserves input order") {
    Rng rng(42);
    std::ostringstream input;
    std::vector<std::string> ids;
    for (int i = 0; i < 40; ++i) {
        std::string id = "rec" + std::to_string(i);
        ids.push_back(id);
        int a = static_cast<int>(rng.int_in(-20, 20));
        int b = static_cast<int>(rng.int_in(-20, 20));
        input << R"x({"id":")x" << id << R"x(","base_field":{"kind":"p-adic","p":7},"a":")x" << a
              << R"x(","b":")x" << b << R"x("})x" << "\n";
    }
    std::istringstream in_seq(input.str()), in_par(input.str());
    std::ostringstream out_seq, out_par;
    run_classify(in_seq, out_seq, ClassifyOptions{false, 1});
    run_classify(in_par, out_par, ClassifyOptions{false, 8});
    CHECK(out_seq.str() == out_par.str());
    std::istringstream lines(out_par.str());
    std::string line;
    std::size_t i = 0;
    while (std::getline(lines, line)) {
        Json j = Json::parse(line);
        if (j.contains("id")) CHECK(j["id"] == ids.at(i));
        ++i;
    }
    CHECK(i == ids.size());
}

TEST_CASE("selftest runs clean") {
    std::ostringstream out;
    CHECK(run_selftest(out) == 0);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(out.str().find("PASS") != std::string::npos);
}
