// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "gcs/error.hpp"
#include "gcs/frontend.hpp"
#include "gcs/logic.hpp"
#include "support.hpp"

using namespace gcs;
using namespace gcs::testing;

namespace {

std::string parse_error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_SUITE("frontend") {

TEST_CASE("rule parsing expands comparisons") {
    const auto g = countdown();
    REQUIRE(g.rules().size() == 2);
    const auto& cx = g.rules()[0];
    CHECK(cx.name == "CX");
    CHECK(cx.label == "a");
    const GapConstraint want{clause(var("x"), pvar("x"), 1), clause(pvar("x"), cst(0), 0),
                             clause(var("y"), pvar("y"), 0), clause(pvar("y"), var("y"), 0)};
    CHECK(cx.constraint == want);
    CHECK(g.acts() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("constraint syntax") {
    CHECK(parse_constraint("true").empty());
    CHECK(parse_constraint("x - y >= -3") == GapConstraint{clause(var("x"), var("y"), -3)});
    CHECK(parse_constraint("x < y") == GapConstraint{clause(var("y"), var("x"), 1)});
    CHECK(parse_constraint("0 <= x < 4").size() == 2);
    CHECK(parse_constraint("x >= 1, y >= 2") == parse_constraint("x >= 1 & y >= 2"));
    CHECK(serialize_constraint({}) == "true");
    CHECK_THROWS_AS(parse_constraint("x >="), ParseError);
    CHECK_THROWS_AS(parse_constraint("x - y >= 99999999999999999999"), ParseError);
}

TEST_CASE("system header") {
    const auto g = parse_gcs("gcs { vars: x; consts: 0; }\nrule r: x' = x;\n");
    CHECK(g.acts() == std::vector<std::string>{"_"});
    CHECK(g.rules()[0].label == "_");
    CHECK_THROWS_AS(parse_gcs("gcs { vars: x; vars: y; consts: 0; }"), ParseError);
    CHECK_THROWS_AS(parse_gcs("gcs { vars: x; consts: 0; acts: a; }\nrule r [b]: true;"), InvalidInput);
    CHECK_THROWS_AS(parse_gcs("gcs { vars: x; consts: 0; }\nrule r [a]: x - x' >= -1;"), InvalidInput);
}

TEST_CASE("parse errors carry positions") {
    const auto msg = parse_error_of([] { parse_gcs("gcs { vars: x; consts: 0; }\nrule r [a] x' = x;\n"); });
    CHECK(msg.find("2:") != std::string::npos);
    const auto f = parse_error_of([] { parse_formula("EF (x = 0 &"); });
    CHECK(f.find("1:") != std::string::npos);
}

TEST_CASE("valuations") {
    const auto g = countdown();
    CHECK(parse_valuation("x=3, y=0", g) == Valuation({3, 0}));
    CHECK(parse_valuation("y = -2, x = 1", g) == Valuation({1, -2}));
    CHECK(serialize_valuation(Valuation({3, 0}), g) == "x=3, y=0");
    CHECK_THROWS_AS(parse_valuation("x=3", g), InvalidInput);
    CHECK_THROWS_AS(parse_valuation("x=3, x=4, y=0", g), InvalidInput);
    CHECK_THROWS_AS(parse_valuation("x=3, y=0, z=1", g), InvalidInput);
}

TEST_CASE("formulas are checked against the system") {
    const auto g = countdown();
    CHECK_NOTHROW(parse_formula("EF[a]{x - x' >= 1} <b> x = 0", g));
    CHECK_THROWS_AS(parse_formula("z >= 0", g), InvalidInput);
    CHECK_THROWS_AS(parse_formula("<c> true", g), InvalidInput);
    CHECK_THROWS_AS(parse_formula("x' >= 0", g), InvalidInput);
    // EG parses so that the checker can reject it with a dedicated error.
    const auto eg = parse_formula("EG x >= 0", g);
    CHECK(eg->kind == Formula::Kind::Eg);
    CHECK_THROWS_AS(require_ef(eg), Undecidable);
    CHECK(parse_formula("E x = 0 U y = 0")->kind == Formula::Kind::Eu);
}

TEST_CASE("property: formula text round trips") {
    const std::vector<std::string> corpus{
        "true",
        "false",
        "x >= 0",
        "x - y >= -2",
        "!x = 0",
        "x = 0 & y = 0",
        "x >= 1 | y >= 1 & x <= 3",
        "<a> true",
        "<a>{x - x' >= 2} y >= 0",
        "[b] false",
        "EF x = 0",
        "EF[a] x = 0",
        "EF[a, b]{x' - x >= 0} (x = 0 | y = 0)",
        "EF ([a] x = 0)",
        "AG EF <a> true",
        "EG x >= 0",
        "E (x >= 0 U y >= 0)",
        "!(EF (x = 0 & y = 0))",
        "<a> <b> <a> true",
        "(x < y) & !(y < x)",
        "0 <= x < 4",
        "[a] [b] (x >= 0 | !(y >= 0))",
    };
    for (const auto& text : corpus) {
        CAPTURE(text);
        const auto f = parse_formula(text);
        const auto printed = to_string(f);
        CHECK(to_string(parse_formula(printed)) == printed);
    }
    for (std::size_t i = 0; i < 200; ++i) {
        const auto c = differential_case(4, i);
        const auto printed = to_string(c.formula);
        CHECK(to_string(parse_formula(printed, c.gcs)) == printed);
    }
}

TEST_CASE("property: system text round trips") {
    std::vector<Gcs> corpus{countdown()};
    for (std::size_t i = 0; i < 30; ++i) corpus.push_back(differential_case(9, i).gcs);
    corpus.push_back(qbf_to_gcs(parse_qbf("A x. E y. (x <-> y)")).gcs);
    for (const auto& g : corpus) {
        const auto text = serialize_gcs(g);
        CAPTURE(text);
        const auto again = parse_gcs(text);
        CHECK(again == g);
        CHECK(serialize_gcs(again) == text);
    }
}

TEST_CASE("property: LTS text round trips") {
    auto corpus = lts_library();
    for (std::size_t i = 0; i < 10; ++i) {
        FiniteLts l;
        l.add_state("lonely" + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j) l.add_transition("s" + std::to_string(j), "a", "s" + std::to_string(j + 1));
        corpus.push_back(l);
    }
    for (auto& l : corpus) {
        const auto text = serialize_lts(l);
        CAPTURE(text);
        auto again = parse_lts(text);
        l.normalize();
        again.normalize();
        CHECK(again == l);
    }
    const auto parsed = parse_lts("acts: a, b\n# comment\np -a-> q\nr\n");
    CHECK(parsed.states == std::vector<std::string>{"p", "q", "r"});
    CHECK(parsed.acts == std::vector<std::string>{"a", "b"});
    CHECK_THROWS_AS(parse_lts("p -a q\n"), ParseError);
}

TEST_CASE("qbf parsing") {
    const auto q = parse_qbf("forall x. exists y. x -> y <-> !x | y");
    CHECK(q.prefix.size() == 2);
    CHECK(q.prefix[0].first == Quantifier::Forall);
    CHECK_THROWS_AS(parse_qbf("E x. y"), InvalidInput);
    CHECK_THROWS_AS(parse_qbf("E x x"), ParseError);
}

TEST_CASE("graph JSON") {
    const auto g = countdown();
    const auto u = g.state_universe();
    const auto m = graph(u, "x - y >= 2 & y = 0");
    const auto text = mg_to_json(m);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["nodes"] == nlohmann::json::array({"x", "y", "0"}));
    const auto back = mg_from_json(text, u);
    CHECK(closure(back) == closure(m));
    CHECK(mg_to_json(back) == text);
    CHECK(mg_to_json(m) == text);

    MonotonicityGraph bad(u);
    bad.tighten(0, 0, Weight(1));
    const auto jb = nlohmann::json::parse(mg_to_json(bad));
    bool saw_inf = false;
    for (const auto& e : jb["edges"]) saw_inf |= e["weight"] == "+inf";
    CHECK(saw_inf);
    CHECK_THROWS_AS(mg_from_json("{\"nodes\": [\"q\"], \"edges\": []}", u), InvalidInput);
}

TEST_CASE("set formats") {
    const auto g = countdown();
    const auto u = g.state_universe();
    const SymbolicSet s(u, {graph(u, "y - 0 >= 1"), graph(u, "x >= 0 & y = 0")});
    CHECK(parse_set(set_to_json(s), g) == s);
    CHECK(parse_set(set_to_text(s), g) == s);
    CHECK(set_to_text(SymbolicSet(u)) == "false\n");
    CHECK(parse_set("false\n", g).empty());
    CHECK(parse_set("y - 0 >= 1\nx >= 0 & y = 0\n", g) == s);
    CHECK(nlohmann::json::parse(set_to_json(s)).size() == 2);
}

TEST_CASE("report JSON") {
    const auto r = differential_run(2, 3);
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["seed"] == 2);
    CHECK(j["cases"] == 3);
    CHECK(j["states_checked"] == r.states_checked);
    CHECK(j["mismatches"].empty());
    CHECK(j["metrics"].contains("pool_size"));
    const auto mj = nlohmann::json::parse(metrics_to_json(r.metrics));
    CHECK(mj["graphs_created"] == r.metrics.graphs_created);
}

} // TEST_SUITE
