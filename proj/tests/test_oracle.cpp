// Copyright (c) gcsmc contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "fixtures.hpp"
#include "gcs/error.hpp"
#include "gcs/logic.hpp"
#include "gcs/oracle.hpp"
#include "support.hpp"

using namespace gcs;
using namespace gcs::testing;

TEST_SUITE("oracle") {

TEST_CASE("window graph layout") {
    const auto g = countdown();
    const WindowGraph w(g, 0, 2);
    CHECK(w.size() == 9);
    CHECK(w.state(0) == Valuation({0, 0}));
    CHECK(w.state(1) == Valuation({0, 1}));
    CHECK(w.state(8) == Valuation({2, 2}));
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w.index(w.state(i)) == i);
    CHECK_FALSE(w.in_window(Valuation({3, 0})));
    CHECK_THROWS_AS((void)w.index(Valuation({3, 0})), InvalidInput);
    CHECK_THROWS_AS(WindowGraph(g, 2, 1), InvalidInput);
    CHECK_THROWS_AS(WindowGraph(g, 0, 100, 50), ResourceLimit);
}

TEST_CASE("property: window edges match the explicit step graph") {
    for (const auto& g : {countdown(), differential_case(3, 0).gcs, differential_case(3, 1).gcs}) {
        const WindowGraph w(g, -1, 3);
        const ExplicitSystem sys(g, -1, 3);
        REQUIRE(w.size() == sys.states.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::set<std::pair<std::string, std::size_t>> got;
            for (const auto& e : w.out(i)) got.emplace(g.acts()[e.action], e.to);
            const std::set<std::pair<std::string, std::size_t>> want(sys.succ[i].begin(), sys.succ[i].end());
            CHECK(got == want);
        }
    }
}

TEST_CASE("explicit checks") {
    const auto g = countdown();
    const WindowGraph w(g, 0, 3);
    const auto f = parse_formula("EF (x = 0 & y = 0)");
    CHECK(explicit_check(w, Valuation({3, 3}), f));
    CHECK(explicit_check(w, Valuation({0, 0}), f));
    CHECK_FALSE(explicit_check(w, Valuation({1, 0}), parse_formula("<b> true")));
    CHECK(explicit_check(w, Valuation({1, 0}), parse_formula("[b] false")));
    CHECK_THROWS_AS(explicit_check(w, Valuation({9, 0}), f), InvalidInput);
    CHECK_THROWS_AS(explicit_check(w, Valuation({0, 0}), parse_formula("EG true")), Undecidable);
    CHECK_THROWS_AS(explicit_check(w, Valuation({0, 0}), parse_formula("<zz> true")), InvalidInput);
}

TEST_CASE("window search under-approximates an open system") {
    const auto g = countdown();
    CHECK_FALSE(window_closed(g, 0, 3).closed);
    const WindowGraph w(g, 0, 3);
    // CY may jump to x = 5, which the window cannot see.
    const auto far = parse_formula("EF (x - 0 >= 5)");
    CHECK(check(g, Valuation({0, 1}), far));
    CHECK_FALSE(explicit_check(w, Valuation({0, 1}), far));
    const auto ef = parse_formula("EF (x = 0 & y = 0)");
    const auto sym = denote(g, ef).set;
    const auto bits = explicit_denote(w, ef);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (bits[i]) CHECK(contains(sym, w.state(i)));
    }
}

TEST_CASE("window closedness") {
    const auto open = window_closed(countdown(), 0, 3);
    CHECK_FALSE(open.closed);
    CHECK(open.witness.find("CX") != std::string::npos);
    const auto g = parse_gcs(R"(gcs { vars: x; consts: 0, 4; }
rule r [a]: x' >= 0 & 4 >= x' & x > x';
)");
    CHECK(window_closed(g, 0, 4).closed);
    CHECK(window_closed(g, -1, 5).closed);
    CHECK_FALSE(window_closed(g, 1, 4).closed);
    CHECK_FALSE(window_closed(g, 0, 3).closed);
    const auto shifted = parse_gcs(R"(gcs { vars: x; consts: 0, 4; }
rule r [a]: x' - 0 >= 1 & 4 - x' >= 1;
)");
    CHECK(window_closed(shifted, 1, 3).closed);
}

TEST_CASE("qbf evaluation") {
    CHECK(qbf_eval(parse_qbf("A x. E y. (x <-> y)")));
    CHECK_FALSE(qbf_eval(parse_qbf("E y. A x. (x <-> y)")));
    CHECK(qbf_eval(parse_qbf("E x. x | !x")));
    CHECK_FALSE(qbf_eval(parse_qbf("A x. x")));
    Qbf big;
    BoolExprPtr m = BoolExpr::constant(true);
    for (int i = 0; i < 21; ++i) {
        big.prefix.emplace_back(Quantifier::Exists, "v" + std::to_string(i));
        m = BoolExpr::both(m, BoolExpr::variable("v" + std::to_string(i)));
    }
    big.matrix = m;
    CHECK_THROWS_AS(qbf_eval(big), ResourceLimit);
}

TEST_CASE("differential cases are deterministic and within bounds") {
    for (std::size_t i = 0; i < 50; ++i) {
        const auto a = differential_case(1, i);
        const auto b = differential_case(1, i);
        CHECK(a.gcs == b.gcs);
        CHECK(to_string(a.formula) == to_string(b.formula));
        CHECK(a.gcs.vars().size() <= 3);
        CHECK(a.gcs.rules().size() <= 4);
        CHECK(nesting_depth(a.formula) <= 3);
        CHECK(window_closed(a.gcs, 0, 4).closed);
        CHECK(is_ef(a.formula));
    }
    CHECK(to_string(differential_case(1, 0).formula) != to_string(differential_case(2, 0).formula));
}

TEST_CASE("differential run") {
    const auto r = differential_run(1, 100);
    CHECK(r.seed == 1);
    CHECK(r.cases == 100);
    CHECK(r.mismatches.empty());
    std::size_t states = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const auto c = differential_case(1, i);
        std::size_t n = 1;
        for (std::size_t v = 0; v < c.gcs.vars().size(); ++v) n *= 5;
        states += n;
    }
    CHECK(r.states_checked == states);
    CHECK(differential_run(1, 0).states_checked == 0);
}

TEST_CASE("rule-free systems") {
    const Gcs g({"x"}, {0}, {"a"}, {});
    const WindowGraph w(g, 0, 4);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w.out(i).empty());
    CHECK_FALSE(explicit_check(w, Valuation({1}), parse_formula("<a> true")));
    CHECK(explicit_check(w, Valuation({1}), parse_formula("EF x = 1")));
    CHECK(window_closed(g, 0, 4).closed);
}

} // TEST_SUITE
