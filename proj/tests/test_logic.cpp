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

namespace {

// Membership of every window point in a symbolic set.
std::vector<bool> window_bits(const ExplicitSystem& sys, const SymbolicSet& s) {
    std::vector<bool> out;
    out.reserve(sys.states.size());
    for (const auto& p : sys.states) out.push_back(contains(s, Valuation(p)));
    return out;
}

SymbolicSet set_of(const Gcs& g, const std::string& clauses) {
    return SymbolicSet(g.state_universe(), {graph(g.state_universe(), clauses)});
}

} // namespace

TEST_SUITE("logic") {

TEST_CASE("denotations on the countdown") {
    const auto g = countdown();
    CHECK(denote(g, parse_formula("<a> true")).set == set_of(g, "x - 0 >= 1"));
    CHECK(denote(g, parse_formula("<b> true")).set == set_of(g, "y - 0 >= 1"));
    // CY resets x, so any y >= 1 suffices.
    const SymbolicSet reach(g.state_universe(), {graph(g.state_universe(), "y - 0 >= 1"),
                                                 graph(g.state_universe(), "x >= 0 & y = 0")});
    const auto ef = denote(g, parse_formula("EF (x = 0 & y = 0)")).set;
    CHECK(subset_of(ef, reach));
    CHECK(subset_of(reach, ef));
    CHECK(denote(g, parse_formula("[a] false")).set == complement(set_of(g, "x - 0 >= 1")));
    CHECK(denote(g, parse_formula("true")).set == SymbolicSet::full(g.state_universe()));
    CHECK(denote(g, parse_formula("false")).set.empty());
}

TEST_CASE("check") {
    const auto g = countdown();
    const auto f = parse_formula("EF (x = 0 & y = 0)");
    CHECK(check(g, Valuation({3, 1}), f));
    CHECK_FALSE(check(g, Valuation({-1, 0}), f));
    CHECK(check(g, Valuation({0, 0}), f));
    CHECK_THROWS_AS(check(g, Valuation({1}), f), InvalidInput);
}

TEST_CASE("nesting depth") {
    CHECK(nesting_depth(parse_formula("x >= 0")) == 0);
    CHECK(nesting_depth(parse_formula("<a> true")) == 1);
    CHECK(nesting_depth(parse_formula("EF (! <a> true)")) == 3);
    CHECK(nesting_depth(parse_formula("[a] true")) == 3);
    CHECK(nesting_depth(parse_formula("AG <a> true")) == 4);
    CHECK(nesting_depth(parse_formula("(<a> true) & EF EF true")) == 2);
    CHECK(denote(countdown(), parse_formula("EF (! <a> true)")).nesting_depth == 3);
}

TEST_CASE("EG and EU are rejected as undecidable") {
    const auto g = countdown();
    for (const char* text : {"EG true", "E (true U x = 0)", "EF EG x >= 0", "!(E x = 0 U y = 0)"}) {
        const auto f = parse_formula(text);
        CHECK_FALSE(is_ef(f));
        CHECK_THROWS_AS(require_ef(f), Undecidable);
        CHECK_THROWS_AS(denote(g, f), Undecidable);
        try {
            require_ef(f);
        } catch (const Undecidable& e) {
            CHECK(std::string(e.what()).find("undecidable") != std::string::npos);
        }
    }
    CHECK(is_ef(parse_formula("AG EF <a> true")));
}

TEST_CASE("invalid inputs") {
    const auto g = countdown();
    CHECK_THROWS_AS(denote(g, fm::ef(fm::t(), parse_constraint("x' - x >= -1"))), InvalidInput);
    CHECK_THROWS_AS(denote(g, fm::atom(clause(pvar("x"), cst(0), 0))), InvalidInput);
    CHECK_THROWS_AS(denote(g, fm::diamond("zz", fm::t())), InvalidInput);
}

TEST_CASE("guarded operators") {
    const auto g = countdown();
    // CX steps that decrease x by at least 2.
    const auto d = denote(g, fm::diamond("a", fm::t(), parse_constraint("x - x' >= 2"))).set;
    CHECK(d == set_of(g, "x - 0 >= 2"));
    // EF restricted to b-steps: only y moves, so x must already be zero.
    const auto e = denote(g, parse_formula("EF[b] (x = 0 & y = 0)")).set;
    const ExplicitSystem sys(g, -2, 5);
    CHECK(window_bits(sys, e) == explicit_formula(sys, g, parse_formula("EF[b] (x = 0 & y = 0)")));
}

TEST_CASE("evaluator shares work across calls") {
    const auto g = countdown();
    Evaluator ev(g);
    const auto f = parse_formula("EF (x = 0 & y = 0)");
    const auto first = ev.denote(f);
    const auto created = ev.metrics().graphs_created;
    CHECK(created > 0);
    // Structurally equal but separately built formula hits the memo.
    const auto second = ev.denote(parse_formula("EF (x = 0 & y = 0)"));
    CHECK(first == second);
    CHECK(ev.metrics().graphs_created == created);
}

TEST_CASE("property: semantic laws") {
    const auto g = countdown();
    const std::vector<std::string> bases{"x = 0 & y = 0", "x - 0 >= 2", "y > x", "<b> (x - 0 >= 1 & 0 - x >= -1)", "x - y >= 1"};
    for (const auto& b : bases) {
        CAPTURE(b);
        const auto f = parse_formula(b);
        const auto ef = denote(g, fm::ef(f)).set;
        CHECK(denote(g, fm::ef(fm::ef(f))).set == ef);
        CHECK(subset_of(denote(g, f).set, ef));
        CHECK(denote(g, fm::ag(f)).set == complement(denote(g, fm::ef(fm::neg(f))).set));
        CHECK(denote(g, fm::box("a", f)).set == complement(denote(g, fm::diamond("a", fm::neg(f))).set));
        CHECK(denote(g, fm::neg(fm::neg(f))).set == denote(g, f).set);
        const auto h = parse_formula("y - 0 >= 1");
        CHECK(denote(g, fm::conj(f, h)).set == intersect_sets(denote(g, f).set, denote(g, h).set));
        CHECK(denote(g, fm::disj(f, h)).set == union_sets(denote(g, f).set, denote(g, h).set));
    }
}

TEST_CASE("property: symbolic denotation agrees with explicit semantics") {
    std::size_t compared = 0;
    for (std::size_t i = 0; i < 120; ++i) {
        const auto c = differential_case(7, i);
        const ExplicitSystem sys(c.gcs, 0, 4);
        CAPTURE(to_string(c.formula));
        CHECK(window_bits(sys, denote(c.gcs, c.formula).set) == explicit_formula(sys, c.gcs, c.formula));
        compared += sys.states.size();
    }
    CHECK(compared > 0);
}

TEST_CASE("property: denotation members are closed and satisfiable") {
    for (std::size_t i = 0; i < 120; ++i) {
        const auto c = differential_case(11, i);
        const auto d = denote(c.gcs, c.formula);
        for (const auto& m : d.set.members()) {
            CHECK(m.is_closed());
            CHECK(is_satisfiable(m));
        }
    }
}

} // TEST_SUITE
