#include <catch2/catch_amalgamated.hpp>

#include "wsat/classify.hpp"

using namespace wsat;

TEST_CASE("verdicts on the worked trees") {
    SECTION("the seven-vertex parity tree is not good") {
        Verdict v = classify_good(counterexample_tree());
        CHECK(v.status == GoodStatus::not_good);
        CHECK(v.rule == "parity");
    }
    SECTION("cat:3,3 is not good") {
        Verdict v = classify_good(parse_graph_spec("cat:3,3"));
        CHECK(v.status == GoodStatus::not_good);
        CHECK(v.rule == "caterpillar");
    }
    SECTION("the spider with legs of length two is good") {
        Verdict v = classify_good(parse_graph_spec("edges:7;0-1,1-2,0-3,3-4,0-5,5-6"));
        CHECK(v.status == GoodStatus::good);
    }
    SECTION("stars split by size") {
        CHECK(classify_good(star_graph(3)).status == GoodStatus::good);      // P3
        CHECK(classify_good(star_graph(4)).status == GoodStatus::not_good);  // S4
        CHECK(classify_good(star_graph(6)).status == GoodStatus::not_good);
    }
    SECTION("a tree no theorem decides") {
        // two cherries at the hub plus one on a stalk: odd leaf distances,
        // no degree-2 vertex next to a leaf, no matching local structure
        Graph t = parse_graph_spec("edges:11;0-1,1-2,1-3,0-4,4-5,4-6,0-7,7-8,8-9,8-10");
        Verdict v = classify_good(t);
        CHECK(v.status == GoodStatus::unknown);
    }
    SECTION("rejects non-trees and tiny trees") {
        CHECK_THROWS_AS(classify_good(complete_graph(3)), std::invalid_argument);
        CHECK_THROWS_AS(classify_good(path_graph(2)), std::invalid_argument);
    }
}

TEST_CASE("verdicts agree with certified limits on small trees") {
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& t : enumerate_trees(n)) {
            Verdict v = classify_good(t);
            if (v.status == GoodStatus::unknown) continue;
            Pattern T(t);
            auto rec = wsat_formulas(T);
            // skip patterns whose sweep would leave the desk-scale edge budget
            if (rec.upper && rec.upper->value > 8) continue;
            LimitEstimate est = wsat_limit_estimate(T, 2);
            if (!est.found || !est.certified) continue;
            INFO("tree " << to_graph6(t) << " rule " << v.rule);
            CHECK((v.status == GoodStatus::good) == (est.value == t.edge_count() - 1));
        }
    }
}

TEST_CASE("every small parity tree is decided") {
    for (int n = 3; n <= 9; ++n)
        for (const Graph& t : enumerate_trees(n)) {
            if (!tree_features(t).parity_ok) continue;
            INFO("tree " << to_graph6(t));
            CHECK(classify_good(t).status != GoodStatus::unknown);
        }
}

TEST_CASE("reproduce: counterexample") {
    Report rep = reproduce("counterexample");
    CHECK(rep.ok);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].agree);
    CHECK(rep.rows[1].agree);
    CHECK(rep.rows[0].predicted.find("not-good") != std::string::npos);
    CHECK(rep.rows[1].predicted.find("good") != std::string::npos);
}

TEST_CASE("reproduce: clique formula") {
    Report rep = reproduce("clique-formula");
    CHECK(rep.ok);
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.rows[4].instance == "K_4 at n=5");
    CHECK(rep.rows[4].computed == "7");
}

TEST_CASE("reproduce: three-spine instances") {
    Report rep = reproduce("threecat");
    CHECK(rep.ok);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.rows[0].predicted == "3");
    CHECK(rep.rows[1].predicted == "4");
    CHECK(rep.rows[2].predicted == "6");
}

TEST_CASE("reproduce: the second-largest bound over the eight-vertex trees") {
    // at l=4 the equality characterization is sharp: every non-star tree on
    // 8 vertices gets a certified limit and only cat:3,3 and cat:2,0,3 attain
    // the bound
    ReproduceParams p;
    p.kv["l"] = "4";
    Report rep = reproduce("secondlargest", p);
    CHECK(rep.ok);
    REQUIRE(!rep.rows.empty());
    const auto& max_row = rep.rows[rep.rows.size() - 2];
    CHECK(max_row.instance == "maximum");
    CHECK(max_row.computed == "7");
    const auto& ach_row = rep.rows.back();
    CHECK(ach_row.computed == "cat:2,0,3 cat:3,3");
}

TEST_CASE("reproduce: exponents table shape") {
    ReproduceParams p;
    p.kv["alpha"] = "1";
    p.kv["kmax"] = "12";
    Report rep = reproduce("exponents", p);
    CHECK(rep.ok);
    CHECK(rep.rows.size() == 8);  // k = 5..12
    CHECK(rep.table_header == std::vector<std::string>{"alpha", "k", "a_k", "value"});
    CHECK(rep.table.size() == 8);
    // k=5 caps a_k at 1, value 3
    CHECK(rep.table[0] == std::vector<std::string>{"1", "5", "1", "3"});
}

TEST_CASE("reproduce: unknown claims and bad params are rejected") {
    CHECK_THROWS_AS(reproduce("no-such-claim"), std::invalid_argument);
    ReproduceParams p;
    p.kv["max_n"] = "25";
    CHECK_THROWS_AS(reproduce("goodtree-scan", p), std::invalid_argument);
    CHECK_THROWS_AS(ReproduceParams::parse("oops"), std::invalid_argument);
}

TEST_CASE("exponent family arithmetic") {
    auto a15 = detail::ExponentAlpha::parse("1.5");
    CHECK(a15.z == 6);
    // floor(k^0.75): 8^0.75 = 4.75.., 16^0.75 = 8
    CHECK(a15.floor_pow(8) == 4);
    CHECK(a15.floor_pow(16) == 8);
    auto a1 = detail::ExponentAlpha::parse("1");
    CHECK(a1.floor_pow(36) == 6);  // exact square stays exact
    CHECK(a1.floor_pow(35) == 5);
    auto a2 = detail::ExponentAlpha::parse("2");
    CHECK(a2.floor_pow(7) == 7);
    CHECK_THROWS_AS(detail::ExponentAlpha::parse("1.3"), std::invalid_argument);
    // capping keeps both legs positive
    CHECK(detail::exponent_a_k(a2, 9) == 3);
    CHECK(detail::exponent_a_k(a1, 5) == 1);
}
