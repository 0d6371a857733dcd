#include <doctest.h>

#include "oracles.hpp"
#include "polyideal/harness.hpp"

using namespace polyideal;

TEST_CASE("enumeration counts") {
    CHECK(enumerate_fixed(1).size() == 1);
    auto two = enumerate_fixed(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] != two[1]);
    CHECK(enumerate_fixed(4).size() == 19);
    for (int n = 1; n <= 8; ++n) {
        CHECK(long(enumerate_fixed(n).size()) == fixed_polyomino_counts()[n - 1]);
        CHECK(oracle::redelmeier(n) == fixed_polyomino_counts()[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_fixed(0), InputError);
    CHECK_THROWS_AS(enumerate_fixed(kMaxEnumerationCells + 1), InputError);
}

TEST_CASE("enumerated shapes are normalized, connected and distinct") {
    for (int n = 1; n <= 6; ++n) {
        auto all = enumerate_fixed(n);
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (auto& P : all) {
            CHECK(P.size() == std::size_t(n));
            CHECK(is_edge_connected(P));
            CHECK(P.normalized() == P);
        }
    }
}

TEST_CASE("claims are registered") {
    for (auto name : {"lemma44-ladder", "lemma47-ladder", "simple-thin-konig", "thm51-gb", "prop55-prime",
                      "prop411-gb", "simple-prime", "thm41-ladder"})
        CHECK(find_claim(name).name == name);
    CHECK_THROWS_AS(find_claim("no-such-claim"), InputError);
}

TEST_CASE("batch verification") {
    auto rep = batch_verify(find_claim("lemma44-ladder"), 6);
    CHECK(rep.clean());
    REQUIRE(rep.rows.size() == 6);
    long passes = 0;
    for (auto& r : rep.rows) {
        CHECK(r.fails == 0);
        CHECK(r.skips == 0);
        passes += r.passes;
    }
    CHECK(passes > 0);

    auto konig = batch_verify(find_claim("simple-thin-konig"), 6);
    CHECK(konig.clean());
    for (auto& r : konig.rows) CHECK(r.fails == 0);

    auto prime = batch_verify(find_claim("simple-prime"), 5);
    CHECK(prime.clean());
    for (auto& r : prime.rows) {
        CHECK(r.fails == 0);
        CHECK(r.skips == 0);
    }
}

TEST_CASE("remaining claims hold on small instances") {
    for (auto name : {"lemma47-ladder", "thm51-gb", "prop55-prime", "prop411-gb", "thm41-ladder"}) {
        auto rep = batch_verify(find_claim(name), 5);
        CHECK_MESSAGE(rep.clean(), name << " " << rep.failure_note);
    }
}

TEST_CASE("parallel and serial runs agree") {
    for (auto name : {"lemma44-ladder", "thm51-gb"}) {
        auto a = batch_verify(find_claim(name), 6);
        auto b = batch_verify_serial(find_claim(name), 6);
        CHECK(tally_csv(a.rows, false) == tally_csv(b.rows, false));
    }
}

TEST_CASE("csv tally") {
    std::vector<TallyRow> rows{{"x", 3, 4, 0, 1, 0.5}};
    CHECK(tally_csv(rows) == "claim,n,passes,fails,skips,wall_time\nx,3,4,0,1,0.500\n");
    CHECK(tally_csv(rows, false) == "claim,n,passes,fails,skips\nx,3,4,0,1\n");
}
