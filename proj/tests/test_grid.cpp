#include <doctest.h>

#include "oracles.hpp"
#include "polyideal/certificates.hpp"
#include "polyideal/grid.hpp"
#include "polyideal/harness.hpp"

using namespace polyideal;

namespace {

CellCollection cells(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Cell> out;
    for (auto [i, j] : list) out.push_back(cell(i, j));
    return CellCollection(out);
}

CellCollection mirrored_thin() { return cells({{1, 4}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {3, 2}}); }
CellCollection capped_staircase() { return cells({{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}); }

CellCollection big46() {
    std::vector<Cell> out;
    std::vector<std::pair<int, int>> rows{{1, 12}, {3, 13}, {4, 9}, {4, 7}, {6, 10}, {6, 8}, {6, 9}};
    for (int j = 1; j <= 7; ++j)
        for (int i = rows[j - 1].first; i <= rows[j - 1].second; ++i) out.push_back(cell(i, j));
    return CellCollection(out);
}

}  // namespace

TEST_CASE("vertex sets") {
    CHECK(vertex_set(cells({{1, 1}})) == std::vector<Vertex>{{1, 1}, {2, 1}, {1, 2}, {2, 2}});
    CHECK(vertex_set(cells({{1, 1}, {2, 1}})).size() == 6);
    auto V = vertex_set(mirrored_thin());
    CHECK(V.size() == 14);
    for (Vertex a : {Vertex{1, 5}, {2, 5}, {1, 4}, {2, 4}, {1, 3}, {2, 3}, {3, 4}, {3, 3}, {4, 4}, {4, 3},
                     {3, 2}, {4, 2}, {5, 3}, {5, 4}})
        CHECK(std::find(V.begin(), V.end(), a) != V.end());
}

TEST_CASE("inner interval counts") {
    CHECK(inner_intervals(cells({{1, 1}})).size() == 1);
    CHECK(inner_intervals(cells({{1, 1}, {2, 1}})).size() == 3);
    CHECK(inner_intervals(cells({{1, 1}, {2, 1}, {1, 2}, {2, 2}})).size() == 9);
    CHECK(maximal_inner_intervals(cells({{1, 1}})).size() == 1);
    CHECK(maximal_inner_intervals(cells({{1, 1}, {2, 1}})).size() == 1);
}

TEST_CASE("maximal intervals of the six-cell example") {
    auto M = maximal_inner_intervals(mirrored_thin());
    REQUIRE(M.size() == 3);
    // the horizontal run covers the four cells of row 3
    CHECK(std::find(M.begin(), M.end(), Interval{{1, 3}, {5, 4}}) != M.end());
    CHECK(std::find(M.begin(), M.end(), Interval{{1, 3}, {2, 5}}) != M.end());
    CHECK(std::find(M.begin(), M.end(), Interval{{3, 2}, {4, 4}}) != M.end());
}

TEST_CASE("inner intervals agree with brute force up to 8 cells") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            auto mine = inner_intervals(P);
            std::sort(mine.begin(), mine.end());
            REQUIRE(mine == oracle::inner_intervals(P));
        }
}

TEST_CASE("classification examples") {
    auto sq = classify(cells({{1, 1}, {2, 1}, {1, 2}, {2, 2}}));
    CHECK_FALSE(sq.is_thin);
    CHECK(sq.is_convex);
    CHECK(sq.is_parallelogram);
    CHECK(sq.is_ladder);
    CHECK(sq.is_simple);

    auto r2 = classify(mirrored_thin());
    CHECK(r2.is_simple);
    CHECK(r2.is_thin);
    CHECK_FALSE(r2.thin_thm51);

    CHECK(classify(capped_staircase()).thin_thm51);

    auto dom = classify(cells({{1, 1}, {2, 1}}));
    CHECK(dom.is_thin);
    CHECK(dom.is_ladder);
    CHECK(dom.is_parallelogram);

    auto ring = classify(cells({{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}}));
    CHECK(ring.is_polyomino);
    CHECK_FALSE(ring.is_simple);
    CHECK(ring.closed_path.has_value());

    CHECK_FALSE(classify(cells({{1, 1}, {2, 2}})).is_polyomino);
}

TEST_CASE("classification is translation invariant and idempotent") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            auto r = classify(P);
            CHECK(r == classify(P));
            auto moved = classify(P.translated(2, 3));
            moved.left_most = r.left_most;  // coordinates move with the shape
            if (moved.closed_path) moved.closed_path = r.closed_path;
            if (moved.weakly_closed_path) moved.weakly_closed_path = r.weakly_closed_path;
            REQUIRE(moved == r);
        }
}

TEST_CASE("collapse data") {
    auto L = cells({{1, 1}, {2, 1}, {1, 2}});
    auto d = find_collapse_datum(L);
    REQUIRE(d);
    CHECK(d->PI.empty());
    CHECK(is_collapse_datum(L, *d));

    CHECK_THROWS_AS(find_collapse_datum(cells({{1, 1}, {2, 1}, {3, 1}})), InputError);

    auto F = mirrored_thin();
    auto e = find_collapse_datum(F);
    REQUIRE(e);
    CHECK(is_collapse_datum(F, *e));
    for (auto& c : e->PI) CHECK(e->J.contains(c));

    for (int n = 3; n <= 7; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            auto r = classify(P);
            if (!r.is_simple || !r.is_thin || maximal_inner_intervals(P).size() < 2) continue;
            auto datum = find_collapse_datum(P);
            REQUIRE(datum);
            CHECK(is_collapse_datum(P, *datum));
        }
}

TEST_CASE("anti-diagonal partition examples") {
    auto one = antidiagonal_partition(cells({{1, 1}}));
    REQUIRE(one.size() == 3);
    CHECK(one[0].V == std::vector<Vertex>{{1, 1}});
    CHECK(one[1].V == std::vector<Vertex>{{1, 2}, {2, 1}});
    CHECK(one[1].C == std::vector<Cell>{cell(1, 1)});
    CHECK(one[2].V == std::vector<Vertex>{{2, 2}});

    auto dom = antidiagonal_partition(cells({{1, 1}, {2, 1}}));
    REQUIRE(dom.size() == 4);
    CHECK(dom[2].V == std::vector<Vertex>{{2, 2}, {3, 1}});
    CHECK(dom[3].V == std::vector<Vertex>{{3, 2}});

    auto big = antidiagonal_partition(big46());
    REQUIRE(big.size() == 25);
    CHECK(big[10].V == std::vector<Vertex>{{6, 6}, {7, 5}, {8, 4}, {9, 3}, {10, 2}, {11, 1}});
    CHECK(big[10].C.size() == 5);
    CHECK(big[12].V == std::vector<Vertex>{{9, 4}, {10, 3}, {11, 2}, {12, 1}});
}

TEST_CASE("partition invariants on ladders") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            auto blocks = antidiagonal_partition(P);
            std::set<Vertex> seen;
            for (auto& b : blocks) {
                for (auto v : b.V) REQUIRE(seen.insert(v).second);
                for (std::size_t k = 1; k < b.V.size(); ++k)
                    CHECK(b.V[k] == b.V[k - 1] + Vertex{1, -1});
            }
            CHECK(seen == oracle::corners(P));
            for (std::size_t k = 1; k < blocks.size(); ++k) {
                Vertex a = blocks[k - 1].V.front(), b = blocks[k].V.front();
                bool increasing = a.i + a.j < b.i + b.j || (a.i + a.j == b.i + b.j && a.i < b.i);
                CHECK(increasing);
            }
            if (!is_ladder(P)) continue;
            for (auto& ch : check_partition_shape(P)) CHECK_MESSAGE(ch.passed, ch.name << " " << ch.detail);
        }
}

TEST_CASE("rendering") {
    auto box = render(cells({{1, 1}}), {}, RenderFormat::ascii);
    CHECK(box == "+---+\n|   |\n+---+\n");
    auto two = render(cells({{1, 1}, {2, 1}}), {}, RenderFormat::ascii);
    CHECK(two == "+---+---+\n|   |   |\n+---+---+\n");

    std::map<Vertex, std::string> labels;
    int k = 1;
    for (auto v : vertex_set(mirrored_thin())) labels[v] = "a" + std::to_string(k++);
    auto svg = render(mirrored_thin(), labels, RenderFormat::svg);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t texts = 0;
    for (std::size_t p = svg.find("<text"); p != std::string::npos; p = svg.find("<text", p + 1)) ++texts;
    CHECK(texts == 14);
    CHECK(svg.find("width=\"40\"") != std::string::npos);
}

TEST_CASE("parsing") {
    CHECK(parse_cells("1 1\n2 1\n") == cells({{1, 1}, {2, 1}}));
    CHECK(parse_cells("#.\n##\n") == cells({{1, 1}, {2, 1}, {1, 2}}));
    CHECK(parse_cells("# comment\n3 4  # trailing\n") == cells({{3, 4}}));
    try {
        parse_cells("1 1\n1 x\n");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_cells("1 1\n1 1\n"), InputError);
    CHECK_THROWS_AS(parse_cells("0 1\n"), InputError);
    CHECK_THROWS_AS(parse_cells(""), InputError);
    auto P = big46();
    CHECK(parse_cells(format_coordinates(P)) == P);
}

TEST_CASE("parallelograms with stacked parallelograms") {
    CHECK(is_parallelogram_with_attachments(cells({{1, 1}, {2, 1}})));
    // a domino resting on a bar
    CHECK(is_parallelogram_with_attachments(cells({{1, 1}, {2, 1}, {3, 1}, {2, 2}})));
    CHECK_FALSE(is_parallelogram_with_attachments(cells({{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}})));
}
