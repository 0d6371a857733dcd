#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyideal {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid point; i is the column, j the row. Ordered row-major (j, then i).
struct Vertex {
    int i = 0;
    int j = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.i <=> b.i;
    }
    Vertex operator+(Vertex o) const { return {i + o.i, j + o.j}; }
};

std::string to_string(Vertex v);

// Unit cell [ll, ll+(1,1)].
struct Cell {
    Vertex ll;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell& a, const Cell& b) { return a.ll <=> b.ll; }

    Vertex lower_left() const { return ll; }
    Vertex lower_right() const { return {ll.i + 1, ll.j}; }
    Vertex upper_left() const { return {ll.i, ll.j + 1}; }
    Vertex upper_right() const { return {ll.i + 1, ll.j + 1}; }
    std::vector<Vertex> vertices() const;
};

inline Cell cell(int i, int j) { return Cell{{i, j}}; }

struct Interval {
    Vertex low;
    Vertex high;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval& a, const Interval& b) {
        if (auto c = a.low <=> b.low; c != 0) return c;
        return a.high <=> b.high;
    }

    bool proper() const { return low.i < high.i && low.j < high.j; }
    Vertex upper_left() const { return {low.i, high.j}; }
    Vertex lower_right() const { return {high.i, low.j}; }
    int width() const { return high.i - low.i; }
    int height() const { return high.j - low.j; }
    bool contains(const Cell& c) const {
        return c.ll.i >= low.i && c.ll.i < high.i && c.ll.j >= low.j && c.ll.j < high.j;
    }
    bool contains(const Interval& o) const {
        return low.i <= o.low.i && low.j <= o.low.j && o.high.i <= high.i && o.high.j <= high.j;
    }
    bool contains(Vertex v) const {
        return v.i >= low.i && v.i <= high.i && v.j >= low.j && v.j <= high.j;
    }
    std::vector<Cell> cells() const;
};

std::string to_string(const Interval& iv);

// Finite set of cells, kept sorted by (j, i) of the lower-left corner.
class CellCollection {
public:
    CellCollection() = default;
    // Throws InputError on duplicates or non-positive coordinates.
    explicit CellCollection(std::vector<Cell> cells);
    static CellCollection from_set(const std::set<Cell>& cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(const Cell& c) const;
    bool contains(int i, int j) const { return contains(cell(i, j)); }

    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

    CellCollection translated(int di, int dj) const;
    // Translate so that the minimum coordinates are 1.
    CellCollection normalized() const;
    // Mirror across a vertical line, keeping coordinates positive.
    CellCollection reflected_vertical() const;
    CellCollection without(const std::vector<Cell>& drop) const;
    CellCollection with(const std::vector<Cell>& add) const;

    friend bool operator==(const CellCollection&, const CellCollection&) = default;
    friend auto operator<=>(const CellCollection& a, const CellCollection& b) {
        return a.cells_ <=> b.cells_;
    }

private:
    std::vector<Cell> cells_;
};

std::vector<Vertex> vertex_set(const CellCollection& P);

std::vector<Interval> inner_intervals(const CellCollection& P);
std::vector<Interval> maximal_inner_intervals(const CellCollection& P);

bool is_edge_connected(const CellCollection& P);
bool is_thin(const CellCollection& P);
bool is_row_convex(const CellCollection& P);
bool is_col_convex(const CellCollection& P);
bool is_simple(const CellCollection& P);
// Left-most vertex of every vertex row, bottom to top.
std::vector<Vertex> left_most_vertices(const CellCollection& P);
bool is_ladder(const CellCollection& P);
bool is_parallelogram(const CellCollection& P);
// A parallelogram I with parallelogram polyominoes stacked on its top row, each resting
// on it along exactly its bottom edge and with pairwise disjoint vertex sets.
bool is_parallelogram_with_attachments(const CellCollection& P);
std::optional<std::vector<Cell>> closed_path_sequence(const CellCollection& P);
std::optional<std::vector<Cell>> weakly_closed_path_sequence(const CellCollection& P);
bool thin_thm51(const CellCollection& P);
bool thin_reflected(const CellCollection& P);
bool thin_cellwise_intersections(const CellCollection& P);

struct ClassificationRecord {
    bool is_polyomino = false;
    bool is_thin = false;
    bool is_row_convex = false;
    bool is_col_convex = false;
    bool is_convex = false;
    bool is_parallelogram = false;
    bool is_ladder = false;
    std::vector<Vertex> left_most;
    bool parallelogram_with_attachments = false;
    bool is_simple = false;
    std::optional<std::vector<Cell>> closed_path;
    std::optional<std::vector<Cell>> weakly_closed_path;
    bool thin_thm51 = false;
    bool thin_reflected = false;
    bool thin_cellwise_intersections = false;

    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

ClassificationRecord classify(const CellCollection& P);

struct CollapseDatum {
    Interval I;
    Interval J;
    std::vector<Cell> PI;
};

// Conditions (1)-(3) of a collapse datum, checked from scratch.
bool is_collapse_datum(const CellCollection& P, const CollapseDatum& d);
// Throws InputError unless P is a simple thin polyomino with >= 2 maximal intervals.
std::optional<CollapseDatum> find_collapse_datum(const CellCollection& P);

struct AntiDiagonalBlock {
    std::vector<Vertex> V;  // v_{k,1}, ..., v_{k,n_k}; steps of (+1,-1)
    std::vector<Cell> C;    // C_{k,l} has anti-diagonal vertices v_{k,l}, v_{k,l+1}
    CellCollection P;       // union of C_1..C_k
};

std::vector<AntiDiagonalBlock> antidiagonal_partition(const CellCollection& P);

// Staircase rooted at V_k: upper-left vertices (i_k+u, j_k+v), 1<=u<=n-1, 2<=v<=n, u+v<=n+1.
std::vector<Cell> staircase_cells(const AntiDiagonalBlock& block);

enum class RenderFormat { ascii, svg };
std::string render(const CellCollection& P, const std::map<Vertex, std::string>& labels,
                   RenderFormat format);

// Format A: "i j" per line, '#' comments. Format B: rows of '.'/'#', top row first.
CellCollection parse_coordinates(const std::string& text);
CellCollection parse_ascii_art(const std::string& text);
// Picks format B when the first significant line consists only of '.' and '#'.
CellCollection parse_cells(const std::string& text);
std::string format_coordinates(const CellCollection& P);

}  // namespace polyideal
