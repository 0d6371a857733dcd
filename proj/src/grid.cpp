#include "polyideal/grid.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <sstream>

namespace polyideal {

std::string to_string(Vertex v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string to_string(const Interval& iv) {
    return "[" + to_string(iv.low) + "," + to_string(iv.high) + "]";
}

std::vector<Vertex> Cell::vertices() const {
    return {lower_left(), lower_right(), upper_left(), upper_right()};
}

std::vector<Cell> Interval::cells() const {
    std::vector<Cell> out;
    for (int j = low.j; j < high.j; ++j)
        for (int i = low.i; i < high.i; ++i) out.push_back(cell(i, j));
    return out;
}

CellCollection::CellCollection(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        if (cells_[k].ll.i < 1 || cells_[k].ll.j < 1)
            throw InputError("cell " + to_string(cells_[k].ll) + " has a non-positive coordinate");
        if (k > 0 && cells_[k] == cells_[k - 1])
            throw InputError("duplicate cell " + to_string(cells_[k].ll));
    }
}

CellCollection CellCollection::from_set(const std::set<Cell>& cells) {
    return CellCollection(std::vector<Cell>(cells.begin(), cells.end()));
}

bool CellCollection::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

CellCollection CellCollection::translated(int di, int dj) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const auto& c : cells_) out.push_back(cell(c.ll.i + di, c.ll.j + dj));
    return CellCollection(std::move(out));
}

CellCollection CellCollection::normalized() const {
    if (cells_.empty()) return *this;
    int mi = cells_.front().ll.i, mj = cells_.front().ll.j;
    for (const auto& c : cells_) {
        mi = std::min(mi, c.ll.i);
        mj = std::min(mj, c.ll.j);
    }
    return translated(1 - mi, 1 - mj);
}

CellCollection CellCollection::reflected_vertical() const {
    if (cells_.empty()) return *this;
    int mx = 0;
    for (const auto& c : cells_) mx = std::max(mx, c.ll.i);
    std::vector<Cell> out;
    for (const auto& c : cells_) out.push_back(cell(mx + 1 - c.ll.i, c.ll.j));
    return CellCollection(std::move(out));
}

CellCollection CellCollection::without(const std::vector<Cell>& drop) const {
    std::set<Cell> s(cells_.begin(), cells_.end());
    for (const auto& c : drop) s.erase(c);
    return from_set(s);
}

CellCollection CellCollection::with(const std::vector<Cell>& add) const {
    std::set<Cell> s(cells_.begin(), cells_.end());
    s.insert(add.begin(), add.end());
    return from_set(s);
}

std::vector<Vertex> vertex_set(const CellCollection& P) {
    std::set<Vertex> vs;
    for (const auto& c : P)
        for (auto v : c.vertices()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::vector<Interval> inner_intervals(const CellCollection& P) {
    std::vector<Interval> out;
    for (const auto& c : P) {
        int i = c.ll.i, j = c.ll.j;
        for (int w = 1; P.contains(i + w - 1, j); ++w) {
            for (int h = 1;; ++h) {
                bool full = true;
                for (int t = 0; t < w && full; ++t) full = P.contains(i + t, j + h - 1);
                if (!full) break;
                out.push_back({{i, j}, {i + w, j + h}});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Interval> maximal_inner_intervals(const CellCollection& P) {
    auto all = inner_intervals(P);
    std::vector<Interval> out;
    for (const auto& a : all) {
        bool maximal = true;
        for (const auto& b : all)
            if (!(a == b) && b.contains(a)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(a);
    }
    return out;
}

namespace {

const Vertex kSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

std::vector<Cell> neighbours(const CellCollection& P, const Cell& c) {
    std::vector<Cell> out;
    for (auto d : kSteps) {
        Cell n{c.ll + d};
        if (P.contains(n)) out.push_back(n);
    }
    return out;
}

bool edge_adjacent(const Cell& a, const Cell& b) {
    return std::abs(a.ll.i - b.ll.i) + std::abs(a.ll.j - b.ll.j) == 1;
}

bool share_vertex(const Cell& a, const Cell& b) {
    return std::abs(a.ll.i - b.ll.i) <= 1 && std::abs(a.ll.j - b.ll.j) <= 1;
}

}  // namespace

bool is_edge_connected(const CellCollection& P) {
    if (P.empty()) return false;
    std::set<Cell> seen{P.cells().front()};
    std::deque<Cell> q{P.cells().front()};
    while (!q.empty()) {
        Cell c = q.front();
        q.pop_front();
        for (const auto& n : neighbours(P, c))
            if (seen.insert(n).second) q.push_back(n);
    }
    return seen.size() == P.size();
}

bool is_thin(const CellCollection& P) {
    for (const auto& c : P)
        if (P.contains(c.ll.i + 1, c.ll.j) && P.contains(c.ll.i, c.ll.j + 1) &&
            P.contains(c.ll.i + 1, c.ll.j + 1))
            return false;
    return true;
}

bool is_row_convex(const CellCollection& P) {
    std::map<int, std::pair<int, int>> span;  // row -> (min i, count)
    std::map<int, int> hi;
    for (const auto& c : P) {
        auto [it, fresh] = span.try_emplace(c.ll.j, c.ll.i, 0);
        it->second.first = std::min(it->second.first, c.ll.i);
        it->second.second++;
        hi[c.ll.j] = std::max(fresh ? c.ll.i : hi[c.ll.j], c.ll.i);
    }
    for (const auto& [row, s] : span)
        if (hi[row] - s.first + 1 != s.second) return false;
    return true;
}

bool is_col_convex(const CellCollection& P) {
    std::vector<Cell> t;
    for (const auto& c : P) t.push_back(cell(c.ll.j, c.ll.i));
    return is_row_convex(CellCollection(std::move(t)));
}

bool is_simple(const CellCollection& P) {
    if (P.empty()) return true;
    int x0 = P.cells().front().ll.i, x1 = x0, y0 = P.cells().front().ll.j, y1 = y0;
    for (const auto& c : P) {
        x0 = std::min(x0, c.ll.i);
        x1 = std::max(x1, c.ll.i);
        y0 = std::min(y0, c.ll.j);
        y1 = std::max(y1, c.ll.j);
    }
    --x0, --y0, ++x1, ++y1;
    auto inside = [&](Vertex v) { return v.i >= x0 && v.i <= x1 && v.j >= y0 && v.j <= y1; };
    std::size_t outside_total = std::size_t(x1 - x0 + 1) * std::size_t(y1 - y0 + 1) - P.size();
    std::set<Vertex> seen{{x0, y0}};
    std::deque<Vertex> q{{x0, y0}};
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (auto d : kSteps) {
            Vertex n = v + d;
            if (inside(n) && !P.contains(Cell{n}) && seen.insert(n).second) q.push_back(n);
        }
    }
    return seen.size() == outside_total;
}

std::vector<Vertex> left_most_vertices(const CellCollection& P) {
    std::map<int, int> row_min;
    for (auto v : vertex_set(P)) {
        auto [it, fresh] = row_min.try_emplace(v.j, v.i);
        if (!fresh) it->second = std::min(it->second, v.i);
    }
    std::vector<Vertex> out;
    for (auto [j, i] : row_min) out.push_back({i, j});
    return out;
}

bool is_ladder(const CellCollection& P) {
    if (!is_edge_connected(P) || !is_row_convex(P)) return false;
    auto a = left_most_vertices(P);
    for (std::size_t k = 1; k < a.size(); ++k)
        if (!P.contains(a[k].i, a[k].j - 1)) return false;
    return true;
}

bool is_parallelogram(const CellCollection& P) {
    if (!is_edge_connected(P) || !is_row_convex(P) || !is_col_convex(P)) return false;
    auto vs = vertex_set(P);
    std::set<Vertex> s(vs.begin(), vs.end());
    for (auto a : vs)
        for (auto b : vs) {
            if (!s.count({std::min(a.i, b.i), std::min(a.j, b.j)})) return false;
            if (!s.count({std::max(a.i, b.i), std::max(a.j, b.j)})) return false;
        }
    return true;
}

bool is_parallelogram_with_attachments(const CellCollection& P) {
    if (P.empty()) return false;
    if (is_parallelogram(P)) return true;
    if (!is_edge_connected(P)) return false;
    int lo = P.cells().front().ll.j, hi = P.cells().back().ll.j;
    for (int cut = lo + 1; cut <= hi; ++cut) {
        std::vector<Cell> below, above;
        for (const auto& c : P) (c.ll.j < cut ? below : above).push_back(c);
        CellCollection base(below);
        if (!is_parallelogram(base)) continue;
        int top_l = INT_MAX, top_r = INT_MIN;
        for (const auto& c : below)
            if (c.ll.j == cut - 1) top_l = std::min(top_l, c.ll.i), top_r = std::max(top_r, c.ll.i);
        // split the upper part into edge-connected pieces
        std::set<Cell> left(above.begin(), above.end());
        bool ok = true;
        std::set<Vertex> seen_vertices;
        while (ok && !left.empty()) {
            std::set<Cell> piece;
            std::vector<Cell> stack{*left.begin()};
            left.erase(left.begin());
            while (!stack.empty()) {
                Cell c = stack.back();
                stack.pop_back();
                piece.insert(c);
                for (auto d : kSteps)
                    if (left.erase(Cell{c.ll + d})) stack.push_back(Cell{c.ll + d});
            }
            auto R = CellCollection::from_set(piece);
            if (!is_parallelogram(R) || R.cells().front().ll.j != cut) {
                ok = false;
                break;
            }
            int l = INT_MAX, r = INT_MIN;
            for (const auto& c : R)
                if (c.ll.j == cut) l = std::min(l, c.ll.i), r = std::max(r, c.ll.i);
            if (l < top_l || r > top_r) ok = false;
            for (auto v : vertex_set(R))
                if (v.j > cut && !seen_vertices.insert(v).second) ok = false;
            for (auto v : vertex_set(R))
                if (v.j == cut && !seen_vertices.insert(v).second) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

namespace {

// Vertex-disjointness of cells at cyclic distance >= 3.
bool far_cells_disjoint(const std::vector<Cell>& A) {
    std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t d = std::min(j - i, n - (j - i));
            if (d > 2 && share_vertex(A[i], A[j])) return false;
        }
    return true;
}

}  // namespace

std::optional<std::vector<Cell>> closed_path_sequence(const CellCollection& P) {
    if (P.size() < 6 || !is_edge_connected(P)) return std::nullopt;
    for (const auto& c : P)
        if (neighbours(P, c).size() != 2) return std::nullopt;
    // Least cell in (j,i) order has its neighbours above and to the right; go up first.
    Cell start = P.cells().front();
    Cell up = cell(start.ll.i, start.ll.j + 1);
    if (!P.contains(up)) return std::nullopt;
    std::vector<Cell> seq{start, up};
    while (true) {
        auto ns = neighbours(P, seq.back());
        Cell next = ns[0] == seq[seq.size() - 2] ? ns[1] : ns[0];
        if (next == start) break;
        seq.push_back(next);
        if (seq.size() > P.size()) return std::nullopt;
    }
    if (seq.size() != P.size()) return std::nullopt;
    if (!far_cells_disjoint(seq)) return std::nullopt;
    return seq;
}

std::optional<std::vector<Cell>> weakly_closed_path_sequence(const CellCollection& P) {
    std::size_t n = P.size();
    if (n < 6 || !is_edge_connected(P)) return std::nullopt;
    int high = 0;
    for (const auto& c : P) {
        auto d = neighbours(P, c).size();
        if (d > 3) return std::nullopt;
        if (d == 3) ++high;
    }
    if (high > 2) return std::nullopt;

    std::optional<std::vector<Cell>> best;
    std::vector<Cell> path;
    std::set<Cell> used;
    std::function<void()> dfs = [&]() {
        if (path.size() == n) {
            const Cell &a = path.front(), &b = path.back();
            if (share_vertex(a, b) && !edge_adjacent(a, b) && far_cells_disjoint(path))
                if (!best || path < *best) best = path;
            return;
        }
        for (const auto& nb : neighbours(P, path.back()))
            if (!used.count(nb)) {
                used.insert(nb);
                path.push_back(nb);
                dfs();
                path.pop_back();
                used.erase(nb);
            }
    };
    for (const auto& s : P) {
        path = {s};
        used = {s};
        dfs();
    }
    return best;
}

namespace {

bool descending_chain(const CellCollection& P, int di) {
    for (const auto& c : P)
        if (P.contains(c.ll.i + 1, c.ll.j + di) && P.contains(c.ll.i + 2, c.ll.j + 2 * di))
            return true;
    return false;
}

}  // namespace

bool thin_thm51(const CellCollection& P) {
    if (!is_thin(P) || descending_chain(P, -1)) return false;
    for (const auto& I : maximal_inner_intervals(P)) {
        int i1 = I.low.i, j1 = I.low.j, i2 = I.high.i, j2 = I.high.j;
        if (I.width() == 1) {
            // cell with lower-right vertex (i1,j2); cell with upper-left vertex (i1+1,j1)
            if (P.contains(i1 - 1, j2) || P.contains(i1 + 1, j1 - 1)) return false;
        }
        if (I.height() == 1) {
            // cell with lower-right vertex (i1,j1+1); cell with upper-left vertex (i2,j1)
            if (P.contains(i1 - 1, j1 + 1) || P.contains(i2, j1 - 1)) return false;
        }
    }
    return true;
}

bool thin_reflected(const CellCollection& P) {
    if (!is_thin(P) || descending_chain(P, +1)) return false;
    for (const auto& I : maximal_inner_intervals(P)) {
        int i1 = I.low.i, j1 = I.low.j, i2 = I.high.i, j2 = I.high.j;
        if (I.width() == 1) {
            // cell with upper-right vertex (i1,j1); cell with lower-left vertex (i1+1,j2)
            if (P.contains(i1 - 1, j1 - 1) || P.contains(i1 + 1, j2)) return false;
        }
        if (I.height() == 1) {
            // cell with upper-right vertex (i1,j1); cell with lower-left vertex (i2,j1+1)
            if (P.contains(i1 - 1, j1 - 1) || P.contains(i2, j1 + 1)) return false;
        }
    }
    return true;
}

bool thin_cellwise_intersections(const CellCollection& P) {
    if (!is_thin(P)) return false;
    auto M = maximal_inner_intervals(P);
    for (std::size_t a = 0; a < M.size(); ++a)
        for (std::size_t b = a + 1; b < M.size(); ++b) {
            Vertex lo{std::max(M[a].low.i, M[b].low.i), std::max(M[a].low.j, M[b].low.j)};
            Vertex hi{std::min(M[a].high.i, M[b].high.i), std::min(M[a].high.j, M[b].high.j)};
            if (lo.i > hi.i || lo.j > hi.j) continue;  // disjoint as point sets
            if (hi.i - lo.i != 1 || hi.j - lo.j != 1) return false;
        }
    return true;
}

ClassificationRecord classify(const CellCollection& P) {
    ClassificationRecord r;
    r.is_polyomino = is_edge_connected(P);
    r.is_thin = is_thin(P);
    r.is_row_convex = is_row_convex(P);
    r.is_col_convex = is_col_convex(P);
    r.is_convex = r.is_row_convex && r.is_col_convex;
    r.is_parallelogram = is_parallelogram(P);
    r.is_ladder = is_ladder(P);
    r.left_most = left_most_vertices(P);
    r.parallelogram_with_attachments = is_parallelogram_with_attachments(P);
    r.is_simple = is_simple(P);
    r.closed_path = closed_path_sequence(P);
    if (!r.closed_path) r.weakly_closed_path = weakly_closed_path_sequence(P);
    r.thin_thm51 = thin_thm51(P);
    r.thin_reflected = thin_reflected(P);
    r.thin_cellwise_intersections = thin_cellwise_intersections(P);
    return r;
}

namespace {

std::vector<Cell> shared_cells(const Interval& a, const Interval& b) {
    std::vector<Cell> out;
    for (const auto& c : a.cells())
        if (b.contains(c)) out.push_back(c);
    return out;
}

}  // namespace

bool is_collapse_datum(const CellCollection& P, const CollapseDatum& d) {
    auto M = maximal_inner_intervals(P);
    auto isI = std::find(M.begin(), M.end(), d.I) != M.end();
    auto isJ = std::find(M.begin(), M.end(), d.J) != M.end();
    if (!isI || !isJ || d.I == d.J) return false;
    // (1) J is the only maximal interval meeting I in exactly one cell
    for (const auto& K : M) {
        if (K == d.I) continue;
        bool one = shared_cells(d.I, K).size() == 1;
        if ((K == d.J) != one) return false;
    }
    auto C = shared_cells(d.I, d.J).front();
    // (2) PI inside J, avoiding the crossing cell; empty or a sub-polyomino
    for (const auto& c : d.PI)
        if (!d.J.contains(c) || c == C || !P.contains(c)) return false;
    if (!d.PI.empty() && !is_edge_connected(CellCollection(d.PI))) return false;
    // (3) the rest is a non-empty polyomino
    auto drop = d.I.cells();
    drop.insert(drop.end(), d.PI.begin(), d.PI.end());
    auto rest = P.without(drop);
    return !rest.empty() && is_edge_connected(rest);
}

std::optional<CollapseDatum> find_collapse_datum(const CellCollection& P) {
    if (!is_edge_connected(P) || !is_thin(P) || !is_simple(P))
        throw InputError("collapse datum needs a simple thin polyomino");
    auto M = maximal_inner_intervals(P);
    if (M.size() < 2) throw InputError("collapse datum needs at least two maximal inner intervals");

    std::vector<CollapseDatum> candidates;
    for (const auto& I : M) {
        std::vector<Interval> meet;
        for (const auto& K : M)
            if (!(K == I) && shared_cells(I, K).size() == 1) meet.push_back(K);
        if (meet.size() != 1) continue;
        const auto& J = meet.front();
        auto C = shared_cells(I, J).front();
        auto Jc = J.cells();
        std::size_t pos = std::find(Jc.begin(), Jc.end(), C) - Jc.begin();
        candidates.push_back({I, J, {}});
        // contiguous segments of J avoiding C
        for (std::size_t a = 0; a < Jc.size(); ++a)
            for (std::size_t b = a; b < Jc.size(); ++b) {
                if (a <= pos && pos <= b) continue;
                candidates.push_back({I, J, std::vector<Cell>(Jc.begin() + a, Jc.begin() + b + 1)});
            }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const CollapseDatum& x, const CollapseDatum& y) {
                         return x.PI.size() < y.PI.size();
                     });
    for (const auto& d : candidates)
        if (is_collapse_datum(P, d)) return d;
    return std::nullopt;
}

std::vector<AntiDiagonalBlock> antidiagonal_partition(const CellCollection& P) {
    auto vs = vertex_set(P);
    std::vector<std::vector<Vertex>> chains;
    for (auto v : vs) {
        // chain heads: not the lower-right vertex of any cell
        if (P.contains(v.i - 1, v.j)) continue;
        std::vector<Vertex> ch{v};
        while (P.contains(ch.back().i, ch.back().j - 1)) ch.push_back(ch.back() + Vertex{1, -1});
        chains.push_back(std::move(ch));
    }
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        Vertex x = a.front(), y = b.front();
        if (x.i + x.j != y.i + y.j) return x.i + x.j < y.i + y.j;
        return x.i < y.i;
    });
    std::vector<AntiDiagonalBlock> out;
    std::set<Cell> acc;
    for (auto& ch : chains) {
        AntiDiagonalBlock blk;
        blk.V = ch;
        for (std::size_t l = 0; l + 1 < ch.size(); ++l) blk.C.push_back(cell(ch[l].i, ch[l].j - 1));
        acc.insert(blk.C.begin(), blk.C.end());
        blk.P = CellCollection::from_set(acc);
        out.push_back(std::move(blk));
    }
    return out;
}

std::vector<Cell> staircase_cells(const AntiDiagonalBlock& block) {
    int n = int(block.V.size());
    int ik = block.V.front().i - 1, jk = block.V.front().j - n;
    std::vector<Cell> out;
    for (int u = 1; u <= n - 1; ++u)
        for (int v = 2; v <= n && u + v <= n + 1; ++v) out.push_back(cell(ik + u, jk + v - 1));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Box {
    int x0, x1, y0, y1;  // vertex extents
};

Box vertex_box(const CellCollection& P) {
    Box b{1, 1, 1, 1};
    if (P.empty()) return b;
    b = {P.cells().front().ll.i, P.cells().front().ll.i + 1, P.cells().front().ll.j,
         P.cells().front().ll.j + 1};
    for (const auto& c : P) {
        b.x0 = std::min(b.x0, c.ll.i);
        b.x1 = std::max(b.x1, c.ll.i + 1);
        b.y0 = std::min(b.y0, c.ll.j);
        b.y1 = std::max(b.y1, c.ll.j + 1);
    }
    return b;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render(const CellCollection& P, const std::map<Vertex, std::string>& labels,
                   RenderFormat format) {
    Box b = vertex_box(P);
    std::ostringstream os;
    if (format == RenderFormat::ascii) {
        int W = (b.x1 - b.x0) * 4 + 1, H = (b.y1 - b.y0) * 2 + 1;
        std::vector<std::string> canvas(H, std::string(W, ' '));
        auto put = [&](int x, int y, char ch) { canvas[H - 1 - y][x] = ch; };
        for (const auto& c : P) {
            int x = (c.ll.i - b.x0) * 4, y = (c.ll.j - b.y0) * 2;
            for (int t = 1; t < 4; ++t) {
                put(x + t, y, '-');
                put(x + t, y + 2, '-');
            }
            put(x, y + 1, '|');
            put(x + 4, y + 1, '|');
            for (int dx : {0, 4})
                for (int dy : {0, 2}) put(x + dx, y + dy, '+');
        }
        for (auto& line : canvas) {
            while (!line.empty() && line.back() == ' ') line.pop_back();
            os << line << '\n';
        }
        for (const auto& [v, text] : labels) os << text << " = " << to_string(v) << '\n';
        return os.str();
    }
    const int unit = 40, margin = 20;
    int w = (b.x1 - b.x0) * unit + 2 * margin, h = (b.y1 - b.y0) * unit + 2 * margin;
    auto px = [&](int i) { return margin + (i - b.x0) * unit; };
    auto py = [&](int j) { return margin + (b.y1 - j) * unit; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (const auto& c : P)
        os << "  <rect x=\"" << px(c.ll.i) << "\" y=\"" << py(c.ll.j + 1) << "\" width=\"" << unit
           << "\" height=\"" << unit << "\" fill=\"#eeeeee\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (const auto& [v, text] : labels)
        os << "  <text x=\"" << px(v.i) << "\" y=\"" << py(v.j)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << xml_escape(text) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

CellCollection parse_coordinates(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Cell> cells;
    std::set<Cell> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        std::string body = line.substr(0, hash);
        std::vector<std::pair<long long, std::size_t>> nums;  // value, column
        std::size_t k = 0;
        while (k < body.size()) {
            if (std::isspace(static_cast<unsigned char>(body[k]))) {
                ++k;
                continue;
            }
            std::size_t start = k;
            bool neg = body[k] == '-' || body[k] == '+';
            if (neg) ++k;
            std::size_t digits = k;
            while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) ++k;
            if (k == digits || (k < body.size() && !std::isspace(static_cast<unsigned char>(body[k]))))
                throw InputError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(start + 1) + ": expected an integer");
            if (k - digits > 9)
                throw InputError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(start + 1) + ": coordinate out of range");
            nums.push_back({std::stoll(body.substr(start, k - start)), start + 1});
        }
        if (nums.empty()) continue;
        if (nums.size() != 2)
            throw InputError("line " + std::to_string(lineno) + ", column " +
                             std::to_string(nums.size() > 2 ? nums[2].second : body.size() + 1) +
                             ": expected exactly two coordinates \"i j\"");
        for (auto& [val, col] : nums)
            if (val < 1)
                throw InputError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(col) + ": coordinates must be positive");
        Cell c = cell(int(nums[0].first), int(nums[1].first));
        if (!seen.insert(c).second)
            throw InputError("line " + std::to_string(lineno) + ", column 1: duplicate cell " +
                             to_string(c.ll));
        cells.push_back(c);
    }
    if (cells.empty()) throw InputError("no cells in input");
    return CellCollection(std::move(cells));
}

CellCollection parse_ascii_art(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        for (std::size_t k = 0; k < line.size(); ++k)
            if (line[k] != '.' && line[k] != '#' && !std::isspace(static_cast<unsigned char>(line[k])))
                throw InputError("line " + std::to_string(lineno) + ", column " +
                                 std::to_string(k + 1) + ": unexpected character '" + line[k] + "'");
        rows.push_back(line);
    }
    while (!rows.empty() && rows.back().find('#') == std::string::npos) rows.pop_back();
    std::vector<Cell> cells;
    int H = int(rows.size());
    for (int r = 0; r < H; ++r)
        for (std::size_t k = 0; k < rows[r].size(); ++k)
            if (rows[r][k] == '#') cells.push_back(cell(int(k) + 1, H - r));
    if (cells.empty()) throw InputError("no cells in input");
    return CellCollection(std::move(cells)).normalized();
}

CellCollection parse_cells(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool art = true, seen = false;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        seen = true;
        if (line.find_first_not_of(".# \t\r") != std::string::npos) art = false;
    }
    return seen && art ? parse_ascii_art(text) : parse_coordinates(text);
}

std::string format_coordinates(const CellCollection& P) {
    std::ostringstream os;
    for (const auto& c : P) os << c.ll.i << ' ' << c.ll.j << '\n';
    return os.str();
}

}  // namespace polyideal
