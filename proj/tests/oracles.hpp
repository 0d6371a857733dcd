#pragma once

// Independent reference implementations. Nothing here calls into the library's algorithms,
// only its data types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/polyring.hpp"

namespace oracle {

using namespace polyideal;

inline std::set<Vertex> corners(const CellCollection& P) {
    std::set<Vertex> out;
    for (const auto& c : P)
        for (int di = 0; di <= 1; ++di)
            for (int dj = 0; dj <= 1; ++dj) out.insert({c.ll.i + di, c.ll.j + dj});
    return out;
}

// Every pair of vertices spanning a proper rectangle whose cells all lie in P.
inline std::vector<Interval> inner_intervals(const CellCollection& P) {
    auto V = corners(P);
    std::vector<Interval> out;
    for (auto a : V)
        for (auto b : V) {
            if (a.i >= b.i || a.j >= b.j) continue;
            bool ok = true;
            for (int i = a.i; i < b.i && ok; ++i)
                for (int j = a.j; j < b.j && ok; ++j) ok = P.contains(i, j);
            if (ok) out.push_back({a, b});
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Redelmeier's untried-set counting of fixed polyominoes with exactly n cells.
inline long redelmeier(int n) {
    // cells (x, y) with y > 0, or y == 0 and x >= 0
    auto allowed = [](int x, int y) { return y > 0 || (y == 0 && x >= 0); };
    long count = 0;
    std::set<std::pair<int, int>> placed, seen;
    std::function<void(std::vector<std::pair<int, int>>, int)> grow =
        [&](std::vector<std::pair<int, int>> untried, int size) {
            while (!untried.empty()) {
                auto c = untried.back();
                untried.pop_back();
                if (size + 1 == n) {
                    ++count;
                    continue;
                }
                placed.insert(c);
                auto next = untried;
                std::vector<std::pair<int, int>> added;
                for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                    std::pair<int, int> d{c.first + dx, c.second + dy};
                    if (!allowed(d.first, d.second) || seen.count(d)) continue;
                    seen.insert(d);
                    added.push_back(d);
                    next.push_back(d);
                }
                grow(next, size + 1);
                for (auto d : added) seen.erase(d);
                placed.erase(c);
            }
        };
    seen.insert({0, 0});
    grow({{0, 0}}, 0);
    return count;
}

// Sum over permutations with explicit sign.
inline Polynomial leibniz(const SymbolicMatrix& M) {
    int n = int(M.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Polynomial det;
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) inv += p[a] > p[b];
        Polynomial t(1);
        for (int a = 0; a < n; ++a) t *= M[a][p[a]];
        det += inv % 2 ? -t : t;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

// Fourier-Motzkin: does some x >= 0 satisfy every row a.x >= b?
inline bool fourier_motzkin(std::vector<std::vector<mpq_class>> A, std::vector<mpq_class> b) {
    std::size_t n = A.empty() ? 0 : A.front().size();
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<mpq_class> e(n, 0);
        e[k] = 1;
        A.push_back(e);
        b.push_back(0);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::size_t> pos, neg, zero;
        for (std::size_t r = 0; r < A.size(); ++r) (A[r][k] > 0 ? pos : A[r][k] < 0 ? neg : zero).push_back(r);
        std::vector<std::vector<mpq_class>> A2;
        std::vector<mpq_class> b2;
        for (auto r : zero) A2.push_back(A[r]), b2.push_back(b[r]);
        for (auto p : pos)
            for (auto q : neg) {
                mpq_class sp = -A[q][k], sq = A[p][k];
                std::vector<mpq_class> row(n);
                for (std::size_t c = 0; c < n; ++c) row[c] = sp * A[p][c] + sq * A[q][c];
                A2.push_back(row);
                b2.push_back(sp * b[p] + sq * b[q]);
            }
        A = std::move(A2);
        b = std::move(b2);
    }
    for (auto& v : b)
        if (v > 0) return false;
    return true;
}

inline void monomials_of_degree(const std::vector<Vertex>& vars, unsigned d, std::size_t from,
                                Monomial cur, std::vector<Monomial>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = from; k < vars.size(); ++k)
        monomials_of_degree(vars, d - 1, k, cur * Monomial::var(vars[k]), out);
}

// Is f in the span of { m * g : deg(m * g) <= bound }?  Exact Gaussian elimination.
inline bool linear_algebra_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                                  const std::vector<Vertex>& vars, unsigned bound) {
    std::vector<Polynomial> span;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > bound) continue;
        for (unsigned d = 0; d + g.degree() <= bound; ++d) {
            std::vector<Monomial> ms;
            monomials_of_degree(vars, d, 0, Monomial{}, ms);
            for (auto& m : ms) span.push_back(g.times(m));
        }
    }
    std::map<Monomial, std::size_t> col;
    auto index = [&](const Polynomial& p) {
        for (auto& [m, c] : p.terms()) col.emplace(m, col.size());
    };
    for (auto& p : span) index(p);
    index(f);
    auto dense = [&](const Polynomial& p) {
        std::vector<mpq_class> row(col.size(), 0);
        for (auto& [m, c] : p.terms()) row[col[m]] = c;
        return row;
    };
    // echelon basis keyed by pivot column
    std::map<std::size_t, std::vector<mpq_class>> basis;
    auto reduce = [&](std::vector<mpq_class> row) {
        for (auto& [piv, b] : basis) {
            if (row[piv] == 0) continue;
            mpq_class s = row[piv];
            for (std::size_t c = 0; c < row.size(); ++c) row[c] -= s * b[c];
        }
        return row;
    };
    for (auto& p : span) {
        auto row = reduce(dense(p));
        auto it = std::find_if(row.begin(), row.end(), [](const mpq_class& q) { return q != 0; });
        if (it == row.end()) continue;
        std::size_t piv = std::size_t(it - row.begin());
        mpq_class s = row[piv];
        for (auto& q : row) q /= s;
        for (auto& [p2, b] : basis)
            if (b[piv] != 0) {
                mpq_class t = b[piv];
                for (std::size_t c = 0; c < b.size(); ++c) b[c] -= t * row[c];
            }
        basis.emplace(piv, row);
    }
    auto r = reduce(dense(f));
    return std::all_of(r.begin(), r.end(), [](const mpq_class& q) { return q == 0; });
}

}  // namespace oracle
