#include "polyideal/lp.hpp"

#include <stdexcept>

namespace polyideal {

std::optional<std::vector<mpq_class>> feasible_point(const RationalMatrix& A,
                                                     const std::vector<mpq_class>& b) {
    std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("feasible_point: row count mismatch");
    std::size_t n = m ? A.front().size() : 0;
    for (auto& row : A)
        if (row.size() != n) throw std::invalid_argument("feasible_point: ragged matrix");
    if (m == 0) return std::vector<mpq_class>(n, 0);

    // columns: x (n), surplus (m), artificial (m), rhs
    std::size_t cols = n + 2 * m;
    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(cols + 1, 0));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        int sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) T[i][j] = sign * A[i][j];
        T[i][n + i] = -sign;
        T[i][n + m + i] = 1;
        T[i][cols] = sign * b[i];
        basis[i] = n + m + i;
    }
    // reduced costs of the phase-one objective (sum of artificials)
    std::vector<mpq_class> r(cols + 1, 0);
    for (std::size_t j = 0; j <= cols; ++j) {
        if (j >= n + m && j < cols) continue;
        for (std::size_t i = 0; i < m; ++i) r[j] -= T[i][j];
    }
    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (r[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            mpq_class ratio = T[i][cols] / T[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction cannot occur in phase one
        mpq_class piv = T[leave][enter];
        for (auto& x : T[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            mpq_class f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (r[enter] != 0) {
            mpq_class f = r[enter];
            for (std::size_t j = 0; j <= cols; ++j) r[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    // r[cols] holds minus the artificial sum
    if (r[cols] != 0) return std::nullopt;
    std::vector<mpq_class> x(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = T[i][cols];
    return x;
}

}  // namespace polyideal
