#include "polyideal/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace polyideal {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix I(n, std::vector<mpz_class>(n, 0));
    for (std::size_t k = 0; k < n; ++k) I[k][k] = 1;
    return I;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
    std::size_t m = A.size(), k = B.size(), n = k ? B.front().size() : 0;
    IntMatrix C(m, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

mpz_class int_determinant(const IntMatrix& A0) {
    std::size_t n = A0.size();
    if (n == 0) return 1;
    IntMatrix A = A0;
    mpz_class prev = 1;
    int sign = 1;
    // Bareiss
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && A[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                A[i][j] = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                mpz_divexact(A[i][j].get_mpz_t(), A[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = A[k][k];
    }
    return sign * A[n - 1][n - 1];
}

namespace {

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& A) {
    HermiteForm out;
    out.H = A;
    std::size_t m = A.size(), n = m ? A.front().size() : 0;
    out.U = identity_matrix(m);
    auto& H = out.H;
    auto& U = out.U;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        while (true) {
            std::size_t piv = m;
            for (std::size_t i = row; i < m; ++i)
                if (H[i][col] != 0 && (piv == m || abs(H[i][col]) < abs(H[piv][col]))) piv = i;
            if (piv == m) break;
            std::swap(H[row], H[piv]);
            std::swap(U[row], U[piv]);
            bool clear = true;
            for (std::size_t i = row + 1; i < m; ++i) {
                if (H[i][col] == 0) continue;
                mpz_class q = floor_div(H[i][col], H[row][col]);
                row_axpy(H[i], H[row], q);
                row_axpy(U[i], U[row], q);
                if (H[i][col] != 0) clear = false;
            }
            if (clear) break;
        }
        if (H[row][col] == 0) continue;
        if (H[row][col] < 0) {
            for (auto& x : H[row]) x = -x;
            for (auto& x : U[row]) x = -x;
        }
        for (std::size_t i = 0; i < row; ++i) {
            mpz_class q = floor_div(H[i][col], H[row][col]);
            row_axpy(H[i], H[row], q);
            row_axpy(U[i], U[row], q);
        }
        ++row;
    }
    out.rank = row;
    return out;
}

SmithForm smith_normal_form(const IntMatrix& A) {
    SmithForm out;
    std::size_t m = A.size(), n = m ? A.front().size() : 0;
    out.D = A;
    out.U = identity_matrix(m);
    out.V = identity_matrix(n);
    out.Vinv = identity_matrix(n);
    auto& D = out.D;
    auto& U = out.U;
    auto& V = out.V;
    auto& Vi = out.Vinv;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& r : D) std::swap(r[a], r[b]);
        for (auto& r : V) std::swap(r[a], r[b]);
        std::swap(Vi[a], Vi[b]);
    };
    // col_b -= q * col_a
    auto col_axpy = [&](std::size_t b, std::size_t a, const mpz_class& q) {
        if (q == 0) return;
        for (auto& r : D) r[b] -= q * r[a];
        for (auto& r : V) r[b] -= q * r[a];
        for (std::size_t j = 0; j < n; ++j) Vi[a][j] += q * Vi[b][j];
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        std::swap(D[a], D[b]);
        std::swap(U[a], U[b]);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D[i][j] != 0 && (pi == m || abs(D[i][j]) < abs(D[pi][pj]))) pi = i, pj = j;
        if (pi == m) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        while (true) {
            bool done = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D[i][t] == 0) continue;
                mpz_class q = floor_div(D[i][t], D[t][t]);
                row_axpy(D[i], D[t], q);
                row_axpy(U[i], U[t], q);
                if (D[i][t] != 0) done = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D[t][j] == 0) continue;
                col_axpy(j, t, floor_div(D[t][j], D[t][t]));
                if (D[t][j] != 0) done = false;
            }
            if (!done) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (D[i][t] != 0 && abs(D[i][t]) < abs(D[bi][bj])) bi = i, bj = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D[t][j] != 0 && abs(D[t][j]) < abs(D[bi][bj])) bi = t, bj = j;
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // divisibility of the remaining block
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        row_axpy(D[t], D[i], -1);
                        row_axpy(U[t], U[i], -1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (D[t][t] < 0) {
            for (auto& x : D[t]) x = -x;
            for (auto& x : U[t]) x = -x;
        }
        out.divisors.push_back(D[t][t]);
    }
    return out;
}

IntegerLattice lattice_from_rows(std::vector<Vertex> ambient, const IntMatrix& rows) {
    IntegerLattice L;
    L.ambient = std::move(ambient);
    if (rows.empty()) return L;
    auto h = hermite_normal_form(rows);
    for (std::size_t k = 0; k < h.rank; ++k) L.basis.push_back(h.H[k]);
    return L;
}

IntegerLattice exponent_lattice(const Ideal& I) {
    IntMatrix rows;
    for (auto& g : I.generators) {
        if (g.size() != 2) throw InputError("not a pure-difference binomial: " + to_string(g));
        auto it = g.terms().begin();
        const auto& [m1, c1] = *it;
        const auto& [m2, c2] = *std::next(it);
        if (c1 != -c2) throw InputError("not a pure-difference binomial: " + to_string(g));
        std::vector<mpz_class> row;
        for (auto v : I.ambient) row.push_back(mpz_class(long(m1.exponent(v))) - long(m2.exponent(v)));
        rows.push_back(std::move(row));
    }
    return lattice_from_rows(I.ambient, rows);
}

IntegerLattice saturate_lattice(const IntegerLattice& L) {
    if (L.basis.empty()) return L;
    auto s = smith_normal_form(L.basis);
    IntMatrix rows(s.Vinv.begin(), s.Vinv.begin() + long(s.divisors.size()));
    return lattice_from_rows(L.ambient, rows);
}

mpz_class saturation_index(const IntegerLattice& L) {
    mpz_class idx = 1;
    if (L.basis.empty()) return idx;
    for (auto& d : smith_normal_form(L.basis).divisors) idx *= d;
    return idx;
}

bool lattice_contains(const IntegerLattice& L, const std::vector<mpz_class>& v0) {
    auto v = v0;
    for (auto& row : L.basis) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        if (v[p] % row[p] != 0) return false;
        mpz_class q = v[p] / row[p];
        row_axpy(v, row, q);
    }
    return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

Ideal lattice_ideal(const IntegerLattice& L, const Budget& budget) {
    std::vector<Polynomial> gens;
    for (auto& row : L.basis) {
        std::vector<std::pair<Vertex, unsigned>> plus, minus;
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] > 0) plus.push_back({L.ambient[k], unsigned(row[k].get_ui())});
            if (row[k] < 0) minus.push_back({L.ambient[k], unsigned(mpz_class(-row[k]).get_ui())});
        }
        gens.push_back(Polynomial::term(Monomial::from_pairs(plus), 1) -
                       Polynomial::term(Monomial::from_pairs(minus), 1));
    }
    return saturate_all(Ideal::make(std::move(gens), L.ambient), SaturationMethod::automatic, budget);
}

std::string format_lattice(const IntegerLattice& L) {
    std::ostringstream os;
    for (auto& row : L.basis) {
        for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k].get_str();
        os << '\n';
    }
    return os.str();
}

std::string to_string(PrimeStatus s) {
    switch (s) {
        case PrimeStatus::prime: return "prime";
        case PrimeStatus::not_prime: return "not_prime";
        case PrimeStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

PrimeVerdict is_prime_binomial(const Ideal& I, const Budget& budget) {
    PrimeVerdict v;
    try {
        auto L = exponent_lattice(I);
        auto S = saturate_lattice(L);
        Ideal K = lattice_ideal(S, budget);
        auto order = canonical_order(I.ambient);
        auto GI = reduced_groebner(I, order, budget);
        auto GK = reduced_groebner(K, order, budget);
        if (GI.elements == GK.elements) {
            v.status = PrimeStatus::prime;
            v.note = "equals the lattice ideal of its saturated lattice (characteristic 0)";
            return v;
        }
        v.status = PrimeStatus::not_prime;
        for (auto& g : GK.elements)
            if (!normal_form(g, GI.elements, order, budget).is_zero() &&
                (!v.witness || g.degree() < v.witness->degree()))
                v.witness = g;
        v.note = "lattice index " + saturation_index(L).get_str();
    } catch (const BudgetExceeded& e) {
        v.status = PrimeStatus::inconclusive;
        v.note = std::string("budget: ") + e.what();
    }
    return v;
}

}  // namespace polyideal
