#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "polyideal/groebner.hpp"

namespace polyideal {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);
// Exact determinant by fraction-free elimination.
mpz_class int_determinant(const IntMatrix& A);

struct HermiteForm {
    IntMatrix H;  // U * A, row echelon, positive pivots, reduced above pivots
    IntMatrix U;  // unimodular
    std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& A);

struct SmithForm {
    IntMatrix D;     // U * A * V, diagonal d_1 | d_2 | ...
    IntMatrix U;     // unimodular
    IntMatrix V;     // unimodular
    IntMatrix Vinv;  // inverse of V
    std::vector<mpz_class> divisors;  // non-zero diagonal entries
};
SmithForm smith_normal_form(const IntMatrix& A);

// Row lattice in Z^n; coordinates follow `ambient`.
struct IntegerLattice {
    std::vector<Vertex> ambient;  // sorted row-major
    IntMatrix basis;              // Hermite normal form, no zero rows

    std::size_t rank() const { return basis.size(); }
    friend bool operator==(const IntegerLattice&, const IntegerLattice&) = default;
};

IntegerLattice lattice_from_rows(std::vector<Vertex> ambient, const IntMatrix& rows);
// Differences of the exponent vectors of pure-difference binomials. Throws InputError otherwise.
IntegerLattice exponent_lattice(const Ideal& I);
IntegerLattice saturate_lattice(const IntegerLattice& L);
// [Sat(L) : L] as the product of the elementary divisors.
mpz_class saturation_index(const IntegerLattice& L);
bool lattice_contains(const IntegerLattice& L, const std::vector<mpz_class>& v);
// Binomials of the basis rows, saturated by the product of all variables.
Ideal lattice_ideal(const IntegerLattice& L, const Budget& budget = {});
std::string format_lattice(const IntegerLattice& L);

enum class PrimeStatus { prime, not_prime, inconclusive };

struct PrimeVerdict {
    PrimeStatus status = PrimeStatus::inconclusive;
    std::optional<Polynomial> witness;  // element of the saturated lattice ideal outside I
    std::string note;
};

// Characteristic zero: a pure-difference binomial ideal without monomials is prime
// iff it equals the lattice ideal of its saturated exponent lattice.
PrimeVerdict is_prime_binomial(const Ideal& I, const Budget& budget = {});
std::string to_string(PrimeStatus s);

}  // namespace polyideal
