#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/groebner.hpp"
#include "polyideal/polyring.hpp"

namespace polyideal {

// x_a x_b - x_c x_d for an inner interval with diagonal {a,b} and anti-diagonal {c,d}.
struct InnerBinomial {
    Interval interval;
    std::pair<Vertex, Vertex> diagonal;      // low, high
    std::pair<Vertex, Vertex> antidiagonal;  // upper-left, lower-right
    Polynomial polynomial;

    Monomial diagonal_term() const;
    Monomial antidiagonal_term() const;
};

InnerBinomial inner_binomial(const Interval& iv);
std::vector<InnerBinomial> polyomino_binomials(const CellCollection& P);
// Ambient ring defaults to V(P); extra variables may be added.
Ideal polyomino_ideal(const CellCollection& P, const std::vector<Vertex>& extra_ambient = {});

// x_{i,j} < x_{k,l} iff i<k, or i=k and j<l; graded-revlex unless told otherwise.
MonomialOrder discussion_order(const std::vector<Vertex>& vars, Scheme scheme = Scheme::grevlex);
MonomialOrder discussion_order(const CellCollection& P, Scheme scheme = Scheme::grevlex);
// x_{i,j} < x_{k,l} iff j<l, or j=l and i<k; graded-revlex.
MonomialOrder order6(const CellCollection& P);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

bool all_passed(const std::vector<Check>& checks);

// Determinants f_k of the anti-diagonal blocks, signs normalized so in(f_k) has coefficient 1.
struct KnutsonData {
    std::vector<AntiDiagonalBlock> blocks;
    std::vector<Polynomial> f;       // one per block
    std::vector<Monomial> initial;   // in(f_k)
    Monomial initial_f;              // product of in(f_k)
    Monomial initial_g;              // same, over blocks with |V_k| >= 2
    unsigned degree_f = 0;
    std::optional<Polynomial> product_f;  // only when expand is requested
    std::optional<Polynomial> product_g;
};

// Throws std::length_error when a block exceeds the determinant guard.
KnutsonData knutson_polynomial(const CellCollection& P, bool expand = false,
                               Scheme scheme = Scheme::grevlex);

Monomial product_of_variables(const std::vector<Vertex>& vs);

// in(f) equals the product of all vertex variables.
Check check_initial_product(const CellCollection& P, Scheme scheme = Scheme::grevlex);
// Same with f replaced by g (blocks with at least two vertices) against their vertices.
Check check_initial_product_g(const CellCollection& P);

struct DetPairResult {
    int k = 0;  // 1-based block index
    bool outside_previous = false;                 // f_k not in I_{P_{k-1}}
    std::vector<std::pair<Cell, bool>> with_cell;  // f_k in I_{P_{k-1} + C}
    bool passed() const;
};

// Throws InputError when C_k is empty or k is out of range.
DetPairResult check_lemma_detfk(const CellCollection& P, int k, const Budget& budget = {});

// Staircase containment and connectivity/simplicity of every non-empty P_k.
std::vector<Check> check_partition_shape(const CellCollection& P);

// Permutations store sigma(1..n) as values 1..n.
using Permutation = std::vector<int>;

struct ChiWitness {
    int n = 0;
    int l = 0;
    Permutation sigma;
    char which = 'A';  // 'A': i < l; 'B': i < j
    int i = 0;
    int j = 0;         // equals l in case A
};

bool chi_case_a(int n, int l, const Permutation& s, int i);
bool chi_case_b(int n, const Permutation& s, int i, int j);
std::optional<ChiWitness> chi_check(int n, int l, const Permutation& sigma);
// S(n,l,sigma) in increasing (i+j, i) order.
std::vector<std::pair<int, int>> chi_pairs(int n, int l, const Permutation& sigma);
std::optional<std::pair<int, int>> min_pair(int n, int l, const Permutation& sigma);
Permutation compose_transposition(const Permutation& sigma, int i, int j);
bool is_even(const Permutation& sigma);

struct SnPartition {
    int n = 0;
    int l = 0;
    std::vector<std::pair<Permutation, Permutation>> pairs;  // (even, odd)
    bool covers = false;       // every permutation in exactly one pair
    bool involutive = false;   // the odd partner maps back to the same pair
};
SnPartition sn_partition(int n, int l);

struct ChiSweep {
    int n = 0;
    long checks = 0;
    long failures = 0;
    bool partition_ok = true;
};
std::vector<ChiSweep> chi_sweep(int max_n, int max_partition_n);

enum class KnutsonRoute { none, thin, ladder, konig, weakly_closed_sum };
std::string to_string(KnutsonRoute r);

struct KnutsonReport {
    KnutsonRoute route = KnutsonRoute::none;
    std::string verdict = "not certified";  // certified | certified-with-proxy | not certified
    unsigned f_degree = 0;
    Monomial f_initial;
    std::vector<Check> subchecks;  // every attempted route, prefixed with its name
    std::vector<std::string> proxy_flags;
    std::vector<std::string> skipped;  // routes abandoned on budget
};

KnutsonReport knutson_certify(const CellCollection& P, const Budget& budget = {});

// Thin route ingredients.
bool generators_form_reduced_basis(const CellCollection& P, const MonomialOrder& order,
                                   const Budget& budget = {});

struct ExtractionReport {
    int a = 0;
    int b = 0;
    CellCollection P;
    CellCollection Q1;
    CellCollection Q2;
    bool simple = false;
    bool condition = false;  // no inner interval meets both C_a and C_b
    std::vector<Interval> violating;
    std::optional<bool> sum_equal;      // I_{Q1} + I_{Q2} = I_P
    std::optional<bool> groebner_claim; // inner binomials form the reduced basis
    std::vector<Check> subchecks;
};

// Throws InputError unless Q, Qp are parallelograms with Qp inside Q and Q minus Qp non-empty.
ExtractionReport extraction_pipeline(const CellCollection& Q, const CellCollection& Qp,
                                     const Budget& budget = {});

// Edge-connected components, each sorted; components ordered by their first cell.
std::vector<CellCollection> components(const CellCollection& P);

}  // namespace polyideal
