#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyideal/polyring.hpp"

namespace polyideal {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Budget {
    std::size_t max_pairs = 20000;
    std::size_t max_term_ops = 1000000;
    std::size_t max_vars = 60;

    // Reads POLYIDEAL_BUDGET_PAIRS / POLYIDEAL_BUDGET_TERMS when set.
    static Budget from_env();
};

// Generators plus the ambient variables of the ring they live in.
struct Ideal {
    std::vector<Polynomial> generators;
    std::vector<Vertex> ambient;  // sorted row-major

    static Ideal make(std::vector<Polynomial> gens, std::vector<Vertex> extra_ambient = {});
};

struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    bool reduced = false;
};

// Work counters from the last engine run on this thread.
struct EngineStats {
    std::size_t pairs = 0;
    std::size_t term_ops = 0;
};
EngineStats last_engine_stats();

// lcm/in(f)*f/lc(f) - lcm/in(g)*g/lc(g)
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Full division; the first divisor in list order wins on ties.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order, const Budget& budget = {});

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order, const Budget& budget = {});
// Monic, inter-reduced, sorted by (degree of initial term, order of initial term).
GroebnerBasis reduce(const GroebnerBasis& G, const Budget& budget = {});
GroebnerBasis reduced_groebner(const Ideal& I, const MonomialOrder& order, const Budget& budget = {});

// Every S-pair reduces to zero modulo G.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& G, const MonomialOrder& order,
                                    const Budget& budget = {});

// Graded-revlex over the ambient variables in column-major order.
MonomialOrder canonical_order(const std::vector<Vertex>& ambient);

bool ideal_membership(const Polynomial& f, const Ideal& I, const MonomialOrder& order,
                      const Budget& budget = {});
bool ideal_membership(const Polynomial& f, const GroebnerBasis& reduced_basis);
bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget = {});
bool ideal_contains(const Ideal& big, const Ideal& small, const Budget& budget = {});
Ideal ideal_sum(const Ideal& I, const Ideal& J);

enum class SaturationMethod { automatic, bayer, rabinowitsch };

// I : m^infinity. Bayer's revlex trick per variable needs homogeneous generators.
Ideal saturate(const Ideal& I, const Monomial& m, SaturationMethod method = SaturationMethod::automatic,
               const Budget& budget = {});
// I : (product of all ambient variables)^infinity
Ideal saturate_all(const Ideal& I, SaturationMethod method = SaturationMethod::automatic,
                   const Budget& budget = {});

// Minimal monomial generators.
struct MonomialIdeal {
    std::vector<Monomial> generators;
    std::vector<Vertex> ambient;
};

MonomialIdeal minimize(MonomialIdeal M);
MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& order, const Budget& budget = {});
MonomialIdeal initial_ideal(const GroebnerBasis& G);
bool is_squarefree(const MonomialIdeal& M);

// Minimal vertex covers of the generator supports; requires squarefree generators.
std::vector<std::vector<Vertex>> minimal_primes(const MonomialIdeal& M);
std::size_t monomial_height(const MonomialIdeal& M);
bool is_unmixed(const MonomialIdeal& M);

std::string format_basis(const GroebnerBasis& G);

}  // namespace polyideal
