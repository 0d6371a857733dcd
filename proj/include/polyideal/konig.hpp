#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyideal/certificates.hpp"

namespace polyideal {

struct KonigSlot {
    InnerBinomial binomial;
    Monomial claimed;  // one of the two terms of the binomial
    Monomial other() const;
};

struct KonigCertificate {
    std::vector<KonigSlot> chosen;
    std::vector<std::pair<Vertex, Rational>> weight;  // realizing weights, may be empty before verification
    std::size_t height_claim = 0;
    std::string strategy;
};

enum class KonigStrategy { generic, interval, weakly_closed, simple_thin_recursive };
std::string to_string(KonigStrategy s);
KonigStrategy parse_strategy(const std::string& s);

// Weights w >= 0 with w(claimed) - w(other) >= 1 for every slot, or nullopt.
std::optional<std::vector<std::pair<Vertex, Rational>>> realizing_weight(
    const std::vector<KonigSlot>& slots);

struct KonigVerification {
    bool generators = false;   // every slot is an inner-interval binomial of P
    bool count = false;        // #slots = #cells = height claim
    bool coprime = false;      // claims squarefree and pairwise coprime
    bool realizable = false;   // strict weight exists
    std::string height = "unchecked";  // confirmed | mismatch | assumed
    std::vector<std::pair<Vertex, Rational>> weight;
    std::string detail;
    bool passed() const;
};

KonigVerification verify_konig(const CellCollection& P, const KonigCertificate& cert,
                               const Budget& budget = {}, bool check_height = true);

// Returned certificates always pass verify_konig (height aside) and carry their weights.
std::optional<KonigCertificate> konig_search(const CellCollection& P, KonigStrategy strategy,
                                             std::size_t node_limit = 200000);

// Tries the strategy suited to P's shape, then the generic search.
std::optional<KonigCertificate> konig_auto(const CellCollection& P);

// Builds a slot, checking that the claim is a term of the interval binomial.
KonigSlot make_slot(const Interval& iv, const Monomial& claimed);

}  // namespace polyideal
