#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyideal/grid.hpp"
#include "polyideal/groebner.hpp"

namespace polyideal {

constexpr int kMaxEnumerationCells = 10;

// Every fixed polyomino with n cells, normalized to minimum coordinates 1, in canonical order.
std::vector<CellCollection> enumerate_fixed(int n);
// Fixed-polyomino counts for n = 1..10.
const std::vector<long>& fixed_polyomino_counts();

enum class Outcome { pass, fail, skip };

struct Claim {
    std::string name;
    std::string statement;
    std::function<bool(const ClassificationRecord&)> hypothesis;
    std::function<Outcome(const CellCollection&, const Budget&, std::string& note)> check;
};

const std::vector<Claim>& registered_claims();
const Claim& find_claim(const std::string& name);  // throws InputError

struct TallyRow {
    std::string claim;
    int n = 0;
    long passes = 0;
    long fails = 0;
    long skips = 0;
    double wall_seconds = 0;
};

struct BatchReport {
    std::vector<TallyRow> rows;
    bool enumeration_ok = true;
    std::optional<CellCollection> failure;  // first failing instance in canonical order
    std::string failure_note;
    bool clean() const { return enumeration_ok && !failure; }
};

// Instances are spread over worker threads; results merge in enumeration order.
BatchReport batch_verify(const Claim& claim, int n_max, const Budget& budget = {}, bool parallel = true);
// Serial reference used by tests and the benchmark.
inline BatchReport batch_verify_serial(const Claim& claim, int n_max, const Budget& budget = {}) {
    return batch_verify(claim, n_max, budget, false);
}

std::string tally_csv(const std::vector<TallyRow>& rows, bool with_wall_time = true);

}  // namespace polyideal
