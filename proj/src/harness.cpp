#include "polyideal/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polyideal/certificates.hpp"
#include "polyideal/konig.hpp"
#include "polyideal/lattice.hpp"

namespace polyideal {

const std::vector<long>& fixed_polyomino_counts() {
    static const std::vector<long> counts{1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446};
    return counts;
}

namespace {

using Shape = std::set<std::pair<int, int>>;

Shape normalize(const Shape& s) {
    int mi = INT32_MAX, mj = INT32_MAX;
    for (auto [i, j] : s) mi = std::min(mi, i), mj = std::min(mj, j);
    Shape out;
    for (auto [i, j] : s) out.insert({i - mi + 1, j - mj + 1});
    return out;
}

std::mutex g_enum_mutex;
std::vector<std::set<Shape>> g_levels;

}  // namespace

std::vector<CellCollection> enumerate_fixed(int n) {
    if (n < 1 || n > kMaxEnumerationCells)
        throw InputError("enumeration supports 1 to " + std::to_string(kMaxEnumerationCells) + " cells");
    std::set<Shape> level;
    {
        std::lock_guard<std::mutex> lock(g_enum_mutex);
        if (g_levels.empty()) g_levels.push_back({Shape{{1, 1}}});
        while (int(g_levels.size()) < n) {
            std::set<Shape> next;
            for (const auto& s : g_levels.back())
                for (auto [i, j] : s)
                    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                        std::pair<int, int> c{i + di, j + dj};
                        if (s.count(c)) continue;
                        Shape t = s;
                        t.insert(c);
                        next.insert(normalize(t));
                    }
            g_levels.push_back(std::move(next));
        }
        level = g_levels[n - 1];
    }
    std::vector<CellCollection> out;
    for (const auto& s : level) {
        std::vector<Cell> cells;
        for (auto [i, j] : s) cells.push_back(cell(i, j));
        out.emplace_back(std::move(cells));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Outcome verdict(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

std::vector<Claim> build_claims() {
    std::vector<Claim> c;
    c.push_back({"lemma44-ladder", "in(f) is the product of all vertex variables on ladders",
                 [](const ClassificationRecord& r) { return r.is_ladder; },
                 [](const CellCollection& P, const Budget&, std::string& note) {
                     auto ch = check_initial_product(P);
                     note = ch.detail;
                     return verdict(ch.passed);
                 }});
    c.push_back({"lemma47-ladder", "f_k lies outside I_{P_{k-1}} and inside I_{P_{k-1}+C}",
                 [](const ClassificationRecord& r) { return r.is_ladder; },
                 [](const CellCollection& P, const Budget& b, std::string& note) {
                     auto blocks = antidiagonal_partition(P);
                     for (std::size_t k = 0; k < blocks.size(); ++k) {
                         if (blocks[k].C.empty()) continue;
                         if (!check_lemma_detfk(P, int(k + 1), b).passed()) {
                             note = "block " + std::to_string(k + 1);
                             return Outcome::fail;
                         }
                     }
                     for (auto& ch : check_partition_shape(P))
                         if (!ch.passed) {
                             note = ch.name + " " + ch.detail;
                             return Outcome::fail;
                         }
                     return Outcome::pass;
                 }});
    c.push_back({"simple-thin-konig", "simple thin polyominoes carry a Konig certificate",
                 [](const ClassificationRecord& r) { return r.is_polyomino && r.is_simple && r.is_thin; },
                 [](const CellCollection& P, const Budget& b, std::string& note) {
                     auto cert = konig_auto(P);
                     if (!cert) {
                         note = "no certificate";
                         return Outcome::fail;
                     }
                     auto v = verify_konig(P, *cert, b);
                     note = cert->strategy + ", height " + v.height;
                     if (v.height == "assumed") return Outcome::skip;
                     return verdict(v.passed());
                 }});
    c.push_back({"thm51-gb", "inner binomials form the reduced basis under the column order",
                 [](const ClassificationRecord& r) { return r.thin_thm51; },
                 [](const CellCollection& P, const Budget& b, std::string& note) {
                     auto order = discussion_order(P);
                     auto G = reduced_groebner(polyomino_ideal(P), order, b);
                     bool sq = is_squarefree(initial_ideal(G));
                     bool gb = generators_form_reduced_basis(P, order, b);
                     note = std::to_string(G.elements.size()) + " elements";
                     return verdict(sq && gb);
                 }});
    c.push_back({"prop55-prime", "pairwise cell intersections give a reduced basis and a prime ideal",
                 [](const ClassificationRecord& r) { return r.is_polyomino && r.thin_cellwise_intersections; },
                 [](const CellCollection& P, const Budget& b, std::string& note) {
                     bool gb = generators_form_reduced_basis(P, order6(P), b);
                     auto pv = is_prime_binomial(polyomino_ideal(P), b);
                     note = to_string(pv.status);
                     if (pv.status == PrimeStatus::inconclusive) return Outcome::skip;
                     return verdict(gb && pv.status == PrimeStatus::prime);
                 }});
    c.push_back({"prop411-gb", "parallelogram with stacked parallelograms: inner binomials form a basis",
                 [](const ClassificationRecord& r) { return r.parallelogram_with_attachments; },
                 [](const CellCollection& P, const Budget& b, std::string&) {
                     return verdict(generators_form_reduced_basis(P, discussion_order(P), b));
                 }});
    c.push_back({"simple-prime", "simple polyominoes are prime",
                 [](const ClassificationRecord& r) { return r.is_polyomino && r.is_simple; },
                 [](const CellCollection& P, const Budget& b, std::string& note) {
                     auto pv = is_prime_binomial(polyomino_ideal(P), b);
                     note = to_string(pv.status);
                     if (pv.status == PrimeStatus::inconclusive) return Outcome::skip;
                     return verdict(pv.status == PrimeStatus::prime);
                 }});
    c.push_back({"thm41-ladder", "ladder polyominoes are certified Knutson",
                 [](const ClassificationRecord& r) { return r.is_ladder; },
                 [](const CellCollection& P, const Budget& b, std::string& note) {
                     auto rep = knutson_certify(P, b);
                     note = to_string(rep.route);
                     if (rep.route == KnutsonRoute::none && !rep.skipped.empty()) return Outcome::skip;
                     return verdict(rep.verdict == "certified");
                 }});
    return c;
}

}  // namespace

const std::vector<Claim>& registered_claims() {
    static const std::vector<Claim> claims = build_claims();
    return claims;
}

const Claim& find_claim(const std::string& name) {
    for (const auto& c : registered_claims())
        if (c.name == name) return c;
    throw InputError("unknown claim: " + name);
}

BatchReport batch_verify(const Claim& claim, int n_max, const Budget& budget, bool parallel) {
    BatchReport rep;
    if (n_max < 1 || n_max > kMaxEnumerationCells)
        throw InputError("n_max must lie in 1.." + std::to_string(kMaxEnumerationCells));
    for (int n = 1; n <= std::min(n_max, 8); ++n)
        if (long(enumerate_fixed(n).size()) != fixed_polyomino_counts()[n - 1]) rep.enumeration_ok = false;
    if (!rep.enumeration_ok) return rep;

    for (int n = 1; n <= n_max; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        auto all = enumerate_fixed(n);
        std::vector<CellCollection> inst;
        for (auto& P : all)
            if (claim.hypothesis(classify(P))) inst.push_back(std::move(P));
        std::vector<Outcome> out(inst.size(), Outcome::skip);
        std::vector<std::string> notes(inst.size());
        long count = long(inst.size());
        auto run = [&](long k) {
            try {
                out[k] = claim.check(inst[k], budget, notes[k]);
            } catch (const BudgetExceeded& e) {
                out[k] = Outcome::skip;
                notes[k] = e.what();
            } catch (const std::length_error& e) {
                out[k] = Outcome::skip;
                notes[k] = e.what();
            } catch (const std::exception& e) {
                out[k] = Outcome::fail;
                notes[k] = std::string("error: ") + e.what();
            }
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long k = 0; k < count; ++k) run(k);
        } else {
            for (long k = 0; k < count; ++k) run(k);
        }
        TallyRow row{claim.name, n};
        for (long k = 0; k < count; ++k) {
            if (out[k] == Outcome::pass) ++row.passes;
            if (out[k] == Outcome::skip) ++row.skips;
            if (out[k] == Outcome::fail) {
                ++row.fails;
                if (!rep.failure) {
                    rep.failure = inst[k];
                    rep.failure_note = notes[k];
                }
            }
        }
        row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.rows.push_back(row);
        if (rep.failure) break;
    }
    return rep;
}

std::string tally_csv(const std::vector<TallyRow>& rows, bool with_wall_time) {
    std::ostringstream os;
    os << "claim,n,passes,fails,skips" << (with_wall_time ? ",wall_time" : "") << '\n';
    for (const auto& r : rows) {
        os << r.claim << ',' << r.n << ',' << r.passes << ',' << r.fails << ',' << r.skips;
        if (with_wall_time) os << ',' << std::fixed << std::setprecision(3) << r.wall_seconds;
        os << '\n';
    }
    return os.str();
}

}  // namespace polyideal
