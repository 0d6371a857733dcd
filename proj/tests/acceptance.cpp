// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "polyideal/certificates.hpp"
#include "polyideal/harness.hpp"
#include "polyideal/konig.hpp"
#include "polyideal/lattice.hpp"

using namespace polyideal;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

CellCollection cells(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Cell> out;
    for (auto [i, j] : list) out.push_back(cell(i, j));
    return CellCollection(out);
}

CellCollection block(int w, int h) {
    std::vector<Cell> out;
    for (int i = 1; i <= w; ++i)
        for (int j = 1; j <= h; ++j) out.push_back(cell(i, j));
    return CellCollection(out);
}

CellCollection big_ladder() {
    std::vector<Cell> out;
    std::vector<std::pair<int, int>> rows{{1, 12}, {3, 13}, {4, 9}, {4, 7}, {6, 10}, {6, 8}, {6, 9}};
    for (int j = 1; j <= 7; ++j)
        for (int i = rows[j - 1].first; i <= rows[j - 1].second; ++i) out.push_back(cell(i, j));
    return CellCollection(out);
}

Verdict worked_certificate() {
    auto P = cells({{1, 4}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {3, 2}});
    KonigCertificate c;
    auto add = [&](Interval iv, bool diagonal) {
        auto b = inner_binomial(iv);
        c.chosen.push_back(make_slot(iv, diagonal ? b.diagonal_term() : b.antidiagonal_term()));
    };
    add({{1, 4}, {2, 5}}, true);
    add({{1, 3}, {3, 4}}, true);
    add({{2, 3}, {5, 4}}, false);
    add({{3, 2}, {4, 4}}, true);
    add({{3, 2}, {4, 3}}, false);
    add({{4, 3}, {5, 4}}, true);
    c.height_claim = 6;
    auto v = verify_konig(P, c);
    auto found = konig_auto(P);
    bool found_ok = found && verify_konig(P, *found).passed();
    return {v.passed() && v.height == "confirmed" && found_ok,
            "supplied certificate " + std::string(v.passed() ? "verified" : "rejected") + ", height " + v.height +
                "; search " + (found_ok ? "found " + found->strategy : std::string("failed"))};
}

Verdict initial_products() {
    long count = 0;
    for (int n = 1; n <= 7; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            if (!is_ladder(P)) continue;
            ++count;
            if (!check_initial_product(P).passed) return {false, "fails on\n" + format_coordinates(P)};
        }
    auto big = check_initial_product(big_ladder());
    return {big.passed, std::to_string(count) + " ladders, large example " + (big.passed ? "ok" : big.detail)};
}

Verdict membership_pairs() {
    long ladders = 0, pairs = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            if (!is_ladder(P)) continue;
            ++ladders;
            auto blocks = antidiagonal_partition(P);
            for (std::size_t k = 0; k < blocks.size(); ++k) {
                if (blocks[k].C.empty()) continue;
                auto r = check_lemma_detfk(P, int(k + 1));
                ++pairs;
                if (!r.passed()) return {false, "block " + std::to_string(k + 1) + " of\n" + format_coordinates(P)};
            }
        }
    return {true, std::to_string(ladders) + " ladders, " + std::to_string(pairs) + " blocks"};
}

Verdict chi() {
    auto sweep = chi_sweep(7, 6);
    long checks = 0, expected = 0, fails = 0;
    bool part = true;
    for (auto& s : sweep) {
        checks += s.checks;
        fails += s.failures;
        part = part && s.partition_ok;
        long f = 1;
        for (int k = 2; k <= s.n; ++k) f *= k;
        expected += f * (s.n - 1);
    }
    return {fails == 0 && part && checks == expected,
            std::to_string(checks) + " checks (expected " + std::to_string(expected) + "), " + std::to_string(fails) +
                " failures, pairing " + (part ? "ok" : "broken")};
}

Verdict thin_route() {
    long count = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            if (!is_thin(P) || !thin_thm51(P)) continue;
            ++count;
            auto o = discussion_order(P);
            auto G = reduced_groebner(polyomino_ideal(P), o);
            bool ok = generators_form_reduced_basis(P, o) && is_squarefree(initial_ideal(G)) &&
                      is_prime_binomial(polyomino_ideal(P)).status == PrimeStatus::prime;
            if (!ok) return {false, "fails on\n" + format_coordinates(P)};
        }
    return {count > 0, std::to_string(count) + " instances"};
}

Verdict primality(double ring_limit) {
    long count = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            if (!is_simple(P)) continue;
            ++count;
            auto v = is_prime_binomial(polyomino_ideal(P));
            if (v.status != PrimeStatus::prime)
                return {false, to_string(v.status) + " on\n" + format_coordinates(P)};
        }
    auto t0 = std::chrono::steady_clock::now();
    auto ring = block(3, 3).without({cell(2, 2)});
    auto v = is_prime_binomial(polyomino_ideal(ring));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string tail = "; ring " + to_string(v.status);
    if (v.status == PrimeStatus::inconclusive) return {true, std::to_string(count) + " simple" + tail + " (budget-skip)"};
    return {v.status == PrimeStatus::prime && secs < ring_limit, std::to_string(count) + " simple" + tail};
}

Verdict extraction() {
    std::string detail;
    bool ok = true;
    auto run = [&](const std::string& name, const CellCollection& Q, const CellCollection& Qp) {
        auto r = extraction_pipeline(Q, Qp);
        bool brute = true;
        auto blocks = antidiagonal_partition(r.P);
        std::set<Cell> ca(blocks[r.a - 1].C.begin(), blocks[r.a - 1].C.end());
        std::set<Cell> cb(blocks[r.b - 1].C.begin(), blocks[r.b - 1].C.end());
        for (auto& iv : oracle::inner_intervals(r.P)) {
            bool ha = false, hb = false;
            for (auto& c : iv.cells()) ha |= ca.count(c) > 0, hb |= cb.count(c) > 0;
            if (ha && hb) brute = false;
        }
        bool good = r.condition == brute;
        if (r.condition) good = good && r.sum_equal == true && r.groebner_claim == true && all_passed(r.subchecks);
        ok = ok && good;
        detail += name + ": a=" + std::to_string(r.a) + " b=" + std::to_string(r.b) +
                  " condition=" + (r.condition ? "holds" : "fails") + (good ? "" : " MISMATCH") + "; ";
    };
    run("ring", block(3, 3), cells({{2, 2}}));
    run("edge", block(4, 3), cells({{2, 1}, {3, 1}}));
    return {ok, detail};
}

Verdict membership_oracle() {
    std::mt19937 rng(20240601);
    int agree = 0, members = 0, total = 0;
    while (total < 200) {
        std::uniform_int_distribution<int> nv(2, 8), ng(1, 4), dg(1, 3), coef(-3, 3), bump(0, 2);
        std::vector<Vertex> vars;
        for (int k = 1, n = nv(rng); k <= n; ++k) vars.push_back({k, 1});
        std::uniform_int_distribution<int> pick(0, int(vars.size()) - 1);
        auto mono = [&](int d) {
            Monomial m;
            for (int t = 0; t < d; ++t) m = m * Monomial::var(vars[pick(rng)]);
            return m;
        };
        std::vector<Polynomial> gens;
        for (int k = 0, n = ng(rng); k < n; ++k) {
            int d = dg(rng);
            auto a = mono(d), b = mono(d);
            if (!(a == b)) gens.push_back(Polynomial::term(a, 1) - Polynomial::term(b, 1));
        }
        if (gens.empty()) continue;
        int d = 3;
        Polynomial f;
        for (auto& g : gens) f += g.times(mono(d - int(g.degree()))).scaled(coef(rng));
        if (bump(rng) == 0) f += Polynomial::term(mono(d), coef(rng));
        if (f.is_zero()) continue;
        ++total;
        bool nf = ideal_membership(f, Ideal::make(gens, vars), MonomialOrder(vars, Scheme::grevlex));
        bool la = oracle::linear_algebra_member(f, gens, vars, f.degree());
        agree += nf == la;
        members += nf;
    }
    return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree, " +
                                std::to_string(members) + " members"};
}

Verdict properties() {
    std::mt19937 rng(99);
    long instances = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& P : enumerate_fixed(n)) {
            ++instances;
            auto fail = [&](const std::string& what) { return Verdict{false, what + " on\n" + format_coordinates(P)}; };
            auto mine = inner_intervals(P);
            std::sort(mine.begin(), mine.end());
            if (mine != oracle::inner_intervals(P)) return fail("inner intervals");

            auto blocks = antidiagonal_partition(P);
            std::set<Vertex> seen;
            for (auto& b : blocks)
                for (auto v : b.V)
                    if (!seen.insert(v).second) return fail("partition overlap");
            if (seen != oracle::corners(P)) return fail("partition cover");

            auto I = polyomino_ideal(P);
            auto o = discussion_order(P);
            auto G = reduced_groebner(I, o);
            auto J = I;
            std::shuffle(J.generators.begin(), J.generators.end(), rng);
            if (reduced_groebner(J, o).elements != G.elements) return fail("reduced basis not canonical");
            if (!satisfies_buchberger_criterion(G.elements, o)) return fail("Buchberger criterion");

            if (n <= 5) {
                auto S = saturate_all(I);
                if (!ideal_contains(S, I) || !ideal_equal(saturate_all(S), S)) return fail("saturation");
            }

            auto L = exponent_lattice(I);
            IntMatrix rows;
            for (auto& g : I.generators) {
                auto t = g.terms();
                std::vector<mpz_class> r(L.ambient.size(), 0);
                int sign = 1;
                for (auto& [m, c] : t) {
                    for (std::size_t k = 0; k < L.ambient.size(); ++k) r[k] += sign * int(m.exponent(L.ambient[k]));
                    sign = -sign;
                }
                rows.push_back(r);
            }
            auto h = hermite_normal_form(rows);
            if (abs(int_determinant(h.U)) != 1 || multiply(h.U, rows) != h.H) return fail("HNF unimodularity");
            auto sat = saturate_lattice(L);
            if (saturate_lattice(sat) != sat) return fail("lattice saturation");
        }
    return {true, std::to_string(instances) + " polyominoes"};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds
        std::function<Verdict()> run;
    };
    const double ring_limit = 120;
    std::vector<Criterion> all{
        {1, "worked Konig certificate", 1, worked_certificate},
        {2, "initial term of f on ladders <= 7 cells", 60, initial_products},
        {3, "determinant membership pairs on ladders <= 6 cells", 120, membership_pairs},
        {4, "chi combinatorics n <= 7, pairing n <= 6", 10, chi},
        {5, "thin-route bases and primality <= 6 cells", 300, thin_route},
        {6, "primality of simple polyominoes and the ring", 300, [&] { return primality(ring_limit); }},
        {7, "extraction pipeline", 300, extraction},
        {8, "normal form vs linear algebra membership", 60, membership_oracle},
        {9, "property suites <= 6 cells", 300, properties},
    };
    int failures = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = o.pass && secs <= c.limit;
        failures += !pass;
        std::printf("criterion %d: %s  [%s]  %.2fs / %.0fs  %s\n", c.id, pass ? "PASS" : "FAIL", c.name, secs, c.limit,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
