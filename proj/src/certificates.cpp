#include "polyideal/certificates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polyideal/konig.hpp"

namespace polyideal {

Monomial InnerBinomial::diagonal_term() const {
    return Monomial::var(diagonal.first) * Monomial::var(diagonal.second);
}

Monomial InnerBinomial::antidiagonal_term() const {
    return Monomial::var(antidiagonal.first) * Monomial::var(antidiagonal.second);
}

InnerBinomial inner_binomial(const Interval& iv) {
    InnerBinomial b;
    b.interval = iv;
    b.diagonal = {iv.low, iv.high};
    b.antidiagonal = {iv.upper_left(), iv.lower_right()};
    b.polynomial = Polynomial::term(b.diagonal_term(), 1) - Polynomial::term(b.antidiagonal_term(), 1);
    return b;
}

std::vector<InnerBinomial> polyomino_binomials(const CellCollection& P) {
    std::vector<InnerBinomial> out;
    for (const auto& iv : inner_intervals(P)) out.push_back(inner_binomial(iv));
    return out;
}

Ideal polyomino_ideal(const CellCollection& P, const std::vector<Vertex>& extra_ambient) {
    std::vector<Polynomial> gens;
    for (auto& b : polyomino_binomials(P)) gens.push_back(b.polynomial);
    auto amb = vertex_set(P);
    amb.insert(amb.end(), extra_ambient.begin(), extra_ambient.end());
    return Ideal::make(std::move(gens), amb);
}

MonomialOrder discussion_order(const std::vector<Vertex>& vars, Scheme scheme) {
    return MonomialOrder(column_major(vars), scheme);
}

MonomialOrder discussion_order(const CellCollection& P, Scheme scheme) {
    return discussion_order(vertex_set(P), scheme);
}

MonomialOrder order6(const CellCollection& P) {
    return MonomialOrder(vertex_set(P), Scheme::grevlex);  // vertex_set is row-major already
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Monomial product_of_variables(const std::vector<Vertex>& vs) {
    std::vector<std::pair<Vertex, unsigned>> p;
    for (auto v : vs) p.push_back({v, 1});
    return Monomial::from_pairs(std::move(p));
}

namespace {

Polynomial block_determinant(const AntiDiagonalBlock& blk, const std::set<Vertex>& V) {
    int n = int(blk.V.size());
    if (n == 1) return Polynomial::var(blk.V.front());
    int ik = blk.V.front().i - 1, jk = blk.V.front().j - n;
    SymbolicMatrix M(n, std::vector<Polynomial>(n));
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            Vertex v{ik + a, jk + b};
            if (V.count(v)) M[a - 1][b - 1] = Polynomial::var(v);
        }
    return determinant(M);
}

}  // namespace

KnutsonData knutson_polynomial(const CellCollection& P, bool expand, Scheme scheme) {
    KnutsonData d;
    d.blocks = antidiagonal_partition(P);
    auto vs = vertex_set(P);
    std::set<Vertex> V(vs.begin(), vs.end());
    auto order = discussion_order(vs, scheme);
    for (auto& blk : d.blocks) {
        auto fk = block_determinant(blk, V);
        auto lt = initial_term(order, fk);
        if (lt.coefficient < 0) fk = -fk;
        d.f.push_back(fk);
        d.initial.push_back(lt.monomial);
        d.initial_f = d.initial_f * lt.monomial;
        if (blk.V.size() >= 2) d.initial_g = d.initial_g * lt.monomial;
        d.degree_f += fk.degree();
    }
    if (expand) {
        Polynomial f(1), g(1);
        for (std::size_t k = 0; k < d.f.size(); ++k) {
            f *= d.f[k];
            if (d.blocks[k].V.size() >= 2) g *= d.f[k];
        }
        d.product_f = f;
        d.product_g = g;
    }
    return d;
}

Check check_initial_product(const CellCollection& P, Scheme scheme) {
    Check c{"initial-product", false, ""};
    auto d = knutson_polynomial(P, false, scheme);
    auto want = product_of_variables(vertex_set(P));
    c.passed = d.initial_f == want;
    c.detail = "in(f) = " + to_string(d.initial_f) + " over " + std::to_string(d.blocks.size()) + " blocks";
    return c;
}

Check check_initial_product_g(const CellCollection& P) {
    Check c{"initial-product-g", false, ""};
    auto d = knutson_polynomial(P);
    std::vector<Vertex> vs;
    for (auto& b : d.blocks)
        if (b.V.size() >= 2) vs.insert(vs.end(), b.V.begin(), b.V.end());
    c.passed = d.initial_g == product_of_variables(vs);
    c.detail = "in(g) = " + to_string(d.initial_g);
    return c;
}

bool DetPairResult::passed() const {
    return outside_previous && std::all_of(with_cell.begin(), with_cell.end(),
                                           [](const auto& p) { return p.second; });
}

DetPairResult check_lemma_detfk(const CellCollection& P, int k, const Budget& budget) {
    auto blocks = antidiagonal_partition(P);
    if (k < 1 || k > int(blocks.size())) throw InputError("block index out of range");
    const auto& blk = blocks[k - 1];
    if (blk.C.empty()) throw InputError("block " + std::to_string(k) + " has no cells");
    auto vs = vertex_set(P);
    std::set<Vertex> V(vs.begin(), vs.end());
    auto order = discussion_order(vs);
    auto fk = block_determinant(blk, V);

    CellCollection prev = k >= 2 ? blocks[k - 2].P : CellCollection{};
    DetPairResult r;
    r.k = k;
    r.outside_previous = !ideal_membership(fk, polyomino_ideal(prev, vs), order, budget);
    for (const auto& C : blk.C) {
        auto ext = prev.with({C});
        r.with_cell.push_back({C, ideal_membership(fk, polyomino_ideal(ext, vs), order, budget)});
    }
    return r;
}

std::vector<Check> check_partition_shape(const CellCollection& P) {
    std::vector<Check> out;
    auto blocks = antidiagonal_partition(P);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const auto& blk = blocks[k];
        std::string tag = "block " + std::to_string(k + 1);
        if (!blk.C.empty()) {
            Check c{"staircase", true, tag};
            for (const auto& cl : staircase_cells(blk))
                if (!blk.P.contains(cl)) {
                    c.passed = false;
                    c.detail = tag + ": missing cell " + to_string(cl.ll);
                    break;
                }
            out.push_back(c);
        }
        if (!blk.P.empty())
            out.push_back({"prefix-simple", is_edge_connected(blk.P) && is_simple(blk.P), tag});
    }
    return out;
}

bool chi_case_a(int n, int l, const Permutation& s, int i) {
    return i >= 1 && i < l && l + std::max(s[i - 1], s[l - 1]) <= n + 2;
}

bool chi_case_b(int n, const Permutation& s, int i, int j) {
    return i >= 1 && i < j && j <= n && j + std::max(s[i - 1], s[j - 1]) <= n + 1;
}

std::optional<ChiWitness> chi_check(int n, int l, const Permutation& sigma) {
    if (n < 2 || l < 2 || l > n || int(sigma.size()) != n) throw InputError("chi: need n >= 2 and 2 <= l <= n");
    for (int i = 1; i < l; ++i)
        if (chi_case_a(n, l, sigma, i)) return ChiWitness{n, l, sigma, 'A', i, l};
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (chi_case_b(n, sigma, i, j)) return ChiWitness{n, l, sigma, 'B', i, j};
    return std::nullopt;
}

std::vector<std::pair<int, int>> chi_pairs(int n, int l, const Permutation& sigma) {
    std::vector<std::pair<int, int>> out;
    for (int sum = 3; sum <= 2 * n - 1; ++sum)
        for (int i = 1; 2 * i < sum; ++i) {
            int j = sum - i;
            if (j > n) continue;
            if ((j == l && chi_case_a(n, l, sigma, i)) || chi_case_b(n, sigma, i, j)) out.push_back({i, j});
        }
    return out;
}

std::optional<std::pair<int, int>> min_pair(int n, int l, const Permutation& sigma) {
    auto s = chi_pairs(n, l, sigma);
    if (s.empty()) return std::nullopt;
    return s.front();
}

Permutation compose_transposition(const Permutation& sigma, int i, int j) {
    auto out = sigma;
    std::swap(out[i - 1], out[j - 1]);
    return out;
}

bool is_even(const Permutation& sigma) {
    int inv = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a)
        for (std::size_t b = a + 1; b < sigma.size(); ++b)
            if (sigma[a] > sigma[b]) ++inv;
    return inv % 2 == 0;
}

SnPartition sn_partition(int n, int l) {
    SnPartition out;
    out.n = n;
    out.l = l;
    Permutation s(n);
    std::iota(s.begin(), s.end(), 1);
    std::map<Permutation, int> hits;
    bool involutive = true;
    do {
        hits[s];  // register every permutation
        if (!is_even(s)) continue;
        auto mp = min_pair(n, l, s);
        if (!mp) {
            involutive = false;
            continue;
        }
        auto t = compose_transposition(s, mp->first, mp->second);
        auto back = min_pair(n, l, t);
        if (!back || *back != *mp) involutive = false;
        out.pairs.push_back({s, t});
    } while (std::next_permutation(s.begin(), s.end()));
    for (auto& [a, b] : out.pairs) {
        ++hits[a];
        ++hits[b];
    }
    out.covers = std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h.second == 1; });
    out.involutive = involutive;
    return out;
}

std::vector<ChiSweep> chi_sweep(int max_n, int max_partition_n) {
    std::vector<ChiSweep> out;
    for (int n = 2; n <= max_n; ++n) {
        ChiSweep sw;
        sw.n = n;
        Permutation s(n);
        std::iota(s.begin(), s.end(), 1);
        do {
            for (int l = 2; l <= n; ++l) {
                ++sw.checks;
                if (!chi_check(n, l, s)) ++sw.failures;
            }
        } while (std::next_permutation(s.begin(), s.end()));
        if (n <= max_partition_n)
            for (int l = 2; l <= n; ++l) {
                auto part = sn_partition(n, l);
                sw.partition_ok = sw.partition_ok && part.covers && part.involutive;
            }
        out.push_back(sw);
    }
    return out;
}

std::string to_string(KnutsonRoute r) {
    switch (r) {
        case KnutsonRoute::none: return "none";
        case KnutsonRoute::thin: return "thin-route";
        case KnutsonRoute::ladder: return "ladder-route";
        case KnutsonRoute::konig: return "konig-route";
        case KnutsonRoute::weakly_closed_sum: return "weakly-closed-sum-route";
    }
    return "?";
}

namespace {

std::vector<Polynomial> monic_generators(const CellCollection& P, const MonomialOrder& order) {
    std::vector<Polynomial> out;
    for (auto& b : polyomino_binomials(P)) {
        auto lt = initial_term(order, b.polynomial);
        out.push_back(b.polynomial.scaled(1 / lt.coefficient));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.terms() < b.terms();
    });
    return out;
}

std::vector<Polynomial> sorted_copy(std::vector<Polynomial> v) {
    std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) { return a.terms() < b.terms(); });
    return v;
}

void add(std::vector<Check>& out, const std::string& prefix, Check c) {
    c.name = prefix + ":" + c.name;
    out.push_back(std::move(c));
}

}  // namespace

bool generators_form_reduced_basis(const CellCollection& P, const MonomialOrder& order, const Budget& budget) {
    auto G = reduced_groebner(polyomino_ideal(P), order, budget);
    return sorted_copy(G.elements) == monic_generators(P, order);
}

namespace {

bool thin_route(const CellCollection& P, const ClassificationRecord& cls, KnutsonReport& rep,
                const Budget& budget) {
    const std::string tag = "thin";
    if (!cls.thin_thm51) {
        // the mirrored conditions alone do not fire this route; the Konig route picks those up
        add(rep.subchecks, tag, {"hypothesis", false, cls.thin_reflected ? "only the mirrored conditions hold" : "conditions fail"});
        return false;
    }
    add(rep.subchecks, tag, {"hypothesis", true, ""});
    auto order = discussion_order(P);
    auto G = reduced_groebner(polyomino_ideal(P), order, budget);
    bool gb = sorted_copy(G.elements) == monic_generators(P, order);
    add(rep.subchecks, tag, {"groebner-equals-generators", gb, std::to_string(G.elements.size()) + " elements"});
    bool sq = is_squarefree(initial_ideal(G));
    add(rep.subchecks, tag, {"squarefree-initial-ideal", sq, ""});
    auto ip = check_initial_product(P);
    add(rep.subchecks, tag, ip);
    return gb && sq && ip.passed;
}

bool ladder_route(const CellCollection& P, const ClassificationRecord& cls, KnutsonReport& rep,
                  const Budget& budget) {
    const std::string tag = "ladder";
    if (!cls.is_ladder || !cls.is_polyomino) {
        add(rep.subchecks, tag, {"hypothesis", false, "not a ladder polyomino"});
        return false;
    }
    add(rep.subchecks, tag, {"hypothesis", true, ""});
    auto ip = check_initial_product(P);
    add(rep.subchecks, tag, ip);
    bool ok = ip.passed;
    for (auto& c : check_partition_shape(P)) {
        ok = ok && c.passed;
        add(rep.subchecks, tag, c);
    }
    auto blocks = antidiagonal_partition(P);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (blocks[k].C.empty()) continue;
        auto r = check_lemma_detfk(P, int(k + 1), budget);
        std::ostringstream os;
        os << "block " << r.k << ": outside previous " << (r.outside_previous ? "yes" : "no");
        for (auto& [c, in] : r.with_cell) os << ", +" << to_string(c.ll) << (in ? " in" : " out");
        add(rep.subchecks, tag, {"determinant-membership", r.passed(), os.str()});
        ok = ok && r.passed();
    }
    return ok;
}

bool konig_route(const CellCollection& P, const ClassificationRecord& cls, KnutsonReport& rep,
                 const Budget& budget) {
    const std::string tag = "konig";
    if (!cls.is_polyomino) {
        add(rep.subchecks, tag, {"hypothesis", false, "not a polyomino"});
        return false;
    }
    auto cert = konig_auto(P);
    if (!cert) {
        add(rep.subchecks, tag, {"certificate", false, "no certificate found within the search limit"});
        return false;
    }
    auto ver = verify_konig(P, *cert, budget);
    add(rep.subchecks, tag, {"certificate", ver.passed(), "strategy " + cert->strategy + ", height " + ver.height});
    if (!ver.passed()) return false;
    // radical and unmixed through an initial ideal
    bool found = false;
    for (auto order : {discussion_order(P), order6(P)}) {
        auto in = initial_ideal(polyomino_ideal(P), order, budget);
        if (!is_squarefree(in)) continue;
        found = true;
        add(rep.subchecks, tag, {"squarefree-initial-ideal", true, order.describe().substr(0, 7)});
        bool um = is_unmixed(in);
        add(rep.subchecks, tag, {"unmixed-initial-ideal", um, "proxy for unmixedness of the ideal"});
        if (!um) return false;
        break;
    }
    if (!found) {
        add(rep.subchecks, tag, {"squarefree-initial-ideal", false, "no tried order gives one"});
        return false;
    }
    rep.proxy_flags.push_back("proxy-unmixed");
    Monomial in;
    for (auto& s : cert->chosen) in = in * s.claimed;
    rep.f_initial = in;
    rep.f_degree = unsigned(2 * cert->chosen.size());
    return true;
}

bool weakly_closed_route(const CellCollection& P, const ClassificationRecord& cls, KnutsonReport& rep,
                         const Budget& budget) {
    const std::string tag = "weakly-closed";
    if (!cls.weakly_closed_path) {
        add(rep.subchecks, tag, {"hypothesis", false, "not a weakly closed path"});
        return false;
    }
    const auto& A = *cls.weakly_closed_path;
    auto cert = konig_search(P, KonigStrategy::weakly_closed);
    add(rep.subchecks, tag, {"certificate", cert.has_value(), ""});
    if (!cert) return false;
    auto P1 = P.without({A.front()}), P2 = P.without({A.back()});
    bool simple = is_simple(P1) && is_simple(P2) && is_edge_connected(P1) && is_edge_connected(P2);
    add(rep.subchecks, tag, {"parts-simple", simple, ""});
    auto vs = vertex_set(P);
    bool eq = ideal_equal(polyomino_ideal(P), ideal_sum(polyomino_ideal(P1, vs), polyomino_ideal(P2, vs)), budget);
    add(rep.subchecks, tag, {"sum-decomposition", eq, ""});
    if (!simple || !eq) return false;
    Monomial in;
    for (auto& s : cert->chosen) in = in * s.claimed;
    rep.f_initial = in;
    rep.f_degree = unsigned(2 * cert->chosen.size());
    return true;
}

}  // namespace

KnutsonReport knutson_certify(const CellCollection& P, const Budget& budget) {
    KnutsonReport rep;
    auto cls = classify(P);
    auto set_discussion_f = [&](const CellCollection& Q) {
        auto d = knutson_polynomial(Q);
        rep.f_degree = d.degree_f;
        rep.f_initial = d.initial_f;
    };
    auto attempt = [&](KnutsonRoute route, auto&& fn) {
        try {
            return fn();
        } catch (const BudgetExceeded& e) {
            rep.skipped.push_back(to_string(route) + ": " + e.what());
        } catch (const std::length_error& e) {
            rep.skipped.push_back(to_string(route) + ": " + e.what());
        }
        return false;
    };
    if (attempt(KnutsonRoute::thin, [&] { return thin_route(P, cls, rep, budget); })) {
        rep.route = KnutsonRoute::thin;
        rep.verdict = "certified";
        set_discussion_f(P);
        return rep;
    }
    if (attempt(KnutsonRoute::ladder, [&] { return ladder_route(P, cls, rep, budget); })) {
        rep.route = KnutsonRoute::ladder;
        rep.verdict = "certified";
        set_discussion_f(P);
        return rep;
    }
    if (attempt(KnutsonRoute::konig, [&] { return konig_route(P, cls, rep, budget); })) {
        rep.route = KnutsonRoute::konig;
        rep.verdict = "certified-with-proxy";
        return rep;
    }
    if (attempt(KnutsonRoute::weakly_closed_sum, [&] { return weakly_closed_route(P, cls, rep, budget); })) {
        rep.route = KnutsonRoute::weakly_closed_sum;
        rep.verdict = "certified";
        return rep;
    }
    return rep;
}

std::vector<CellCollection> components(const CellCollection& P) {
    std::set<Cell> left(P.begin(), P.end());
    std::vector<CellCollection> out;
    while (!left.empty()) {
        std::set<Cell> comp;
        std::vector<Cell> stack{*left.begin()};
        left.erase(left.begin());
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            comp.insert(c);
            for (Cell nb : {cell(c.ll.i + 1, c.ll.j), cell(c.ll.i - 1, c.ll.j), cell(c.ll.i, c.ll.j + 1),
                            cell(c.ll.i, c.ll.j - 1)})
                if (left.erase(nb)) stack.push_back(nb);
        }
        out.push_back(CellCollection::from_set(comp));
    }
    return out;
}

ExtractionReport extraction_pipeline(const CellCollection& Q, const CellCollection& Qp, const Budget& budget) {
    if (Q.empty() || !is_parallelogram(Q)) throw InputError("Q must be a parallelogram polyomino");
    if (Qp.empty() || !is_parallelogram(Qp)) throw InputError("Q' must be a non-empty parallelogram polyomino");
    for (const auto& c : Qp)
        if (!Q.contains(c)) throw InputError("Q' must lie inside Q");
    ExtractionReport r;
    r.P = Q.without(Qp.cells());
    if (r.P.empty()) throw InputError("Q minus Q' is empty");
    r.simple = is_edge_connected(r.P) && is_simple(r.P);

    auto blocks = antidiagonal_partition(r.P);
    auto qv = vertex_set(Qp);
    std::set<Vertex> QV(qv.begin(), qv.end());
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (auto v : blocks[k].V)
            if (QV.count(v)) {
                if (!r.a) r.a = int(k + 1);
                r.b = int(k + 1);
            }
    if (!r.a) throw InputError("Q' shares no vertex with Q minus Q'");
    std::set<Cell> q1, q2, ca, cb;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        int idx = int(k + 1);
        if (idx < r.b) q1.insert(blocks[k].C.begin(), blocks[k].C.end());
        if (idx > r.a) q2.insert(blocks[k].C.begin(), blocks[k].C.end());
    }
    ca.insert(blocks[r.a - 1].C.begin(), blocks[r.a - 1].C.end());
    cb.insert(blocks[r.b - 1].C.begin(), blocks[r.b - 1].C.end());
    r.Q1 = CellCollection::from_set(q1);
    r.Q2 = CellCollection::from_set(q2);

    for (const auto& iv : inner_intervals(r.P)) {
        bool hit_a = false, hit_b = false;
        for (const auto& c : iv.cells()) {
            hit_a = hit_a || ca.count(c);
            hit_b = hit_b || cb.count(c);
        }
        if (hit_a && hit_b) r.violating.push_back(iv);
    }
    r.condition = r.violating.empty();
    if (!r.condition) return r;

    auto vs = vertex_set(r.P);
    r.sum_equal = ideal_equal(polyomino_ideal(r.P), ideal_sum(polyomino_ideal(r.Q1, vs), polyomino_ideal(r.Q2, vs)),
                              budget);
    r.groebner_claim = generators_form_reduced_basis(r.P, discussion_order(r.P), budget);

    for (int part = 1; part <= 2; ++part) {
        const auto& Qi = part == 1 ? r.Q1 : r.Q2;
        std::string tag = "Q" + std::to_string(part);
        if (Qi.empty()) {
            r.subchecks.push_back({tag + ":non-empty", false, ""});
            continue;
        }
        auto comps = components(Qi);
        r.subchecks.push_back({tag + ":components", true, std::to_string(comps.size())});
        for (std::size_t c = 0; c < comps.size(); ++c) {
            std::string ctag = tag + "." + std::to_string(c + 1);
            auto ip = check_initial_product(comps[c]);
            ip.name = ctag + ":" + ip.name;
            r.subchecks.push_back(ip);
            r.subchecks.push_back({ctag + ":groebner-equals-generators",
                                   generators_form_reduced_basis(comps[c], discussion_order(comps[c]), budget), ""});
        }
        // vertex gluing: the shared vertex is a singleton block on both sides, so x_v is coprime to in(g)
        for (std::size_t x = 0; x < comps.size(); ++x)
            for (std::size_t y = x + 1; y < comps.size(); ++y) {
                auto vx = vertex_set(comps[x]), vy = vertex_set(comps[y]);
                std::vector<Vertex> common;
                std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(), std::back_inserter(common));
                if (common.empty()) continue;
                bool ok = common.size() == 1;
                if (ok) {
                    Vertex v = common.front();
                    for (const auto* side : {&comps[x], &comps[y]}) {
                        auto d = knutson_polynomial(*side);
                        ok = ok && d.initial_g.exponent(v) == 0;
                    }
                }
                r.subchecks.push_back({tag + ":vertex-gluing", ok,
                                       std::to_string(x + 1) + "/" + std::to_string(y + 1) + " share " +
                                           std::to_string(common.size()) + " vertex(es)"});
            }
    }
    return r;
}

}  // namespace polyideal
