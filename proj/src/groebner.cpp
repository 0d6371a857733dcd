#include "polyideal/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace polyideal {

namespace {

constexpr int kMaxVars = 64;

thread_local EngineStats g_stats;

// Dense exponents indexed by variable rank (0 = smallest variable).
struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    bool operator==(const Mono& o) const { return deg == o.deg && e == o.e; }
};

struct Spec {
    Scheme scheme = Scheme::grevlex;
    int n = 0;          // number of variables including t
    bool elim = false;  // variable n-1 is t, compared first
};

int cmp_block(const Spec& s, const Mono& a, const Mono& b, int n, int da, int db) {
    if (s.scheme != Scheme::lex && da != db) return da < db ? -1 : 1;
    if (s.scheme == Scheme::grevlex) {
        for (int r = 0; r < n; ++r)
            if (a.e[r] != b.e[r]) return a.e[r] < b.e[r] ? 1 : -1;
        return 0;
    }
    for (int r = n - 1; r >= 0; --r)
        if (a.e[r] != b.e[r]) return a.e[r] > b.e[r] ? 1 : -1;
    return 0;
}

int cmp(const Spec& s, const Mono& a, const Mono& b) {
    if (!s.elim) return cmp_block(s, a, b, s.n, a.deg, b.deg);
    int t = s.n - 1;
    if (a.e[t] != b.e[t]) return a.e[t] > b.e[t] ? 1 : -1;
    return cmp_block(s, a, b, t, a.deg - a.e[t], b.deg - b.e[t]);
}

bool divides(const Mono& a, const Mono& b, int n) {
    if (a.deg > b.deg) return false;
    for (int r = 0; r < n; ++r)
        if (a.e[r] > b.e[r]) return false;
    return true;
}

Mono mul(const Mono& a, const Mono& b, int n) {
    Mono m;
    for (int r = 0; r < n; ++r) {
        unsigned v = unsigned(a.e[r]) + b.e[r];
        if (v > 255) throw BudgetExceeded("exponent overflow in Groebner engine");
        m.e[r] = std::uint8_t(v);
    }
    m.deg = std::uint16_t(a.deg + b.deg);
    return m;
}

Mono quo(const Mono& a, const Mono& b, int n) {  // a / b
    Mono m;
    for (int r = 0; r < n; ++r) m.e[r] = std::uint8_t(a.e[r] - b.e[r]);
    m.deg = std::uint16_t(a.deg - b.deg);
    return m;
}

Mono lcm(const Mono& a, const Mono& b, int n) {
    Mono m;
    int d = 0;
    for (int r = 0; r < n; ++r) {
        m.e[r] = std::max(a.e[r], b.e[r]);
        d += m.e[r];
    }
    m.deg = std::uint16_t(d);
    return m;
}

bool coprime(const Mono& a, const Mono& b, int n) {
    for (int r = 0; r < n; ++r)
        if (a.e[r] && b.e[r]) return false;
    return true;
}

struct Term {
    Mono m;
    Rational c;
};
using Poly = std::vector<Term>;  // sorted descending

class Engine {
public:
    Engine(Spec spec, const Budget& budget) : s_(spec), budget_(budget) {}

    const Spec& spec() const { return s_; }

    void charge(std::size_t k) {
        g_stats.term_ops += k;
        term_ops_ += k;
        if (term_ops_ > budget_.max_term_ops)
            throw BudgetExceeded("term operation budget of " + std::to_string(budget_.max_term_ops) +
                                 " exceeded");
    }

    void sort(Poly& p) const {
        std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return cmp(s_, a.m, b.m) > 0; });
    }

    // p[from..] - c * m * g
    Poly sub_mul(const Poly& p, std::size_t from, const Rational& c, const Mono& m, const Poly& g) {
        charge(p.size() - from + g.size());
        Poly out;
        out.reserve(p.size() - from + g.size());
        std::size_t a = from, b = 0;
        while (a < p.size() || b < g.size()) {
            if (b == g.size()) {
                out.push_back(p[a++]);
                continue;
            }
            Mono gm = mul(g[b].m, m, s_.n);
            if (a == p.size()) {
                out.push_back({gm, -c * g[b].c});
                ++b;
                continue;
            }
            int k = cmp(s_, p[a].m, gm);
            if (k > 0)
                out.push_back(p[a++]);
            else if (k < 0) {
                out.push_back({gm, -c * g[b].c});
                ++b;
            } else {
                Rational v = p[a].c - c * g[b].c;
                if (v != 0) out.push_back({gm, v});
                ++a, ++b;
            }
        }
        return out;
    }

    Poly normal_form(Poly p, const std::vector<Poly>& G) {
        Poly r;
        std::size_t pos = 0;
        while (pos < p.size()) {
            const Term& lt = p[pos];
            const Poly* div = nullptr;
            for (const auto& g : G)
                if (!g.empty() && divides(g.front().m, lt.m, s_.n)) {
                    div = &g;
                    break;
                }
            if (!div) {
                r.push_back(lt);
                ++pos;
                continue;
            }
            Rational c = lt.c / div->front().c;
            Mono q = quo(lt.m, div->front().m, s_.n);
            p = sub_mul(p, pos, c, q, *div);
            pos = 0;
        }
        return r;
    }

    static void make_monic(Poly& p) {
        if (p.empty() || p.front().c == 1) return;
        Rational inv = 1 / p.front().c;
        for (auto& t : p) t.c *= inv;
    }

    Poly s_poly(const Poly& f, const Poly& g) {
        Mono L = lcm(f.front().m, g.front().m, s_.n);
        Poly a;
        Mono qf = quo(L, f.front().m, s_.n), qg = quo(L, g.front().m, s_.n);
        Rational cf = 1 / f.front().c, cg = 1 / g.front().c;
        for (const auto& t : f) a.push_back({mul(t.m, qf, s_.n), t.c * cf});
        charge(f.size());
        return sub_mul(a, 0, cg, qg, g);
    }

    std::vector<Poly> groebner(const std::vector<Poly>& F) {
        std::vector<Poly> G;
        struct Pair {
            int i, j;
            Mono l;
        };
        std::vector<Pair> pending;
        std::set<std::pair<int, int>> open;
        auto add = [&](Poly h) {
            make_monic(h);
            G.push_back(std::move(h));
            int k = int(G.size()) - 1;
            for (int i = 0; i < k; ++i) {
                pending.push_back({i, k, lcm(G[i].front().m, G[k].front().m, s_.n)});
                open.insert({i, k});
            }
        };
        for (const auto& f : F)
            if (!f.empty()) add(f);
        std::size_t processed = 0;
        while (!pending.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pending.size(); ++k) {
                const auto &a = pending[k].l, &b = pending[best].l;
                if (a.deg != b.deg) {
                    if (a.deg < b.deg) best = k;
                    continue;
                }
                int c = cmp(s_, a, b);
                if (c < 0 || (c == 0 && std::pair(pending[k].i, pending[k].j) <
                                            std::pair(pending[best].i, pending[best].j)))
                    best = k;
            }
            Pair pr = pending[best];
            pending.erase(pending.begin() + long(best));
            open.erase({pr.i, pr.j});
            if (++processed > budget_.max_pairs)
                throw BudgetExceeded("S-pair budget of " + std::to_string(budget_.max_pairs) +
                                     " exceeded");
            g_stats.pairs++;
            if (coprime(G[pr.i].front().m, G[pr.j].front().m, s_.n)) continue;
            bool chain = false;
            for (int k = 0; k < int(G.size()) && !chain; ++k) {
                if (k == pr.i || k == pr.j) continue;
                if (!divides(G[k].front().m, pr.l, s_.n)) continue;
                if (open.count({std::min(pr.i, k), std::max(pr.i, k)})) continue;
                if (open.count({std::min(pr.j, k), std::max(pr.j, k)})) continue;
                chain = true;
            }
            if (chain) continue;
            Poly h = normal_form(s_poly(G[pr.i], G[pr.j]), G);
            if (!h.empty()) add(std::move(h));
        }
        return G;
    }

    std::vector<Poly> reduce(std::vector<Poly> G) {
        for (auto& g : G) make_monic(g);
        std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
            return cmp(s_, a.front().m, b.front().m) < 0;
        });
        std::vector<Poly> minimal;
        for (auto& g : G) {
            bool redundant = false;
            for (auto& h : minimal)
                if (divides(h.front().m, g.front().m, s_.n)) {
                    redundant = true;
                    break;
                }
            if (!redundant) minimal.push_back(std::move(g));
        }
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            std::vector<Poly> others;
            for (std::size_t t = 0; t < minimal.size(); ++t)
                if (t != k) others.push_back(minimal[t]);
            Poly tail(minimal[k].begin() + 1, minimal[k].end());
            Poly red = normal_form(std::move(tail), others);
            Poly full{minimal[k].front()};
            full.insert(full.end(), red.begin(), red.end());
            minimal[k] = std::move(full);
        }
        std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
            if (a.front().m.deg != b.front().m.deg) return a.front().m.deg < b.front().m.deg;
            return cmp(s_, a.front().m, b.front().m) < 0;
        });
        return minimal;
    }

private:
    Spec s_;
    Budget budget_;
    std::size_t term_ops_ = 0;
};

// Translation between vertex-indexed polynomials and rank-indexed engine polynomials.
struct Codec {
    std::vector<Vertex> vars;  // by rank
    std::map<Vertex, int> index;

    explicit Codec(const MonomialOrder& order) : vars(order.variables()) {
        for (std::size_t k = 0; k < vars.size(); ++k) index[vars[k]] = int(k);
    }

    Mono encode(const Monomial& m) const {
        Mono out;
        int d = 0;
        for (auto& [v, e] : m.factors()) {
            auto it = index.find(v);
            if (it == index.end()) throw std::invalid_argument("variable outside order: " + to_string(v));
            if (e > 255) throw BudgetExceeded("exponent overflow in Groebner engine");
            out.e[it->second] = std::uint8_t(e);
            d += int(e);
        }
        out.deg = std::uint16_t(d);
        return out;
    }

    Poly encode(const Polynomial& f, const Engine& eng) const {
        Poly p;
        for (auto& [m, c] : f.terms()) p.push_back({encode(m), c});
        eng.sort(p);
        return p;
    }

    Monomial decode(const Mono& m) const {
        std::vector<std::pair<Vertex, unsigned>> pairs;
        for (std::size_t r = 0; r < vars.size(); ++r)
            if (m.e[r]) pairs.push_back({vars[r], m.e[r]});
        return Monomial::from_pairs(std::move(pairs));
    }

    Polynomial decode(const Poly& p) const {
        Polynomial f;
        for (auto& t : p) f += Polynomial::term(decode(t.m), t.c);
        return f;
    }
};

Spec spec_for(const MonomialOrder& order, const Budget& budget) {
    int n = int(order.variables().size());
    if (std::size_t(n) > budget.max_vars || n > kMaxVars)
        throw BudgetExceeded("ring has " + std::to_string(n) + " variables, above the guard of " +
                             std::to_string(std::min<std::size_t>(budget.max_vars, kMaxVars)));
    return {order.scheme(), n, false};
}

std::vector<Poly> encode_all(const std::vector<Polynomial>& fs, const Codec& codec, const Engine& eng) {
    std::vector<Poly> out;
    for (auto& f : fs)
        if (!f.is_zero()) out.push_back(codec.encode(f, eng));
    return out;
}

}  // namespace

Budget Budget::from_env() {
    Budget b;
    if (const char* p = std::getenv("POLYIDEAL_BUDGET_PAIRS")) {
        long v = std::atol(p);
        if (v > 0) b.max_pairs = std::size_t(v);
    }
    if (const char* t = std::getenv("POLYIDEAL_BUDGET_TERMS")) {
        long v = std::atol(t);
        if (v > 0) b.max_term_ops = std::size_t(v);
    }
    return b;
}

EngineStats last_engine_stats() { return g_stats; }

Ideal Ideal::make(std::vector<Polynomial> gens, std::vector<Vertex> extra_ambient) {
    Ideal I;
    std::set<Vertex> vs(extra_ambient.begin(), extra_ambient.end());
    for (auto& g : gens) {
        auto v = g.variables();
        vs.insert(v.begin(), v.end());
    }
    for (auto& g : gens)
        if (!g.is_zero()) I.generators.push_back(std::move(g));
    I.ambient.assign(vs.begin(), vs.end());
    return I;
}

MonomialOrder canonical_order(const std::vector<Vertex>& ambient) {
    return MonomialOrder(column_major(ambient), Scheme::grevlex);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
    Budget b;
    Engine eng(spec_for(order, b), b);
    Codec codec(order);
    return codec.decode(eng.s_poly(codec.encode(f, eng), codec.encode(g, eng)));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& order,
                       const Budget& budget) {
    Engine eng(spec_for(order, budget), budget);
    Codec codec(order);
    std::vector<Poly> g;
    for (auto& p : G) {
        if (p.is_zero()) throw std::invalid_argument("zero divisor in normal form");
        g.push_back(codec.encode(p, eng));
    }
    return codec.decode(eng.normal_form(codec.encode(f, eng), g));
}

GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order, const Budget& budget) {
    g_stats = {};
    Engine eng(spec_for(order, budget), budget);
    Codec codec(order);
    auto G = eng.groebner(encode_all(I.generators, codec, eng));
    GroebnerBasis out{{}, order, false};
    for (auto& p : G) out.elements.push_back(codec.decode(p));
    return out;
}

GroebnerBasis reduce(const GroebnerBasis& G, const Budget& budget) {
    Engine eng(spec_for(G.order, budget), budget);
    Codec codec(G.order);
    auto R = eng.reduce(encode_all(G.elements, codec, eng));
    GroebnerBasis out{{}, G.order, true};
    for (auto& p : R) out.elements.push_back(codec.decode(p));
    return out;
}

GroebnerBasis reduced_groebner(const Ideal& I, const MonomialOrder& order, const Budget& budget) {
    g_stats = {};
    Engine eng(spec_for(order, budget), budget);
    Codec codec(order);
    auto R = eng.reduce(eng.groebner(encode_all(I.generators, codec, eng)));
    GroebnerBasis out{{}, order, true};
    for (auto& p : R) out.elements.push_back(codec.decode(p));
    return out;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& G, const MonomialOrder& order,
                                    const Budget& budget) {
    Engine eng(spec_for(order, budget), budget);
    Codec codec(order);
    auto g = encode_all(G, codec, eng);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (!eng.normal_form(eng.s_poly(g[a], g[b]), g).empty()) return false;
    return true;
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& reduced_basis) {
    return normal_form(f, reduced_basis.elements, reduced_basis.order).is_zero();
}

bool ideal_membership(const Polynomial& f, const Ideal& I, const MonomialOrder& order,
                      const Budget& budget) {
    if (f.is_zero()) return true;
    auto G = reduced_groebner(I, order, budget);
    return normal_form(f, G.elements, order, budget).is_zero();
}

namespace {

std::vector<Vertex> union_ambient(const Ideal& I, const Ideal& J) {
    std::set<Vertex> vs(I.ambient.begin(), I.ambient.end());
    vs.insert(J.ambient.begin(), J.ambient.end());
    return {vs.begin(), vs.end()};
}

}  // namespace

bool ideal_equal(const Ideal& I, const Ideal& J, const Budget& budget) {
    auto order = canonical_order(union_ambient(I, J));
    auto A = reduced_groebner(I, order, budget);
    auto B = reduced_groebner(J, order, budget);
    return A.elements == B.elements;
}

bool ideal_contains(const Ideal& big, const Ideal& small, const Budget& budget) {
    auto order = canonical_order(union_ambient(big, small));
    auto G = reduced_groebner(big, order, budget);
    for (auto& f : small.generators)
        if (!normal_form(f, G.elements, order, budget).is_zero()) return false;
    return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    auto gens = I.generators;
    gens.insert(gens.end(), J.generators.begin(), J.generators.end());
    return Ideal::make(std::move(gens), union_ambient(I, J));
}

namespace {

bool all_homogeneous(const Ideal& I) {
    return std::all_of(I.generators.begin(), I.generators.end(),
                       [](const Polynomial& f) { return f.homogeneous(); });
}

// I : x^infinity for homogeneous I, via revlex with x smallest.
Ideal saturate_variable_bayer(const Ideal& I, Vertex x, const Budget& budget) {
    std::vector<Vertex> vars{x};
    for (auto v : column_major(I.ambient))
        if (!(v == x)) vars.push_back(v);
    MonomialOrder order(vars, Scheme::grevlex);
    auto G = reduced_groebner(I, order, budget);
    std::vector<Polynomial> gens;
    for (auto& g : G.elements) {
        unsigned k = ~0u;
        for (auto& [m, c] : g.terms()) k = std::min(k, m.exponent(x));
        Polynomial h;
        Monomial xk = Monomial::var(x, k);
        for (auto& [m, c] : g.terms()) h += Polynomial::term(xk.quotient_of(m), c);
        gens.push_back(std::move(h));
    }
    return Ideal::make(std::move(gens), I.ambient);
}

Ideal saturate_rabinowitsch(const Ideal& I, const Monomial& m, const Budget& budget) {
    MonomialOrder base = canonical_order(I.ambient);
    Spec s = spec_for(base, budget);
    if (s.n + 1 > kMaxVars || std::size_t(s.n + 1) > budget.max_vars + 1)
        throw BudgetExceeded("no room for the auxiliary variable");
    s.n += 1;
    s.elim = true;
    Engine eng(s, budget);
    Codec codec(base);
    std::vector<Poly> F;
    for (auto& f : I.generators) {
        if (f.is_zero()) continue;
        F.push_back(codec.encode(f, eng));
        eng.sort(F.back());
    }
    // t*m - 1
    Poly tm;
    Mono mm = codec.encode(m);
    mm.e[s.n - 1] = 1;
    mm.deg += 1;
    tm.push_back({mm, 1});
    tm.push_back({Mono{}, -1});
    eng.sort(tm);
    F.push_back(tm);
    auto G = eng.reduce(eng.groebner(F));
    std::vector<Polynomial> gens;
    for (auto& g : G) {
        bool has_t = std::any_of(g.begin(), g.end(), [&](const Term& t) { return t.m.e[s.n - 1] != 0; });
        if (!has_t) gens.push_back(codec.decode(g));
    }
    return Ideal::make(std::move(gens), I.ambient);
}

}  // namespace

Ideal saturate(const Ideal& I, const Monomial& m, SaturationMethod method, const Budget& budget) {
    if (method == SaturationMethod::automatic)
        method = all_homogeneous(I) ? SaturationMethod::bayer : SaturationMethod::rabinowitsch;
    if (method == SaturationMethod::bayer) {
        if (!all_homogeneous(I)) throw std::invalid_argument("Bayer saturation needs homogeneous generators");
        Ideal J = I;
        for (auto v : m.support()) J = saturate_variable_bayer(J, v, budget);
        return J;
    }
    return saturate_rabinowitsch(I, m, budget);
}

Ideal saturate_all(const Ideal& I, SaturationMethod method, const Budget& budget) {
    std::vector<std::pair<Vertex, unsigned>> all;
    for (auto v : I.ambient) all.push_back({v, 1});
    return saturate(I, Monomial::from_pairs(all), method, budget);
}

MonomialIdeal minimize(MonomialIdeal M) {
    auto& g = M.generators;
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
        return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
    });
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Monomial> out;
    for (auto& m : g) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& k) { return k.divides(m); });
        if (!redundant) out.push_back(m);
    }
    M.generators = std::move(out);
    return M;
}

MonomialIdeal initial_ideal(const GroebnerBasis& G) {
    MonomialIdeal M;
    M.ambient = G.order.variables();
    std::sort(M.ambient.begin(), M.ambient.end());
    for (auto& g : G.elements) M.generators.push_back(initial_term(G.order, g).monomial);
    return minimize(std::move(M));
}

MonomialIdeal initial_ideal(const Ideal& I, const MonomialOrder& order, const Budget& budget) {
    return initial_ideal(reduced_groebner(I, order, budget));
}

bool is_squarefree(const MonomialIdeal& M) {
    return std::all_of(M.generators.begin(), M.generators.end(),
                       [](const Monomial& m) { return m.squarefree(); });
}

std::vector<std::vector<Vertex>> minimal_primes(const MonomialIdeal& M) {
    if (!is_squarefree(M)) throw std::invalid_argument("minimal primes need a squarefree monomial ideal");
    std::set<Vertex> vs(M.ambient.begin(), M.ambient.end());
    for (auto& g : M.generators)
        for (auto v : g.support()) vs.insert(v);
    std::vector<Vertex> vars(vs.begin(), vs.end());
    if (vars.size() > 64) throw BudgetExceeded("minimal primes limited to 64 variables");
    std::map<Vertex, int> idx;
    for (std::size_t k = 0; k < vars.size(); ++k) idx[vars[k]] = int(k);
    for (auto& g : M.generators)
        if (g.is_one()) return {};  // unit ideal has no primes
    // Berge's transversal algorithm
    std::vector<std::uint64_t> tr{0};
    for (auto& g : M.generators) {
        std::uint64_t edge = 0;
        for (auto v : g.support()) edge |= std::uint64_t(1) << idx[v];
        std::vector<std::uint64_t> next;
        for (auto t : tr) {
            if (t & edge) {
                next.push_back(t);
                continue;
            }
            for (int b = 0; b < 64; ++b)
                if (edge >> b & 1) next.push_back(t | (std::uint64_t(1) << b));
        }
        std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa < pb : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        tr.clear();
        for (auto t : next)
            if (std::none_of(tr.begin(), tr.end(), [&](std::uint64_t k) { return (k & t) == k; }))
                tr.push_back(t);
    }
    std::vector<std::vector<Vertex>> out;
    for (auto t : tr) {
        std::vector<Vertex> p;
        for (int b = 0; b < 64; ++b)
            if (t >> b & 1) p.push_back(vars[b]);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t monomial_height(const MonomialIdeal& M) {
    auto P = minimal_primes(M);
    if (P.empty()) throw std::invalid_argument("height of the unit ideal");
    std::size_t h = P.front().size();
    for (auto& p : P) h = std::min(h, p.size());
    return h;
}

bool is_unmixed(const MonomialIdeal& M) {
    auto P = minimal_primes(M);
    return std::all_of(P.begin(), P.end(), [&](const auto& p) { return p.size() == P.front().size(); });
}

std::string format_basis(const GroebnerBasis& G) {
    std::ostringstream os;
    os << "order: " << G.order.describe() << '\n';
    os << "reduced: " << (G.reduced ? "yes" : "no") << '\n';
    for (auto& g : G.elements) os << to_string(g, G.order) << '\n';
    return os.str();
}

}  // namespace polyideal
