#include "polyideal/konig.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "polyideal/lp.hpp"

namespace polyideal {

Monomial KonigSlot::other() const {
    return claimed == binomial.diagonal_term() ? binomial.antidiagonal_term() : binomial.diagonal_term();
}

std::string to_string(KonigStrategy s) {
    switch (s) {
        case KonigStrategy::generic: return "generic";
        case KonigStrategy::interval: return "interval";
        case KonigStrategy::weakly_closed: return "weakly-closed";
        case KonigStrategy::simple_thin_recursive: return "simple-thin-recursive";
    }
    return "?";
}

KonigStrategy parse_strategy(const std::string& s) {
    if (s == "generic") return KonigStrategy::generic;
    if (s == "interval") return KonigStrategy::interval;
    if (s == "weakly-closed" || s == "weakly-closed-table") return KonigStrategy::weakly_closed;
    if (s == "simple-thin-recursive" || s == "recursive") return KonigStrategy::simple_thin_recursive;
    throw InputError("unknown strategy: " + s);
}

KonigSlot make_slot(const Interval& iv, const Monomial& claimed) {
    KonigSlot s{inner_binomial(iv), claimed};
    if (!(claimed == s.binomial.diagonal_term()) && !(claimed == s.binomial.antidiagonal_term()))
        throw InputError("claimed term " + to_string(claimed) + " is not a term of the binomial of " + to_string(iv));
    return s;
}

std::optional<std::vector<std::pair<Vertex, Rational>>> realizing_weight(const std::vector<KonigSlot>& slots) {
    std::set<Vertex> vs;
    for (auto& s : slots) {
        for (auto v : s.claimed.support()) vs.insert(v);
        for (auto v : s.other().support()) vs.insert(v);
    }
    std::vector<Vertex> vars(vs.begin(), vs.end());
    RationalMatrix A;
    for (auto& s : slots) {
        std::vector<mpq_class> row;
        auto o = s.other();
        for (auto v : vars) row.push_back(long(s.claimed.exponent(v)) - long(o.exponent(v)));
        A.push_back(std::move(row));
    }
    auto x = feasible_point(A, std::vector<mpq_class>(slots.size(), 1));
    if (!x) return std::nullopt;
    std::vector<std::pair<Vertex, Rational>> w;
    for (std::size_t k = 0; k < vars.size(); ++k) w.push_back({vars[k], (*x)[k]});
    return w;
}

bool KonigVerification::passed() const {
    return generators && count && coprime && realizable && height != "mismatch";
}

namespace {

bool is_inner(const CellCollection& P, const Interval& iv) {
    if (!iv.proper()) return false;
    for (const auto& c : iv.cells())
        if (!P.contains(c)) return false;
    return true;
}

MonomialIdeal radical_of(MonomialIdeal M) {
    for (auto& g : M.generators) g = product_of_variables(g.support());
    return minimize(std::move(M));
}

bool claims_coprime(const std::vector<KonigSlot>& slots) {
    std::set<Vertex> used;
    for (auto& s : slots) {
        if (!s.claimed.squarefree()) return false;
        for (auto v : s.claimed.support())
            if (!used.insert(v).second) return false;
    }
    return true;
}

}  // namespace

KonigVerification verify_konig(const CellCollection& P, const KonigCertificate& cert, const Budget& budget,
                               bool check_height) {
    KonigVerification r;
    std::set<Interval> seen;
    r.generators = true;
    for (auto& s : cert.chosen) {
        bool ok = is_inner(P, s.binomial.interval) && seen.insert(s.binomial.interval).second &&
                  s.binomial.polynomial == inner_binomial(s.binomial.interval).polynomial &&
                  (s.claimed == s.binomial.diagonal_term() || s.claimed == s.binomial.antidiagonal_term());
        if (!ok) {
            r.generators = false;
            r.detail += "bad generator " + to_string(s.binomial.interval) + "; ";
        }
    }
    r.count = cert.chosen.size() == P.size() && cert.height_claim == P.size();
    if (!r.count) r.detail += "expected " + std::to_string(P.size()) + " generators; ";
    r.coprime = claims_coprime(cert.chosen);
    if (!r.coprime) r.detail += "claimed terms share a variable; ";
    auto w = realizing_weight(cert.chosen);
    r.realizable = w.has_value();
    if (w) r.weight = *w;
    else r.detail += "no weight realizes the claims; ";
    if (check_height) {
        try {
            auto in = initial_ideal(polyomino_ideal(P), discussion_order(P), budget);
            auto h = monomial_height(radical_of(in));
            r.height = h == P.size() ? "confirmed" : "mismatch";
            if (h != P.size()) r.detail += "height " + std::to_string(h) + "; ";
        } catch (const BudgetExceeded&) {
            r.height = "assumed";
        }
    }
    return r;
}

namespace {

struct Searcher {
    const CellCollection& P;
    std::size_t h;
    std::size_t node_limit;
    std::size_t nodes = 0;
    std::vector<KonigSlot> chosen;
    std::set<Vertex> used;

    bool fits(const Monomial& m) const {
        for (auto v : m.support())
            if (used.count(v)) return false;
        return true;
    }
    void push(KonigSlot s) {
        for (auto v : s.claimed.support()) used.insert(v);
        chosen.push_back(std::move(s));
    }
    void pop() {
        for (auto v : chosen.back().claimed.support()) used.erase(v);
        chosen.pop_back();
    }
    bool over() { return ++nodes > node_limit; }
};

std::vector<Interval> intervals_by_size(const CellCollection& P) {
    auto ivs = inner_intervals(P);
    std::stable_sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
        return a.width() * a.height() < b.width() * b.height();
    });
    return ivs;
}

std::optional<std::vector<KonigSlot>> generic_search(const CellCollection& P, std::size_t node_limit) {
    if (P.size() > 20) return std::nullopt;
    auto ivs = intervals_by_size(P);
    Searcher S{P, P.size(), node_limit, 0, {}, {}};
    std::size_t nverts = vertex_set(P).size();
    std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
        if (S.chosen.size() == S.h) return true;
        if (S.over()) return false;
        std::size_t need = S.h - S.chosen.size();
        if (ivs.size() - idx < need || nverts - S.used.size() < 2 * need) return false;
        auto b = inner_binomial(ivs[idx]);
        for (const auto& claim : {b.antidiagonal_term(), b.diagonal_term()}) {
            if (!S.fits(claim)) continue;
            S.push(KonigSlot{b, claim});
            if (realizing_weight(S.chosen) && dfs(idx + 1)) return true;
            S.pop();
        }
        return dfs(idx + 1);
    };
    if (dfs(0)) return S.chosen;
    return std::nullopt;
}

std::optional<std::vector<KonigSlot>> bar_slots(const CellCollection& P) {
    auto M = maximal_inner_intervals(P);
    if (M.size() != 1 || (M.front().width() != 1 && M.front().height() != 1)) return std::nullopt;
    if (M.front().cells().size() != P.size()) return std::nullopt;
    // f_i = x_{v_i} x_{u_{i+1}} - x_{u_i} x_{v_{i+1}}, claiming x_{u_{i+1}} x_{v_i}
    std::vector<KonigSlot> out;
    for (const auto& c : P) {
        Interval iv{c.ll, c.upper_right()};
        out.push_back(make_slot(iv, inner_binomial(iv).diagonal_term()));
    }
    return out;
}

std::optional<std::vector<KonigSlot>> weakly_closed_search(const CellCollection& P, std::size_t node_limit) {
    auto path = weakly_closed_path_sequence(P);
    if (!path) return std::nullopt;
    auto ivs = intervals_by_size(P);
    Searcher S{P, P.size(), node_limit, 0, {}, {}};
    std::set<Interval> taken;
    std::function<bool(std::size_t)> dfs = [&](std::size_t slot) -> bool {
        if (slot == path->size()) return true;
        if (S.over()) return false;
        const Cell& A = (*path)[slot];
        for (const auto& iv : ivs) {
            if (!iv.contains(A) || taken.count(iv)) continue;
            auto b = inner_binomial(iv);
            for (const auto& claim : {b.antidiagonal_term(), b.diagonal_term()}) {
                if (!S.fits(claim)) continue;
                S.push(KonigSlot{b, claim});
                taken.insert(iv);
                if (realizing_weight(S.chosen) && dfs(slot + 1)) return true;
                taken.erase(iv);
                S.pop();
            }
        }
        return false;
    };
    if (dfs(0)) return S.chosen;
    return std::nullopt;
}

// Vertices of D not on the edge shared with E: u next to a, v next to b.
struct Attach {
    Vertex a, b, u, v;
};

std::optional<Attach> attach(const Cell& E, const Cell& D) {
    int di = D.ll.i - E.ll.i, dj = D.ll.j - E.ll.j;
    if (std::abs(di) + std::abs(dj) != 1) return std::nullopt;
    Attach t;
    if (di == 1) t = {E.upper_right(), E.lower_right(), D.upper_right(), D.lower_right()};
    else if (di == -1) t = {E.upper_left(), E.lower_left(), D.upper_left(), D.lower_left()};
    else if (dj == 1) t = {E.upper_left(), E.upper_right(), D.upper_left(), D.upper_right()};
    else t = {E.lower_left(), E.lower_right(), D.lower_left(), D.lower_right()};
    return t;
}

Monomial pair_term(Vertex p, Vertex q) { return Monomial::var(p) * Monomial::var(q); }

Interval cell_interval(const Cell& c) { return {c.ll, c.upper_right()}; }

std::optional<Interval> extended(const Interval& K, const Cell& D) {
    Interval U{{std::min(K.low.i, D.ll.i), std::min(K.low.j, D.ll.j)},
               {std::max(K.high.i, D.ll.i + 1), std::max(K.high.j, D.ll.j + 1)}};
    if (U.width() * U.height() != K.width() * K.height() + 1) return std::nullopt;
    return U;
}

bool used_by_claims(const std::vector<KonigSlot>& slots, Vertex p) {
    for (auto& s : slots)
        if (s.claimed.exponent(p)) return true;
    return false;
}

bool try_fresh(std::vector<KonigSlot>& slots, const Cell& D, const Attach& t) {
    for (auto [p, opp] : {std::pair{t.a, t.v}, std::pair{t.b, t.u}}) {
        if (used_by_claims(slots, p) || used_by_claims(slots, opp)) continue;
        slots.push_back(make_slot(cell_interval(D), pair_term(p, opp)));
        return true;
    }
    return false;
}

// Replace f_r = x_q x_d - ... on K by the extension to K + D, and add the cell binomial of D.
bool try_extend(std::vector<KonigSlot>& slots, const Cell& D, const Attach& t) {
    for (std::size_t r = 0; r < slots.size(); ++r) {
        auto U = extended(slots[r].binomial.interval, D);
        if (!U) continue;
        for (auto [q, qn, opp] : {std::tuple{t.a, t.u, t.v}, std::tuple{t.b, t.v, t.u}}) {
            if (!slots[r].claimed.exponent(q)) continue;
            auto rest = Monomial::var(q).quotient_of(slots[r].claimed);
            if (rest.degree() != 1) continue;
            Vertex d = rest.support().front();
            auto trial = slots;
            trial[r] = make_slot(*U, pair_term(qn, d));
            trial.push_back(make_slot(cell_interval(D), pair_term(q, opp)));
            if (!claims_coprime(trial)) continue;
            slots = std::move(trial);
            return true;
        }
    }
    return false;
}

bool add_cell(std::vector<KonigSlot>& slots, const Cell& E, const Cell& D, bool fresh_first) {
    auto t = attach(E, D);
    if (!t) return false;
    if (fresh_first) return try_fresh(slots, D, *t) || try_extend(slots, D, *t);
    return try_extend(slots, D, *t) || try_fresh(slots, D, *t);
}

std::optional<std::vector<KonigSlot>> recursive_search(const CellCollection& P, bool fresh_first) {
    if (auto bar = bar_slots(P)) return bar;
    std::optional<CollapseDatum> d;
    try {
        d = find_collapse_datum(P);
    } catch (const InputError&) {
        return std::nullopt;
    }
    if (!d) return std::nullopt;
    auto Icells = d->I.cells();
    std::sort(Icells.begin(), Icells.end());
    Cell C = Icells.front();
    for (const auto& c : Icells)
        if (d->J.contains(c)) C = c;
    auto drop = Icells;
    drop.insert(drop.end(), d->PI.begin(), d->PI.end());
    auto Pp = P.without(drop).with({C});
    auto slots = recursive_search(Pp, fresh_first);
    if (!slots) return std::nullopt;

    // cells of I on each side of C, ordered outward
    std::size_t pos = std::find(Icells.begin(), Icells.end(), C) - Icells.begin();
    std::vector<Cell> after(Icells.begin() + long(pos) + 1, Icells.end());
    std::vector<Cell> before(Icells.begin(), Icells.begin() + long(pos));
    std::reverse(before.begin(), before.end());
    if (after.empty()) std::swap(after, before);
    auto F = d->PI;
    std::sort(F.begin(), F.end(), [&](const Cell& x, const Cell& y) {
        return std::abs(x.ll.i - C.ll.i) + std::abs(x.ll.j - C.ll.j) <
               std::abs(y.ll.i - C.ll.i) + std::abs(y.ll.j - C.ll.j);
    });
    for (const auto* run : {&after, &F, &before}) {
        Cell prev = C;
        for (const auto& c : *run) {
            if (!add_cell(*slots, prev, c, fresh_first)) return std::nullopt;
            prev = c;
        }
    }
    return slots;
}

KonigCertificate finish(const CellCollection& P, std::vector<KonigSlot> slots, std::string strategy) {
    KonigCertificate c;
    c.chosen = std::move(slots);
    c.height_claim = P.size();
    c.strategy = std::move(strategy);
    if (auto w = realizing_weight(c.chosen)) c.weight = *w;
    return c;
}

bool acceptable(const CellCollection& P, const KonigCertificate& c) {
    return verify_konig(P, c, {}, false).passed();
}

}  // namespace

std::optional<KonigCertificate> konig_search(const CellCollection& P, KonigStrategy strategy,
                                             std::size_t node_limit) {
    auto try_slots = [&](std::optional<std::vector<KonigSlot>> s,
                         const std::string& name) -> std::optional<KonigCertificate> {
        if (!s) return std::nullopt;
        auto c = finish(P, std::move(*s), name);
        if (acceptable(P, c)) return c;
        return std::nullopt;
    };
    std::string name = to_string(strategy);
    std::optional<KonigCertificate> out;
    switch (strategy) {
        case KonigStrategy::generic:
            return try_slots(generic_search(P, node_limit), name);
        case KonigStrategy::interval:
            out = try_slots(bar_slots(P), name);
            break;
        case KonigStrategy::weakly_closed:
            out = try_slots(weakly_closed_search(P, node_limit), name);
            break;
        case KonigStrategy::simple_thin_recursive:
            out = try_slots(recursive_search(P, true), name);
            if (!out) out = try_slots(recursive_search(P, false), name + " (extension first)");
            break;
    }
    if (out) return out;
    return try_slots(generic_search(P, node_limit), "generic (fallback from " + name + ")");
}

std::optional<KonigCertificate> konig_auto(const CellCollection& P) {
    if (bar_slots(P)) return konig_search(P, KonigStrategy::interval);
    if (is_edge_connected(P) && is_thin(P) && is_simple(P))
        return konig_search(P, KonigStrategy::simple_thin_recursive);
    if (weakly_closed_path_sequence(P)) return konig_search(P, KonigStrategy::weakly_closed);
    return konig_search(P, KonigStrategy::generic);
}

}  // namespace polyideal
