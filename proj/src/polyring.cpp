#include "polyideal/polyring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace polyideal {

Monomial Monomial::var(Vertex v, unsigned e) {
    Monomial m;
    if (e > 0) m.f_.push_back({v, e});
    return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<Vertex, unsigned>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (auto& [v, e] : pairs) {
        if (e == 0) continue;
        if (!m.f_.empty() && m.f_.back().first == v)
            m.f_.back().second += e;
        else
            m.f_.push_back({v, e});
    }
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto& p : f_) d += p.second;
    return d;
}

unsigned Monomial::exponent(Vertex v) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), std::pair<Vertex, unsigned>{v, 0});
    return it != f_.end() && it->first == v ? it->second : 0;
}

bool Monomial::squarefree() const {
    return std::all_of(f_.begin(), f_.end(), [](auto& p) { return p.second == 1; });
}

std::vector<Vertex> Monomial::support() const {
    std::vector<Vertex> out;
    for (auto& p : f_) out.push_back(p.first);
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    auto it = m.f_.begin();
    for (auto& [v, e] : f_) {
        while (it != m.f_.end() && it->first < v) ++it;
        if (it == m.f_.end() || it->first != v || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first))
            r.f_.push_back(*a++);
        else if (a == f_.end() || b->first < a->first)
            r.f_.push_back(*b++);
        else {
            r.f_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    return r;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
    Monomial r;
    auto it = f_.begin();
    for (auto& [v, e] : m.f_) {
        while (it != f_.end() && it->first < v) ++it;
        unsigned sub = (it != f_.end() && it->first == v) ? it->second : 0;
        if (sub > e) throw std::invalid_argument("monomial does not divide");
        if (e > sub) r.f_.push_back({v, e - sub});
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r;
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first))
            r.f_.push_back(*a++);
        else if (a == f_.end() || b->first < a->first)
            r.f_.push_back(*b++);
        else {
            r.f_.push_back({a->first, std::max(a->second, b->second)});
            ++a, ++b;
        }
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() && b != o.f_.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else
            return false;
    }
    return true;
}

MonomialOrder::MonomialOrder(std::vector<Vertex> ascending, Scheme scheme)
    : vars_(std::move(ascending)), scheme_(scheme) {
    for (std::size_t k = 0; k < vars_.size(); ++k)
        if (!rank_.emplace(vars_[k], int(k)).second)
            throw std::invalid_argument("variable listed twice in order: " + to_string(vars_[k]));
}

int MonomialOrder::rank(Vertex v) const {
    auto it = rank_.find(v);
    if (it == rank_.end()) throw std::invalid_argument("variable outside order: " + to_string(v));
    return it->second;
}

int MonomialOrder::compare(const Monomial& m1, const Monomial& m2) const {
    if (scheme_ != Scheme::lex) {
        unsigned d1 = m1.degree(), d2 = m2.degree();
        if (d1 != d2) return d1 < d2 ? -1 : 1;
    }
    // rank -> exponent difference m1 - m2
    std::vector<std::pair<int, long>> diff;
    for (auto& [v, e] : m1.factors()) diff.push_back({rank(v), long(e)});
    for (auto& [v, e] : m2.factors()) diff.push_back({rank(v), -long(e)});
    std::sort(diff.begin(), diff.end());
    std::vector<std::pair<int, long>> merged;
    for (auto& p : diff) {
        if (!merged.empty() && merged.back().first == p.first)
            merged.back().second += p.second;
        else
            merged.push_back(p);
    }
    if (scheme_ == Scheme::grevlex) {
        for (auto& [r, d] : merged)
            if (d != 0) return d < 0 ? 1 : -1;
        return 0;
    }
    for (auto it = merged.rbegin(); it != merged.rend(); ++it)
        if (it->second != 0) return it->second > 0 ? 1 : -1;
    return 0;
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::lex: return "lex";
        case Scheme::grlex: return "grlex";
        case Scheme::grevlex: return "grevlex";
    }
    return "?";
}

Scheme parse_scheme(const std::string& s) {
    if (s == "lex") return Scheme::lex;
    if (s == "grlex" || s == "graded-lex") return Scheme::grlex;
    if (s == "grevlex" || s == "graded-revlex" || s == "revlex") return Scheme::grevlex;
    throw InputError("unknown monomial order scheme: " + s);
}

std::string MonomialOrder::describe() const {
    std::string out = to_string(scheme_) + " ";
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (k) out += " < ";
        out += "x[" + std::to_string(vars_[k].i) + "," + std::to_string(vars_[k].j) + "]";
    }
    return out;
}

std::vector<Vertex> column_major(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end(), [](Vertex a, Vertex b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) t_.emplace(Monomial{}, c);
}

Polynomial Polynomial::var(Vertex v) { return term(Monomial::var(v), 1); }

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (c != 0) p.t_.emplace(m, c);
    return p;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::homogeneous() const {
    if (t_.empty()) return true;
    unsigned d = t_.begin()->first.degree();
    for (auto& [m, c] : t_)
        if (m.degree() != d) return false;
    return true;
}

std::vector<Vertex> Polynomial::variables() const {
    std::vector<Vertex> out;
    for (auto& [m, c] : t_)
        for (auto& [v, e] : m.factors()) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    return r += o;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    return r -= o;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (auto& [m1, c1] : t_)
        for (auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (auto& [m, k] : t_) r.t_.emplace_hint(r.t_.end(), m, k * c);
    return r;
}

Polynomial Polynomial::times(const Monomial& mono) const {
    Polynomial r;
    for (auto& [m, k] : t_) r.t_.emplace(m * mono, k);
    return r;
}

LeadingTerm initial_term(const MonomialOrder& order, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("initial term of the zero polynomial");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (order.compare(it->first, best->first) > 0) best = it;
    return {best->first, best->second};
}

std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order,
                                                        const Polynomial& f) {
    std::vector<std::pair<Monomial, Rational>> out(f.terms().begin(), f.terms().end());
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
    return out;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    // column-major factor order keeps the text independent of the row-major storage
    auto fs = m.factors();
    std::sort(fs.begin(), fs.end(), [](auto& a, auto& b) {
        return a.first.i != b.first.i ? a.first.i < b.first.i : a.first.j < b.first.j;
    });
    for (auto& [v, e] : fs) {
        if (!out.empty()) out += '*';
        out += "x[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : sorted_terms(order, f)) {
        Rational a = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += a.get_str();
        else if (a == 1)
            out += to_string(m);
        else
            out += a.get_str() + "*" + to_string(m);
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    return to_string(f, MonomialOrder(column_major(f.variables()), Scheme::grevlex));
}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Polynomial parse() {
        skip();
        if (pos_ >= s_.size()) fail("empty polynomial");
        Polynomial acc;
        bool first = true;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            int sign = 1;
            if (accept_plus())
                sign = 1;
            else if (accept_minus())
                sign = -1;
            else if (!first)
                fail("expected '+' or '-'");
            first = false;
            Polynomial t = parse_term();
            acc += sign > 0 ? t : -t;
        }
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw InputError("column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept_plus() {
        if (pos_ < s_.size() && s_[pos_] == '+') {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_minus() {
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (s_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    Polynomial parse_term() {
        Polynomial t(1);
        bool any = false;
        while (true) {
            skip();
            if (pos_ >= s_.size()) break;
            char ch = s_[pos_];
            if (any && ch == '*') {
                ++pos_;
                skip();
                ch = pos_ < s_.size() ? s_[pos_] : '\0';
                if (ch != 'x' && !std::isdigit(static_cast<unsigned char>(ch)))
                    fail("expected a factor after '*'");
            }
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                t = t.scaled(parse_number());
            } else if (ch == 'x') {
                t = t.times(parse_variable());
            } else {
                break;
            }
            any = true;
        }
        if (!any) fail("expected a term");
        return t;
    }

    unsigned long parse_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        if (pos_ - start > 9) fail("integer too large");
        return std::stoul(s_.substr(start, pos_ - start));
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(start, pos_ - start);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t ds = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (ds == pos_) fail("expected denominator");
            std::string den = s_.substr(ds, pos_ - ds);
            if (mpz_class(den) == 0) fail("zero denominator");
            Rational r{mpz_class(num), mpz_class(den)};
            r.canonicalize();
            return r;
        }
        return Rational(mpz_class(num));
    }

    Monomial parse_variable() {
        ++pos_;  // 'x'
        if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '[' after 'x'");
        ++pos_;
        skip();
        int i = int(parse_uint());
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ',') fail("expected ','");
        ++pos_;
        skip();
        int j = int(parse_uint());
        skip();
        if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
        ++pos_;
        unsigned e = 1;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            e = unsigned(parse_uint());
        }
        return Monomial::var({i, j}, e);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text) { return PolyParser(text).parse(); }

Polynomial determinant(const SymbolicMatrix& M) {
    int n = int(M.size());
    for (auto& row : M)
        if (int(row.size()) != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n > kMaxDeterminantSize)
        throw std::length_error("determinant size " + std::to_string(n) + " exceeds guard " +
                                std::to_string(kMaxDeterminantSize));
    if (n == 0) return Polynomial(1);
    unsigned full = (1u << n) - 1;
    // D[mask] = det of rows popcount(mask).. against the columns not in mask
    std::vector<Polynomial> D(full + 1);
    D[full] = Polynomial(1);
    for (int mask = int(full) - 1; mask >= 0; --mask) {
        int r = std::popcount(unsigned(mask));
        Polynomial acc;
        int free_before = 0;
        for (int c = 0; c < n; ++c) {
            if (mask & (1 << c)) continue;
            const Polynomial& a = M[r][c];
            if (!a.is_zero() && !D[mask | (1 << c)].is_zero()) {
                Polynomial t = a * D[mask | (1 << c)];
                if (free_before % 2) acc -= t;
                else acc += t;
            }
            ++free_before;
        }
        D[mask] = std::move(acc);
    }
    return D[0];
}

}  // namespace polyideal
