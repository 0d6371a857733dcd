#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyideal/grid.hpp"

namespace polyideal {

using Rational = mpq_class;

// Sparse exponent vector; variables are grid vertices, no zero exponents stored.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(Vertex v, unsigned e = 1);
    static Monomial from_pairs(std::vector<std::pair<Vertex, unsigned>> pairs);

    const std::vector<std::pair<Vertex, unsigned>>& factors() const { return f_; }
    unsigned degree() const;
    unsigned exponent(Vertex v) const;
    bool is_one() const { return f_.empty(); }
    bool squarefree() const;
    std::vector<Vertex> support() const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    // Requires divides(m).
    Monomial quotient_of(const Monomial& m) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.f_ <=> b.f_; }

private:
    std::vector<std::pair<Vertex, unsigned>> f_;  // sorted by vertex
};

enum class Scheme { lex, grlex, grevlex };

// Total order on monomials from an ascending variable list and a scheme.
class MonomialOrder {
public:
    MonomialOrder() = default;
    MonomialOrder(std::vector<Vertex> ascending, Scheme scheme);

    const std::vector<Vertex>& variables() const { return vars_; }
    Scheme scheme() const { return scheme_; }
    bool covers(Vertex v) const { return rank_.count(v) != 0; }
    int rank(Vertex v) const;  // throws for variables outside the order
    // Negative, zero or positive as m1 is less than, equal to or greater than m2.
    int compare(const Monomial& m1, const Monomial& m2) const;
    std::string describe() const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.vars_ == b.vars_ && a.scheme_ == b.scheme_;
    }

private:
    std::vector<Vertex> vars_;
    Scheme scheme_ = Scheme::grevlex;
    std::map<Vertex, int> rank_;
};

std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& s);

// Variables ascending by column, then row: the order used throughout for x_{i,j}.
std::vector<Vertex> column_major(std::vector<Vertex> vs);

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
    Polynomial(int c) : Polynomial(Rational(c)) {}
    static Polynomial var(Vertex v);
    static Polynomial term(const Monomial& m, const Rational& c);

    const std::map<Monomial, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    unsigned degree() const;
    bool homogeneous() const;
    std::vector<Vertex> variables() const;
    Rational coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial times(const Monomial& m) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> t_;
};

struct LeadingTerm {
    Monomial monomial;
    Rational coefficient;
};

// Throws std::invalid_argument on the zero polynomial.
LeadingTerm initial_term(const MonomialOrder& order, const Polynomial& f);
// Terms sorted descending by the order.
std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order,
                                                        const Polynomial& f);

// Canonical text: terms descending, "x[i,j]^e" factors joined by '*'.
std::string to_string(const Polynomial& f, const MonomialOrder& order);
// Uses graded-revlex over the polynomial's own variables in column-major order.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m);
// Accepts the canonical grammar; also accepts U+2212 as minus. Throws InputError.
Polynomial parse_polynomial(const std::string& text);

using SymbolicMatrix = std::vector<std::vector<Polynomial>>;

constexpr int kMaxDeterminantSize = 10;
// Cofactor expansion memoized over column subsets. Throws std::length_error above the size guard.
Polynomial determinant(const SymbolicMatrix& M);

}  // namespace polyideal
