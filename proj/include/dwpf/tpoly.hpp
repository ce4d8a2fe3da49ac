#pragma once

// Sparse multivariate polynomials over Rational in time variables t_1..t_M.
// A monomial t_1^{e_1}...t_M^{e_M} has weighted degree sum(n * e_n); that
// grading is what bounds every expansion in this project.

#include <dwpf/rational.hpp>

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace dwpf {

class TPoly {
  public:
    using Exponents = std::vector<int>;

    // Graded lexicographic: weighted degree first, then lex on exponents.
    struct TermOrder {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    explicit TPoly(int vars = 0) : vars_(vars) {}

    static TPoly constant(int vars, const Rational& c);
    static TPoly variable(int vars, int n);  // t_n, 1-indexed
    static TPoly monomial(int vars, Exponents e, const Rational& c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Weighted degree of an exponent vector: sum over n of n * e_n.
    static long weighted_degree(const Exponents& e);
    // Max weighted degree over stored terms; -1 for the zero polynomial.
    long weighted_degree() const;

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const Rational& c);
    TPoly operator-() const;
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(TPoly a, const Rational& c) { return a *= c; }
    friend TPoly operator*(const Rational& c, TPoly a) { return a *= c; }
    TPoly operator*(const TPoly& o) const;
    bool operator==(const TPoly& o) const = default;

    // Substitution t_n -> -t_n for all n.
    TPoly negate_variables() const;

    // Adds c * t^e, dropping the term if the result is zero.
    void add_term(const Exponents& e, const Rational& c);

    // Exact evaluation at t_n = values[n-1]; values.size() must be >= vars.
    Rational evaluate(std::span<const Rational> values) const;

    nlohmann::json to_json() const;
    static TPoly from_json(const nlohmann::json& j, int vars);

    std::string to_string() const;  // human-readable, for diagnostics

  private:
    void check_compatible(const TPoly& o) const;

    int vars_;
    TermMap terms_;
};

// Exact division; throws std::domain_error when b does not divide a.
// Bareiss elimination relies on this always succeeding.
TPoly divide_exact(const TPoly& a, const TPoly& b);

}  // namespace dwpf
