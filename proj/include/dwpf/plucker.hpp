#pragma once

// Plucker relations among the maximal minors of the gamma-column family
//
//   gamma_b(a) = (q^{b-a+1} - q^{a-1})/(q-1) * e_{-b+a+N-1}(-v),  a = 1..N,
//
// evaluated at fixed rational (v, q). The coefficients c_lambda are exactly
// the minors |gamma_{lambda_N+1}, ..., gamma_{lambda_1+N}|, so the
// Laplace-expansion identity over a doubled matrix
//
//   sum_p (-1)^{p+1} |gamma_mu..., gamma_{nu_p}| |gamma_nu... ^ nu_p| = 0
//
// generates every quadratic relation used here: the two-hook relation, and
// the multi-hook relation behind the induction over products of X operators.

#include <dwpf/partitions.hpp>
#include <dwpf/rational.hpp>
#include <dwpf/sixvertex.hpp>

#include <span>
#include <vector>

namespace dwpf {

class GammaBasis {
  public:
    GammaBasis(int n, std::vector<Rational> v, Rational q);
    static GammaBasis for_point(const RapidityPoint& p);

    int n() const { return n_; }
    const Rational& q() const { return q_; }
    const std::vector<Rational>& v() const { return v_; }

    // Entry a (1-based) of the column gamma_b; any integer b is finite since
    // the q-integer is expanded, never divided.
    Rational entry(int b, int a) const;

  private:
    int n_;
    std::vector<Rational> v_;
    Rational q_;
};

// Determinant of the assembled columns (cols.size() == N).
Rational minor_det(const GammaBasis& basis, std::span<const int> cols);

// c_lambda as the minor with columns (lambda_N + 1, ..., lambda_1 + N).
std::vector<int> minor_columns(const Partition& lambda, int n);

// The alternating Laplace sum; identically zero for every parameter choice.
Rational laplace_plucker(const GammaBasis& basis, std::span<const int> mus,
                         std::span<const int> nus);

// c_{[a2+1,1^{b2-1}]} c_{[a1+1,1^{b1-1}]} - c_{[a2+1,1^{b1-1}]} c_{[a1+1,1^{b2-1}]}
//   == c_phi c_{[a1+1, a2+2, 2^{b2-1}, 1^{b1-b2-1}]}
// for a1 > a2 >= 0, b1 > b2 >= 1, a1 <= N-2, b1 <= N.
bool two_hook_relation(const GammaBasis& basis, int a1, int a2, int b1, int b2);

// sum_{p=0}^{k} (-1)^p c_{lambda(k|p)} c_{[a_0+1, 1^{b_p-1}]}
//   == c_phi c_{lambda(k+1)}
// where hooks (a_0 > ... > a_k | b_0 > ... > b_k) are passed as full lists,
// lambda(k+1) uses all k+1 hooks, lambda(k|p) drops hook 0 and replaces b_p
// by b_0 (lambda(k|0) keeps b_1..b_k unchanged).
bool multi_hook_relation(const GammaBasis& basis, std::span<const int> a_parts,
                         std::span<const int> b_parts);

struct SigmaSequence {
    std::vector<int> mus;  // N-1 entries
    std::vector<int> nus;  // N+1 entries
};

// The parameter assignment whose Laplace expansion yields the hook relation
// for the partition with the given diagonal hooks: start from [1..N | 1..N]
// and add lambda_1 to the largest left entry, lambda_2 to the next, and so
// on; the last left entry becomes nu_1.
SigmaSequence sigma_sequence(std::span<const int> a_parts, std::span<const int> b_parts, int n);
SigmaSequence sigma_sequence(const Partition& lambda, int n);

}  // namespace dwpf
