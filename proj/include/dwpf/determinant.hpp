#pragma once

// Closed-form routes to Z_N in the spectral variables u_i = s_i^2,
// v_j = t_j^2, q = r^2:
//
//   z_izergin     c_N * prod (u_i - v_j)(q u_i - v_j) / Vandermondes
//                 * det[ 1 / ((u_i - v_j)(q u_i - v_j)) ]
//   z_lascoux     c_N * det[ sum_j h_{-i+j}(u) beta_{j,k}(v,q) ]
//   z_schur       c_N * sum over the (N-1)^N box of c_lambda(v) S_lambda(u)
//   z_free        the tau polynomial sum c_lambda(v) chi_lambda(t), with the
//                 u-dependent prefactor c_N left to the caller
//
// with c_N = (q-1)^N prod s_i t_i and
// beta_{j,k} = (q^{j-k+1} - q^{k-1})/(q-1) * e_{-j+k+N-1}(-v). The q-integer
// is always expanded into a monomial sum, never evaluated by division, so
// q = 1 stays regular for every route except Izergin's.
//
// The brute-force sum and the determinant routes use different overall
// normalizations; the bridge is
//   kappa_N = (-1)^N (2r)^{-N^2} prod_i (s_i t_i)^{-N},
// so that z_bruteforce = kappa_N * z_izergin.

#include <dwpf/partitions.hpp>
#include <dwpf/rational.hpp>
#include <dwpf/sixvertex.hpp>
#include <dwpf/tpoly.hpp>

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace dwpf {

// Raised when a determinant route hits a pole; the message names the
// offending pair of spectral variables.
struct SingularPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (q^m - q^k) / (q - 1), expanded as a signed sum of monomials in q.
Rational q_integer(long m, long k, const Rational& q);

// beta_{j,k}(v, q) with 1-based j, k.
Rational beta_entry(int j, int k, std::span<const Rational> v, const Rational& q, int n);

// c_N = (q - 1)^N prod_i u_i^{1/2} v_i^{1/2}, rational because the square
// roots s_i, t_i are the primitive inputs.
Rational c_prefactor(const RapidityPoint& p);

Rational z_izergin(const RapidityPoint& p);   // throws SingularPointError on pole collisions
Rational z_lascoux(const RapidityPoint& p);   // no Vandermonde denominators; u collisions allowed

// Coefficient c_lambda(v) = det[beta_{lambda_{N+1-l} + l, k}] for lambda
// inside the (N-1)^N box.
Rational c_lambda(const Partition& lambda, std::span<const Rational> v, const Rational& q, int n);

// All c_lambda over the box at a fixed (v, q), plus the normalized
// d_lambda = c_lambda / c_phi.
class CoefficientTable {
  public:
    CoefficientTable(int n, std::vector<Rational> v, Rational q);
    static CoefficientTable for_point(const RapidityPoint& p);

    int n() const { return n_; }
    const Rational& c(const Partition& lambda) const;
    const Rational& c_phi() const;
    Rational d(const Partition& lambda) const;
    const std::map<Partition, Rational>& entries() const { return c_; }

    nlohmann::json to_json() const;  // { "[2,1]": "p/q", ... }

  private:
    int n_;
    std::vector<Rational> v_;
    Rational q_;
    std::map<Partition, Rational> c_;
};

Rational z_schur_expansion(const RapidityPoint& p);

// The free-time tau polynomial in t_1..t_{N(N-1)}. Restriction contract:
// c_N * restrict(z_free, u) = z_schur_expansion.
TPoly z_free(int n, std::span<const Rational> v, const Rational& q);

// Measured bridge z_bruteforce / z_izergin.
Rational normalization_kappa(const RapidityPoint& p);

// The closed form (-1)^N (2r)^{-N^2} prod_i (s_i t_i)^{-N}.
Rational kappa_closed_form(const RapidityPoint& p);

}  // namespace dwpf
