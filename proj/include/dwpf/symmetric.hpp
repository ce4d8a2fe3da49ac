#pragma once

// Symmetric-function machinery: numeric complete homogeneous and elementary
// symmetric functions, power sums, the polynomials p_n(t) and h_{m,n}(t),
// Schur functions via Jacobi-Trudi, and character polynomials chi_lambda(t)
// as the Giambelli-style determinant of hook polynomials over the Frobenius
// grid. Restricting t_n to power sums of u turns chi_lambda back into the
// Schur function S_lambda(u).

#include <dwpf/partitions.hpp>
#include <dwpf/rational.hpp>
#include <dwpf/tpoly.hpp>

#include <span>
#include <vector>

namespace dwpf {

// t_n = (1/n) sum_i u_i^n for n = 1..M.
std::vector<Rational> power_sums(std::span<const Rational> u, int m_count);

// Complete homogeneous symmetric function h_n(x); 0 for n < 0, 1 at n = 0.
Rational h_elem(int n, std::span<const Rational> x);

// Elementary symmetric function e_n(x); 0 outside 0 <= n <= |x|, 1 at n = 0.
Rational e_elem(int n, std::span<const Rational> x);

// p_n(t) = sum over n_1 + 2 n_2 + ... = n of t_1^{n_1} t_2^{n_2} ... /
// (n_1! n_2! ...); equivalently the z^n coefficient of exp(sum t_k z^k).
// p_0 = 1, p_n = 0 for n < 0. Computed by n*p_n = sum_k k*t_k*p_{n-k}.
TPoly p_poly(int n, int m_count);

// p_0..p_max in one sweep (shared by the hook-polynomial determinants).
std::vector<TPoly> p_polys_up_to(int max_n, int m_count);

// Hook polynomial h_{m,n}(t) = (-1)^n sum_{k=0}^{n} p_{k+m+1}(t) p_{n-k}(-t);
// weighted degree m + n + 1, the hook length.
TPoly hmn_poly(int m, int n, int m_count);

// Schur function via the N x N Jacobi-Trudi determinant
// det[h_{lambda_i - i + l}(u)], lambda padded with zeros to N parts.
Rational schur(const Partition& lambda, std::span<const Rational> u);

// Character polynomial chi_lambda(t) = det[h_{m_i, n_j}(t)] over the d x d
// Frobenius grid; chi of the empty partition is 1.
TPoly character_poly(const Partition& lambda, int m_count);

// Substitutes t_n = (1/n) sum u_i^n and evaluates exactly.
Rational restrict_to_power_sums(const TPoly& poly, std::span<const Rational> u);

}  // namespace dwpf
