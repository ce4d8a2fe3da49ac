#include <dwpf/symmetric.hpp>

#include <dwpf/exact_linalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace dwpf {

std::vector<Rational> power_sums(std::span<const Rational> u, int m_count) {
    if (m_count < 1) throw std::invalid_argument("power_sums: need M >= 1");
    std::vector<Rational> t(m_count, Rational(0));
    std::vector<Rational> pw(u.begin(), u.end());
    for (int n = 1; n <= m_count; ++n) {
        Rational sum(0);
        for (size_t i = 0; i < u.size(); ++i) {
            if (n > 1) pw[i] *= u[i];
            sum += pw[i];
        }
        t[n - 1] = sum / n;
    }
    return t;
}

Rational h_elem(int n, std::span<const Rational> x) {
    if (n < 0) return Rational(0);
    std::vector<Rational> dp(n + 1, Rational(0));
    dp[0] = 1;
    for (const Rational& xi : x)
        for (int d = 1; d <= n; ++d) dp[d] += xi * dp[d - 1];
    return dp[n];
}

Rational e_elem(int n, std::span<const Rational> x) {
    if (n < 0 || n > static_cast<int>(x.size())) return Rational(0);
    std::vector<Rational> dp(n + 1, Rational(0));
    dp[0] = 1;
    for (const Rational& xi : x)
        for (int d = n; d >= 1; --d) dp[d] += xi * dp[d - 1];
    return dp[n];
}

std::vector<TPoly> p_polys_up_to(int max_n, int m_count) {
    if (max_n > m_count)
        throw std::invalid_argument("p_polys_up_to: need M >= n");
    std::vector<TPoly> p;
    p.push_back(TPoly::constant(m_count, Rational(1)));
    for (int n = 1; n <= max_n; ++n) {
        TPoly acc(m_count);
        for (int k = 1; k <= n; ++k)
            acc += TPoly::variable(m_count, k) * p[n - k] * Rational(k);
        acc *= make_rational(1, n);
        p.push_back(std::move(acc));
    }
    return p;
}

TPoly p_poly(int n, int m_count) {
    if (n < 0) return TPoly(m_count);
    if (n == 0) return TPoly::constant(m_count, Rational(1));
    return p_polys_up_to(n, m_count).back();
}

TPoly hmn_poly(int m, int n, int m_count) {
    if (m < 0 || n < 0) throw std::invalid_argument("hmn_poly: need m, n >= 0");
    auto p = p_polys_up_to(m + n + 1, m_count);
    TPoly acc(m_count);
    for (int k = 0; k <= n; ++k)
        acc += p[k + m + 1] * p[n - k].negate_variables();
    if (n % 2 != 0) acc = -acc;
    return acc;
}

Rational schur(const Partition& lambda, std::span<const Rational> u) {
    const int n = static_cast<int>(u.size());
    if (lambda.rows() > n)
        throw std::domain_error("schur: more parts than variables");
    if (n == 0) return lambda.empty() ? Rational(1) : Rational(0);
    // one DP sweep for all needed h degrees
    const int max_deg = lambda.part(1) - 1 + n;
    std::vector<Rational> h(std::max(max_deg, 0) + 1, Rational(0));
    h[0] = 1;
    for (const Rational& xi : u)
        for (int d = 1; d <= max_deg; ++d) h[d] += xi * h[d - 1];
    ExactMatrix<Rational> jt(n, n, Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= n; ++l) {
            int deg = lambda.part(i) - i + l;
            if (deg >= 0) jt.at(i - 1, l - 1) = h[deg];
        }
    return det_exact(jt);
}

TPoly character_poly(const Partition& lambda, int m_count) {
    if (lambda.empty()) return TPoly::constant(m_count, Rational(1));
    const FrobeniusData f = frobenius(lambda);
    const int max_p = f.m[0] + f.n[0] + 1;  // principal hook length
    if (max_p > m_count)
        throw std::invalid_argument("character_poly: M smaller than the principal hook");
    auto p = p_polys_up_to(max_p, m_count);
    std::vector<TPoly> p_neg;
    p_neg.reserve(p.size());
    for (const TPoly& q : p) p_neg.push_back(q.negate_variables());
    auto hmn = [&](int m, int n) {
        TPoly acc(m_count);
        for (int k = 0; k <= n; ++k) acc += p[k + m + 1] * p_neg[n - k];
        if (n % 2 != 0) acc = -acc;
        return acc;
    };
    ExactMatrix<TPoly> g(f.d, f.d, TPoly(m_count));
    for (int i = 0; i < f.d; ++i)
        for (int j = 0; j < f.d; ++j) g.at(i, j) = hmn(f.m[i], f.n[j]);
    return det_exact(g);
}

Rational restrict_to_power_sums(const TPoly& poly, std::span<const Rational> u) {
    if (poly.vars() == 0) return poly.constant_term();
    return poly.evaluate(power_sums(u, poly.vars()));
}

}  // namespace dwpf
