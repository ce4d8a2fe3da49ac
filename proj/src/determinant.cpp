#include <dwpf/determinant.hpp>

#include <dwpf/exact_linalg.hpp>
#include <dwpf/symmetric.hpp>

#include <nlohmann/json.hpp>

namespace dwpf {

Rational q_integer(long m, long k, const Rational& q) {
    if (m == k) return Rational(0);
    const bool neg = m < k;
    if (neg) std::swap(m, k);
    Rational acc(0), pw = rational_pow(q, k);
    for (long i = k; i < m; ++i) {
        acc += pw;
        pw *= q;
    }
    return neg ? Rational(-acc) : acc;
}

Rational beta_entry(int j, int k, std::span<const Rational> v, const Rational& q, int n) {
    const int deg = -j + k + n - 1;
    if (deg < 0 || deg > n) return Rational(0);
    std::vector<Rational> neg_v;
    neg_v.reserve(v.size());
    for (const Rational& x : v) neg_v.push_back(-x);
    Rational e = e_elem(deg, neg_v);
    if (sgn(e) == 0) return Rational(0);
    return q_integer(j - k + 1, k - 1, q) * e;
}

Rational c_prefactor(const RapidityPoint& p) {
    p.validate();
    Rational c = rational_pow(p.q() - 1, p.n());
    for (int i = 0; i < p.n(); ++i) c *= p.s[i] * p.t[i];
    return c;
}

namespace {

void check_izergin_preconditions(const RapidityPoint& p) {
    const int n = p.n();
    const Rational q = p.q();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (p.u(i) == p.u(j))
                throw SingularPointError("z_izergin: u_" + std::to_string(i + 1) + " = u_" +
                                         std::to_string(j + 1));
            if (p.v(i) == p.v(j))
                throw SingularPointError("z_izergin: v_" + std::to_string(i + 1) + " = v_" +
                                         std::to_string(j + 1));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (p.u(i) == p.v(j))
                throw SingularPointError("z_izergin: u_" + std::to_string(i + 1) + " = v_" +
                                         std::to_string(j + 1));
            if (q * p.u(i) == p.v(j))
                throw SingularPointError("z_izergin: q*u_" + std::to_string(i + 1) + " = v_" +
                                         std::to_string(j + 1));
        }
}

}  // namespace

Rational z_izergin(const RapidityPoint& p) {
    p.validate();
    check_izergin_preconditions(p);
    const int n = p.n();
    const Rational q = p.q();
    Rational pref = c_prefactor(p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pref *= (p.u(i) - p.v(j)) * (q * p.u(i) - p.v(j));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pref /= (p.u(i) - p.u(j)) * (p.v(j) - p.v(i));
    ExactMatrix<Rational> m(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Rational(1) / ((p.u(i) - p.v(j)) * (q * p.u(i) - p.v(j)));
    return pref * det_exact(m);
}

Rational z_lascoux(const RapidityPoint& p) {
    p.validate();
    const int n = p.n();
    const Rational q = p.q();
    std::vector<Rational> u, v;
    for (int i = 0; i < n; ++i) u.push_back(p.u(i));
    for (int j = 0; j < n; ++j) v.push_back(p.v(j));
    // h_0 .. h_{2N-2}(u) in one sweep
    std::vector<Rational> h(2 * n - 1, Rational(0));
    h[0] = 1;
    for (const Rational& x : u)
        for (int d = 1; d <= 2 * n - 2; ++d) h[d] += x * h[d - 1];
    ExactMatrix<Rational> m(n, n, Rational(0));
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            Rational acc(0);
            for (int j = 1; j <= 2 * n - 1; ++j) {
                int deg = -i + j;
                if (deg < 0) continue;
                acc += h[deg] * beta_entry(j, k, v, q, n);
            }
            m.at(i - 1, k - 1) = acc;
        }
    return c_prefactor(p) * det_exact(m);
}

Rational c_lambda(const Partition& lambda, std::span<const Rational> v, const Rational& q,
                  int n) {
    if (!lambda.fits_in_box(n, n - 1))
        throw std::domain_error("c_lambda: partition outside the (N-1)^N box");
    ExactMatrix<Rational> m(n, n, Rational(0));
    for (int l = 1; l <= n; ++l)
        for (int k = 1; k <= n; ++k)
            m.at(l - 1, k - 1) = beta_entry(lambda.part(n + 1 - l) + l, k, v, q, n);
    return det_exact(m);
}

CoefficientTable::CoefficientTable(int n, std::vector<Rational> v, Rational q)
    : n_(n), v_(std::move(v)), q_(std::move(q)) {
    if (static_cast<int>(v_.size()) != n_)
        throw std::invalid_argument("CoefficientTable: |v| != N");
    for (const Partition& lambda : enumerate_box(n_))
        c_.emplace(lambda, c_lambda(lambda, v_, q_, n_));
}

CoefficientTable CoefficientTable::for_point(const RapidityPoint& p) {
    std::vector<Rational> v;
    for (int j = 0; j < p.n(); ++j) v.push_back(p.v(j));
    return CoefficientTable(p.n(), std::move(v), p.q());
}

const Rational& CoefficientTable::c(const Partition& lambda) const {
    auto it = c_.find(lambda);
    if (it == c_.end())
        throw std::domain_error("CoefficientTable: " + lambda.to_string() + " outside the box");
    return it->second;
}

const Rational& CoefficientTable::c_phi() const {
    return c(Partition{});
}

Rational CoefficientTable::d(const Partition& lambda) const {
    const Rational& phi = c_phi();
    if (sgn(phi) == 0) throw std::domain_error("CoefficientTable: c_phi = 0 at this point");
    return c(lambda) / phi;
}

nlohmann::json CoefficientTable::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [lambda, value] : c_) j[lambda.to_string()] = to_string(value);
    return j;
}

Rational z_schur_expansion(const RapidityPoint& p) {
    p.validate();
    const int n = p.n();
    std::vector<Rational> u;
    for (int i = 0; i < n; ++i) u.push_back(p.u(i));
    const CoefficientTable table = CoefficientTable::for_point(p);
    Rational acc(0);
    for (const auto& [lambda, c] : table.entries()) {
        if (sgn(c) == 0) continue;
        acc += c * schur(lambda, u);
    }
    return c_prefactor(p) * acc;
}

TPoly z_free(int n, std::span<const Rational> v, const Rational& q) {
    const int m_count = n * (n - 1);
    CoefficientTable table(n, std::vector<Rational>(v.begin(), v.end()), q);
    TPoly acc(m_count);
    for (const auto& [lambda, c] : table.entries()) {
        if (sgn(c) == 0) continue;
        acc += character_poly(lambda, m_count) * c;
    }
    return acc;
}

Rational normalization_kappa(const RapidityPoint& p) {
    Rational zi = z_izergin(p);
    if (sgn(zi) == 0) throw SingularPointError("normalization_kappa: z_izergin = 0");
    return z_bruteforce(p) / zi;
}

Rational kappa_closed_form(const RapidityPoint& p) {
    const int n = p.n();
    Rational denom = rational_pow(2 * p.r, static_cast<long>(n) * n);
    for (int i = 0; i < p.n(); ++i) denom *= rational_pow(p.s[i] * p.t[i], n);
    Rational k = Rational(1) / denom;
    return (n % 2 == 0) ? k : Rational(-k);
}

}  // namespace dwpf
