#include <dwpf/plucker.hpp>

#include <dwpf/determinant.hpp>
#include <dwpf/exact_linalg.hpp>

#include <stdexcept>

namespace dwpf {

GammaBasis::GammaBasis(int n, std::vector<Rational> v, Rational q)
    : n_(n), v_(std::move(v)), q_(std::move(q)) {
    if (static_cast<int>(v_.size()) != n_) throw std::invalid_argument("GammaBasis: |v| != N");
}

GammaBasis GammaBasis::for_point(const RapidityPoint& p) {
    std::vector<Rational> v;
    for (int j = 0; j < p.n(); ++j) v.push_back(p.v(j));
    return GammaBasis(p.n(), std::move(v), p.q());
}

Rational GammaBasis::entry(int b, int a) const {
    return beta_entry(b, a, v_, q_, n_);
}

Rational minor_det(const GammaBasis& basis, std::span<const int> cols) {
    const int n = basis.n();
    if (static_cast<int>(cols.size()) != n)
        throw std::invalid_argument("minor_det: need exactly N columns");
    ExactMatrix<Rational> m(n, n, Rational(0));
    for (int a = 1; a <= n; ++a)
        for (int l = 0; l < n; ++l) m.at(a - 1, l) = basis.entry(cols[l], a);
    return det_exact(m);
}

std::vector<int> minor_columns(const Partition& lambda, int n) {
    if (!lambda.fits_in_box(n, n - 1))
        throw std::domain_error("minor_columns: partition outside the (N-1)^N box");
    std::vector<int> cols;
    for (int l = 1; l <= n; ++l) cols.push_back(lambda.part(n + 1 - l) + l);
    return cols;
}

Rational laplace_plucker(const GammaBasis& basis, std::span<const int> mus,
                         std::span<const int> nus) {
    const int n = basis.n();
    if (static_cast<int>(mus.size()) != n - 1 || static_cast<int>(nus.size()) != n + 1)
        throw std::invalid_argument("laplace_plucker: need N-1 mus and N+1 nus");
    Rational acc(0);
    std::vector<int> left(mus.begin(), mus.end());
    left.push_back(0);
    for (int p = 0; p <= n; ++p) {
        left.back() = nus[p];
        std::vector<int> right;
        for (int i = 0; i <= n; ++i)
            if (i != p) right.push_back(nus[i]);
        Rational term = minor_det(basis, left) * minor_det(basis, right);
        if (p % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

bool two_hook_relation(const GammaBasis& basis, int a1, int a2, int b1, int b2) {
    const int n = basis.n();
    if (!(a1 > a2 && a2 >= 0 && b1 > b2 && b2 >= 1))
        throw std::domain_error("two_hook_relation: need a1 > a2 >= 0, b1 > b2 >= 1");
    if (a1 > n - 2 || b1 > n) throw std::domain_error("two_hook_relation: hooks exceed the box");
    auto c = [&](const Partition& lambda) { return minor_det(basis, minor_columns(lambda, n)); };
    const Rational lhs = c(hook_partition(a2, b2)) * c(hook_partition(a1, b1)) -
                         c(hook_partition(a2, b1)) * c(hook_partition(a1, b2));
    const std::vector<int> as{a1, a2}, bs{b1, b2};
    const Rational rhs = c(Partition{}) * c(partition_from_hooks(as, bs));
    return lhs == rhs;
}

bool multi_hook_relation(const GammaBasis& basis, std::span<const int> a_parts,
                         std::span<const int> b_parts) {
    const int n = basis.n();
    const int k = static_cast<int>(a_parts.size()) - 1;  // hooks are indexed 0..k
    if (k < 1 || static_cast<int>(b_parts.size()) != k + 1)
        throw std::invalid_argument("multi_hook_relation: need k+1 >= 2 hooks in both lists");
    for (int i = 0; i <= k; ++i) {
        if (a_parts[i] < 0 || b_parts[i] < 1 ||
            (i > 0 && (a_parts[i] >= a_parts[i - 1] || b_parts[i] >= b_parts[i - 1])))
            throw std::domain_error("multi_hook_relation: hook lists must decrease strictly");
    }
    if (a_parts[0] > n - 2 || b_parts[0] > n)
        throw std::domain_error("multi_hook_relation: hooks exceed the box");
    auto c = [&](const Partition& lambda) { return minor_det(basis, minor_columns(lambda, n)); };

    const std::vector<int> rest_a(a_parts.begin() + 1, a_parts.end());
    Rational lhs(0);
    for (int p = 0; p <= k; ++p) {
        // lambda(k|p): hooks 1..k with b_p swapped out for b_0 (p = 0: unchanged)
        std::vector<int> bs;
        if (p > 0) bs.push_back(b_parts[0]);
        for (int i = 1; i <= k; ++i)
            if (i != p) bs.push_back(b_parts[i]);
        Rational term =
            c(partition_from_hooks(rest_a, bs)) * c(hook_partition(a_parts[0], b_parts[p]));
        if (p % 2 == 0)
            lhs += term;
        else
            lhs -= term;
    }
    const Rational rhs = c(Partition{}) * c(partition_from_hooks(a_parts, b_parts));
    return lhs == rhs;
}

SigmaSequence sigma_sequence(const Partition& lambda, int n) {
    if (lambda.rows() > n) throw std::domain_error("sigma_sequence: more than N parts");
    std::vector<int> left;
    for (int j = 1; j <= n; ++j) left.push_back(j + lambda.part(n + 1 - j));
    SigmaSequence seq;
    seq.mus.assign(left.begin(), left.end() - 1);
    seq.nus.push_back(left.back());
    for (int j = 1; j <= n; ++j) seq.nus.push_back(j);
    return seq;
}

SigmaSequence sigma_sequence(std::span<const int> a_parts, std::span<const int> b_parts, int n) {
    return sigma_sequence(partition_from_hooks(a_parts, b_parts), n);
}

}  // namespace dwpf
