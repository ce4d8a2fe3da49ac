#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dwpf/sampling.hpp>
#include <dwpf/symmetric.hpp>

#include <random>

using namespace dwpf;

namespace {

// Direct multi-index expansion of p_n: sum over partitions n_1 + 2 n_2 + ...
// of t^{n} / (n_1! n_2! ...). Independent of the recurrence used in p_poly.
void p_direct_rec(int remaining, int part, TPoly::Exponents& mult, TPoly& out) {
    if (remaining == 0) {
        Rational coeff(1);
        for (size_t i = 0; i < mult.size(); ++i)
            for (int f = 2; f <= mult[i]; ++f) coeff /= f;
        out.add_term(mult, coeff);
        return;
    }
    if (part > remaining) return;
    p_direct_rec(remaining, part + 1, mult, out);
    ++mult[part - 1];
    p_direct_rec(remaining - part, part, mult, out);
    --mult[part - 1];
}

TPoly p_direct(int n, int m_count) {
    TPoly out(m_count);
    TPoly::Exponents mult(m_count, 0);
    p_direct_rec(n, 1, mult, out);
    return out;
}

// Schur function by semistandard-tableau enumeration: rows weakly increase,
// columns strictly increase, entries in 1..N; each tableau contributes the
// product of u over its entries.
Rational schur_tableaux(const Partition& lambda, const std::vector<Rational>& u) {
    const int rows = lambda.rows();
    if (rows == 0) return Rational(1);
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(lambda.part(i + 1), 0);
    Rational total(0);
    auto fill = [&](auto&& self, int i, int j) -> void {
        if (i == rows) {
            Rational prod(1);
            for (const auto& row : t)
                for (int entry : row) prod *= u[entry - 1];
            total += prod;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == static_cast<int>(t[i].size())) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);                                   // row weak
        if (i > 0 && j < static_cast<int>(t[i - 1].size())) lo = std::max(lo, t[i - 1][j] + 1);  // column strict
        for (int entry = lo; entry <= static_cast<int>(u.size()); ++entry) {
            t[i][j] = entry;
            self(self, ni, nj);
        }
        t[i][j] = 0;
    };
    fill(fill, 0, 0);
    return total;
}

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(rational_from_string(x));
    return out;
}

}  // namespace

TEST_CASE("power sums") {
    auto t = power_sums(rationals({"1"}), 3);
    CHECK(t == rationals({"1", "1/2", "1/3"}));
    CHECK(power_sums(rationals({"2", "-2"}), 2) == rationals({"0", "4"}));
    CHECK(power_sums(rationals({"1", "2"}), 2) == rationals({"3", "5/2"}));
}

TEST_CASE("p polynomials") {
    CHECK(p_poly(0, 3) == TPoly::constant(3, Rational(1)));
    CHECK(p_poly(-2, 3).is_zero());
    TPoly expected(3);
    expected.add_term({2, 0, 0}, make_rational(1, 2));
    expected.add_term({0, 1, 0}, Rational(1));
    CHECK(p_poly(2, 3) == expected);  // t_1^2/2 + t_2

    // the recurrence equals the defining multi-index sum
    for (int n = 0; n <= 6; ++n) CHECK(p_poly(n, 6) == p_direct(n, 6));

    // weighted degree is exactly n
    for (int n = 1; n <= 6; ++n) CHECK(p_poly(n, 6).weighted_degree() == n);
}

TEST_CASE("h and e symmetric functions") {
    auto x = rationals({"1", "2"});
    CHECK(h_elem(0, x) == 1);
    CHECK(h_elem(-3, x) == 0);
    CHECK(h_elem(2, x) == 7);  // 1 + 2 + 4
    auto ab = rationals({"5/2", "-3"});
    CHECK(e_elem(2, ab) == make_rational(-15, 2));
    CHECK(e_elem(3, ab) == 0);
    CHECK(e_elem(0, ab) == 1);
}

TEST_CASE("h and e generating functions are reciprocal") {
    std::mt19937_64 gen(5);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<Rational> u;
        for (int i = 0; i < 4; ++i)
            u.push_back(make_rational(1 + static_cast<long>(gen() % 30),
                                      1 + static_cast<long>(gen() % 10)));
        for (int n = 1; n <= 8; ++n) {
            Rational acc(0);
            for (int j = 0; j <= n; ++j) {
                Rational term = h_elem(n - j, u) * e_elem(j, u);
                acc += (j % 2 == 0) ? term : Rational(-term);
            }
            CHECK(acc == 0);  // sum h_k(u) e_j(-u) with k+j=n vanishes
        }
    }
}

TEST_CASE("schur functions") {
    auto u = rationals({"1", "2"});
    CHECK(schur(Partition{}, u) == 1);
    CHECK(schur(Partition({1}), u) == 3);
    CHECK(schur(Partition({2, 1}), u) == 6);  // tableau count: 2 + 4
    CHECK_THROWS_AS(schur(Partition({1, 1, 1}), u), std::domain_error);

    // tableau-enumeration oracle over the N=3 box
    auto u3 = rationals({"2/3", "5", "7/4"});
    for (const Partition& lambda : enumerate_box(3))
        CHECK(schur(lambda, u3) == schur_tableaux(lambda, u3));
}

TEST_CASE("schur is symmetric in the variables") {
    RationalSampler sampler(77);
    std::vector<Rational> u{sampler.positive_rational(), sampler.positive_rational(),
                            sampler.positive_rational(), sampler.positive_rational()};
    Partition lambda({3, 1, 1});
    Rational base = schur(lambda, u);
    for (int rep = 0; rep < 6; ++rep) {
        sampler.shuffle(u);
        CHECK(schur(lambda, u) == base);
    }
}

TEST_CASE("hook polynomials") {
    TPoly t1 = TPoly::variable(4, 1), t2 = TPoly::variable(4, 2);
    CHECK(hmn_poly(0, 0, 4) == t1);
    CHECK(hmn_poly(1, 0, 4) == p_poly(2, 4));
    TPoly half_sq = t1 * t1 * make_rational(1, 2);
    CHECK(hmn_poly(0, 1, 4) == half_sq - t2);
    for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
            CHECK(hmn_poly(m, n, 6).weighted_degree() == m + n + 1);  // hook length
}

TEST_CASE("character polynomials") {
    CHECK(character_poly(Partition{}, 2) == TPoly::constant(2, Rational(1)));
    CHECK(character_poly(Partition({1}), 2) == TPoly::variable(2, 1));
    CHECK(character_poly(Partition({2, 1}), 6) == hmn_poly(1, 1, 6));  // d = 1
}

TEST_CASE("restriction turns character polynomials into Schur functions") {
    CHECK(restrict_to_power_sums(TPoly::constant(3, Rational(2)), rationals({"1"})) == 2);
    auto u = rationals({"3/2", "1/5"});
    CHECK(restrict_to_power_sums(character_poly(Partition({1}), 2), u) == h_elem(1, u));

    RationalSampler sampler(123);
    for (int n = 2; n <= 4; ++n) {
        std::vector<Rational> uu;
        for (int i = 0; i < n; ++i) uu.push_back(sampler.positive_rational());
        const int m_count = n * (n - 1);
        for (const Partition& lambda : enumerate_box(n))
            CHECK(restrict_to_power_sums(character_poly(lambda, m_count), uu) ==
                  schur(lambda, uu));
    }
}
