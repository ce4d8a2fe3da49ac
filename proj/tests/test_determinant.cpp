#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dwpf/determinant.hpp>
#include <dwpf/sampling.hpp>
#include <dwpf/symmetric.hpp>

#include <nlohmann/json.hpp>

using namespace dwpf;

namespace {

RapidityPoint point(std::initializer_list<const char*> s, std::initializer_list<const char*> t,
                    const char* r) {
    RapidityPoint p;
    for (const char* x : s) p.s.push_back(rational_from_string(x));
    for (const char* x : t) p.t.push_back(rational_from_string(x));
    p.r = rational_from_string(r);
    return p;
}

}  // namespace

TEST_CASE("q_integer expands the monomial sum") {
    const Rational q = make_rational(3, 5);
    CHECK(q_integer(4, 1, q) == (rational_pow(q, 4) - q) / (q - 1));
    CHECK(q_integer(1, 3, q) == (q - rational_pow(q, 3)) / (q - 1));
    CHECK(q_integer(2, 2, q) == 0);
    CHECK(q_integer(-1, 2, q) == (rational_pow(q, -1) - q * q) / (q - 1));
    // regular at q = 1: (q^m - q^k)/(q-1) -> m - k
    CHECK(q_integer(5, 2, Rational(1)) == 3);
    CHECK(q_integer(2, 5, Rational(1)) == -3);
}

TEST_CASE("c prefactor") {
    auto p1 = point({"1"}, {"1"}, "1/2");
    CHECK(c_prefactor(p1) == make_rational(-3, 4));
    auto p2 = point({"2", "3"}, {"5", "7"}, "1/3");
    Rational q = p2.q();
    CHECK(c_prefactor(p2) == (q - 1) * (q - 1) * Rational(2 * 3 * 5 * 7));
}

TEST_CASE("izergin at N=1 collapses to the prefactor") {
    auto p = point({"3/2"}, {"5/7"}, "2/3");
    CHECK(z_izergin(p) == c_prefactor(p));
}

TEST_CASE("izergin rejects singular points by name") {
    auto same_u = point({"2", "2"}, {"3", "5"}, "1/2");
    CHECK_THROWS_WITH_AS(z_izergin(same_u), "z_izergin: u_1 = u_2", SingularPointError);
    auto pole = point({"3"}, {"3"}, "1/2");
    CHECK_THROWS_WITH_AS(z_izergin(pole), "z_izergin: u_1 = v_1", SingularPointError);
    auto qpole = point({"2"}, {"1"}, "1/2");  // q u = 1/4 * 4 = 1 = v
    CHECK_THROWS_WITH_AS(z_izergin(qpole), "z_izergin: q*u_1 = v_1", SingularPointError);
}

TEST_CASE("izergin is symmetric in the u variables") {
    RationalSampler sampler(91);
    RapidityPoint p = sampler.rapidity_point(3);
    Rational base = z_izergin(p);
    std::swap(p.s[0], p.s[2]);
    CHECK(z_izergin(p) == base);
}

TEST_CASE("kappa bridges brute force and izergin") {
    auto p1 = point({"4/3"}, {"7/5"}, "5/9");
    CHECK(normalization_kappa(p1) == Rational(-1) / (2 * p1.r * p1.s[0] * p1.t[0]));
    RationalSampler sampler(19);
    for (int n = 1; n <= 3; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            RapidityPoint p = sampler.rapidity_point(n);
            CHECK(normalization_kappa(p) == kappa_closed_form(p));
        }
}

TEST_CASE("lascoux equals izergin") {
    RationalSampler sampler(23);
    for (int n = 1; n <= 4; ++n) {
        RapidityPoint p = sampler.rapidity_point(n);
        CHECK(z_lascoux(p) == z_izergin(p));
    }
}

TEST_CASE("lascoux tolerates coinciding u variables") {
    auto p = point({"3/2", "3/2", "4"}, {"5", "6", "7"}, "1/2");
    // izergin refuses, lascoux still matches the configuration sum
    CHECK_THROWS_AS(z_izergin(p), SingularPointError);
    CHECK(kappa_closed_form(p) * z_lascoux(p) == z_bruteforce(p));
}

TEST_CASE("lascoux is polynomial in q and regular at q = 1") {
    // fixed (u, v); z_lascoux as a function of q is a polynomial of degree
    // at most N + N(2N-2) = 2N^2 - N, and the q-integer form evaluates
    // without division at q = 1
    auto base = point({"3", "5/2"}, {"7/3", "11/6"}, "1");
    const int degree = 2 * 2 * 2 - 2;  // N = 2
    std::vector<std::pair<Rational, Rational>> samples;
    for (const char* r : {"1/2", "1/3", "2/3", "1/5", "2/5", "3/5", "4/5", "1/7", "2/7"}) {
        RapidityPoint p = base;
        p.r = rational_from_string(r);
        samples.emplace_back(p.q(), z_izergin(p));
    }
    // q = 1 lies on the same polynomial, evaluated through the Lascoux form
    samples.emplace_back(Rational(1), z_lascoux(base));
    CHECK(degree_by_interpolation(samples, degree));
    CHECK(kappa_closed_form(base) * z_lascoux(base) == z_bruteforce(base));
}

TEST_CASE("coefficients c_lambda") {
    std::vector<Rational> v1{make_rational(9, 4)};
    CHECK(c_lambda(Partition{}, v1, make_rational(1, 4), 1) == 1);

    RationalSampler sampler(29);
    RapidityPoint p = sampler.rapidity_point(3);
    CHECK_THROWS_AS(CoefficientTable::for_point(p).c(Partition({3})), std::domain_error);
    std::vector<Rational> v;
    for (int j = 0; j < 3; ++j) v.push_back(p.v(j));
    CHECK_THROWS_AS(c_lambda(Partition({3}), v, p.q(), 3), std::domain_error);
}

TEST_CASE("the N=3 coefficient table satisfies the three quadratic relations") {
    RationalSampler sampler(37);
    CoefficientTable table = CoefficientTable::for_point(sampler.rapidity_point(3));
    auto d = [&](std::initializer_list<int> parts) { return table.d(Partition(parts)); };
    CHECK(d({}) == 1);
    CHECK(d({1, 1}) * d({2}) - d({1}) * d({2, 1}) == -d({2, 2}));
    CHECK(d({1}) * d({2, 1, 1}) - d({1, 1, 1}) * d({2}) == d({2, 2, 1}));
    CHECK(d({1, 1, 1}) * d({2, 1}) - d({1, 1}) * d({2, 1, 1}) == -d({2, 2, 2}));
}

TEST_CASE("schur expansion equals lascoux") {
    RationalSampler sampler(41);
    for (int n = 1; n <= 4; ++n) {
        RapidityPoint p = sampler.rapidity_point(n);
        CHECK(z_schur_expansion(p) == z_lascoux(p));
    }
}

TEST_CASE("z_free structure at small N") {
    std::vector<Rational> v1{make_rational(5, 2)};
    CHECK(z_free(1, v1, make_rational(4, 9)) == TPoly::constant(0, Rational(1)));

    RationalSampler sampler(43);
    RapidityPoint p = sampler.rapidity_point(2);
    std::vector<Rational> v{p.v(0), p.v(1)};
    CoefficientTable table(2, v, p.q());
    TPoly t1 = TPoly::variable(2, 1), t2 = TPoly::variable(2, 2);
    TPoly expected = TPoly::constant(2, table.c_phi()) + t1 * table.c(Partition({1})) +
                     (t1 * t1 * make_rational(1, 2) - t2) * table.c(Partition({1, 1}));
    CHECK(z_free(2, v, p.q()) == expected);
}

TEST_CASE("restricting z_free recovers the schur expansion") {
    RationalSampler sampler(47);
    for (int n = 2; n <= 4; ++n) {
        RapidityPoint p = sampler.rapidity_point(n);
        std::vector<Rational> u, v;
        for (int i = 0; i < n; ++i) u.push_back(p.u(i));
        for (int j = 0; j < n; ++j) v.push_back(p.v(j));
        Rational restricted = restrict_to_power_sums(z_free(n, v, p.q()), u);
        CHECK(c_prefactor(p) * restricted == z_schur_expansion(p));
    }
}

TEST_CASE("four way agreement with the configuration sum") {
    RationalSampler sampler(53);
    for (int n = 1; n <= 5; ++n) {
        const int points = n <= 4 ? 2 : 1;  // the n=5 tau polynomial is the slow leg
        for (int k = 0; k < points; ++k) {
            RapidityPoint p = sampler.rapidity_point(n);
            const Rational z = z_bruteforce(p);
            const Rational kappa = kappa_closed_form(p);
            CHECK(z == kappa * z_izergin(p));
            CHECK(z == kappa * z_lascoux(p));
            CHECK(z == kappa * z_schur_expansion(p));
            std::vector<Rational> u, v;
            for (int i = 0; i < n; ++i) u.push_back(p.u(i));
            for (int j = 0; j < n; ++j) v.push_back(p.v(j));
            CHECK(z == kappa * c_prefactor(p) *
                           restrict_to_power_sums(z_free(n, v, p.q()), u));
        }
    }
}

TEST_CASE("coefficient table exports as json") {
    RationalSampler sampler(59);
    CoefficientTable table = CoefficientTable::for_point(sampler.rapidity_point(2));
    nlohmann::json j = table.to_json();
    CHECK(j.size() == 3);
    CHECK(j.contains("[]"));
    CHECK(j.contains("[1]"));
    CHECK(j.contains("[1,1]"));
    CHECK(rational_from_string(j["[]"].get<std::string>()) == table.c_phi());
}
