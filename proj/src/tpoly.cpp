#include <dwpf/tpoly.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dwpf {

bool TPoly::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
    long wa = weighted_degree(a), wb = weighted_degree(b);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

long TPoly::weighted_degree(const Exponents& e) {
    long w = 0;
    for (size_t n = 0; n < e.size(); ++n) w += static_cast<long>(n + 1) * e[n];
    return w;
}

long TPoly::weighted_degree() const {
    if (terms_.empty()) return -1;
    return weighted_degree(terms_.rbegin()->first);
}

TPoly TPoly::constant(int vars, const Rational& c) {
    TPoly p(vars);
    p.add_term(Exponents(vars, 0), c);
    return p;
}

TPoly TPoly::variable(int vars, int n) {
    if (n < 1 || n > vars) throw std::invalid_argument("TPoly::variable: index out of range");
    Exponents e(vars, 0);
    e[n - 1] = 1;
    return monomial(vars, std::move(e), Rational(1));
}

TPoly TPoly::monomial(int vars, Exponents e, const Rational& c) {
    if (static_cast<int>(e.size()) != vars)
        throw std::invalid_argument("TPoly::monomial: exponent length mismatch");
    TPoly p(vars);
    p.add_term(e, c);
    return p;
}

Rational TPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TPoly::constant_term() const {
    return coefficient(Exponents(vars_, 0));
}

void TPoly::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

void TPoly::check_compatible(const TPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("TPoly: mixed variable counts");
}

TPoly& TPoly::operator+=(const TPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TPoly& TPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

TPoly TPoly::operator*(const TPoly& o) const {
    check_compatible(o);
    TPoly out(vars_);
    Exponents e(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < vars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

TPoly TPoly::negate_variables() const {
    TPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        long total = 0;
        for (int x : e) total += x;
        p.terms_.emplace(e, (total % 2 == 0) ? c : -c);
    }
    return p;
}

Rational TPoly::evaluate(std::span<const Rational> values) const {
    if (static_cast<int>(values.size()) < vars_)
        throw std::invalid_argument("TPoly::evaluate: not enough values");
    // power table per variable up to the max exponent seen
    std::vector<int> max_exp(vars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < vars_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<Rational>> pw(vars_);
    for (int i = 0; i < vars_; ++i) {
        pw[i].resize(max_exp[i] + 1, Rational(1));
        for (int k = 1; k <= max_exp[i]; ++k) pw[i][k] = pw[i][k - 1] * values[i];
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < vars_; ++i)
            if (e[i] > 0) term *= pw[i][e[i]];
        acc += term;
    }
    return acc;
}

TPoly divide_exact(const TPoly& a, const TPoly& b) {
    if (b.is_zero()) throw std::domain_error("TPoly: division by zero polynomial");
    if (a.vars() != b.vars()) throw std::invalid_argument("TPoly: mixed variable counts");
    const int vars = a.vars();
    TPoly rem = a, quo(vars);
    const TPoly::Exponents blead_e = b.terms().rbegin()->first;  // leading term, graded lex
    const Rational blead_c = b.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const TPoly::Exponents rlead_e = rem.terms().rbegin()->first;
        const Rational rlead_c = rem.terms().rbegin()->second;
        TPoly::Exponents qe(vars);
        for (int i = 0; i < vars; ++i) {
            qe[i] = rlead_e[i] - blead_e[i];
            if (qe[i] < 0) throw std::domain_error("TPoly: inexact division");
        }
        TPoly qterm = TPoly::monomial(vars, qe, rlead_c / blead_c);
        quo += qterm;
        rem -= qterm * b;
        // each step cancels the leading term, so rem strictly decreases
        if (!rem.is_zero() && !TPoly::TermOrder{}(rem.terms().rbegin()->first, rlead_e))
            throw std::domain_error("TPoly: inexact division");
    }
    return quo;
}

nlohmann::json TPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : terms_)
        arr.push_back({{"exponents", e}, {"coeff", dwpf::to_string(c)}});
    return arr;
}

TPoly TPoly::from_json(const nlohmann::json& j, int vars) {
    TPoly p(vars);
    for (const auto& t : j) {
        Exponents e = t.at("exponents").get<Exponents>();
        if (static_cast<int>(e.size()) != vars)
            throw std::invalid_argument("TPoly::from_json: exponent length mismatch");
        p.add_term(e, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

std::string TPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << dwpf::to_string(c);
        for (int i = 0; i < vars_; ++i) {
            if (e[i] == 0) continue;
            os << "*t" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace dwpf
