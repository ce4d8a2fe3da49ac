#include <dwpf/cli.hpp>

#include <dwpf/determinant.hpp>
#include <dwpf/fock.hpp>
#include <dwpf/sampling.hpp>
#include <dwpf/symmetric.hpp>
#include <dwpf/verify.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <iomanip>
#include <sstream>

namespace dwpf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json point_json(const RapidityPoint& p) {
    nlohmann::json s = nlohmann::json::array(), t = nlohmann::json::array();
    for (const Rational& x : p.s) s.push_back(to_string(x));
    for (const Rational& x : p.t) t.push_back(to_string(x));
    return {{"s", s}, {"t", t}, {"r", to_string(p.r)}};
}

struct MethodValue {
    Rational value;            // the raw value of the chosen route
    Rational z_sinh;           // kappa-normalized (identity for brute force)
    std::optional<TPoly> tau;  // the free tau polynomial, for the free routes
};

MethodValue evaluate_method(const std::string& method, const RapidityPoint& p,
                            bool want_tau = false) {
    if (method == "brute") {
        Rational z = z_bruteforce(p);
        return {z, z, std::nullopt};
    }
    const Rational kappa = kappa_closed_form(p);
    if (method == "izergin") {
        Rational z = z_izergin(p);
        return {z, kappa * z, std::nullopt};
    }
    if (method == "lascoux") {
        Rational z = z_lascoux(p);
        return {z, kappa * z, std::nullopt};
    }
    if (method == "schur") {
        Rational z = z_schur_expansion(p);
        return {z, kappa * z, std::nullopt};
    }
    std::vector<Rational> u, v;
    for (int i = 0; i < p.n(); ++i) u.push_back(p.u(i));
    for (int j = 0; j < p.n(); ++j) v.push_back(p.v(j));
    if (method == "free-restricted") {
        TPoly tau = z_free(p.n(), v, p.q());
        Rational z = c_prefactor(p) * restrict_to_power_sums(tau, u);
        return {z, kappa * z, want_tau ? std::optional<TPoly>(std::move(tau)) : std::nullopt};
    }
    if (method == "fermionic") {
        CoefficientTable table(p.n(), v, p.q());
        TPoly f = f_free(p.n(), table, p.n() * (p.n() - 1));
        Rational z = c_prefactor(p) * table.c_phi() * restrict_to_power_sums(f, u);
        return {z, kappa * z, want_tau ? std::optional<TPoly>(std::move(f)) : std::nullopt};
    }
    throw std::invalid_argument("unknown method '" + method + "'");
}

int method_max_n(const std::string& method) {
    if (method == "brute") return 7;
    if (method == "izergin" || method == "lascoux") return 10;
    if (method == "schur") return 7;
    return 5;  // symbolic character polynomials stay desk-sized
}

CommandResult usage_error(const std::string& message) {
    return {2, "", "usage error: " + message + "\n"};
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rational_from_string(item));
    return out;
}

CommandResult cmd_z(const RunConfig& config) {
    if (config.n < 1) return usage_error("--n must be at least 1");
    if (config.n > method_max_n(config.method))
        return usage_error("--method " + config.method + " supports n <= " +
                           std::to_string(method_max_n(config.method)));
    RapidityPoint p;
    if (config.point) {
        p = *config.point;
        if (p.n() != config.n || static_cast<int>(p.t.size()) != config.n)
            return usage_error("--s and --t must each carry n entries");
    } else {
        p = RationalSampler(config.seed).rapidity_point(config.n);
    }
    try {
        p.validate();
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }

    if (config.export_tau && config.method != "free-restricted" && config.method != "fermionic")
        return usage_error("--export-tau needs --method free-restricted or fermionic");

    const auto start = Clock::now();
    MethodValue result;
    try {
        result = evaluate_method(config.method, p, config.export_tau);
    } catch (const SingularPointError& e) {
        return {1, "", std::string(e.what()) + "\n"};
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }

    CommandResult res;
    std::ostringstream err;
    err << "elapsed_ms " << ms_since(start) << "\n";
    res.err = err.str();
    std::optional<nlohmann::json> coefficients;
    if (config.export_coefficients)
        coefficients = CoefficientTable::for_point(p).to_json();
    if (config.format == "json") {
        nlohmann::json j{{"method", config.method},
                         {"n", config.n},
                         {"point", point_json(p)},
                         {"value", to_string(result.value)},
                         {"z_sinh", to_string(result.z_sinh)}};
        if (!config.point) j["seed"] = config.seed;
        if (result.tau) j["tau"] = result.tau->to_json();
        if (coefficients) j["coefficients"] = *coefficients;
        res.out = j.dump() + "\n";
    } else {
        std::ostringstream os;
        os << "value = " << to_string(result.value) << "\n";
        os << "z_sinh = " << to_string(result.z_sinh) << "\n";
        if (result.tau) os << "tau = " << result.tau->to_json().dump() << "\n";
        if (coefficients) os << "coefficients = " << coefficients->dump() << "\n";
        res.out = os.str();
    }
    return res;
}

CommandResult cmd_verify(const RunConfig& config) {
    if (config.n < 1) return usage_error("--n must be at least 1");
    std::vector<SuiteReport> reports;
    try {
        reports = run_suites(config.suite, config.n, config.seed);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    }
    bool all = true;
    for (const SuiteReport& r : reports) all = all && r.all_pass();

    CommandResult res;
    res.exit_code = all ? 0 : 1;
    if (config.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const SuiteReport& r : reports) arr.push_back(r.to_json());
        res.out = arr.dump() + "\n";
    } else {
        std::ostringstream os;
        for (const SuiteReport& r : reports) os << r.to_text();
        os << (all ? "all checks passed" : "some checks FAILED") << "\n";
        res.out = os.str();
    }
    return res;
}

CommandResult cmd_bench(const RunConfig& config) {
    const std::vector<std::string> methods{"brute",  "izergin",        "lascoux",
                                           "schur",  "free-restricted", "fermionic"};
    std::ostringstream os;
    nlohmann::json rows = nlohmann::json::array();
    const bool json = config.format == "json";
    if (!json) os << "method            n  configs      ms\n";
    for (const std::string& method : methods) {
        const int cap = std::min(config.max_n, method_max_n(method));
        for (int n = 1; n <= cap; ++n) {
            RapidityPoint p = RationalSampler(config.seed).rapidity_point(n);
            const auto start = Clock::now();
            MethodValue value = evaluate_method(method, p);
            double ms = ms_since(start);
            std::string configs = method == "brute"
                                      ? std::to_string(enumerate_dwbc(n).size())
                                      : std::string("-");
            if (json) {
                // timings vary run to run, so the JSON report carries only
                // the reproducible columns
                rows.push_back({{"method", method},
                                {"n", n},
                                {"configs", configs},
                                {"value", to_string(value.value)}});
            } else {
                os << std::left << std::setw(17) << method << " " << std::setw(2) << n << " "
                   << std::setw(12) << configs << " " << ms << "\n";
            }
        }
    }
    if (json) return {0, rows.dump() + "\n", ""};
    return {0, os.str(), ""};
}

}  // namespace dwpf
