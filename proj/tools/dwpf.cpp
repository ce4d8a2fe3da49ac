// Command-line front end: compute Z_N by any route, run the verification
// suites, or benchmark. Exact values only; "p/q" everywhere.

#include <dwpf/cli.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

int emit(const dwpf::CommandResult& res) {
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domain-wall partition functions, exactly"};
    app.require_subcommand(1);

    dwpf::RunConfig config;
    std::string s_list, t_list, r_text;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", config.seed, "PRNG seed for random rational points");
        cmd->add_option("--format", config.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* z = app.add_subcommand("z", "compute Z_N by one method");
    z->add_option("--n", config.n, "lattice size")->required();
    z->add_option("--method", config.method, "brute, izergin, lascoux, schur, free-restricted, fermionic")
        ->required()
        ->check(CLI::IsMember({"brute", "izergin", "lascoux", "schur", "free-restricted", "fermionic"}));
    z->add_option("--s", s_list, "comma-separated rationals, one per row");
    z->add_option("--t", t_list, "comma-separated rationals, one per column");
    z->add_option("--r", r_text, "rational r = e^{-mu}");
    z->add_flag("--export-tau", config.export_tau, "embed the free tau polynomial");
    z->add_flag("--export-coefficients", config.export_coefficients,
                "embed the c_lambda table at this point");
    add_common(z);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--n", config.n, "lattice size")->required();
    verify->add_option("--suite,--identity", config.suite,
                       "korepin, boson-fermion, plucker, main, all")
        ->required();
    add_common(verify);

    CLI::App* bench = app.add_subcommand("bench", "wall-clock table per method per N");
    bench->add_option("--max-n", config.max_n, "largest N to time (per-method caps apply)");
    add_common(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (z->parsed()) {
            if (!s_list.empty() || !t_list.empty() || !r_text.empty()) {
                if (s_list.empty() || t_list.empty() || r_text.empty()) {
                    std::cerr << "usage error: --s, --t and --r must be given together\n";
                    return 2;
                }
                dwpf::RapidityPoint p;
                p.s = dwpf::parse_rational_list(s_list);
                p.t = dwpf::parse_rational_list(t_list);
                p.r = dwpf::rational_from_string(r_text);
                config.point = std::move(p);
            }
            return emit(dwpf::cmd_z(config));
        }
        if (verify->parsed()) return emit(dwpf::cmd_verify(config));
        return emit(dwpf::cmd_bench(config));
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
