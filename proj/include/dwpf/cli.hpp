#pragma once

// Command implementations behind the `dwpf` tool. They return the exact
// stdout payload as a string so determinism is testable in-process; wall
// clock goes to the stderr channel only.

#include <dwpf/sixvertex.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace dwpf {

struct RunConfig {
    int n = 0;
    std::string method;   // z: brute | izergin | lascoux | schur | free-restricted | fermionic
    std::string suite;    // verify: korepin | boson-fermion | plucker | main | all
    std::uint64_t seed = 1;
    std::optional<RapidityPoint> point;  // explicit rapidities override the seed
    std::string format = "text";         // text | json
    int max_n = 8;                       // bench cap
    bool export_tau = false;             // z: embed the tau polynomial (free routes)
    bool export_coefficients = false;    // z: embed the c_lambda table
};

struct CommandResult {
    int exit_code = 0;  // 0 pass, 1 fail, 2 usage
    std::string out;    // stdout payload; deterministic for fixed (command, seed)
    std::string err;    // stderr payload; may carry timings
};

CommandResult cmd_z(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_bench(const RunConfig& config);

// "1,2,3/4" -> rationals; used for --s and --t.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace dwpf
