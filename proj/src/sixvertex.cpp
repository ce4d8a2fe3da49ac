#include <dwpf/sixvertex.hpp>

#include <dwpf/sampling.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <set>
#include <stdexcept>

namespace dwpf {

namespace {

// Arrow directions: horizontal edges R/L, vertical edges U/D, encoded as
// bools: right = true, up = true.
std::optional<VertexType> classify(bool west_r, bool east_r, bool north_u, bool south_u) {
    int in = (west_r ? 1 : 0) + (east_r ? 0 : 1) + (north_u ? 0 : 1) + (south_u ? 1 : 0);
    if (in != 2) return std::nullopt;
    if (west_r && east_r) return north_u ? VertexType::APlus : VertexType::BPlus;
    if (!west_r && !east_r) return north_u ? VertexType::BMinus : VertexType::AMinus;
    if (west_r && !east_r) return VertexType::CPlus;
    return VertexType::CMinus;
}

}  // namespace

char weight_class(VertexType t) {
    switch (t) {
        case VertexType::APlus:
        case VertexType::AMinus: return 'a';
        case VertexType::BPlus:
        case VertexType::BMinus: return 'b';
        default: return 'c';
    }
}

void RapidityPoint::validate() const {
    if (s.size() != t.size()) throw std::invalid_argument("RapidityPoint: |s| != |t|");
    if (s.empty()) throw std::invalid_argument("RapidityPoint: empty");
    for (const Rational& x : s)
        if (sgn(x) == 0) throw std::domain_error("RapidityPoint: zero s entry");
    for (const Rational& x : t)
        if (sgn(x) == 0) throw std::domain_error("RapidityPoint: zero t entry");
    if (sgn(r) == 0) throw std::domain_error("RapidityPoint: zero r");
}

DWConfiguration::DWConfiguration(int n, std::vector<VertexType> grid)
    : n_(n), grid_(std::move(grid)) {
    if (static_cast<int>(grid_.size()) != n * n)
        throw std::invalid_argument("DWConfiguration: grid size mismatch");
}

std::vector<std::vector<int>> DWConfiguration::asm_matrix() const {
    std::vector<std::vector<int>> m(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            VertexType t = at(i, j);
            if (t == VertexType::CPlus) m[i][j] = 1;
            if (t == VertexType::CMinus) m[i][j] = -1;
        }
    return m;
}

nlohmann::json DWConfiguration::to_json() const {
    return nlohmann::json(asm_matrix());
}

namespace {

// Sweeps a frontier of N horizontal-edge arrows left to right; each column is
// filled top to bottom, branching over the east and south arrows of every
// vertex (at most two admissible continuations each).
struct DwbcEnumerator {
    int n;
    std::vector<DWConfiguration>& out;
    std::vector<VertexType> grid;
    std::vector<bool> west;  // frontier entering the current column
    std::vector<bool> east;

    DwbcEnumerator(int n_, std::vector<DWConfiguration>& out_)
        : n(n_), out(out_), grid(static_cast<size_t>(n_) * n_),
          west(n_, true),  // left boundary: all arrows point right (in)
          east(n_) {}

    void column(int j) { row(j, 0, /*north_u=*/true); }  // top boundary points up

    void row(int j, int i, bool north_u) {
        if (i == n) {
            if (north_u) return;  // bottom boundary must point down
            if (j + 1 == n) {
                for (int k = 0; k < n; ++k)
                    if (east[k]) return;  // right boundary: all arrows point left (in)
                out.emplace_back(n, grid);
                return;
            }
            std::vector<bool> saved_west = west, saved_east = east;
            west = east;
            column(j + 1);
            west = std::move(saved_west);
            east = std::move(saved_east);
            return;
        }
        for (bool east_r : {true, false}) {
            for (bool south_u : {true, false}) {
                auto type = classify(west[i], east_r, north_u, south_u);
                if (!type) continue;
                grid[static_cast<size_t>(i) * n + j] = *type;
                east[i] = east_r;
                row(j, i + 1, south_u);
            }
        }
    }
};

}  // namespace

std::vector<DWConfiguration> enumerate_dwbc(int n) {
    if (n < 1 || n > 7) throw std::domain_error("enumerate_dwbc: practical bound is 1 <= N <= 7");
    std::vector<DWConfiguration> out;
    DwbcEnumerator e(n, out);
    e.column(0);
    return out;
}

Rational vertex_weight(char cls, int i, int j, const RapidityPoint& p) {
    const Rational &si = p.s[i], &tj = p.t[j], &r = p.r;
    if (sgn(si) == 0 || sgn(tj) == 0 || sgn(r) == 0)
        throw std::domain_error("vertex_weight: zero rapidity entry");
    switch (cls) {
        case 'a': return (tj * tj - r * r * si * si) / (2 * r * si * tj);
        case 'b': return (tj * tj - si * si) / (2 * si * tj);
        case 'c': return (1 - r * r) / (2 * r);
        default: throw std::invalid_argument("vertex_weight: class must be a, b or c");
    }
}

Rational z_bruteforce(const RapidityPoint& p) {
    p.validate();
    const int n = p.n();
    Rational total(0);
    for (const DWConfiguration& cfg : enumerate_dwbc(n)) {
        Rational prod(1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) prod *= vertex_weight(weight_class(cfg.at(i, j)), i, j, p);
        total += prod;
    }
    return total;
}

KorepinReport check_korepin(int n, std::uint64_t seed) {
    if (n < 1 || n > 6) throw std::domain_error("check_korepin: need 1 <= N <= 6");
    RationalSampler sampler(seed);
    const RapidityPoint p = sampler.rapidity_point(n);
    const Rational z = z_bruteforce(p);
    KorepinReport rep;

    // 1: symmetric in the s's and in the t's
    rep.symmetry = true;
    for (int k = 0; k < 5; ++k) {
        RapidityPoint ps = p, pt = p;
        sampler.shuffle(ps.s);
        sampler.shuffle(pt.t);
        rep.symmetry = rep.symmetry && z_bruteforce(ps) == z && z_bruteforce(pt) == z;
    }

    // 2: s_1^{N-1} Z_N is a polynomial of degree N-1 in u_1 = s_1^2
    {
        std::vector<std::pair<Rational, Rational>> samples;
        std::set<Rational> nodes;
        while (static_cast<int>(samples.size()) < n + 2) {
            RapidityPoint ps = p;
            ps.s[0] = sampler.positive_rational();
            Rational u1 = ps.u(0);
            if (!nodes.insert(u1).second) continue;
            samples.emplace_back(u1, rational_pow(ps.s[0], n - 1) * z_bruteforce(ps));
        }
        rep.degree = degree_by_interpolation(samples, n - 1);
    }

    // 3: recursion at x_1 = y_1 + mu, i.e. s_1 = t_1 / r
    {
        RapidityPoint pm = p;
        pm.s[0] = p.t[0] / p.r;
        Rational lhs = z_bruteforce(pm);
        Rational rhs = vertex_weight('c', 0, 0, pm);
        for (int i = 1; i < n; ++i) rhs *= vertex_weight('b', i, 0, pm);
        for (int j = 1; j < n; ++j) rhs *= vertex_weight('b', 0, j, pm);
        if (n > 1) {
            RapidityPoint reduced;
            reduced.s.assign(pm.s.begin() + 1, pm.s.end());
            reduced.t.assign(pm.t.begin() + 1, pm.t.end());
            reduced.r = pm.r;
            rhs *= z_bruteforce(reduced);
        }
        rep.recursion = lhs == rhs;
    }

    // 4: Z_1 = sinh(mu) = (1 - r^2) / (2r)
    {
        RapidityPoint p1;
        p1.s = {p.s[0]};
        p1.t = {p.t[0]};
        p1.r = p.r;
        rep.base = z_bruteforce(p1) == (1 - p.r * p.r) / (2 * p.r);
    }
    return rep;
}

}  // namespace dwpf
