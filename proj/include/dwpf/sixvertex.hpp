#pragma once

// Brute-force ground truth for the domain-wall partition function: enumerate
// every arrow configuration compatible with domain-wall boundaries, weight it
// vertex by vertex, and sum.
//
// Conventions. Rows are counted from the top, columns from the left. Arrows
// on horizontal edges point R(ight) or L(eft); on vertical edges U(p) or
// D(own). Domain walls: left and right boundary arrows point inward, top and
// bottom outward. A vertex is admissible when exactly two of its four arrows
// point into it.
//
// The weights are parametrized by square roots: s_i = e^{x_i}, t_j = e^{y_j},
// r = e^{-mu}, so that every sinh weight is rational in (s, t, r):
//   w^a_ij = sinh(-x_i + y_j + mu) = (t_j^2 - r^2 s_i^2) / (2 r s_i t_j)
//   w^b_ij = sinh(-x_i + y_j)      = (t_j^2 - s_i^2) / (2 s_i t_j)
//   w^c    = sinh(mu)              = (1 - r^2) / (2 r)
// The derived spectral variables are u_i = s_i^2, v_j = t_j^2, q = r^2.

#include <dwpf/exact_linalg.hpp>
#include <dwpf/rational.hpp>

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <vector>

namespace dwpf {

struct RapidityPoint {
    std::vector<Rational> s;  // e^{x_i}, one per row
    std::vector<Rational> t;  // e^{y_j}, one per column
    Rational r;               // e^{-mu}

    int n() const { return static_cast<int>(s.size()); }
    Rational u(int i) const { return s[i] * s[i]; }  // 0-indexed
    Rational v(int j) const { return t[j] * t[j]; }
    Rational q() const { return r * r; }

    // Throws if any entry is zero or the row/column counts differ.
    void validate() const;
};

// The six admissible vertices. A-types carry the horizontal and vertical
// flows aligned (both along or both against the line orientations), B-types
// mixed, C-types are the horizontal-in/vertical-out source and its reverse.
enum class VertexType : std::uint8_t {
    APlus,   // (R,R,U,U)
    AMinus,  // (L,L,D,D)
    BPlus,   // (R,R,D,D)
    BMinus,  // (L,L,U,U)
    CPlus,   // (R,L,U,D)  -> +1 in the alternating-sign matrix
    CMinus,  // (L,R,D,U)  -> -1
};

// 'a', 'b' or 'c'.
char weight_class(VertexType t);

class DWConfiguration {
  public:
    DWConfiguration(int n, std::vector<VertexType> grid);

    int n() const { return n_; }
    VertexType at(int i, int j) const { return grid_[static_cast<size_t>(i) * n_ + j]; }

    // Alternating-sign matrix: +1 at CPlus, -1 at CMinus, 0 elsewhere.
    std::vector<std::vector<int>> asm_matrix() const;
    nlohmann::json to_json() const;  // the ASM entries

  private:
    int n_;
    std::vector<VertexType> grid_;
};

// Every configuration with domain-wall boundaries, each exactly once, found
// by sweeping a column frontier of horizontal-edge states left to right.
// Practical bound 1 <= n <= 7.
std::vector<DWConfiguration> enumerate_dwbc(int n);

// Weight of one vertex of the given class at row i, column j (0-indexed).
Rational vertex_weight(char cls, int i, int j, const RapidityPoint& p);

// Z_N = sum over configurations of the product of vertex weights.
Rational z_bruteforce(const RapidityPoint& p);

struct KorepinReport {
    bool symmetry = false;   // invariance under permutations of s and of t
    bool degree = false;     // s_1^{N-1} Z_N has degree N-1 in u_1
    bool recursion = false;  // Z_N at s_1 = t_1/r factors through Z_{N-1}
    bool base = false;       // Z_1 = (1 - r^2) / (2r)
    bool all() const { return symmetry && degree && recursion && base; }
};

// Checks the four conditions that determine Z_N, at seeded random rational
// points. N <= 6.
KorepinReport check_korepin(int n, std::uint64_t seed);

}  // namespace dwpf
