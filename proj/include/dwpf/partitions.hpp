#pragma once

// Partition combinatorics: hooks, a/b-part decompositions, Frobenius
// coordinates, and enumeration of partitions inside a rectangular box.
//
// A hook with corner (i,j) splits into a horizontal a-part (the cells
// strictly right of the corner) and a vertical b-part (the corner plus the
// cells below), so a-part lengths start at 0 and b-part lengths at 1.

#include <nlohmann/json_fwd.hpp>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace dwpf {

class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    // Validates weak decrease; trailing zeros are stripped (the canonical
    // internal form), box membership takes the box size explicitly.
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;  // 1-indexed; 0 beyond the last row
    long weight() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    int diagonal_cells() const;  // d = max { i : lambda_i >= i }
    bool fits_in_box(int max_rows, int max_part) const;

    auto operator<=>(const Partition&) const = default;

    nlohmann::json to_json() const;
    static Partition from_json(const nlohmann::json& j);
    std::string to_string() const;  // "[4,3,3,2]", "[]" for the empty partition

  private:
    std::vector<int> parts_;
};

struct FrobeniusData {
    std::vector<int> m;  // arm lengths of the d diagonal hooks, strictly decreasing
    std::vector<int> n;  // leg lengths below the diagonal, strictly decreasing
    int d = 0;
};

struct HookData {
    int row = 0, col = 0;  // corner cell, 1-indexed
    int a_len = 0;         // cells strictly right of the corner
    int b_len = 0;         // corner plus cells below, so always >= 1
};

// Frobenius coordinates: m_i = lambda_i - i, n_i = lambda'_i - i for i = 1..d.
FrobeniusData frobenius(const Partition& lambda);

// Hook through cell (i,j); the cell must lie inside the diagram.
HookData hook_data(const Partition& lambda, int row, int col);

// The single-hook partition [a+1, 1^{b-1}] with arm a >= 0 and leg b >= 1.
Partition hook_partition(int a, int b);

// Rebuilds the partition whose diagonal hooks have arms a_1 > ... > a_k >= 0
// and b-parts b_1 > ... > b_k >= 1; inverse of frobenius via a_i = m_i,
// b_i = n_i + 1.
Partition partition_from_hooks(std::span<const int> a_parts, std::span<const int> b_parts);

// All partitions contained in the (N-1)^N box (at most N parts, each at most
// N-1), in descending lexicographic order. Count is binomial(2N-1, N).
std::vector<Partition> enumerate_box(int n);

}  // namespace dwpf
