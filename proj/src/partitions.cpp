#include <dwpf/partitions.hpp>

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace dwpf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("Partition::part: index is 1-based");
    return i <= rows() ? parts_[i - 1] : 0;
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

int Partition::diagonal_cells() const {
    int d = 0;
    while (d < rows() && parts_[d] >= d + 1) ++d;
    return d;
}

bool Partition::fits_in_box(int max_rows, int max_part) const {
    return rows() <= max_rows && (parts_.empty() || parts_[0] <= max_part);
}

nlohmann::json Partition::to_json() const {
    return nlohmann::json(parts_);
}

Partition Partition::from_json(const nlohmann::json& j) {
    return Partition(j.get<std::vector<int>>());
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ']';
    return os.str();
}

FrobeniusData frobenius(const Partition& lambda) {
    FrobeniusData f;
    f.d = lambda.diagonal_cells();
    const Partition conj = lambda.conjugate();
    for (int i = 1; i <= f.d; ++i) {
        f.m.push_back(lambda.part(i) - i);
        f.n.push_back(conj.part(i) - i);
    }
    return f;
}

HookData hook_data(const Partition& lambda, int row, int col) {
    if (row < 1 || col < 1 || row > lambda.rows() || col > lambda.part(row))
        throw std::out_of_range("hook_data: cell outside the diagram");
    HookData h;
    h.row = row;
    h.col = col;
    h.a_len = lambda.part(row) - col;
    h.b_len = lambda.conjugate().part(col) - row + 1;
    return h;
}

Partition hook_partition(int a, int b) {
    if (a < 0 || b < 1) throw std::domain_error("hook_partition: need a >= 0, b >= 1");
    std::vector<int> parts{a + 1};
    parts.insert(parts.end(), b - 1, 1);
    return Partition(std::move(parts));
}

Partition partition_from_hooks(std::span<const int> a_parts, std::span<const int> b_parts) {
    const int k = static_cast<int>(a_parts.size());
    if (static_cast<int>(b_parts.size()) != k)
        throw std::invalid_argument("partition_from_hooks: length mismatch");
    for (int i = 0; i < k; ++i) {
        if (a_parts[i] < 0 || b_parts[i] < 1)
            throw std::domain_error("partition_from_hooks: need a >= 0, b >= 1");
        if (i > 0 && (a_parts[i] >= a_parts[i - 1] || b_parts[i] >= b_parts[i - 1]))
            throw std::domain_error("partition_from_hooks: lists must be strictly decreasing");
    }
    if (k == 0) return {};
    // rows 1..k come from the arms; rows beyond k from the legs, via the
    // conjugate relation lambda'_j = b_j + j - 1 for j = 1..k
    std::vector<int> parts;
    for (int i = 1; i <= k; ++i) parts.push_back(a_parts[i - 1] + i);
    const int max_rows = b_parts[0];  // lambda'_1 = b_1 rows in total
    for (int i = k + 1; i <= max_rows; ++i) {
        int row_len = 0;
        for (int j = 1; j <= k; ++j)
            if (b_parts[j - 1] + j - 1 >= i) ++row_len;
        parts.push_back(row_len);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_box(int n) {
    if (n < 1) throw std::domain_error("enumerate_box: need N >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending lexicographic on parts; zero tails are emitted once per
    // prefix rather than recursed into, which keeps entries unique
    auto rec = [&](auto&& self, int max_part, int slots) -> void {
        if (slots > 0) {
            for (int p = max_part; p >= 1; --p) {
                cur.push_back(p);
                self(self, p, slots - 1);
                cur.pop_back();
            }
        }
        out.emplace_back(cur);
    };
    rec(rec, n - 1, n);
    return out;
}

}  // namespace dwpf
