#pragma once

// Exact determinants and polynomial-degree testing by interpolation.
//
// Rational matrices go through ordinary Gaussian elimination (exact over a
// field). Polynomial matrices use fraction-free Bareiss elimination, whose
// intermediate divisions are always exact, with cofactor expansion below
// size 4 where no division is needed at all.

#include <dwpf/rational.hpp>
#include <dwpf/tpoly.hpp>

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dwpf {

template <class T>
class ExactMatrix {
  public:
    ExactMatrix(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("ExactMatrix: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  private:
    int rows_, cols_;
    std::vector<T> data_;
};

Rational det_exact(const ExactMatrix<Rational>& m);
TPoly det_exact(const ExactMatrix<TPoly>& m);

// True iff the unique interpolant of degree <= claimed_degree through the
// first claimed_degree+1 samples reproduces every remaining sample exactly.
// Requires claimed_degree + 2 samples or more, at pairwise-distinct nodes.
bool degree_by_interpolation(std::span<const std::pair<Rational, Rational>> samples,
                             int claimed_degree);

}  // namespace dwpf
