#include <dwpf/exact_linalg.hpp>

#include <algorithm>
#include <set>

namespace dwpf {

namespace {

void require_square(int rows, int cols) {
    if (rows != cols) throw std::invalid_argument("det_exact: matrix is not square");
}

template <class T>
T det_cofactor(const ExactMatrix<T>& m, const T& zero) {
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    // expand along the first row
    T acc = zero;
    for (int j = 0; j < n; ++j) {
        ExactMatrix<T> sub(n - 1, n - 1, zero);
        for (int i = 1; i < n; ++i) {
            int cj = 0;
            for (int k = 0; k < n; ++k) {
                if (k == j) continue;
                sub.at(i - 1, cj++) = m.at(i, k);
            }
        }
        T term = m.at(0, j) * det_cofactor(sub, zero);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace

Rational det_exact(const ExactMatrix<Rational>& m) {
    require_square(m.rows(), m.cols());
    const int n = m.rows();
    ExactMatrix<Rational> a = m;
    int sign = 1;
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (sgn(a.at(i, k)) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        det *= a.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (sgn(a.at(i, k)) == 0) continue;
            Rational f = a.at(i, k) / a.at(k, k);
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return sign > 0 ? det : Rational(-det);
}

TPoly det_exact(const ExactMatrix<TPoly>& m) {
    require_square(m.rows(), m.cols());
    const int n = m.rows();
    const int vars = m.at(0, 0).vars();
    const TPoly zero(vars);
    if (n < 4) return det_cofactor(m, zero);

    // Bareiss: every division by the previous pivot is exact.
    ExactMatrix<TPoly> a = m;
    int sign = 1;
    TPoly prev = TPoly::constant(vars, Rational(1));
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (!a.at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return zero;
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) =
                    divide_exact(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
            a.at(i, k) = zero;
        }
        prev = a.at(k, k);
    }
    TPoly det = a.at(n - 1, n - 1);
    return sign > 0 ? det : -det;
}

bool degree_by_interpolation(std::span<const std::pair<Rational, Rational>> samples,
                             int claimed_degree) {
    if (claimed_degree < 0) throw std::invalid_argument("degree_by_interpolation: negative degree");
    const int d = claimed_degree;
    if (static_cast<int>(samples.size()) < d + 2)
        throw std::invalid_argument("degree_by_interpolation: need at least claimed_degree + 2 samples");
    {
        std::set<Rational> nodes;
        for (const auto& [x, y] : samples)
            if (!nodes.insert(x).second)
                throw std::invalid_argument("degree_by_interpolation: duplicate node " +
                                            to_string(x));
    }
    // Newton divided differences on the first d+1 samples
    std::vector<Rational> coef(d + 1);
    for (int i = 0; i <= d; ++i) coef[i] = samples[i].second;
    for (int level = 1; level <= d; ++level)
        for (int i = d; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (samples[i].first - samples[i - level].first);
    auto eval = [&](const Rational& x) {
        Rational acc = coef[d];
        for (int i = d - 1; i >= 0; --i) acc = acc * (x - samples[i].first) + coef[i];
        return acc;
    };
    for (size_t i = d + 1; i < samples.size(); ++i)
        if (eval(samples[i].first) != samples[i].second) return false;
    return true;
}

}  // namespace dwpf
