#include "symlab/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace symlab {

Mat cholesky(const Mat& a) {
    const int n = a.rows();
    Mat l(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            if (i == j) {
                if (s <= 0.0) throw std::domain_error("cholesky: matrix not positive definite");
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

Vec solve_lower(const Mat& l, const Vec& b) {
    const int n = l.rows();
    Vec x(n);
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= l(i, k) * x[k];
        x[i] = s / l(i, i);
    }
    return x;
}

Vec solve_lower_transpose(const Mat& l, const Vec& b) {
    const int n = l.rows();
    Vec x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k < n; ++k) s -= l(k, i) * x[k];
        x[i] = s / l(i, i);
    }
    return x;
}

Vec sym_eigenvalues(Mat a, Mat* eigenvectors) {
    const int n = a.rows();
    Mat v = Mat::identity(n);
    const double scale = std::max(a.max_abs(), 1e-300);

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (std::sqrt(off) <= 1e-15 * scale) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-18 * scale) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    // Sort ascending, permuting eigenvectors alongside.
    std::array<int, Vec::cap> order{};
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.begin() + n,
              [&](int i, int j) { return a(i, i) < a(j, j); });
    Vec values(n);
    Mat sorted(n, n);
    for (int i = 0; i < n; ++i) {
        values[i] = a(order[i], order[i]);
        for (int k = 0; k < n; ++k) sorted(k, i) = v(k, order[i]);
    }
    if (eigenvectors) *eigenvectors = sorted;
    return values;
}

Vec generalized_sym_eigenvalues(const Mat& a, const Mat& b) {
    const int n = a.rows();
    const Mat l = cholesky(b);
    // C = L^{-1} A L^{-T}, assembled column by column.
    Mat c(n, n);
    for (int j = 0; j < n; ++j) {
        Vec col(n);
        for (int i = 0; i < n; ++i) col[i] = a(i, j);
        Vec y = solve_lower(l, col);
        for (int i = 0; i < n; ++i) c(i, j) = y[i];
    }
    Mat ct = c.transpose();
    for (int j = 0; j < n; ++j) {
        Vec col(n);
        for (int i = 0; i < n; ++i) col[i] = ct(i, j);
        Vec y = solve_lower(l, col);
        for (int i = 0; i < n; ++i) c(i, j) = y[i];
    }
    // Symmetrize away the last rounding crumbs before Jacobi.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double m = 0.5 * (c(i, j) + c(j, i));
            c(i, j) = c(j, i) = m;
        }
    return sym_eigenvalues(c);
}

Vec solve_square(Mat a, Vec b) {
    const int n = a.rows();
    const double scale = std::max(a.max_abs(), 1e-300);
    std::array<int, Vec::cap> perm{};
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-14 * scale)
            throw std::domain_error("solve_square: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            a(r, col) = 0.0;
            for (int j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
            b[r] -= f * b[col];
        }
    }
    Vec x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

namespace {

double det_up_to_3(const Mat& m) {
    switch (m.rows()) {
        case 0: return 1.0;
        case 1: return m(0, 0);
        case 2: return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        case 3:
            return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                   m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                   m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        default: throw std::length_error("det_up_to_3");
    }
}

}  // namespace

Vec normal_cross(const Vec* tangents, int count) {
    const int n = count;
    const int dim = n + 1;
    Vec r(dim);
    for (int i = 0; i < dim; ++i) {
        Mat minor(n, n);
        for (int row = 0; row < n; ++row) {
            int cc = 0;
            for (int col = 0; col < dim; ++col) {
                if (col == i) continue;
                minor(row, cc++) = tangents[row][col];
            }
        }
        const double sign = ((n + i) % 2 == 0) ? 1.0 : -1.0;
        r[i] = sign * det_up_to_3(minor);
    }
    return r;
}

}  // namespace symlab
