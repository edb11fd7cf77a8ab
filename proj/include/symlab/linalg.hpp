#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace symlab {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Fixed-capacity dense vector. Ambient dimension never exceeds 4
// (hypersurfaces in R^{n+1} with n <= 3), so everything lives on the stack.
class Vec {
public:
    static constexpr int cap = 4;

    Vec() = default;
    explicit Vec(int n, double fill = 0.0) : n_(checked(n)) {
        for (int i = 0; i < n_; ++i) a_[i] = fill;
    }
    Vec(std::initializer_list<double> xs) : n_(checked(static_cast<int>(xs.size()))) {
        int i = 0;
        for (double x : xs) a_[i++] = x;
    }

    int size() const { return n_; }
    double operator[](int i) const { return a_[i]; }
    double& operator[](int i) { return a_[i]; }
    double back() const { return a_[n_ - 1]; }

    // First k coordinates (the x' part of X = (x', x_{n+1})).
    Vec head(int k) const {
        Vec r(k);
        for (int i = 0; i < k; ++i) r[i] = a_[i];
        return r;
    }
    // Copy with one extra trailing coordinate.
    Vec append(double x) const {
        Vec r(n_ + 1);
        for (int i = 0; i < n_; ++i) r[i] = a_[i];
        r[n_] = x;
        return r;
    }

    Vec& operator+=(const Vec& o) {
        for (int i = 0; i < n_; ++i) a_[i] += o.a_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int i = 0; i < n_; ++i) a_[i] -= o.a_[i];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int i = 0; i < n_; ++i) a_[i] *= s;
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, double s) { return a *= s; }
    friend Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
    friend Vec operator-(Vec a) { return a *= -1.0; }

    double dot(const Vec& o) const {
        double s = 0;
        for (int i = 0; i < n_; ++i) s += a_[i] * o.a_[i];
        return s;
    }
    double squared_norm() const { return dot(*this); }
    double norm() const { return std::sqrt(squared_norm()); }
    double dist(const Vec& o) const { return (*this - o).norm(); }
    Vec normalized() const {
        double m = norm();
        if (m == 0.0) throw std::domain_error("normalized(): zero vector");
        return *this / m;
    }

private:
    static int checked(int n) {
        if (n < 0 || n > cap) throw std::length_error("Vec: dimension out of range");
        return n;
    }
    int n_ = 0;
    std::array<double, cap> a_{};
};

// Square/rectangular matrix with the same capacity bound.
class Mat {
public:
    static constexpr int cap = 4;

    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0) : r_(rows), c_(cols) {
        if (rows < 0 || rows > cap || cols < 0 || cols > cap)
            throw std::length_error("Mat: dimension out of range");
        a_.fill(0.0);
        if (fill != 0.0)
            for (int i = 0; i < r_ * c_; ++i) a_[i] = fill;
    }
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat outer(const Vec& u, const Vec& v) {
        Mat m(u.size(), v.size());
        for (int i = 0; i < u.size(); ++i)
            for (int j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    double operator()(int i, int j) const { return a_[i * cap + j]; }
    double& operator()(int i, int j) { return a_[i * cap + j]; }

    Mat& operator+=(const Mat& o) {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) (*this)(i, j) += o(i, j);
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) (*this)(i, j) -= o(i, j);
        return *this;
    }
    Mat& operator*=(double s) {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) (*this)(i, j) *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(double s, Mat a) { return a *= s; }

    Vec operator*(const Vec& v) const {
        Vec r(r_);
        for (int i = 0; i < r_; ++i) {
            double s = 0;
            for (int j = 0; j < c_; ++j) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }
    Mat matmul(const Mat& o) const {
        Mat m(r_, o.cols());
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < o.cols(); ++j) {
                double s = 0;
                for (int k = 0; k < c_; ++k) s += (*this)(i, k) * o(k, j);
                m(i, j) = s;
            }
        return m;
    }
    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    double max_abs() const {
        double m = 0;
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m = std::max(m, std::abs((*this)(i, j)));
        return m;
    }

private:
    int r_ = 0, c_ = 0;
    std::array<double, cap * cap> a_{};
};

// Lower Cholesky factor of a symmetric positive definite matrix.
Mat cholesky(const Mat& a);

// Forward / backward substitution against a lower factor L and its transpose.
Vec solve_lower(const Mat& l, const Vec& b);
Vec solve_lower_transpose(const Mat& l, const Vec& b);

// Eigenvalues (ascending) of a symmetric matrix by cyclic Jacobi rotations.
// If eigenvectors != nullptr it receives the orthonormal eigenvectors as
// columns, in the same order as the returned values.
Vec sym_eigenvalues(Mat a, Mat* eigenvectors = nullptr);

// Eigenvalues of the symmetric-definite pencil A w = k B w (B SPD), via
// Cholesky reduction to a standard symmetric problem.
Vec generalized_sym_eigenvalues(const Mat& a, const Mat& b);

// Partial-pivot LU solve for the small square systems in Newton iterations.
// Throws std::domain_error on (near-)singular input.
Vec solve_square(Mat a, Vec b);

// Vector orthogonal to n given vectors in R^{n+1}, oriented so that
// det[t_0; ...; t_{n-1}; result] > 0. Not normalized.
Vec normal_cross(const Vec* tangents, int count);

}  // namespace symlab
