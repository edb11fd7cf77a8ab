#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "symlab/linalg.hpp"

namespace symlab {

// Central-difference step, h = eps^{1/3} * scale.
inline double fd_step(double scale = 1.0) {
    static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    return h0 * std::max(std::abs(scale), 1.0);
}

// Smooth scalar function of one variable carrying its first two derivatives.
struct Curve1 {
    std::function<double(double)> v, d1, d2;

    double operator()(double t) const { return v(t); }
    bool valid() const { return static_cast<bool>(v); }
};

// Horner evaluation of c[0] + c[1] t + ... with analytic derivatives.
Curve1 poly_curve(std::vector<double> coeffs);
Curve1 const_curve(double a);

// Scalar field on R^n with gradient and Hessian access. Missing derivative
// callbacks fall back to central differences of the level below.
class ScalarField {
public:
    using ValueFn = std::function<double(const Vec&)>;
    using GradFn = std::function<Vec(const Vec&)>;
    using HessFn = std::function<Mat(const Vec&)>;

    ScalarField() = default;
    ScalarField(int n, ValueFn v, GradFn g = {}, HessFn h = {})
        : n_(n), v_(std::move(v)), g_(std::move(g)), h_(std::move(h)) {}

    int dim() const { return n_; }
    bool valid() const { return static_cast<bool>(v_); }

    double value(const Vec& x) const { return v_(x); }

    Vec grad(const Vec& x) const {
        if (g_) return g_(x);
        const double h = fd_step(x.norm());
        Vec r(n_);
        for (int i = 0; i < n_; ++i) {
            Vec a = x, b = x;
            a[i] += h;
            b[i] -= h;
            r[i] = (v_(a) - v_(b)) / (2 * h);
        }
        return r;
    }

    Mat hess(const Vec& x) const {
        if (h_) return h_(x);
        const double h = fd_step(x.norm());
        Mat m(n_, n_);
        for (int i = 0; i < n_; ++i) {
            Vec a = x, b = x;
            a[i] += h;
            b[i] -= h;
            const Vec ga = grad(a), gb = grad(b);
            for (int j = 0; j < n_; ++j) m(i, j) = (ga[j] - gb[j]) / (2 * h);
        }
        // Symmetrize: the FD path does not commute exactly.
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                const double s = 0.5 * (m(i, j) + m(j, i));
                m(i, j) = m(j, i) = s;
            }
        return m;
    }

    bool has_analytic_grad() const { return static_cast<bool>(g_); }
    bool has_analytic_hess() const { return static_cast<bool>(h_); }

private:
    int n_ = 0;
    ValueFn v_;
    GradFn g_;
    HessFn h_;
};

// Multivariate polynomial sum_k c_k * prod_i x_i^{e_{k,i}} with analytic
// gradient and Hessian; the workhorse for the half-cylinder test pairs and
// for pair files loaded from disk.
class PolyField {
public:
    struct Term {
        double coeff;
        std::vector<int> expo;  // one exponent per variable
    };

    PolyField(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {}

    double value(const Vec& x) const;
    Vec grad(const Vec& x) const;
    Mat hess(const Vec& x) const;

    ScalarField field() const;
    int dim() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }

private:
    double term_value(const Term& t, const Vec& x, int d1 = -1, int d2 = -1) const;
    int n_;
    std::vector<Term> terms_;
};

// Bisection for a continuous function with f(lo) and f(hi) of opposite sign
// (or zero). Refines to |hi-lo| <= xtol, then polishes with a few secant
// steps. Throws std::domain_error if the bracket is invalid.
double solve_bisect(const std::function<double(double)>& f, double lo, double hi,
                    double xtol = 1e-14);

}  // namespace symlab
