#include "symlab/scalar.hpp"

#include <stdexcept>

namespace symlab {

Curve1 poly_curve(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    auto eval = [](const std::vector<double>& c, double t) {
        double s = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) s = s * t + c[i];
        return s;
    };
    std::vector<double> d1(coeffs.size() > 1 ? coeffs.size() - 1 : 1, 0.0);
    for (std::size_t i = 1; i < coeffs.size(); ++i) d1[i - 1] = coeffs[i] * double(i);
    std::vector<double> d2(d1.size() > 1 ? d1.size() - 1 : 1, 0.0);
    for (std::size_t i = 1; i < d1.size(); ++i) d2[i - 1] = d1[i] * double(i);

    Curve1 c;
    c.v = [coeffs, eval](double t) { return eval(coeffs, t); };
    c.d1 = [d1, eval](double t) { return eval(d1, t); };
    c.d2 = [d2, eval](double t) { return eval(d2, t); };
    return c;
}

Curve1 const_curve(double a) {
    Curve1 c;
    c.v = [a](double) { return a; };
    c.d1 = [](double) { return 0.0; };
    c.d2 = [](double) { return 0.0; };
    return c;
}

double PolyField::term_value(const Term& t, const Vec& x, int d1, int d2) const {
    double s = t.coeff;
    for (int i = 0; i < n_ && s != 0.0; ++i) {
        int e = t.expo[i];
        if (i == d1) {
            s *= e;
            e -= 1;
        }
        if (i == d2) {
            s *= e;
            e -= 1;
        }
        if (e < 0) return 0.0;
        for (int k = 0; k < e; ++k) s *= x[i];
    }
    return s;
}

double PolyField::value(const Vec& x) const {
    double s = 0.0;
    for (const auto& t : terms_) s += term_value(t, x);
    return s;
}

Vec PolyField::grad(const Vec& x) const {
    Vec g(n_);
    for (int i = 0; i < n_; ++i)
        for (const auto& t : terms_) g[i] += term_value(t, x, i);
    return g;
}

Mat PolyField::hess(const Vec& x) const {
    Mat h(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            for (const auto& t : terms_) h(i, j) += term_value(t, x, i, j);
    return h;
}

ScalarField PolyField::field() const {
    PolyField copy = *this;
    return ScalarField(
        n_, [copy](const Vec& x) { return copy.value(x); },
        [copy](const Vec& x) { return copy.grad(x); },
        [copy](const Vec& x) { return copy.hess(x); });
}

double solve_bisect(const std::function<double(double)>& f, double lo, double hi,
                    double xtol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::domain_error("solve_bisect: endpoints do not bracket a root");
    while (hi - lo > xtol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // hit representable resolution
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace symlab
