#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symlab/linalg.hpp"
#include "symlab/scalar.hpp"

namespace symlab {

// Axis-aligned parameter box in R^d.
struct Box {
    Vec lo, hi;
    int dim() const { return lo.size(); }
    double extent(int i) const { return hi[i] - lo[i]; }
};

// Projection region R = pi(M) in R^n. Two shapes cover the catalog: a disk
// (surfaces of revolution about the vertical axis) and a tube level-set
// region {|x''| < w(x1)} (revolution about the x1 axis).
class Region {
public:
    enum class Kind { disk, tube };

    static Region disk(Vec center, double radius);
    // w > 0 on (lo, hi), w(lo) = w(hi) = 0. For n = 1 the region is just the
    // interval (lo, hi).
    static Region tube(Curve1 w, double lo, double hi, int n);

    Kind kind() const { return kind_; }
    int n() const { return n_; }

    // Signed margin: positive inside, zero on the boundary, negative outside.
    // Exact distance for disks; a first-order distance proxy
    // (w - |x''|)/sqrt(1 + w'^2) for tubes.
    double margin(const Vec& xp) const;
    bool contains(const Vec& xp, double tol = 0.0) const { return margin(xp) >= -tol; }

    double diameter() const;
    Box bounding_box() const;
    const Vec& center() const { return center_; }
    double disk_radius() const { return radius_; }
    const Curve1& tube_profile() const { return w_; }
    double tube_lo() const { return lo_; }
    double tube_hi() const { return hi_; }

private:
    Kind kind_ = Kind::disk;
    int n_ = 0;
    Vec center_;        // disk center (also carries x1 midpoint for tubes)
    double radius_ = 0; // disk
    Curve1 w_;          // tube
    double lo_ = 0, hi_ = 0;
};

// Deterministic row-major grid over the region bounding box, keeping points
// with margin >= delta. Cell-centered so boundary nodes never appear.
std::vector<Vec> region_grid(const Region& region, double delta, int per_axis);

// Height function on the interior of R with derivative access.
class HeightFn {
public:
    virtual ~HeightFn() = default;
    virtual double value(const Vec& xp) const = 0;
    virtual Vec grad(const Vec& xp) const;
    virtual Mat hess(const Vec& xp) const;
};

class FieldHeight final : public HeightFn {
public:
    explicit FieldHeight(ScalarField f) : f_(std::move(f)) {}
    double value(const Vec& xp) const override { return f_.value(xp); }
    Vec grad(const Vec& xp) const override { return f_.grad(xp); }
    Mat hess(const Vec& xp) const override { return f_.hess(xp); }

private:
    ScalarField f_;
};

// Chart of the unit sphere S^{k-1} in R^k with analytic derivatives, used
// both for the horizontal sphere factor of vertical-axis revolutions and for
// the cross-section sphere of tubes. k = 1 is the two-point sphere handled
// through `sign`.
struct SphereChart {
    int k = 2;
    double sign = 1.0;  // only k = 1

    int angle_count() const { return k - 1; }
    Box angle_box() const;
    bool periodic(int angle) const;  // last angle of k >= 2 charts is periodic

    Vec omega(const Vec& phi) const;
    Vec domega(const Vec& phi, int i) const;
    Vec ddomega(const Vec& phi, int i, int j) const;
};

// Smooth parametrized piece of hypersurface with derivative access.
class SurfacePatch {
public:
    virtual ~SurfacePatch() = default;

    int dim() const { return n_; }
    const Box& domain() const { return domain_; }
    virtual bool periodic_dim(int i) const { (void)i; return false; }

    virtual Vec position(const Vec& u) const = 0;
    virtual Vec tangent(const Vec& u, int i) const;       // FD fallback
    virtual Vec second(const Vec& u, int i, int j) const; // FD fallback

    // Unit normal pointing into the bounded open set G. Throws
    // std::domain_error if the tangent frame is rank deficient.
    virtual Vec inner_normal(const Vec& u) const;

    // Metric area element sqrt(det I) at u.
    double area_element(const Vec& u) const;

protected:
    SurfacePatch(int n, Box domain) : n_(n), domain_(std::move(domain)) {}
    // Cross-product normal with an orientation factor fixed by the subclass.
    Vec oriented_cross(const Vec& u, double flip) const;

    int n_;
    Box domain_;
};

// Parametric patch from plain callables; derivatives analytic when given,
// otherwise central differences. Inner orientation from a reference point
// generator (a point of G near the surface point), which handles solids like
// tori where no single reference point works globally.
class LambdaPatch final : public SurfacePatch {
public:
    using PositionFn = std::function<Vec(const Vec&)>;
    using DerivFn = std::function<Vec(const Vec&, int)>;
    using Deriv2Fn = std::function<Vec(const Vec&, int, int)>;
    using InnerRefFn = std::function<Vec(const Vec&)>;

    LambdaPatch(int n, Box domain, PositionFn pos, InnerRefFn inner_ref,
                DerivFn d1 = {}, Deriv2Fn d2 = {}, std::vector<bool> periodic = {});

    Vec position(const Vec& u) const override { return pos_(u); }
    Vec tangent(const Vec& u, int i) const override;
    Vec second(const Vec& u, int i, int j) const override;
    Vec inner_normal(const Vec& u) const override;
    bool periodic_dim(int i) const override;

private:
    PositionFn pos_;
    InnerRefFn inner_ref_;
    DerivFn d1_;
    Deriv2Fn d2_;
    std::vector<bool> periodic_;
};

// Meridian curve theta -> (s, z) of a closed surface of revolution about the
// vertical axis: s(0) = s(pi) = 0, s > 0 on (0, pi), and s unimodal (a
// plateau at the maximum is allowed; it becomes the vertical strip).
class Meridian {
public:
    Meridian(Curve1 s, Curve1 z);
    // Profile s = P(cos theta) sin theta, z = Q(cos theta). This form closes
    // smoothly at the poles automatically and keeps z'/s regular there.
    static Meridian from_pq(const Curve1& p, const Curve1& q);

    double s(double th) const { return s_.v(th); }
    double ds(double th) const { return s_.d1(th); }
    double dds(double th) const { return s_.d2(th); }
    double z(double th) const { return z_.v(th); }
    double dz(double th) const { return z_.d1(th); }
    double ddz(double th) const { return z_.d2(th); }
    // z'(theta)/s(theta); finite at the poles for from_pq profiles.
    double dz_over_s(double th) const;

    double smax() const { return smax_; }
    // s == smax exactly on [peak_lo, peak_hi]; equal for a smooth maximum.
    double peak_lo() const { return peak_lo_; }
    double peak_hi() const { return peak_hi_; }

    // Branch inversion: theta with s(theta) = radius on the upper branch
    // (0, peak_lo] or the lower branch [peak_hi, pi).
    double upper_theta(double radius) const;
    double lower_theta(double radius) const;

private:
    double invert(double radius, double a, double b) const;
    Curve1 s_, z_;
    std::function<double(double)> dz_over_s_;
    double smax_ = 0, peak_lo_ = 0, peak_hi_ = 0;
};

// Vertical-axis revolution patch: X = center + (s(theta) omega, z(theta)).
class RevolutionPatch final : public SurfacePatch {
public:
    RevolutionPatch(std::shared_ptr<const Meridian> m, Vec center, int n,
                    double theta_lo, double theta_hi, double flip,
                    SphereChart chart);

    Vec position(const Vec& u) const override;
    Vec tangent(const Vec& u, int i) const override;
    Vec second(const Vec& u, int i, int j) const override;
    Vec inner_normal(const Vec& u) const override;
    bool periodic_dim(int i) const override;

    const Meridian& meridian() const { return *m_; }

private:
    std::shared_ptr<const Meridian> m_;
    Vec center_;
    double flip_;
    SphereChart chart_;
};

// Horizontal-axis revolution (tube) patch:
// X = center + (x1, w(x1) omega) with omega in the (x2..xn, z) cross-section.
class TubePatch final : public SurfacePatch {
public:
    TubePatch(Curve1 w, Vec center, int n, double x_lo, double x_hi,
              SphereChart chart);

    Vec position(const Vec& u) const override;
    Vec tangent(const Vec& u, int i) const override;
    Vec second(const Vec& u, int i, int j) const override;
    Vec inner_normal(const Vec& u) const override;
    bool periodic_dim(int i) const override;

private:
    Curve1 w_;
    Vec center_;
    SphereChart chart_;
};

// Graph patch over the region in polar-style coordinates
// u = (radius, angles): X = (c' + r omega, f(c' + r omega)). Used for pairs
// constructed directly from (R, f1, f2).
class PolarGraphPatch final : public SurfacePatch {
public:
    PolarGraphPatch(std::shared_ptr<const HeightFn> f, Vec center, int n,
                    double r_lo, double r_hi, double inner_sign, SphereChart chart);

    Vec position(const Vec& u) const override;
    Vec tangent(const Vec& u, int i) const override;
    Vec second(const Vec& u, int i, int j) const override;
    Vec inner_normal(const Vec& u) const override;
    bool periodic_dim(int i) const override;

private:
    Vec xprime(const Vec& u) const;
    std::shared_ptr<const HeightFn> f_;
    Vec center_;
    double inner_sign_;  // +1 lower graph, -1 upper graph (z-component sign)
    SphereChart chart_;
};

class VerticalField;  // variation module

// Graph piece deformed by a vertical field: base position + t v(x') e_z.
class DeformedPatch final : public SurfacePatch {
public:
    DeformedPatch(std::shared_ptr<const SurfacePatch> base, ScalarField v, double t);

    Vec position(const Vec& u) const override;
    Vec tangent(const Vec& u, int i) const override;
    Vec second(const Vec& u, int i, int j) const override;
    Vec inner_normal(const Vec& u) const override;
    bool periodic_dim(int i) const override { return base_->periodic_dim(i); }

private:
    std::shared_ptr<const SurfacePatch> base_;
    ScalarField v_;
    double t_;
};

// Patch scaled about the origin by a positive factor.
class ScaledPatch final : public SurfacePatch {
public:
    ScaledPatch(std::shared_ptr<const SurfacePatch> base, double lambda);
    Vec position(const Vec& u) const override;
    Vec tangent(const Vec& u, int i) const override;
    Vec second(const Vec& u, int i, int j) const override;
    Vec inner_normal(const Vec& u) const override;
    bool periodic_dim(int i) const override { return base_->periodic_dim(i); }

private:
    std::shared_ptr<const SurfacePatch> base_;
    double lambda_;
};

enum class SheetRole { upper, lower, strip };

// Closed embedded surface M = M1 (upper graph) + M2 (lower graph) + strip.
class ClosedGraphPair {
public:
    struct Piece {
        std::shared_ptr<const SurfacePatch> patch;
        SheetRole role = SheetRole::upper;
        // Parameter box covering the part of the piece over R_delta. The
        // strip box ignores delta.
        std::function<Box(double)> box_for_delta;
    };
    enum class StripState { zero_measure, explicit_patch, unknown };

    ClosedGraphPair() = default;
    ClosedGraphPair(std::string name, int n, Region region,
                    std::shared_ptr<const HeightFn> f1,
                    std::shared_ptr<const HeightFn> f2, std::vector<Piece> pieces,
                    Vec interior_point, StripState strip,
                    std::optional<double> s_prime_radius = {});

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    const Region& region() const { return region_; }
    StripState strip_state() const { return strip_; }
    std::optional<double> s_prime_radius() const { return s_prime_radius_; }

    double f1(const Vec& xp) const { return f1_->value(xp); }
    double f2(const Vec& xp) const { return f2_->value(xp); }
    Vec grad_f1(const Vec& xp) const { return f1_->grad(xp); }
    Vec grad_f2(const Vec& xp) const { return f2_->grad(xp); }
    Mat hess_f1(const Vec& xp) const { return f1_->hess(xp); }
    Mat hess_f2(const Vec& xp) const { return f2_->hess(xp); }
    const HeightFn& upper() const { return *f1_; }
    const HeightFn& lower() const { return *f2_; }
    std::shared_ptr<const HeightFn> upper_ptr() const { return f1_; }
    std::shared_ptr<const HeightFn> lower_ptr() const { return f2_; }

    // Closure membership test for X in R^{n+1}; tol < 0 selects the default
    // 1e-9 * diameter.
    bool contains(const Vec& X, double tol = -1.0) const;

    double diameter() const { return diameter_; }
    const Vec& interior_point() const { return interior_point_; }

    const std::vector<Piece>& pieces() const { return pieces_; }
    std::vector<const SurfacePatch*> sampling_patches() const;
    void add_sampling_patch(std::shared_ptr<const SurfacePatch> p);

    // Optional meridian handle for vertical revolutions (used by some tests
    // and by the contact-order scan).
    void set_meridian(std::shared_ptr<const Meridian> m, Vec center) {
        meridian_ = std::move(m);
        meridian_center_ = center;
    }
    const Meridian* meridian() const { return meridian_.get(); }
    const Vec& meridian_center() const { return meridian_center_; }

private:
    std::string name_;
    int n_ = 0;
    Region region_;
    std::shared_ptr<const HeightFn> f1_, f2_;
    std::vector<Piece> pieces_;
    std::vector<std::shared_ptr<const SurfacePatch>> extra_patches_;
    Vec interior_point_;
    StripState strip_ = StripState::zero_measure;
    std::optional<double> s_prime_radius_;
    std::shared_ptr<const Meridian> meridian_;
    Vec meridian_center_;
    double diameter_ = 0;
};

// One surface sample with its inner normal, as produced by sample_surface.
struct SurfaceSample {
    Vec point;
    Vec normal;
    const SurfacePatch* patch = nullptr;
    Vec u;
};

// Deterministic tensor sampling of every patch (interior nodes only).
std::vector<SurfaceSample> sample_surface(const ClosedGraphPair& pair, int per_axis);

struct DecomposeOptions {
    int seed_grid = 48;       // per-axis parameter samples used for seeding
    int probes = 160;         // number of projected probe points
    double shrink = 2e-2;     // pull probes toward the projection center
    double z_dedupe = 1e-7;   // sheet merge tolerance, relative to diameter
};

// Heights of all sheets of the patch collection over the vertical line
// through xp, ascending. Newton-polished from seeded parameter cells.
std::vector<double> vertical_sheets(const std::vector<const SurfacePatch*>& patches,
                                    const Vec& xp, const DecomposeOptions& opt = {});

// Split a closed embedded patch collection into upper/lower graphs over a
// disk-shaped projection. Throws std::runtime_error (with the witness x' in
// the message) when some interior point is covered by more than two sheets.
ClosedGraphPair decompose_graphs(std::vector<std::shared_ptr<const SurfacePatch>> patches,
                                 const DecomposeOptions& opt = {});

}  // namespace symlab
