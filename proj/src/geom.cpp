#include "cmet/geom.hpp"

#include <algorithm>
#include <cmath>

namespace cmet {

Annulus Annulus::proper(Complex center, double center_radius, double half_modulus) {
    if (!(center_radius > 0)) throw ParamError("annulus center radius must be positive");
    return proper_log(center, std::log(center_radius), half_modulus);
}

Annulus Annulus::proper_log(Complex center, double log_center_radius, double half_modulus) {
    if (!(half_modulus > 0) || !std::isfinite(half_modulus))
        throw ParamError("annulus half modulus must be positive and finite");
    return Annulus(center, log_center_radius, half_modulus, AnnulusKind::Proper);
}

Annulus Annulus::proper_from_radii(Complex center, double inner_radius, double outer_radius) {
    if (!(inner_radius > 0) || !(outer_radius > inner_radius))
        throw ParamError("annulus radii must satisfy 0 < r < R");
    const double li = std::log(inner_radius), lo = std::log(outer_radius);
    return Annulus(center, 0.5 * (li + lo), 0.5 * (lo - li), AnnulusKind::Proper);
}

Annulus Annulus::punctured_disk(Complex center, double radius) {
    if (!(radius > 0)) throw ParamError("punctured disk radius must be positive");
    return Annulus(center, std::log(radius), kInf, AnnulusKind::PuncturedDisk);
}

Annulus Annulus::disk_complement(Complex center, double radius) {
    if (!(radius > 0)) throw ParamError("disk complement radius must be positive");
    return Annulus(center, std::log(radius), kInf, AnnulusKind::DiskComplement);
}

double Annulus::center_radius() const {
    if (!proper_kind()) throw ParamError("center radius is defined for proper annuli only");
    return std::exp(log_d_);
}

double Annulus::log_center_radius() const {
    if (!proper_kind()) throw ParamError("center radius is defined for proper annuli only");
    return log_d_;
}

Circle Annulus::center_circle() const { return Circle{center_, center_radius()}; }

double Annulus::boundary_radius() const {
    if (proper_kind()) throw ParamError("boundary radius is defined for degenerate annuli only");
    return std::exp(log_d_);
}

double Annulus::half_modulus() const { return half_mod_; }

double Annulus::modulus() const { return proper_kind() ? 2.0 * half_mod_ : kInf; }

double Annulus::inner_log_radius() const {
    switch (kind_) {
        case AnnulusKind::Proper: return log_d_ - half_mod_;
        case AnnulusKind::PuncturedDisk: return -kInf;
        case AnnulusKind::DiskComplement: return log_d_;
    }
    return 0.0;
}

double Annulus::outer_log_radius() const {
    switch (kind_) {
        case AnnulusKind::Proper: return log_d_ + half_mod_;
        case AnnulusKind::PuncturedDisk: return log_d_;
        case AnnulusKind::DiskComplement: return kInf;
    }
    return 0.0;
}

double Annulus::inner_radius() const {
    const double l = inner_log_radius();
    return std::isinf(l) ? 0.0 : std::exp(l);
}

double Annulus::outer_radius() const { return std::exp(outer_log_radius()); }

bool Annulus::contains(Complex z) const {
    const double rho = std::abs(z - center_);
    if (rho <= 0.0) return false;
    const double lr = std::log(rho);
    return lr > inner_log_radius() && lr < outer_log_radius();
}

bool Annulus::contains_closure(Complex z) const {
    const double rho = std::abs(z - center_);
    if (rho <= 0.0) return kind_ == AnnulusKind::PuncturedDisk;
    const double lr = std::log(rho);
    return lr >= inner_log_radius() - kLogTol && lr <= outer_log_radius() + kLogTol;
}

bool Annulus::same_center(const Annulus& other, double tol) const {
    const double scale = std::exp(std::min(log_d_, other.log_d_));
    return std::abs(center_ - other.center_) <= tol * (1.0 + scale);
}

Annulus core(const Annulus& a, double q) {
    if (!(q > 0)) throw ParamError("core collar parameter must be positive");
    switch (a.kind()) {
        case AnnulusKind::Proper:
            if (q >= a.half_modulus() - kLogTol)
                throw ParamError("core collar parameter must be below the half modulus");
            return Annulus::proper_log(a.center(), a.log_center_radius(), a.half_modulus() - q);
        case AnnulusKind::PuncturedDisk:
            return Annulus::punctured_disk(a.center(), std::exp(std::log(a.boundary_radius()) - q));
        case AnnulusKind::DiskComplement:
            return Annulus::disk_complement(a.center(), std::exp(std::log(a.boundary_radius()) + q));
    }
    throw ParamError("bad annulus kind");
}

Annulus band(const Annulus& a, double r) {
    if (!(r > 0)) throw ParamError("band parameter must be positive");
    switch (a.kind()) {
        case AnnulusKind::Proper:
            return Annulus::proper_log(a.center(), a.log_center_radius(), a.half_modulus() + r);
        case AnnulusKind::PuncturedDisk:
            return Annulus::punctured_disk(a.center(), std::exp(std::log(a.boundary_radius()) + r));
        case AnnulusKind::DiskComplement:
            return Annulus::disk_complement(a.center(), std::exp(std::log(a.boundary_radius()) - r));
    }
    throw ParamError("bad annulus kind");
}

Annulus band_of_circle(const Circle& c, double r) {
    if (!(c.radius > 0)) throw ParamError("cannot band a circle of zero radius");
    return Annulus::proper(c.center, c.radius, r);
}

namespace {

enum class Side { Inside, OnInner, Mid, OnOuter, Outside };

Side side_of(const Annulus& a, double log_rho) {
    const double li = a.inner_log_radius(), lo = a.outer_log_radius();
    if (std::isfinite(li)) {
        if (log_rho < li - kLogTol) return Side::Inside;
        if (log_rho <= li + kLogTol) return Side::OnInner;
    } else if (log_rho == -kInf) {
        return Side::Inside;  // exactly the puncture
    }
    if (std::isfinite(lo)) {
        if (log_rho > lo + kLogTol) return Side::Outside;
        if (log_rho >= lo - kLogTol) return Side::OnOuter;
    }
    return Side::Mid;
}

}  // namespace

bool separates(const Annulus& a, Complex p, Complex q) {
    auto classify = [&](Complex z) -> int {
        // 1 = closed inside component, -1 = closed outside component, 0 = in A.
        const double rho = std::abs(z - a.center());
        switch (a.kind()) {
            case AnnulusKind::Proper: {
                if (rho <= 0.0) return 1;
                const double lr = std::log(rho);
                if (lr <= a.inner_log_radius() + kLogTol) return 1;
                if (lr >= a.outer_log_radius() - kLogTol) return -1;
                return 0;
            }
            case AnnulusKind::PuncturedDisk:
                if (rho <= kLogTol * (1.0 + a.boundary_radius())) return 1;
                return rho >= a.boundary_radius() * (1.0 - kLogTol) ? -1 : 0;
            case AnnulusKind::DiskComplement:
                // Outside component is the point at infinity only.
                return rho <= a.boundary_radius() * (1.0 + kLogTol) ? 1 : 0;
        }
        return 0;
    };
    const int cp = classify(p), cq = classify(q);
    return (cp == 1 && cq == -1) || (cp == -1 && cq == 1);
}

int crossing_count(const Annulus& a, const PathPolyline& path) {
    const auto& vs = path.vertices();
    if (vs.size() < 2) throw ParamError("crossing_count needs a path with >= 2 vertices");

    // Break the polyline into radially monotone pieces; every local extremum
    // of |z - o| then sits at a breakpoint, so tangential touches show up as
    // isolated single-point side visits which we drop.
    std::vector<double> log_rho;
    const Complex o = a.center();
    auto push = [&](Complex z) {
        const double rho = std::abs(z - o);
        log_rho.push_back(rho > 0 ? std::log(rho) : -kInf);
    };
    push(vs[0]);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        const Complex u = vs[i], v = vs[i + 1];
        const Complex d = v - u;
        const double len2 = std::norm(d);
        const double tf = std::clamp(dot(o - u, d) / len2, 0.0, 1.0);
        if (tf > 1e-12 && tf < 1.0 - 1e-12) push(u + tf * d);
        push(v);
    }

    // Side sequence at breakpoints, collapsing adjacent repeats.  Endpoints
    // resting exactly on a boundary circle belong to the closed complement
    // component; interior on-circle breakpoints are extrema without a sign
    // change (tangential touches) and are dropped.
    std::vector<Side> sides;
    for (std::size_t i = 0; i < log_rho.size(); ++i) {
        Side s = side_of(a, log_rho[i]);
        const bool endpoint = (i == 0) || (i + 1 == log_rho.size());
        if (endpoint) {
            if (s == Side::OnInner) s = Side::Inside;
            if (s == Side::OnOuter) s = Side::Outside;
        }
        if (!sides.empty() && sides.back() == s) continue;
        sides.push_back(s);
    }
    {
        std::vector<Side> cleaned;
        for (Side s : sides) {
            if (s == Side::OnInner || s == Side::OnOuter) continue;
            if (!cleaned.empty() && cleaned.back() == s) continue;
            cleaned.push_back(s);
        }
        sides.swap(cleaned);
    }

    // Emit inner/outer hit symbols from side transitions.
    std::vector<int> symbols;  // 0 = inner circle, 1 = outer circle
    auto emit = [&](int s) {
        if (symbols.empty() || symbols.back() != s) symbols.push_back(s);
    };
    for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
        const Side s0 = sides[i], s1 = sides[i + 1];
        if (s0 == Side::Inside && s1 == Side::Mid) emit(0);
        else if (s0 == Side::Mid && s1 == Side::Inside) emit(0);
        else if (s0 == Side::Mid && s1 == Side::Outside) emit(1);
        else if (s0 == Side::Outside && s1 == Side::Mid) emit(1);
        else if (s0 == Side::Inside && s1 == Side::Outside) { emit(0); emit(1); }
        else if (s0 == Side::Outside && s1 == Side::Inside) { emit(1); emit(0); }
    }

    int alternations = 0;
    for (std::size_t i = 0; i + 1 < symbols.size(); ++i)
        if (symbols[i] != symbols[i + 1]) ++alternations;
    return alternations;
}

bool is_concentric_subannulus(const Annulus& inner, const Annulus& outer) {
    if (!inner.same_center(outer)) return false;
    const auto ik = inner.kind(), ok = outer.kind();
    if (ik == AnnulusKind::Proper) {
        return inner.inner_log_radius() > outer.inner_log_radius() + kLogTol &&
               inner.outer_log_radius() < outer.outer_log_radius() - kLogTol;
    }
    if (ik == AnnulusKind::PuncturedDisk && ok == AnnulusKind::PuncturedDisk)
        return inner.outer_log_radius() < outer.outer_log_radius() - kLogTol;
    if (ik == AnnulusKind::DiskComplement && ok == AnnulusKind::DiskComplement)
        return inner.inner_log_radius() > outer.inner_log_radius() + kLogTol;
    return false;
}

void annulus_distance_range(const Annulus& a, Complex p, double& lo, double& hi) {
    const double dc = std::abs(p - a.center());
    const double r = a.inner_radius();
    const double R = a.outer_radius();
    if (dc <= r) lo = r - dc;
    else if (std::isfinite(R) && dc >= R) lo = dc - R;
    else lo = 0.0;
    hi = std::isfinite(R) ? dc + R : kInf;
    if (a.kind() == AnnulusKind::DiskComplement) hi = kInf;
}

bool annuli_regions_intersect(const Annulus& a, const Annulus& b) {
    double lo = 0, hi = 0;
    annulus_distance_range(a, b.center(), lo, hi);
    const double r = b.inner_radius(), R = b.outer_radius();
    // Distances from b's center achieved over a form [lo, hi]; a meets the
    // open shell (r, R) iff the intervals overlap.
    return lo < R * (1.0 - kLogTol) && hi > r * (1.0 + kLogTol);
}

}  // namespace cmet
