#pragma once

#include <optional>

#include "cmet/path.hpp"
#include "cmet/util.hpp"

namespace cmet {

struct Circle {
    Complex center;
    double radius = 0.0;  // >= 0
};

enum class AnnulusKind { Proper, PuncturedDisk, DiskComplement };

// Round annulus A(o; d, m) = { d e^{-m} < |z-o| < d e^{m} }, stored in log
// space, together with the two degenerate variants: the punctured disk
// D_*(o; R) and the complement of a closed disk C \ D[o; R].  Degenerate
// variants have infinite modulus.
class Annulus {
  public:
    static Annulus proper(Complex center, double center_radius, double half_modulus);
    static Annulus proper_log(Complex center, double log_center_radius, double half_modulus);
    static Annulus proper_from_radii(Complex center, double inner_radius, double outer_radius);
    static Annulus punctured_disk(Complex center, double radius);
    static Annulus disk_complement(Complex center, double radius);

    AnnulusKind kind() const { return kind_; }
    bool proper_kind() const { return kind_ == AnnulusKind::Proper; }
    Complex center() const { return center_; }

    // Proper only.
    double center_radius() const;
    double log_center_radius() const;
    Circle center_circle() const;

    // Degenerate only: the single finite boundary radius R.
    double boundary_radius() const;

    double half_modulus() const;        // m; +inf for degenerate kinds
    double modulus() const;             // 2m; +inf for degenerate kinds

    double inner_log_radius() const;    // -inf for punctured disks
    double outer_log_radius() const;    // +inf for disk complements
    double inner_radius() const;
    double outer_radius() const;

    bool contains(Complex z) const;          // open region
    bool contains_closure(Complex z) const;  // closed region

    bool same_center(const Annulus& other, double tol = kLogTol) const;

  private:
    Annulus(Complex center, double log_d, double half_mod, AnnulusKind kind)
        : center_(center), log_d_(log_d), half_mod_(half_mod), kind_(kind) {}

    Complex center_;
    double log_d_;     // log center radius (proper) / log boundary radius (degenerate)
    double half_mod_;  // m; +inf for degenerate
    AnnulusKind kind_;
};

// core_q: remove a collar of modulus q per side.  Proper annuli require
// 0 < q < m; degenerate annuli accept any q > 0.
Annulus core(const Annulus& a, double q);

// band_r: concentric superannulus, inverse of core_r.
Annulus band(const Annulus& a, double r);

// band_r(S^1(o; d)) = A(o; d, r).
Annulus band_of_circle(const Circle& c, double r);

// True iff one of p, q lies in the closed inside component of a's complement
// and the other in the closed outside component.  For punctured disks the
// inside is the center point; for disk complements the outside is empty
// (it is the point at infinity), so finite pairs are never separated.
bool separates(const Annulus& a, Complex p, Complex q);

// Maximal number of non-overlapping subpaths each meeting both boundary
// circles.  Tangential touches (no sign change of |z-o| minus the radius)
// are not hits.
int crossing_count(const Annulus& a, const PathPolyline& path);

// Centers equal and closure(inner) is contained in outer.
bool is_concentric_subannulus(const Annulus& inner, const Annulus& outer);

// Whether the two open annular regions intersect.
bool annuli_regions_intersect(const Annulus& a, const Annulus& b);

// Interval [lo, hi] of distances |w - p| achieved over the closed region of a.
void annulus_distance_range(const Annulus& a, Complex p, double& lo, double& hi);

}  // namespace cmet
