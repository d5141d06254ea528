#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cmet/geom.hpp"

namespace cmet {

// Finite description of the complement of a plane domain.
struct PointPrimitive {
    Complex p;
};

enum class CircleSide {
    Hole,        // complement contains the closed disk D[c; r]
    Complement,  // complement contains C \ D(c; r); the domain sits inside
};

struct CirclePrimitive {
    Complex center;
    double radius = 0.0;
    CircleSide side = CircleSide::Hole;
};

struct LinePrimitive {
    Complex point;
    Complex direction;  // unit length
};

using BoundaryPrimitive = std::variant<PointPrimitive, CirclePrimitive, LinePrimitive>;

enum class ModelTag {
    UnitDisk,
    PuncturedUnitDisk,
    PuncturedPlane,
    TwicePuncturedPlane,
    Annulus,
    HalfPlane,
    DiskComplement,
    PuncturedDisk,
};

// Nearest-boundary data for a point: delta(z) and the witness set B(z).
struct NearBoundarySet {
    double distance = 0.0;
    std::vector<Complex> witnesses;
};

class Domain {
  public:
    explicit Domain(std::vector<BoundaryPrimitive> primitives,
                    std::optional<ModelTag> model = std::nullopt);

    static Domain from_model(ModelTag tag, Complex a = {0, 0}, Complex b = {1, 0},
                             double d = 1.0, double m = 1.0);

    const std::vector<BoundaryPrimitive>& primitives() const { return primitives_; }
    std::optional<ModelTag> model_tag() const { return model_; }
    bool hyperbolic() const { return hyperbolic_; }

    // Parameters backing a model tag (model domains only).
    Complex model_center() const { return model_center_; }
    Complex model_second() const { return model_second_; }
    double model_radius() const { return model_radius_; }
    double model_half_modulus() const { return model_half_mod_; }

    bool contains(Complex z) const;
    double delta(Complex z) const;  // throws DomainError for z outside the domain
    NearBoundarySet nearest_boundary_points(Complex z, double tol = -1.0) const;

    // Complement points usable as annulus centers (point primitives and hole
    // circle centers).
    std::vector<Complex> complement_points() const;

  private:
    std::vector<BoundaryPrimitive> primitives_;
    std::optional<ModelTag> model_;
    bool hyperbolic_ = true;
    Complex model_center_{0, 0};
    Complex model_second_{1, 0};
    double model_radius_ = 1.0;
    double model_half_mod_ = 1.0;
};

struct AnnulusInDomain {
    bool in_domain = false;     // a subset of the domain with center in the complement
    bool inner_touches = false; // inner boundary circle meets the domain boundary
    bool outer_touches = false; // outer boundary circle meets the domain boundary
};

AnnulusInDomain annulus_in_domain(const Domain& dom, const Annulus& a);

// Distance from a point to a primitive's curve (the visible boundary).
double primitive_curve_distance(const BoundaryPrimitive& prim, Complex z);

// Interval [lo, hi] of distances |zeta - xi| over xi in the primitive's
// complement region minus {zeta}.  hi may be +inf.
void primitive_region_distance_range(const BoundaryPrimitive& prim, Complex zeta,
                                     double& lo, double& hi);

// A point of the primitive's curve at distance as close as possible to
// `target` from `zeta` (used to report beta witnesses).
Complex primitive_point_at_distance(const BoundaryPrimitive& prim, Complex zeta, double target);

// JSON (de)serialization of the domain-specification file format.
Domain load_domain_file(const std::string& path);
Domain parse_domain_json(const std::string& text);
std::string domain_to_json(const Domain& dom);

}  // namespace cmet
