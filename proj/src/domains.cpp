#include "cmet/domains.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cmet {

namespace {

double line_distance(const LinePrimitive& l, Complex z) {
    return std::abs(cross(z - l.point, l.direction));
}

Complex line_foot(const LinePrimitive& l, Complex z) {
    return l.point + dot(z - l.point, l.direction) * l.direction;
}

}  // namespace

double primitive_curve_distance(const BoundaryPrimitive& prim, Complex z) {
    if (const auto* pt = std::get_if<PointPrimitive>(&prim)) return std::abs(z - pt->p);
    if (const auto* c = std::get_if<CirclePrimitive>(&prim))
        return std::abs(std::abs(z - c->center) - c->radius);
    return line_distance(std::get<LinePrimitive>(prim), z);
}

void primitive_region_distance_range(const BoundaryPrimitive& prim, Complex zeta,
                                     double& lo, double& hi) {
    if (const auto* pt = std::get_if<PointPrimitive>(&prim)) {
        const double s = std::abs(zeta - pt->p);
        if (s == 0.0) {  // the witness itself; contributes nothing
            lo = kInf;
            hi = -kInf;
            return;
        }
        lo = hi = s;
        return;
    }
    if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
        const double dc = std::abs(zeta - c->center);
        const double reltol = 1e-12 * (1.0 + c->radius + dc);
        if (c->side == CircleSide::Hole) {
            lo = (dc <= c->radius + reltol) ? 0.0 : dc - c->radius;
            hi = dc + c->radius;
        } else {
            lo = (dc >= c->radius - reltol) ? 0.0 : c->radius - dc;
            hi = kInf;
        }
        return;
    }
    const auto& l = std::get<LinePrimitive>(prim);
    lo = line_distance(l, zeta);
    const double reltol = 1e-12 * (1.0 + std::abs(zeta - l.point));
    if (lo <= reltol) lo = 0.0;
    hi = kInf;
}

Complex primitive_point_at_distance(const BoundaryPrimitive& prim, Complex zeta, double target) {
    if (const auto* pt = std::get_if<PointPrimitive>(&prim)) return pt->p;
    if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
        const double dc = std::abs(zeta - c->center);
        if (dc == 0.0) return c->center + Complex(c->radius, 0.0);
        const Complex ex = (zeta - c->center) / dc;
        const double num = c->radius * c->radius + dc * dc - target * target;
        const double cphi = std::clamp(num / (2.0 * c->radius * dc), -1.0, 1.0);
        const double sphi = std::sqrt(std::max(0.0, 1.0 - cphi * cphi));
        return c->center + c->radius * (cphi * ex + sphi * Complex(0, 1) * ex);
    }
    const auto& l = std::get<LinePrimitive>(prim);
    const Complex foot = line_foot(l, zeta);
    const double d0 = line_distance(l, zeta);
    if (target <= d0) return foot;
    return foot + l.direction * std::sqrt(target * target - d0 * d0);
}

Domain::Domain(std::vector<BoundaryPrimitive> primitives, std::optional<ModelTag> model)
    : primitives_(std::move(primitives)), model_(model) {
    if (primitives_.empty()) throw DomainError("domain needs at least one boundary primitive");
    int point_count = 0;
    bool has_curve = false;
    for (const auto& prim : primitives_) {
        if (std::holds_alternative<PointPrimitive>(prim)) {
            ++point_count;
        } else {
            has_curve = true;
        }
        if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
            if (!(c->radius > 0)) throw DomainError("circle primitive needs positive radius");
        }
        if (const auto* l = std::get_if<LinePrimitive>(&prim)) {
            const double n = std::abs(l->direction);
            if (!(n > 0)) throw DomainError("line primitive needs a direction");
        }
    }
    // Omega^c together with infinity must carry >= 3 points for hyperbolicity.
    hyperbolic_ = has_curve || point_count >= 2;

    if (model_) {
        // Extract model parameters from the primitive description.
        std::vector<const PointPrimitive*> pts;
        std::vector<const CirclePrimitive*> circles;
        std::vector<const LinePrimitive*> lines;
        for (const auto& prim : primitives_) {
            if (const auto* p = std::get_if<PointPrimitive>(&prim)) pts.push_back(p);
            if (const auto* c = std::get_if<CirclePrimitive>(&prim)) circles.push_back(c);
            if (const auto* l = std::get_if<LinePrimitive>(&prim)) lines.push_back(l);
        }
        auto bad = [&](const char* why) { throw DomainError(std::string("model tag inconsistent with primitives: ") + why); };
        switch (*model_) {
            case ModelTag::UnitDisk:
                if (circles.size() != 1 || !pts.empty() || !lines.empty()) bad("unit_disk");
                if (circles[0]->side != CircleSide::Complement) bad("unit_disk side");
                model_center_ = circles[0]->center;
                model_radius_ = circles[0]->radius;
                break;
            case ModelTag::PuncturedUnitDisk:
            case ModelTag::PuncturedDisk: {
                if (circles.size() != 1 || pts.size() != 1 || !lines.empty()) bad("punctured disk");
                if (circles[0]->side != CircleSide::Complement) bad("punctured disk side");
                if (std::abs(pts[0]->p - circles[0]->center) > 1e-12 * (1 + circles[0]->radius))
                    bad("puncture must sit at the circle center");
                model_center_ = circles[0]->center;
                model_radius_ = circles[0]->radius;
                if (*model_ == ModelTag::PuncturedUnitDisk &&
                    (std::abs(model_center_) > 1e-12 || std::abs(model_radius_ - 1.0) > 1e-12))
                    bad("punctured unit disk must be D(0;1) minus origin");
                break;
            }
            case ModelTag::PuncturedPlane:
                if (pts.size() != 1 || !circles.empty() || !lines.empty()) bad("punctured_plane");
                model_center_ = pts[0]->p;
                hyperbolic_ = false;
                break;
            case ModelTag::TwicePuncturedPlane:
                if (pts.size() != 2 || !circles.empty() || !lines.empty()) bad("twice_punctured_plane");
                model_center_ = pts[0]->p;
                model_second_ = pts[1]->p;
                break;
            case ModelTag::Annulus: {
                if (circles.size() != 2 || !pts.empty() || !lines.empty()) bad("annulus");
                const CirclePrimitive* inner = circles[0];
                const CirclePrimitive* outer = circles[1];
                if (inner->radius > outer->radius) std::swap(inner, outer);
                if (inner->side != CircleSide::Hole || outer->side != CircleSide::Complement)
                    bad("annulus sides");
                if (std::abs(inner->center - outer->center) > 1e-12 * (1 + outer->radius))
                    bad("annulus circles must be concentric");
                model_center_ = inner->center;
                model_radius_ = std::sqrt(inner->radius * outer->radius);
                model_half_mod_ = 0.5 * std::log(outer->radius / inner->radius);
                break;
            }
            case ModelTag::HalfPlane:
                if (lines.size() != 1 || !pts.empty() || !circles.empty()) bad("half_plane");
                break;
            case ModelTag::DiskComplement:
                if (circles.size() != 1 || !pts.empty() || !lines.empty()) bad("disk_complement");
                if (circles[0]->side != CircleSide::Hole) bad("disk_complement side");
                model_center_ = circles[0]->center;
                model_radius_ = circles[0]->radius;
                break;
        }
    }
}

Domain Domain::from_model(ModelTag tag, Complex a, Complex b, double d, double m) {
    std::vector<BoundaryPrimitive> prims;
    switch (tag) {
        case ModelTag::UnitDisk:
            prims = {CirclePrimitive{{0, 0}, 1.0, CircleSide::Complement}};
            break;
        case ModelTag::PuncturedUnitDisk:
            prims = {PointPrimitive{{0, 0}}, CirclePrimitive{{0, 0}, 1.0, CircleSide::Complement}};
            break;
        case ModelTag::PuncturedPlane:
            prims = {PointPrimitive{a}};
            break;
        case ModelTag::TwicePuncturedPlane:
            prims = {PointPrimitive{a}, PointPrimitive{b}};
            break;
        case ModelTag::Annulus:
            prims = {CirclePrimitive{a, d * std::exp(-m), CircleSide::Hole},
                     CirclePrimitive{a, d * std::exp(m), CircleSide::Complement}};
            break;
        case ModelTag::HalfPlane:
            prims = {LinePrimitive{{0, 0}, {1, 0}}};
            break;
        case ModelTag::DiskComplement:
            prims = {CirclePrimitive{a, d, CircleSide::Hole}};
            break;
        case ModelTag::PuncturedDisk:
            prims = {PointPrimitive{a}, CirclePrimitive{a, d, CircleSide::Complement}};
            break;
    }
    return Domain(std::move(prims), tag);
}

bool Domain::contains(Complex z) const {
    for (const auto& prim : primitives_) {
        if (const auto* pt = std::get_if<PointPrimitive>(&prim)) {
            if (z == pt->p) return false;
        } else if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
            const double rho = std::abs(z - c->center);
            if (c->side == CircleSide::Hole ? rho <= c->radius : rho >= c->radius) return false;
        } else {
            if (line_distance(std::get<LinePrimitive>(prim), z) <= 0.0) return false;
        }
    }
    return true;
}

double Domain::delta(Complex z) const {
    if (!contains(z)) throw DomainError("point is not in the domain");
    double d = kInf;
    for (const auto& prim : primitives_) d = std::min(d, primitive_curve_distance(prim, z));
    return d;
}

NearBoundarySet Domain::nearest_boundary_points(Complex z, double tol) const {
    NearBoundarySet out;
    out.distance = delta(z);
    if (tol < 0) tol = 1e-9 * (1.0 + out.distance);
    for (const auto& prim : primitives_) {
        Complex w;
        if (const auto* pt = std::get_if<PointPrimitive>(&prim)) {
            w = pt->p;
        } else if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
            const double rho = std::abs(z - c->center);
            w = (rho > 0) ? c->center + c->radius * (z - c->center) / rho
                          : c->center + Complex(c->radius, 0);
        } else {
            w = line_foot(std::get<LinePrimitive>(prim), z);
        }
        if (std::abs(std::abs(z - w) - out.distance) <= tol) {
            bool dup = false;
            for (Complex seen : out.witnesses)
                if (std::abs(seen - w) <= tol) dup = true;
            if (!dup) out.witnesses.push_back(w);
        }
    }
    return out;
}

std::vector<Complex> Domain::complement_points() const {
    std::vector<Complex> pts;
    for (const auto& prim : primitives_) {
        if (const auto* pt = std::get_if<PointPrimitive>(&prim)) pts.push_back(pt->p);
        if (const auto* c = std::get_if<CirclePrimitive>(&prim))
            if (c->side == CircleSide::Hole) pts.push_back(c->center);
    }
    return pts;
}

namespace {

// Distance between the circle S(o; s) and a primitive's curve.
double circle_to_primitive_distance(Complex o, double s, const BoundaryPrimitive& prim) {
    if (const auto* pt = std::get_if<PointPrimitive>(&prim))
        return std::abs(std::abs(pt->p - o) - s);
    if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
        const double dc = std::abs(c->center - o);
        const double lo = std::abs(dc - c->radius), hi = dc + c->radius;
        if (s >= lo && s <= hi) return 0.0;
        return s < lo ? lo - s : s - hi;
    }
    const auto& l = std::get<LinePrimitive>(prim);
    return std::max(0.0, line_distance(l, o) - s);
}

}  // namespace

AnnulusInDomain annulus_in_domain(const Domain& dom, const Annulus& a) {
    AnnulusInDomain out;
    const Complex o = a.center();
    const double r_in = a.inner_radius();
    const double r_out = a.outer_radius();

    bool inside_ok = true;
    for (const auto& prim : dom.primitives()) {
        // Interval of distances from o achieved over the primitive's
        // complement region; it must avoid the open shell (r_in, r_out).
        double lo = 0, hi = 0;
        if (const auto* pt = std::get_if<PointPrimitive>(&prim)) {
            lo = hi = std::abs(pt->p - o);
        } else if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
            const double dc = std::abs(c->center - o);
            if (c->side == CircleSide::Hole) {
                lo = std::max(0.0, dc - c->radius);
                hi = dc + c->radius;
            } else {
                lo = dc < c->radius ? c->radius - dc : 0.0;
                hi = kInf;
            }
        } else {
            lo = line_distance(std::get<LinePrimitive>(prim), o);
            hi = kInf;
        }
        const double reltol = 1e-12;
        const bool meets_shell = lo < r_out * (1 - reltol) && hi > r_in * (1 + reltol);
        if (meets_shell) inside_ok = false;
    }
    if (dom.contains(o)) inside_ok = false;  // the center must lie in the complement
    out.in_domain = inside_ok;

    const double scale = std::isfinite(r_out) ? r_out : std::max(r_in, 1.0);
    const double touch_tol = 1e-9 * (1.0 + scale);
    if (r_in > 0) {
        for (const auto& prim : dom.primitives())
            if (circle_to_primitive_distance(o, r_in, prim) <= touch_tol) out.inner_touches = true;
    }
    if (std::isfinite(r_out)) {
        for (const auto& prim : dom.primitives())
            if (circle_to_primitive_distance(o, r_out, prim) <= touch_tol) out.outer_touches = true;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Domain specification files (JSON syntax).
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

const std::vector<std::pair<std::string, ModelTag>> kModelNames = {
    {"unit_disk", ModelTag::UnitDisk},
    {"punctured_unit_disk", ModelTag::PuncturedUnitDisk},
    {"punctured_plane", ModelTag::PuncturedPlane},
    {"twice_punctured_plane", ModelTag::TwicePuncturedPlane},
    {"annulus", ModelTag::Annulus},
    {"half_plane", ModelTag::HalfPlane},
    {"disk_complement", ModelTag::DiskComplement},
    {"punctured_disk", ModelTag::PuncturedDisk},
};

Complex parse_point(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("point must be [x, y]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Domain parse_domain_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw DomainError(std::string("bad domain file: ") + e.what());
    }
    std::optional<ModelTag> model;
    if (j.contains("model")) {
        const std::string name = j["model"].get<std::string>();
        for (const auto& [n, tag] : kModelNames)
            if (n == name) model = tag;
        if (!model) throw DomainError("unknown model tag: " + name);
    }

    std::vector<BoundaryPrimitive> prims;
    if (j.contains("points"))
        for (const auto& p : j["points"]) prims.push_back(PointPrimitive{parse_point(p)});
    if (j.contains("circles")) {
        for (const auto& c : j["circles"]) {
            CirclePrimitive cp;
            cp.center = parse_point(c.at("center"));
            cp.radius = c.at("radius").get<double>();
            const std::string side = c.value("side", "hole");
            if (side == "hole") cp.side = CircleSide::Hole;
            else if (side == "complement") cp.side = CircleSide::Complement;
            else throw DomainError("circle side must be 'hole' or 'complement'");
            prims.push_back(cp);
        }
    }
    if (j.contains("lines")) {
        for (const auto& l : j["lines"]) {
            LinePrimitive lp;
            lp.point = parse_point(l.at("point"));
            lp.direction = parse_point(l.at("direction"));
            const double n = std::abs(lp.direction);
            if (!(n > 0)) throw DomainError("line direction must be nonzero");
            lp.direction /= n;
            prims.push_back(lp);
        }
    }

    if (prims.empty()) {
        if (!model) throw DomainError("domain file has neither model nor primitives");
        const json params = j.value("params", json::object());
        const Complex a = params.contains("a") ? parse_point(params["a"])
                        : params.contains("center") ? parse_point(params["center"])
                                                    : Complex(0, 0);
        const Complex b = params.contains("b") ? parse_point(params["b"]) : Complex(1, 0);
        const double radius = params.value("radius", params.value("center_radius", 1.0));
        const double half_mod = params.value("half_modulus", 1.0);
        return Domain::from_model(*model, a, b, radius, half_mod);
    }
    return Domain(std::move(prims), model);
}

Domain load_domain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open domain file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_domain_json(ss.str());
}

std::string domain_to_json(const Domain& dom) {
    json j;
    if (dom.model_tag()) {
        for (const auto& [n, tag] : kModelNames)
            if (tag == *dom.model_tag()) j["model"] = n;
    }
    json points = json::array(), circles = json::array(), lines = json::array();
    for (const auto& prim : dom.primitives()) {
        if (const auto* pt = std::get_if<PointPrimitive>(&prim)) {
            points.push_back({pt->p.real(), pt->p.imag()});
        } else if (const auto* c = std::get_if<CirclePrimitive>(&prim)) {
            circles.push_back({{"center", {c->center.real(), c->center.imag()}},
                               {"radius", c->radius},
                               {"side", c->side == CircleSide::Hole ? "hole" : "complement"}});
        } else {
            const auto& l = std::get<LinePrimitive>(prim);
            lines.push_back({{"point", {l.point.real(), l.point.imag()}},
                             {"direction", {l.direction.real(), l.direction.imag()}}});
        }
    }
    if (!points.empty()) j["points"] = points;
    if (!circles.empty()) j["circles"] = circles;
    if (!lines.empty()) j["lines"] = lines;
    return j.dump(2);
}

}  // namespace cmet
