#include "cmet/path.hpp"

#include <algorithm>
#include <cmath>

namespace cmet {

PathPolyline::PathPolyline(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw ParamError("polyline needs at least 2 vertices");
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
        if (vertices_[i] == vertices_[i + 1])
            throw ParamError("polyline has duplicated consecutive vertices");
    }
}

Complex PathPolyline::point_at(double t) const {
    if (t <= 0.0) return vertices_.front();
    const double tmax = max_param();
    if (t >= tmax) return vertices_.back();
    const auto seg = static_cast<std::size_t>(std::floor(t));
    const double f = t - static_cast<double>(seg);
    return vertices_[seg] + f * (vertices_[seg + 1] - vertices_[seg]);
}

double PathPolyline::euclidean_length() const {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        len += std::abs(vertices_[i + 1] - vertices_[i]);
    return len;
}

PathPolyline PathPolyline::reversed() const {
    std::vector<Complex> rev(vertices_.rbegin(), vertices_.rend());
    return PathPolyline(std::move(rev));
}

PathPolyline PathPolyline::subpath(double t0, double t1) const {
    t0 = std::clamp(t0, 0.0, max_param());
    t1 = std::clamp(t1, 0.0, max_param());
    if (t1 < t0) std::swap(t0, t1);
    std::vector<Complex> vs;
    vs.push_back(point_at(t0));
    const auto first = static_cast<std::size_t>(std::floor(t0)) + 1;
    for (std::size_t i = first; i < vertices_.size() && static_cast<double>(i) < t1; ++i) {
        if (vertices_[i] != vs.back()) vs.push_back(vertices_[i]);
    }
    const Complex end = point_at(t1);
    if (end != vs.back()) vs.push_back(end);
    if (vs.size() < 2) throw ParamError("empty subpath");
    return PathPolyline(std::move(vs));
}

PathPolyline PathPolyline::concat(const PathPolyline& tail) const {
    std::vector<Complex> vs = vertices_;
    std::size_t start = (tail.vertices_.front() == vs.back()) ? 1 : 0;
    for (std::size_t i = start; i < tail.vertices_.size(); ++i) {
        if (tail.vertices_[i] != vs.back()) vs.push_back(tail.vertices_[i]);
    }
    return PathPolyline(std::move(vs));
}

}  // namespace cmet
