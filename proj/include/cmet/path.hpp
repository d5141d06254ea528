#pragma once

#include <vector>

#include "cmet/error.hpp"
#include "cmet/util.hpp"

namespace cmet {

// Ordered vertex sequence describing a piecewise-linear path in the plane.
// Parameters run over [0, segment_count()]; the integer part selects the
// segment and the fractional part interpolates along it.
class PathPolyline {
  public:
    PathPolyline() = default;
    explicit PathPolyline(std::vector<Complex> vertices);

    const std::vector<Complex>& vertices() const { return vertices_; }
    std::size_t segment_count() const { return vertices_.size() - 1; }

    Complex front() const { return vertices_.front(); }
    Complex back() const { return vertices_.back(); }

    Complex point_at(double t) const;
    double max_param() const { return static_cast<double>(segment_count()); }

    double euclidean_length() const;

    PathPolyline reversed() const;
    // Subpath between parameters t0 <= t1; cut points become vertices.
    PathPolyline subpath(double t0, double t1) const;
    // Concatenation; drops a duplicated junction vertex.
    PathPolyline concat(const PathPolyline& tail) const;

  private:
    std::vector<Complex> vertices_;
};

}  // namespace cmet
