// Piecewise-straight paths in the t-plane: the loops issued from the base
// point -eps*i around each coincidence point, and the big circle.
#pragma once

#include <variant>
#include <vector>

#include "braidmono/arrangement.hpp"

namespace braidmono {

struct TPath {
  std::vector<complexd> vertices;  // consecutive vertices of the polyline

  complexd basepoint() const { return vertices.front(); }
  bool closed(double tol = 1e-15) const {
    return vertices.size() >= 2 && std::abs(vertices.front() - vertices.back()) <= tol;
  }
  size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  TPath& append(const TPath& other);  // endpoints must match
  TPath reversed() const;
};

struct OriginLoop {};
struct EtaLoop {
  int eta = 1;  // +1 or -1
};
struct PkLoop {
  int k = 1;  // index into p_k = i tan(k pi/m), k in [1; m-1] \ {m/2}
};
struct BigCircle {
  double radius = 10.0;
};

using LoopSite = std::variant<OriginLoop, EtaLoop, PkLoop, BigCircle>;

// Vertices per full circle; arcs use the proportional share.
inline constexpr int kCircleSegments = 64;
inline constexpr int kBigCircleSegments = 256;

// Default eps: min(0.1, min-gap of the coincidence set / 4).
double default_eps(const Params& params);

// The loop of the given site from base point -eps*i (n = 2 geometry).
// BigCircle is the plain circle of the given radius from -R*i.
TPath figure1_loop(const Params& params, const LoopSite& site, double eps,
                   int circle_segments = kCircleSegments);

// Open path from -R*i up to -eps*i along the imaginary axis, detouring the
// coincidence points in between; used to base the big circle at the standard
// fiber.
TPath axis_ascent(const Params& params, double radius, double eps,
                  int circle_segments = kCircleSegments);

struct PathReport {
  double min_distance = 0.0;
  complexd worst_point;  // coincidence point realizing the minimum
  bool pass = false;
};

// Minimum distance from the path to the coincidence set (origin included).
PathReport validate_path(const Params& params, const TPath& path, double delta);

// All theorem sites for a given m (n = 2): origin, eta = +-1, every p_k.
std::vector<LoopSite> theorem_sites(const Params& params);

}  // namespace braidmono
