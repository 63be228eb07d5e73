#include "braidmono/tpath.hpp"

#include <algorithm>
#include <cmath>

namespace braidmono {

TPath& TPath::append(const TPath& other) {
  if (vertices.empty()) {
    vertices = other.vertices;
    return *this;
  }
  if (other.vertices.empty()) return *this;
  if (std::abs(vertices.back() - other.vertices.front()) > 1e-12)
    throw Error("appending paths with mismatched endpoints");
  vertices.insert(vertices.end(), other.vertices.begin() + 1, other.vertices.end());
  return *this;
}

TPath TPath::reversed() const {
  TPath out;
  out.vertices.assign(vertices.rbegin(), vertices.rend());
  return out;
}

namespace {

// Arc center + r*e^{i a}, a from a0 to a1, with segment density taken from a
// full circle of `per_turn` vertices.
void push_arc(TPath& p, complexd center, double r, double a0, double a1, int per_turn) {
  const double span = a1 - a0;
  const int steps = std::max(1, static_cast<int>(std::lround(std::abs(span) / (2.0 * kPi) *
                                                             static_cast<double>(per_turn))));
  for (int s = 0; s <= steps; ++s) {
    const complexd v = center + std::polar(r, a0 + span * s / steps);
    if (!p.vertices.empty() && std::abs(p.vertices.back() - v) < 1e-15) continue;
    p.vertices.push_back(v);
  }
}

void push_segment(TPath& p, complexd a, complexd b) {
  if (p.vertices.empty()) p.vertices.push_back(a);
  p.vertices.push_back(b);
}

// Lower coincidence points on the negative imaginary axis, nearest first.
std::vector<complexd> lower_axis_points(const Params& params) {
  const int m = params.m;
  const int r = (m - 1) / 2;
  std::vector<complexd> pts;
  for (int k = r + 1; k <= m - 1; ++k) {
    if (2 * k == m) continue;
    pts.push_back(coincidence_pk(m, k));
  }
  std::sort(pts.begin(), pts.end(),
            [](complexd a, complexd b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  return pts;
}

std::vector<complexd> upper_axis_points(const Params& params) {
  const int m = params.m;
  const int r = (m - 1) / 2;
  std::vector<complexd> pts;
  for (int k = 1; k <= r; ++k) pts.push_back(coincidence_pk(m, k));
  std::sort(pts.begin(), pts.end(), [](complexd a, complexd b) { return a.imag() < b.imag(); });
  return pts;
}

void check_eps(const Params& params, double eps) {
  if (!(eps > 0.0)) throw BadEps("eps must be positive");
  std::vector<complexd> pts = coincidence_closed_form_n2(params.m);
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) gap = std::min(gap, std::abs(pts[i] - pts[j]));
  if (!(eps < gap / 4.0)) throw BadEps("eps too large for the coincidence set clearance");
}

}  // namespace

double default_eps(const Params& params) {
  std::vector<complexd> pts = coincidence_closed_form_n2(params.m);
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) gap = std::min(gap, std::abs(pts[i] - pts[j]));
  return std::min(0.1, gap / 4.0 * 0.999);
}

TPath figure1_loop(const Params& params, const LoopSite& site, double eps, int circle_segments) {
  if (params.n != 2) throw BadSite("figure-1 loops are defined for n = 2");
  TPath p;
  const complexd base(0.0, -eps);

  if (std::holds_alternative<BigCircle>(site)) {
    const double R = std::get<BigCircle>(site).radius;
    const int per = circle_segments == kCircleSegments ? kBigCircleSegments : circle_segments;
    push_arc(p, 0.0, R, -kPi / 2.0, 3.0 * kPi / 2.0, per);
    return p;
  }

  check_eps(params, eps);

  if (std::holds_alternative<OriginLoop>(site)) {
    push_arc(p, 0.0, eps, -kPi / 2.0, 3.0 * kPi / 2.0, circle_segments);
    return p;
  }

  if (std::holds_alternative<EtaLoop>(site)) {
    const int eta = std::get<EtaLoop>(site).eta;
    if (eta != 1 && eta != -1) throw BadSite("eta must be +-1");
    TPath approach;
    // Quarter arc mu^eta_{1/2} from -eps*i to eta*eps, then along the real
    // axis to eta*(1-eps).
    if (eta > 0)
      push_arc(approach, 0.0, eps, -kPi / 2.0, 0.0, circle_segments);
    else
      push_arc(approach, 0.0, eps, -kPi / 2.0, -kPi, circle_segments);
    push_segment(approach, approach.vertices.back(), complexd(eta * (1.0 - eps), 0.0));
    p = approach;
    // Positive tour around eta, entering at angle pi (for eta=+1) resp. 0.
    const double a0 = eta > 0 ? kPi : 0.0;
    push_arc(p, complexd(eta, 0.0), eps, a0, a0 + 2.0 * kPi, circle_segments);
    p.append(approach.reversed());
    return p;
  }

  const int k = std::get<PkLoop>(site).k;
  const int m = params.m;
  const int r = (m - 1) / 2;
  if (k < 1 || k > m - 1 || 2 * k == m) throw BadSite("invalid p_k index");

  const complexd target = coincidence_pk(m, k);
  TPath approach;
  if (k > r) {
    // Downward: detour each nearer point by a positive half circle (entered
    // from above, exited below, passing the left side).
    approach.vertices.push_back(base);
    complexd cur = base;
    for (complexd q : lower_axis_points(params)) {
      if (std::abs(q.imag()) >= std::abs(target.imag()) - 1e-12) break;
      push_segment(approach, cur, q + complexd(0.0, eps));
      push_arc(approach, q, eps, kPi / 2.0, 3.0 * kPi / 2.0, circle_segments);
      cur = q - complexd(0.0, eps);
    }
    push_segment(approach, cur, target + complexd(0.0, eps));
    p = approach;
    push_arc(p, target, eps, kPi / 2.0, kPi / 2.0 + 2.0 * kPi, circle_segments);
  } else {
    // Upward: half turn around the origin through +eps first, then detour
    // each intermediate point by a positive half circle (entered from below,
    // exited above, passing the right side).
    push_arc(approach, 0.0, eps, -kPi / 2.0, kPi / 2.0, circle_segments);
    complexd cur = complexd(0.0, eps);
    for (complexd q : upper_axis_points(params)) {
      if (q.imag() >= target.imag() - 1e-12) break;
      push_segment(approach, cur, q - complexd(0.0, eps));
      push_arc(approach, q, eps, -kPi / 2.0, kPi / 2.0, circle_segments);
      cur = q + complexd(0.0, eps);
    }
    push_segment(approach, cur, target - complexd(0.0, eps));
    p = approach;
    push_arc(p, target, eps, -kPi / 2.0, -kPi / 2.0 + 2.0 * kPi, circle_segments);
  }
  p.append(approach.reversed());
  return p;
}

TPath axis_ascent(const Params& params, double radius, double eps, int circle_segments) {
  TPath p;
  p.vertices.push_back(complexd(0.0, -radius));
  complexd cur = p.vertices.back();
  auto lower = lower_axis_points(params);
  std::reverse(lower.begin(), lower.end());  // farthest first on the way up
  for (complexd q : lower) {
    if (std::abs(q.imag()) >= radius) continue;
    push_segment(p, cur, q - complexd(0.0, eps));
    push_arc(p, q, eps, -kPi / 2.0, kPi / 2.0, circle_segments);
    cur = q + complexd(0.0, eps);
  }
  push_segment(p, cur, complexd(0.0, -eps));
  return p;
}

PathReport validate_path(const Params& params, const TPath& path, double delta) {
  std::vector<complexd> pts;
  for (const auto& cp : coincidence_locus(params)) pts.push_back(cp.xi);
  PathReport rep;
  rep.min_distance = std::numeric_limits<double>::infinity();
  for (size_t s = 0; s + 1 < path.vertices.size(); ++s)
    for (complexd q : pts) {
      const double d = point_segment_distance(q, path.vertices[s], path.vertices[s + 1]);
      if (d < rep.min_distance) {
        rep.min_distance = d;
        rep.worst_point = q;
      }
    }
  rep.pass = rep.min_distance >= delta;
  return rep;
}

std::vector<LoopSite> theorem_sites(const Params& params) {
  std::vector<LoopSite> sites;
  sites.push_back(OriginLoop{});
  sites.push_back(EtaLoop{+1});
  sites.push_back(EtaLoop{-1});
  for (int k = 1; k <= params.m - 1; ++k) {
    if (2 * k == params.m) continue;
    sites.push_back(PkLoop{k});
  }
  return sites;
}

}  // namespace braidmono
