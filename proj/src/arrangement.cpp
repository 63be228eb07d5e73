#include "braidmono/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace braidmono {

complexd puncture_position(const Params& params, const PunctureLabel& label, complexd t) {
  if (label.is_origin()) return {0.0, 0.0};
  return -omega(params.m, label.j) * (1.0 + omega(params.n, label.l) * t);
}

Fiber fiber(const Params& params, complexd t) {
  Fiber f;
  f.params = params;
  f.t = t;
  f.positions.reserve(params.strand_count());
  for (int i = 0; i < params.strand_count(); ++i)
    f.positions.push_back(puncture_position(params, label_at(params, i), t));
  return f;
}

double min_gap(const Fiber& f) {
  double best = std::numeric_limits<double>::infinity();
  const auto& z = f.positions;
  for (size_t a = 0; a < z.size(); ++a)
    for (size_t b = a + 1; b < z.size(); ++b)
      best = std::min(best, std::abs(z[a] - z[b]));
  return best;
}

complexd coincidence_pk(int m, int k) {
  if (2 * k == m) throw BadSite("p_k undefined for k = m/2");
  return complexd(0.0, std::tan(static_cast<double>(k) * kPi / static_cast<double>(m)));
}

std::vector<complexd> coincidence_closed_form_n2(int m) {
  std::vector<complexd> pts = {complexd(-1.0, 0.0), complexd(1.0, 0.0)};
  for (int j = 0; j < m; ++j) {
    if (2 * j == m) continue;
    pts.push_back(coincidence_pk(m, j));  // j = 0 contributes 0
  }
  std::sort(pts.begin(), pts.end(), [](complexd a, complexd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return pts;
}

namespace {

// Blocks of labels sharing a position value at t, tolerance tol.
// Singletons are dropped; ordering inside a block is by argument about the
// block centroid at the nearby parameter t_order.
std::vector<std::vector<PunctureLabel>> blocks_at(const Params& params, complexd xi,
                                                  complexd t_order, double tol,
                                                  bool* touches_origin) {
  const Fiber f = fiber(params, xi);
  const Fiber g = fiber(params, t_order);
  const int N = params.strand_count();
  std::vector<int> group(N, -1);
  int next_group = 0;
  // Root labels only; the origin is recorded via the flag.
  for (int a = 1; a < N; ++a) {
    if (group[a] >= 0) continue;
    group[a] = next_group;
    for (int b = a + 1; b < N; ++b)
      if (group[b] < 0 && std::abs(f.positions[a] - f.positions[b]) <= tol) group[b] = next_group;
    ++next_group;
  }
  if (touches_origin) *touches_origin = false;
  std::vector<std::vector<PunctureLabel>> blocks;
  for (int gidx = 0; gidx < next_group; ++gidx) {
    std::vector<int> members;
    for (int a = 1; a < N; ++a)
      if (group[a] == gidx) members.push_back(a);
    if (members.size() < 2) continue;
    if (touches_origin && std::abs(f.positions[members.front()]) <= tol) *touches_origin = true;
    complexd centroid = 0.0;
    for (int a : members) centroid += g.positions[a];
    centroid /= static_cast<double>(members.size());
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return std::arg(g.positions[a] - centroid) < std::arg(g.positions[b] - centroid);
    });
    std::vector<PunctureLabel> blk;
    blk.reserve(members.size());
    for (int a : members) blk.push_back(label_at(params, a));
    blocks.push_back(std::move(blk));
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return blocks;
}

}  // namespace

std::vector<CoincidencePoint> coincidence_locus(const Params& params) {
  const int N = params.strand_count();
  std::vector<complexd> raw;
  for (int a = 1; a < N; ++a) {
    const PunctureLabel la = label_at(params, a);
    const complexd sa = omega(params.m, la.j) * omega(params.n, la.l);
    for (int b = a + 1; b < N; ++b) {
      const PunctureLabel lb = label_at(params, b);
      const complexd sb = omega(params.m, lb.j) * omega(params.n, lb.l);
      const complexd denom = sa - sb;
      if (std::abs(denom) < 1e-14) continue;  // parallel branches never meet
      raw.push_back((omega(params.m, lb.j) - omega(params.m, la.j)) / denom);
    }
  }
  std::sort(raw.begin(), raw.end(), [](complexd a, complexd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<complexd> points;
  for (complexd t : raw) {
    if (!points.empty() && std::abs(points.back() - t) <= kClusterTol) continue;
    bool merged = false;
    for (complexd p : points)
      if (std::abs(p - t) <= kClusterTol) {
        merged = true;
        break;
      }
    if (!merged) points.push_back(t);
  }
  // Ordering radius: partitions are read off at a parameter nudged away from
  // the point by a fraction of the local gap.
  double gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t k = i + 1; k < points.size(); ++k)
      gap = std::min(gap, std::abs(points[i] - points[k]));
  const double h = std::min(1e-3, (std::isfinite(gap) ? gap : 1.0) / 16.0);

  std::vector<CoincidencePoint> out;
  out.reserve(points.size());
  for (complexd xi : points) {
    CoincidencePoint cp;
    cp.xi = xi;
    cp.blocks = blocks_at(params, xi, xi + h * unit_root(0.08), kClusterTol, &cp.includes_origin);
    out.push_back(std::move(cp));
  }
  return out;
}

std::vector<std::vector<PunctureLabel>> partition_at(const Params& params, complexd xi,
                                                     double tol) {
  const auto locus = coincidence_locus(params);
  const CoincidencePoint* hit = nullptr;
  for (const auto& cp : locus)
    if (std::abs(cp.xi - xi) <= tol && (!hit || std::abs(cp.xi - xi) < std::abs(hit->xi - xi)))
      hit = &cp;
  if (!hit) throw NotACoincidencePoint("no confluence within tolerance of the given parameter");
  return hit->blocks;
}

}  // namespace braidmono
