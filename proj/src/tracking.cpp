#include "braidmono/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace braidmono {

Trajectories& Trajectories::concat(const Trajectories& other) {
  if (pos.size() != other.pos.size()) throw IndexMismatch("concat: strand counts differ");
  for (size_t a = 0; a < pos.size(); ++a)
    if (std::abs(pos[a].back() - other.pos[a].front()) > 1e-9)
      throw Error("concat: configurations do not line up");
  const size_t n1 = breaks.size() - 1, n2 = other.breaks.size() - 1;
  const double w = static_cast<double>(n1) / static_cast<double>(n1 + n2);
  for (double& u : breaks) u *= w;
  for (size_t k = 1; k < other.breaks.size(); ++k)
    breaks.push_back(w + (1.0 - w) * other.breaks[k]);
  for (size_t a = 0; a < pos.size(); ++a)
    pos[a].insert(pos[a].end(), other.pos[a].begin() + 1, other.pos[a].end());
  return *this;
}

Trajectories Trajectories::reversed() const {
  Trajectories out;
  out.params = params;
  out.breaks.reserve(breaks.size());
  for (auto it = breaks.rbegin(); it != breaks.rend(); ++it) out.breaks.push_back(1.0 - *it);
  out.pos.resize(pos.size());
  for (size_t a = 0; a < pos.size(); ++a) out.pos[a].assign(pos[a].rbegin(), pos[a].rend());
  return out;
}

Trajectories track(const Params& params, const TPath& path) {
  if (path.vertices.size() < 1) throw Error("empty path");
  const int N = params.strand_count();
  Trajectories traj;
  traj.params = params;
  const size_t S = path.vertices.size();
  traj.breaks.resize(S);
  for (size_t k = 0; k < S; ++k)
    traj.breaks[k] = S == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(S - 1);
  traj.pos.assign(N, std::vector<complexd>(S));
  for (int a = 0; a < N; ++a) {
    const PunctureLabel lab = label_at(params, a);
    for (size_t k = 0; k < S; ++k) traj.pos[a][k] = puncture_position(params, lab, path.vertices[k]);
  }
  // The branches are affine in t, so a pairwise collision inside a segment
  // shows up as a root of an affine difference.
  for (size_t k = 0; k + 1 < S; ++k)
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        const complexd d0 = traj.pos[a][k] - traj.pos[b][k];
        const complexd d1 = traj.pos[a][k + 1] - traj.pos[b][k + 1];
        const complexd dd = d1 - d0;
        double s = 0.0;
        const double den = sq_abs(dd);
        if (den > 0.0)
          s = std::clamp(-(d0.real() * dd.real() + d0.imag() * dd.imag()) / den, 0.0, 1.0);
        if (std::abs(d0 + s * dd) < 1e-9)
          throw PathThroughCoincidence("strands collide along the path");
      }
  return traj;
}

namespace {

struct RawEvent {
  double u;
  int a, b;  // label indices, a < b
};

// Exactly symmetric arrangements keep strand triples collinear for every u,
// so every projection direction sees simultaneous ties. A deterministic
// per-strand offset far below all clearances resolves them without changing
// the isotopy class.
complexd strand_nudge(int label, double scale) {
  constexpr double golden = 0.6180339887498949;
  return 1e-8 * scale * unit_root(golden * static_cast<double>(label + 1));
}

double position_scale(const Trajectories& traj) {
  double scale = 1.0;
  for (const auto& strand : traj.pos)
    for (complexd z : strand) scale = std::max(scale, std::abs(z));
  return scale;
}

// Events and genericity checks for one breakpoint interval.
void scan_interval(const Trajectories& traj, complexd rot, double scale, double tie_tol, size_t k,
                   std::vector<RawEvent>& out, bool& degenerate) {
  const int N = traj.strand_count();
  const double u0 = traj.breaks[k], u1 = traj.breaks[k + 1];
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      const complexd nd = strand_nudge(a, scale) - strand_nudge(b, scale);
      const complexd d0 = rot * (traj.pos[a][k] - traj.pos[b][k] + nd);
      const complexd d1 = rot * (traj.pos[a][k + 1] - traj.pos[b][k + 1] + nd);
      const double f0 = d0.real(), f1 = d1.real();
      if (std::abs(f0) <= tie_tol || std::abs(f1) <= tie_tol) {
        degenerate = true;
        return;
      }
      if ((f0 > 0.0) == (f1 > 0.0)) continue;
      const double s = f0 / (f0 - f1);
      const complexd at = d0 + s * (d1 - d0);
      if (std::abs(at.imag()) <= tie_tol) {  // projections meet head-on
        degenerate = true;
        return;
      }
      out.push_back(RawEvent{u0 + s * (u1 - u0), a, b});
    }
}

std::vector<RawEvent> collect_raw(const Trajectories& traj, double theta, bool parallel) {
  const complexd rot = std::polar(1.0, -theta);
  const double scale = position_scale(traj);
  const double tie_tol = 1e-12 * scale;
  const size_t K = traj.breaks.size() - 1;
  std::vector<std::vector<RawEvent>> per(K);
  std::vector<char> bad(K, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (size_t k = 0; k < K; ++k) {
    bool degenerate = false;
    scan_interval(traj, rot, scale, tie_tol, k, per[k], degenerate);
    if (degenerate) bad[k] = 1;
  }
  (void)parallel;
  for (size_t k = 0; k < K; ++k)
    if (bad[k]) throw NonGenericProjection("projection direction is degenerate for a segment");
  std::vector<RawEvent> all;
  for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end(), [](const RawEvent& x, const RawEvent& y) {
    if (x.u != y.u) return x.u < y.u;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return all;
}

std::vector<CrossingEvent> process_events(const Trajectories& traj, double theta,
                                          const std::vector<RawEvent>& raw) {
  const std::vector<int> order = start_order(traj, theta);
  const int N = traj.strand_count();
  std::vector<int> slot_of(N);
  for (int s = 0; s < N; ++s) slot_of[order[s]] = s;

  const double u_tol = 1e-12;
  std::vector<CrossingEvent> events;
  size_t i = 0;
  while (i < raw.size()) {
    size_t j = i + 1;
    while (j < raw.size() && raw[j].u - raw[i].u <= u_tol) ++j;
    // Equal-instant events must be strand-disjoint transpositions; they are
    // applied in slot order.
    std::vector<size_t> cluster(j - i);
    std::iota(cluster.begin(), cluster.end(), i);
    for (size_t x = i; x < j; ++x)
      for (size_t y = x + 1; y < j; ++y)
        if (raw[x].a == raw[y].a || raw[x].a == raw[y].b || raw[x].b == raw[y].a ||
            raw[x].b == raw[y].b)
          throw NonGenericProjection("simultaneous crossings share a strand");
    std::sort(cluster.begin(), cluster.end(), [&](size_t x, size_t y) {
      return std::min(slot_of[raw[x].a], slot_of[raw[x].b]) <
             std::min(slot_of[raw[y].a], slot_of[raw[y].b]);
    });
    for (size_t idx : cluster) {
      const RawEvent& ev = raw[idx];
      const int sa = slot_of[ev.a], sb = slot_of[ev.b];
      if (std::abs(sa - sb) != 1)
        throw NonGenericProjection("crossing between non-adjacent projections");
      const int left_label = sa < sb ? ev.a : ev.b;
      const int right_label = sa < sb ? ev.b : ev.a;
      // Interpolate the rotated Im at the crossing instant.
      const complexd rot = std::polar(1.0, -theta);
      const double scale = position_scale(traj);
      size_t seg = 0;
      while (seg + 2 < traj.breaks.size() && traj.breaks[seg + 1] <= ev.u) ++seg;
      const double du = traj.breaks[seg + 1] - traj.breaks[seg];
      const double s = du > 0.0 ? (ev.u - traj.breaks[seg]) / du : 0.0;
      auto im_at = [&](int lab) {
        const complexd z = traj.pos[lab][seg] + s * (traj.pos[lab][seg + 1] - traj.pos[lab][seg]) +
                           strand_nudge(lab, scale);
        return (rot * z).imag();
      };
      const int sign = im_at(left_label) < im_at(right_label) ? +1 : -1;
      events.push_back(CrossingEvent{ev.u, std::min(sa, sb), sign});
      std::swap(slot_of[ev.a], slot_of[ev.b]);
    }
    i = j;
  }
  return events;
}

}  // namespace

std::vector<int> start_order(const Trajectories& traj, double theta) {
  const complexd rot = std::polar(1.0, -theta);
  const double scale = position_scale(traj);
  const int N = traj.strand_count();
  std::vector<int> order(N);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const complexd za = rot * (traj.pos[a].front() + strand_nudge(a, scale));
    const complexd zb = rot * (traj.pos[b].front() + strand_nudge(b, scale));
    if (za.real() != zb.real()) return za.real() < zb.real();
    return za.imag() < zb.imag();
  });
  return order;
}

std::vector<CrossingEvent> crossing_events(const Trajectories& traj, double theta, bool parallel) {
  return process_events(traj, theta, collect_raw(traj, theta, parallel));
}

BraidWord extract_braid(const Trajectories& traj, double theta) {
  BraidWord word;
  word.strands = traj.strand_count();
  for (const CrossingEvent& ev : crossing_events(traj, theta))
    word.letters.emplace_back(ev.slot + 1, ev.sign);
  return word;
}

double choose_projection(const Trajectories& traj) {
  for (int k = 0; k < 97; ++k) {
    const double theta = kPi * static_cast<double>(k) / 97.0;
    try {
      extract_braid(traj, theta);
      return theta;
    } catch (const NonGenericProjection&) {
    }
  }
  throw NoGenericProjection("no generic projection direction in the search grid");
}

double choose_projection_common(const std::vector<const Trajectories*>& trajs) {
  for (int k = 0; k < 97; ++k) {
    const double theta = kPi * static_cast<double>(k) / 97.0;
    bool ok = true;
    for (const Trajectories* t : trajs) {
      try {
        extract_braid(*t, theta);
      } catch (const NonGenericProjection&) {
        ok = false;
        break;
      }
    }
    if (ok) return theta;
  }
  throw NoGenericProjection("no projection direction generic for all bundles");
}

std::vector<int> endpoint_permutation(const Trajectories& traj, double theta) {
  const std::vector<int> at_start = start_order(traj, theta);
  const int N = traj.strand_count();
  std::vector<int> slot_at_start(N);
  for (int s = 0; s < N; ++s) slot_at_start[at_start[s]] = s;
  std::vector<int> perm(N, -1);
  std::vector<char> used(N, 0);
  for (int a = 0; a < N; ++a) {
    int hit = -1;
    for (int s = 0; s < N; ++s) {
      if (used[s]) continue;
      if (std::abs(traj.pos[a].back() - traj.pos[at_start[s]].front()) <= kMatchTol) {
        hit = s;
        break;
      }
    }
    if (hit < 0) throw Error("endpoint does not match any start position");
    used[hit] = 1;
    perm[slot_at_start[a]] = hit;
  }
  return perm;
}

}  // namespace braidmono
