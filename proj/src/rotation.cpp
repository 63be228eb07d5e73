#include "braidmono/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

namespace braidmono {

namespace {

int posmod(int a, int m) { return ((a % m) + m) % m; }

struct BlockGeom {
  std::vector<int> members;  // label indices, ccw about the centroid
  complexd centroid;
  bool around_origin = false;
};

double hull_distance_to_point(const std::vector<complexd>& hull, complexd p) {
  if (hull.size() == 1) return std::abs(p - hull[0]);
  // Inside test for convex ccw polygons.
  if (hull.size() >= 3) {
    bool inside = true;
    for (size_t i = 0; i < hull.size(); ++i) {
      const complexd a = hull[i], b = hull[(i + 1) % hull.size()];
      const complexd e = b - a, w = p - a;
      if (e.real() * w.imag() - e.imag() * w.real() < 0.0) {
        inside = false;
        break;
      }
    }
    if (inside) return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < hull.size() || (hull.size() >= 3 && i < hull.size()); ++i)
    best = std::min(best, point_segment_distance(p, hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

BlockGeom block_geometry(const Params& params, const std::vector<complexd>& cfg,
                         const std::vector<PunctureLabel>& block) {
  if (block.size() < 2) throw DegenerateBlock("rotation block needs at least two punctures");
  BlockGeom g;
  for (const PunctureLabel& lab : block) {
    if (lab.is_origin()) throw DegenerateBlock("the origin puncture cannot rotate");
    if (lab.j < 0 || lab.j >= params.m || lab.l < 0 || lab.l >= params.n)
      throw IndexMismatch("block label outside the arrangement");
    g.members.push_back(label_index(params, lab));
  }
  g.centroid = 0.0;
  for (int a : g.members) g.centroid += cfg[a];
  g.centroid /= static_cast<double>(g.members.size());
  std::sort(g.members.begin(), g.members.end(), [&](int a, int b) {
    return std::arg(cfg[a] - g.centroid) < std::arg(cfg[b] - g.centroid);
  });
  const size_t mu = g.members.size();
  double scale = 0.0;
  for (int a : g.members) scale = std::max(scale, std::abs(cfg[a] - g.centroid));
  if (mu == 2) {
    if (std::abs(cfg[g.members[0]] - cfg[g.members[1]]) <= 1e-12)
      throw DegenerateBlock("coincident punctures in a block");
  } else {
    for (size_t c = 0; c < mu; ++c) {
      const complexd a = cfg[g.members[c]];
      const complexd b = cfg[g.members[(c + 1) % mu]];
      const complexd d = cfg[g.members[(c + 2) % mu]];
      const complexd e1 = b - a, e2 = d - b;
      if (e1.real() * e2.imag() - e1.imag() * e2.real() <= 1e-12 * scale * scale)
        throw DegenerateBlock("block punctures are not in strictly convex position");
    }
  }
  std::vector<complexd> hull;
  for (int a : g.members) hull.push_back(cfg[a]);
  g.around_origin = hull_distance_to_point(hull, complexd(0.0, 0.0)) <= 1e-9;
  return g;
}

// Punctures of the ring that a circle-hugging band has to weave around, by
// band coordinate (0 at the clockwise-most end of the span).
struct WeavePoint {
  double s = 0.0;
  double side = 1.0;  // +1 passes radially outside, -1 inside
};

// A pair whose chord spans other punctures sitting near the same circle
// around the origin exchanges along the circle, not along the chord. The
// band bows outward around every l = 1 puncture in its span and inward
// around the others, which is the route the transported tight twists of the
// proof trace out.
// out_l picks which puncture family the band bows outward around; it is
// fixed from the configuration the rotation starts at (the label sitting at
// the counterclockwise end of the span) so that every later pass retraces
// the same corridor.
bool ring_route_applies(const Params& params, const std::vector<complexd>& cfg,
                        const BlockGeom& g, int out_l, int& cw_end,
                        std::vector<WeavePoint>& weave) {
  const complexd v0 = cfg[g.members[0]], v1 = cfg[g.members[1]];
  const double r0 = std::abs(v0), r1 = std::abs(v1);
  if (r0 < 1e-9 || r1 < 1e-9) return false;
  double d = std::fmod(std::arg(v1) - std::arg(v0) + 4.0 * kPi, 2.0 * kPi);
  cw_end = 0;
  if (d > kPi) {
    d = 2.0 * kPi - d;
    cw_end = 1;
  }
  if (d < 1e-3 || d > kPi - 1e-3) return false;
  const double alpha = std::arg(cfg[g.members[cw_end]]);
  const double rlo = 0.6 * std::min(r0, r1), rhi = 1.5 * std::max(r0, r1);
  weave.clear();
  for (size_t b = 0; b < cfg.size(); ++b) {
    if (static_cast<int>(b) == g.members[0] || static_cast<int>(b) == g.members[1]) continue;
    const double rb = std::abs(cfg[b]);
    if (rb < rlo || rb > rhi) continue;
    const double db = std::fmod(std::arg(cfg[b]) - alpha + 4.0 * kPi, 2.0 * kPi);
    if (db > 1e-12 && db < d - 1e-12) {
      const PunctureLabel lab = label_at(params, static_cast<int>(b));
      weave.push_back(WeavePoint{db / d, lab.l == out_l ? 1.0 : -1.0});
    }
  }
  std::sort(weave.begin(), weave.end(), [](const WeavePoint& a, const WeavePoint& b) {
    return a.s < b.s;
  });
  return !weave.empty();
}

// The counterclockwise end of a pair's short span, or -1 when the span is
// degenerate.
int ccw_end_family(const Params& params, const std::vector<complexd>& cfg, const BlockGeom& g) {
  if (g.members.size() != 2) return -1;
  const complexd v0 = cfg[g.members[0]], v1 = cfg[g.members[1]];
  if (std::abs(v0) < 1e-9 || std::abs(v1) < 1e-9) return -1;
  const double d = std::fmod(std::arg(v1) - std::arg(v0) + 4.0 * kPi, 2.0 * kPi);
  const int ccw = d > kPi ? 0 : 1;
  return label_at(params, g.members[ccw]).l;
}

double weave_profile(const std::vector<WeavePoint>& weave, double t) {
  constexpr double amp = 0.10;
  double g = 0.0;
  for (size_t i = 0; i < weave.size(); ++i) {
    double w = 1.0;
    w = std::min(w, 0.9 * weave[i].s);
    w = std::min(w, 0.9 * (1.0 - weave[i].s));
    if (i > 0) w = std::min(w, 0.45 * (weave[i].s - weave[i - 1].s));
    if (i + 1 < weave.size()) w = std::min(w, 0.45 * (weave[i + 1].s - weave[i].s));
    const double x = (t - weave[i].s) / std::max(w, 1e-6);
    if (std::abs(x) < 1.0) g += weave[i].side * amp * 0.5 * (1.0 + std::cos(kPi * x));
  }
  return g;
}

// Motion of one cyclic step (or the fraction frac of one) for every block at
// once, appended onto a fresh position chunk of S+1 grid points.
std::vector<std::vector<complexd>> step_chunk(const Params& params,
                                              const std::vector<complexd>& cfg,
                                              const std::vector<BlockGeom>& blocks,
                                              const std::vector<int>& out_l, int dir,
                                              double frac, int segments_per_turn) {
  const int N = params.strand_count();
  // Shared grid: enough points for the widest angular sweep.
  double max_gap = 0.0;
  for (const BlockGeom& g : blocks) {
    const size_t mu = g.members.size();
    for (size_t c = 0; c < mu; ++c) {
      const size_t t = (c + mu + static_cast<size_t>(dir)) % mu;
      const double a0 = std::arg(cfg[g.members[c]] - g.centroid);
      const double a1 = std::arg(cfg[g.members[t]] - g.centroid);
      double gap = dir > 0 ? a1 - a0 : a0 - a1;
      gap = std::fmod(gap + 4.0 * kPi, 2.0 * kPi);
      if (gap == 0.0) gap = 2.0 * kPi / static_cast<double>(mu);
      max_gap = std::max(max_gap, gap);
    }
  }
  int S = std::max(8, static_cast<int>(std::ceil(
                          segments_per_turn * (max_gap * frac) / (2.0 * kPi))));
  std::vector<std::vector<complexd>> chunk(N, std::vector<complexd>(S + 1));
  for (int a = 0; a < N; ++a)
    for (int s = 0; s <= S; ++s) chunk[a][s] = cfg[a];

  std::set<int> moving;
  for (const BlockGeom& g : blocks)
    for (int a : g.members) moving.insert(a);

  for (size_t gi = 0; gi < blocks.size(); ++gi) {
    const BlockGeom& g = blocks[gi];
    const size_t mu = g.members.size();
    const complexd x = g.centroid;
    int cw_end = 0;
    std::vector<WeavePoint> weave;
    if (!g.around_origin && mu == 2 &&
        ring_route_applies(params, cfg, g, out_l[gi], cw_end, weave)) {
      if (frac < 1.0 && dir < 0)
        throw Error("fractional clockwise ring exchange is not supported");
      const int P = g.members[cw_end], Q = g.members[1 - cw_end];
      const double alpha = std::arg(cfg[P]);
      const double span = std::fmod(std::arg(cfg[Q]) - alpha + 4.0 * kPi, 2.0 * kPi);
      const double rP = std::abs(cfg[P]), rQ = std::abs(cfg[Q]);
      const double sep = dir > 0 ? 0.03 : -0.03;
      for (int s = 1; s <= S; ++s) {
        const double u = frac * s / S;
        const double rA = (rP + (rQ - rP) * u) *
                          (1.0 + weave_profile(weave, u) + sep * std::sin(kPi * u));
        const double rB = (rQ + (rP - rQ) * u) *
                          (1.0 + weave_profile(weave, 1.0 - u) - sep * std::sin(kPi * u));
        chunk[P][s] = std::polar(rA, alpha + span * u);
        chunk[Q][s] = std::polar(rB, alpha + span * (1.0 - u));
      }
      continue;
    }
    for (size_t c = 0; c < mu; ++c) {
      const int lab = g.members[c];
      const int tgt = g.members[(c + mu + static_cast<size_t>(dir)) % mu];
      const complexd v0 = cfg[lab], v1 = cfg[tgt];
      if (g.around_origin) {
        // Arc about the centroid, pulled slightly inward so punctures sitting
        // on the same circle are passed on the origin side.
        const double r0 = std::abs(v0 - x), r1 = std::abs(v1 - x);
        const double a0 = std::arg(v0 - x);
        double gap = dir > 0 ? std::arg(v1 - x) - a0 : a0 - std::arg(v1 - x);
        gap = std::fmod(gap + 4.0 * kPi, 2.0 * kPi);
        if (gap == 0.0) gap = 2.0 * kPi / static_cast<double>(mu);
        const double pull = 0.15;
        for (int s = 1; s <= S; ++s) {
          const double u = frac * s / S;
          const double r = (r0 + (r1 - r0) * u) * (1.0 - pull * std::sin(kPi * u));
          chunk[lab][s] = x + std::polar(r, a0 + dir * gap * u);
        }
      } else {
        // Band along the chord; clearance from everything outside the block
        // bounds the bow height.
        double clearance = std::numeric_limits<double>::infinity();
        for (int b = 0; b < N; ++b) {
          bool foreign = true;
          for (int mem : g.members)
            if (mem == b) foreign = false;
          if (!foreign) continue;
          clearance = std::min(clearance, point_segment_distance(cfg[b], v0, v1));
        }
        const double len = std::abs(v1 - v0);
        double h = 0.2 * std::min(clearance, 0.25 * len);
        complexd side;
        if (mu == 2) {
          side = complexd(0.0, 1.0) * static_cast<double>(dir) * (v0 - x) / std::abs(v0 - x);
        } else {
          complexd n = complexd(0.0, 1.0) * (v1 - v0) / len;
          const complexd mid = 0.5 * (v0 + v1);
          if (n.real() * (mid - x).real() + n.imag() * (mid - x).imag() > 0.0) n = -n;
          side = n;  // inward
          h = std::min(h, 0.3 * point_segment_distance(x, v0, v1));
        }
        for (int s = 1; s <= S; ++s) {
          const double u = frac * s / S;
          chunk[lab][s] = v0 + (v1 - v0) * u + side * (h * std::sin(kPi * u));
        }
      }
    }
  }

  // The construction is supposed to keep everything apart; verify.
  double scale = 1.0;
  for (complexd z : cfg) scale = std::max(scale, std::abs(z));
  for (int s = 0; s <= S; ++s)
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b)
        if (std::abs(chunk[a][s] - chunk[b][s]) <= 1e-11 * scale)
          throw Error("realized rotation brings punctures together");
  return chunk;
}

void check_hulls_disjoint(const std::vector<complexd>& cfg, const std::vector<BlockGeom>& blocks) {
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      double best = std::numeric_limits<double>::infinity();
      const auto& A = blocks[i].members;
      const auto& B = blocks[j].members;
      for (size_t a = 0; a < A.size(); ++a)
        for (size_t b = 0; b < B.size(); ++b) {
          const complexd a0 = cfg[A[a]], a1 = cfg[A[(a + 1) % A.size()]];
          const complexd b0 = cfg[B[b]], b1 = cfg[B[(b + 1) % B.size()]];
          best = std::min({best, point_segment_distance(b0, a0, a1),
                           point_segment_distance(a0, b0, b1)});
          // Proper edge intersection.
          const complexd r = a1 - a0, s = b0 - a0, t = b1 - a0;
          const double c1 = r.real() * s.imag() - r.imag() * s.real();
          const double c2 = r.real() * t.imag() - r.imag() * t.real();
          const complexd q = b1 - b0, w = a0 - b0, v = a1 - b0;
          const double c3 = q.real() * w.imag() - q.imag() * w.real();
          const double c4 = q.real() * v.imag() - q.imag() * v.real();
          if (c1 * c2 < 0.0 && c3 * c4 < 0.0) best = 0.0;
        }
      std::vector<complexd> hullA, hullB;
      for (int a : A) hullA.push_back(cfg[a]);
      for (int b : B) hullB.push_back(cfg[b]);
      if (A.size() >= 3) best = std::min(best, hull_distance_to_point(hullA, cfg[B[0]]));
      if (B.size() >= 3) best = std::min(best, hull_distance_to_point(hullB, cfg[A[0]]));
      if (best <= 1e-12) throw OverlappingHulls("block hulls are not disjoint");
    }
}

Trajectories constant_trajectories(const Params& params, const std::vector<complexd>& cfg) {
  Trajectories t;
  t.params = params;
  t.breaks = {0.0, 1.0};
  t.pos.assign(cfg.size(), {});
  for (size_t a = 0; a < cfg.size(); ++a) t.pos[a] = {cfg[a], cfg[a]};
  return t;
}

}  // namespace

Trajectories realize_rotation_from(const Params& params, const std::vector<complexd>& start,
                                   const RotationSpec& spec, int segments_per_turn) {
  if (spec.den <= 0) throw Error("rotation exponent needs a positive denominator");
  if (spec.blocks.empty()) throw DegenerateBlock("rotation needs at least one block");
  std::set<int> seen;
  for (const auto& blk : spec.blocks)
    for (const PunctureLabel& lab : blk)
      if (!seen.insert(label_index(params, lab)).second)
        throw IndexMismatch("rotation blocks overlap");

  const int dir = spec.num >= 0 ? 1 : -1;
  const int whole = std::abs(spec.num) / spec.den;
  const double frac = static_cast<double>(std::abs(spec.num) % spec.den) / spec.den;

  std::vector<complexd> cfg = start;
  // Band orientations are pinned from the starting configuration.
  std::vector<int> out_l;
  for (const auto& blk : spec.blocks)
    out_l.push_back(ccw_end_family(params, cfg, block_geometry(params, cfg, blk)));
  Trajectories out = constant_trajectories(params, cfg);
  bool first = true;
  auto run_step = [&](double f) {
    std::vector<BlockGeom> geoms;
    geoms.reserve(spec.blocks.size());
    for (const auto& blk : spec.blocks) geoms.push_back(block_geometry(params, cfg, blk));
    if (geoms.size() > 1) check_hulls_disjoint(cfg, geoms);
    const auto chunk = step_chunk(params, cfg, geoms, out_l, dir, f, segments_per_turn);
    Trajectories stage;
    stage.params = params;
    const size_t S = chunk.front().size() - 1;
    stage.breaks.resize(S + 1);
    for (size_t s = 0; s <= S; ++s) stage.breaks[s] = static_cast<double>(s) / S;
    stage.pos = chunk;
    if (first) {
      out = std::move(stage);
      first = false;
    } else {
      out.concat(stage);
    }
    for (size_t a = 0; a < cfg.size(); ++a) cfg[a] = out.pos[a].back();
  };
  for (int w = 0; w < whole; ++w) run_step(1.0);
  if (frac > 0.0) run_step(frac);
  return out;
}

Trajectories realize_rotation(const Fiber& fib, const RotationSpec& spec, int segments_per_turn) {
  return realize_rotation_from(fib.params, fib.positions, spec, segments_per_turn);
}

Trajectories realize_program(const Params& params, const std::vector<complexd>& start,
                             const std::vector<RotationSpec>& stages, int segments_per_turn) {
  if (stages.empty()) return constant_trajectories(params, start);
  Trajectories out = realize_rotation_from(params, start, stages.front(), segments_per_turn);
  for (size_t i = 1; i < stages.size(); ++i) {
    std::vector<complexd> cfg(out.pos.size());
    for (size_t a = 0; a < out.pos.size(); ++a) cfg[a] = out.pos[a].back();
    out.concat(realize_rotation_from(params, cfg, stages[i], segments_per_turn));
  }
  return out;
}

BraidWord rotation_braid(const Fiber& fib, const RotationSpec& spec, int segments_per_turn) {
  const Trajectories traj = realize_rotation(fib, spec, segments_per_turn);
  return extract_braid(traj, choose_projection(traj));
}

std::vector<std::vector<PunctureLabel>> tight_pairs(const Params& params) {
  std::vector<std::vector<PunctureLabel>> blocks;
  for (int j = 0; j < params.m; ++j)
    blocks.push_back({PunctureLabel::root(j, 0), PunctureLabel::root(j, 1)});
  return blocks;
}

std::vector<PunctureLabel> cross_pair(const Params& params, int j, int h) {
  return {PunctureLabel::root(posmod(j, params.m), 0),
          PunctureLabel::root(posmod(j + h, params.m), 1)};
}

std::vector<PunctureLabel> family_block(const Params& params, int ell) {
  std::vector<PunctureLabel> blk;
  for (int j = 0; j < params.m; ++j) blk.push_back(PunctureLabel::root(j, ell));
  return blk;
}

namespace {

// Full twists of the m cross pairs {T_{j,0}, T_{j+h,1}}, one pair after
// another in j order.
std::vector<RotationSpec> pair_twists(const Params& params, int h) {
  std::vector<RotationSpec> stages;
  for (int j = 0; j < params.m; ++j) stages.push_back(RotationSpec{{cross_pair(params, j, h)}, 2, 1});
  return stages;
}

// One application of R_{A_{[+-h]}} = product of the m pair exchanges.
std::vector<RotationSpec> pair_exchanges(const Params& params, int h) {
  std::vector<RotationSpec> stages;
  for (int j = 0; j < params.m; ++j) stages.push_back(RotationSpec{{cross_pair(params, j, h)}, 1, 1});
  return stages;
}

std::vector<RotationSpec> theorem_stages(const Params& params, const LoopSite& site) {
  const int m = params.m;
  const int r = (m - 1) / 2;
  if (std::holds_alternative<OriginLoop>(site))
    return {RotationSpec{tight_pairs(params), 2, 1}};
  if (std::holds_alternative<EtaLoop>(site)) {
    const int eta = std::get<EtaLoop>(site).eta;
    if (eta != 1 && eta != -1) throw BadSite("eta must be +-1");
    return {RotationSpec{{family_block(params, (eta + 1) / 2)}, m, 1}};
  }
  if (std::holds_alternative<PkLoop>(site)) {
    const int k = std::get<PkLoop>(site).k;
    if (k < 1 || k > m - 1 || 2 * k == m) throw BadSite("invalid p_k index");
    return k <= r ? pair_twists(params, k) : pair_twists(params, -(m - k));
  }
  throw BadSite("no closed-form generator for this site");
}

}  // namespace

Trajectories realize_theorem_generator(const Params& params, const LoopSite& site, double eps,
                                       int segments_per_turn) {
  if (params.n != 2) throw BadSite("theorem generators are defined for n = 2");
  const Fiber fib = fiber(params, complexd(0.0, -eps));
  return realize_program(params, fib.positions, theorem_stages(params, site), segments_per_turn);
}

BraidWord theorem_generator(const Params& params, const LoopSite& site, double eps) {
  const Trajectories traj = realize_theorem_generator(params, site, eps);
  return extract_braid(traj, choose_projection(traj));
}

Trajectories realize_conjugated_generator(const Params& params, const LoopSite& site, double eps,
                                          int segments_per_turn) {
  if (params.n != 2) throw BadSite("theorem generators are defined for n = 2");
  const Fiber fib = fiber(params, complexd(0.0, -eps));
  const int m = params.m;
  const int r = (m - 1) / 2;

  std::vector<RotationSpec> prefix;
  std::vector<RotationSpec> middle;
  if (std::holds_alternative<OriginLoop>(site)) {
    return realize_theorem_generator(params, site, eps, segments_per_turn);
  } else if (std::holds_alternative<EtaLoop>(site)) {
    const int eta = std::get<EtaLoop>(site).eta;
    if (eta != 1 && eta != -1) throw BadSite("eta must be +-1");
    prefix = {RotationSpec{tight_pairs(params), eta, 2}};
    middle = {RotationSpec{{family_block(params, (eta + 1) / 2)}, m, 1}};
  } else if (std::holds_alternative<PkLoop>(site)) {
    const int k = std::get<PkLoop>(site).k;
    if (k < 1 || k > m - 1 || 2 * k == m) throw BadSite("invalid p_k index");
    if (k <= r) {
      prefix = {RotationSpec{tight_pairs(params), 1, 1}};
      for (int ell = 1; ell <= k - 1; ++ell) {
        auto stages = pair_exchanges(params, ell);
        prefix.insert(prefix.end(), stages.begin(), stages.end());
      }
      middle = pair_twists(params, k);
    } else {
      const int kk = m - k;
      for (int ell = 1; ell <= kk - 1; ++ell) {
        auto stages = pair_exchanges(params, -ell);
        prefix.insert(prefix.end(), stages.begin(), stages.end());
      }
      middle = pair_twists(params, -kk);
    }
  } else {
    throw BadSite("no closed-form generator for this site");
  }

  if (prefix.empty())
    return realize_program(params, fib.positions, middle, segments_per_turn);
  Trajectories P = realize_program(params, fib.positions, prefix, segments_per_turn);
  std::vector<complexd> cfg(P.pos.size());
  for (size_t a = 0; a < P.pos.size(); ++a) cfg[a] = P.pos[a].back();
  Trajectories out = P;
  out.concat(realize_program(params, cfg, middle, segments_per_turn));
  out.concat(P.reversed());
  return out;
}

BraidWord conjugated_generator(const Params& params, const LoopSite& site, double eps) {
  const Trajectories traj = realize_conjugated_generator(params, site, eps);
  return extract_braid(traj, choose_projection(traj));
}

}  // namespace braidmono
