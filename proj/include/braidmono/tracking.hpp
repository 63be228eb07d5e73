// Tracking all punctures along a path and extracting the induced braid word
// from exact crossing events.
//
// Trajectories are piecewise affine on a shared breakpoint grid, so the
// projection of any strand difference is affine per interval and crossing
// instants are solved in closed form.
#pragma once

#include <vector>

#include "braidmono/arrangement.hpp"
#include "braidmono/braid.hpp"
#include "braidmono/tpath.hpp"

namespace braidmono {

struct Trajectories {
  Params params;
  std::vector<double> breaks;              // ascending, from 0 to 1
  std::vector<std::vector<complexd>> pos;  // pos[label_index][break_index]

  int strand_count() const { return static_cast<int>(pos.size()); }
  complexd start(int label) const { return pos[label].front(); }
  complexd end(int label) const { return pos[label].back(); }

  // Appends `other` (whose start configuration must match this end
  // configuration) and renormalizes u to [0, 1], weighting by step counts.
  Trajectories& concat(const Trajectories& other);
  Trajectories reversed() const;
};

struct CrossingEvent {
  double u = 0.0;
  int slot = 0;  // crossing of projected positions slot and slot+1 (0-based)
  int sign = 0;
};

Trajectories track(const Params& params, const TPath& path);

// Braid word of the trajectories under projection direction theta.
// Throws NonGenericProjection when the direction is degenerate for them.
BraidWord extract_braid(const Trajectories& traj, double theta);

// Crossing events only; `parallel` selects the OpenMP kernel, the serial
// variant is the reference implementation.
std::vector<CrossingEvent> crossing_events(const Trajectories& traj, double theta,
                                           bool parallel = true);

// First theta in {0, pi/97, 2 pi/97, ...} accepted by extract_braid.
double choose_projection(const Trajectories& traj);
// First theta generic for every bundle at once (all words then share one
// strand indexing).
double choose_projection_common(const std::vector<const Trajectories*>& trajs);

// Strand order at u = 0: label indices sorted by Re(e^{-i theta} z), ties by
// Im(e^{-i theta} z).
std::vector<int> start_order(const Trajectories& traj, double theta);

// Permutation induced by matching end positions to start positions within
// kMatchTol; result[i] = end slot of the strand starting at slot i.
std::vector<int> endpoint_permutation(const Trajectories& traj, double theta);

}  // namespace braidmono
