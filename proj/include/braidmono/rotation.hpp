// Rotations of convex puncture families realized as explicit motions, and
// the closed-form monodromy generators built from them.
//
// A rotation advances each puncture of a block to the next one in the
// counterclockwise order about the block's centroid. Punctures travel in a
// thin corridor along the hull boundary (a band along the chord, slightly
// bowed so exchanging punctures pass each other counterclockwise); blocks
// whose hull encloses the origin travel on arcs about the centroid pulled
// slightly inward. Both choices keep the motion clear of all punctures
// outside the block, which pins the braid down to isotopy.
#pragma once

#include <vector>

#include "braidmono/arrangement.hpp"
#include "braidmono/tracking.hpp"

namespace braidmono {

struct RotationSpec {
  std::vector<std::vector<PunctureLabel>> blocks;
  // Exponent nu = num/den; den > 0. Integer powers advance whole cyclic
  // steps, the fractional remainder stops partway through the next step.
  int num = 1;
  int den = 1;
};

// One rotation applied to the fiber's configuration.
Trajectories realize_rotation(const Fiber& fib, const RotationSpec& spec,
                              int segments_per_turn = kCircleSegments);

// Same, from an arbitrary configuration (positions in canonical label order).
Trajectories realize_rotation_from(const Params& params, const std::vector<complexd>& start,
                                   const RotationSpec& spec,
                                   int segments_per_turn = kCircleSegments);

// Stages applied in order, each from the configuration the previous one
// reached.
Trajectories realize_program(const Params& params, const std::vector<complexd>& start,
                             const std::vector<RotationSpec>& stages,
                             int segments_per_turn = kCircleSegments);

BraidWord rotation_braid(const Fiber& fib, const RotationSpec& spec,
                         int segments_per_turn = kCircleSegments);

// Closed-form generator of the main theorem at the given site, realized at
// fiber(-eps i); see realize_* variants for the trajectories themselves.
Trajectories realize_theorem_generator(const Params& params, const LoopSite& site, double eps,
                                       int segments_per_turn = kCircleSegments);
BraidWord theorem_generator(const Params& params, const LoopSite& site, double eps);

// The un-reduced form: the theorem generator conjugated by the transport
// rotations the proof's paths accumulate on the way to the site.
Trajectories realize_conjugated_generator(const Params& params, const LoopSite& site, double eps,
                                          int segments_per_turn = kCircleSegments);
BraidWord conjugated_generator(const Params& params, const LoopSite& site, double eps);

// Block builders (n = 2): the tight pairs {T_{j,0}, T_{j,1}}, one
// {T_{j,0}, T_{j+h,1}} pair, and the full ell-family.
std::vector<std::vector<PunctureLabel>> tight_pairs(const Params& params);
std::vector<PunctureLabel> cross_pair(const Params& params, int j, int h);
std::vector<PunctureLabel> family_block(const Params& params, int ell);

}  // namespace braidmono
