// Scratch: verify the canonical site order against the big circle.
#include <cstdio>
#include <vector>

#include "braidmono/rotation.hpp"
#include "braidmono/tpath.hpp"
#include "braidmono/tracking.hpp"

using namespace braidmono;

// Order: +1, upper p_k far to near, O, -1, lower p_k far to near.
static std::vector<LoopSite> infinity_order(const Params& params) {
  const int m = params.m, r = (m - 1) / 2;
  std::vector<LoopSite> v;
  v.push_back(EtaLoop{+1});
  for (int k = r; k >= 1; --k) v.push_back(PkLoop{k});
  v.push_back(OriginLoop{});
  v.push_back(EtaLoop{-1});
  for (int k = r + 1; k <= m - 1; ++k)
    if (2 * k != m) v.push_back(PkLoop{k});
  return v;
}

int main(int argc, char** argv) {
  const int m = argc > 1 ? std::atoi(argv[1]) : 2;
  const double R = 10.0;
  const Params params(m, 2);
  const double eps = default_eps(params);
  const TPath ascent = axis_ascent(params, R, eps);
  const Trajectories tr_up = track(params, ascent);
  const Trajectories tr_circ = track(params, figure1_loop(params, BigCircle{R}, eps));
  const auto sites = infinity_order(params);
  std::vector<Trajectories> trs;
  std::vector<const Trajectories*> all = {&tr_up, &tr_circ};
  for (const auto& s : sites) trs.push_back(track(params, figure1_loop(params, s, eps)));
  for (const auto& t : trs) all.push_back(&t);
  const double theta = choose_projection_common(all);
  const BraidWord q = extract_braid(tr_up, theta);
  const BraidWord target = compose(compose(invert(q), extract_braid(tr_circ, theta)), q);
  BraidWord prod = BraidWord::identity(params.strand_count());
  for (const auto& t : trs) prod = compose(prod, extract_braid(t, theta));
  std::printf("m=%d big-circle == ordered site product: %d\n", m,
              braids_equal(target, prod) ? 1 : 0);
  return 0;
}
