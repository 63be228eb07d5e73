#include <algorithm>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>
#include "braidmono/rotation.hpp"
#include "braidmono/tpath.hpp"
#include "braidmono/tracking.hpp"
using namespace braidmono;

static std::string nm(const LoopSite& s) {
  if (std::holds_alternative<OriginLoop>(s)) return "O";
  if (std::holds_alternative<EtaLoop>(s)) return std::get<EtaLoop>(s).eta > 0 ? "+1" : "-1";
  return "p" + std::to_string(std::get<PkLoop>(s).k);
}

int main() {
  const Params params(2, 2);
  const double eps = default_eps(params), R = 10.0;
  const TPath ascent = axis_ascent(params, R, eps);
  const Trajectories tr_up = track(params, ascent);
  const Trajectories tr_circ = track(params, figure1_loop(params, BigCircle{R}, eps));
  const auto sites = theorem_sites(params);
  std::vector<Trajectories> trs;
  std::vector<const Trajectories*> all = {&tr_up, &tr_circ};
  for (const auto& s : sites) trs.push_back(track(params, figure1_loop(params, s, eps)));
  for (const auto& t : trs) all.push_back(&t);
  const double theta = choose_projection_common(all);
  const BraidWord q = extract_braid(tr_up, theta);
  const BraidWord circ = extract_braid(tr_circ, theta);
  const BraidWord tgtB = compose(compose(invert(q), circ), q);
  const BraidWord tgtA = compose(compose(q, circ), invert(q));
  std::vector<int> perm(sites.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    BraidWord prod = BraidWord::identity(params.strand_count());
    for (int i : perm) prod = compose(prod, extract_braid(trs[i], theta));
    std::string names;
    for (int i : perm) names += nm(sites[i]) + " ";
    std::printf("%-12s A:%d B:%d\n", names.c_str(), braids_equal(tgtA, prod) ? 1 : 0,
                braids_equal(tgtB, prod) ? 1 : 0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 0;
}
