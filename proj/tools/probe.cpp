// Scratch experiment runner (not installed): compares tracked site loops
// against closed-form generators while conventions are being pinned down.
#include <cstdio>
#include <string>

#include "braidmono/rotation.hpp"
#include "braidmono/tpath.hpp"
#include "braidmono/tracking.hpp"

using namespace braidmono;

static std::string site_name(const LoopSite& s) {
  if (std::holds_alternative<OriginLoop>(s)) return "origin";
  if (std::holds_alternative<EtaLoop>(s))
    return std::get<EtaLoop>(s).eta > 0 ? "eta+" : "eta-";
  if (std::holds_alternative<PkLoop>(s)) return "pk:" + std::to_string(std::get<PkLoop>(s).k);
  return "big";
}

int main(int argc, char** argv) {
  const int m = argc > 1 ? std::atoi(argv[1]) : 3;
  const Params params(m, 2);
  const double eps = default_eps(params);
  std::printf("m=%d eps=%g\n", m, eps);
  for (const LoopSite& site : theorem_sites(params)) {
    try {
      const TPath loop = figure1_loop(params, site, eps);
      const Trajectories tracked = track(params, loop);
      const Trajectories realized = realize_theorem_generator(params, site, eps);
      const Trajectories conj = realize_conjugated_generator(params, site, eps);
      const double theta = choose_projection_common({&tracked, &realized, &conj});
      const BraidWord wt = extract_braid(tracked, theta);
      const BraidWord wr = extract_braid(realized, theta);
      const BraidWord wc = extract_braid(conj, theta);
      const bool eq_tr = braids_equal(wt, wr);
      const bool eq_tc = braids_equal(wt, wc);
      const bool eq_rc = braids_equal(wr, wc);
      auto perm_id = [](const BraidWord& w) {
        auto p = permutation_of(w);
        for (size_t i = 0; i < p.size(); ++i)
          if (p[i] != static_cast<int>(i)) return false;
        return true;
      };
      std::printf(
          "%-6s theta=%.4f |track|=%zu |thm|=%zu |conj|=%zu  track==thm:%d track==conj:%d "
          "thm==conj:%d pure(t,r):%d%d\n",
          site_name(site).c_str(), theta, wt.size(), wr.size(), wc.size(), eq_tr, eq_tc, eq_rc,
          perm_id(wt), perm_id(wr));
    } catch (const std::exception& e) {
      std::printf("%-6s EXCEPTION: %s\n", site_name(site).c_str(), e.what());
    }
  }
  return 0;
}
