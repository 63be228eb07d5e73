// Geometry of the discriminantal line arrangement: puncture branches,
// fibers, the coincidence locus and its confluence partitions.
//
// The mn non-origin punctures are the branches
//   T_{j,l}(t) = -omega_m^j (1 + omega_n^l t),
// affine-linear in t with |slope| = 1, plus the origin puncture fixed at 0.
#pragma once

#include <optional>
#include <vector>

#include "braidmono/errors.hpp"
#include "braidmono/numeric.hpp"

namespace braidmono {

struct Params {
  int m = 2;
  int n = 2;

  Params() = default;
  Params(int m_, int n_) : m(m_), n(n_) {
    if (m < 2 || n < 2) throw Error("Params: need m >= 2 and n >= 2");
  }

  // Total puncture count, origin included.
  int strand_count() const { return m * n + 1; }
};

// Origin, or Root(j, l) with j mod m and l mod n.
struct PunctureLabel {
  int j = -1;
  int l = -1;

  static PunctureLabel origin() { return PunctureLabel{}; }
  static PunctureLabel root(int j, int l) { return PunctureLabel{j, l}; }

  bool is_origin() const { return j < 0; }

  friend bool operator==(const PunctureLabel&, const PunctureLabel&) = default;
  // Origin first, then lexicographic (l, j).
  friend bool operator<(const PunctureLabel& a, const PunctureLabel& b) {
    if (a.is_origin() != b.is_origin()) return a.is_origin();
    if (a.l != b.l) return a.l < b.l;
    return a.j < b.j;
  }
};

// Canonical dense index: origin = 0, Root(j,l) = 1 + l*m + j.
inline int label_index(const Params& p, const PunctureLabel& lab) {
  if (lab.is_origin()) return 0;
  return 1 + lab.l * p.m + lab.j;
}

inline PunctureLabel label_at(const Params& p, int index) {
  if (index == 0) return PunctureLabel::origin();
  const int k = index - 1;
  return PunctureLabel::root(k % p.m, k / p.m);
}

inline std::vector<PunctureLabel> all_labels(const Params& p) {
  std::vector<PunctureLabel> out;
  out.reserve(p.strand_count());
  for (int i = 0; i < p.strand_count(); ++i) out.push_back(label_at(p, i));
  return out;
}

// Marked points of the section S(t), in canonical label order.
struct Fiber {
  Params params;
  complexd t;
  std::vector<complexd> positions;  // indexed by label_index

  complexd at(const PunctureLabel& lab) const {
    return positions[label_index(params, lab)];
  }
};

// A point of the coincidence locus with its confluence partition.
struct CoincidencePoint {
  complexd xi;
  // Each block lists >= 2 root labels sharing one value at xi, ordered
  // counterclockwise by argument at a nearby generic parameter.
  std::vector<std::vector<PunctureLabel>> blocks;
  bool includes_origin = false;  // true when the confluent value is 0
};

complexd puncture_position(const Params& params, const PunctureLabel& label, complexd t);

Fiber fiber(const Params& params, complexd t);

// Minimum pairwise distance among the fiber's punctures.
double min_gap(const Fiber& f);

// All coincidence parameters with their partitions, sorted by (Re, Im).
std::vector<CoincidencePoint> coincidence_locus(const Params& params);

// Confluence blocks at xi; throws NotACoincidencePoint if nothing within tol.
std::vector<std::vector<PunctureLabel>> partition_at(const Params& params, complexd xi,
                                                     double tol = kClusterTol);

// Closed-form locus for n = 2: {+-1} and i*tan(j pi/m), j != m/2.
std::vector<complexd> coincidence_closed_form_n2(int m);

// p_k = i tan(k pi / m); k in [1; m-1] \ {m/2}.
complexd coincidence_pk(int m, int k);

}  // namespace braidmono
