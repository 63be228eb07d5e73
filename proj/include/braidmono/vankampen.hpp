// Fundamental-group presentations from the monodromy generators, integer
// abelianization via Smith normal form, and the local-monodromy conjecture
// harness.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidmono/braid.hpp"
#include "braidmono/rotation.hpp"

namespace braidmono {

struct Presentation {
  // Fiber generators t0..t{N-1} in strand order, then the loop around the
  // vertical axis line (the fiber direction), named u0.
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;
  // For each fiber generator, the puncture label its strand carries; the
  // axis generator has no label.
  std::vector<PunctureLabel> strand_labels;
  int axis_generator = 0;  // 1-based index of u0, or 0 when absent
};

struct Abelianization {
  int free_rank = 0;
  std::vector<int64_t> torsion;  // invariant factors > 1, divisibility order
};

// Zariski-van Kampen presentation of the arrangement complement (n = 2):
// relations x = rho(x) for every coincidence-point site, and the axis
// conjugation relations u0^-1 x u0 = rho_0(x) for the loop around t = 0.
Presentation build_presentation(const Params& params, double eps);

// Invariant factors of the abelianized relation matrix.
Abelianization abelianization(const Presentation& pres);

// Smith normal form diagonal of an integer matrix (divisibility-ordered,
// nonnegative). Exposed for testing against the determinant-divisor oracle.
std::vector<int64_t> smith_normal_form(std::vector<std::vector<int64_t>> mat);

// Drop empty relators, freely and cyclically reduce, remove exact
// duplicates. The group presented is unchanged.
Presentation simplify(Presentation pres);

enum class ExportFormat { kPlain, kJson, kGapStyle };
ExportFormat parse_export_format(const std::string& name);  // UnknownFormat
std::string export_presentation(const Presentation& pres, ExportFormat format);

struct ConjectureVerdict {
  complexd xi;
  bool includes_origin = false;
  std::vector<size_t> block_sizes;
  bool equal = false;  // tracked loop braid vs product of local rotations
  size_t loop_letters = 0;
  size_t rotation_letters = 0;
};

// Tracks a small loop around the coincidence point and compares it with the
// product over blocks of (R_block)^{|block|} realized at the loop's base
// fiber. The verdict is recorded, not asserted.
ConjectureVerdict verify_conjecture(const Params& params, const CoincidencePoint& point,
                                    double eps);

}  // namespace braidmono
