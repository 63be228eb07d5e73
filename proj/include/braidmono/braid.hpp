// Braid words on N strands and the faithful Artin action on a rank-N free
// group. Equality of braids is decided by comparing the induced free-group
// automorphisms, so no normal forms are needed.
//
// Composition is left-to-right throughout: (a*b) means a first, then b, and
// artin_action(a*b, w) == artin_action(b, artin_action(a, w)).
#pragma once

#include <cstdint>
#include <vector>

#include "braidmono/errors.hpp"

namespace braidmono {

// Freely reduced word in generators 1..N; letter +g is the generator,
// -g its inverse.
struct FreeWord {
  std::vector<int32_t> letters;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

struct BraidWord {
  int strands = 1;
  // (index, sign): sigma_index^{sign}, index in [1, strands-1].
  std::vector<std::pair<int, int>> letters;

  static BraidWord identity(int n) { return BraidWord{n, {}}; }
  static BraidWord generator(int n, int i, int sign = 1) {
    BraidWord b{n, {{i, sign}}};
    b.check();
    return b;
  }

  void check() const;
  size_t size() const { return letters.size(); }
};

struct FreeAutomorphism {
  int rank = 0;
  std::vector<FreeWord> images;  // image of generator g is images[g-1]

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;
};

// Images longer than this abort with WordLengthExceeded instead of silently
// truncating.
inline constexpr size_t kWordLengthCap = 1'000'000;

FreeWord free_reduce(FreeWord w);
FreeWord concat_reduced(const FreeWord& a, const FreeWord& b);
FreeWord invert(const FreeWord& w);
FreeWord cyclic_reduce(FreeWord w);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& b);

// Apply the braid's automorphism to a word; letters act in word order.
FreeWord artin_action(const BraidWord& braid, const FreeWord& word);

// Images of all N generators. Parallelized across generators when OpenMP is
// enabled; automorphism_of_serial is the reference implementation.
FreeAutomorphism automorphism_of(const BraidWord& braid);
FreeAutomorphism automorphism_of_serial(const BraidWord& braid);

bool braids_equal(const BraidWord& a, const BraidWord& b);

// Underlying permutation; result[i] = endpoint of the strand starting at i
// (0-based).
std::vector<int> permutation_of(const BraidWord& braid);

// Exponent sum of crossings between each strand pair, indexed by start
// position (0-based). Twice the pairwise linking number.
std::vector<std::vector<int>> crossing_sums(const BraidWord& braid);

}  // namespace braidmono
