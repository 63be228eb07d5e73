#include "braidmono/braid.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braidmono {

void BraidWord::check() const {
  if (strands < 1) throw IndexMismatch("braid needs at least one strand");
  for (const auto& [i, s] : letters) {
    if (i < 1 || i >= strands) throw IndexMismatch("braid letter index out of range");
    if (s != 1 && s != -1) throw IndexMismatch("braid letter sign must be +-1");
  }
}

FreeWord free_reduce(FreeWord w) {
  std::vector<int32_t> out;
  out.reserve(w.letters.size());
  for (int32_t g : w.letters) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  w.letters = std::move(out);
  return w;
}

FreeWord concat_reduced(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.letters.reserve(a.letters.size() + b.letters.size());
  for (int32_t g : b.letters) {
    if (!out.letters.empty() && out.letters.back() == -g)
      out.letters.pop_back();
    else
      out.letters.push_back(g);
  }
  return out;
}

FreeWord invert(const FreeWord& w) {
  FreeWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

FreeWord cyclic_reduce(FreeWord w) {
  w = free_reduce(std::move(w));
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  FreeWord out;
  out.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw IndexMismatch("composing braids on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord invert(const BraidWord& b) {
  BraidWord out;
  out.strands = b.strands;
  out.letters.reserve(b.letters.size());
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    out.letters.emplace_back(it->first, -it->second);
  return out;
}

namespace {

// One Artin generator applied to a reduced word, reduced on the fly.
//   sigma_i:  x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
//   sigma_i^{-1}:  x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
FreeWord apply_letter(int i, int sign, const FreeWord& w) {
  FreeWord out;
  out.letters.reserve(w.letters.size() + 2);
  auto push = [&out](int32_t g) {
    if (!out.letters.empty() && out.letters.back() == -g)
      out.letters.pop_back();
    else
      out.letters.push_back(g);
  };
  const int32_t a = i, b = i + 1;
  for (int32_t g : w.letters) {
    const int32_t mag = g < 0 ? -g : g;
    if (mag != a && mag != b) {
      push(g);
      continue;
    }
    if (sign > 0) {
      if (mag == a) {
        if (g > 0) {
          push(a);
          push(b);
          push(-a);
        } else {
          push(a);
          push(-b);
          push(-a);
        }
      } else {  // mag == b
        push(g > 0 ? a : -a);
      }
    } else {
      if (mag == a) {
        push(g > 0 ? b : -b);
      } else {  // mag == b
        if (g > 0) {
          push(-b);
          push(a);
          push(b);
        } else {
          push(-b);
          push(-a);
          push(b);
        }
      }
    }
    if (out.letters.size() > kWordLengthCap)
      throw WordLengthExceeded("free-group image exceeded the length cap");
  }
  return out;
}

FreeWord apply_braid(const BraidWord& braid, FreeWord w) {
  for (const auto& [i, s] : braid.letters) w = apply_letter(i, s, w);
  return w;
}

}  // namespace

FreeWord artin_action(const BraidWord& braid, const FreeWord& word) {
  braid.check();
  for (int32_t g : word.letters) {
    const int32_t mag = g < 0 ? -g : g;
    if (mag < 1 || mag > braid.strands) throw IndexMismatch("word letter outside generator range");
  }
  return apply_braid(braid, free_reduce(word));
}

FreeAutomorphism automorphism_of_serial(const BraidWord& braid) {
  braid.check();
  FreeAutomorphism out;
  out.rank = braid.strands;
  out.images.resize(braid.strands);
  for (int g = 1; g <= braid.strands; ++g)
    out.images[g - 1] = apply_braid(braid, FreeWord{{g}});
  return out;
}

FreeAutomorphism automorphism_of(const BraidWord& braid) {
  braid.check();
  FreeAutomorphism out;
  out.rank = braid.strands;
  out.images.resize(braid.strands);
  // Worth spreading only when the rewriting itself is heavy.
  const bool heavy = braid.letters.size() * static_cast<size_t>(braid.strands) > 4096;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (heavy)
#endif
  for (int g = 1; g <= braid.strands; ++g)
    out.images[g - 1] = apply_braid(braid, FreeWord{{g}});
  (void)heavy;
  return out;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw IndexMismatch("comparing braids on different strand counts");
  return automorphism_of(a) == automorphism_of(b);
}

std::vector<int> permutation_of(const BraidWord& braid) {
  braid.check();
  std::vector<int> pos(braid.strands);  // pos[slot] = strand currently there
  std::iota(pos.begin(), pos.end(), 0);
  for (const auto& [i, s] : braid.letters) std::swap(pos[i - 1], pos[i]);
  std::vector<int> perm(braid.strands);
  for (int slot = 0; slot < braid.strands; ++slot) perm[pos[slot]] = slot;
  return perm;
}

std::vector<std::vector<int>> crossing_sums(const BraidWord& braid) {
  braid.check();
  std::vector<int> pos(braid.strands);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<std::vector<int>> lk(braid.strands, std::vector<int>(braid.strands, 0));
  for (const auto& [i, s] : braid.letters) {
    const int a = pos[i - 1], b = pos[i];
    lk[a][b] += s;
    lk[b][a] += s;
    std::swap(pos[i - 1], pos[i]);
  }
  return lk;
}

}  // namespace braidmono
