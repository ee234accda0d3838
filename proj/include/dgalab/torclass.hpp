#pragma once

#include <string>

#include "dgalab/skew.hpp"

namespace dgalab {

// Multiplication class of a graded skew algebra concentrated in degrees
// 0..3 with one-dimensional degree 0: one of the four structured families
// or the trivial-multiplication case. Parameters: m = dim S_1, c = dim S_3;
// G carries a pairing rank r, H carries (p, q).
struct TorClass {
  enum Tag { TE, B, G, H, TRIVIAL, UNCLASSIFIED };

  Tag tag = UNCLASSIFIED;
  std::size_t m = 0, c = 0;
  std::size_t r = 0;     // G only
  std::size_t p = 0, q = 0;  // H only

  static TorClass te(std::size_t m, std::size_t c) { return {TE, m, c, 0, 0, 0}; }
  static TorClass b(std::size_t m, std::size_t c) { return {B, m, c, 0, 0, 0}; }
  static TorClass g(std::size_t m, std::size_t c, std::size_t r) { return {G, m, c, r, 0, 0}; }
  static TorClass h(std::size_t m, std::size_t c, std::size_t p, std::size_t q) {
    return {H, m, c, 0, p, q};
  }

  bool operator==(const TorClass& o) const;
  bool operator!=(const TorClass& o) const { return !(*this == o); }
  std::string str() const;  // "TE", "B", "G(3)", "H(1,2)", ...
};

// Builds the standard basis realization: 1; e_1..e_m in degree 1;
// f_1..f_{c+m-1} in degree 2; g_1..g_c in degree 3, with the class's
// products (and their skew companions) and everything else zero. The
// preferred socle pair is attached whenever the parameters admit one.
// Bounds: m >= 4 (>= 3 with allow_small_m), c >= 2; G: 2 <= r <= m;
// H: q <= c, p + q <= c + m - 1, and p + 1 <= m unless p = q = 0.
SkewAlgebra::Ptr build_class(const TorClass& cl, Field f, bool allow_small_m = false);

// Reads the class off basis-free invariants of the multiplication:
// dim S_1*S_1, dim S_1*S_2, the rank of S_1 -> Hom(S_2, S_3), and the
// radical of the S_1 x S_1 pairing. Shapes outside degrees 0..3 (or with
// extra degree-0 elements) come back UNCLASSIFIED, never an error.
TorClass classify(const SkewAlgebra& s);

}  // namespace dgalab
