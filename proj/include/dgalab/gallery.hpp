#pragma once

#include <string>
#include <vector>

#include "dgalab/resolution.hpp"
#include "dgalab/torclass.hpp"

namespace dgalab {

inline constexpr std::size_t kCorpusCap = 16;

enum class Family {
  POWER_OF_M,            // k[x_1..x_e] / m^s
  POWER_OF_REGSEQ,       // power of a regular-sequence ideal, same avatar
  TRIVIAL_EXT,           // k[x]/(x^base) adjoined r square-zero socle elements
  CODIM3_CLASS,          // standard realization of a multiplication class
  DETERMINANTAL_AVATAR,  // trivial-multiplication algebra with ranks (1, r, r-1)
  HYPERSURFACE           // k[x]/(x^n)
};

struct ExampleDescriptor {
  Family family = Family::POWER_OF_M;
  unsigned e = 0, s = 0;     // POWER_OF_M / POWER_OF_REGSEQ
  unsigned base = 0, r = 0;  // TRIVIAL_EXT (base, r); DETERMINANTAL_AVATAR (r)
  unsigned n = 0;            // HYPERSURFACE
  TorClass cls;              // CODIM3_CLASS

  static ExampleDescriptor power_of_m(unsigned e, unsigned s);
  static ExampleDescriptor power_of_regseq(unsigned e, unsigned s);
  static ExampleDescriptor trivial_ext(unsigned base, unsigned r);
  static ExampleDescriptor codim3(const TorClass& cls);
  static ExampleDescriptor determinantal(unsigned r = 3);
  static ExampleDescriptor hypersurface(unsigned n);
};

// A generated instance: commutative rings carry `ring`, multiplication
// classes and the determinantal avatar carry `skew` instead. Tags are
// computed, not asserted: golod from the homology multiplication, dagger
// from an actual socle split pair.
struct GalleryInstance {
  ExampleDescriptor desc;
  std::string label;
  Algebra::Ptr ring;
  SkewAlgebra::Ptr skew;
  bool golod_tag = false;
  bool dagger_tag = false;
};

GalleryInstance generate(Field f, const ExampleDescriptor& desc);

// curated roster covering every family within the documented bounds
std::vector<ExampleDescriptor> gallery_list();

// k, m, A, then `count` seeded cokernel modules with presentation entries
// in m, filtered to beta_12 > 0. Deterministic for a fixed seed.
std::vector<Module::Ptr> corpus(const Algebra::Ptr& a, std::uint64_t seed, std::size_t count);

}  // namespace dgalab
