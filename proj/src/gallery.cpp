#include "dgalab/gallery.hpp"

#include "dgalab/koszul.hpp"
#include "dgalab/lcg.hpp"
#include "dgalab/mf.hpp"

namespace dgalab {

ExampleDescriptor ExampleDescriptor::power_of_m(unsigned e, unsigned s) {
  ExampleDescriptor d;
  d.family = Family::POWER_OF_M;
  d.e = e;
  d.s = s;
  return d;
}

ExampleDescriptor ExampleDescriptor::power_of_regseq(unsigned e, unsigned s) {
  ExampleDescriptor d = power_of_m(e, s);
  d.family = Family::POWER_OF_REGSEQ;
  return d;
}

ExampleDescriptor ExampleDescriptor::trivial_ext(unsigned base, unsigned r) {
  ExampleDescriptor d;
  d.family = Family::TRIVIAL_EXT;
  d.base = base;
  d.r = r;
  return d;
}

ExampleDescriptor ExampleDescriptor::codim3(const TorClass& cls) {
  ExampleDescriptor d;
  d.family = Family::CODIM3_CLASS;
  d.cls = cls;
  return d;
}

ExampleDescriptor ExampleDescriptor::determinantal(unsigned r) {
  ExampleDescriptor d;
  d.family = Family::DETERMINANTAL_AVATAR;
  d.r = r;
  return d;
}

ExampleDescriptor ExampleDescriptor::hypersurface(unsigned n) {
  ExampleDescriptor d;
  d.family = Family::HYPERSURFACE;
  d.n = n;
  return d;
}

namespace {

void degree_monomials(unsigned e, unsigned s, std::size_t at, Exponents& cur,
                      std::vector<Exponents>& out) {
  if (at + 1 == e) {
    cur[at] = s;
    out.push_back(cur);
    cur[at] = 0;
    return;
  }
  for (unsigned d = 0; d <= s; ++d) {
    cur[at] = d;
    degree_monomials(e, s - d, at + 1, cur, out);
  }
  cur[at] = 0;
}

Algebra::Ptr m_power_ring(Field f, unsigned e, unsigned s) {
  if (e < 1 || e > 4) throw InputError("variable count must lie in [1, 4]");
  if (s < 2 || s > 4) throw InputError("power must lie in [2, 4]");
  std::vector<Exponents> gens;
  Exponents cur(e, 0);
  degree_monomials(e, s, 0, cur, gens);
  return Algebra::from_monomial_ideal(f, e, gens);
}

SkewAlgebra::Ptr trivial_mult_skew(Field f, unsigned r) {
  // dims (1, r, r-1): unit, r degree-1 and r-1 degree-2 elements, all
  // positive products zero
  std::vector<std::string> names = {"1"};
  std::vector<int> degrees = {0};
  for (unsigned i = 1; i <= r; ++i) {
    names.push_back("f" + std::to_string(i));
    degrees.push_back(1);
  }
  for (unsigned i = 1; i + 1 <= r; ++i) {
    names.push_back("g" + std::to_string(i));
    degrees.push_back(2);
  }
  const std::size_t n = names.size();
  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    mult[0][i] = {{(std::uint32_t)i, FieldScalar::one(f)}};
    mult[i][0] = {{(std::uint32_t)i, FieldScalar::one(f)}};
  }
  return SkewAlgebra::make(f, names, degrees, mult);
}

std::string class_label(const TorClass& cls) {
  return "codim3(" + cls.str() + ",m=" + std::to_string(cls.m) +
         ",c=" + std::to_string(cls.c) + ")";
}

}  // namespace

GalleryInstance generate(Field f, const ExampleDescriptor& desc) {
  GalleryInstance out;
  out.desc = desc;
  switch (desc.family) {
    case Family::POWER_OF_M:
    case Family::POWER_OF_REGSEQ: {
      out.ring = m_power_ring(f, desc.e, desc.s);
      out.label = (desc.family == Family::POWER_OF_M ? "power_of_m(" : "power_of_regseq(") +
                  std::to_string(desc.e) + "," + std::to_string(desc.s) + ")";
      break;
    }
    case Family::TRIVIAL_EXT: {
      if (desc.base < 1 || desc.base > 4) throw InputError("base power must lie in [1, 4]");
      if (desc.r < 1 || desc.r > 4) throw InputError("socle rank must lie in [1, 4]");
      Algebra::Ptr base = Algebra::from_monomial_ideal(f, 1, {Exponents{desc.base}});
      out.ring = Algebra::trivial_extension(base, desc.r);
      out.label = "trivial_ext(" + std::to_string(desc.base) + "," + std::to_string(desc.r) + ")";
      break;
    }
    case Family::CODIM3_CLASS: {
      out.skew = build_class(desc.cls, f);
      out.label = class_label(desc.cls);
      break;
    }
    case Family::DETERMINANTAL_AVATAR: {
      if (desc.r != 3) throw InputError("determinantal avatar is pinned to r = 3");
      out.skew = trivial_mult_skew(f, desc.r);
      out.label = "determinantal(3)";
      break;
    }
    case Family::HYPERSURFACE: {
      if (desc.n < 2 || desc.n > 8) throw InputError("hypersurface exponent must lie in [2, 8]");
      out.ring = hypersurface_ring(f, desc.n);
      out.label = "hypersurface(" + std::to_string(desc.n) + ")";
      break;
    }
  }
  if (out.ring) {
    out.golod_tag = golod_multiplication(out.ring);
    out.dagger_tag = socle_split_pair(*koszul_homology_algebra(out.ring)).has_value();
  } else if (out.skew) {
    out.dagger_tag = socle_split_pair(*out.skew).has_value();
  }
  return out;
}

std::vector<ExampleDescriptor> gallery_list() {
  std::vector<ExampleDescriptor> out;
  out.push_back(ExampleDescriptor::power_of_m(2, 2));
  out.push_back(ExampleDescriptor::power_of_m(3, 2));
  out.push_back(ExampleDescriptor::power_of_m(2, 3));
  out.push_back(ExampleDescriptor::power_of_m(3, 3));
  out.push_back(ExampleDescriptor::power_of_regseq(2, 2));
  out.push_back(ExampleDescriptor::power_of_regseq(2, 3));
  out.push_back(ExampleDescriptor::trivial_ext(1, 2));
  out.push_back(ExampleDescriptor::trivial_ext(2, 2));
  out.push_back(ExampleDescriptor::trivial_ext(3, 2));  // smallest type-three avatar
  out.push_back(ExampleDescriptor::codim3(TorClass::te(4, 2)));
  out.push_back(ExampleDescriptor::codim3(TorClass::b(4, 2)));
  out.push_back(ExampleDescriptor::codim3(TorClass::g(4, 2, 3)));
  out.push_back(ExampleDescriptor::codim3(TorClass::h(4, 2, 1, 1)));
  out.push_back(ExampleDescriptor::determinantal());
  out.push_back(ExampleDescriptor::hypersurface(2));
  out.push_back(ExampleDescriptor::hypersurface(4));
  return out;
}

std::vector<Module::Ptr> corpus(const Algebra::Ptr& a, std::uint64_t seed, std::size_t count) {
  if (count > kCorpusCap) throw InputError("corpus count cap is 16");
  std::vector<Module::Ptr> out = {a->residue_module(), a->maximal_ideal_module(),
                                  a->regular_module()};
  const std::size_t n = a->dim();
  Lcg rng(seed);
  std::size_t found = 0, attempts = 0;
  const std::size_t limit = 64 * count + 16;
  while (found < count && attempts < limit) {
    ++attempts;
    const std::size_t s = 1 + rng.next_below(2);
    const std::size_t t = 1 + rng.next_below(2);
    std::vector<std::vector<SparseVec>> columns(t, std::vector<SparseVec>(s));
    for (auto& col : columns)
      for (auto& entry : col) {
        if (n < 2 || rng.next_below(3) == 0) continue;  // leave the entry zero
        std::uint32_t idx = 1 + (std::uint32_t)rng.next_below(n - 1);
        long long coef = 1 + rng.next_int(0, 1);
        entry = {{idx, FieldScalar::from_int(a->field(), coef)}};
      }
    Module::Ptr m = Module::cokernel(a, s, columns);
    if (m->dim() == 0) continue;
    if (resolve(m, 12).betti[12] == 0) continue;  // free or finite tail
    out.push_back(std::move(m));
    ++found;
  }
  if (found < count)
    throw InputError("the ring admits too few modules with a nonzero twelfth Betti number");
  return out;
}

}  // namespace dgalab
