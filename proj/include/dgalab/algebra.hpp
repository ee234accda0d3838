#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "dgalab/linalg.hpp"
#include "dgalab/poly.hpp"
#include "dgalab/sparse.hpp"

namespace dgalab {

inline constexpr std::size_t kDimCap = 400;       // algebra/module dimension cap
inline constexpr unsigned kNilpotencyCap = 12;    // monomial quotient nilpotency bound

class Module;

// Finite-dimensional commutative local k-algebra given by a basis
// b_0 = 1, b_1, ..., b_{n-1} and structure constants. Construction checks
// commutativity, associativity, the unit row, that the span of b_1.. is an
// ideal with nilpotent closure, and that the marked generators generate it.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  using Ptr = std::shared_ptr<const Algebra>;

  static Ptr from_table(Field f, std::vector<std::string> names,
                        std::vector<std::vector<SparseVec>> mult,
                        std::optional<std::vector<std::size_t>> generators,
                        std::optional<std::vector<int>> degrees);

  // k[x_1..x_nvars] / (monomial ideal), basis = standard monomials in
  // graded-lex order. Errors: some variable has no pure power in the ideal
  // (not Artinian); standard monomials reach the nilpotency cap; dim cap.
  static Ptr from_monomial_ideal(Field f, std::size_t nvars, const std::vector<Exponents>& gens);

  // Trivial extension S ⋉ k^r: adjoins r socle generators z_1..z_r with
  // z_i * m = 0 and z_i * z_j = 0. r = 0 returns a copy of the base.
  static Ptr trivial_extension(const Ptr& base, std::size_t r);

  std::size_t dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  const SparseVec& mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  const std::vector<std::size_t>& generators() const { return gens_; }
  const std::optional<std::vector<int>>& degrees() const { return degrees_; }
  std::uint64_t id() const { return id_; }

  // element arithmetic on dense k-coordinate vectors
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec mult_basis(std::size_t i, const Vec& v) const;  // b_i * v

  // b_t * w for w in A^beta coordinates (index j*n + s <-> e_j ⊗ b_s)
  SparseVec block_mult(std::size_t t, const SparseVec& w) const;

  LinearSpan maximal_ideal() const;         // span(b_1..)
  LinearSpan m_power(unsigned k) const;     // m^k
  LinearSpan socle() const;                 // (0 : m) inside A
  std::size_t embedding_dim() const;        // dim m/m^2

  // canonical modules (lazily built, shared per algebra)
  std::shared_ptr<const Module> residue_module() const;       // k
  std::shared_ptr<const Module> maximal_ideal_module() const; // m
  std::shared_ptr<const Module> regular_module() const;       // A

 private:
  Algebra() = default;
  void validate() const;

  Field field_;
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<SparseVec>> mult_;
  std::vector<std::size_t> gens_;
  std::optional<std::vector<int>> degrees_;
  std::uint64_t id_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::shared_ptr<const Module> k_module_, m_module_, a_module_;
};

// Maximal-ideal splitting data: the largest s with m ≅ k^s ⊕ m', witnessed
// by socle elements independent modulo m^2.
struct MaxIdealSplit {
  std::size_t s = 0;
  std::vector<Vec> witnesses;  // elements of A, k-coordinates
};

MaxIdealSplit decompose_maximal_ideal(const Algebra::Ptr& a);

// Finite module over an Algebra, given by one action matrix per basis
// element. Construction checks the unit action and compatibility with the
// structure constants (on a budget: all pairs when small, generator pairs
// against everything otherwise).
class Module {
 public:
  using Ptr = std::shared_ptr<const Module>;

  Module(Algebra::Ptr a, std::vector<DenseMatrix> actions);

  static Ptr make(Algebra::Ptr a, std::vector<DenseMatrix> actions);
  static Ptr free_module(const Algebra::Ptr& a, std::size_t rank);
  // Quotient of A^s by the A-submodule generated by the given k-vectors
  // (length s*n each); the subspace closure is computed here.
  static Ptr quotient_of_free(const Algebra::Ptr& a, std::size_t s,
                              const std::vector<Vec>& submodule_gens);
  // Cokernel of an s x t presentation matrix with entries in A (each column
  // = t elements of A^s, i.e. s sparse A-elements stacked).
  static Ptr cokernel(const Algebra::Ptr& a, std::size_t s,
                      const std::vector<std::vector<SparseVec>>& columns);
  static Ptr matlis_dual(const Ptr& m);

  const Algebra::Ptr& algebra() const { return a_; }
  Field field() const { return a_->field(); }
  std::size_t dim() const { return dim_; }
  const DenseMatrix& action(std::size_t i) const { return actions_[i]; }
  std::uint64_t id() const { return id_; }

  Vec act(std::size_t i, const Vec& v) const { return actions_[i].apply(v); }

  LinearSpan radical() const;  // mM as a subspace of M
  // deterministic minimal generators: standard basis first, then the
  // provided extra candidates (all reduced mod mM greedily)
  std::vector<Vec> minimal_generators() const;

 private:
  Module() = default;
  void validate() const;

  Algebra::Ptr a_;
  std::size_t dim_ = 0;
  std::vector<DenseMatrix> actions_;
  bool trusted_ = false;
  std::uint64_t id_ = 0;

  friend class Algebra;
};

}  // namespace dgalab
