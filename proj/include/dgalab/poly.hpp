#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgalab/field.hpp"

namespace dgalab {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

// Graded-lexicographic order (total degree first, then lex with x1 > x2 > ...).
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse exact multivariate polynomial in variables x1..xn over one field.
// Terms are kept in graded-lexicographic order; zero coefficients are never
// stored. Printing lists terms from the grlex-largest down.
class MultiPoly {
 public:
  MultiPoly() : nvars_(0) {}
  MultiPoly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  static MultiPoly constant(Field f, std::size_t nvars, const FieldScalar& c);
  static MultiPoly variable(Field f, std::size_t nvars, std::size_t i);  // x_{i+1}, 0-based i
  static MultiPoly monomial(Field f, Exponents e, const FieldScalar& c);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, FieldScalar, GrlexLess>& terms() const { return terms_; }

  void add_term(const Exponents& e, const FieldScalar& c);  // accumulate, drop zeros

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const FieldScalar& c) const;
  bool operator==(const MultiPoly& o) const;

  // Sets the listed variables (0-based) to zero and drops vanished terms.
  MultiPoly substitute_zero(const std::vector<std::size_t>& vars) const;

  unsigned degree() const;  // total degree; 0 for the zero polynomial
  std::optional<unsigned> homogeneous_degree() const;  // nullopt if mixed; zero poly -> 0
  FieldScalar constant_term() const;

  // "x1^2*x2 - 3*x3 + 1/2"; deterministic, grlex-descending.
  std::string str() const;

  // Parses sums of terms: coefficient and/or product of x<i>(^e) factors,
  // joined by '+'/'-', factors joined by '*'. Examples: "x1^2+x2^2",
  // "2*x1*x2 - 1", "-x3". Throws InputError on malformed input.
  static MultiPoly parse(Field f, std::size_t nvars, const std::string& s);

 private:
  void check_compat(const MultiPoly& o) const;
  Field field_;
  std::size_t nvars_;
  std::map<Exponents, FieldScalar, GrlexLess> terms_;
};

// Parses a single monomial like "x1", "x2^3", "x1*x2^2" (no coefficient),
// used by the monomial-ideal ring format. Throws InputError on junk.
Exponents parse_monomial(std::size_t nvars, const std::string& s);

std::string monomial_str(const Exponents& e);

}  // namespace dgalab
