#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "dgalab/errors.hpp"

namespace dgalab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Coefficient field tag: rationals (p == 0) or F_p with p a checked prime.
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint32_t p);  // throws InputError unless p is prime
  static Field parse(const std::string& s);  // "Q" or "Fp:<p>"

  bool is_rationals() const { return p == 0; }
  bool operator==(const Field& o) const { return p == o.p; }
  bool operator!=(const Field& o) const { return p != o.p; }
  std::string str() const;
};

bool is_prime_u32(std::uint32_t n);

// Exact scalar carrying its field tag. All arithmetic checks that both
// operands share one tag and throws FieldMismatchError otherwise.
// Rationals are kept in lowest terms with positive denominator (the
// backing type canonicalizes); F_p residues are kept in [0, p).
class FieldScalar {
 public:
  FieldScalar() : p_(0), r_(0) {}  // rational zero
  static FieldScalar zero(Field f);
  static FieldScalar one(Field f);
  static FieldScalar from_int(Field f, long long v);
  static FieldScalar from_rational(BigRat q);         // field Q
  static FieldScalar from_big(Field f, const BigInt& v);
  // Parses "7", "-3", "2/5" (Q) or a residue (F_p, reduced mod p).
  static FieldScalar parse(Field f, const std::string& s);

  Field field() const { return Field{p_}; }
  bool is_zero() const;
  bool is_one() const;

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator/(const FieldScalar& o) const;  // throws on zero divisor
  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
  FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
  FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
  FieldScalar& operator/=(const FieldScalar& o) { return *this = *this / o; }
  FieldScalar inverse() const;

  bool operator==(const FieldScalar& o) const;  // field-checked
  bool operator!=(const FieldScalar& o) const { return !(*this == o); }

  // Printing: "3", "-2/5" over Q; "4" over F_p.
  std::string str() const;

  const BigRat& rational() const;      // Q only
  std::uint64_t residue() const { return r_; }  // F_p only

 private:
  void check_same(const FieldScalar& o) const;
  std::uint32_t p_;     // 0 = rationals
  std::uint64_t r_;     // residue when p_ != 0
  BigRat q_;            // value when p_ == 0
};

}  // namespace dgalab
