#include "dgalab/field.hpp"

#include <sstream>

namespace dgalab {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw InputError("field modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return rationals();
  if (s.rfind("Fp:", 0) == 0) {
    std::uint64_t v = 0;
    try {
      v = std::stoull(s.substr(3));
    } catch (...) {
      throw InputError("bad field spec '" + s + "'");
    }
    if (v == 0 || v > 0x7fffffffULL) throw InputError("field modulus out of range in '" + s + "'");
    return prime(static_cast<std::uint32_t>(v));
  }
  throw InputError("bad field spec '" + s + "' (expected \"Q\" or \"Fp:<p>\")");
}

std::string Field::str() const {
  return is_rationals() ? "Q" : ("Fp:" + std::to_string(p));
}

namespace {

std::uint64_t mod_reduce_ll(long long v, std::uint32_t p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<std::uint64_t>(m);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint32_t p) {
  // extended Euclid; p prime, a != 0 mod p
  long long t = 0, nt = 1, r = p, nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw InvariantViolation("non-invertible residue " + std::to_string(a));
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldScalar FieldScalar::zero(Field f) {
  FieldScalar s;
  s.p_ = f.p;
  return s;
}

FieldScalar FieldScalar::one(Field f) {
  FieldScalar s;
  s.p_ = f.p;
  if (f.is_rationals()) s.q_ = 1;
  else s.r_ = 1 % f.p;
  return s;
}

FieldScalar FieldScalar::from_int(Field f, long long v) {
  FieldScalar s;
  s.p_ = f.p;
  if (f.is_rationals()) s.q_ = v;
  else s.r_ = mod_reduce_ll(v, f.p);
  return s;
}

FieldScalar FieldScalar::from_rational(BigRat q) {
  FieldScalar s;
  s.p_ = 0;
  s.q_ = std::move(q);
  return s;
}

FieldScalar FieldScalar::from_big(Field f, const BigInt& v) {
  FieldScalar s;
  s.p_ = f.p;
  if (f.is_rationals()) {
    s.q_ = BigRat(v);
  } else {
    BigInt m = v % f.p;
    if (m < 0) m += f.p;
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

FieldScalar FieldScalar::parse(Field f, const std::string& in) {
  std::string s = in;
  // trim spaces
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InputError("empty scalar literal");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
  std::string num, den;
  std::string* cur = &num;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      cur->push_back(c);
    } else if (c == '/' && cur == &num && !den.size()) {
      cur = &den;
    } else {
      throw InputError("bad scalar literal '" + in + "'");
    }
  }
  if (num.empty() || (cur == &den && den.empty()))
    throw InputError("bad scalar literal '" + in + "'");
  BigInt n(num);
  if (neg) n = -n;
  if (den.empty()) return from_big(f, n);
  BigInt d(den);
  if (d == 0) throw InputError("zero denominator in '" + in + "'");
  if (f.is_rationals()) return from_rational(BigRat(n, d));
  FieldScalar dd = from_big(f, d);
  if (dd.is_zero()) throw InputError("denominator vanishes mod " + std::to_string(f.p));
  return from_big(f, n) / dd;
}

bool FieldScalar::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

bool FieldScalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

void FieldScalar::check_same(const FieldScalar& o) const {
  if (p_ != o.p_)
    throw FieldMismatchError("scalars over " + Field{p_}.str() + " and " + Field{o.p_}.str() +
                             " cannot be combined");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s;
  s.p_ = p_;
  if (p_ == 0) s.q_ = q_ + o.q_;
  else { s.r_ = r_ + o.r_; if (s.r_ >= p_) s.r_ -= p_; }
  return s;
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s;
  s.p_ = p_;
  if (p_ == 0) s.q_ = q_ - o.q_;
  else { s.r_ = r_ + p_ - o.r_; if (s.r_ >= p_) s.r_ -= p_; }
  return s;
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same(o);
  FieldScalar s;
  s.p_ = p_;
  if (p_ == 0) s.q_ = q_ * o.q_;
  else s.r_ = mulmod(r_, o.r_, p_);
  return s;
}

FieldScalar FieldScalar::operator/(const FieldScalar& o) const {
  check_same(o);
  if (o.is_zero()) throw InputError("division by zero scalar");
  FieldScalar s;
  s.p_ = p_;
  if (p_ == 0) s.q_ = q_ / o.q_;
  else s.r_ = mulmod(r_, invmod(o.r_, p_), p_);
  return s;
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar s;
  s.p_ = p_;
  if (p_ == 0) s.q_ = -q_;
  else s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

FieldScalar FieldScalar::inverse() const {
  return one(Field{p_}) / *this;
}

bool FieldScalar::operator==(const FieldScalar& o) const {
  check_same(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldScalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  std::ostringstream os;
  os << q_;
  return os.str();
}

const BigRat& FieldScalar::rational() const {
  if (p_ != 0) throw FieldMismatchError("rational() called on an F_p scalar");
  return q_;
}

}  // namespace dgalab
