#include "dgalab/poly.hpp"

#include <sstream>

namespace dgalab {

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // same total degree: a < b when the first differing exponent is smaller
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

MultiPoly MultiPoly::constant(Field f, std::size_t nvars, const FieldScalar& c) {
  MultiPoly p(f, nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Field f, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InputError("variable index out of range");
  MultiPoly p(f, nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, FieldScalar::one(f));
  return p;
}

MultiPoly MultiPoly::monomial(Field f, Exponents e, const FieldScalar& c) {
  MultiPoly p(f, e.size());
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const FieldScalar& c) {
  if (e.size() != nvars_) throw InputError("exponent vector has wrong length");
  if (c.field() != field_) throw FieldMismatchError("coefficient over wrong field");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compat(const MultiPoly& o) const {
  if (field_ != o.field_) throw FieldMismatchError("polynomials over different fields");
  if (nvars_ != o.nvars_) throw InputError("polynomials in different variable counts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compat(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compat(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compat(o);
  MultiPoly r(field_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::scaled(const FieldScalar& c) const {
  MultiPoly r(field_, nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_compat(o);
  return terms_ == o.terms_;
}

MultiPoly MultiPoly::substitute_zero(const std::vector<std::size_t>& vars) const {
  for (std::size_t v : vars)
    if (v >= nvars_) throw InputError("substitute_zero: variable index out of range");
  MultiPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    bool dies = false;
    for (std::size_t v : vars)
      if (e[v] > 0) { dies = true; break; }
    if (!dies) r.terms_.emplace(e, c);
  }
  return r;
}

unsigned MultiPoly::degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.rbegin()->first);  // grlex max has max total degree
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return std::nullopt;
  return d;
}

FieldScalar MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? FieldScalar::zero(field_) : it->second;
}

std::string monomial_str(const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) { os << "-"; cs = cs.substr(1); }
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    std::string mono = monomial_str(e);
    if (mono == "1") {
      os << cs;
    } else if (cs == "1") {
      os << mono;
    } else {
      os << cs << "*" << mono;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() { while (i < s.size() && s[i] == ' ') ++i; }
  bool eof() { skip_ws(); return i >= s.size(); }
  char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
  char get() { skip_ws(); return s[i++]; }
  unsigned long long number() {
    skip_ws();
    if (i >= s.size() || s[i] < '0' || s[i] > '9')
      throw InputError("expected a number at position " + std::to_string(i) + " in '" + s + "'");
    unsigned long long v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + static_cast<unsigned long long>(s[i] - '0');
      if (v > 1000000000ULL) throw InputError("number too large in '" + s + "'");
      ++i;
    }
    return v;
  }
};

}  // namespace

Exponents parse_monomial(std::size_t nvars, const std::string& s) {
  Lexer lx{s};
  Exponents e(nvars, 0);
  if (lx.eof()) throw InputError("empty monomial");
  if (lx.peek() == '1') {
    lx.get();
    if (!lx.eof()) throw InputError("bad monomial '" + s + "'");
    return e;
  }
  while (true) {
    if (lx.peek() != 'x') throw InputError("bad monomial '" + s + "' (expected x<i>)");
    lx.get();
    unsigned long long idx = lx.number();
    if (idx == 0 || idx > nvars)
      throw InputError("variable x" + std::to_string(idx) + " out of range in '" + s + "'");
    unsigned long long pow = 1;
    if (lx.peek() == '^') { lx.get(); pow = lx.number(); }
    if (pow > 64) throw InputError("exponent too large in '" + s + "'");
    e[idx - 1] += static_cast<unsigned>(pow);
    if (lx.eof()) break;
    if (lx.peek() != '*') throw InputError("bad monomial '" + s + "' (expected '*')");
    lx.get();
  }
  return e;
}

MultiPoly MultiPoly::parse(Field f, std::size_t nvars, const std::string& s) {
  Lexer lx{s};
  MultiPoly out(f, nvars);
  if (lx.eof()) throw InputError("empty polynomial");
  bool first = true;
  while (!lx.eof()) {
    bool neg = false;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.get();
      neg = c == '-';
    } else if (!first) {
      throw InputError("expected '+' or '-' in '" + s + "'");
    }
    first = false;
    // term: factors joined by '*'; each factor a number, number/number, or x<i>(^e)
    FieldScalar coeff = FieldScalar::one(f);
    Exponents e(nvars, 0);
    bool any_factor = false;
    while (true) {
      char pc = lx.peek();
      if (pc == 'x') {
        lx.get();
        unsigned long long idx = lx.number();
        if (idx == 0 || idx > nvars)
          throw InputError("variable x" + std::to_string(idx) + " out of range in '" + s + "'");
        unsigned long long pow = 1;
        if (lx.peek() == '^') { lx.get(); pow = lx.number(); }
        if (pow > 64) throw InputError("exponent too large in '" + s + "'");
        e[idx - 1] += static_cast<unsigned>(pow);
        any_factor = true;
      } else if (pc >= '0' && pc <= '9') {
        unsigned long long n = lx.number();
        FieldScalar v = FieldScalar::from_big(f, BigInt(n));
        if (lx.peek() == '/') {
          lx.get();
          unsigned long long d = lx.number();
          if (d == 0) throw InputError("zero denominator in '" + s + "'");
          FieldScalar dv = FieldScalar::from_big(f, BigInt(d));
          if (dv.is_zero()) throw InputError("denominator vanishes in the field in '" + s + "'");
          v = v / dv;
        }
        coeff *= v;
        any_factor = true;
      } else {
        throw InputError("unexpected character '" + std::string(1, pc) + "' in '" + s + "'");
      }
      if (lx.peek() == '*') { lx.get(); continue; }
      break;
    }
    if (!any_factor) throw InputError("empty term in '" + s + "'");
    if (neg) coeff = -coeff;
    out.add_term(e, coeff);
  }
  return out;
}

}  // namespace dgalab
