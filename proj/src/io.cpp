#include "dgalab/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <set>

namespace dgalab {

namespace {

const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("spec must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("spec is missing the \"") + key + "\" key");
  return *it;
}

std::string require_string(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (!v.is_string()) throw InputError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::size_t require_uint(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
  return (std::size_t)v.get<long long>();
}

const Json& require_array(const Json& j, const char* key) {
  const Json& v = require_key(j, key);
  if (!v.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  return v;
}

FieldScalar coeff_scalar(Field f, const Json& v) {
  if (v.is_number_integer()) return FieldScalar::from_int(f, v.get<long long>());
  if (v.is_string()) return FieldScalar::parse(f, v.get<std::string>());
  throw InputError("coefficients must be integers or strings");
}

Json coeff_json(const FieldScalar& c) {
  if (!c.field().is_rationals()) return Json((std::uint64_t)c.residue());
  const BigRat& q = c.rational();
  if (boost::multiprecision::denominator(q) == 1) {
    const BigInt num = boost::multiprecision::numerator(q);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
      return Json((long long)num);
  }
  return Json(c.str());
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw InputError("unknown basis element \"" + name + "\"");
}

SparseVec flush(const std::map<std::uint32_t, FieldScalar>& acc) {
  SparseVec out;
  for (const auto& [idx, c] : acc)
    if (!c.is_zero()) out.push_back({idx, c});
  return out;
}

Exponents monomial_exponents(Field f, std::size_t vars, const std::string& s) {
  const MultiPoly p = MultiPoly::parse(f, vars, s);
  if (p.term_count() != 1) throw InputError("ideal entries must be single monomials: " + s);
  const auto& term = *p.terms().begin();
  if (!term.second.is_one())
    throw InputError("ideal monomials must have coefficient one: " + s);
  if (total_degree(term.first) == 0)
    throw InputError("ideal monomials must have positive degree: " + s);
  return term.first;
}

std::string exponents_str(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// structure constants from [[a,b,c,coeff],...]; unlisted (b,a) mirrors a
// listed (a,b) scaled by `sign(da, db)` so tables only need one order
template <typename SignFn>
std::vector<std::vector<SparseVec>> products_from_json(Field f, const Json& entries,
                                                       const std::vector<std::string>& names,
                                                       SignFn sign) {
  const std::size_t n = names.size();
  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i) {
    mult[0][i] = {{(std::uint32_t)i, FieldScalar::one(f)}};
    mult[i][0] = {{(std::uint32_t)i, FieldScalar::one(f)}};
  }
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::uint32_t, FieldScalar>> acc;
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 4)
      throw InputError("products must be [left, right, target, coeff] quadruples");
    if (!e[0].is_string() || !e[1].is_string() || !e[2].is_string())
      throw InputError("product entries name basis elements by their labels");
    const std::size_t a = index_of(names, e[0].get<std::string>());
    const std::size_t b = index_of(names, e[1].get<std::string>());
    const std::uint32_t c = (std::uint32_t)index_of(names, e[2].get<std::string>());
    FieldScalar& slot = acc[{a, b}].try_emplace(c, FieldScalar::zero(f)).first->second;
    slot += coeff_scalar(f, e[3]);
  }
  for (const auto& [key, terms] : acc) mult[key.first][key.second] = flush(terms);
  for (const auto& [key, terms] : acc) {
    const auto [a, b] = key;
    if (a == 0 || b == 0 || a == b) continue;
    if (acc.count({b, a})) continue;
    SparseVec mirrored = flush(terms);
    const FieldScalar s = sign(a, b);
    for (auto& [idx, c] : mirrored) c *= s;
    mult[b][a] = std::move(mirrored);
  }
  return mult;
}

Json monomial_quotient_spec(Field f, std::size_t vars, const std::vector<Exponents>& ideal) {
  Json out;
  out["field"] = f.str();
  out["kind"] = "monomial_quotient";
  out["vars"] = vars;
  Json gens = Json::array();
  for (const auto& e : ideal) gens.push_back(exponents_str(e));
  out["ideal"] = std::move(gens);
  return out;
}

void pure_power_monomials(unsigned e, unsigned s, std::size_t at, Exponents& cur,
                          std::vector<Exponents>& out) {
  if (at + 1 == e) {
    cur[at] = s;
    out.push_back(cur);
    cur[at] = 0;
    return;
  }
  for (unsigned d = 0; d <= s; ++d) {
    cur[at] = d;
    pure_power_monomials(e, s - d, at + 1, cur, out);
  }
  cur[at] = 0;
}

Json skew_spec(Field f, const SkewAlgebra& s) {
  Json out;
  out["field"] = f.str();
  Json basis = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i)
    basis.push_back(Json{{"name", s.names()[i]}, {"degree", s.degrees()[i]}});
  out["basis"] = std::move(basis);
  Json products = Json::array();
  for (std::size_t i = 1; i < s.dim(); ++i)
    for (std::size_t j = 1; j < s.dim(); ++j)
      for (const auto& [idx, c] : s.mult(i, j))
        products.push_back(Json::array({s.names()[i], s.names()[j], s.names()[idx], coeff_json(c)}));
  out["products"] = std::move(products);
  if (s.differential()) {
    Json diff = Json::array();
    const DenseMatrix& d = *s.differential();
    for (std::size_t col = 0; col < s.dim(); ++col)
      for (std::size_t row = 0; row < s.dim(); ++row)
        if (!d.at(row, col).is_zero())
          diff.push_back(Json::array({s.names()[col], s.names()[row], coeff_json(d.at(row, col))}));
    out["differential"] = std::move(diff);
  }
  if (s.preferred_pair()) {
    const auto [u, v] = *s.preferred_pair();
    out["preferred"] = Json::array({s.names()[u], s.names()[v]});
  }
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

Algebra::Ptr ring_from_json(const Json& j) {
  const Field f = Field::parse(require_string(j, "field"));
  const std::string kind = require_string(j, "kind");
  if (kind == "monomial_quotient") {
    const std::size_t vars = require_uint(j, "vars");
    std::vector<Exponents> gens;
    for (const Json& g : require_array(j, "ideal")) {
      if (!g.is_string()) throw InputError("\"ideal\" must list monomial strings");
      gens.push_back(monomial_exponents(f, vars, g.get<std::string>()));
    }
    return Algebra::from_monomial_ideal(f, vars, gens);
  }
  if (kind == "table") {
    std::vector<std::string> names;
    for (const Json& b : require_array(j, "basis")) {
      if (!b.is_string()) throw InputError("\"basis\" must list element names");
      names.push_back(b.get<std::string>());
    }
    if (names.empty()) throw InputError("\"basis\" must start with the unit");
    auto mult = products_from_json(f, require_array(j, "table"), names,
                                   [&](std::size_t, std::size_t) { return FieldScalar::one(f); });
    std::optional<std::vector<std::size_t>> gens;
    if (j.contains("generators")) {
      gens.emplace();
      for (const Json& g : require_array(j, "generators")) {
        if (!g.is_string()) throw InputError("\"generators\" must list element names");
        gens->push_back(index_of(names, g.get<std::string>()));
      }
    }
    std::optional<std::vector<int>> degrees;
    if (j.contains("degrees")) {
      degrees.emplace();
      for (const Json& d : require_array(j, "degrees")) {
        if (!d.is_number_integer()) throw InputError("\"degrees\" must list integers");
        degrees->push_back(d.get<int>());
      }
    }
    return Algebra::from_table(f, std::move(names), std::move(mult), std::move(gens),
                               std::move(degrees));
  }
  if (kind == "trivial_extension") {
    Algebra::Ptr base = ring_from_json(require_key(j, "base"));
    if (base->field() != f)
      throw InputError("the base ring is declared over a different field");
    return Algebra::trivial_extension(base, require_uint(j, "r"));
  }
  throw InputError("unknown ring kind \"" + kind + "\"");
}

SkewAlgebra::Ptr skew_from_json(const Json& j) {
  const Field f = Field::parse(j.contains("field") ? require_string(j, "field") : "Q");
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (const Json& b : require_array(j, "basis")) {
    names.push_back(require_string(b, "name"));
    const Json& d = require_key(b, "degree");
    if (!d.is_number_integer()) throw InputError("basis degrees must be integers");
    degrees.push_back(d.get<int>());
  }
  if (names.empty()) throw InputError("\"basis\" must start with the unit");
  auto mult = products_from_json(f, require_array(j, "products"), names,
                                 [&](std::size_t a, std::size_t b) {
                                   return (degrees[a] * degrees[b]) % 2 != 0
                                              ? -FieldScalar::one(f)
                                              : FieldScalar::one(f);
                                 });
  std::optional<DenseMatrix> diff;
  if (j.contains("differential")) {
    DenseMatrix d(f, names.size(), names.size());
    for (const Json& e : require_array(j, "differential")) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
        throw InputError("differential entries must be [source, target, coeff] triples");
      const std::size_t src = index_of(names, e[0].get<std::string>());
      const std::size_t tgt = index_of(names, e[1].get<std::string>());
      d.at(tgt, src) += coeff_scalar(f, e[2]);
    }
    diff = std::move(d);
  }
  std::optional<std::pair<std::size_t, std::size_t>> preferred;
  if (j.contains("preferred")) {
    const Json& p = require_array(j, "preferred");
    if (p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw InputError("\"preferred\" must name two basis elements");
    preferred = {index_of(names, p[0].get<std::string>()),
                 index_of(names, p[1].get<std::string>())};
  }
  return SkewAlgebra::make(f, std::move(names), std::move(degrees), std::move(mult),
                           std::move(diff), preferred);
}

MatrixFactorization mf_from_json(const Json& j) {
  MatrixFactorization mf;
  mf.field = Field::parse(require_string(j, "field"));
  mf.nvars = require_uint(j, "vars");
  mf.f = MultiPoly::parse(mf.field, mf.nvars, require_string(j, "f"));
  auto read_matrix = [&](const char* key) {
    PolyMatrix m;
    for (const Json& row : require_array(j, key)) {
      if (!row.is_array()) throw InputError(std::string("\"") + key + "\" must be a matrix");
      std::vector<MultiPoly> r;
      for (const Json& entry : row) {
        if (!entry.is_string())
          throw InputError(std::string("\"") + key + "\" entries must be polynomial strings");
        r.push_back(MultiPoly::parse(mf.field, mf.nvars, entry.get<std::string>()));
      }
      if (!m.empty() && r.size() != m.front().size())
        throw InputError(std::string("\"") + key + "\" rows must have equal length");
      m.push_back(std::move(r));
    }
    return m;
  };
  mf.phi = read_matrix("phi");
  mf.psi = read_matrix("psi");
  return mf;
}

Json spec_from_descriptor(const ExampleDescriptor& d, Field f) {
  // generate() enforces the documented bounds and builds the class tables
  GalleryInstance inst = generate(f, d);
  switch (d.family) {
    case Family::POWER_OF_M:
    case Family::POWER_OF_REGSEQ: {
      std::vector<Exponents> gens;
      Exponents cur(d.e, 0);
      pure_power_monomials(d.e, d.s, 0, cur, gens);
      std::sort(gens.begin(), gens.end(),
                [](const Exponents& a, const Exponents& b) { return GrlexLess{}(b, a); });
      return monomial_quotient_spec(f, d.e, gens);
    }
    case Family::HYPERSURFACE:
      return monomial_quotient_spec(f, 1, {Exponents{d.n}});
    case Family::TRIVIAL_EXT: {
      Json out;
      out["field"] = f.str();
      out["kind"] = "trivial_extension";
      out["base"] = monomial_quotient_spec(f, 1, {Exponents{d.base}});
      out["r"] = d.r;
      return out;
    }
    case Family::CODIM3_CLASS:
    case Family::DETERMINANTAL_AVATAR:
      return skew_spec(f, *inst.skew);
  }
  throw InputError("unknown gallery family");
}

std::string decimal_array(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  out += "]";
  return out;
}

}  // namespace dgalab
