#include "dgalab/torclass.hpp"

namespace dgalab {

bool TorClass::operator==(const TorClass& o) const {
  // the trivial multiplication is the (p, q) = (0, 0) corner of H
  auto trivial_like = [](const TorClass& x) {
    return x.tag == TRIVIAL || (x.tag == H && x.p == 0 && x.q == 0);
  };
  if (trivial_like(*this) && trivial_like(o)) return m == o.m && c == o.c;
  if (tag != o.tag) return false;
  switch (tag) {
    case TE:
    case B:
      return m == o.m && c == o.c;
    case G:
      return m == o.m && c == o.c && r == o.r;
    case H:
      return m == o.m && c == o.c && p == o.p && q == o.q;
    case TRIVIAL:
      return m == o.m && c == o.c;
    case UNCLASSIFIED:
      return true;
  }
  return false;
}

std::string TorClass::str() const {
  switch (tag) {
    case TE: return "TE";
    case B: return "B";
    case G: return "G(" + std::to_string(r) + ")";
    case H: return "H(" + std::to_string(p) + "," + std::to_string(q) + ")";
    case TRIVIAL: return "TRIVIAL";
    case UNCLASSIFIED: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

SkewAlgebra::Ptr build_class(const TorClass& cl, Field f, bool allow_small_m) {
  const std::size_t m = cl.m, c = cl.c;
  const std::size_t m_floor = allow_small_m ? 3 : 4;
  if (cl.tag == TorClass::UNCLASSIFIED) throw InputError("cannot build an unclassified table");
  if (m < m_floor)
    throw InputError("m = " + std::to_string(m) + " below the floor " + std::to_string(m_floor) +
                     (allow_small_m ? "" : " (pass the small-m override for m = 3)"));
  if (c < 2) throw InputError("c must be at least 2");
  if (cl.tag == TorClass::G && (cl.r < 2 || cl.r > m))
    throw InputError("G rank must satisfy 2 <= r <= m");
  if (cl.tag == TorClass::H) {
    if (cl.q > c) throw InputError("H needs q <= c");
    if (cl.p + cl.q > c + m - 1) throw InputError("H needs p + q <= c + m - 1");
    if ((cl.p >= 1 || cl.q >= 1) && cl.p + 1 > m)
      throw InputError("H references e_" + std::to_string(cl.p + 1) + " beyond the e-basis");
  }

  const std::size_t nf = c + m - 1;
  const std::size_t n = 1 + m + nf + c;
  auto e = [](std::size_t i) { return i; };                    // 1-based, degree 1
  auto ff = [m](std::size_t j) { return m + j; };              // degree 2
  auto g = [m, nf](std::size_t l) { return m + nf + l; };      // degree 3

  std::vector<std::string> names(n);
  std::vector<int> degrees(n, 0);
  names[0] = "1";
  for (std::size_t i = 1; i <= m; ++i) names[e(i)] = "e" + std::to_string(i), degrees[e(i)] = 1;
  for (std::size_t j = 1; j <= nf; ++j) names[ff(j)] = "f" + std::to_string(j), degrees[ff(j)] = 2;
  for (std::size_t l = 1; l <= c; ++l) names[g(l)] = "g" + std::to_string(l), degrees[g(l)] = 3;

  std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
  for (std::size_t j = 0; j < n; ++j) {
    mult[0][j] = {{static_cast<std::uint32_t>(j), FieldScalar::one(f)}};
    if (j) mult[j][0] = mult[0][j];
  }
  auto put = [&](std::size_t i, std::size_t j, std::size_t target) {
    // s_i * s_j = s_target, plus the skew companion
    if (!mult[i][j].empty()) throw InvariantViolation("table collision");
    mult[i][j] = {{static_cast<std::uint32_t>(target), FieldScalar::one(f)}};
    if (i == j) return;
    bool flip = (degrees[i] % 2) && (degrees[j] % 2);
    mult[j][i] = {{static_cast<std::uint32_t>(target),
                   flip ? -FieldScalar::one(f) : FieldScalar::one(f)}};
  };

  std::optional<std::pair<std::size_t, std::size_t>> preferred;
  switch (cl.tag) {
    case TorClass::TE:
      put(e(2), e(3), ff(1));
      put(e(3), e(1), ff(2));
      put(e(1), e(2), ff(3));
      preferred = {{g(1), g(2)}};
      break;
    case TorClass::B:
      put(e(1), e(2), ff(3));
      put(e(1), ff(1), g(1));
      put(e(2), ff(2), g(1));
      preferred = {{ff(nf), g(2)}};
      break;
    case TorClass::G:
      for (std::size_t i = 1; i <= cl.r; ++i) put(e(i), ff(i), g(1));
      preferred = {{g(2), ff(nf)}};
      break;
    case TorClass::H:
    case TorClass::TRIVIAL: {
      const std::size_t p = cl.tag == TorClass::H ? cl.p : 0;
      const std::size_t q = cl.tag == TorClass::H ? cl.q : 0;
      for (std::size_t i = 1; i <= p; ++i) put(e(i), e(p + 1), ff(i));
      for (std::size_t j = 1; j <= q; ++j) put(e(p + 1), ff(p + j), g(j));
      if (p + 2 <= m) preferred = {{e(m), ff(nf)}};
      else if (q + 1 <= c) preferred = {{g(c), ff(nf)}};
      // p = m - 1 and q = c leave no socle pair clear of (S_+)^2
      break;
    }
    case TorClass::UNCLASSIFIED:
      break;  // rejected above
  }

  auto s = SkewAlgebra::make(f, std::move(names), std::move(degrees), std::move(mult),
                             std::nullopt, preferred);
  auto rep = check_axioms(*s);
  if (!rep.pass()) throw InvariantViolation("class table failed its axioms: " + rep.first_failure);
  return s;
}

namespace {

// dim of {x in span(rows) : x * s_j = 0 for all j in cols}
std::size_t annihilator_dim(const SkewAlgebra& s, const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) {
  const std::size_t n = s.dim();
  DenseMatrix mat(s.field(), cols.size() * n, rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      for (const auto& [idx, coef] : s.mult(rows[a], cols[b])) mat.at(b * n + idx, a) = coef;
  return rows.size() - rank_of(mat);
}

std::size_t product_span_dim(const SkewAlgebra& s, const std::vector<std::size_t>& left,
                             const std::vector<std::size_t>& right) {
  LinearSpan span(s.field(), s.dim());
  for (std::size_t i : left)
    for (std::size_t j : right)
      if (!s.mult(i, j).empty()) span.insert(sparse_to_dense(s.mult(i, j), s.field(), s.dim()));
  return span.dim();
}

}  // namespace

TorClass classify(const SkewAlgebra& s) {
  TorClass out;
  if (s.differential() && !s.differential()->is_zero()) return out;
  if (s.top_degree() > 3) return out;

  auto i1 = s.degree_indices(1);
  auto i2 = s.degree_indices(2);
  auto i3 = s.degree_indices(3);
  const std::size_t m = i1.size();
  out.m = m;
  out.c = i3.size();

  if (s.positive_square().dim() == 0) {
    out.tag = TorClass::TRIVIAL;
    return out;
  }
  if (m == 0) return out;  // nonzero products need degree-1 factors here

  const std::size_t d11 = product_span_dim(s, i1, i1);
  const std::size_t d12 = product_span_dim(s, i1, i2);
  const std::size_t rad11 = m == 0 ? 0 : annihilator_dim(s, i1, i1);
  const std::size_t rk3 = m == 0 ? 0 : m - annihilator_dim(s, i1, i2);

  if (d11 == 3 && rad11 + 3 == m) {
    out.tag = TorClass::TE;
    return out;
  }
  if (d11 == 1 && rk3 == 2 && d12 == 1) {
    out.tag = TorClass::B;
    return out;
  }
  if (d11 == 0 && rk3 >= 2 && d12 == 1) {
    out.tag = TorClass::G;
    out.r = rk3;
    return out;
  }
  if (rk3 <= 1) {
    const std::size_t p = d11, q = d12;
    bool sane = q <= out.c && p + q <= out.c + m - 1 && (p == 0 || p + 1 <= m);
    if (sane) {
      out.tag = TorClass::H;
      out.p = p;
      out.q = q;
      return out;
    }
  }
  return out;  // UNCLASSIFIED
}

}  // namespace dgalab
