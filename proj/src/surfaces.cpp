#include "dp4/surfaces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dp4 {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

Quadric Quadric::from_gram(FieldPtr field, std::vector<std::vector<FieldElement>> gram) {
  if (gram.size() != 5) fail("Quadric: gram must be 5x5");
  Quadric q;
  q.field_ = std::move(field);
  q.g_.reserve(25);
  for (const auto& row : gram) {
    if (row.size() != 5) fail("Quadric: gram must be 5x5");
    for (const auto& e : row) {
      if (!same_field(e.field(), q.field_)) fail("Quadric: entry field mismatch");
      q.g_.push_back(e);
    }
  }
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!(q.at(i, j) == q.at(j, i))) fail("Quadric: gram must be symmetric");
  return q;
}

Quadric Quadric::from_diagonal(const FieldPtr& field, std::vector<FieldElement> diag) {
  if (diag.size() != 5) fail("Quadric: need five diagonal entries");
  Quadric q = zero(field);
  for (int i = 0; i < 5; ++i) q.set(i, i, diag[i]);
  return q;
}

Quadric Quadric::zero(const FieldPtr& field) {
  Quadric q;
  q.field_ = field;
  q.g_.assign(25, FieldElement::zero(field));
  return q;
}

void Quadric::set(int i, int j, const FieldElement& v) {
  g_[i * 5 + j] = v;
  g_[j * 5 + i] = v;
}

FieldElement Quadric::eval(const std::array<FieldElement, 5>& u) const {
  FieldElement acc = FieldElement::zero(field_);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) acc = acc + at(i, j) * u[i] * u[j];
  return acc;
}

bool Quadric::is_zero() const {
  return std::all_of(g_.begin(), g_.end(), [](const FieldElement& e) { return e.is_zero(); });
}

Quadric Quadric::scaled(const FieldElement& s) const {
  Quadric q = *this;
  for (auto& e : q.g_) e = e * s;
  return q;
}

Quadric Quadric::plus(const Quadric& o) const {
  Quadric q = *this;
  for (int k = 0; k < 25; ++k) q.g_[k] = q.g_[k] + o.g_[k];
  return q;
}

QuadricPencil QuadricPencil::make(Quadric q1, Quadric q2) {
  if (!same_field(q1.field(), q2.field())) fail("QuadricPencil: field mismatch");
  if (q1.is_zero() || q2.is_zero()) fail("QuadricPencil: quadrics must be nonzero");
  // independence: q2 - r*q1 != 0 for the ratio r at q1's first nonzero entry
  for (int k = 0; k < 25; ++k) {
    int i = k / 5, j = k % 5;
    if (!q1.at(i, j).is_zero()) {
      FieldElement r = q2.at(i, j) / q1.at(i, j);
      Quadric diff = q2.plus(q1.scaled(-r));
      if (diff.is_zero()) fail("QuadricPencil: quadrics are linearly dependent");
      break;
    }
  }
  return QuadricPencil{std::move(q1), std::move(q2)};
}

EtaleAlgebra EtaleAlgebra::make(FieldPtr k, FPoly p) {
  p = fp_trim(std::move(p));
  if (fp_deg(p) != 5) fail("EtaleAlgebra: modulus must have degree five");
  if (!(p[5] == FieldElement::one(k))) fail("EtaleAlgebra: modulus must be monic");
  FPoly g = fp_gcd(p, fp_deriv(p));
  if (fp_deg(g) != 0) fail("EtaleAlgebra: modulus must be separable");
  return EtaleAlgebra(std::move(k), std::move(p));
}

FieldElement EtaleAlgebra::trace(const FPoly& a) const {
  FieldElement tr = FieldElement::zero(k_);
  FPoly cur = reduce(a);  // a * x^m, reduced
  for (int m = 0; m < 5; ++m) {
    if (m > 0) {
      cur.insert(cur.begin(), FieldElement::zero(k_));  // multiply by x
      cur = fp_mod(cur, p_);
    }
    if (int(cur.size()) > m) tr = tr + cur[m];
  }
  return tr;
}

FPoly EtaleAlgebra::inverse(const FPoly& a) const {
  FPoly g, s, t;
  fp_xgcd(fp_mod(a, p_), p_, g, s, t);
  if (fp_deg(g) != 0)
    throw std::domain_error("EtaleAlgebra: element is a zero divisor");
  FieldElement gi = g[0].inv();
  return fp_mod(fp_scale(s, gi), p_);
}

QuadricPencil trace_quadrics(const EtaleAlgebra& alg, const FPoly& lambda) {
  const FieldPtr& k = alg.base();
  if (fp_deg(fp_gcd(alg.reduce(lambda), alg.modulus())) != 0)
    throw std::domain_error("trace_quadrics: lambda is not invertible");
  FPoly w = alg.mul(alg.reduce(lambda), alg.inverse(fp_deriv(alg.modulus())));
  std::array<FieldElement, 10> t{};
  FPoly cur = w;
  for (int m = 0; m < 10; ++m) {
    if (m > 0) {
      cur.insert(cur.begin(), FieldElement::zero(k));
      cur = fp_mod(cur, alg.modulus());
    }
    t[m] = alg.trace(cur);
  }
  Quadric q1 = Quadric::zero(k), q2 = Quadric::zero(k);
  for (int a = 0; a < 5; ++a)
    for (int b = a; b < 5; ++b) {
      q1.set(a, b, t[a + b]);
      q2.set(a, b, t[a + b + 1]);
    }
  return QuadricPencil::make(std::move(q1), std::move(q2));
}

FPoly component_lambda(const EtaleAlgebra& alg, const std::vector<FPoly>& factors,
                       const std::vector<FPoly>& parts) {
  if (factors.size() != parts.size()) fail("component_lambda: factors/parts length mismatch");
  const FieldPtr& k = alg.base();
  FPoly prod = {FieldElement::one(k)};
  for (const auto& f : factors) prod = fp_mul(prod, f);
  if (!(fp_trim(prod) == fp_trim(alg.modulus())))
    fail("component_lambda: factors do not multiply to the modulus");
  FPoly acc = {FieldElement::zero(k)};
  for (size_t i = 0; i < factors.size(); ++i) {
    if (fp_deg(parts[i]) >= fp_deg(factors[i]))
      fail("component_lambda: part degree must be below the factor degree");
    FPoly cof = fp_divmod(alg.modulus(), factors[i]).first;
    FPoly g, s, t;
    fp_xgcd(cof, factors[i], g, s, t);
    if (fp_deg(g) != 0) fail("component_lambda: factors are not coprime");
    FPoly idem = alg.reduce(fp_mul(fp_scale(s, g[0].inv()), cof));
    acc = fp_add(acc, alg.reduce(fp_mul(parts[i], idem)));
  }
  return alg.reduce(acc);
}

std::optional<BinaryQuintic> discriminant(const QuadricPencil& p) {
  const FieldPtr& k = p.field();
  std::array<FieldElement, 6> coeffs;
  coeffs.fill(FieldElement::zero(k));
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  std::sort(perm.begin(), perm.end());
  do {
    bool seen[5] = {false, false, false, false, false};
    int sign = 1;
    for (int s = 0; s < 5; ++s) {
      if (seen[s]) continue;
      int len = 0, t = s;
      while (!seen[t]) {
        seen[t] = true;
        t = perm[t];
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    // product of the linear forms (a mu + b la) along the permutation
    std::vector<FieldElement> cur{FieldElement::one(k)};
    for (int i = 0; i < 5; ++i) {
      const FieldElement& a = p.q1.at(i, perm[i]);
      const FieldElement& b = p.q2.at(i, perm[i]);
      std::vector<FieldElement> next(cur.size() + 1, FieldElement::zero(k));
      for (size_t d = 0; d < cur.size(); ++d) {
        next[d] = next[d] + cur[d] * a;
        next[d + 1] = next[d + 1] + cur[d] * b;
      }
      cur = std::move(next);
    }
    for (int d = 0; d < 6; ++d)
      coeffs[d] = (sign > 0) ? coeffs[d] + cur[d] : coeffs[d] - cur[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  bool all_zero = std::all_of(coeffs.begin(), coeffs.end(),
                              [](const FieldElement& e) { return e.is_zero(); });
  if (all_zero) return std::nullopt;
  return BinaryQuintic{k, coeffs};
}

bool binform_separable(const BinaryQuintic& f) {
  int deg = -1;
  for (int kk = 5; kk >= 0; --kk)
    if (!f.c[kk].is_zero()) {
      deg = kk;
      break;
    }
  if (deg < 4) return false;  // (0:1) would be a repeated root
  FPoly ft(f.c.begin(), f.c.begin() + deg + 1);
  return fp_deg(fp_gcd(ft, fp_deriv(ft))) == 0;
}

bool is_smooth(const QuadricPencil& p) {
  auto d = discriminant(p);
  return d.has_value() && binform_separable(*d);
}

BinaryQuintic binform_from_points(const FieldPtr& field, const std::vector<P1Point>& pts) {
  if (pts.size() != 5) fail("binform_from_points: need five points");
  std::vector<FieldElement> cur{FieldElement::one(field)};
  for (const auto& p : pts) {
    std::vector<FieldElement> next(cur.size() + 1, FieldElement::zero(field));
    for (size_t d = 0; d < cur.size(); ++d) {
      next[d] = next[d] + cur[d] * p.y;       // mu coefficient
      next[d + 1] = next[d + 1] - cur[d] * p.x;  // la coefficient
    }
    cur = std::move(next);
  }
  BinaryQuintic out{field, {}};
  for (int d = 0; d < 6; ++d) out.c[d] = cur[d];
  return out;
}

bool binform_proportional(const BinaryQuintic& a, const BinaryQuintic& b) {
  for (int k = 0; k < 6; ++k) {
    if (!a.c[k].is_zero()) {
      if (b.c[k].is_zero()) return false;
      FieldElement r = b.c[k] / a.c[k];
      for (int j = 0; j < 6; ++j)
        if (!(a.c[j] * r == b.c[j])) return false;
      return true;
    }
  }
  return false;
}

BinaryQuintic binform_lift(const BinaryQuintic& f, const FieldPtr& target,
                           const FieldElement& gen_image) {
  BinaryQuintic out{target, {}};
  for (int k = 0; k < 6; ++k) out.c[k] = embed(f.c[k], target, gen_image);
  return out;
}

FieldElement binform_eval(const BinaryQuintic& f, const P1Point& p) {
  FieldElement acc = FieldElement::zero(f.field);
  for (int k = 0; k <= 5; ++k) {
    FieldElement term = f.c[k];
    for (int i = 0; i < 5 - k; ++i) term = term * p.x;
    for (int i = 0; i < k; ++i) term = term * p.y;
    acc = acc + term;
  }
  return acc;
}

ProjMap5 ProjMap5::make(FieldPtr field, std::vector<std::vector<FieldElement>> rows) {
  if (rows.size() != 5) fail("ProjMap5: need 5x5 matrix");
  ProjMap5 m;
  m.field_ = std::move(field);
  m.m_.reserve(25);
  for (const auto& row : rows) {
    if (row.size() != 5) fail("ProjMap5: need 5x5 matrix");
    for (const auto& e : row) {
      if (!same_field(e.field(), m.field_)) fail("ProjMap5: entry field mismatch");
      m.m_.push_back(e);
    }
  }
  // invertibility via elimination
  std::vector<FieldElement> a = m.m_;
  for (int col = 0, rank = 0; col < 5; ++col) {
    int piv = -1;
    for (int r = rank; r < 5; ++r)
      if (!a[r * 5 + col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail("ProjMap5: singular matrix");
    for (int j = 0; j < 5; ++j) std::swap(a[rank * 5 + j], a[piv * 5 + j]);
    FieldElement pi = a[rank * 5 + col].inv();
    for (int j = 0; j < 5; ++j) a[rank * 5 + j] = a[rank * 5 + j] * pi;
    for (int r = 0; r < 5; ++r) {
      if (r == rank || a[r * 5 + col].is_zero()) continue;
      FieldElement f = a[r * 5 + col];
      for (int j = 0; j < 5; ++j) a[r * 5 + j] = a[r * 5 + j] - f * a[rank * 5 + j];
    }
    ++rank;
  }
  return m;
}

ProjMap5 ProjMap5::identity(const FieldPtr& field) {
  return diagonal(field, std::vector<FieldElement>(5, FieldElement::one(field)));
}

ProjMap5 ProjMap5::diagonal(const FieldPtr& field, std::vector<FieldElement> diag) {
  if (diag.size() != 5) fail("ProjMap5: need five diagonal entries");
  std::vector<std::vector<FieldElement>> rows(
      5, std::vector<FieldElement>(5, FieldElement::zero(field)));
  for (int i = 0; i < 5; ++i) rows[i][i] = diag[i];
  return make(field, std::move(rows));
}

ProjMap5 ProjMap5::compose(const ProjMap5& o) const {
  std::vector<std::vector<FieldElement>> rows(
      5, std::vector<FieldElement>(5, FieldElement::zero(field_)));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      FieldElement s = FieldElement::zero(field_);
      for (int k = 0; k < 5; ++k) s = s + at(i, k) * o.at(k, j);
      rows[i][j] = s;
    }
  return make(field_, std::move(rows));
}

ProjMap5 ProjMap5::inverse() const {
  // Gauss-Jordan with an attached identity block
  std::vector<FieldElement> a = m_;
  std::vector<FieldElement> inv(25, FieldElement::zero(field_));
  for (int i = 0; i < 5; ++i) inv[i * 5 + i] = FieldElement::one(field_);
  for (int col = 0; col < 5; ++col) {
    int piv = -1;
    for (int r = col; r < 5; ++r)
      if (!a[r * 5 + col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail("ProjMap5::inverse: singular");
    for (int j = 0; j < 5; ++j) {
      std::swap(a[col * 5 + j], a[piv * 5 + j]);
      std::swap(inv[col * 5 + j], inv[piv * 5 + j]);
    }
    FieldElement pi = a[col * 5 + col].inv();
    for (int j = 0; j < 5; ++j) {
      a[col * 5 + j] = a[col * 5 + j] * pi;
      inv[col * 5 + j] = inv[col * 5 + j] * pi;
    }
    for (int r = 0; r < 5; ++r) {
      if (r == col || a[r * 5 + col].is_zero()) continue;
      FieldElement f = a[r * 5 + col];
      for (int j = 0; j < 5; ++j) {
        a[r * 5 + j] = a[r * 5 + j] - f * a[col * 5 + j];
        inv[r * 5 + j] = inv[r * 5 + j] - f * inv[col * 5 + j];
      }
    }
  }
  std::vector<std::vector<FieldElement>> rows(5);
  for (int i = 0; i < 5; ++i) rows[i].assign(inv.begin() + i * 5, inv.begin() + i * 5 + 5);
  return make(field_, std::move(rows));
}

ProjMap5 ProjMap5::normalized() const {
  for (int k = 0; k < 25; ++k) {
    if (!m_[k].is_zero()) {
      FieldElement s = m_[k].inv();
      ProjMap5 out = *this;
      for (auto& e : out.m_) e = e * s;
      return out;
    }
  }
  fail("ProjMap5: zero matrix");
}

Quadric apply_map(const ProjMap5& m, const Quadric& q) {
  Quadric out = Quadric::zero(q.field());
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) {
      FieldElement s = FieldElement::zero(q.field());
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) s = s + m.at(a, i) * q.at(a, b) * m.at(b, j);
      out.set(i, j, s);
    }
  return out;
}

std::optional<Mat2> preserves_pencil(const ProjMap5& m, const QuadricPencil& p) {
  const FieldPtr& k = p.field();
  Mat2 out{{FieldElement::zero(k), FieldElement::zero(k), FieldElement::zero(k),
            FieldElement::zero(k)}};
  for (int row = 0; row < 2; ++row) {
    Quadric qt = apply_map(m, row == 0 ? p.q1 : p.q2);
    // solve qt = a q1 + b q2 from two independent positions, then verify
    bool solved = false;
    FieldElement a = FieldElement::zero(k), b = FieldElement::zero(k);
    for (int k1 = 0; k1 < 25 && !solved; ++k1) {
      for (int k2 = k1 + 1; k2 < 25 && !solved; ++k2) {
        int i1 = k1 / 5, j1 = k1 % 5, i2 = k2 / 5, j2 = k2 % 5;
        FieldElement det = p.q1.at(i1, j1) * p.q2.at(i2, j2) -
                           p.q1.at(i2, j2) * p.q2.at(i1, j1);
        if (det.is_zero()) continue;
        FieldElement di = det.inv();
        a = (qt.at(i1, j1) * p.q2.at(i2, j2) - qt.at(i2, j2) * p.q2.at(i1, j1)) * di;
        b = (p.q1.at(i1, j1) * qt.at(i2, j2) - p.q1.at(i2, j2) * qt.at(i1, j1)) * di;
        solved = true;
      }
    }
    if (!solved) return std::nullopt;
    Quadric comb = p.q1.scaled(a).plus(p.q2.scaled(b));
    if (!(comb == qt)) return std::nullopt;
    out.m[row * 2] = a;
    out.m[row * 2 + 1] = b;
  }
  return out;
}

int group_order_of_maps(const std::vector<ProjMap5>& gens, int cap) {
  if (gens.empty()) return 1;
  const FieldPtr& k = gens[0].field();
  auto key = [](const ProjMap5& m) {
    std::vector<Rat> flat;
    ProjMap5 n = m.normalized();
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        for (const Rat& c : n.at(i, j).coeffs()) flat.push_back(c);
    return flat;
  };
  std::set<std::vector<Rat>> seen;
  std::vector<ProjMap5> frontier{ProjMap5::identity(k)};
  seen.insert(key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<ProjMap5> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        ProjMap5 y = x.compose(g);
        auto ky = key(y);
        if (seen.insert(std::move(ky)).second) {
          if (int(seen.size()) > cap)
            throw std::runtime_error("group_order_of_maps: closure cap exceeded");
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return int(seen.size());
}

bool point_on(const QuadricPencil& p, const std::array<FieldElement, 5>& pt) {
  bool nonzero = false;
  for (const auto& c : pt)
    if (!c.is_zero()) nonzero = true;
  if (!nonzero) fail("point_on: (0:...:0) is not a point");
  return p.q1.eval(pt).is_zero() && p.q2.eval(pt).is_zero();
}

QuadricPencil witness_transform(const PencilWitness& w, const QuadricPencil& p) {
  const FieldPtr& k = p.field();
  ProjMap5 D = ProjMap5::diagonal(k, w.diag);
  Quadric s1 = apply_map(D, p.q1), s2 = apply_map(D, p.q2);
  Quadric r1 = s1.scaled(w.t.m[0]).plus(s2.scaled(w.t.m[1]));
  Quadric r2 = s1.scaled(w.t.m[2]).plus(s2.scaled(w.t.m[3]));
  return QuadricPencil::make(std::move(r1), std::move(r2));
}

namespace {

// nullspace basis of an n x 4 system over a field
std::vector<std::array<FieldElement, 4>> nullspace4(
    std::vector<std::array<FieldElement, 4>> rows, const FieldPtr& k) {
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (!rows[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    FieldElement pi = rows[rank][col].inv();
    for (int j = 0; j < 4; ++j) rows[rank][j] = rows[rank][j] * pi;
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      FieldElement f = rows[r][col];
      for (int j = 0; j < 4; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<std::array<FieldElement, 4>> basis;
  for (int col = 0; col < 4; ++col) {
    if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
    std::array<FieldElement, 4> v{FieldElement::zero(k), FieldElement::zero(k),
                                  FieldElement::zero(k), FieldElement::zero(k)};
    v[col] = FieldElement::one(k);
    for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -rows[r][col];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

std::optional<PencilWitness> pencil_equivalent(const QuadricPencil& p1,
                                               const QuadricPencil& p2) {
  if (!same_field(p1.field(), p2.field())) fail("pencil_equivalent: field mismatch");
  const FieldPtr& k = p1.field();
  const FieldElement zero = FieldElement::zero(k), one = FieldElement::one(k);

  // Linear constraints on T = (t11,t12,t21,t22): where the target entry pair
  // vanishes the source combination must vanish; elsewhere a cross-ratio
  // elimination between the two target rows.
  std::vector<std::array<FieldElement, 4>> rows;
  for (int i = 0; i < 5; ++i) {
    for (int j = i; j < 5; ++j) {
      const FieldElement &s0 = p1.q1.at(i, j), &s1 = p1.q2.at(i, j);
      const FieldElement &u = p2.q1.at(i, j), &v = p2.q2.at(i, j);
      bool sz = s0.is_zero() && s1.is_zero();
      bool tz = u.is_zero() && v.is_zero();
      if (tz) {
        if (!sz) {
          rows.push_back({s0, s1, zero, zero});
          rows.push_back({zero, zero, s0, s1});
        }
      } else {
        if (sz) return std::nullopt;  // nothing can create the entry
        rows.push_back({v * s0, v * s1, -(u * s0), -(u * s1)});
      }
    }
  }
  std::vector<std::array<FieldElement, 4>> cands = nullspace4(std::move(rows), k);
  // fallbacks: identity, and pairwise sums when the space is larger
  cands.push_back({one, zero, zero, one});
  size_t nbasis = cands.size() - 1;
  for (size_t a = 0; a + 1 < nbasis; ++a)
    for (size_t b = a + 1; b < nbasis; ++b) {
      cands.push_back({cands[a][0] + cands[b][0], cands[a][1] + cands[b][1],
                       cands[a][2] + cands[b][2], cands[a][3] + cands[b][3]});
      cands.push_back({cands[a][0] - cands[b][0], cands[a][1] - cands[b][1],
                       cands[a][2] - cands[b][2], cands[a][3] - cands[b][3]});
    }

  for (const auto& t : cands) {
    if ((t[0] * t[3] - t[1] * t[2]).is_zero()) continue;
    Quadric c1 = p1.q1.scaled(t[0]).plus(p1.q2.scaled(t[1]));
    Quadric c2 = p1.q1.scaled(t[2]).plus(p1.q2.scaled(t[3]));
    // ratios rho[i][j] = target / combined-source where both entries live
    std::vector<std::optional<FieldElement>> rho(25);
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = i; j < 5 && ok; ++j) {
        for (int row = 0; row < 2; ++row) {
          const Quadric& c = row == 0 ? c1 : c2;
          const Quadric& b = row == 0 ? p2.q1 : p2.q2;
          bool cz = c.at(i, j).is_zero(), bz = b.at(i, j).is_zero();
          if (cz != bz) {
            ok = false;
            break;
          }
          if (cz) continue;
          FieldElement r = b.at(i, j) / c.at(i, j);
          if (rho[i * 5 + j] && !(*rho[i * 5 + j] == r)) {
            ok = false;
            break;
          }
          rho[i * 5 + j] = r;
        }
      }
    if (!ok) continue;
    // choose sigma from the first covered diagonal entry, then recover D
    std::optional<FieldElement> sigma;
    std::vector<std::optional<FieldElement>> d(5);
    for (int i = 0; i < 5; ++i)
      if (rho[i * 5 + i]) {
        sigma = rho[i * 5 + i];
        d[i] = one;
        break;
      }
    if (!sigma) {
      for (int i = 0; i < 5 && !sigma; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (rho[i * 5 + j]) {
            sigma = rho[i * 5 + j];
            d[i] = one;
            d[j] = one;
            break;
          }
    }
    if (!sigma) continue;
    FieldElement sigma_inv = sigma->inv();
    bool progress = true, good = true;
    while (progress && good) {
      progress = false;
      for (int i = 0; i < 5; ++i) {
        if (d[i]) continue;
        if (rho[i * 5 + i]) {
          auto root = field_sqrt(*rho[i * 5 + i] * sigma_inv);
          if (!root) {
            good = false;
            break;
          }
          d[i] = *root;
          progress = true;
          continue;
        }
        for (int j = 0; j < 5; ++j) {
          if (j == i) continue;
          int a = std::min(i, j), b = std::max(i, j);
          if (rho[a * 5 + b] && d[j] && !d[j]->is_zero()) {
            d[i] = *rho[a * 5 + b] * sigma_inv / *d[j];
            progress = true;
            break;
          }
        }
      }
    }
    if (!good) continue;
    for (auto& di : d)
      if (!di) di = one;
    // sign search and exact verification
    for (int mask = 0; mask < 32; ++mask) {
      PencilWitness w;
      for (int i = 0; i < 5; ++i)
        w.diag.push_back((mask >> i) & 1 ? -*d[i] : *d[i]);
      bool nz = std::none_of(w.diag.begin(), w.diag.end(),
                             [](const FieldElement& e) { return e.is_zero(); });
      if (!nz) break;
      w.t = Mat2{{*sigma * t[0], *sigma * t[1], *sigma * t[2], *sigma * t[3]}};
      QuadricPencil image = witness_transform(w, p1);
      if (image.q1 == p2.q1 && image.q2 == p2.q2) return w;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// catalog

namespace {

FieldElement fe(const FieldPtr& k, long num, long den = 1) {
  return FieldElement::from_rat(k, rat(num, den));
}

ProjMap5 rows_map(const FieldPtr& k, std::vector<std::vector<FieldElement>> rows) {
  return ProjMap5::make(k, std::move(rows));
}

std::vector<ProjMap5> sign_flips(const FieldPtr& k, int count) {
  std::vector<ProjMap5> out;
  for (int i = 0; i < count; ++i) {
    std::vector<FieldElement> diag(5, FieldElement::one(k));
    diag[i] = -FieldElement::one(k);
    out.push_back(ProjMap5::diagonal(k, diag));
  }
  return out;
}

Mat2 mat2(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
  return Mat2{{std::move(a), std::move(b), std::move(c), std::move(d)}};
}

const FieldPtr& field_qi() {
  static const FieldPtr f = make_field({rat(1), rat(0), rat(1)}, "Q(i)");
  return f;
}
const FieldPtr& field_qe3() {
  static const FieldPtr f = make_field({rat(1), rat(1), rat(1)}, "Q(eps3)");
  return f;
}
const FieldPtr& field_q5() {
  static const FieldPtr f = make_field({rat(-5), rat(0), rat(1)}, "Q(sqrt5)");
  return f;
}
const FieldPtr& field_z12() {
  // Q(zeta12), minimal polynomial x^4 - x^2 + 1; i = z^3, eps3 = z^2 - 1
  static const FieldPtr f = make_field({rat(1), rat(0), rat(-1), rat(0), rat(1)}, "Q(zeta12)");
  return f;
}

P1Point pnt(const FieldElement& x, const FieldElement& y) { return P1Point::make(x, y); }
P1Point pnt_r(const FieldPtr& k, const Rat& x, const Rat& y) {
  return P1Point::make(FieldElement::from_rat(k, x), FieldElement::from_rat(k, y));
}

// linear polynomial x - r
FPoly linfac(const FieldPtr& k, const FieldElement& r) {
  return FPoly{-r, FieldElement::one(k)};
}

FPoly poly_prod(const FieldPtr& k, const std::vector<FPoly>& fs) {
  FPoly p{FieldElement::one(k)};
  for (const auto& f : fs) p = fp_mul(p, f);
  return p;
}

// Vandermonde-style coordinate map: evaluation rows at the linear-factor
// roots and, for a quadratic factor, the two rows of x^j mod f in basis
// (1, xbar).
ProjMap5 crt_alignment(const FieldPtr& k, const std::vector<FPoly>& factors) {
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& f : factors) {
    if (fp_deg(f) == 1) {
      FieldElement r = -f[0];  // monic
      std::vector<FieldElement> row;
      FieldElement acc = FieldElement::one(k);
      for (int j = 0; j < 5; ++j) {
        row.push_back(acc);
        acc = acc * r;
      }
      rows.push_back(std::move(row));
    } else if (fp_deg(f) == 2) {
      std::vector<FieldElement> r0, r1;
      for (int j = 0; j < 5; ++j) {
        FPoly xj(j + 1, FieldElement::zero(k));
        xj[j] = FieldElement::one(k);
        FPoly red = fp_mod(xj, f);
        red.resize(2, FieldElement::zero(k));
        r0.push_back(red[0]);
        r1.push_back(red[1]);
      }
      rows.push_back(std::move(r0));
      rows.push_back(std::move(r1));
    } else {
      fail("crt_alignment: factors must have degree one or two");
    }
  }
  if (rows.size() != 5) fail("crt_alignment: factor degrees must sum to five");
  return ProjMap5::make(k, std::move(rows));
}

SurfaceRecord make_c4() {
  const FieldPtr& k = field_qi();
  FieldElement i = field_gen(k), one = FieldElement::one(k), z = FieldElement::zero(k);
  SurfaceRecord r;
  r.name = "c4";
  r.field = k;
  r.pencil = QuadricPencil::make(
      Quadric::from_diagonal(k, {one, one, one, one, one}),
      Quadric::from_diagonal(k, {one, i, -one, -i, z}));
  r.sign_gens = sign_flips(k, 5);
  r.named_gens = {rows_map(k, {{z, one, z, z, z},
                               {z, z, one, z, z},
                               {z, z, z, one, z},
                               {one, z, z, z, z},
                               {z, z, z, z, one}})};
  r.expected_rel = {mat2(one, z, z, -i)};
  r.expected_group_order = 64;
  r.ext = k;
  r.base_gen_image = i;
  r.printed_points = {pnt_r(k, rat(2), rat(1)), pnt_r(k, rat(2), rat(-1)),
                      pnt_r(k, rat(1), rat(0)), pnt(fe(k, 2), i), pnt(fe(k, 2), -i)};
  r.expected_roots = {pnt_r(k, rat(-1), rat(1)), pnt(-i, one), pnt_r(k, rat(1), rat(1)),
                      pnt(i, one), pnt_r(k, rat(0), rat(1))};
  return r;
}

SurfaceRecord make_s3_split() {
  const FieldPtr& k = field_qe3();
  FieldElement e = field_gen(k), e2 = e * e, one = FieldElement::one(k),
               z = FieldElement::zero(k);
  SurfaceRecord r;
  r.name = "s3-split";
  r.field = k;
  r.pencil = QuadricPencil::make(Quadric::from_diagonal(k, {one, e, e2, one, z}),
                                 Quadric::from_diagonal(k, {one, e2, e, z, one}));
  r.sign_gens = sign_flips(k, 5);
  r.named_gens = {rows_map(k, {{one, z, z, z, z},
                               {z, z, one, z, z},
                               {z, one, z, z, z},
                               {z, z, z, z, one},
                               {z, z, z, one, z}}),
                  rows_map(k, {{z, one, z, z, z},
                               {z, z, one, z, z},
                               {one, z, z, z, z},
                               {z, z, z, e, z},
                               {z, z, z, z, e2}})};
  r.expected_rel = {mat2(z, one, one, z), mat2(e2, z, z, e)};
  r.expected_group_order = 96;
  r.ext = k;
  r.base_gen_image = e;
  r.printed_points = {pnt_r(k, rat(1), rat(0)), pnt_r(k, rat(0), rat(1)),
                      pnt_r(k, rat(1), rat(1)), pnt(-e, one), pnt(one, -e)};
  r.expected_roots = {pnt_r(k, rat(-1), rat(1)), pnt(-e, one), pnt(-e2, one),
                      pnt_r(k, rat(0), rat(1)), pnt_r(k, rat(1), rat(0))};
  return r;
}

SurfaceRecord make_d5() {
  const FieldPtr& k = field_q5();
  FieldElement s5 = field_gen(k), one = FieldElement::one(k), z = FieldElement::zero(k);
  FieldElement phi = (one + s5) * rat(1, 2);
  SurfaceRecord r;
  r.name = "d5";
  r.field = k;
  // q2's last coefficient is the value implied by the trace-form model;
  // it equals the printed (8a-16) under a -> sqrt(5).
  r.pencil = QuadricPencil::make(
      Quadric::from_diagonal(
          k, {-(s5 + one), fe(k, 5) * s5 - fe(k, 11), -(s5 + one),
              fe(k, 5) * s5 - fe(k, 11), -(fe(k, 8) * s5 - fe(k, 24))}),
      Quadric::from_diagonal(
          k, {s5 - one, -(fe(k, 2) * s5 - fe(k, 4)), -(s5 + one),
              -(fe(k, 6) * s5 - fe(k, 14)), fe(k, 8) * s5 - fe(k, 16)}));
  r.sign_gens = sign_flips(k, 5);
  FieldElement half = FieldElement::from_rat(k, rat(1, 2));
  r.named_gens = {rows_map(k, {{z, z, z, z, fe(k, 2)},
                               {fe(k, 2) * phi + one, z, z, z, z},
                               {z, z, z, phi - one, z},
                               {z, phi, z, z, z},
                               {z, z, (phi + one) * half, z, z}}),
                  rows_map(k, {{z, fe(k, 2) - phi, z, z, z},
                               {phi + one, z, z, z, z},
                               {z, z, one, z, z},
                               {z, z, z, z, fe(k, 2) * phi},
                               {z, z, z, (phi - one) * half, z}})};
  r.expected_rel = {mat2(-phi, -phi, phi, -(phi + one)), mat2(z, one, one, z)};
  r.expected_group_order = 160;
  r.ext = k;
  r.base_gen_image = s5;
  r.printed_points = {pnt(-one, phi + one), pnt(phi + one, -one), pnt_r(k, rat(1), rat(1)),
                      pnt(fe(k, 2), phi - one), pnt(phi - one, fe(k, 2))};
  for (const auto& p : r.printed_points) r.expected_roots.push_back(pnt(-p.x, p.y));
  // trace-form fixture: the five roots in printed-point order
  std::vector<FieldElement> roots = {phi - fe(k, 2), -(phi + one), one, fe(k, 2) * phi,
                                     (phi - one) * half};
  std::vector<FPoly> factors;
  for (const auto& rt : roots) factors.push_back(linfac(k, rt));
  TraceFixture fx;
  fx.factors = factors;
  fx.conj_quad_lambda = false;
  fx.lambda_parts.assign(5, FPoly{one});
  fx.alignment = crt_alignment(k, factors);
  fx.expected_witness =
      PencilWitness{{one, one, one, one, one}, mat2(fe(k, 25), z, z, fe(k, 25))};
  r.trace = std::move(fx);
  return r;
}

Quadric block_quadric(const FieldPtr& k, FieldElement d0, FieldElement d1, FieldElement d2,
                      FieldElement b33, FieldElement b34, FieldElement b44) {
  Quadric q = Quadric::zero(k);
  q.set(0, 0, d0);
  q.set(1, 1, d1);
  q.set(2, 2, d2);
  q.set(3, 3, b33);
  q.set(3, 4, b34);
  q.set(4, 4, b44);
  return q;
}

std::vector<FPoly> c23_factors(const FieldPtr& k) {
  FieldElement one = FieldElement::one(k);
  return {linfac(k, FieldElement::from_rat(k, rat(1, 2))), linfac(k, fe(k, 2)),
          linfac(k, fe(k, -1)), FPoly{one, -one, one}};  // x^2 - x + 1
}

TraceFixture c23_fixture(const FieldPtr& k, std::vector<FPoly> lambda_parts) {
  TraceFixture fx;
  fx.factors = c23_factors(k);
  fx.conj_quad_lambda = true;
  fx.lambda_parts = std::move(lambda_parts);
  fx.alignment = crt_alignment(k, fx.factors);
  FieldElement one = FieldElement::one(k), z = FieldElement::zero(k);
  FieldElement sg = FieldElement::from_rat(k, rat(-27, 8));
  fx.expected_witness =
      PencilWitness{{one, fe(k, 4), fe(k, 2), fe(k, 2), fe(k, 2)}, mat2(z, sg, sg, z)};
  return fx;
}

SurfaceRecord make_c23_semidirect() {
  const FieldPtr& k = rationals();
  FieldElement one = FieldElement::one(k), z = FieldElement::zero(k);
  SurfaceRecord r;
  r.name = "c23-semidirect";
  r.field = k;
  r.pencil = QuadricPencil::make(
      block_quadric(k, one, fe(k, -8), one, fe(k, -3), fe(k, 3), fe(k, 6)),
      block_quadric(k, fe(k, 2), fe(k, -4), -one, fe(k, -6), fe(k, -3), fe(k, 3)));
  r.sign_gens = sign_flips(k, 3);
  FieldElement half = FieldElement::from_rat(k, rat(1, 2));
  r.named_gens = {rows_map(k, {{z, z, one, z, z},
                               {half, z, z, z, z},
                               {z, fe(k, 2), z, z, z},
                               {z, z, z, z, one},
                               {z, z, z, -one, -one}}),
                  rows_map(k, {{z, fe(k, 2), z, z, z},
                               {half, z, z, z, z},
                               {z, z, one, z, z},
                               {z, z, z, z, one},
                               {z, z, z, one, z}})};
  r.expected_rel = {mat2(z, -one, one, -one), mat2(z, -one, -one, z)};
  r.expected_group_order = 48;
  const FieldPtr& E = field_qe3();
  FieldElement e = field_gen(E), eone = FieldElement::one(E);
  r.ext = E;
  r.base_gen_image = FieldElement::zero(E);  // base is Q
  r.printed_points = {pnt_r(E, rat(2), rat(1)), pnt_r(E, rat(1), rat(2)),
                      pnt_r(E, rat(1), rat(-1)), pnt(-e, eone), pnt(eone, -e)};
  r.expected_roots = {pnt_r(E, rat(-2), rat(1)), pnt_r(E, rat(-1), rat(2)),
                      pnt_r(E, rat(1), rat(1)), pnt(e, eone), pnt(e * e, eone)};
  r.trace = c23_fixture(k, {FPoly{one}, FPoly{one}, FPoly{one}, FPoly{one}});
  return r;
}

SurfaceRecord make_c23_nonsplit() {
  // alpha = 1, beta = 2i: alpha^2 + beta^2 = -3 over Q(i)
  const FieldPtr& k = field_qi();
  FieldElement i = field_gen(k), one = FieldElement::one(k), z = FieldElement::zero(k);
  FieldElement alpha = one, beta = i * rat(2), bi = beta.inv();
  SurfaceRecord r;
  r.name = "c23-nonsplit";
  r.field = k;
  r.pencil = QuadricPencil::make(
      block_quadric(k, one, fe(k, -8), one, fe(k, 2), one - alpha, -(alpha + one)),
      block_quadric(k, fe(k, 2), fe(k, -4), -one, alpha + one, fe(k, 2), one - alpha));
  r.sign_gens = sign_flips(k, 3);
  FieldElement half = FieldElement::from_rat(k, rat(1, 2));
  r.named_gens = {rows_map(k, {{z, z, one, z, z},
                               {half, z, z, z, z},
                               {z, fe(k, 2), z, z, z},
                               {z, z, z, z, one},
                               {z, z, z, -one, -one}}),
                  rows_map(k, {{z, fe(k, 2), z, z, z},
                               {half, z, z, z, z},
                               {z, z, one, z, z},
                               {z, z, z, (-alpha - one) * bi, fe(k, -2) * bi},
                               {z, z, z, (alpha - one) * bi, (alpha + one) * bi}})};
  r.expected_rel = {mat2(z, -one, one, -one), mat2(z, -one, -one, z)};
  r.expected_group_order = 48;
  const FieldPtr& E = field_z12();
  FieldElement zz = field_gen(E), eone = FieldElement::one(E);
  FieldElement i_in = zz * zz * zz;
  FieldElement e3_in = zz * zz - eone;
  r.ext = E;
  r.base_gen_image = i_in;
  r.printed_points = {pnt_r(E, rat(2), rat(1)), pnt_r(E, rat(1), rat(2)),
                      pnt_r(E, rat(1), rat(-1)), pnt(-e3_in, eone), pnt(eone, -e3_in)};
  r.expected_roots = {pnt_r(E, rat(-2), rat(1)), pnt_r(E, rat(-1), rat(2)),
                      pnt_r(E, rat(1), rat(1)), pnt(e3_in, eone), pnt(e3_in * e3_in, eone)};
  // lambda = (1, 1, 1, (-1/3 + alpha/9) x - (2/9) alpha)
  FieldElement b = FieldElement::from_rat(k, rat(-1, 3)) + alpha * rat(1, 9);
  FieldElement c = -(alpha * rat(2, 9));
  r.trace = c23_fixture(k, {FPoly{one}, FPoly{one}, FPoly{one}, FPoly{c, b}});
  r.surface_points = {{fe(k, 2), one, fe(k, 2), z, z}};
  return r;
}

}  // namespace

SurfaceRecord catalog_c2(const Rat& a) {
  if (a == 0 || a == 1 || a == -1) fail("catalog_c2: need a not in {0, 1, -1}");
  if (a == 3 || a == -3) fail("catalog_c2: the point fixture needs a != 3, -3");
  const FieldPtr& k = rationals();
  FieldElement one = FieldElement::one(k), z = FieldElement::zero(k);
  FieldElement av = FieldElement::from_rat(k, a);
  SurfaceRecord r;
  r.name = "c2";
  r.field = k;
  r.pencil = QuadricPencil::make(Quadric::from_diagonal(k, {one, one, one, one, one}),
                                 Quadric::from_diagonal(k, {one, av, -one, -av, z}));
  r.sign_gens = sign_flips(k, 5);
  r.named_gens = {rows_map(k, {{z, z, one, z, z},
                               {z, z, z, one, z},
                               {one, z, z, z, z},
                               {z, one, z, z, z},
                               {z, z, z, z, one}})};
  r.expected_rel = {mat2(one, z, z, -one)};
  r.expected_group_order = 32;
  r.ext = k;
  r.base_gen_image = FieldElement::zero(k);
  // image of the root set under x -> (3-x)/(3+x); shape {p, 1/p, 1, q, 1/q}
  Rat K = (Rat(3) + a) / (Rat(3) - a);
  r.printed_points = {pnt_r(k, rat(2), rat(1)), pnt_r(k, rat(1), rat(2)),
                      pnt_r(k, rat(1), rat(1)), pnt_r(k, K, rat(1)), pnt_r(k, rat(1), K)};
  r.expected_roots = {pnt_r(k, rat(-1), rat(1)), pnt(-av, one), pnt_r(k, rat(1), rat(1)),
                      pnt(av, one), pnt_r(k, rat(0), rat(1))};
  std::set<P1Point> uniq(r.printed_points.begin(), r.printed_points.end());
  if (uniq.size() != 5) fail("catalog_c2: degenerate parameter (points collide)");
  return r;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"c2",  "c4",           "s3-split",
                                                 "d5",  "c23-semidirect", "c23-nonsplit"};
  return names;
}

SurfaceRecord catalog(const std::string& name) {
  if (name == "c2") return catalog_c2(rat(2));
  if (name == "c4") return make_c4();
  if (name == "s3-split") return make_s3_split();
  if (name == "d5") return make_d5();
  if (name == "c23-semidirect") return make_c23_semidirect();
  if (name == "c23-nonsplit") return make_c23_nonsplit();
  fail("catalog: unknown surface '" + name + "'");
}

FPoly fixture_lambda(const SurfaceRecord& rec, const std::vector<FPoly>& lambda_parts) {
  const TraceFixture& fx = *rec.trace;
  EtaleAlgebra alg = EtaleAlgebra::make(rec.field, poly_prod(rec.field, fx.factors));
  std::vector<FPoly> parts = lambda_parts;
  if (fx.conj_quad_lambda) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (fp_deg(fx.factors[i]) == 2 && parts[i].size() == 2) {
        // substitute x -> s - x for the trace sum s of the factor
        FieldElement s = -fx.factors[i][1];
        parts[i] = FPoly{parts[i][0] + parts[i][1] * s, -parts[i][1]};
      }
    }
  }
  return component_lambda(alg, fx.factors, parts);
}

QuadricPencil aligned_trace_pencil(const SurfaceRecord& rec,
                                   const std::vector<FPoly>& lambda_parts) {
  const TraceFixture& fx = *rec.trace;
  EtaleAlgebra alg = EtaleAlgebra::make(rec.field, poly_prod(rec.field, fx.factors));
  QuadricPencil tp = trace_quadrics(alg, fixture_lambda(rec, lambda_parts));
  ProjMap5 vinv = fx.alignment.inverse();
  return QuadricPencil::make(apply_map(vinv, tp.q1), apply_map(vinv, tp.q2));
}

std::vector<SurfaceCheck> verify_surface(const SurfaceRecord& rec) {
  std::vector<SurfaceCheck> out;
  auto push = [&](const std::string& name, bool pass, std::string detail = "") {
    out.push_back(SurfaceCheck{name, pass, std::move(detail)});
  };

  push("smooth", is_smooth(rec.pencil));

  for (size_t g = 0; g < rec.named_gens.size(); ++g) {
    auto T = preserves_pencil(rec.named_gens[g], rec.pencil);
    bool pass = T.has_value() && *T == rec.expected_rel[g];
    std::string detail;
    if (T) {
      detail = "T = [[" + T->m[0].str() + "," + T->m[1].str() + "],[" + T->m[2].str() +
               "," + T->m[3].str() + "]]";
    } else {
      detail = "pencil not preserved";
    }
    push("relation-g" + std::to_string(g + 1), pass, detail);
  }

  {
    std::vector<ProjMap5> gens = rec.sign_gens;
    gens.insert(gens.end(), rec.named_gens.begin(), rec.named_gens.end());
    int order = group_order_of_maps(gens);
    push("group-order", order == rec.expected_group_order,
         "order " + std::to_string(order) + ", expected " +
             std::to_string(rec.expected_group_order));
  }

  {
    auto disc = discriminant(rec.pencil);
    bool roots_ok = false, equiv_ok = false;
    if (disc) {
      BinaryQuintic lifted = binform_lift(*disc, rec.ext, rec.base_gen_image);
      roots_ok = binform_proportional(binform_from_points(rec.ext, rec.expected_roots),
                                      lifted);
      equiv_ok = point_set_equivalent(rec.printed_points, rec.expected_roots).has_value();
    }
    push("discriminant-roots", roots_ok);
    push("points-equivalent", equiv_ok);
  }

  for (size_t i = 0; i < rec.surface_points.size(); ++i)
    push("surface-point-" + std::to_string(i + 1), point_on(rec.pencil, rec.surface_points[i]));

  if (rec.trace) {
    QuadricPencil aligned = aligned_trace_pencil(rec, rec.trace->lambda_parts);
    auto w = pencil_equivalent(aligned, rec.pencil);
    bool pass = false;
    if (w) {
      QuadricPencil image = witness_transform(*w, aligned);
      pass = image.q1 == rec.pencil.q1 && image.q2 == rec.pencil.q2;
    }
    push("trace-reconstruction", pass, w ? "witness found" : "no witness");
  }

  return out;
}

bool all_pass(const std::vector<SurfaceCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SurfaceCheck& c) { return c.pass; });
}

}  // namespace dp4
