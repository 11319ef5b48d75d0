#include "dp4/picard.hpp"

#include "dp4/rational.hpp"

namespace dp4 {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  DivisorClass out;
  for (int i = 0; i < 6; ++i) out.c[i] = c[i] + o.c[i];
  return out;
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass out;
  for (int i = 0; i < 6; ++i) out.c[i] = -c[i];
  return out;
}

int64_t intersect(const DivisorClass& d1, const DivisorClass& d2) {
  int64_t s = d1.c[5] * d2.c[5];
  for (int i = 0; i < 5; ++i) s -= d1.c[i] * d2.c[i];
  return s;
}

DivisorClass canonical_class() { return DivisorClass{{1, 1, 1, 1, 1, -3}}; }
DivisorClass hyperplane_class() { return DivisorClass{{0, 0, 0, 0, 0, 1}}; }

DivisorClass class_of(LineId l) {
  DivisorClass d;
  if (l.is_E()) {
    d.c[l.a - 1] = 1;
  } else if (l.is_L()) {
    d.c[5] = 1;
    d.c[l.a - 1] = -1;
    d.c[l.b - 1] = -1;
  } else {
    d = DivisorClass{{-1, -1, -1, -1, -1, 2}};
  }
  return d;
}

std::vector<DivisorClass> exceptional_classes() {
  const DivisorClass K = canonical_class();
  std::vector<DivisorClass> out;
  std::array<int64_t, 5> b{};
  for (int a = -3; a <= 3; ++a) {
    for (b[0] = -2; b[0] <= 2; ++b[0])
      for (b[1] = -2; b[1] <= 2; ++b[1])
        for (b[2] = -2; b[2] <= 2; ++b[2])
          for (b[3] = -2; b[3] <= 2; ++b[3])
            for (b[4] = -2; b[4] <= 2; ++b[4]) {
              DivisorClass d{{-b[0], -b[1], -b[2], -b[3], -b[4], a}};
              if (intersect(d, d) == -1 && intersect(d, K) == -1) out.push_back(d);
            }
  }
  return out;
}

std::vector<std::pair<DivisorClass, DivisorClass>> exceptional_pairs() {
  std::vector<std::pair<DivisorClass, DivisorClass>> out;
  const DivisorClass K = canonical_class();
  for (int i = 1; i <= 5; ++i) {
    DivisorClass first = hyperplane_class();
    first.c[i - 1] = -1;                  // H - E_i
    DivisorClass second = -K + (-first);  // -K - H + E_i
    out.emplace_back(first, second);
  }
  return out;
}

PicMap PicMap::identity() {
  PicMap m;
  for (int i = 0; i < 6; ++i) m.m[i][i] = 1;
  return m;
}

DivisorClass PicMap::apply(const DivisorClass& d) const {
  DivisorClass out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out.c[i] += m[i][j] * d.c[j];
  return out;
}

PicMap PicMap::compose(const PicMap& o) const {
  PicMap out;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int64_t s = 0;
      for (int k = 0; k < 6; ++k) s += m[i][k] * o.m[k][j];
      out.m[i][j] = s;
    }
  return out;
}

PicMap pic_action(const WeylElement& g) {
  PicMap out;
  auto set_col = [&](int col, const DivisorClass& d) {
    for (int r = 0; r < 6; ++r) out.m[r][col] = d.c[r];
  };
  for (int i = 1; i <= 5; ++i) set_col(i - 1, class_of(line_action(g, LineId::E(i))));
  DivisorClass h = class_of(line_action(g, LineId::L(4, 5))) +
                   class_of(line_action(g, LineId::E(4))) +
                   class_of(line_action(g, LineId::E(5)));
  set_col(5, h);
  return out;
}

bool preserves_form(const PicMap& m) {
  // J = diag(-1,...,-1,1)
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      int64_t s = 0;
      for (int k = 0; k < 6; ++k) {
        int64_t jk = (k == 5) ? 1 : -1;
        s += m.m[k][i] * jk * m.m[k][j];
      }
      int64_t expect = (i == j) ? ((i == 5) ? 1 : -1) : 0;
      if (s != expect) return false;
    }
  }
  DivisorClass K = canonical_class();
  return m.apply(K) == K;
}

int invariant_rank(const std::vector<PicMap>& maps) {
  // rank of the stacked (M - I) blocks over Q; fixed sublattice rank = 6 - rank
  std::vector<std::array<Rat, 6>> rows;
  for (const auto& m : maps) {
    for (int i = 0; i < 6; ++i) {
      std::array<Rat, 6> row;
      for (int j = 0; j < 6; ++j) row[j] = Rat(m.m[i][j] - (i == j ? 1 : 0));
      rows.push_back(row);
    }
  }
  int rank = 0;
  for (int col = 0; col < 6 && rank < int(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < int(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (int j = col; j < 6; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return 6 - rank;
}

}  // namespace dp4
