#include "dp4/lines.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dp4 {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

LineId LineId::E(int i) {
  if (i < 1 || i > 5) fail("LineId::E: index out of range");
  return LineId{int8_t(i), 0};
}

LineId LineId::L(int i, int j) {
  if (i < 1 || i > 5 || j < 1 || j > 5 || i == j) fail("LineId::L: bad index pair");
  if (i > j) std::swap(i, j);
  return LineId{int8_t(i), int8_t(j)};
}

std::string LineId::name() const {
  if (is_C()) return "C";
  if (is_E()) return "E" + std::to_string(a);
  return "L" + std::to_string(a) + std::to_string(b);
}

const std::vector<LineId>& all_lines() {
  static const std::vector<LineId> lines = [] {
    std::vector<LineId> out;
    for (int i = 1; i <= 5; ++i) out.push_back(LineId::E(i));
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) out.push_back(LineId::L(i, j));
    out.push_back(LineId::C());
    return out;
  }();
  return lines;
}

std::optional<LineId> parse_line(const std::string& s) {
  if (s == "C") return LineId::C();
  if (s.size() == 2 && s[0] == 'E' && s[1] >= '1' && s[1] <= '5')
    return LineId::E(s[1] - '0');
  if (s.size() == 3 && s[0] == 'L' && s[1] >= '1' && s[1] <= '5' && s[2] >= '1' &&
      s[2] <= '5' && s[1] != s[2])
    return LineId::L(s[1] - '0', s[2] - '0');
  return std::nullopt;
}

LineId ci_action(int i, LineId l) {
  if (l.is_C()) return LineId::E(i);
  if (l.is_E()) {
    if (l.a == i) return LineId::C();
    return LineId::L(i, l.a);
  }
  if (l.a == i || l.b == i) return LineId::E(l.a == i ? l.b : l.a);
  // L_jk -> L over the complement of {i,j,k}
  bool used[6] = {false, false, false, false, false, false};
  used[i] = used[l.a] = used[l.b] = true;
  int p = 0, q = 0;
  for (int k = 1; k <= 5; ++k)
    if (!used[k]) (p == 0 ? p : q) = k;
  return LineId::L(p, q);
}

LineId sign_action(SignVector a, LineId l) {
  for (int i = 1; i <= 5; ++i)
    if (a.test(i)) l = ci_action(i, l);
  return l;
}

LineId line_action(const WeylElement& g, LineId l) {
  if (l.is_E())
    l = LineId::E(g.perm.apply(l.a));
  else if (l.is_L())
    l = LineId::L(g.perm.apply(l.a), g.perm.apply(l.b));
  return sign_action(g.sign, l);
}

int incidence(LineId l1, LineId l2) {
  if (l1 == l2) return -1;
  if (l1.is_C() || l2.is_C()) {
    const LineId& other = l1.is_C() ? l2 : l1;
    return other.is_E() ? 1 : 0;  // C.E_i = 1, C.L_ij = 0
  }
  if (l1.is_E() && l2.is_E()) return 0;
  if (l1.is_L() && l2.is_L()) {
    bool disjoint = l1.a != l2.a && l1.a != l2.b && l1.b != l2.a && l1.b != l2.b;
    return disjoint ? 1 : 0;
  }
  const LineId& e = l1.is_E() ? l1 : l2;
  const LineId& L = l1.is_E() ? l2 : l1;
  return (L.a == e.a || L.b == e.a) ? 1 : 0;
}

bool torsor_check() {
  for (const LineId& l1 : all_lines()) {
    for (const LineId& l2 : all_lines()) {
      int count = 0;
      for (uint8_t bits = 0; bits < 32; ++bits) {
        if (std::popcount(bits) % 2 != 0) continue;
        if (sign_action(SignVector{bits}, l1) == l2) ++count;
      }
      if (count != 1) return false;
    }
  }
  return true;
}

int FiniteGroup::identity() const {
  for (size_t e = 0; e < size(); ++e) {
    bool ok = true;
    for (size_t i = 0; i < size(); ++i)
      if (table[e][i] != int(i) || table[i][e] != int(i)) {
        ok = false;
        break;
      }
    if (ok) return int(e);
  }
  fail("FiniteGroup: no identity element");
}

void FiniteGroup::validate() const {
  size_t n = size();
  if (n == 0 || table.size() != n) fail("FiniteGroup: empty or ragged table");
  for (const auto& row : table) {
    if (row.size() != n) fail("FiniteGroup: ragged table");
    for (int v : row)
      if (v < 0 || v >= int(n)) fail("FiniteGroup: table entry out of range");
  }
  int e = identity();
  for (size_t i = 0; i < n; ++i) {
    bool has_inv = false;
    for (size_t j = 0; j < n; ++j)
      if (table[i][j] == e && table[j][i] == e) has_inv = true;
    if (!has_inv) fail("FiniteGroup: element '" + names[i] + "' has no inverse");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          fail("FiniteGroup: table is not associative");
}

GaloisAction make_galois_action(FiniteGroup group, std::vector<WeylElement> rep,
                                std::optional<std::vector<SignVector>> cocycle) {
  group.validate();
  size_t n = group.size();
  if (rep.size() != n) fail("GaloisAction: rep must cover every group element");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(we_mul(rep[i], rep[j]) == rep[group.mul(int(i), int(j))]))
        fail("GaloisAction: rep is not a homomorphism at pair (" + group.names[i] + "," +
             group.names[j] + ")");
  if (cocycle) {
    if (cocycle->size() != n) fail("GaloisAction: cocycle must cover every group element");
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        SignVector lhs = (*cocycle)[group.mul(int(i), int(j))];
        SignVector rhs = (*cocycle)[i] * permute(rep[i].perm, (*cocycle)[j]);
        if (!(lhs == rhs))
          fail("GaloisAction: cocycle condition fails at pair (" + group.names[i] + "," +
               group.names[j] + ")");
      }
    }
  }
  return GaloisAction{std::move(group), std::move(rep), std::move(cocycle)};
}

std::vector<std::vector<LineId>> galois_orbits(const GaloisAction& action) {
  const auto& lines = all_lines();
  auto index_of = [&](LineId l) {
    return int(std::find(lines.begin(), lines.end(), l) - lines.begin());
  };
  std::vector<int> parent(16);
  for (int i = 0; i < 16; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t g = 0; g < action.group.size(); ++g) {
    for (int i = 0; i < 16; ++i) {
      LineId img = line_action(action.rep[g], lines[i]);
      if (action.cocycle) img = sign_action((*action.cocycle)[g], img);
      int a = find(i), b = find(index_of(img));
      if (a != b) parent[a] = b;
    }
  }
  std::vector<std::vector<LineId>> orbits;
  std::vector<int> root_slot(16, -1);
  for (int i = 0; i < 16; ++i) {
    int r = find(i);
    if (root_slot[r] < 0) {
      root_slot[r] = int(orbits.size());
      orbits.emplace_back();
    }
    orbits[root_slot[r]].push_back(lines[i]);
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) {
              return a.size() < b.size() || (a.size() == b.size() && a[0] < b[0]);
            });
  return orbits;
}

bool is_k_minimal(const std::vector<std::vector<LineId>>& orbits) {
  size_t total = 0;
  for (const auto& o : orbits) total += o.size();
  if (total != 16) fail("is_k_minimal: not a partition of the 16 lines");
  for (const auto& o : orbits) {
    bool has_couple = false;
    for (size_t i = 0; i < o.size() && !has_couple; ++i)
      for (size_t j = i + 1; j < o.size(); ++j)
        if (incidence(o[i], o[j]) >= 1) {
          has_couple = true;
          break;
        }
    if (!has_couple) return false;
  }
  return true;
}

bool is_quasi_split(const std::vector<std::vector<LineId>>& orbits) {
  for (const auto& o : orbits)
    if (o.size() == 1) return true;
  return false;
}

GaloisAction parse_scenario(const std::string& json_text) {
  try {
    nlohmann::json j = nlohmann::json::parse(json_text);
    FiniteGroup group;
    group.names = j.at("group").at("elements").get<std::vector<std::string>>();
    group.table = j.at("group").at("table").get<std::vector<std::vector<int>>>();
    std::vector<WeylElement> rep;
    for (const auto& nm : group.names)
      rep.push_back(parse_element(j.at("rep").at(nm).get<std::string>()));
    std::optional<std::vector<SignVector>> cocycle;
    if (j.contains("cocycle")) {
      std::vector<SignVector> c;
      for (const auto& nm : group.names) {
        WeylElement e = parse_element(j.at("cocycle").at(nm).get<std::string>());
        if (!e.perm.is_identity())
          fail("scenario: cocycle value '" + nm + "' is not a sign word");
        c.push_back(e.sign);
      }
      cocycle = std::move(c);
    }
    return make_galois_action(std::move(group), std::move(rep), std::move(cocycle));
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("scenario: malformed JSON: ") + e.what());
  }
}

GaloisAction load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace dp4
