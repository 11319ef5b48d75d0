#include "dp4/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace dp4 {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int perm_rank(const Perm5& p) {  // Lehmer code, 0..119
  int rank = 0;
  static const int factorial[5] = {24, 6, 2, 1, 1};
  for (int i = 0; i < 5; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 5; ++j)
      if (p.img[j] < p.img[i]) ++smaller;
    rank += smaller * factorial[i];
  }
  return rank;
}
}  // namespace

SignVector SignVector::c(int i) {
  if (i < 1 || i > 5) fail("SignVector::c: index out of range");
  return SignVector{uint8_t(0b11111 ^ (1 << (i - 1)))};
}

SignVector SignVector::from_bits(uint8_t bits) {
  if (bits >= 32) fail("SignVector: more than five bits");
  if (std::popcount(bits) % 2 != 0) fail("SignVector: parity must be even");
  return SignVector{bits};
}

int SignVector::weight() const { return std::popcount(bits); }

Perm5 Perm5::compose(const Perm5& rhs) const {
  Perm5 out;
  for (int i = 0; i < 5; ++i) out.img[i] = img[rhs.img[i]];
  return out;
}

Perm5 Perm5::inverse() const {
  Perm5 out;
  for (int i = 0; i < 5; ++i) out.img[img[i]] = uint8_t(i);
  return out;
}

SignVector permute(const Perm5& b, SignVector a) {
  uint8_t r = 0;
  for (int i = 0; i < 5; ++i)
    if ((a.bits >> i) & 1) r |= uint8_t(1 << b.img[i]);
  return SignVector{r};
}

bool WeylElement::operator<(const WeylElement& o) const {
  if (sign.bits != o.sign.bits) return sign.bits < o.sign.bits;
  return perm < o.perm;
}

uint16_t WeylElement::code() const {
  return uint16_t(sign.bits * 120 + perm_rank(perm));
}

WeylElement we_mul(const WeylElement& g, const WeylElement& h) {
  return WeylElement{g.sign * permute(g.perm, h.sign), g.perm.compose(h.perm)};
}

WeylElement we_inv(const WeylElement& g) {
  Perm5 pi = g.perm.inverse();
  return WeylElement{permute(pi, g.sign), pi};
}

int we_order(const WeylElement& g) {
  int n = 1;
  WeylElement x = g;
  while (!x.is_identity()) {
    x = we_mul(x, g);
    ++n;
  }
  return n;
}

const std::vector<WeylElement>& all_weyl_elements() {
  static const std::vector<WeylElement> all = [] {
    std::vector<WeylElement> out;
    out.reserve(1920);
    for (int bits = 0; bits < 32; ++bits) {
      if (std::popcount(unsigned(bits)) % 2 != 0) continue;
      Perm5 p;
      std::array<uint8_t, 5> img{0, 1, 2, 3, 4};
      do {
        p.img = img;
        out.push_back(WeylElement{SignVector{uint8_t(bits)}, p});
      } while (std::next_permutation(img.begin(), img.end()));
    }
    return out;
  }();
  return all;
}

Subgroup closure(const std::vector<WeylElement>& generators) {
  Subgroup out;
  out.generators_ = generators;
  out.member_[WeylElement::identity().code()] = true;
  std::vector<WeylElement> frontier{WeylElement::identity()};
  std::vector<WeylElement> elems{WeylElement::identity()};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        WeylElement y = we_mul(x, g);
        if (!out.member_[y.code()]) {
          out.member_[y.code()] = true;
          elems.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  out.elements_ = std::move(elems);
  return out;
}

std::optional<WeylElement> conjugate_into(const Subgroup& g, const Subgroup& target) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  for (const auto& t : all_weyl_elements()) {
    WeylElement ti = we_inv(t);
    bool ok = true;
    for (const auto& x : gens) {
      if (!target.contains(we_mul(we_mul(t, x), ti))) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

Subgroup centralizer(const Subgroup& g) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  std::vector<WeylElement> cent;
  for (const auto& t : all_weyl_elements()) {
    bool ok = true;
    for (const auto& x : gens) {
      if (!(we_mul(t, x) == we_mul(x, t))) {
        ok = false;
        break;
      }
    }
    if (ok) cent.push_back(t);
  }
  return closure(cent);
}

Subgroup image_in_s5(const Subgroup& g) {
  std::vector<WeylElement> img;
  for (const auto& x : g.elements()) img.push_back(WeylElement{SignVector::zero(), x.perm});
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return closure(img);
}

Subgroup kernel_in_a(const Subgroup& g) {
  std::vector<WeylElement> ker;
  for (const auto& x : g.elements())
    if (x.perm.is_identity()) ker.push_back(x);
  return closure(ker);
}

namespace {

// closure capped at `cap` elements; nullopt when exceeded
std::optional<std::vector<WeylElement>> capped_closure(const std::vector<WeylElement>& gens,
                                                       size_t cap) {
  std::vector<bool> seen(3840, false);
  seen[WeylElement::identity().code()] = true;
  std::vector<WeylElement> elems{WeylElement::identity()};
  std::vector<WeylElement> frontier = elems;
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        WeylElement y = we_mul(x, g);
        if (!seen[y.code()]) {
          if (elems.size() >= cap) return std::nullopt;
          seen[y.code()] = true;
          elems.push_back(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return elems;
}

}  // namespace

bool is_split_extension(const Subgroup& g) {
  size_t target = image_in_s5(g).order();
  if (target == 1) return true;
  // complement generators are necessarily outside the sign kernel
  std::vector<WeylElement> pool;
  for (const auto& x : g.elements())
    if (!x.perm.is_identity()) pool.push_back(x);
  const size_t n = pool.size();
  auto check = [&](const std::vector<WeylElement>& gens) {
    auto c = capped_closure(gens, target);
    if (!c || c->size() != target) return false;
    // complement: trivial kernel, full image
    std::vector<Perm5> perms;
    for (const auto& x : *c) {
      if (x.perm.is_identity() && !x.is_identity()) return false;
      perms.push_back(x.perm);
    }
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    return perms.size() == target;
  };
  for (size_t i = 0; i < n; ++i) {
    if (check({pool[i]})) return true;
    for (size_t j = i; j < n; ++j) {
      if (check({pool[i], pool[j]})) return true;
      for (size_t k = j; k < n; ++k)
        if (check({pool[i], pool[j], pool[k]})) return true;
    }
  }
  return false;
}

namespace {

WeylElement cyc(std::initializer_list<std::initializer_list<int>> cycles) {
  Perm5 b;
  for (auto c : cycles) {
    std::vector<int> v(c);
    for (size_t j = 0; j < v.size(); ++j)
      b.img[v[j] - 1] = uint8_t(v[(j + 1) % v.size()] - 1);
  }
  return WeylElement{SignVector::zero(), b};
}

WeylElement sgn(std::initializer_list<int> idx) {
  SignVector s = SignVector::zero();
  for (int i : idx) s = s * SignVector::c(i);
  return WeylElement{s, Perm5::identity()};
}

std::vector<WeylElement> named_generators(ClassName name) {
  const std::vector<WeylElement> c24 = {sgn({1}), sgn({2}), sgn({3}), sgn({4})};
  auto plus = [&](std::vector<WeylElement> base, std::vector<WeylElement> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  switch (name) {
    case ClassName::C24_C2:
      return plus(c24, {cyc({{1, 2}, {4, 5}})});
    case ClassName::C24_C4:
      return plus(c24, {cyc({{1, 4, 2, 5}})});
    case ClassName::C24_S3:
      return plus(c24, {cyc({{1, 2}, {4, 5}}), cyc({{1, 2, 3}})});
    case ClassName::C24_D5:
      return plus(c24, {cyc({{1, 2}, {4, 5}}), cyc({{1, 5, 3, 4, 2}})});
    case ClassName::C23_S3:
      return {sgn({1}), sgn({2}), sgn({3}), cyc({{1, 2}, {4, 5}}), cyc({{1, 2, 3}})};
    case ClassName::C23_S3_NONSPLIT:
      return {sgn({1}), sgn({2}), sgn({3}), cyc({{1, 2, 3}}),
              we_mul(sgn({4}), cyc({{1, 2}, {4, 5}}))};
    case ClassName::C2_S3_NONSPLIT:
      return {sgn({4, 5}), cyc({{1, 2, 3}}), we_mul(sgn({4}), cyc({{1, 2}, {4, 5}}))};
    case ClassName::I1:
      return {sgn({1, 5}), we_mul(sgn({1}), cyc({{2, 3}})), cyc({{2, 3, 4}})};
    case ClassName::I2:
      return {we_mul(sgn({1}), cyc({{1, 5}, {2, 3}})), cyc({{2, 3, 4}})};
    case ClassName::I3:
      return {we_mul(sgn({1}), cyc({{2, 3}})), cyc({{1, 5}}), cyc({{2, 3, 4}})};
  }
  fail("named_class: unknown name");
}

}  // namespace

const Subgroup& named_class(ClassName name) {
  static const std::map<ClassName, Subgroup> cache = [] {
    std::map<ClassName, Subgroup> out;
    for (ClassName n : all_class_names()) out.emplace(n, closure(named_generators(n)));
    return out;
  }();
  return cache.at(name);
}

std::string class_name_str(ClassName name) {
  switch (name) {
    case ClassName::C24_C2: return "C2^4:C2";
    case ClassName::C24_C4: return "C2^4:C4";
    case ClassName::C24_S3: return "C2^4:S3";
    case ClassName::C24_D5: return "C2^4:D5";
    case ClassName::C23_S3: return "C2^3:S3";
    case ClassName::C23_S3_NONSPLIT: return "C2^3.S3";
    case ClassName::C2_S3_NONSPLIT: return "C2.S3";
    case ClassName::I1: return "I1";
    case ClassName::I2: return "I2";
    case ClassName::I3: return "I3";
  }
  return "?";
}

std::optional<ClassName> parse_class_name(const std::string& s) {
  for (ClassName n : all_class_names())
    if (class_name_str(n) == s) return n;
  return std::nullopt;
}

std::vector<ClassName> all_class_names() {
  return {ClassName::C24_C2, ClassName::C24_C4, ClassName::C24_S3, ClassName::C24_D5,
          ClassName::C23_S3, ClassName::C23_S3_NONSPLIT, ClassName::C2_S3_NONSPLIT,
          ClassName::I1,     ClassName::I2,              ClassName::I3};
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, size_t pos, const std::string& what) {
  fail("parse error at position " + std::to_string(pos) + " in '" + text + "': " + what);
}

}  // namespace

WeylElement parse_element(const std::string& text) {
  WeylElement acc = WeylElement::identity();
  size_t i = 0;
  bool any = false;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text.compare(i, 2, "id") == 0) {
      i += 2;
      any = true;
    } else if (text[i] == 'c') {
      if (i + 1 >= text.size() || text[i + 1] < '1' || text[i + 1] > '5')
        parse_fail(text, i, "expected digit 1..5 after 'c'");
      acc = we_mul(acc, WeylElement{SignVector::c(text[i + 1] - '0'), Perm5::identity()});
      i += 2;
      any = true;
    } else if (text[i] == '(') {
      size_t start = i++;
      std::vector<int> cycle;
      while (i < text.size() && text[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        if (text[i] < '1' || text[i] > '5')
          parse_fail(text, i, "expected digit 1..5 inside cycle");
        int v = text[i] - '0';
        if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
          parse_fail(text, i, "repeated point in cycle");
        cycle.push_back(v);
        ++i;
      }
      if (i >= text.size()) parse_fail(text, start, "unterminated cycle");
      ++i;  // ')'
      if (cycle.size() < 2) parse_fail(text, start, "cycle needs at least two points");
      Perm5 b;
      for (size_t j = 0; j < cycle.size(); ++j)
        b.img[cycle[j] - 1] = uint8_t(cycle[(j + 1) % cycle.size()] - 1);
      acc = we_mul(acc, WeylElement{SignVector::zero(), b});
      any = true;
    } else {
      parse_fail(text, i, "unexpected character");
    }
    skip_ws();
  }
  if (!any) parse_fail(text, 0, "empty element");
  return acc;
}

std::vector<WeylElement> parse_generators(const std::string& text) {
  std::vector<WeylElement> out;
  size_t start = 0;
  bool all_blank = true;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) all_blank = false;
  if (all_blank) return out;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
    out.push_back(parse_element(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_element(const WeylElement& g) {
  std::string out;
  // sign word: weight 2 -> two tokens on the support, weight 4 -> the single
  // complementary c_i
  if (g.sign.weight() == 2) {
    for (int i = 1; i <= 5; ++i)
      if (g.sign.test(i)) out += "c" + std::to_string(i);
  } else if (g.sign.weight() == 4) {
    for (int i = 1; i <= 5; ++i)
      if (!g.sign.test(i)) out += "c" + std::to_string(i);
  }
  // disjoint cycles, smallest entry first
  std::array<bool, 6> seen{};
  for (int i = 1; i <= 5; ++i) {
    if (seen[i] || g.perm.apply(i) == i) continue;
    std::string cyc = "(" + std::to_string(i);
    seen[i] = true;
    int j = g.perm.apply(i);
    while (j != i) {
      seen[j] = true;
      cyc += std::to_string(j);
      j = g.perm.apply(j);
    }
    cyc += ")";
    out += cyc;
  }
  return out.empty() ? "id" : out;
}

}  // namespace dp4
