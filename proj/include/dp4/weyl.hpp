#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dp4 {

// Even-weight sign vector in C_2^5; bit i-1 holds a_i. The even-parity
// subgroup is the group the paper calls C_2^4, generated by
// c_i = (1,...,1,0,1,...,1) with the zero in slot i.
struct SignVector {
  uint8_t bits = 0;

  static SignVector zero() { return {}; }
  static SignVector c(int i);            // 1-based
  static SignVector from_bits(uint8_t bits);  // validates even parity

  bool test(int i) const { return (bits >> (i - 1)) & 1; }
  int weight() const;
  SignVector operator*(SignVector o) const { return SignVector{uint8_t(bits ^ o.bits)}; }
  bool operator==(const SignVector& o) const = default;
  bool operator<(const SignVector& o) const { return bits < o.bits; }
};

// Permutation of {1..5}; img[i] = b(i+1)-1 in 0-based storage.
struct Perm5 {
  std::array<uint8_t, 5> img{0, 1, 2, 3, 4};

  static Perm5 identity() { return {}; }
  int apply(int i) const { return img[i - 1] + 1; }  // 1-based
  Perm5 compose(const Perm5& rhs) const;             // apply rhs first
  Perm5 inverse() const;
  bool is_identity() const { return *this == identity(); }
  bool operator==(const Perm5& o) const = default;
  bool operator<(const Perm5& o) const { return img < o.img; }
};

// Permutation action on sign vectors: (b*a) has bit b(i) = a_i, so that
// b c_i b^{-1} = c_{b(i)}.
SignVector permute(const Perm5& b, SignVector a);

struct WeylElement {
  SignVector sign;
  Perm5 perm;

  static WeylElement identity() { return {}; }
  bool is_identity() const { return sign.bits == 0 && perm.is_identity(); }
  bool operator==(const WeylElement& o) const = default;
  bool operator<(const WeylElement& o) const;
  // dense code in [0, 3840) for set membership
  uint16_t code() const;
};

WeylElement we_mul(const WeylElement& g, const WeylElement& h);
WeylElement we_inv(const WeylElement& g);
int we_order(const WeylElement& g);

// All 1920 elements in a fixed enumeration order (sign bits ascending,
// permutations lexicographic). conjugate_into scans in this order.
const std::vector<WeylElement>& all_weyl_elements();

class Subgroup {
 public:
  Subgroup() = default;
  const std::vector<WeylElement>& elements() const { return elements_; }
  const std::vector<WeylElement>& generators() const { return generators_; }
  size_t order() const { return elements_.size(); }
  bool contains(const WeylElement& g) const { return member_[g.code()]; }
  bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

 private:
  friend Subgroup closure(const std::vector<WeylElement>& generators);
  std::vector<WeylElement> elements_;  // sorted
  std::vector<WeylElement> generators_;
  std::vector<bool> member_ = std::vector<bool>(3840, false);
};

Subgroup closure(const std::vector<WeylElement>& generators);

// First t in the fixed enumeration with t G t^{-1} contained in target.
std::optional<WeylElement> conjugate_into(const Subgroup& g, const Subgroup& target);

Subgroup centralizer(const Subgroup& g);

// Projection to the permutation part, returned as the subgroup of
// sign-free elements; |G| = |image| * |kernel|.
Subgroup image_in_s5(const Subgroup& g);
Subgroup kernel_in_a(const Subgroup& g);

// True iff the extension 1 -> G cap A -> G -> G'' -> 1 splits: brute-force
// search for a complement among subgroups generated by <= 3 elements of G.
bool is_split_extension(const Subgroup& g);

// Named conjugacy-class representatives (Table 1 plus the three stable-
// rationality splitting groups).
enum class ClassName {
  C24_C2,   // C2^4 : C2
  C24_C4,   // C2^4 : C4
  C24_S3,   // C2^4 : S3
  C24_D5,   // C2^4 : D5
  C23_S3,   // C2^3 : S3   (split)
  C23_S3_NONSPLIT,  // C2^3 . S3
  C2_S3_NONSPLIT,   // C2 . S3
  I1,
  I2,
  I3,
};

const Subgroup& named_class(ClassName name);
std::string class_name_str(ClassName name);
std::optional<ClassName> parse_class_name(const std::string& s);
std::vector<ClassName> all_class_names();

// Element grammar: tokens c1..c5, cycles like (12)(45), juxtaposition for
// products, whitespace ignored; "id" for the identity.
WeylElement parse_element(const std::string& text);
// Comma-separated list of element words; empty input -> empty list.
std::vector<WeylElement> parse_generators(const std::string& text);
std::string format_element(const WeylElement& g);

}  // namespace dp4
