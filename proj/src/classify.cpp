#include "dp4/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dp4 {

bool FieldProfile::valid() const {
  if (has_eps3 && !sum2sq_minus3) return false;  // (1+2e3)^2 + 0^2 = -3
  if (has_i && !sum2sq_minus3) return false;     // 1^2 + (2i)^2 = -3
  return true;
}

void validate_profile(const FieldProfile& p) {
  if (!p.valid())
    throw std::invalid_argument(
        "invalid field profile: i in k or eps3 in k forces x^2+y^2=-3 solvable");
}

std::optional<FieldProfile> profile_of_field(const std::string& name) {
  if (name == "Q") return FieldProfile{false, false, false, false};
  if (name == "Q(i)") return FieldProfile{true, false, false, true};
  if (name == "Q(eps3)") return FieldProfile{false, true, false, true};
  if (name == "Q(sqrt5)") return FieldProfile{false, false, true, false};
  if (name == "Q(sqrt2)") return FieldProfile{false, false, false, false};
  return std::nullopt;
}

std::vector<std::string> known_fields() {
  return {"Q", "Q(i)", "Q(eps3)", "Q(sqrt5)", "Q(sqrt2)"};
}

std::vector<ClassName> present_qs(const FieldProfile& p) {
  validate_profile(p);
  std::vector<ClassName> out = {ClassName::C24_C2, ClassName::C23_S3};
  if (p.has_i) out.push_back(ClassName::C24_C4);
  if (p.has_eps3) out.push_back(ClassName::C24_S3);
  if (p.has_sqrt5) out.push_back(ClassName::C24_D5);
  return out;
}

std::vector<ClassName> present_m(const FieldProfile& p) {
  std::vector<ClassName> out = present_qs(p);
  if (p.sum2sq_minus3) out.push_back(ClassName::C23_S3_NONSPLIT);
  return out;
}

namespace {

bool conj_into_cached(ClassName a, ClassName b) {
  static const std::map<std::pair<ClassName, ClassName>, bool> cache = [] {
    std::map<std::pair<ClassName, ClassName>, bool> out;
    for (ClassName x : all_class_names())
      for (ClassName y : all_class_names())
        out.emplace(std::make_pair(x, y),
                    conjugate_into(named_class(x), named_class(y)).has_value());
    return out;
  }();
  return cache.at({a, b});
}

std::vector<ClassName> reduce_to_maximal(std::vector<ClassName> names) {
  std::vector<ClassName> out;
  for (ClassName a : names) {
    bool dominated = false;
    for (ClassName b : names) {
      if (a == b) continue;
      // a strictly below b (conjugates in, not equal as classes)
      if (conj_into_cached(a, b) &&
          !(named_class(a).order() == named_class(b).order() && conj_into_cached(b, a)))
        dominated = true;
    }
    if (!dominated) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<ClassName> maximal_qs(const FieldProfile& p) {
  return reduce_to_maximal(present_qs(p));
}

std::vector<ClassName> maximal_m(const FieldProfile& p) {
  return reduce_to_maximal(present_m(p));
}

bool in_mk(const Subgroup& g, const FieldProfile& p) {
  for (ClassName m : maximal_m(p))
    if (conjugate_into(g, named_class(m)).has_value()) return true;
  return false;
}

bool in_mk_rat(const Subgroup& g, const FieldProfile& p) {
  if (!in_mk(g, p)) return false;
  if (p.has_eps3 || !p.sum2sq_minus3) return true;
  for (ClassName bad : non_qs_only_classes()) {
    const Subgroup& rep = named_class(bad);
    if (g.order() == rep.order() && conjugate_into(g, rep).has_value()) return false;
  }
  return true;
}

std::vector<ClassName> non_qs_only_classes() {
  return {ClassName::C23_S3_NONSPLIT, ClassName::C2_S3_NONSPLIT};
}

StableWindow stable_window(const Subgroup& splitting, const Subgroup& aut) {
  bool conj_to_stable = false;
  for (ClassName n : {ClassName::I1, ClassName::I2, ClassName::I3}) {
    const Subgroup& rep = named_class(n);
    if (splitting.order() == rep.order() && conjugate_into(splitting, rep).has_value()) {
      conj_to_stable = true;
      break;
    }
  }
  if (!conj_to_stable) return StableWindow::excluded;
  const Subgroup cent = centralizer(aut);
  for (const auto& s : splitting.elements())
    if (!cent.contains(s)) return StableWindow::excluded;
  return StableWindow::possible;
}

std::vector<FieldProfile> all_valid_profiles() {
  std::vector<FieldProfile> out;
  for (int mask = 0; mask < 16; ++mask) {
    FieldProfile p{bool(mask & 1), bool(mask & 2), bool(mask & 4), bool(mask & 8)};
    if (p.valid()) out.push_back(p);
  }
  return out;
}

}  // namespace dp4
