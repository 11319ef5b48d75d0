#include "dp4/report.hpp"

#include <functional>
#include <sstream>

#include "dp4/classify.hpp"
#include "dp4/lines.hpp"
#include "dp4/surfaces.hpp"
#include "dp4/weyl.hpp"

namespace dp4 {

namespace {

Report guarded(const std::function<Report()>& fn) {
  auto as_error = [](const char* what) {
    Report r;
    r.exit_code = 2;
    r.text = std::string("error: ") + what + "\n";
    r.json = {{"error", what}};
    return r;
  };
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return as_error(e.what());
  } catch (const std::domain_error& e) {
    return as_error(e.what());
  } catch (const nlohmann::json::exception& e) {
    return as_error(e.what());
  }
}

FieldProfile parse_profile(const std::string& s) {
  if (s == "all-true") return FieldProfile{true, true, true, true};
  if (s == "all-false") return FieldProfile{false, false, false, false};
  FieldProfile p;
  std::stringstream ss(s);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("profile: expected key=value in '" + item + "'");
    std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    bool b;
    if (val == "yes" || val == "true" || val == "1")
      b = true;
    else if (val == "no" || val == "false" || val == "0")
      b = false;
    else
      throw std::invalid_argument("profile: bad value '" + val + "'");
    if (key == "i")
      p.has_i = b;
    else if (key == "eps3")
      p.has_eps3 = b;
    else if (key == "sqrt5")
      p.has_sqrt5 = b;
    else if (key == "s2s")
      p.sum2sq_minus3 = b;
    else
      throw std::invalid_argument("profile: unknown key '" + key + "'");
    any = true;
  }
  if (!any) throw std::invalid_argument("profile: empty specification");
  return p;
}

nlohmann::json profile_json(const FieldProfile& p) {
  return {{"i", p.has_i},
          {"eps3", p.has_eps3},
          {"sqrt5", p.has_sqrt5},
          {"s2s", p.sum2sq_minus3}};
}

std::vector<std::string> name_list(const std::vector<ClassName>& names) {
  std::vector<std::string> out;
  for (ClassName n : names) out.push_back(class_name_str(n));
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

// small generating set for display, greedy
std::vector<WeylElement> display_generators(const Subgroup& g) {
  std::vector<WeylElement> gens;
  Subgroup cur = closure({});
  for (const auto& e : g.elements()) {
    if (cur.contains(e)) continue;
    gens.push_back(e);
    cur = closure(gens);
    if (cur.order() == g.order()) break;
  }
  return gens;
}

nlohmann::json subgroup_json(const Subgroup& g) {
  std::vector<std::string> gens;
  for (const auto& e : display_generators(g)) gens.push_back(format_element(e));
  return {{"order", g.order()}, {"generators", gens}};
}

}  // namespace

Report cmd_classify(const std::optional<std::string>& field,
                    const std::optional<std::string>& profile) {
  return guarded([&]() -> Report {
    FieldProfile p;
    std::string source;
    if (field) {
      auto fp = profile_of_field(*field);
      if (!fp)
        throw std::invalid_argument("unknown field '" + *field + "'; known: " +
                                    join(known_fields(), ", "));
      p = *fp;
      source = *field;
    } else if (profile) {
      p = parse_profile(*profile);
      source = *profile;
    } else {
      throw std::invalid_argument("classify needs --field or --profile");
    }
    validate_profile(p);
    auto qs = name_list(maximal_qs(p));
    auto m = name_list(maximal_m(p));
    std::vector<std::string> excluded;
    if (p.sum2sq_minus3 && !p.has_eps3) excluded = name_list(non_qs_only_classes());

    Report r;
    std::ostringstream os;
    os << "profile: i=" << (p.has_i ? "yes" : "no") << " eps3=" << (p.has_eps3 ? "yes" : "no")
       << " sqrt5=" << (p.has_sqrt5 ? "yes" : "no")
       << " s2s=" << (p.sum2sq_minus3 ? "yes" : "no") << "\n";
    os << "maximal quasi-split classes: " << join(qs, ", ") << "\n";
    os << "maximal classes:             " << join(m, ", ") << "\n";
    if (excluded.empty())
      os << "rationality: every class acts on a rational surface\n";
    else
      os << "rationality: excluded classes " << join(excluded, ", ") << "\n";
    r.text = os.str();
    r.json = {{"command", "classify"},
              {"input", source},
              {"profile", profile_json(p)},
              {"maximal_qs", qs},
              {"maximal_m", m},
              {"rat_excluded", excluded}};
    return r;
  });
}

Report cmd_group(const std::string& generators, const std::string& op,
                 const std::string& arg) {
  return guarded([&]() -> Report {
    Subgroup g = closure(parse_generators(generators));
    Report r;
    nlohmann::json j = {{"command", "group"}, {"generators", generators}, {"op", op}};
    std::ostringstream os;
    if (op == "order") {
      os << "order " << g.order() << "\n";
      j["order"] = g.order();
    } else if (op == "centralizer") {
      Subgroup c = centralizer(g);
      auto gens = display_generators(c);
      std::vector<std::string> words;
      for (const auto& e : gens) words.push_back(format_element(e));
      os << "centralizer order " << c.order() << ", generated by " << join(words, ", ")
         << "\n";
      j["centralizer"] = subgroup_json(c);
    } else if (op == "image-s5") {
      Subgroup img = image_in_s5(g);
      os << "image in S5 has order " << img.order() << "\n";
      j["image"] = subgroup_json(img);
    } else if (op == "kernel") {
      Subgroup ker = kernel_in_a(g);
      os << "kernel in the sign subgroup has order " << ker.order() << "\n";
      j["kernel"] = subgroup_json(ker);
    } else if (op == "is-split") {
      bool s = is_split_extension(g);
      os << (s ? "split" : "non-split") << "\n";
      j["is_split"] = s;
    } else if (op == "conjugate-into") {
      auto name = parse_class_name(arg);
      if (!name) throw std::invalid_argument("unknown class name '" + arg + "'");
      auto t = conjugate_into(g, named_class(*name));
      if (t) {
        os << "conjugator: " << format_element(*t) << "\n";
        j["conjugator"] = format_element(*t);
      } else {
        os << "no conjugator into " << arg << "\n";
        j["conjugator"] = nullptr;
      }
    } else {
      throw std::invalid_argument(
          "unknown group op '" + op +
          "' (use order|centralizer|image-s5|kernel|is-split|conjugate-into)");
    }
    r.text = os.str();
    r.json = j;
    return r;
  });
}

Report cmd_lines(const std::string& scenario_path) {
  return guarded([&]() -> Report {
    GaloisAction act = load_scenario(scenario_path);
    auto orbits = galois_orbits(act);
    bool minimal = is_k_minimal(orbits);
    bool qs = is_quasi_split(orbits);
    Report r;
    std::ostringstream os;
    nlohmann::json jorbits = nlohmann::json::array();
    os << "orbits (" << orbits.size() << "):\n";
    for (const auto& o : orbits) {
      std::vector<std::string> names;
      for (const auto& l : o) names.push_back(l.name());
      os << "  { " << join(names, ", ") << " }\n";
      jorbits.push_back(names);
    }
    os << "quasi-split: " << (qs ? "yes" : "no") << "\n";
    os << "k-minimal:   " << (minimal ? "yes" : "no") << "\n";
    r.text = os.str();
    r.json = {{"command", "lines"},
              {"scenario", scenario_path},
              {"orbits", jorbits},
              {"quasi_split", qs},
              {"k_minimal", minimal}};
    return r;
  });
}

namespace {

nlohmann::json quadric_json(const Quadric& q) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 5; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 5; ++j) row.push_back(q.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json map_json(const ProjMap5& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 5; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 5; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Report cmd_surface(const std::string& name, bool verify) {
  return guarded([&]() -> Report {
    SurfaceRecord rec = catalog(name);
    Report r;
    std::ostringstream os;
    nlohmann::json j = {{"command", "surface"}, {"name", name}};
    std::vector<std::string> mp;
    for (const Rat& c : rec.field->min_poly()) mp.push_back(rat_str(c));
    j["field"] = {{"name", rec.field->name()}, {"minpoly", mp}};
    j["q1"] = quadric_json(rec.pencil.q1);
    j["q2"] = quadric_json(rec.pencil.q2);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : rec.named_gens) gens.push_back(map_json(g));
    j["generators"] = gens;
    j["expected_group_order"] = rec.expected_group_order;
    std::vector<std::string> pts;
    for (const auto& p : rec.printed_points) pts.push_back(p.str());
    j["points"] = pts;

    os << "surface " << name << " over " << rec.field->name() << "\n";
    if (!verify) {
      os << "expected automorphism group order: " << rec.expected_group_order << "\n";
      r.text = os.str();
      r.json = j;
      return r;
    }
    auto checks = verify_surface(rec);
    nlohmann::json jc = nlohmann::json::array();
    bool all = true;
    for (const auto& c : checks) {
      os << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << "\n";
      jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      all = all && c.pass;
    }
    os << (all ? "all checks passed" : "some checks FAILED") << "\n";
    j["checks"] = jc;
    j["pass"] = all;
    r.text = os.str();
    r.json = j;
    r.exit_code = all ? 0 : 1;
    return r;
  });
}

namespace {

std::vector<Rat> parse_rat_csv(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient");
    out.push_back(parse_rat(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

// "1,-5/2,1" -> rational coefficients, or a JSON array whose items are
// rational strings or arrays of rational strings (field elements).
FPoly parse_poly(const FieldPtr& field, const std::string& s) {
  FPoly out;
  if (!s.empty() && s[0] == '[') {
    nlohmann::json j = nlohmann::json::parse(s);
    for (const auto& item : j) {
      if (item.is_array()) {
        std::vector<Rat> c;
        for (const auto& x : item) c.push_back(parse_rat(x.get<std::string>()));
        c.resize(field->degree(), Rat(0));
        out.push_back(FieldElement(field, c));
      } else if (item.is_string()) {
        out.push_back(FieldElement::from_rat(field, parse_rat(item.get<std::string>())));
      } else if (item.is_number_integer()) {
        out.push_back(FieldElement::from_rat(field, Rat(item.get<long>())));
      } else {
        throw std::invalid_argument("polynomial entries must be rationals or vectors");
      }
    }
  } else {
    for (const Rat& c : parse_rat_csv(s)) out.push_back(FieldElement::from_rat(field, c));
  }
  return out;
}

}  // namespace

Report cmd_traceform(const std::string& minpoly, const std::string& p,
                     const std::string& lambda) {
  return guarded([&]() -> Report {
    FieldPtr field =
        minpoly.empty() ? rationals() : make_field(parse_rat_csv(minpoly));
    EtaleAlgebra alg = EtaleAlgebra::make(field, parse_poly(field, p));
    FPoly lam = lambda.empty() ? FPoly{FieldElement::one(field)}
                               : parse_poly(field, lambda);
    QuadricPencil pencil = trace_quadrics(alg, lam);
    auto disc = discriminant(pencil);
    Report r;
    nlohmann::json j = {{"command", "traceform"}};
    j["q1"] = quadric_json(pencil.q1);
    j["q2"] = quadric_json(pencil.q2);
    if (disc) {
      std::vector<std::string> dc;
      for (const auto& c : disc->c) dc.push_back(c.str());
      j["discriminant"] = dc;
    } else {
      j["discriminant"] = nullptr;
    }
    bool smooth = is_smooth(pencil);
    j["smooth"] = smooth;
    std::ostringstream os;
    os << "q1 gram:\n";
    for (int i = 0; i < 5; ++i) {
      os << " ";
      for (int jj = 0; jj < 5; ++jj) os << " " << pencil.q1.at(i, jj).str();
      os << "\n";
    }
    os << "q2 gram:\n";
    for (int i = 0; i < 5; ++i) {
      os << " ";
      for (int jj = 0; jj < 5; ++jj) os << " " << pencil.q2.at(i, jj).str();
      os << "\n";
    }
    os << "smooth: " << (smooth ? "yes" : "no") << "\n";
    r.text = os.str();
    r.json = j;
    return r;
  });
}

}  // namespace dp4
