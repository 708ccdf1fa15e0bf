#include "opensys/serialize.hpp"

#include <sstream>

#include "opensys/error.hpp"

namespace opensys {

using nlohmann::ordered_json;

namespace {

ordered_json labels(const FinSet& s) {
  ordered_json out = ordered_json::array();
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s.label(k));
  return out;
}

ordered_json polynomial_json(const Polynomial& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    ordered_json mono = ordered_json::array();
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) mono.push_back(ordered_json::array({k, e[k]}));
    }
    terms.push_back({{"coefficient", to_string(c)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

const ordered_json& field(const ordered_json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
  return j.at(name);
}

FinSet labels_from(const ordered_json& j, const char* name) {
  const auto& a = field(j, name);
  if (!a.is_array()) throw FormatError(std::string("field '") + name + "' must be an array of labels");
  std::vector<std::string> out;
  for (const auto& l : a) {
    if (!l.is_string()) throw FormatError(std::string("field '") + name + "' must be an array of labels");
    out.push_back(l.get<std::string>());
  }
  try {
    return FinSet(std::move(out));
  } catch (const MathError& e) {
    throw FormatError(std::string("field '") + name + "': " + e.what());
  }
}

Polynomial polynomial_from(const ordered_json& j, std::size_t nvars) {
  if (!j.is_array()) throw FormatError("a polynomial must be an array of terms");
  Polynomial p(nvars);
  for (const auto& t : j) {
    const auto& coef = field(t, "coefficient");
    const auto& mono = field(t, "monomial");
    if (!coef.is_string() || !mono.is_array()) throw FormatError("malformed polynomial term");
    Rational c;
    try {
      c = parse_rational(coef.get<std::string>());
    } catch (const InvalidValue& e) {
      throw FormatError(e.what());
    }
    Exponents e(nvars, 0);
    for (const auto& f : mono) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_number_unsigned() || !f[1].is_number_unsigned()) {
        throw FormatError("a monomial factor must be [variable, power]");
      }
      auto k = f[0].get<std::size_t>();
      if (k >= nvars) throw FormatError("variable index " + std::to_string(k) + " out of range");
      e[k] += f[1].get<std::uint32_t>();
    }
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

ordered_json to_json(const ConstraintRelation& r) {
  ordered_json j;
  j["left"] = labels(r.left());
  j["right"] = labels(r.right());
  j["internal"] = labels(r.internal());
  ordered_json kinds = ordered_json::array();
  for (auto k : r.internal_kinds()) kinds.push_back(k == VariableKind::Concentration ? "concentration" : "flow");
  j["internal_kinds"] = std::move(kinds);
  ordered_json vars = ordered_json::array();
  for (std::size_t k = 0; k < r.variable_count(); ++k) vars.push_back(r.variable_name(k));
  j["variables"] = std::move(vars);
  ordered_json eqs = ordered_json::array(), ineqs = ordered_json::array();
  for (const auto& p : r.equations()) eqs.push_back(polynomial_json(p));
  for (const auto& p : r.inequalities()) ineqs.push_back(polynomial_json(p));
  j["equations"] = std::move(eqs);
  j["inequalities"] = std::move(ineqs);
  j["linear"] = r.is_linear();
  return j;
}

ConstraintRelation relation_from_json(const ordered_json& j) {
  FinSet left = labels_from(j, "left"), right = labels_from(j, "right"), internal = labels_from(j, "internal");
  const std::size_t n = 2 * (left.size() + right.size()) + internal.size();
  std::vector<VariableKind> kinds;
  if (j.contains("internal_kinds")) {
    for (const auto& k : field(j, "internal_kinds")) {
      if (k == "concentration") {
        kinds.push_back(VariableKind::Concentration);
      } else if (k == "flow") {
        kinds.push_back(VariableKind::Flow);
      } else {
        throw FormatError("internal kind must be \"concentration\" or \"flow\"");
      }
    }
    if (kinds.size() != internal.size()) throw FormatError("one internal kind per internal variable is required");
  }
  auto polys = [&](const char* name) {
    std::vector<Polynomial> out;
    if (!j.contains(name)) return out;
    const auto& a = field(j, name);
    if (!a.is_array()) throw FormatError(std::string("field '") + name + "' must be an array");
    for (const auto& p : a) out.push_back(polynomial_from(p, n));
    return out;
  };
  ConstraintRelation r(std::move(left), std::move(right), std::move(internal), polys("equations"),
                       polys("inequalities"), std::move(kinds));
  if (j.contains("linear")) {
    const auto& flag = j.at("linear");
    if (!flag.is_boolean() || flag.get<bool>() != r.is_linear()) {
      throw FormatError("'linear' flag does not match the equations");
    }
  }
  return r;
}

ConstraintRelation relation_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return relation_from_json(j);
}

namespace {

std::vector<std::string> species_names(const OpenSystem& sys) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < sys.apex().size(); ++k) out.push_back(sys.apex().label(k));
  return out;
}

}  // namespace

ordered_json to_json(const OpenSystem& sys) {
  auto names = species_names(sys);
  auto leg = [&](const FinFunction& f) {
    ordered_json out = ordered_json::array();
    for (std::size_t k = 0; k < f.dom().size(); ++k) out.push_back({f.dom().label(k), names[f(k)]});
    return out;
  };
  ordered_json field = ordered_json::array();
  for (std::size_t k = 0; k < names.size(); ++k) {
    field.push_back({{"species", names[k]},
                     {"polynomial", sys.decoration()[k].to_string([&](std::size_t v) { return "c." + names[v]; })},
                     {"terms", polynomial_json(sys.decoration()[k])}});
  }
  ordered_json j;
  j["species"] = names;
  j["inputs"] = leg(sys.cospan().left());
  j["outputs"] = leg(sys.cospan().right());
  j["field"] = std::move(field);
  return j;
}

std::string to_text(const OpenSystem& sys) {
  auto names = species_names(sys);
  std::ostringstream os;
  os << "species";
  for (const auto& n : names) os << ' ' << n;
  os << "\ninputs";
  const auto& i = sys.cospan().left();
  for (std::size_t k = 0; k < i.dom().size(); ++k) os << ' ' << i.dom().label(k) << "->" << names[i(k)];
  os << "\noutputs";
  const auto& o = sys.cospan().right();
  for (std::size_t k = 0; k < o.dom().size(); ++k) os << ' ' << o.dom().label(k) << "->" << names[o(k)];
  os << '\n';
  for (std::size_t k = 0; k < names.size(); ++k) {
    os << "d" << names[k] << "/dt = "
       << sys.decoration()[k].to_string([&](std::size_t v) { return "c." + names[v]; }) << '\n';
  }
  return os.str();
}

}  // namespace opensys
