#include "localred/json_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "localred/errors.hpp"

namespace localred {

json parse_json_arg(const std::string& arg) {
  std::size_t i = arg.find_first_not_of(" \t\r\n");
  std::string text;
  if (i != std::string::npos && (arg[i] == '{' || arg[i] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read '" + arg + "'");
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

// Terms c, c^e, c*pi^k, pi^k, pi (t is accepted for pi).
Elt parse_poly(const RingPtr& R, const std::string& s) {
  Elt x = R->zero();
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto number = [&](long long& out) {
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) return false;
    out = std::stoll(s.substr(st, i - st));
    return true;
  };
  skip();
  if (i == s.size()) throw ParseError("empty element '" + s + "'");
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    skip();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected + or - in '" + s + "'");
    }
    first = false;
    long long c = 1, k = 0;
    bool have_c = number(c);
    skip();
    if (have_c && i < s.size() && s[i] == '^') {
      ++i;
      skip();
      long long e = 0;
      if (!number(e)) throw ParseError("bad exponent in '" + s + "'");
      long long b = c;
      for (c = 1; e > 0; --e) {
        if (c > (1LL << 62) / std::max(b, 1LL)) throw ParseError("integer too large in '" + s + "'");
        c *= b;
      }
      skip();
    }
    if (have_c && i < s.size() && s[i] == '*') {
      ++i;
      skip();
    }
    bool have_pi = false;
    if (s.compare(i, 2, "pi") == 0) {
      i += 2;
      have_pi = true;
    } else if (i < s.size() && s[i] == 't') {
      ++i;
      have_pi = true;
    }
    if (have_pi) {
      k = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip();
        if (!number(k)) throw ParseError("bad exponent in '" + s + "'");
      }
    }
    if (!have_c && !have_pi) throw ParseError("bad term in '" + s + "'");
    x += R->from_int(sign * c) * R->uniformizer().pow(static_cast<unsigned>(k));
    skip();
  }
  return x;
}

json modulus_json(const ResidueField& k) { return k.modulus(); }

}  // namespace

RingPtr ring_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("ring must be an object");
  const std::string kind = get<std::string>(j, "kind");
  if (kind != "mixed" && kind != "equal") throw ParseError("ring kind must be 'mixed' or 'equal'");
  const auto p = get<std::uint32_t>(j, "p");
  const int prec = get<int>(j, "precision");
  ResidueField k;
  if (j.contains("modulus"))
    k = ResidueField(p, get<std::vector<std::uint32_t>>(j, "modulus"));
  else
    k = ResidueField::standard(p, j.contains("residue_degree") ? get<int>(j, "residue_degree") : 1);
  RingPtr R = Ring::make_base(kind == "mixed" ? RingKind::mixed : RingKind::equal, k, prec);
  if (j.contains("eisenstein")) {
    const json& levels = j.at("eisenstein");
    if (!levels.is_array()) throw ParseError("'eisenstein' must be a list of coefficient lists");
    for (const auto& lv : levels) {
      if (!lv.is_array() || lv.empty()) throw ParseError("Eisenstein level must be a nonempty list");
      std::vector<Elt> c;
      for (const auto& x : lv) c.push_back(elt_from_json(R, x));
      R = R->adjoin_eisenstein(c);
    }
  }
  return R;
}

json ring_to_json(const RingPtr& R) {
  json j;
  j["kind"] = R->kind() == RingKind::mixed ? "mixed" : "equal";
  j["p"] = R->p();
  j["precision"] = R->base_precision();
  const ResidueField& k = R->residue_field();
  if (k.degree() > 1) j["modulus"] = modulus_json(k);
  json levels = json::array();
  for (int d = R->unramified_depth() + 1; d <= R->depth(); ++d) {
    RingPtr P = R->prefix(d - 1);
    const auto& lv = R->level(d);
    const std::size_t n = P->size();
    json cs = json::array();
    for (int i = 0; i < lv.degree; ++i) {
      std::vector<u64> c(lv.poly.begin() + i * n, lv.poly.begin() + (i + 1) * n);
      cs.push_back(elt_to_json(P->make(std::move(c), P->cap())));
    }
    levels.push_back(cs);
  }
  if (!levels.empty()) j["eisenstein"] = levels;
  return j;
}

Elt elt_from_json(const RingPtr& R, const json& j) {
  if (j.is_number_integer()) return R->from_int(j.get<std::int64_t>());
  if (j.is_string()) return parse_poly(R, j.get<std::string>());
  if (j.is_object()) {
    const auto digits = get<std::vector<std::vector<std::uint32_t>>>(j, "digits");
    const int prec = j.contains("precision") ? get<int>(j, "precision") : R->cap();
    if (prec < 0 || prec > R->cap()) throw ParseError("element precision outside [0, cap]");
    const ResidueField& k = R->residue_field();
    Elt x = R->zero(), pw = R->one();
    for (std::size_t i = 0; i < digits.size() && static_cast<int>(i) < prec; ++i) {
      for (auto c : digits[i])
        if (c >= k.p()) throw ParseError("digit coefficient out of range");
      if (digits[i].size() > static_cast<std::size_t>(k.degree())) throw ParseError("digit has too many coefficients");
      FieldElt d = k.from_coeffs(digits[i]);
      if (d != 0) x += R->lift(d) * pw;
      pw *= R->uniformizer();
    }
    return x.truncate(prec);
  }
  throw ParseError("element must be an integer, a string or a digits object");
}

json elt_to_json(const Elt& x) {
  const ResidueField& k = x.ring()->residue_field();
  auto ds = x.digits();
  while (!ds.empty() && ds.back() == 0) ds.pop_back();
  json digits = json::array();
  for (auto d : ds) {
    auto c = k.coeffs(d);
    c.resize(k.degree());
    digits.push_back(c);
  }
  return json{{"digits", digits}, {"precision", x.precision()}};
}

Weierstrass curve_from_json(const RingPtr& R, const json& j) {
  const json& a = j.is_object() ? j.at("a") : j;
  if (!a.is_array() || a.size() != 5) throw ParseError("curve must list a1, a2, a3, a4, a6");
  Weierstrass w;
  for (int i = 0; i < 5; ++i) w.a[i] = elt_from_json(R, a[i]);
  return w;
}

json curve_to_json(const Weierstrass& w) {
  json a = json::array();
  for (const auto& x : w.a) a.push_back(elt_to_json(x));
  return json{{"a", a}, {"equation", w.to_string()}};
}

Transform transform_from_json(const RingPtr& R, const json& j) {
  if (j.is_array()) {
    if (j.size() != 4) throw ParseError("transform must list u, r, s, t");
    return Transform{elt_from_json(R, j[0]), elt_from_json(R, j[1]), elt_from_json(R, j[2]), elt_from_json(R, j[3])};
  }
  if (!j.is_object()) throw ParseError("transform must be a list or an object");
  for (const char* key : {"u", "r", "s", "t"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return Transform{elt_from_json(R, j["u"]), elt_from_json(R, j["r"]), elt_from_json(R, j["s"]),
                   elt_from_json(R, j["t"])};
}

json transform_to_json(const Transform& t) {
  return json{{"u", elt_to_json(t.u)},
              {"r", elt_to_json(t.r)},
              {"s", elt_to_json(t.s)},
              {"t", elt_to_json(t.t)},
              {"text", t.to_string()}};
}

Extension extension_from_json(const RingPtr& K, const json& j) {
  if (!j.is_object()) throw ParseError("extension must be an object");
  ExtensionDesc d;
  d.base = K;
  if (j.contains("unram_degree")) d.unram_degree = get<int>(j, "unram_degree");
  if (j.contains("eisenstein")) {
    if (!j.at("eisenstein").is_array()) throw ParseError("'eisenstein' must be a coefficient list");
    for (const auto& x : j.at("eisenstein")) d.eisenstein.push_back(elt_from_json(K, x));
  }
  return build_extension(d);
}

json extension_to_json(const Extension& L) {
  json c = json::array();
  for (const auto& x : L.eisenstein) c.push_back(elt_to_json(x));
  return json{{"ring", ring_to_json(L.ring)},
              {"e", L.e},
              {"f", L.f},
              {"eisenstein", c},
              {"v_L_different", L.different_valuation()}};
}

json to_json(const LocalData& ld) {
  return json{{"type", ld.type.to_string()}, {"f", ld.f},
              {"m", ld.m},                   {"v_delta", ld.v_delta},
              {"v_delta_input", ld.v_delta_input}, {"scalings", ld.scalings},
              {"minimal_model", curve_to_json(ld.minimal_model)}, {"transform", transform_to_json(ld.transform)}};
}

json to_json(const BoundCheck& b) {
  return json{{"name", b.name},
              {"lhs", b.lhs.to_string()},
              {"rhs", b.rhs.to_string()},
              {"relation", b.strict ? "<" : "<="},
              {"pass", b.pass()}};
}

json to_json(const BaseChangeReport& b) {
  return json{{"e", b.e},
              {"v_L_different", b.v_L_different},
              {"v_L_delta_K_model", b.v_L_delta_K_model},
              {"v_L_delta_L_minimal", b.v_L_delta_L_minimal},
              {"drop", b.drop},
              {"bound", b.bound},
              {"u_val", b.u_val},
              {"conductor_c", b.conductor_c.to_string()},
              {"type_L", b.type_L.to_string()},
              {"lower_ok", b.lower_ok()},
              {"upper_ok", b.upper_ok()},
              {"drop_consistent", b.drop_consistent()}};
}

json to_json(const ModelVerdict& v) {
  json w = nullptr;
  if (v.witness) w = transform_to_json(v.witness->transform);
  return json{{"congruent", v.congruent},
              {"level", v.level},
              {"witness", w},
              {"certified_exhaustive", v.certified_exhaustive}};
}

json to_json(const ExampleReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(
        json{{"quantity", row.quantity}, {"expected", row.expected}, {"computed", row.computed}, {"pass", row.pass}});
  return json{{"id", r.id}, {"rows", rows}, {"ok", r.ok()}};
}

json to_json(const SuiteResult& r) {
  json failures = json::array();
  for (const auto& c : r.cases)
    if (!c.pass) failures.push_back(json{{"index", c.index}, {"label", c.label}, {"detail", c.detail}});
  json j{{"suite", r.suite}, {"passed", r.passed()}, {"total", r.total()}, {"ok", r.ok()}, {"failures", failures}};
  if (const CaseResult* w = r.worst())
    j["worst"] = json{{"index", w->index}, {"label", w->label}, {"detail", w->detail}, {"margin", w->margin}};
  return j;
}

}  // namespace localred
