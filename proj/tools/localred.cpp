#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "localred/errors.hpp"
#include "localred/json_io.hpp"

using namespace localred;

namespace {

enum Exit { ok = 0, parse = 1, precision = 2, assertion = 3, budget = 4 };

struct Options {
  std::string ring, curve, curve2, extension, format = "json", suite, id;
  int level = 0, precision = 0, count = 0, param = 0, threads = 0;
  std::uint64_t seed = 1;
  std::vector<std::uint32_t> primes;
};

RingPtr load_ring(const Options& o) {
  if (o.ring.empty()) throw ParseError("--ring is required");
  json j = parse_json_arg(o.ring);
  if (o.precision > 0) j["precision"] = o.precision;
  return ring_from_json(j);
}

Weierstrass load_curve(const RingPtr& R, const std::string& arg, const char* flag) {
  if (arg.empty()) throw ParseError(std::string(flag) + " is required");
  return curve_from_json(R, parse_json_arg(arg));
}

void table_row(std::ostream& os, const std::vector<std::string>& cells, const std::vector<int>& widths) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    os << std::left << std::setw(widths[i] + 2) << cells[i];
  os << "\n";
}

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<int> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max<int>(w[i], static_cast<int>(r[i].size()));
    }
  for (const auto& r : rows) table_row(os, r, w);
}

std::string str(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Flat key/value view of a JSON object for --format table.
void print_object(std::ostream& os, const json& j) {
  std::vector<std::vector<std::string>> rows;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object() && it->contains("equation"))
      rows.push_back({it.key(), str((*it)["equation"])});
    else if (it->is_object() && it->contains("text"))
      rows.push_back({it.key(), str((*it)["text"])});
    else if (it->is_object() && it->contains("digits"))
      rows.push_back({it.key(), "digits " + (*it)["digits"].dump()});
    else
      rows.push_back({it.key(), str(*it)});
  }
  print_table(os, rows);
}

int emit(const Options& o, const json& j, const std::function<void(std::ostream&)>& table) {
  if (o.format == "table")
    table(std::cout);
  else
    std::cout << j.dump(2) << "\n";
  return Exit::ok;
}

int cmd_localdata(const Options& o) {
  RingPtr R = load_ring(o);
  Weierstrass w = load_curve(R, o.curve, "--curve");
  LocalData ld = tate_algorithm(w);
  json j = to_json(ld);
  j["input"] = curve_to_json(w);
  j["ring"] = ring_to_json(R);
  return emit(o, j, [&](std::ostream& os) {
    json t = j;
    t.erase("ring");
    print_object(os, t);
  });
}

int cmd_basechange(const Options& o) {
  RingPtr R = load_ring(o);
  Weierstrass w = load_curve(R, o.curve, "--curve");
  if (o.extension.empty()) throw ParseError("--extension is required");
  Extension L = extension_from_json(R, parse_json_arg(o.extension));
  LocalData ld = tate_algorithm(w);
  BaseChangeReport b = compare_discriminants(ld.minimal_model, L);
  json j = to_json(b);
  j["type_K"] = ld.type.to_string();
  j["min_formula"] = base_change_conductor(ld.minimal_model).to_string();
  json bounds = nullptr;
  try {
    bounds = json::array();
    for (const auto& c : check_bounds(ld.minimal_model, L)) bounds.push_back(to_json(c));
  } catch (const NotSemiStableOverL&) {
    bounds = nullptr;
  }
  j["bounds"] = bounds;
  return emit(o, j, [&](std::ostream& os) {
    json t = j;
    t.erase("bounds");
    print_object(os, t);
    if (!bounds.is_null()) {
      std::vector<std::vector<std::string>> rows{{"bound", "lhs", "", "rhs", "pass"}};
      for (const auto& c : bounds)
        rows.push_back({str(c["name"]), str(c["lhs"]), str(c["relation"]), str(c["rhs"]), c["pass"] ? "yes" : "no"});
      os << "\n";
      print_table(os, rows);
    }
  });
}

int cmd_congruent(const Options& o) {
  RingPtr R = load_ring(o);
  Weierstrass a = load_curve(R, o.curve, "--curve");
  Weierstrass b = load_curve(R, o.curve2, "--curve2");
  ModelVerdict v = models_congruent(a, b, o.level);
  json j = to_json(v);
  return emit(o, j, [&](std::ostream& os) {
    print_object(os, json{{"congruent", v.congruent},
                          {"level", v.level},
                          {"certified_exhaustive", v.certified_exhaustive},
                          {"witness", v.witness ? v.witness->transform.to_string() : "none"}});
  });
}

int cmd_reproduce(const Options& o) {
  ExampleReport r = run_example(o.id, o.param);
  json j = to_json(r);
  emit(o, j, [&](std::ostream& os) {
    std::vector<std::vector<std::string>> rows{{"quantity", "expected", "computed", "pass"}};
    for (const auto& row : r.rows) rows.push_back({row.quantity, row.expected, row.computed, row.pass ? "yes" : "NO"});
    print_table(os, rows);
  });
  if (!r.ok()) {
    std::cerr << "assertion failed: example " << o.id << " does not reproduce\n";
    return Exit::assertion;
  }
  return Exit::ok;
}

int cmd_verify(const Options& o) {
  SuiteParams p;
  p.count = o.count;
  p.seed = o.seed;
  p.primes = o.primes;
  p.threads = o.threads;
  SuiteResult r = run_suite(o.suite, p);
  json j = to_json(r);
  j["seed"] = o.seed;
  emit(o, j, [&](std::ostream& os) {
    os << r.suite << ": " << r.passed() << "/" << r.total() << " pass\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : r.cases)
      if (!c.pass) rows.push_back({"FAIL #" + std::to_string(c.index), c.label, c.detail});
    if (const CaseResult* w = r.worst(); w && w->pass) {
      std::ostringstream m;
      m << w->margin;
      rows.push_back({"tightest #" + std::to_string(w->index), w->label, w->detail + " (margin " + m.str() + ")"});
    }
    print_table(os, rows);
  });
  return r.ok() ? Exit::ok : Exit::assertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local reduction, base change and congruences of elliptic curves over DVRs"};
  app.require_subcommand(1);
  Options o;
  auto fmt = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto ring = [&](CLI::App* c) {
    c->add_option("--ring", o.ring, "Ring descriptor (inline JSON or file)");
    c->add_option("--precision", o.precision, "Override the ring precision M");
  };

  auto* ld = app.add_subcommand("localdata", "Minimal model and Tate local data");
  ring(ld);
  ld->add_option("--curve", o.curve, "Curve [a1, a2, a3, a4, a6] (inline JSON or file)");
  fmt(ld);

  auto* bc = app.add_subcommand("basechange", "Discriminant drop and conductor bounds over an extension");
  ring(bc);
  bc->add_option("--curve", o.curve, "Curve (inline JSON or file)");
  bc->add_option("--extension", o.extension, "Extension {unram_degree, eisenstein} (inline JSON or file)");
  fmt(bc);

  auto* cg = app.add_subcommand("congruent", "Isomorphism of two models modulo pi^{N+1}");
  ring(cg);
  cg->add_option("--curve", o.curve, "First curve");
  cg->add_option("--curve2", o.curve2, "Second curve");
  cg->add_option("--level", o.level, "Level N")->check(CLI::NonNegativeNumber);
  fmt(cg);

  auto* vf = app.add_subcommand("verify", "Run a property suite on a seeded corpus");
  vf->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  vf->add_option("--seed", o.seed, "Corpus seed");
  vf->add_option("--count", o.count, "Corpus size (per prime for ogg-saito); 0 for the default")
      ->check(CLI::NonNegativeNumber);
  vf->add_option("--primes", o.primes, "Primes for ogg-saito")->delimiter(',');
  vf->add_option("--threads", o.threads, "Worker threads; 0 for all cores")->check(CLI::NonNegativeNumber);
  fmt(vf);

  auto* rp = app.add_subcommand("reproduce", "Reproduce a worked example");
  rp->add_option("id", o.id, "Example id: 1.4.5, 2.5.8 or sec6")->required();
  rp->add_option("--param", o.param, "m for 2.5.8, n for sec6");
  fmt(rp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Exit::ok : Exit::parse;
  }

  try {
    if (ld->parsed()) return cmd_localdata(o);
    if (bc->parsed()) return cmd_basechange(o);
    if (cg->parsed()) return cmd_congruent(o);
    if (vf->parsed()) return cmd_verify(o);
    if (rp->parsed()) return cmd_reproduce(o);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return Exit::parse;
  } catch (const InvalidDescriptor& e) {
    std::cerr << e.what() << "\n";
    return Exit::parse;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Exit::parse;
  } catch (const PrecisionExhausted& e) {
    std::cerr << e.what() << "; rerun with a larger --precision\n";
    return Exit::precision;
  } catch (const AssertionFailed& e) {
    std::cerr << e.what() << "\n";
    return Exit::assertion;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "; raise LOCALRED_BUDGET\n";
    return Exit::budget;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return Exit::parse;
  }
  return Exit::ok;
}
