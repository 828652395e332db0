#pragma once

#include <string>

#include "json.hpp"
#include "localred/basechange.hpp"
#include "localred/congruence.hpp"
#include "localred/suites.hpp"

namespace localred {

using json = nlohmann::json;

// Inline JSON if the argument starts with '{' or '[', else a file path.
// ParseError on unreadable or malformed input.
json parse_json_arg(const std::string& arg);

// {"kind": "mixed" | "equal", "p", "residue_degree" or "modulus",
//  "precision", "eisenstein": [[c_0, ..., c_{e-1}], ...]}
// with one coefficient list per Eisenstein level, each over the ring below.
RingPtr ring_from_json(const json& j);
json ring_to_json(const RingPtr& R);

// Integer, polynomial string in pi (or t) such as "1 + 2*pi^3" or "5^3", or
// {"digits": [[c, ...], ...], "precision": M} with pi-adic digits given as
// residue field coefficient lists.
Elt elt_from_json(const RingPtr& R, const json& j);
json elt_to_json(const Elt& x);

// [a1, a2, a3, a4, a6] or {"a": [...]}.
Weierstrass curve_from_json(const RingPtr& R, const json& j);
json curve_to_json(const Weierstrass& w);

// [u, r, s, t] or {"u", "r", "s", "t"}.
Transform transform_from_json(const RingPtr& R, const json& j);
json transform_to_json(const Transform& t);

// {"unram_degree": f, "eisenstein": [c_0, ..., c_{e-1}]} over K.
Extension extension_from_json(const RingPtr& K, const json& j);
json extension_to_json(const Extension& L);

json to_json(const LocalData& ld);
json to_json(const BaseChangeReport& b);
json to_json(const BoundCheck& b);
json to_json(const ModelVerdict& v);
json to_json(const ExampleReport& r);
json to_json(const SuiteResult& r);

}  // namespace localred
