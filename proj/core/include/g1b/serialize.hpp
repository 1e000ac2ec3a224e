#pragma once
// Stable JSON encoders for the library's certificate types.  All objects use
// insertion-ordered keys, rationals are "num/den" strings, and field elements
// are "p^r:[c0,c1,...]" strings; no floats and no timestamps appear anywhere,
// so equal inputs always produce byte-identical output.

#include <json.hpp>

#include <string>

#include "g1b/brauer.hpp"
#include "g1b/ec.hpp"
#include "g1b/kummer.hpp"
#include "g1b/obstruction.hpp"
#include "g1b/valuation.hpp"

namespace g1b {

using ojson = nlohmann::ordered_json;

ojson encode(const Point& P);                    // {x, y} or {inf: true}
ojson encode(const KummerClass& k);              // {p, n, f, v, u}
ojson encode(const FullLevelCurve& rec, u64 c);  // {p, a4, a6, c}
ojson encode(const LevelStructure& ls);
ojson encode(const TwistCertificate& cert);
ojson encode(const NoncyclicReport& rep);

// Common head of every CLI emission: {schema: 1, command, inputs, seed}.
// Callers append their result fields after this.
ojson envelope(const std::string& command, ojson inputs, u64 seed);

// Canonical dump: 2-space indent, terminated by a single newline.
std::string dump_json(const ojson& j);

}  // namespace g1b
