#pragma once

#include <nlohmann/json.hpp>

#include "vancalc/assembler.hpp"
#include "vancalc/doublebox.hpp"
#include "vancalc/local_models.hpp"
#include "vancalc/sss.hpp"

namespace vancalc {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& x);
// Accepts "p/q" strings and integers.
Rational rational_from_json(const json& j);

// Entries sorted by (alpha, w); objects {"alpha","w","mult"}.
json to_json(const WeightedSpectrum& s);
json to_json(const Spectrum& s);
json to_json(const HodgeDeligneDiagram& d);
// Accepts arrays of objects or of [alpha, w, mult] triples (mult defaults to 1).
WeightedSpectrum weighted_spectrum_from_json(const json& j);
Spectrum spectrum_from_json(const json& j);
HodgeDeligneDiagram diagram_from_json(const json& j);

json to_json(const EigenEntry& e);
// Object {"alpha","w","beta","mult"} or array [alpha, w, beta, mult].
EigenEntry eigen_entry_from_json(const json& j);
std::vector<EigenEntry> eigen_entries_from_json(const json& j);

json to_json(const FiberHodge& f);
FiberHodge fiber_from_json(const json& j);  // "k3", "cubic_fivefold" or [{"p","q","h"}]

json to_json(const Constraint& c);
Constraint constraint_from_json(const json& j);

json to_json(const E2Table& t);
json to_json(const VsSolution& s);
json to_json(const AffineRelation& r);
json to_json(const DiscrepancyReport& r);
json to_json(const SheafDescription& s);
json to_json(const DegenerationScenario& sc);
json to_json(const ScenarioReport& r);
json to_json(const KulikovReport& r);

json to_json(const SssResult& r);
json to_json(const JkSummary& s);
json to_json(const SlcCatalogEntry& e);

json to_json(const KinematicData& k);
json to_json(const EvReport& r);
json to_json(const SingularLocusReport& r);
json to_json(const DoubleboxReport& r);

}  // namespace vancalc
