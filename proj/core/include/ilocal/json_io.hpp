#pragma once

#include <nlohmann/json.hpp>

#include "ilocal/complex.hpp"
#include "ilocal/connected.hpp"
#include "ilocal/doubling.hpp"
#include "ilocal/homology.hpp"
#include "ilocal/tower.hpp"

namespace ilocal {

using json = nlohmann::json;

// Every *_from_json throws Error (or a subclass) on malformed input.

json grading_to_json(const Grading& g);
/// Accepts "n/d", "n" or a JSON integer.
Grading grading_from_json(const json& j);

json module_to_json(const FUModule& m);
FUModule module_from_json(const json& j);

json complex_to_json(const GeometricComplex& c);
json complex_to_json(const SplitComplex& c);
/// Ignores any "J" and "fixed" members.
GeometricComplex geometric_from_json(const json& j);
/// Requires "J" (pairs) and "fixed".
SplitComplex split_from_json(const json& j);

json local_class_to_json(const LocalClass& c);
/// The combination is returned as given, not simplified.
LocalClass local_class_from_json(const json& j);

json report_to_json(const LocalPairReport& r);

/// Cycle representatives: U-exponent lists per tower.
json witnesses_to_json(const ReductionResult& r);

json fu_chain_to_json(const GeometricComplex& c, const FUChain& x);

}  // namespace ilocal
