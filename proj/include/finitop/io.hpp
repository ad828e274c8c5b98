#pragma once

#include "finitop/axioms.hpp"
#include "finitop/maps.hpp"
#include "finitop/set_classes.hpp"
#include "finitop/space.hpp"
#include "finitop/verifier.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace finitop::io
{

using Json = nlohmann::ordered_json;

// Space record: {"n": <int>, "opens": [[<points>...], ...]}, opens in
// canonical order on output, any order on input.
Json to_json(PointSet a);
Json to_json(const FiniteSpace& s);
// Map record: {"domain": <space>, "codomain": <space>, "assignment": [...]}.
Json to_json(const SpaceMap& f);
Json to_json(const ClassificationReport& r);
Json to_json(const AxiomReport& r);
Json to_json(MapFlags flags);
Json to_json(const Scope& scope);
Json to_json(const Witness& w);
/// Structured report; carries no timing so that output is reproducible.
Json to_json(const TheoremReport& r);

/// All parse functions throw Error{Parse} on malformed records; semantic
/// failures surface as the constructors' errors (NotATopology, InvalidMap).
PointSet point_set_from_json(const Json& j, int n);
FiniteSpace space_from_json(const Json& j);
SpaceMap map_from_json(const Json& j);
Scope scope_from_json(const Json& j);
Witness witness_from_json(ClaimId claim, const Json& j);
TheoremReport report_from_json(const Json& j);

/// Compact single-line text.
std::string to_text(const FiniteSpace& s);
std::string to_text(const SpaceMap& f);

Json parse_json(std::string_view text);
FiniteSpace parse_space(std::string_view text);
SpaceMap parse_map(std::string_view text);

/// Comma-separated 0-based point indices; the empty string is ∅.
PointSet parse_subset(std::string_view text, int n);

std::string read_file(const std::string& path);

} // namespace finitop::io
