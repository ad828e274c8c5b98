#include "finitop/io.hpp"

#include "finitop/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace finitop::io
{

namespace
{

[[noreturn]] void parse_error(const std::string& what)
{
    throw Error(ErrorKind::Parse, what);
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        parse_error(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end())
        parse_error(std::string("missing field '") + key + "'");
    return *it;
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        parse_error(std::string(what) + " must be an integer");
    return j.get<int>();
}

bool as_bool(const Json& j, const char* what)
{
    if (!j.is_boolean())
        parse_error(std::string(what) + " must be a boolean");
    return j.get<bool>();
}

} // namespace

Json to_json(PointSet a)
{
    Json out = Json::array();
    for (int p : a.points())
        out.push_back(p);
    return out;
}

Json to_json(const FiniteSpace& s)
{
    Json opens = Json::array();
    for (PointSet u : s.opens())
        opens.push_back(to_json(u));
    return Json{{"n", s.n()}, {"opens", std::move(opens)}};
}

Json to_json(const SpaceMap& f)
{
    return Json{{"domain", to_json(f.domain())},
                {"codomain", to_json(f.codomain())},
                {"assignment", f.assignment()}};
}

Json to_json(const ClassificationReport& r)
{
    Json out = Json::object();
    for (SetClass c : kAllSetClasses)
        out[std::string(name_of(c))] = r[c];
    return out;
}

Json to_json(const AxiomReport& r)
{
    Json out = Json::object();
    for (Axiom a : kAllAxioms)
        out[std::string(name_of(a))] = r[a];
    Json witnesses = Json::object();
    for (Axiom a : kAllAxioms)
        if (const auto& w = r.witness_for(a))
            witnesses[std::string(name_of(a))] = to_json(*w);
    out["witnesses"] = std::move(witnesses);
    return out;
}

Json to_json(MapFlags flags)
{
    Json out = Json::object();
    for (MapProperty p : kAllMapProperties)
        out[std::string(name_of(p))] = flags[p];
    return out;
}

Json to_json(const Scope& scope)
{
    Json out{{"min_points", scope.min_points}, {"max_points", scope.max_points}};
    out["max_maps_per_pair"] = scope.max_maps_per_pair ? Json(*scope.max_maps_per_pair) : Json(nullptr);
    out["witness_limit"] = scope.witness_limit;
    out["allow_large_map_scope"] = scope.allow_large_map_scope;
    return out;
}

Json to_json(const Witness& w)
{
    Json spaces = Json::array();
    for (const FiniteSpace& s : w.bindings.spaces)
        spaces.push_back(to_json(s));
    Json maps = Json::array();
    for (const SpaceMap& f : w.bindings.maps)
        maps.push_back(to_json(f));
    return Json{{"spaces", std::move(spaces)},
                {"maps", std::move(maps)},
                {"hypothesis", w.evaluation.hypothesis},
                {"conclusion", w.evaluation.conclusion}};
}

Json to_json(const TheoremReport& r)
{
    Json witnesses = Json::array();
    for (const Witness& w : r.witnesses)
        witnesses.push_back(to_json(w));
    return Json{{"claim", std::string(name_of(r.claim))},
                {"statement", std::string(info(r.claim).statement)},
                {"scope", to_json(r.scope)},
                {"instances", r.instances},
                {"outcome", std::string(name_of(r.outcome))},
                {"witnesses", std::move(witnesses)}};
}

PointSet point_set_from_json(const Json& j, int n)
{
    if (!j.is_array())
        parse_error("a point set must be an array of point indices");
    PointSet out;
    for (const Json& p : j)
    {
        const int point = as_int(p, "point index");
        if (point < 0 || point >= n)
            parse_error("point " + std::to_string(point) + " outside 0.." + std::to_string(n - 1));
        out = out.with(point);
    }
    return out;
}

FiniteSpace space_from_json(const Json& j)
{
    const int n = as_int(field(j, "n"), "n");
    if (n < 0 || n > kMaxPoints)
        parse_error("n must be in 0.." + std::to_string(kMaxPoints));
    const Json& opens = field(j, "opens");
    if (!opens.is_array())
        parse_error("opens must be an array");
    std::vector<PointSet> family;
    family.reserve(opens.size());
    for (const Json& u : opens)
        family.push_back(point_set_from_json(u, n));
    return FiniteSpace(n, std::move(family));
}

SpaceMap map_from_json(const Json& j)
{
    FiniteSpace domain = space_from_json(field(j, "domain"));
    FiniteSpace codomain = space_from_json(field(j, "codomain"));
    const Json& a = field(j, "assignment");
    if (!a.is_array())
        parse_error("assignment must be an array");
    std::vector<int> assignment;
    for (const Json& v : a)
        assignment.push_back(as_int(v, "assignment entry"));
    return SpaceMap(std::move(domain), std::move(codomain), std::move(assignment));
}

Scope scope_from_json(const Json& j)
{
    Scope scope;
    scope.min_points = as_int(field(j, "min_points"), "min_points");
    scope.max_points = as_int(field(j, "max_points"), "max_points");
    const Json& cap = field(j, "max_maps_per_pair");
    if (!cap.is_null())
    {
        if (!cap.is_number_unsigned())
            parse_error("max_maps_per_pair must be a non-negative integer or null");
        scope.max_maps_per_pair = cap.get<std::uint64_t>();
    }
    const Json& limit = field(j, "witness_limit");
    if (!limit.is_number_unsigned())
        parse_error("witness_limit must be a non-negative integer");
    scope.witness_limit = limit.get<std::size_t>();
    scope.allow_large_map_scope = as_bool(field(j, "allow_large_map_scope"), "allow_large_map_scope");
    return scope;
}

Witness witness_from_json(ClaimId claim, const Json& j)
{
    (void)claim;
    Witness w;
    const Json& spaces = field(j, "spaces");
    const Json& maps = field(j, "maps");
    if (!spaces.is_array() || !maps.is_array())
        parse_error("witness spaces and maps must be arrays");
    for (const Json& s : spaces)
        w.bindings.spaces.push_back(space_from_json(s));
    for (const Json& f : maps)
        w.bindings.maps.push_back(map_from_json(f));
    w.evaluation.hypothesis = as_bool(field(j, "hypothesis"), "hypothesis");
    w.evaluation.conclusion = as_bool(field(j, "conclusion"), "conclusion");
    return w;
}

TheoremReport report_from_json(const Json& j)
{
    TheoremReport r;
    const Json& claim = field(j, "claim");
    if (!claim.is_string())
        parse_error("claim must be a string");
    const auto id = parse_claim(claim.get<std::string>());
    if (!id)
        parse_error("unknown claim '" + claim.get<std::string>() + "'");
    r.claim = *id;
    r.scope = scope_from_json(field(j, "scope"));
    const Json& instances = field(j, "instances");
    if (!instances.is_number_unsigned())
        parse_error("instances must be a non-negative integer");
    r.instances = instances.get<std::uint64_t>();
    const Json& outcome = field(j, "outcome");
    if (outcome == name_of(Outcome::HoldsOnScope))
        r.outcome = Outcome::HoldsOnScope;
    else if (outcome == name_of(Outcome::Refuted))
        r.outcome = Outcome::Refuted;
    else
        parse_error("unknown outcome");
    const Json& witnesses = field(j, "witnesses");
    if (!witnesses.is_array())
        parse_error("witnesses must be an array");
    for (const Json& w : witnesses)
        r.witnesses.push_back(witness_from_json(r.claim, w));
    return r;
}

std::string to_text(const FiniteSpace& s)
{
    return to_json(s).dump();
}

std::string to_text(const SpaceMap& f)
{
    return to_json(f).dump();
}

Json parse_json(std::string_view text)
{
    try
    {
        return Json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error& e)
    {
        parse_error(e.what());
    }
}

FiniteSpace parse_space(std::string_view text)
{
    return space_from_json(parse_json(text));
}

SpaceMap parse_map(std::string_view text)
{
    return map_from_json(parse_json(text));
}

PointSet parse_subset(std::string_view text, int n)
{
    PointSet out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (start <= text.size())
    {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string_view token = text.substr(start, comma - start);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        int point = -1;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), point);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            parse_error("bad point index '" + std::string(token) + "'");
        if (point < 0 || point >= n)
            parse_error("point " + std::to_string(point) + " outside 0.." + std::to_string(n - 1));
        out = out.with(point);
        start = comma + 1;
    }
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        parse_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace finitop::io
