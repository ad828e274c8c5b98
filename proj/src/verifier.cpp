#include "finitop/verifier.hpp"

#include "finitop/axioms.hpp"
#include "finitop/enumeration.hpp"
#include "finitop/error.hpp"
#include "finitop/io.hpp"
#include "finitop/set_classes.hpp"

#include <algorithm>
#include <thread>

namespace finitop
{

const std::array<ClaimId, kClaimCount> kAllClaims = {
    ClaimId::T3_2_ab,  ClaimId::T3_2_ba,  ClaimId::P3_3,     ClaimId::T3_4a,    ClaimId::T3_4b,
    ClaimId::T3_5_fwd, ClaimId::T3_5_bwd, ClaimId::P3_6,     ClaimId::T3_8a,    ClaimId::T3_8b,
    ClaimId::T3_9a,    ClaimId::T3_9b,    ClaimId::T3_10,    ClaimId::P3_11,    ClaimId::P3_12_ab,
    ClaimId::P3_12_bc, ClaimId::P3_12_ca,
};

namespace
{

constexpr std::array<ClaimInfo, kClaimCount> kClaimInfo = {{
    {ClaimId::T3_2_ab, "T3_2_ab", Arity::Space, false, "T_alpha_m(S) => singleton_dichotomy(S)"},
    {ClaimId::T3_2_ba, "T3_2_ba", Arity::Space, false, "singleton_dichotomy(S) => T_alpha_m(S)"},
    {ClaimId::P3_3, "P3_3", Arity::Map, false, "alpha_m_continuous(f) & T_alpha_m(X) => continuous(f)"},
    {ClaimId::T3_4a, "T3_4a", Arity::Map, false, "alpha_m_continuous(f) & T_alpha_m(X) => continuous(f)"},
    {ClaimId::T3_4b, "T3_4b", Arity::Map, false, "alpha_m_irresolute(f) & T_alpha_m(X) => continuous(f)"},
    {ClaimId::T3_5_fwd, "T3_5_fwd", Arity::Map, false,
     "alpha_m_continuous(f) => preimage of every open set of Y is alpha_m_open"},
    {ClaimId::T3_5_bwd, "T3_5_bwd", Arity::Map, false,
     "preimage of every open set of Y is alpha_m_open => alpha_m_continuous(f)"},
    {ClaimId::P3_6, "P3_6", Arity::Chain, false,
     "alpha_m_continuous(f) & alpha_m_continuous(g) & T_alpha_m(Y) => alpha_m_continuous(g.f)"},
    {ClaimId::T3_8a, "T3_8a", Arity::Chain, false,
     "alpha_m_continuous(f) & alpha_m_continuous(g) & T_alpha_m(Y) => alpha_m_continuous(g.f)"},
    {ClaimId::T3_8b, "T3_8b", Arity::Chain, false,
     "alpha_m_closed_map(f) & alpha_m_closed_map(g) & T_alpha_m(Y) => alpha_m_closed_map(g.f)"},
    {ClaimId::T3_9a, "T3_9a", Arity::Map, false, "T_alpha_m(X) & alpha_m_continuous(f) => continuous(f)"},
    {ClaimId::T3_9b, "T3_9b", Arity::Map, false, "T_alpha_m(X) & alpha_m_closed_map(f) => closed_map(f)"},
    {ClaimId::T3_10, "T3_10", Arity::Map, false,
     "surjective(f) & closed_map(f) & alpha_m_irresolute(f) & T_alpha_m(X) => T_alpha_m(Y)"},
    {ClaimId::P3_11, "P3_11", Arity::Chain, false,
     "alpha_m_closed_map(f) & alpha_m_closed_map(g) & T_alpha_m(Y) => alpha_m_closed_map(g.f)"},
    {ClaimId::P3_12_ab, "P3_12_ab", Arity::Map, true,
     "bijective(f): alpha_m_continuous(f^-1) => alpha_m_open_map(f)"},
    {ClaimId::P3_12_bc, "P3_12_bc", Arity::Map, true,
     "bijective(f): alpha_m_open_map(f) => alpha_m_closed_map(f)"},
    {ClaimId::P3_12_ca, "P3_12_ca", Arity::Map, true,
     "bijective(f): alpha_m_closed_map(f) => alpha_m_continuous(f^-1)"},
}};

// Per-space facts the sweeps need; both views come from one SpaceProfile.
struct SpaceFacts
{
    bool t_alpha_m = false;
    bool dichotomy = false;
};

Evaluation evaluate_space_claim(ClaimId claim, SpaceFacts s) noexcept
{
    if (claim == ClaimId::T3_2_ab)
        return {s.t_alpha_m, s.dichotomy};
    return {s.dichotomy, s.t_alpha_m};
}

// `inverse` is only meaningful for bijections (P3_12_*).
Evaluation evaluate_map_claim(ClaimId claim, SpaceFacts x, SpaceFacts y, MapFlags f, MapFlags inverse) noexcept
{
    using P = MapProperty;
    switch (claim)
    {
    case ClaimId::P3_3:
    case ClaimId::T3_4a:
    case ClaimId::T3_9a:
        return {f[P::AlphaMContinuous] && x.t_alpha_m, f[P::Continuous]};
    case ClaimId::T3_4b:
        return {f[P::AlphaMIrresolute] && x.t_alpha_m, f[P::Continuous]};
    case ClaimId::T3_5_fwd:
        return {f[P::AlphaMContinuous], f[P::AlphaMOpenPreimages]};
    case ClaimId::T3_5_bwd:
        return {f[P::AlphaMOpenPreimages], f[P::AlphaMContinuous]};
    case ClaimId::T3_9b:
        return {x.t_alpha_m && f[P::AlphaMClosedMap], f[P::ClosedMap]};
    case ClaimId::T3_10:
        return {f[P::Surjective] && f[P::ClosedMap] && f[P::AlphaMIrresolute] && x.t_alpha_m, y.t_alpha_m};
    case ClaimId::P3_12_ab:
        return {inverse[P::AlphaMContinuous], f[P::AlphaMOpenMap]};
    case ClaimId::P3_12_bc:
        return {f[P::AlphaMOpenMap], f[P::AlphaMClosedMap]};
    case ClaimId::P3_12_ca:
        return {f[P::AlphaMClosedMap], inverse[P::AlphaMContinuous]};
    default:
        return {};
    }
}

// Every chain claim has the shape P(f) & P(g) & T_alpha_m(Y) => P(g.f).
MapProperty chain_property(ClaimId claim) noexcept
{
    return claim == ClaimId::P3_6 || claim == ClaimId::T3_8a ? MapProperty::AlphaMContinuous
                                                             : MapProperty::AlphaMClosedMap;
}

Evaluation evaluate_chain_claim(ClaimId claim, SpaceFacts y, MapFlags f, MapFlags g, MapFlags gf) noexcept
{
    const MapProperty p = chain_property(claim);
    return {f[p] && g[p] && y.t_alpha_m, gf[p]};
}

[[noreturn]] void arity_error(ClaimId claim, const std::string& what)
{
    throw Error(ErrorKind::ArityMismatch, std::string(name_of(claim)) + ": " + what);
}

void check_arity(ClaimId claim, const Bindings& b)
{
    const Arity arity = info(claim).arity;
    const std::size_t spaces = arity == Arity::Space ? 1 : arity == Arity::Map ? 2 : 3;
    const std::size_t maps = spaces - 1;
    if (b.spaces.size() != spaces || b.maps.size() != maps)
        arity_error(claim, "expected " + std::to_string(spaces) + " space(s) and " + std::to_string(maps)
                               + " map(s), got " + std::to_string(b.spaces.size()) + " and "
                               + std::to_string(b.maps.size()));
    for (std::size_t i = 0; i < maps; ++i)
        if (!(b.maps[i].domain() == b.spaces[i]) || !(b.maps[i].codomain() == b.spaces[i + 1]))
            arity_error(claim, "map " + std::to_string(i) + " does not connect spaces " + std::to_string(i)
                                   + " and " + std::to_string(i + 1));
    if (info(claim).bijections_only && !is_bijective(b.maps[0]))
        arity_error(claim, "claim is stated for bijections only");
}

// Sorts witnesses across shards. Entries are the indices of the bound
// objects in sweep order (spaces, then maps), padded with zeros.
using SweepKey = std::array<std::uint64_t, 5>;

struct Candidate
{
    SweepKey key{};
    Evaluation evaluation;
};

struct ShardResult
{
    std::uint64_t instances = 0;
    std::vector<Candidate> candidates;
};

class Universe
{
public:
    Universe(const Scope& scope, bool need_maps, unsigned jobs) : jobs_(jobs)
    {
        for (int n = scope.min_points; n <= scope.max_points; ++n)
            for (FiniteSpace& s : enumerate_topologies(n))
                profiles_.emplace_back(std::move(s));
        for (const SpaceProfile& p : profiles_)
            facts_.push_back({is_T_alpha_m(p), singleton_dichotomy(p)});
        if (!need_maps)
            return;

        for (int a = 0; a <= scope.max_points; ++a)
            for (int b = 0; b <= scope.max_points; ++b)
            {
                auto& table = assignments_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                for_each_assignment(a, b, [&](std::span<const int> v) {
                    table.insert(table.end(), v.begin(), v.end());
                    return true;
                });
            }

        const std::size_t count = profiles_.size();
        pair_flags_.resize(count * count);
        parallel_for(count, [&](std::size_t i) {
            for (std::size_t j = 0; j < count; ++j)
            {
                auto& flags = pair_flags_[i * count + j];
                const std::uint64_t maps = map_count(i, j);
                flags.resize(maps);
                for (std::uint64_t m = 0; m < maps; ++m)
                    flags[m] = classify_map(profiles_[i], profiles_[j], assignment(i, j, m));
            }
        });
    }

    [[nodiscard]] std::size_t size() const noexcept { return profiles_.size(); }
    [[nodiscard]] const SpaceProfile& profile(std::size_t i) const noexcept { return profiles_[i]; }
    [[nodiscard]] SpaceFacts facts(std::size_t i) const noexcept { return facts_[i]; }
    [[nodiscard]] int n(std::size_t i) const noexcept { return profiles_[i].n(); }

    [[nodiscard]] std::uint64_t map_count(std::size_t i, std::size_t j) const noexcept
    {
        return assignment_count(n(i), n(j));
    }

    [[nodiscard]] std::span<const int> assignment(std::size_t i, std::size_t j, std::uint64_t m) const noexcept
    {
        const auto& table = assignments_[static_cast<std::size_t>(n(i))][static_cast<std::size_t>(n(j))];
        const auto width = static_cast<std::size_t>(n(i));
        return std::span<const int>(table).subspan(static_cast<std::size_t>(m) * width, width);
    }

    [[nodiscard]] MapFlags flags(std::size_t i, std::size_t j, std::uint64_t m) const noexcept
    {
        return pair_flags_[i * size() + j][m];
    }

    [[nodiscard]] unsigned jobs() const noexcept { return jobs_; }

    // Runs body(i) for i in [0, count), strided across workers.
    template <typename Body>
    void parallel_for(std::size_t count, Body&& body) const
    {
        const unsigned workers = std::max(1u, std::min<unsigned>(jobs_, static_cast<unsigned>(count)));
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += workers)
                    body(i);
            });
        for (auto& t : threads)
            t.join();
    }

private:
    unsigned jobs_;
    std::vector<SpaceProfile> profiles_;
    std::vector<SpaceFacts> facts_;
    std::array<std::array<std::vector<int>, kMaxEnumerationPoints + 1>, kMaxEnumerationPoints + 1> assignments_;
    std::vector<std::vector<MapFlags>> pair_flags_;
};

// Map indices of pair (i, j) admitted by the claim's filter and the per-pair cap.
std::vector<std::uint64_t> eligible_maps(const Universe& u, std::size_t i, std::size_t j, bool bijections_only,
                                         const Scope& scope)
{
    std::vector<std::uint64_t> out;
    const std::uint64_t total = u.map_count(i, j);
    const std::uint64_t cap = scope.max_maps_per_pair.value_or(total);
    for (std::uint64_t m = 0; m < total && out.size() < cap; ++m)
        if (!bijections_only || u.flags(i, j, m)[MapProperty::Bijective])
            out.push_back(m);
    return out;
}

class Sweep
{
public:
    Sweep(ClaimId claim, const Scope& scope, const Universe& universe)
        : claim_(claim), scope_(scope), u_(universe)
    {
    }

    ShardResult run_outer(std::size_t i) const
    {
        ShardResult r;
        switch (info(claim_).arity)
        {
        case Arity::Space: space_instance(i, r); break;
        case Arity::Map: map_instances(i, r); break;
        case Arity::Chain: chain_instances(i, r); break;
        }
        return r;
    }

private:
    bool want_more(const ShardResult& r) const noexcept
    {
        return scope_.witness_limit == 0 || r.candidates.size() < scope_.witness_limit;
    }

    void record(ShardResult& r, SweepKey key, Evaluation e) const
    {
        if (!e.holds() && want_more(r))
            r.candidates.push_back({key, e});
    }

    void space_instance(std::size_t i, ShardResult& r) const
    {
        ++r.instances;
        record(r, {i, 0, 0, 0, 0}, evaluate_space_claim(claim_, u_.facts(i)));
    }

    void map_instances(std::size_t i, ShardResult& r) const
    {
        const bool bijections = info(claim_).bijections_only;
        std::vector<int> inverse;
        for (std::size_t j = 0; j < u_.size(); ++j)
        {
            if (bijections && u_.n(i) != u_.n(j))
                continue;
            for (std::uint64_t m : eligible_maps(u_, i, j, bijections, scope_))
            {
                ++r.instances;
                MapFlags inverse_flags;
                if (bijections)
                {
                    const auto f = u_.assignment(i, j, m);
                    inverse.assign(f.size(), 0);
                    for (std::size_t x = 0; x < f.size(); ++x)
                        inverse[static_cast<std::size_t>(f[x])] = static_cast<int>(x);
                    inverse_flags = u_.flags(j, i, encode_assignment(inverse, u_.n(i)));
                }
                record(r, {i, j, m, 0, 0},
                       evaluate_map_claim(claim_, u_.facts(i), u_.facts(j), u_.flags(i, j, m), inverse_flags));
            }
        }
    }

    void chain_instances(std::size_t i, ShardResult& r) const
    {
        const MapProperty p = chain_property(claim_);
        const std::size_t count = u_.size();

        std::vector<std::vector<std::uint64_t>> from_x(count);
        for (std::size_t j = 0; j < count; ++j)
            from_x[j] = eligible_maps(u_, i, j, false, scope_);

        std::vector<int> composite;
        for (std::size_t j = 0; j < count; ++j)
        {
            const auto& fs = from_x[j];
            const bool y_ok = u_.facts(j).t_alpha_m;
            for (std::size_t k = 0; k < count; ++k)
            {
                const auto gs = eligible_maps(u_, j, k, false, scope_);
                r.instances += static_cast<std::uint64_t>(fs.size()) * gs.size();
                if (!y_ok)
                    continue;
                for (std::uint64_t fm : fs)
                {
                    const MapFlags f = u_.flags(i, j, fm);
                    if (!f[p])
                        continue;
                    const auto fa = u_.assignment(i, j, fm);
                    for (std::uint64_t gm : gs)
                    {
                        const MapFlags g = u_.flags(j, k, gm);
                        if (!g[p])
                            continue;
                        const auto ga = u_.assignment(j, k, gm);
                        composite.assign(fa.size(), 0);
                        for (std::size_t x = 0; x < fa.size(); ++x)
                            composite[x] = ga[static_cast<std::size_t>(fa[x])];
                        const MapFlags gf = u_.flags(i, k, encode_assignment(composite, u_.n(k)));
                        record(r, {i, j, k, fm, gm}, evaluate_chain_claim(claim_, u_.facts(j), f, g, gf));
                    }
                }
            }
        }
    }

    ClaimId claim_;
    const Scope& scope_;
    const Universe& u_;
};

SpaceMap materialize(const Universe& u, std::size_t i, std::size_t j, std::uint64_t m)
{
    const auto a = u.assignment(i, j, m);
    return SpaceMap(u.profile(i).space(), u.profile(j).space(), std::vector<int>(a.begin(), a.end()));
}

Witness materialize(ClaimId claim, const Universe& u, const Candidate& c)
{
    Witness w;
    w.evaluation = c.evaluation;
    const auto& k = c.key;
    switch (info(claim).arity)
    {
    case Arity::Space:
        w.bindings.spaces = {u.profile(k[0]).space()};
        break;
    case Arity::Map:
        w.bindings.spaces = {u.profile(k[0]).space(), u.profile(k[1]).space()};
        w.bindings.maps = {materialize(u, k[0], k[1], k[2])};
        break;
    case Arity::Chain:
        w.bindings.spaces = {u.profile(k[0]).space(), u.profile(k[1]).space(), u.profile(k[2]).space()};
        w.bindings.maps = {materialize(u, k[0], k[1], k[3]), materialize(u, k[1], k[2], k[4])};
        break;
    }
    return w;
}

TheoremReport run_sweep(ClaimId claim, const Scope& scope, const Universe& universe)
{
    const auto start = std::chrono::steady_clock::now();
    const Sweep sweep(claim, scope, universe);

    std::vector<ShardResult> results(universe.size());
    universe.parallel_for(universe.size(), [&](std::size_t i) { results[i] = sweep.run_outer(i); });

    TheoremReport report;
    report.claim = claim;
    report.scope = scope;
    std::vector<Candidate> candidates;
    for (const ShardResult& r : results)
    {
        report.instances += r.instances;
        candidates.insert(candidates.end(), r.candidates.begin(), r.candidates.end());
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
    if (scope.witness_limit != 0 && candidates.size() > scope.witness_limit)
        candidates.resize(scope.witness_limit);

    for (const Candidate& c : candidates)
    {
        Witness w = materialize(claim, universe, c);
        const Evaluation direct = evaluate_instance(claim, w.bindings);
        if (!(direct == w.evaluation) || direct.holds())
            throw Error(ErrorKind::InvariantBreach,
                        std::string(name_of(claim)) + ": sweep witness did not reproduce under direct evaluation");
        report.witnesses.push_back(std::move(w));
    }
    report.outcome = report.witnesses.empty() ? Outcome::HoldsOnScope : Outcome::Refuted;
    report.wall_time = std::chrono::steady_clock::now() - start;
    return report;
}

unsigned effective_jobs(SweepOptions options)
{
    if (options.jobs != 0)
        return options.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

const ClaimInfo& info(ClaimId id) noexcept
{
    return kClaimInfo[static_cast<std::size_t>(id)];
}

std::string_view name_of(ClaimId id) noexcept
{
    return info(id).name;
}

std::optional<ClaimId> parse_claim(std::string_view name) noexcept
{
    for (const ClaimInfo& c : kClaimInfo)
        if (c.name == name)
            return c.id;
    return std::nullopt;
}

std::string_view name_of(Outcome o) noexcept
{
    return o == Outcome::HoldsOnScope ? "holds-on-scope" : "refuted";
}

Evaluation evaluate_instance(ClaimId claim, const Bindings& b)
{
    check_arity(claim, b);
    switch (info(claim).arity)
    {
    case Arity::Space:
    {
        const FiniteSpace& s = b.spaces[0];
        return evaluate_space_claim(claim, {is_T_alpha_m(s), singleton_dichotomy(s)});
    }
    case Arity::Map:
    {
        const SpaceMap& f = b.maps[0];
        const SpaceFacts x{is_T_alpha_m(b.spaces[0]), false};
        const SpaceFacts y{is_T_alpha_m(b.spaces[1]), false};
        const MapFlags inverse_flags = info(claim).bijections_only ? classify_map(inverse(f)) : MapFlags{};
        return evaluate_map_claim(claim, x, y, classify_map(f), inverse_flags);
    }
    case Arity::Chain:
    {
        const SpaceMap& f = b.maps[0];
        const SpaceMap& g = b.maps[1];
        const SpaceFacts y{is_T_alpha_m(b.spaces[1]), false};
        return evaluate_chain_claim(claim, y, classify_map(f), classify_map(g), classify_map(compose(g, f)));
    }
    }
    return {};
}

bool check_instance(ClaimId claim, const Bindings& bindings)
{
    return evaluate_instance(claim, bindings).holds();
}

Scope default_scope(ClaimId claim) noexcept
{
    Scope scope;
    scope.max_points = info(claim).arity == Arity::Space ? kDefaultSpaceScope : kDefaultMapScope;
    return scope;
}

void check_scope(ClaimId claim, const Scope& scope)
{
    if (scope.min_points < 0 || scope.min_points > scope.max_points)
        throw Error(ErrorKind::BadParams, "scope needs 0 <= min_points <= max_points");
    if (scope.max_points > kMaxEnumerationPoints)
        throw Error(ErrorKind::ScopeTooLarge, "scope is capped at " + std::to_string(kMaxEnumerationPoints)
                                                  + " points, got " + std::to_string(scope.max_points));
    if (info(claim).arity != Arity::Space && scope.max_points > kDefaultMapScope && !scope.allow_large_map_scope)
        throw Error(ErrorKind::ScopeTooLarge, std::string(name_of(claim)) + " quantifies over maps; scopes above "
                                                  + std::to_string(kDefaultMapScope)
                                                  + " points need allow_large_map_scope");
}

TheoremReport verify(ClaimId claim, const Scope& scope, SweepOptions options)
{
    check_scope(claim, scope);
    const Universe universe(scope, info(claim).arity != Arity::Space, effective_jobs(options));
    return run_sweep(claim, scope, universe);
}

std::vector<TheoremReport> verify_all(const Scope& scope, std::span<const ClaimId> claims, SweepOptions options)
{
    std::vector<ClaimId> selected(claims.begin(), claims.end());
    if (selected.empty())
        selected.assign(kAllClaims.begin(), kAllClaims.end());
    bool need_maps = false;
    for (ClaimId c : selected)
    {
        check_scope(c, scope);
        need_maps = need_maps || info(c).arity != Arity::Space;
    }
    const Universe universe(scope, need_maps, effective_jobs(options));
    std::vector<TheoremReport> out;
    for (ClaimId c : selected)
        out.push_back(run_sweep(c, scope, universe));
    return out;
}

bool validate_witness(const TheoremReport& report)
{
    for (const Witness& w : report.witnesses)
    {
        try
        {
            const io::Json reparsed = io::parse_json(io::to_json(w).dump());
            const Witness round_trip = io::witness_from_json(report.claim, reparsed);
            if (!(round_trip == w))
                return false;
            const Evaluation e = evaluate_instance(report.claim, round_trip.bindings);
            if (!e.hypothesis || e.conclusion)
                return false;
        }
        catch (const Error&)
        {
            return false;
        }
    }
    return true;
}

} // namespace finitop
