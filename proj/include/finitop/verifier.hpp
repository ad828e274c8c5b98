#pragma once

#include "finitop/maps.hpp"
#include "finitop/space.hpp"

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace finitop
{

/// Directed claims about T_{α^m}-spaces and α^m map classes. Equivalences
/// are split so that a refutation names the failing direction.
enum class ClaimId : std::uint8_t
{
    T3_2_ab,
    T3_2_ba,
    P3_3,
    T3_4a,
    T3_4b,
    T3_5_fwd,
    T3_5_bwd,
    P3_6,
    T3_8a,
    T3_8b,
    T3_9a,
    T3_9b,
    T3_10,
    P3_11,
    P3_12_ab,
    P3_12_bc,
    P3_12_ca,
};

inline constexpr std::size_t kClaimCount = 17;
extern const std::array<ClaimId, kClaimCount> kAllClaims;

/// Shape of the objects a claim quantifies over.
enum class Arity : std::uint8_t
{
    Space,  ///< one space S
    Map,    ///< spaces X, Y and f : X -> Y
    Chain,  ///< spaces X, Y, Z and f : X -> Y, g : Y -> Z
};

struct ClaimInfo
{
    ClaimId id;
    std::string_view name;
    Arity arity;
    bool bijections_only;
    std::string_view statement;
};

const ClaimInfo& info(ClaimId id) noexcept;
std::string_view name_of(ClaimId id) noexcept;
std::optional<ClaimId> parse_claim(std::string_view name) noexcept;

/// Objects bound to a claim's variables, in the order X, Y, Z / f, g.
struct Bindings
{
    std::vector<FiniteSpace> spaces;
    std::vector<SpaceMap> maps;

    friend bool operator==(const Bindings&, const Bindings&) = default;
};

struct Evaluation
{
    bool hypothesis = false;
    bool conclusion = false;

    [[nodiscard]] bool holds() const noexcept { return !hypothesis || conclusion; }
    friend bool operator==(Evaluation, Evaluation) noexcept = default;
};

/// Evaluates hypotheses and conclusion from the definitions, with no
/// precomputed tables. Throws Error{ArityMismatch} if the bindings do not
/// have the claim's shape (counts, or maps not connecting the spaces in order).
Evaluation evaluate_instance(ClaimId claim, const Bindings& bindings);

/// Material implication: hypotheses false or conclusion true.
bool check_instance(ClaimId claim, const Bindings& bindings);

/// Bounds of a sweep.
struct Scope
{
    int min_points = 1;
    int max_points = 3;
    /// Bindings per ordered space pair, after the claim's map filter.
    std::optional<std::uint64_t> max_maps_per_pair;
    /// 0 keeps every witness.
    std::size_t witness_limit = 5;
    /// Map-quantified claims above 3 points are refused unless this is set.
    bool allow_large_map_scope = false;

    friend bool operator==(const Scope&, const Scope&) = default;
};

inline constexpr int kDefaultMapScope = 3;
inline constexpr int kDefaultSpaceScope = 4;

/// n ≤ 4 for space-only claims, n ≤ 3 for map claims.
Scope default_scope(ClaimId claim) noexcept;

/// Throws Error{ScopeTooLarge} / Error{BadParams} when the scope is out of bounds for `claim`.
void check_scope(ClaimId claim, const Scope& scope);

struct SweepOptions
{
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned jobs = 1;
};

struct Witness
{
    Bindings bindings;
    Evaluation evaluation;

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Outcome : std::uint8_t
{
    HoldsOnScope,
    Refuted,
};

std::string_view name_of(Outcome o) noexcept;

struct TheoremReport
{
    ClaimId claim = ClaimId::T3_2_ab;
    Scope scope;
    std::uint64_t instances = 0;
    Outcome outcome = Outcome::HoldsOnScope;
    std::vector<Witness> witnesses;
    std::chrono::duration<double> wall_time{0};
};

/// Sweeps every binding in scope in a fixed order and reports the first
/// `witness_limit` failures in that order. Every witness is re-evaluated
/// through evaluate_instance before it is returned; a disagreement throws
/// Error{InvariantBreach}. The result does not depend on `options.jobs`.
TheoremReport verify(ClaimId claim, const Scope& scope, SweepOptions options = {});

/// verify() for each claim in `claims` (all claims when empty), same scope.
std::vector<TheoremReport> verify_all(const Scope& scope, std::span<const ClaimId> claims = {},
                                      SweepOptions options = {});

/// True iff every witness, after a serialize/parse round trip through the
/// text formats, still has true hypotheses and a false conclusion.
bool validate_witness(const TheoremReport& report);

} // namespace finitop
