#pragma once

#include "finitop/maps.hpp"
#include "finitop/space.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace finitop
{

/// Largest point count the exhaustive generators accept.
inline constexpr int kMaxEnumerationPoints = 5;

/// Largest point count canonical_form accepts (it tries all n! relabelings).
inline constexpr int kMaxCanonicalPoints = 8;

/// Every topology on {0..n-1}, each exactly once, sorted by the canonical
/// space order. Throws Error{ScopeTooLarge} for n > 5.
///
/// Topologies are generated as their minimal-neighbourhood systems: a choice
/// of U_x ∋ x for every point with y ∈ U_x ⇒ U_y ⊆ U_x (a preorder). The
/// search tree branches on U_0 first, which is what sharding splits on.
std::vector<FiniteSpace> enumerate_topologies(int n);

/// Topologies whose U_0 choice index is ≡ shard (mod shard_count). The union
/// over all shards equals enumerate_topologies(n); each shard is sorted.
std::vector<FiniteSpace> enumerate_topologies_shard(int n, int shard, int shard_count);

/// Least relabeling of `s` under the canonical space order. Two spaces are
/// homeomorphic iff their canonical forms are equal. Throws
/// Error{ScopeTooLarge} above kMaxCanonicalPoints.
FiniteSpace canonical_form(const FiniteSpace& s);

/// One canonical representative per homeomorphism class, sorted.
std::vector<FiniteSpace> enumerate_topologies_up_to_homeo(int n);

enum class MapFilter
{
    All,
    SurjectiveOnly,
    BijectiveOnly,
};

/// Number of assignments domain_n -> codomain_n (codomain_n^domain_n).
std::uint64_t assignment_count(int domain_n, int codomain_n) noexcept;

/// Assignment with the given index; entry 0 is the most significant digit,
/// so increasing index is lexicographic order of assignments.
void decode_assignment(std::uint64_t index, int codomain_n, std::span<int> out) noexcept;
std::uint64_t encode_assignment(std::span<const int> assignment, int codomain_n) noexcept;

/// Visits every assignment {0..domain_n-1} -> {0..codomain_n-1} in
/// lexicographic order. Stops early if `visit` returns false.
void for_each_assignment(int domain_n, int codomain_n,
                         const std::function<bool(std::span<const int>)>& visit);

/// All maps S -> T in lexicographic assignment order, optionally filtered.
/// Throws Error{ScopeTooLarge} if either space has more than 5 points.
std::vector<SpaceMap> enumerate_maps(const FiniteSpace& s, const FiniteSpace& t,
                                     MapFilter filter = MapFilter::All);

} // namespace finitop
