#pragma once

#include "finitop/point_set.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace finitop
{

/// A finite topological space on the points {0, ..., n-1}.
///
/// Construction validates the topology axioms. The open family is kept
/// deduplicated and sorted by CanonicalLess, so two spaces are equal exactly
/// when their canonical open lists are equal. Alongside the opens the space
/// keeps each point's minimal open neighbourhood, which turns interior and
/// closure into O(n) bit operations.
class FiniteSpace
{
public:
    /// The empty space: n = 0, opens = {∅}.
    FiniteSpace();

    /// Validates and canonicalizes. Throws Error{NotATopology} naming one
    /// offending member or pair, or Error{BadParams} when n is out of range
    /// or a member does not fit in n points.
    FiniteSpace(int n, std::vector<PointSet> opens);

    /// Builds the space whose minimal neighbourhoods are `neighbourhoods`.
    /// Requires x ∈ U_x and y ∈ U_x ⇒ U_y ⊆ U_x (throws NotATopology otherwise).
    static FiniteSpace from_neighbourhoods(std::span<const PointSet> neighbourhoods);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] PointSet full() const noexcept { return PointSet::full(n_); }
    [[nodiscard]] const std::vector<PointSet>& opens() const noexcept { return opens_; }
    [[nodiscard]] std::vector<PointSet> closeds() const;

    /// Smallest open set containing point `p`.
    [[nodiscard]] PointSet neighbourhood(int p) const { return neighbourhoods_[static_cast<std::size_t>(p)]; }
    [[nodiscard]] const std::vector<PointSet>& neighbourhoods() const noexcept { return neighbourhoods_; }

    [[nodiscard]] bool fits(PointSet a) const noexcept { return a.fits(n_); }

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) noexcept
    {
        return a.n_ == b.n_ && a.opens_ == b.opens_;
    }

    /// Order by point count, then lexicographically over the canonical open
    /// lists (elements compared with CanonicalLess).
    friend std::strong_ordering operator<=>(const FiniteSpace& a, const FiniteSpace& b) noexcept;

private:
    struct Trusted {};
    FiniteSpace(Trusted, int n, std::vector<PointSet> opens, std::vector<PointSet> neighbourhoods);

    int n_ = 0;
    std::vector<PointSet> opens_;
    std::vector<PointSet> neighbourhoods_;
};

/// Same as the validating constructor.
FiniteSpace new_space(int n, std::vector<PointSet> opens);

[[nodiscard]] PointSet complement(const FiniteSpace& s, PointSet a) noexcept;
[[nodiscard]] PointSet interior(const FiniteSpace& s, PointSet a) noexcept;
[[nodiscard]] PointSet closure(const FiniteSpace& s, PointSet a) noexcept;

/// Smallest open superset of `a`.
[[nodiscard]] PointSet open_hull(const FiniteSpace& s, PointSet a) noexcept;

[[nodiscard]] bool is_open(const FiniteSpace& s, PointSet a) noexcept;
[[nodiscard]] bool is_closed(const FiniteSpace& s, PointSet a) noexcept;
[[nodiscard]] bool is_clopen(const FiniteSpace& s, PointSet a) noexcept;

/// Relabels points: point i of `s` becomes point perm[i].
[[nodiscard]] FiniteSpace relabel(const FiniteSpace& s, std::span<const int> perm);

// Named generators.

FiniteSpace discrete(int n);
FiniteSpace indiscrete(int n);
FiniteSpace sierpinski();
/// ∅ together with every set containing `p`.
FiniteSpace particular_point(int n, int p);
/// X together with every set missing `p`.
FiniteSpace excluded_point(int n, int p);
/// Finite segment of the digital line: odd points are open, an even point p
/// has neighbourhood {p-1, p, p+1} clipped to the range.
FiniteSpace khalimsky_interval(int n);

/// Dispatches on a generator name; `params` are the positional integers.
/// Throws Error{BadParams} for unknown names, wrong parameter counts, or
/// out-of-range values.
FiniteSpace generate(const std::string& name, std::span<const int> params);

/// Names accepted by generate().
const std::vector<std::string>& generator_names();

} // namespace finitop
