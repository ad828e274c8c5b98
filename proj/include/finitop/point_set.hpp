#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace finitop
{

/// Largest ground set a PointSet can describe.
inline constexpr int kMaxPoints = 16;

/// A subset of the ground points {0, ..., n-1} stored as a bitmask.
///
/// A PointSet does not know its ground set; callers pass `n` wherever the
/// complement or a fit check is needed.
class PointSet
{
public:
    using word_type = std::uint32_t;

    constexpr PointSet() noexcept = default;
    constexpr explicit PointSet(word_type bits) noexcept : bits_(bits) {}

    PointSet(std::initializer_list<int> points)
    {
        for (int p : points)
            bits_ |= word_type{1} << p;
    }

    static constexpr PointSet empty() noexcept { return PointSet{}; }

    static constexpr PointSet full(int n) noexcept
    {
        return PointSet(n >= 32 ? ~word_type{0} : (word_type{1} << n) - 1);
    }

    static constexpr PointSet singleton(int p) noexcept { return PointSet(word_type{1} << p); }

    [[nodiscard]] constexpr word_type bits() const noexcept { return bits_; }
    [[nodiscard]] constexpr bool is_empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool contains(int p) const noexcept { return (bits_ >> p) & 1u; }

    [[nodiscard]] constexpr bool fits(int n) const noexcept
    {
        return (bits_ & ~full(n).bits_) == 0;
    }

    [[nodiscard]] constexpr bool subset_of(PointSet other) const noexcept
    {
        return (bits_ & ~other.bits_) == 0;
    }

    [[nodiscard]] constexpr bool intersects(PointSet other) const noexcept
    {
        return (bits_ & other.bits_) != 0;
    }

    [[nodiscard]] constexpr PointSet complement(int n) const noexcept
    {
        return PointSet(~bits_ & full(n).bits_);
    }

    [[nodiscard]] constexpr PointSet with(int p) const noexcept
    {
        return PointSet(bits_ | (word_type{1} << p));
    }

    [[nodiscard]] constexpr PointSet without(int p) const noexcept
    {
        return PointSet(bits_ & ~(word_type{1} << p));
    }

    /// Points in increasing order.
    [[nodiscard]] std::vector<int> points() const;

    [[nodiscard]] std::string to_string() const;

    friend constexpr PointSet operator|(PointSet a, PointSet b) noexcept
    {
        return PointSet(a.bits_ | b.bits_);
    }
    friend constexpr PointSet operator&(PointSet a, PointSet b) noexcept
    {
        return PointSet(a.bits_ & b.bits_);
    }
    friend constexpr PointSet operator-(PointSet a, PointSet b) noexcept
    {
        return PointSet(a.bits_ & ~b.bits_);
    }
    constexpr PointSet& operator|=(PointSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr PointSet& operator&=(PointSet o) noexcept { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(PointSet, PointSet) noexcept = default;

private:
    word_type bits_ = 0;
};

/// Canonical order on subsets: by cardinality, then by numeric mask.
struct CanonicalLess
{
    constexpr bool operator()(PointSet a, PointSet b) const noexcept
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.bits() < b.bits();
    }
};

constexpr std::strong_ordering canonical_compare(PointSet a, PointSet b) noexcept
{
    if (auto c = a.size() <=> b.size(); c != 0)
        return c;
    return a.bits() <=> b.bits();
}

/// Every subset of {0..n-1}, in canonical order.
std::vector<PointSet> all_subsets(int n);

} // namespace finitop
