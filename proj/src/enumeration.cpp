#include "finitop/enumeration.hpp"

#include "finitop/error.hpp"

#include <algorithm>
#include <numeric>

namespace finitop
{

namespace
{

void check_enumeration_scope(int n)
{
    if (n < 0)
        throw Error(ErrorKind::BadParams, "negative point count");
    if (n > kMaxEnumerationPoints)
        throw Error(ErrorKind::ScopeTooLarge, "exhaustive enumeration is capped at "
                                                  + std::to_string(kMaxEnumerationPoints) + " points, got "
                                                  + std::to_string(n));
}

// Candidate neighbourhoods of point x: every subset containing x, in numeric order.
std::vector<PointSet> candidates_for(int n, int x)
{
    std::vector<PointSet> out;
    const PointSet::word_type count = PointSet::word_type{1} << n;
    for (PointSet::word_type bits = 0; bits < count; ++bits)
        if (PointSet(bits).contains(x))
            out.emplace_back(bits);
    return out;
}

class PreorderSearch
{
public:
    PreorderSearch(int n, int shard, int shard_count)
        : n_(n), shard_(shard), shard_count_(shard_count), chosen_(static_cast<std::size_t>(n))
    {
        for (int x = 0; x < n; ++x)
            candidates_.push_back(candidates_for(n, x));
    }

    std::vector<FiniteSpace> run()
    {
        if (n_ == 0)
        {
            if (shard_ == 0)
                out_.emplace_back();
            return std::move(out_);
        }
        extend(0);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    // Nesting between x and every already-chosen point, in both directions.
    bool consistent(int x, PointSet ux) const noexcept
    {
        for (int y = 0; y < x; ++y)
        {
            const PointSet uy = chosen_[static_cast<std::size_t>(y)];
            if (ux.contains(y) && !uy.subset_of(ux))
                return false;
            if (uy.contains(x) && !ux.subset_of(uy))
                return false;
        }
        return true;
    }

    void extend(int x)
    {
        if (x == n_)
        {
            out_.push_back(FiniteSpace::from_neighbourhoods(chosen_));
            return;
        }
        const auto& options = candidates_[static_cast<std::size_t>(x)];
        for (std::size_t i = 0; i < options.size(); ++i)
        {
            if (x == 0 && static_cast<int>(i % static_cast<std::size_t>(shard_count_)) != shard_)
                continue;
            if (!consistent(x, options[i]))
                continue;
            chosen_[static_cast<std::size_t>(x)] = options[i];
            extend(x + 1);
        }
    }

    int n_;
    int shard_;
    int shard_count_;
    std::vector<std::vector<PointSet>> candidates_;
    std::vector<PointSet> chosen_;
    std::vector<FiniteSpace> out_;
};

} // namespace

std::vector<FiniteSpace> enumerate_topologies(int n)
{
    return enumerate_topologies_shard(n, 0, 1);
}

std::vector<FiniteSpace> enumerate_topologies_shard(int n, int shard, int shard_count)
{
    check_enumeration_scope(n);
    if (shard_count < 1 || shard < 0 || shard >= shard_count)
        throw Error(ErrorKind::BadParams, "shard index out of range");
    return PreorderSearch(n, shard, shard_count).run();
}

FiniteSpace canonical_form(const FiniteSpace& s)
{
    if (s.n() > kMaxCanonicalPoints)
        throw Error(ErrorKind::ScopeTooLarge, "canonical form is capped at "
                                                  + std::to_string(kMaxCanonicalPoints) + " points");
    std::vector<int> perm(static_cast<std::size_t>(s.n()));
    std::iota(perm.begin(), perm.end(), 0);
    FiniteSpace best = s;
    do
    {
        FiniteSpace candidate = relabel(s, perm);
        if (candidate < best)
            best = std::move(candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<FiniteSpace> enumerate_topologies_up_to_homeo(int n)
{
    std::vector<FiniteSpace> out;
    for (const FiniteSpace& s : enumerate_topologies(n))
        out.push_back(canonical_form(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t assignment_count(int domain_n, int codomain_n) noexcept
{
    std::uint64_t count = 1;
    for (int i = 0; i < domain_n; ++i)
        count *= static_cast<std::uint64_t>(codomain_n);
    return count;
}

void decode_assignment(std::uint64_t index, int codomain_n, std::span<int> out) noexcept
{
    for (std::size_t i = out.size(); i-- > 0;)
    {
        out[i] = static_cast<int>(index % static_cast<std::uint64_t>(codomain_n));
        index /= static_cast<std::uint64_t>(codomain_n);
    }
}

std::uint64_t encode_assignment(std::span<const int> assignment, int codomain_n) noexcept
{
    std::uint64_t index = 0;
    for (int v : assignment)
        index = index * static_cast<std::uint64_t>(codomain_n) + static_cast<std::uint64_t>(v);
    return index;
}

void for_each_assignment(int domain_n, int codomain_n,
                         const std::function<bool(std::span<const int>)>& visit)
{
    const std::uint64_t count = assignment_count(domain_n, codomain_n);
    std::vector<int> a(static_cast<std::size_t>(domain_n));
    for (std::uint64_t index = 0; index < count; ++index)
    {
        decode_assignment(index, codomain_n, a);
        if (!visit(a))
            return;
    }
}

std::vector<SpaceMap> enumerate_maps(const FiniteSpace& s, const FiniteSpace& t, MapFilter filter)
{
    check_enumeration_scope(s.n());
    check_enumeration_scope(t.n());
    std::vector<SpaceMap> out;
    for_each_assignment(s.n(), t.n(), [&](std::span<const int> a) {
        const PointSet hit = image(a, s.full());
        const bool surjective = hit == t.full();
        const bool keep = filter == MapFilter::All
                          || (filter == MapFilter::SurjectiveOnly && surjective)
                          || (filter == MapFilter::BijectiveOnly && surjective && hit.size() == s.n());
        if (keep)
            out.emplace_back(s, t, std::vector<int>(a.begin(), a.end()));
        return true;
    });
    return out;
}

} // namespace finitop
