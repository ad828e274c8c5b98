#include "finitop/space.hpp"

#include "finitop/error.hpp"

#include <algorithm>

namespace finitop
{

namespace
{

void check_point_count(int n)
{
    if (n < 0 || n > kMaxPoints)
        throw Error(ErrorKind::BadParams,
                    "point count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxPoints));
}

std::vector<PointSet> neighbourhoods_of(int n, const std::vector<PointSet>& opens)
{
    std::vector<PointSet> out(static_cast<std::size_t>(n), PointSet::full(n));
    for (PointSet u : opens)
        for (int p : u.points())
            out[static_cast<std::size_t>(p)] &= u;
    return out;
}

void canonicalize(std::vector<PointSet>& opens)
{
    std::sort(opens.begin(), opens.end(), CanonicalLess{});
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
}

} // namespace

FiniteSpace::FiniteSpace() : opens_{PointSet::empty()} {}

FiniteSpace::FiniteSpace(Trusted, int n, std::vector<PointSet> opens, std::vector<PointSet> neighbourhoods)
    : n_(n), opens_(std::move(opens)), neighbourhoods_(std::move(neighbourhoods))
{
}

FiniteSpace::FiniteSpace(int n, std::vector<PointSet> opens) : n_(n), opens_(std::move(opens))
{
    check_point_count(n);
    for (PointSet u : opens_)
        if (!u.fits(n))
            throw Error(ErrorKind::BadParams, "open set " + u.to_string() + " does not fit in "
                                                  + std::to_string(n) + " points");
    canonicalize(opens_);

    std::vector<bool> present(std::size_t{1} << n, false);
    for (PointSet u : opens_)
        present[u.bits()] = true;

    if (!present[0])
        throw Error(ErrorKind::NotATopology, "empty set is not open");
    if (!present[full().bits()])
        throw Error(ErrorKind::NotATopology, "full set " + full().to_string() + " is not open");

    for (std::size_t i = 0; i < opens_.size(); ++i)
        for (std::size_t j = i + 1; j < opens_.size(); ++j)
        {
            const PointSet a = opens_[i];
            const PointSet b = opens_[j];
            if (!present[(a | b).bits()])
                throw Error(ErrorKind::NotATopology, "union of " + a.to_string() + " and "
                                                         + b.to_string() + " is not open");
            if (!present[(a & b).bits()])
                throw Error(ErrorKind::NotATopology, "intersection of " + a.to_string() + " and "
                                                         + b.to_string() + " is not open");
        }

    neighbourhoods_ = neighbourhoods_of(n_, opens_);
}

FiniteSpace FiniteSpace::from_neighbourhoods(std::span<const PointSet> neighbourhoods)
{
    const int n = static_cast<int>(neighbourhoods.size());
    check_point_count(n);
    for (int x = 0; x < n; ++x)
    {
        const PointSet ux = neighbourhoods[static_cast<std::size_t>(x)];
        if (!ux.fits(n) || !ux.contains(x))
            throw Error(ErrorKind::NotATopology,
                        "neighbourhood " + ux.to_string() + " of point " + std::to_string(x) + " is invalid");
        for (int y : ux.points())
            if (!neighbourhoods[static_cast<std::size_t>(y)].subset_of(ux))
                throw Error(ErrorKind::NotATopology, "neighbourhoods of " + std::to_string(x) + " and "
                                                         + std::to_string(y) + " are not nested");
    }

    std::vector<PointSet> opens;
    const PointSet::word_type count = PointSet::word_type{1} << n;
    for (PointSet::word_type bits = 0; bits < count; ++bits)
    {
        const PointSet a(bits);
        bool open = true;
        for (int x : a.points())
            if (!neighbourhoods[static_cast<std::size_t>(x)].subset_of(a))
            {
                open = false;
                break;
            }
        if (open)
            opens.push_back(a);
    }
    std::sort(opens.begin(), opens.end(), CanonicalLess{});
    return FiniteSpace(Trusted{}, n, std::move(opens),
                       std::vector<PointSet>(neighbourhoods.begin(), neighbourhoods.end()));
}

std::vector<PointSet> FiniteSpace::closeds() const
{
    std::vector<PointSet> out;
    out.reserve(opens_.size());
    for (PointSet u : opens_)
        out.push_back(u.complement(n_));
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

std::strong_ordering operator<=>(const FiniteSpace& a, const FiniteSpace& b) noexcept
{
    if (auto c = a.n_ <=> b.n_; c != 0)
        return c;
    const std::size_t common = std::min(a.opens_.size(), b.opens_.size());
    for (std::size_t i = 0; i < common; ++i)
        if (auto c = canonical_compare(a.opens_[i], b.opens_[i]); c != 0)
            return c;
    return a.opens_.size() <=> b.opens_.size();
}

FiniteSpace new_space(int n, std::vector<PointSet> opens)
{
    return FiniteSpace(n, std::move(opens));
}

PointSet complement(const FiniteSpace& s, PointSet a) noexcept
{
    return a.complement(s.n());
}

PointSet interior(const FiniteSpace& s, PointSet a) noexcept
{
    PointSet out;
    for (int x = 0; x < s.n(); ++x)
        if (s.neighbourhood(x).subset_of(a))
            out = out.with(x);
    return out;
}

PointSet closure(const FiniteSpace& s, PointSet a) noexcept
{
    PointSet out;
    for (int x = 0; x < s.n(); ++x)
        if (s.neighbourhood(x).intersects(a))
            out = out.with(x);
    return out;
}

PointSet open_hull(const FiniteSpace& s, PointSet a) noexcept
{
    PointSet out;
    for (int x : a.points())
        out |= s.neighbourhood(x);
    return out;
}

bool is_open(const FiniteSpace& s, PointSet a) noexcept
{
    return interior(s, a) == a;
}

bool is_closed(const FiniteSpace& s, PointSet a) noexcept
{
    return closure(s, a) == a;
}

bool is_clopen(const FiniteSpace& s, PointSet a) noexcept
{
    return is_open(s, a) && is_closed(s, a);
}

FiniteSpace relabel(const FiniteSpace& s, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != s.n())
        throw Error(ErrorKind::BadParams, "permutation length differs from point count");
    std::vector<PointSet> moved(static_cast<std::size_t>(s.n()));
    for (int x = 0; x < s.n(); ++x)
    {
        PointSet image;
        for (int y : s.neighbourhood(x).points())
            image = image.with(perm[static_cast<std::size_t>(y)]);
        moved[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = image;
    }
    return FiniteSpace::from_neighbourhoods(moved);
}

FiniteSpace discrete(int n)
{
    check_point_count(n);
    std::vector<PointSet> u;
    for (int x = 0; x < n; ++x)
        u.push_back(PointSet::singleton(x));
    return FiniteSpace::from_neighbourhoods(u);
}

FiniteSpace indiscrete(int n)
{
    check_point_count(n);
    return FiniteSpace::from_neighbourhoods(std::vector<PointSet>(static_cast<std::size_t>(n), PointSet::full(n)));
}

FiniteSpace sierpinski()
{
    return FiniteSpace(2, {PointSet{}, PointSet{0}, PointSet{0, 1}});
}

namespace
{

void check_distinguished_point(int n, int p)
{
    check_point_count(n);
    if (p < 0 || p >= n)
        throw Error(ErrorKind::BadParams,
                    "point " + std::to_string(p) + " outside 0.." + std::to_string(n - 1));
}

} // namespace

FiniteSpace particular_point(int n, int p)
{
    check_distinguished_point(n, p);
    std::vector<PointSet> u;
    for (int x = 0; x < n; ++x)
        u.push_back(x == p ? PointSet::singleton(x) : PointSet::singleton(x).with(p));
    return FiniteSpace::from_neighbourhoods(u);
}

FiniteSpace excluded_point(int n, int p)
{
    check_distinguished_point(n, p);
    std::vector<PointSet> u;
    for (int x = 0; x < n; ++x)
        u.push_back(x == p ? PointSet::full(n) : PointSet::singleton(x));
    return FiniteSpace::from_neighbourhoods(u);
}

FiniteSpace khalimsky_interval(int n)
{
    check_point_count(n);
    std::vector<PointSet> u;
    const PointSet range = PointSet::full(n);
    for (int p = 0; p < n; ++p)
    {
        if (p % 2 == 1)
            u.push_back(PointSet::singleton(p));
        else
        {
            PointSet nb = PointSet::singleton(p);
            if (p > 0)
                nb = nb.with(p - 1);
            if (p + 1 < n)
                nb = nb.with(p + 1);
            u.push_back(nb & range);
        }
    }
    return FiniteSpace::from_neighbourhoods(u);
}

const std::vector<std::string>& generator_names()
{
    static const std::vector<std::string> names = {
        "discrete", "indiscrete", "sierpinski", "particular_point", "excluded_point", "khalimsky_interval",
    };
    return names;
}

FiniteSpace generate(const std::string& name, std::span<const int> params)
{
    auto expect = [&](std::size_t count) {
        if (params.size() != count)
            throw Error(ErrorKind::BadParams, name + " takes " + std::to_string(count) + " parameter(s), got "
                                                  + std::to_string(params.size()));
    };
    if (name == "discrete")
    {
        expect(1);
        return discrete(params[0]);
    }
    if (name == "indiscrete")
    {
        expect(1);
        return indiscrete(params[0]);
    }
    if (name == "sierpinski")
    {
        expect(0);
        return sierpinski();
    }
    if (name == "particular_point")
    {
        expect(2);
        return particular_point(params[0], params[1]);
    }
    if (name == "excluded_point")
    {
        expect(2);
        return excluded_point(params[0], params[1]);
    }
    if (name == "khalimsky_interval")
    {
        expect(1);
        return khalimsky_interval(params[0]);
    }
    throw Error(ErrorKind::BadParams, "unknown generator '" + name + "'");
}

} // namespace finitop
