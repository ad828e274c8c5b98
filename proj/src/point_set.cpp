#include "finitop/point_set.hpp"

#include <algorithm>

namespace finitop
{

std::vector<int> PointSet::points() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (word_type rest = bits_; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

std::string PointSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (int p : points())
    {
        if (!first)
            out += ",";
        out += std::to_string(p);
        first = false;
    }
    return out + "}";
}

std::vector<PointSet> all_subsets(int n)
{
    std::vector<PointSet> out;
    const PointSet::word_type count = PointSet::word_type{1} << n;
    out.reserve(count);
    for (PointSet::word_type bits = 0; bits < count; ++bits)
        out.emplace_back(bits);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

} // namespace finitop
