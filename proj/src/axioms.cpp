#include "finitop/axioms.hpp"

#include "finitop/set_classes.hpp"

namespace finitop
{

namespace
{

// Two points x != y that no open set separates in the required direction.
// `symmetric` asks for an open containing one but not the other (T0);
// otherwise each must have an open avoiding the other (T1).
std::optional<PointSet> inseparable_pair(const FiniteSpace& s, bool symmetric) noexcept
{
    auto separates = [&](int x, int y) {
        for (PointSet u : s.opens())
            if (u.contains(x) && !u.contains(y))
                return true;
        return false;
    };
    for (int x = 0; x < s.n(); ++x)
        for (int y = x + 1; y < s.n(); ++y)
        {
            const bool xy = separates(x, y);
            const bool yx = separates(y, x);
            const bool ok = symmetric ? (xy || yx) : (xy && yx);
            if (!ok)
                return PointSet{x, y};
        }
    return std::nullopt;
}

template <typename Pred>
std::optional<PointSet> first_nonclosed(const FiniteSpace& s, Pred pred)
{
    for (PointSet a : all_subsets(s.n()))
        if (pred(a) && !is_closed(s, a))
            return a;
    return std::nullopt;
}

std::optional<PointSet> dichotomy_failure(const FiniteSpace& s) noexcept
{
    for (int x = 0; x < s.n(); ++x)
    {
        const PointSet single = PointSet::singleton(x);
        if (!is_alpha_closed(s, single) && !is_clopen(s, single))
            return single;
    }
    return std::nullopt;
}

} // namespace

std::string_view name_of(Axiom a) noexcept
{
    switch (a)
    {
    case Axiom::T0: return "T0";
    case Axiom::T1: return "T1";
    case Axiom::THalf: return "T_half";
    case Axiom::TAlphaM: return "T_alpha_m";
    case Axiom::SingletonDichotomy: return "singleton_dichotomy";
    }
    return "?";
}

bool is_T0(const FiniteSpace& s) noexcept
{
    return !inseparable_pair(s, true).has_value();
}

bool is_T1(const FiniteSpace& s) noexcept
{
    return !inseparable_pair(s, false).has_value();
}

bool is_T_half(const FiniteSpace& s) noexcept
{
    for (PointSet a : all_subsets(s.n()))
        if (is_g_closed(s, a) && !is_closed(s, a))
            return false;
    return true;
}

bool is_T_alpha_m(const FiniteSpace& s)
{
    for (PointSet a : all_subsets(s.n()))
        if (!is_closed(s, a) && is_alpha_m_closed(s, a))
            return false;
    return true;
}

bool singleton_dichotomy(const FiniteSpace& s) noexcept
{
    return !dichotomy_failure(s).has_value();
}

bool is_T_alpha_m(const SpaceProfile& p) noexcept
{
    return p.family(SetClass::AlphaMClosed) == p.family(SetClass::Closed);
}

bool singleton_dichotomy(const SpaceProfile& p) noexcept
{
    for (int x = 0; x < p.n(); ++x)
    {
        const PointSet single = PointSet::singleton(x);
        if (!p.has(single, SetClass::AlphaClosed) && !p.has(single, SetClass::Clopen))
            return false;
    }
    return true;
}

AxiomReport axiom_report(const FiniteSpace& s)
{
    AxiomReport report;
    auto record = [&](Axiom a, std::optional<PointSet> failure) {
        report.holds[static_cast<std::size_t>(a)] = !failure.has_value();
        report.witness[static_cast<std::size_t>(a)] = failure;
    };
    record(Axiom::T0, inseparable_pair(s, true));
    record(Axiom::T1, inseparable_pair(s, false));
    record(Axiom::THalf, first_nonclosed(s, [&](PointSet a) { return is_g_closed(s, a); }));
    record(Axiom::TAlphaM, first_nonclosed(s, [&](PointSet a) { return is_alpha_m_closed(s, a); }));
    record(Axiom::SingletonDichotomy, dichotomy_failure(s));
    return report;
}

} // namespace finitop
