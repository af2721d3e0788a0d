/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/index_set.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using namespace apg;

using std::optional;
using std::set;
using std::string;
using std::vector;

namespace
{
    auto raw_contains(const set<Index> & base, const vector<Progression> & progressions, Index n) -> bool
    {
        if (base.contains(n))
            return true;
        return std::any_of(progressions.begin(), progressions.end(), [&] (const Progression & p) {
                return n >= p.start && 0 == (n - p.start) % p.period;
                });
    }

    /// From here on, membership is periodic with every period involved.
    auto horizon(const set<Index> & base, const vector<Progression> & progressions) -> Index
    {
        Index t = base.empty() ? 0 : *base.rbegin() + 1;
        for (auto & p : progressions)
            t = std::max(t, p.start);
        return t;
    }

    auto period_lcm(const vector<Progression> & progressions, Index l = 1) -> Index
    {
        for (auto & p : progressions)
            l = std::lcm(l, p.period);
        return l;
    }
}

IndexSet::IndexSet(set<Index> base, vector<Progression> progressions)
{
    for (auto & p : progressions)
        if (0 == p.period)
            throw std::invalid_argument{ "progression period must be positive" };

    if (progressions.empty()) {
        _base = std::move(base);
        return;
    }

    // S is L-periodic from T. The least eventual period divides L.
    auto t0 = horizon(base, progressions);
    auto l = period_lcm(progressions);
    vector<bool> bits(t0 + 2 * l);
    for (Index n = 0 ; n < bits.size() ; ++n)
        bits[n] = raw_contains(base, progressions, n);

    Index period = l;
    for (Index d = 1 ; d < l ; ++d) {
        if (0 != l % d)
            continue;
        bool periodic = true;
        for (Index n = t0 ; n < t0 + l && periodic ; ++n)
            periodic = bits[n] == bits[n + d];
        if (periodic) {
            period = d;
            break;
        }
    }

    Index threshold = 0;
    for (Index n = t0 ; n > 0 ; --n)
        if (bits[n - 1] != bits[n - 1 + period]) {
            threshold = n;
            break;
        }

    for (Index n = 0 ; n < threshold ; ++n)
        if (bits[n])
            _base.insert(n);
    for (Index n = threshold ; n < threshold + period ; ++n)
        if (bits[n])
            _progressions.push_back(Progression{ n, period });
}

auto IndexSet::naturals() -> IndexSet
{
    return IndexSet{ {}, { Progression{ 0, 1 } } };
}

auto IndexSet::contains(Index n) const -> bool
{
    return raw_contains(_base, _progressions, n);
}

auto IndexSet::max() const -> optional<Index>
{
    if (! finite() || _base.empty())
        return std::nullopt;
    return *_base.rbegin();
}

auto IndexSet::members_up_to(Index n) const -> vector<Index>
{
    vector<Index> result;
    for (Index i = 0 ; i <= n ; ++i)
        if (contains(i))
            result.push_back(i);
    return result;
}

auto IndexSet::to_string() const -> string
{
    if (empty())
        return "{}";

    string result;
    if (! _base.empty()) {
        result = "{";
        bool first = true;
        for (auto b : _base) {
            if (! first)
                result += ",";
            result += std::to_string(b);
            first = false;
        }
        result += "}";
    }
    for (auto & p : _progressions) {
        if (! result.empty())
            result += " | ";
        result += std::to_string(p.start) + "+" + std::to_string(p.period) + "k";
    }
    return result;
}

auto apg::shift_down(const IndexSet & s) -> IndexSet
{
    set<Index> base;
    vector<Progression> progressions;
    for (auto b : s.base())
        base.insert(b == 0 ? 0 : b - 1);
    for (auto & p : s.progressions()) {
        if (p.start >= 1)
            progressions.push_back(Progression{ p.start - 1, p.period });
        else {
            // 0 goes to 0, the rest of the progression moves down by one
            base.insert(0);
            progressions.push_back(Progression{ p.period - 1, p.period });
        }
    }
    return IndexSet{ std::move(base), std::move(progressions) };
}

auto apg::set_union(const IndexSet & s, const IndexSet & t) -> IndexSet
{
    auto base = s.base();
    base.insert(t.base().begin(), t.base().end());
    auto progressions = s.progressions();
    progressions.insert(progressions.end(), t.progressions().begin(), t.progressions().end());
    return IndexSet{ std::move(base), std::move(progressions) };
}

auto apg::index_eq(const IndexSet & s, const IndexSet & t) -> bool
{
    auto t0 = std::max(horizon(s.base(), s.progressions()), horizon(t.base(), t.progressions()));
    auto l = period_lcm(t.progressions(), period_lcm(s.progressions()));
    for (Index n = 0 ; n < t0 + l ; ++n)
        if (s.contains(n) != t.contains(n))
            return false;
    return true;
}
