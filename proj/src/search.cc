/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/relations.hh>

#include <boost/dynamic_bitset.hpp>

using namespace apg;

using boost::dynamic_bitset;

using std::optional;
using std::size_t;
using std::vector;

namespace
{
    using Domains = vector<dynamic_bitset<>>;

    auto children_bits(const Apg & h) -> vector<dynamic_bitset<>>
    {
        vector<dynamic_bitset<>> result(h.size(), dynamic_bitset<>(h.size()));
        for (size_t x = 0 ; x < h.size() ; ++x)
            for (auto y : h.children(x))
                result[x].set(y);
        return result;
    }

    auto parents_bits(const Apg & h) -> vector<dynamic_bitset<>>
    {
        vector<dynamic_bitset<>> result(h.size(), dynamic_bitset<>(h.size()));
        for (size_t x = 0 ; x < h.size() ; ++x)
            for (auto y : h.children(x))
                result[y].set(x);
        return result;
    }

    struct IsomorphismSearch
    {
        const Apg & g;
        const Apg & h;
        vector<size_t> g_order, h_order;
        vector<dynamic_bitset<>> h_children, h_parents;

        auto expand(size_t depth, Domains & domains) -> bool
        {
            if (depth == g_order.size())
                return true;

            auto a = g_order[depth];
            for (auto x : h_order) {
                if (! domains[a].test(x))
                    continue;
                if (g.has_edge(a, a) != h.has_edge(x, x))
                    continue;

                auto next = domains;
                next[a].reset();
                next[a].set(x);

                bool wiped_out = false;
                for (auto k = depth + 1 ; k < g_order.size() && ! wiped_out ; ++k) {
                    auto b = g_order[k];
                    auto & d = next[b];
                    d.reset(x);
                    if (g.has_edge(a, b))
                        d &= h_children[x];
                    else
                        d -= h_children[x];
                    if (g.has_edge(b, a))
                        d &= h_parents[x];
                    else
                        d -= h_parents[x];
                    wiped_out = d.none();
                }

                if (! wiped_out && expand(depth + 1, next)) {
                    domains = std::move(next);
                    return true;
                }
            }
            return false;
        }
    };

    struct DhomSearch
    {
        const Apg & g;
        const Apg & h;
        vector<size_t> g_order, h_order;
        vector<vector<size_t>> g_parents;
        vector<dynamic_bitset<>> h_children;

        // Arc consistency for f(c) ∈ C(f(a)) on every edge a -> c, and for
        // the covering condition C(f(a)) ⊆ f[C(a)].
        auto propagate(Domains & domains) const -> bool
        {
            auto m = h.size();
            dynamic_bitset<> covered(m), reach(m);
            bool changed = true;
            while (changed) {
                changed = false;

                for (size_t a = 0 ; a < g.size() ; ++a) {
                    covered.reset();
                    for (auto c : g.children(a))
                        covered |= domains[c];

                    auto & d = domains[a];
                    for (auto x = d.find_first() ; x != dynamic_bitset<>::npos ; x = d.find_next(x)) {
                        bool ok = h_children[x].is_subset_of(covered);
                        for (auto c : g.children(a)) {
                            if (! ok)
                                break;
                            ok = h_children[x].intersects(domains[c]);
                        }
                        if (! ok) {
                            d.reset(x);
                            changed = true;
                        }
                    }
                    if (d.none())
                        return false;
                }

                for (size_t c = 0 ; c < g.size() ; ++c)
                    for (auto a : g_parents[c]) {
                        reach.reset();
                        auto & da = domains[a];
                        for (auto x = da.find_first() ; x != dynamic_bitset<>::npos ; x = da.find_next(x))
                            reach |= h_children[x];
                        if (! domains[c].is_subset_of(reach)) {
                            domains[c] &= reach;
                            changed = true;
                            if (domains[c].none())
                                return false;
                        }
                    }
            }
            return true;
        }

        auto expand(Domains & domains) const -> bool
        {
            if (! propagate(domains))
                return false;

            auto branch = g_order.end();
            for (auto v = g_order.begin() ; v != g_order.end() ; ++v)
                if (domains[*v].count() > 1) {
                    branch = v;
                    break;
                }

            if (branch == g_order.end())
                return true;

            for (auto x : h_order) {
                if (! domains[*branch].test(x))
                    continue;
                auto next = domains;
                next[*branch].reset();
                next[*branch].set(x);
                if (expand(next)) {
                    domains = std::move(next);
                    return true;
                }
            }
            return false;
        }
    };

    auto extract(const Domains & domains) -> vector<size_t>
    {
        vector<size_t> result;
        for (auto & d : domains)
            result.push_back(d.find_first());
        return result;
    }
}

auto apg::find_isomorphism(const Apg & g, const Apg & h) -> optional<vector<size_t>>
{
    auto n = g.size();
    if (n != h.size() || g.edge_count() != h.edge_count())
        return std::nullopt;

    // isomorphisms preserve the counting partition of the disjoint union
    auto colours = scott_partition(g, h);
    vector<size_t> g_in(n, 0), h_in(n, 0);
    for (size_t v = 0 ; v < n ; ++v) {
        for (auto c : g.children(v))
            ++g_in[c];
        for (auto c : h.children(v))
            ++h_in[c];
    }

    Domains domains(n, dynamic_bitset<>(n));
    for (size_t a = 0 ; a < n ; ++a)
        for (size_t x = 0 ; x < n ; ++x)
            if (colours.same_block(a, n + x) && g_in[a] == h_in[x])
                domains[a].set(x);

    bool point_possible = domains[g.point()].test(h.point());
    domains[g.point()].reset();
    if (! point_possible)
        return std::nullopt;
    domains[g.point()].set(h.point());

    IsomorphismSearch search{ g, h, g.lexicographic_order(), h.lexicographic_order(), children_bits(h), parents_bits(h) };
    if (! search.expand(0, domains))
        return std::nullopt;
    return extract(domains);
}

auto apg::find_dhom(const Apg & g, const Apg & h) -> optional<vector<size_t>>
{
    auto n = g.size(), m = h.size();

    // d-homomorphisms are onto, because every node of h is reachable from
    // the image of the point
    if (n < m)
        return std::nullopt;

    auto bisim = max_bisim_partition(g, h);
    if (! bisim.same_block(g.point(), n + h.point()))
        return std::nullopt;

    Domains domains(n, dynamic_bitset<>(m));
    for (size_t a = 0 ; a < n ; ++a)
        for (size_t x = 0 ; x < m ; ++x)
            if (bisim.same_block(a, n + x) && h.out_degree(x) <= g.out_degree(a))
                domains[a].set(x);

    bool point_possible = domains[g.point()].test(h.point());
    domains[g.point()].reset();
    if (! point_possible)
        return std::nullopt;
    domains[g.point()].set(h.point());

    vector<vector<size_t>> g_parents(n);
    for (size_t a = 0 ; a < n ; ++a)
        for (auto c : g.children(a))
            g_parents[c].push_back(a);

    DhomSearch search{ g, h, g.lexicographic_order(), h.lexicographic_order(), std::move(g_parents), children_bits(h) };
    if (! search.expand(domains))
        return std::nullopt;
    return extract(domains);
}
