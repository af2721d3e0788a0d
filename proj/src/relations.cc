/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/relations.hh>

#include <algorithm>

using namespace apg;

using std::optional;
using std::size_t;
using std::string_view;
using std::vector;

auto apg::same_children(const Apg & g, string_view a, string_view a2) -> bool
{
    auto x = g.index_of(a), y = g.index_of(a2);
    auto cx = g.children(x), cy = g.children(y);
    return std::equal(cx.begin(), cx.end(), cy.begin(), cy.end());
}

auto apg::to_node_map(const Apg & g, const Apg & h, const vector<size_t> & f) -> NodeMap
{
    NodeMap result;
    for (size_t v = 0 ; v < g.size() ; ++v)
        result.emplace(g.name(v), h.name(f[v]));
    return result;
}

auto apg::isomorphic(const Apg & g, const Apg & h) -> optional<NodeMap>
{
    if (auto f = find_isomorphism(g, h))
        return to_node_map(g, h, *f);
    return std::nullopt;
}

auto apg::is_isomorphism(const Apg & g, const Apg & h, const NodeMap & f) -> bool
{
    if (g.size() != h.size() || f.size() != g.size())
        return false;

    vector<size_t> image(g.size());
    vector<bool> hit(h.size(), false);
    for (size_t v = 0 ; v < g.size() ; ++v) {
        auto i = f.find(g.name(v));
        if (i == f.end())
            return false;
        auto w = h.find(i->second);
        if (! w || hit[*w])
            return false;
        hit[*w] = true;
        image[v] = *w;
    }

    if (image[g.point()] != h.point() || g.edge_count() != h.edge_count())
        return false;
    for (size_t v = 0 ; v < g.size() ; ++v)
        for (auto c : g.children(v))
            if (! h.has_edge(image[v], image[c]))
                return false;
    return true;
}

auto apg::star(const Apg & g) -> Apg
{
    bool point_has_parent = false;
    for (size_t v = 0 ; v < g.size() && ! point_has_parent ; ++v)
        point_has_parent = g.has_edge(v, g.point());
    if (! point_has_parent)
        return g;

    NodeId fresh = "_star";
    for (size_t i = 0 ; g.find(fresh) ; ++i)
        fresh = "_star" + std::to_string(i);

    auto names = g.names();
    vector<vector<size_t>> children(g.size() + 1);
    for (size_t v = 0 ; v < g.size() ; ++v)
        children[v].assign(g.children(v).begin(), g.children(v).end());
    children[g.size()] = children[g.point()];
    names.push_back(fresh);
    return Apg{ std::move(names), children, g.size() };
}

auto apg::finsler_eq(const Apg & g, const Apg & h) -> bool
{
    return find_isomorphism(star(g), star(h)).has_value();
}

auto apg::scott_partition(const Apg & g) -> Partition
{
    return counting_refinement(Digraph::of(g));
}

auto apg::scott_partition(const Apg & g, const Apg & h) -> Partition
{
    return counting_refinement(Digraph::of(g, h));
}

auto apg::scott_eq(const Apg & g, const Apg & h) -> bool
{
    return scott_partition(g, h).same_block(g.point(), g.size() + h.point());
}

auto apg::max_bisim_partition(const Apg & g) -> Partition
{
    return bisimulation_refinement(Digraph::of(g));
}

auto apg::max_bisim_partition(const Apg & g, const Apg & h) -> Partition
{
    return bisimulation_refinement(Digraph::of(g, h));
}

auto apg::bisimilar(const Apg & g, const Apg & h) -> bool
{
    return max_bisim_partition(g, h).same_block(g.point(), g.size() + h.point());
}

auto apg::verify_dhom(const Apg & g, const Apg & h, const NodeMap & f) -> bool
{
    vector<size_t> image(g.size());
    for (size_t v = 0 ; v < g.size() ; ++v) {
        auto i = f.find(g.name(v));
        if (i == f.end())
            throw ApgError{ ErrorKind::IncompleteMap, "no image for node '" + g.name(v) + "'" };
        image[v] = h.index_of(i->second);
    }

    if (image[g.point()] != h.point())
        return false;

    vector<size_t> mapped;
    for (size_t v = 0 ; v < g.size() ; ++v) {
        mapped.clear();
        for (auto c : g.children(v))
            mapped.push_back(image[c]);
        std::sort(mapped.begin(), mapped.end());
        mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
        auto expected = h.children(image[v]);
        if (! std::equal(mapped.begin(), mapped.end(), expected.begin(), expected.end()))
            return false;
    }
    return true;
}

auto apg::check_bisimulation(const Apg & g, const Apg & h, const PairRelation & r) -> bool
{
    vector<vector<bool>> related(g.size(), vector<bool>(h.size(), false));
    for (auto & [a, b] : r) {
        auto x = g.find(a);
        auto y = h.find(b);
        if (! x || ! y)
            return false;
        related[*x][*y] = true;
    }

    if (! related[g.point()][h.point()])
        return false;

    for (size_t x = 0 ; x < g.size() ; ++x)
        for (size_t y = 0 ; y < h.size() ; ++y) {
            if (! related[x][y])
                continue;
            for (auto c : g.children(x))
                if (std::none_of(h.children(y).begin(), h.children(y).end(), [&] (size_t d) { return related[c][d]; }))
                    return false;
            for (auto d : h.children(y))
                if (std::none_of(g.children(x).begin(), g.children(x).end(), [&] (size_t c) { return related[c][d]; }))
                    return false;
        }
    return true;
}

auto apg::dhom_exists(const Apg & g, const Apg & h) -> optional<NodeMap>
{
    if (auto f = find_dhom(g, h))
        return to_node_map(g, h, *f);
    return std::nullopt;
}

auto apg::mutual_dhom(const Apg & g, const Apg & h) -> bool
{
    return find_dhom(g, h).has_value() && find_dhom(h, g).has_value();
}
