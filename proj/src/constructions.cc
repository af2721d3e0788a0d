/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/constructions.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

using namespace apg;

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace
{
    struct Collapsed
    {
        Apg graph;
        vector<size_t> image;
    };

    /// Block representatives are chosen by `better`; edges are unions over
    /// the members of each block.
    template <typename Better_>
    auto quotient(const Apg & g, const Partition & p, Better_ && better) -> Collapsed
    {
        vector<NodeId> names;
        names.reserve(p.size());
        for (auto & block : p.blocks) {
            auto best = block.front();
            for (auto v : block)
                if (better(v, best))
                    best = v;
            names.push_back(g.name(best));
        }

        vector<vector<size_t>> children(p.size());
        for (size_t b = 0 ; b < p.size() ; ++b) {
            auto & c = children[b];
            for (auto v : p.blocks[b])
                for (auto w : g.children(v))
                    c.push_back(p.block_of[w]);
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
        }

        return Collapsed{ Apg{ std::move(names), children, p.block_of[g.point()] }, p.block_of };
    }

    auto least_name(const Apg & g)
    {
        return [&g] (size_t a, size_t b) { return g.name(a) < g.name(b); };
    }

    auto union_find_classes(const Apg & g, const GraphRelation & rel) -> Partition
    {
        vector<size_t> parent(g.size());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (size_t v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };

        vector<optional<Apg>> below(g.size());
        auto subgraph = [&] (size_t v) -> const Apg & {
            if (! below[v])
                below[v] = descendant_subgraph(g, v);
            return *below[v];
        };

        for (size_t a = 0 ; a < g.size() ; ++a)
            for (size_t b = a + 1 ; b < g.size() ; ++b) {
                if (find(a) == find(b))
                    continue;
                if (rel(subgraph(a), subgraph(b)))
                    parent[find(b)] = find(a);
            }

        vector<size_t> labels(g.size());
        for (size_t v = 0 ; v < g.size() ; ++v)
            labels[v] = find(v);
        return Partition::from_labels(labels);
    }

    auto classes(const Apg & g, Relation rel) -> Partition
    {
        switch (rel) {
            case Relation::Scott:
                return scott_partition(g);
            case Relation::Bisim:
                return max_bisim_partition(g);
            case Relation::Iso:
                return union_find_classes(g, [] (const Apg & a, const Apg & b) { return find_isomorphism(a, b).has_value(); });
            case Relation::Finsler:
                return union_find_classes(g, finsler_eq);
            case Relation::MutualDhom:
                return union_find_classes(g, mutual_dhom);
        }
        throw ApgError{ ErrorKind::UnknownRelation, "unhandled relation" };
    }

    auto to_map(const Apg & from, const Apg & to, const vector<size_t> & image) -> NodeMap
    {
        NodeMap result;
        for (size_t v = 0 ; v < from.size() ; ++v)
            result.emplace(from.name(v), to.name(image[v]));
        return result;
    }

    template <typename Related_>
    auto build_product(const Apg & g, const Apg & h, Related_ && related) -> Product
    {
        std::map<std::pair<size_t, size_t>, size_t> index;
        vector<std::pair<size_t, size_t>> pairs;
        vector<vector<size_t>> children;

        auto intern = [&] (size_t a, size_t b) {
            auto [i, fresh] = index.emplace(std::pair{ a, b }, pairs.size());
            if (fresh) {
                pairs.emplace_back(a, b);
                children.emplace_back();
            }
            return i->second;
        };

        intern(g.point(), h.point());
        for (size_t i = 0 ; i < pairs.size() ; ++i) {
            auto [a, b] = pairs[i];
            for (auto c : g.children(a))
                for (auto d : h.children(b))
                    if (related(c, d)) {
                        auto j = intern(c, d);
                        children[i].push_back(j);
                    }
        }

        auto has_underscore = [] (const Apg & x) {
            return std::any_of(x.names().begin(), x.names().end(), [] (const NodeId & n) { return n.find('_') != string::npos; });
        };
        bool plain = ! has_underscore(g) && ! has_underscore(h);

        vector<NodeId> names;
        for (size_t i = 0 ; i < pairs.size() ; ++i)
            names.push_back(plain ? g.name(pairs[i].first) + "_" + h.name(pairs[i].second) : "q" + std::to_string(i));

        Product result{ Apg{ names, children, 0 }, {}, {} };
        for (size_t i = 0 ; i < pairs.size() ; ++i) {
            result.left.emplace(names[i], g.name(pairs[i].first));
            result.right.emplace(names[i], h.name(pairs[i].second));
        }
        return result;
    }
}

auto apg::collapse_afa(const Apg & g) -> Apg
{
    return quotient(g, max_bisim_partition(g), least_name(g)).graph;
}

auto apg::collapse_afa_with_map(const Apg & g) -> Quotient
{
    auto q = quotient(g, max_bisim_partition(g), least_name(g));
    auto map = to_map(g, q.graph, q.image);
    return Quotient{ std::move(q.graph), std::move(map) };
}

auto apg::collapse_iter(const Apg & g, Relation rel) -> Apg
{
    return collapse_iter_with_map(g, rel).graph;
}

auto apg::collapse_iter_with_map(const Apg & g, Relation rel) -> Quotient
{
    Apg current = g;
    vector<size_t> image(g.size());
    std::iota(image.begin(), image.end(), 0);

    // one round can make new descendant subgraphs equivalent, so repeat; the
    // node count drops every time round
    while (true) {
        auto p = classes(current, rel);
        if (p.size() == current.size())
            break;
        auto q = quotient(current, p, least_name(current));
        for (auto & i : image)
            i = q.image[i];
        current = std::move(q.graph);
    }

    auto map = to_map(g, current, image);
    return Quotient{ std::move(current), std::move(map) };
}

auto apg::product_bisim(const Apg & g, const Apg & h, const PairRelation & r) -> Product
{
    if (! check_bisimulation(g, h, r))
        throw ApgError{ ErrorKind::NotABisimulation, "the relation is not a bisimulation between the two graphs" };

    vector<vector<bool>> related(g.size(), vector<bool>(h.size(), false));
    for (auto & [a, b] : r)
        related[g.index_of(a)][h.index_of(b)] = true;
    return build_product(g, h, [&] (size_t a, size_t b) { return related[a][b]; });
}

auto apg::joinable(const Apg & g, const Apg & h) -> optional<Product>
{
    auto p = max_bisim_partition(g, h);
    if (! p.same_block(g.point(), g.size() + h.point()))
        return std::nullopt;
    return build_product(g, h, [&] (size_t a, size_t b) { return p.same_block(a, g.size() + b); });
}

auto apg::unfold_depth(const Apg & g, size_t d) -> Apg
{
    struct Entry
    {
        size_t node, depth;
    };

    vector<vector<size_t>> sorted_children(g.size());
    for (size_t v = 0 ; v < g.size() ; ++v) {
        auto & c = sorted_children[v];
        c.assign(g.children(v).begin(), g.children(v).end());
        std::sort(c.begin(), c.end(), least_name(g));
    }

    vector<NodeId> names{ "t" };
    vector<Entry> entries{ { g.point(), 0 } };
    vector<vector<size_t>> children(1);
    for (size_t i = 0 ; i < entries.size() ; ++i) {
        auto [node, depth] = entries[i];
        if (depth == d)
            continue;
        auto & c = sorted_children[node];
        for (size_t k = 0 ; k < c.size() ; ++k) {
            children[i].push_back(names.size());
            names.push_back(names[i] + "_" + std::to_string(k));
            entries.push_back(Entry{ c[k], depth + 1 });
            children.emplace_back();
        }
    }

    return Apg{ std::move(names), children, 0 };
}

auto apg::solve_flat_system(const FlatSystem & s) -> Apg
{
    if (! s.root)
        throw ApgError{ ErrorKind::NoRoot, "the system has no root variable" };

    for (auto & [var, terms] : s.equations)
        for (auto & t : terms)
            if (t.is_variable() && ! s.equations.contains(std::get<NodeId>(t.value)))
                throw ApgError{ ErrorKind::UndefinedVariable, "'" + std::get<NodeId>(t.value) + "' is used in the equation for '" + var + "' but never defined" };
    if (! s.equations.contains(*s.root))
        throw ApgError{ ErrorKind::UndefinedVariable, "root '" + *s.root + "' is never defined" };

    // literal nodes get more leading underscores than any variable, so they
    // cannot clash with variable names
    size_t underscores = 0;
    for (auto & [var, _] : s.equations)
        underscores = std::max(underscores, std::min(var.find_first_not_of('_'), var.size()));
    string prefix(underscores + 1, '_');

    vector<NodeId> names;
    vector<vector<size_t>> children;
    std::map<NodeId, size_t> var_index;
    std::unordered_map<SetLiteral, size_t> literal_index;
    vector<bool> is_variable;

    auto add_literal = [&] (const SetLiteral & x) {
        // post-order over trcl({x}), interning each distinct set once
        vector<std::pair<SetLiteral, bool>> stack{ { x, false } };
        while (! stack.empty()) {
            auto [set, expanded] = stack.back();
            stack.pop_back();
            if (literal_index.contains(set))
                continue;
            if (! expanded) {
                stack.emplace_back(set, true);
                for (auto & e : set.elements())
                    if (! literal_index.contains(e))
                        stack.emplace_back(e, false);
                continue;
            }
            auto i = names.size();
            literal_index.emplace(set, i);
            names.push_back(prefix + std::to_string(literal_index.size() - 1));
            is_variable.push_back(false);
            children.emplace_back();
            for (auto & e : set.elements())
                children[i].push_back(literal_index.at(e));
        }
        return literal_index.at(x);
    };

    std::deque<NodeId> queue{ *s.root };
    var_index.emplace(*s.root, 0);
    names.push_back(*s.root);
    is_variable.push_back(true);
    children.emplace_back();
    while (! queue.empty()) {
        auto var = queue.front();
        queue.pop_front();
        auto v = var_index.at(var);
        for (auto & t : s.equations.at(var)) {
            size_t target;
            if (t.is_variable()) {
                auto & name = std::get<NodeId>(t.value);
                auto [i, fresh] = var_index.emplace(name, names.size());
                if (fresh) {
                    names.push_back(name);
                    is_variable.push_back(true);
                    children.emplace_back();
                    queue.push_back(name);
                }
                target = i->second;
            }
            else
                target = add_literal(std::get<SetLiteral>(t.value));
            children[v].push_back(target);
        }
    }

    for (auto & c : children) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }

    Apg system_graph{ names, children, 0 };
    return quotient(system_graph, max_bisim_partition(system_graph), [&] (size_t a, size_t b) {
            if (is_variable[a] != is_variable[b])
                return bool(is_variable[a]);
            return names[a] < names[b];
            }).graph;
}
