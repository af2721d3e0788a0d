/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/extensionality.hh>
#include <apg/relations.hh>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

using namespace apg;

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    auto least_pair_in_blocks(const Apg & g, const Partition & p) -> optional<NodePair>
    {
        optional<NodePair> best;
        for (auto & block : p.blocks) {
            if (block.size() < 2)
                continue;
            vector<const NodeId *> names;
            for (auto v : block)
                names.push_back(&g.name(v));
            std::partial_sort(names.begin(), names.begin() + 2, names.end(), [] (auto a, auto b) { return *a < *b; });
            NodePair candidate{ *names[0], *names[1] };
            if (! best || candidate < *best)
                best = candidate;
        }
        return best;
    }

    /// Pairwise test in name order; descendant subgraphs are built once.
    auto least_related_pair(const Apg & g, const GraphRelation & rel) -> optional<NodePair>
    {
        auto order = g.lexicographic_order();
        vector<optional<Apg>> below(g.size());
        auto subgraph = [&] (size_t v) -> const Apg & {
            if (! below[v])
                below[v] = descendant_subgraph(g, v);
            return *below[v];
        };

        for (size_t i = 0 ; i < order.size() ; ++i)
            for (size_t j = i + 1 ; j < order.size() ; ++j)
                if (rel(subgraph(order[i]), subgraph(order[j])))
                    return NodePair{ g.name(order[i]), g.name(order[j]) };
        return std::nullopt;
    }
}

auto apg::parse_relation(string_view name) -> Relation
{
    if (name == "iso")
        return Relation::Iso;
    if (name == "finsler")
        return Relation::Finsler;
    if (name == "scott")
        return Relation::Scott;
    if (name == "bisim")
        return Relation::Bisim;
    if (name == "mutual_dhom" || name == "mutual-dhom")
        return Relation::MutualDhom;
    throw ApgError{ ErrorKind::UnknownRelation, "no relation named '" + string{ name } + "'" };
}

auto apg::relation_name(Relation r) -> string_view
{
    switch (r) {
        case Relation::Iso:        return "iso";
        case Relation::Finsler:    return "finsler";
        case Relation::Scott:      return "scott";
        case Relation::Bisim:      return "bisim";
        case Relation::MutualDhom: return "mutual_dhom";
    }
    return "?";
}

auto apg::is_extensional(const Apg & g) -> optional<NodePair>
{
    struct SpanHash
    {
        auto operator() (std::span<const size_t> s) const -> size_t
        {
            size_t h = s.size();
            for (auto x : s)
                h = h * 1000003u ^ x;
            return h;
        }
    };
    struct SpanEq
    {
        auto operator() (std::span<const size_t> a, std::span<const size_t> b) const -> bool
        {
            return std::equal(a.begin(), a.end(), b.begin(), b.end());
        }
    };

    std::unordered_map<std::span<const size_t>, size_t, SpanHash, SpanEq> first;
    vector<size_t> label(g.size());
    for (size_t v = 0 ; v < g.size() ; ++v)
        label[v] = first.emplace(g.children(v), v).first->second;
    return least_pair_in_blocks(g, Partition::from_labels(label));
}

auto apg::is_ext_wrt(const Apg & g, Relation rel) -> optional<NodePair>
{
    switch (rel) {
        case Relation::Scott:
            return least_pair_in_blocks(g, scott_partition(g));
        case Relation::Bisim:
            return least_pair_in_blocks(g, max_bisim_partition(g));
        case Relation::Iso:
            return least_related_pair(g, [] (const Apg & a, const Apg & b) { return find_isomorphism(a, b).has_value(); });
        case Relation::Finsler:
            return least_related_pair(g, finsler_eq);
        case Relation::MutualDhom:
            return least_related_pair(g, mutual_dhom);
    }
    throw ApgError{ ErrorKind::UnknownRelation, "unhandled relation" };
}

auto apg::is_ext_wrt(const Apg & g, const GraphRelation & rel) -> optional<NodePair>
{
    return least_related_pair(g, rel);
}

auto apg::notion_name(Notion n) -> string_view
{
    switch (n) {
        case Notion::Extensional:           return "extensional";
        case Notion::IsoExtensional:        return "iso-extensional";
        case Notion::FinslerExtensional:    return "finsler-extensional";
        case Notion::ScottExtensional:      return "scott-extensional";
        case Notion::StronglyExtensional:   return "strongly-extensional";
        case Notion::MutualDhomExtensional: return "mutual-dhom-extensional";
    }
    return "?";
}

auto ExtReport::holds(Notion n) const -> bool
{
    switch (n) {
        case Notion::Extensional:           return extensional;
        case Notion::IsoExtensional:        return iso_ext;
        case Notion::FinslerExtensional:    return finsler_ext;
        case Notion::ScottExtensional:      return scott_ext;
        case Notion::StronglyExtensional:   return strongly_ext;
        case Notion::MutualDhomExtensional: return mutual_dhom_ext;
    }
    return false;
}

auto apg::classify(const Apg & g) -> ExtReport
{
    ExtReport report;
    auto & w = report.witnesses;
    w[Notion::Extensional] = is_extensional(g);
    w[Notion::IsoExtensional] = is_ext_wrt(g, Relation::Iso);
    w[Notion::FinslerExtensional] = is_ext_wrt(g, Relation::Finsler);
    w[Notion::ScottExtensional] = is_ext_wrt(g, Relation::Scott);
    w[Notion::StronglyExtensional] = is_ext_wrt(g, Relation::Bisim);
    w[Notion::MutualDhomExtensional] = is_ext_wrt(g, Relation::MutualDhom);

    report.extensional = ! w[Notion::Extensional];
    report.iso_ext = ! w[Notion::IsoExtensional];
    report.finsler_ext = ! w[Notion::FinslerExtensional];
    report.scott_ext = ! w[Notion::ScottExtensional];
    report.strongly_ext = ! w[Notion::StronglyExtensional];
    report.mutual_dhom_ext = ! w[Notion::MutualDhomExtensional];

    if (report.finsler_ext != (report.extensional && report.iso_ext))
        throw std::logic_error{ "finsler-extensionality disagrees with extensionality plus iso-extensionality" };

    return report;
}
