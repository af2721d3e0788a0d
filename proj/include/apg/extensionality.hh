/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_EXTENSIONALITY_HH
#define APG_GUARD_EXTENSIONALITY_HH 1

#include <apg/apg.hh>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace apg
{
    using NodePair = std::pair<NodeId, NodeId>;

    /// The graph relations that extensionality can be taken with respect to.
    enum class Relation
    {
        Iso,
        Finsler,
        Scott,
        Bisim,
        MutualDhom
    };

    /// Accepts iso, finsler, scott, bisim, mutual_dhom (or mutual-dhom).
    /// Throws UnknownRelation.
    auto parse_relation(std::string_view name) -> Relation;

    auto relation_name(Relation r) -> std::string_view;

    using GraphRelation = std::function<bool (const Apg &, const Apg &)>;

    /// The least pair of distinct nodes with equal children, if any.
    auto is_extensional(const Apg & g) -> std::optional<NodePair>;

    /// The least pair a < a' (by name) with G[a] ~ G[a'], if any.
    auto is_ext_wrt(const Apg & g, Relation rel) -> std::optional<NodePair>;
    auto is_ext_wrt(const Apg & g, const GraphRelation & rel) -> std::optional<NodePair>;

    enum class Notion
    {
        Extensional,
        IsoExtensional,
        FinslerExtensional,
        ScottExtensional,
        StronglyExtensional,
        MutualDhomExtensional
    };

    inline constexpr std::array<Notion, 6> all_notions = {
        Notion::Extensional, Notion::IsoExtensional, Notion::FinslerExtensional,
        Notion::ScottExtensional, Notion::StronglyExtensional, Notion::MutualDhomExtensional
    };

    /// "extensional", "iso-extensional", ... as printed by the CLI.
    auto notion_name(Notion n) -> std::string_view;

    struct ExtReport
    {
        bool extensional = true;
        bool iso_ext = true;
        bool finsler_ext = true;
        bool scott_ext = true;
        bool strongly_ext = true;
        bool mutual_dhom_ext = true;

        /// One entry per notion; a pair exactly when the notion fails.
        std::map<Notion, std::optional<NodePair>> witnesses;

        auto holds(Notion n) const -> bool;
    };

    /// All six notions. Finsler extensionality is computed from stars and
    /// also as extensional ∧ iso-extensional; a disagreement throws
    /// std::logic_error.
    auto classify(const Apg & g) -> ExtReport;
}

#endif
