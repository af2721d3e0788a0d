/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_APG_HH
#define APG_GUARD_APG_HH 1

#include <apg/error.hh>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace apg
{
    using NodeId = std::string;

    /// True iff the name matches [A-Za-z0-9_]+.
    auto is_valid_name(std::string_view name) -> bool;

    /**
     * A finite accessible pointed graph. Nodes are addressed either by their
     * declared name or by a dense index (declaration order); children are kept
     * as sorted index lists in a compressed layout. Every Apg that exists has
     * been validated: names are well formed and unique, children sets contain
     * no repeats and every node is reachable from the point.
     */
    class Apg
    {
        private:
            std::vector<NodeId> _names;
            std::vector<std::size_t> _offsets;
            std::vector<std::size_t> _targets;
            std::size_t _point = 0;
            std::unordered_map<NodeId, std::size_t> _index;

        public:
            /// Children are given as indices into names. Throws ApgError.
            Apg(std::vector<NodeId> names, const std::vector<std::vector<std::size_t>> & children, std::size_t point);

            /// Builds from (name, children names) lines. Throws ApgError.
            static auto from_lists(const NodeId & point, const std::vector<std::pair<NodeId, std::vector<NodeId>>> & nodes) -> Apg;

            auto size() const -> std::size_t
            {
                return _names.size();
            }

            auto edge_count() const -> std::size_t
            {
                return _targets.size();
            }

            auto point() const -> std::size_t
            {
                return _point;
            }

            auto name(std::size_t v) const -> const NodeId &
            {
                return _names[v];
            }

            auto names() const -> const std::vector<NodeId> &
            {
                return _names;
            }

            auto children(std::size_t v) const -> std::span<const std::size_t>
            {
                return { _targets.data() + _offsets[v], _targets.data() + _offsets[v + 1] };
            }

            auto out_degree(std::size_t v) const -> std::size_t
            {
                return _offsets[v + 1] - _offsets[v];
            }

            auto has_edge(std::size_t from, std::size_t to) const -> bool;

            auto find(std::string_view name) const -> std::optional<std::size_t>;

            /// Throws ApgError(UnknownNode) for names not in the graph.
            auto index_of(std::string_view name) const -> std::size_t;

            /// Node indices sorted by name.
            auto lexicographic_order() const -> std::vector<std::size_t>;

            /// Children names, sorted.
            auto children_names(std::size_t v) const -> std::vector<NodeId>;

            /// Structural equality on names; declaration order is ignored.
            friend auto operator== (const Apg & g, const Apg & h) -> bool;
    };

    /// Reads the `apg v1` text format.
    auto parse_apg(std::string_view text) -> Apg;

    /// Point first, other nodes by name, children sorted. No trailing newline.
    auto serialize_apg(const Apg & g) -> std::string;

    /// The subgraph G[a] below a, pointed at a.
    auto descendant_subgraph(const Apg & g, std::string_view a) -> Apg;
    auto descendant_subgraph(const Apg & g, std::size_t a) -> Apg;

    /// Nodes reachable from v, as a membership mask.
    auto reachable_from(const Apg & g, std::size_t v) -> std::vector<bool>;

    auto to_dot(const Apg & g) -> std::string;
}

#endif
