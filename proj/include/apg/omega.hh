/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_OMEGA_HH
#define APG_GUARD_OMEGA_HH 1

#include <apg/apg.hh>
#include <apg/index_set.hh>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace apg
{
    /// Children of a singleton node: other singletons, plus chain nodes b_i
    /// for i in an index set.
    struct SingletonChildren
    {
        std::set<NodeId> singletons;
        IndexSet chain;
    };

    /**
     * An infinite graph with finitely many singleton nodes and one ω-chain
     * b_0, b_1, .... The chain edges are fixed: b_0 -> b_0 and
     * b_{i+1} -> {b_i, b_{i+1}}, so each b_{i+1} sees itself and its
     * predecessor. Chain node i is named "<chain><i>" in truncations.
     *
     * Construction checks that every singleton is reachable from the root and
     * that the reachable chain index sets are unbounded, so every b_i is
     * reachable as well.
     */
    class OmegaPresentation
    {
        private:
            NodeId _root;
            NodeId _chain;
            std::vector<NodeId> _singletons;
            std::map<NodeId, SingletonChildren> _children;

        public:
            OmegaPresentation(NodeId root, NodeId chain, std::vector<std::pair<NodeId, SingletonChildren>> singletons);

            auto root() const -> const NodeId &
            {
                return _root;
            }

            auto chain() const -> const NodeId &
            {
                return _chain;
            }

            /// Declaration order.
            auto singletons() const -> const std::vector<NodeId> &
            {
                return _singletons;
            }

            /// Throws UnknownNode.
            auto children_of(std::string_view singleton) const -> const SingletonChildren &;

            /// Singletons reachable from s, including s.
            auto reachable_singletons(std::string_view s) const -> std::set<NodeId>;

            /// Union of the chain index sets of the singletons reachable from s.
            auto reachable_chain(std::string_view s) const -> IndexSet;

            auto chain_node(Index i) const -> NodeId
            {
                return _chain + std::to_string(i);
            }
    };

    /// The chain part is always the shift b_0 -> b_0, b_{i+1} -> b_i.
    struct SymbolicWitness
    {
        std::map<NodeId, NodeId> singleton_map;
    };

    /// The two-parent ω-chain graph: root r -> {a, aprime}, a sees b_i for
    /// i ∈ {0} ∪ odds, aprime for i even.
    auto make_J() -> OmegaPresentation;

    /// b -> {a, b}, a -> {a}, pointed at b.
    auto make_Q2() -> Apg;

    /**
     * Exact check that w is a d-homomorphism from the subgraph below source
     * to the subgraph below target, with no truncation. The chain part is
     * checked symbolically over the cases i = 0, i = 1, i ≥ 2; each mapped
     * singleton is checked by comparing shifted index sets. Throws NotTotal
     * if w misses a singleton reachable from source, UnknownNode for unknown
     * singletons.
     */
    auto verify_dhom_symbolic(const OmegaPresentation & p, const SymbolicWitness & w,
            std::string_view source, std::string_view target) -> bool;

    /// The symbolic chain case split on its own.
    auto chain_shift_is_decoration_like() -> bool;

    /// Chain nodes b_0..b_n; edges to larger indices are dropped. Throws
    /// NotAccessible when the cut disconnects a node.
    auto truncate(const OmegaPresentation & p, Index n) -> Apg;

    /// Human-readable listing of a presentation.
    auto describe(const OmegaPresentation & p) -> std::string;

    /// omega1, omega2, vee, Q2. omega-J is infinite and handled separately.
    auto gallery_names() -> std::vector<std::string>;
    auto finite_gallery_item(std::string_view name) -> std::optional<Apg>;
}

#endif
