/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_RELATIONS_HH
#define APG_GUARD_RELATIONS_HH 1

#include <apg/apg.hh>
#include <apg/partition.hh>

#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace apg
{
    /// A function between node sets, source name to target name.
    using NodeMap = std::map<NodeId, NodeId>;

    /// Pairs (node of g, node of h).
    using PairRelation = std::set<std::pair<NodeId, NodeId>>;

    /// The sibling relation within one graph: equal children sets.
    auto same_children(const Apg & g, std::string_view a, std::string_view a2) -> bool;

    /**
     * A point-preserving bijection that preserves and reflects edges, or
     * nothing. Among all isomorphisms the one returned is least when sources
     * are taken in name order and targets compared by name.
     */
    auto isomorphic(const Apg & g, const Apg & h) -> std::optional<NodeMap>;

    /// True iff f is total, bijective, point preserving and edge preserving
    /// and reflecting.
    auto is_isomorphism(const Apg & g, const Apg & h, const NodeMap & f) -> bool;

    /// G*: g itself if its point has no parent, else g plus a fresh point
    /// (named _star, _star0, _star1, ...) with the old point's children.
    auto star(const Apg & g) -> Apg;

    auto finsler_eq(const Apg & g, const Apg & h) -> bool;

    auto scott_partition(const Apg & g) -> Partition;
    auto scott_partition(const Apg & g, const Apg & h) -> Partition;

    /// Equivalence of tree unfoldings, via the counting partition.
    auto scott_eq(const Apg & g, const Apg & h) -> bool;

    auto max_bisim_partition(const Apg & g) -> Partition;
    auto max_bisim_partition(const Apg & g, const Apg & h) -> Partition;

    auto bisimilar(const Apg & g, const Apg & h) -> bool;

    /// Checks C_h(f(a)) = f[C_g(a)] everywhere and f(point) = point. Throws
    /// IncompleteMap if f misses a node of g, UnknownNode if an image is not a
    /// node of h.
    auto verify_dhom(const Apg & g, const Apg & h, const NodeMap & f) -> bool;

    /// Local forth/back conditions plus (point, point) ∈ r. Pairs naming
    /// unknown nodes make the check fail.
    auto check_bisimulation(const Apg & g, const Apg & h, const PairRelation & r) -> bool;

    /**
     * A d-homomorphism g -> h, or nothing. Backtracking with arc consistency;
     * domains start from the maximum bisimulation, since the graph of any
     * d-homomorphism is a bisimulation. The witness is least in the same
     * sense as for isomorphic().
     */
    auto dhom_exists(const Apg & g, const Apg & h) -> std::optional<NodeMap>;

    auto mutual_dhom(const Apg & g, const Apg & h) -> bool;

    /// Index-level forms of the searches, for callers that already hold
    /// indices. Result[v] is the image of node v of g.
    auto find_isomorphism(const Apg & g, const Apg & h) -> std::optional<std::vector<std::size_t>>;
    auto find_dhom(const Apg & g, const Apg & h) -> std::optional<std::vector<std::size_t>>;

    auto to_node_map(const Apg & g, const Apg & h, const std::vector<std::size_t> & f) -> NodeMap;
}

#endif
