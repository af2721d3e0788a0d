/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_CONSTRUCTIONS_HH
#define APG_GUARD_CONSTRUCTIONS_HH 1

#include <apg/apg.hh>
#include <apg/extensionality.hh>
#include <apg/relations.hh>
#include <apg/set_literal.hh>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace apg
{
    /// A graph together with the map from the graph it was derived from.
    struct Quotient
    {
        Apg graph;
        NodeMap map;
    };

    /// Quotient by the maximum bisimulation. Blocks are named by their least
    /// member. The result is strongly extensional.
    auto collapse_afa(const Apg & g) -> Apg;
    auto collapse_afa_with_map(const Apg & g) -> Quotient;

    /// Repeated quotient by rel-equivalence of descendant subgraphs until the
    /// graph is rel-extensional. rel must be Iso, Finsler or Scott.
    auto collapse_iter(const Apg & g, Relation rel) -> Apg;
    auto collapse_iter_with_map(const Apg & g, Relation rel) -> Quotient;

    struct Product
    {
        Apg graph;
        NodeMap left, right;
    };

    /**
     * The synchronised product over a bisimulation r, restricted to pairs
     * reachable from (point, point). Pair nodes are named "<a>_<b>" when no
     * node name of either graph contains '_', and "q0", "q1", ... in
     * breadth-first order otherwise. Throws NotABisimulation.
     */
    auto product_bisim(const Apg & g, const Apg & h, const PairRelation & r) -> Product;

    /// The product over the maximum bisimulation when the points are
    /// bisimilar: a common d-homomorphic preimage of both graphs.
    auto joinable(const Apg & g, const Apg & h) -> std::optional<Product>;

    /**
     * All paths of length at most d from the point, as a tree. The root is
     * "t"; the k-th child (children in name order) of node "t_i_j" is
     * "t_i_j_k". Size grows exponentially with d.
     */
    auto unfold_depth(const Apg & g, std::size_t d) -> Apg;

    struct FlatTerm
    {
        std::variant<NodeId, SetLiteral> value;

        auto is_variable() const -> bool
        {
            return std::holds_alternative<NodeId>(value);
        }
    };

    /// x = { y, {}, ... } equations plus a designated root variable.
    struct FlatSystem
    {
        std::map<NodeId, std::vector<FlatTerm>> equations;
        std::optional<NodeId> root;
    };

    /// Lines "<var> = { <term>, ... }" and one "root <var>" line.
    auto parse_flat_system(std::string_view text) -> FlatSystem;

    /// The strongly extensional picture of the root's unique solution. Nodes
    /// are named after a variable of their class where one exists. Throws
    /// UndefinedVariable, NoRoot.
    auto solve_flat_system(const FlatSystem & s) -> Apg;
}

#endif
