/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_TESTS_SUPPORT_GENERATORS_HH
#define APG_GUARD_TESTS_SUPPORT_GENERATORS_HH 1

#include <apg/apg.hh>

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace apg::gen
{
    using Rng = std::mt19937_64;

    /// Every accessible pointed graph on nodes n0..n(k-1), k ≤ max_nodes,
    /// pointed at n0. One graph per child map.
    auto all_apgs(std::size_t max_nodes) -> std::vector<Apg>;

    /// A random arborescence from the point, plus extra_edges further edges
    /// (fewer if the graph fills up). Names are v0.. in a shuffled order.
    auto random_apg(Rng & rng, std::size_t nodes, std::size_t extra_edges) -> Apg;

    /// 1..max_nodes nodes, 0..2n extra edges.
    auto random_apg(Rng & rng, std::size_t max_nodes) -> Apg;

    /// The same graph under fresh shuffled names and declaration order.
    auto relabel(Rng & rng, const Apg & g) -> Apg;

    /**
     * Copies one node, giving the copy the same children and moving some of
     * the original's incoming edges onto it. The result is bisimilar and
     * Scott equivalent to g but never isomorphic. Nothing if no node has
     * enough incoming edges.
     */
    auto split_node(Rng & rng, const Apg & g) -> std::optional<Apg>;

    /// A pair that is related under bisimulation about half of the time.
    auto random_pair(Rng & rng, std::size_t max_nodes) -> std::pair<Apg, Apg>;
}

#endif
