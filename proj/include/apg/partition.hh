/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_PARTITION_HH
#define APG_GUARD_PARTITION_HH 1

#include <apg/apg.hh>

#include <cstddef>
#include <span>
#include <vector>

namespace apg
{
    /**
     * Disjoint blocks covering the universe 0..n-1. When a partition is taken
     * over two graphs g and h, g's nodes come first and node v of h is
     * element g.size() + v. Blocks are ordered by least member and each block
     * is sorted.
     */
    struct Partition
    {
        std::vector<std::vector<std::size_t>> blocks;
        std::vector<std::size_t> block_of;

        /// Renumbers raw block labels into the canonical block order.
        static auto from_labels(std::span<const std::size_t> labels) -> Partition;

        auto same_block(std::size_t a, std::size_t b) const -> bool
        {
            return block_of[a] == block_of[b];
        }

        auto size() const -> std::size_t
        {
            return blocks.size();
        }

        friend auto operator== (const Partition &, const Partition &) -> bool = default;
    };

    /// Children lists in compressed form; the input to the refinement algorithms.
    struct Digraph
    {
        std::vector<std::size_t> offsets{ 0 };
        std::vector<std::size_t> targets;

        auto size() const -> std::size_t
        {
            return offsets.size() - 1;
        }

        auto children(std::size_t v) const -> std::span<const std::size_t>
        {
            return { targets.data() + offsets[v], targets.data() + offsets[v + 1] };
        }

        static auto of(const Apg & g) -> Digraph;

        /// Disjoint union, g first.
        static auto of(const Apg & g, const Apg & h) -> Digraph;
    };

    /// Coarsest partition in which blockmates have the same number of
    /// children in every block. O((n + m) log n).
    auto counting_refinement(const Digraph & graph) -> Partition;

    /// Coarsest partition in which blockmates have children in exactly the
    /// same blocks (the maximum bisimulation). O(m log n).
    auto bisimulation_refinement(const Digraph & graph) -> Partition;
}

#endif
