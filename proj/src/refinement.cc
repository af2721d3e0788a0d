/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/partition.hh>

#include <algorithm>
#include <deque>
#include <limits>

using namespace apg;

using std::size_t;
using std::span;
using std::vector;

namespace
{
    constexpr size_t no_label = std::numeric_limits<size_t>::max();

    /**
     * Blocks are contiguous ranges of one permutation array. Marking moves an
     * element to the front of its block; split() then carves the marked prefix
     * of every partially marked block off as a new block.
     */
    class RefinablePartition
    {
        private:
            struct Block
            {
                size_t begin, end, mid;
            };

            vector<size_t> _elems, _pos, _blk;
            vector<Block> _blocks;
            vector<size_t> _touched;

        public:
            explicit RefinablePartition(size_t n) :
                _elems(n),
                _pos(n),
                _blk(n, 0)
            {
                for (size_t i = 0 ; i < n ; ++i)
                    _elems[i] = _pos[i] = i;
                _blocks.push_back(Block{ 0, n, 0 });
            }

            auto block_count() const -> size_t
            {
                return _blocks.size();
            }

            auto block_of(size_t e) const -> size_t
            {
                return _blk[e];
            }

            auto block_size(size_t b) const -> size_t
            {
                return _blocks[b].end - _blocks[b].begin;
            }

            auto members(size_t b) const -> span<const size_t>
            {
                return { _elems.data() + _blocks[b].begin, _elems.data() + _blocks[b].end };
            }

            auto mark(size_t e) -> void
            {
                auto b = _blk[e];
                auto & block = _blocks[b];
                auto p = _pos[e];
                if (p < block.mid)
                    return;
                if (block.mid == block.begin)
                    _touched.push_back(b);
                auto other = _elems[block.mid];
                std::swap(_elems[p], _elems[block.mid]);
                _pos[other] = p;
                _pos[e] = block.mid;
                ++block.mid;
            }

            template <typename OnSplit_>
            auto split(OnSplit_ && on_split) -> void
            {
                for (auto b : _touched) {
                    if (_blocks[b].mid == _blocks[b].end) {
                        _blocks[b].mid = _blocks[b].begin;
                        continue;
                    }
                    auto nb = _blocks.size();
                    auto begin = _blocks[b].begin, mid = _blocks[b].mid;
                    _blocks.push_back(Block{ begin, mid, begin });
                    for (auto i = begin ; i < mid ; ++i)
                        _blk[_elems[i]] = nb;
                    _blocks[b].begin = mid;
                    _blocks[b].mid = mid;
                    on_split(b, nb);
                }
                _touched.clear();
            }

            auto labels() const -> const vector<size_t> &
            {
                return _blk;
            }
    };

    struct Reverse
    {
        vector<size_t> offsets;
        vector<size_t> edges;
        vector<size_t> sources;
    };

    /// Incoming edge ids per node; edge ids are positions in graph.targets.
    auto reverse_of(const Digraph & graph) -> Reverse
    {
        Reverse r;
        auto n = graph.size();
        r.offsets.assign(n + 1, 0);
        r.sources.resize(graph.targets.size());
        for (size_t v = 0 ; v < n ; ++v)
            for (auto e = graph.offsets[v] ; e < graph.offsets[v + 1] ; ++e) {
                r.sources[e] = v;
                ++r.offsets[graph.targets[e] + 1];
            }
        for (size_t v = 0 ; v < n ; ++v)
            r.offsets[v + 1] += r.offsets[v];
        r.edges.resize(graph.targets.size());
        auto fill = r.offsets;
        for (size_t e = 0 ; e < graph.targets.size() ; ++e)
            r.edges[fill[graph.targets[e]]++] = e;
        return r;
    }
}

auto Partition::from_labels(span<const size_t> labels) -> Partition
{
    Partition result;
    result.block_of.resize(labels.size());
    vector<size_t> renumber;
    for (size_t v = 0 ; v < labels.size() ; ++v) {
        if (labels[v] >= renumber.size())
            renumber.resize(labels[v] + 1, no_label);
        if (renumber[labels[v]] == no_label) {
            renumber[labels[v]] = result.blocks.size();
            result.blocks.emplace_back();
        }
        result.block_of[v] = renumber[labels[v]];
        result.blocks[result.block_of[v]].push_back(v);
    }
    return result;
}

auto Digraph::of(const Apg & g) -> Digraph
{
    Digraph result;
    result.offsets.reserve(g.size() + 1);
    result.targets.reserve(g.edge_count());
    for (size_t v = 0 ; v < g.size() ; ++v) {
        for (auto c : g.children(v))
            result.targets.push_back(c);
        result.offsets.push_back(result.targets.size());
    }
    return result;
}

auto Digraph::of(const Apg & g, const Apg & h) -> Digraph
{
    auto result = of(g);
    for (size_t v = 0 ; v < h.size() ; ++v) {
        for (auto c : h.children(v))
            result.targets.push_back(g.size() + c);
        result.offsets.push_back(result.targets.size());
    }
    return result;
}

auto apg::counting_refinement(const Digraph & graph) -> Partition
{
    auto n = graph.size();
    if (0 == n)
        return Partition{};

    auto reverse = reverse_of(graph);
    RefinablePartition partition(n);

    // Hopcroft's trick: once a block has been used as a splitter, the counts
    // into its largest descendant piece follow from the counts into the
    // others, so only the other pieces need to be queued.
    std::deque<size_t> queue{ 0 };
    vector<char> in_queue{ 1 };
    vector<size_t> count(n, 0), touched, pieces;

    while (! queue.empty()) {
        auto splitter = queue.front();
        queue.pop_front();
        in_queue[splitter] = 0;

        touched.clear();
        for (auto u : partition.members(splitter))
            for (auto i = reverse.offsets[u] ; i < reverse.offsets[u + 1] ; ++i) {
                auto v = reverse.sources[reverse.edges[i]];
                if (0 == count[v]++)
                    touched.push_back(v);
            }

        std::sort(touched.begin(), touched.end(), [&] (size_t a, size_t b) {
                auto ba = partition.block_of(a), bb = partition.block_of(b);
                return ba != bb ? ba < bb : count[a] < count[b];
                });

        for (size_t i = 0 ; i < touched.size() ; ) {
            auto block = partition.block_of(touched[i]);
            size_t j = i;
            while (j < touched.size() && partition.block_of(touched[j]) == block)
                ++j;

            bool uniform = (j - i == partition.block_size(block)) && count[touched[i]] == count[touched[j - 1]];
            if (! uniform) {
                pieces.assign(1, block);
                for (size_t k = i ; k < j ; ) {
                    size_t l = k;
                    while (l < j && count[touched[l]] == count[touched[k]])
                        partition.mark(touched[l++]);
                    partition.split([&] (size_t, size_t fresh) { pieces.push_back(fresh); });
                    k = l;
                }
                in_queue.resize(partition.block_count(), 0);

                size_t skip = block;
                if (! in_queue[block])
                    skip = *std::max_element(pieces.begin(), pieces.end(), [&] (size_t a, size_t b) {
                            return partition.block_size(a) < partition.block_size(b);
                            });
                for (auto p : pieces)
                    if (p != skip && ! in_queue[p]) {
                        in_queue[p] = 1;
                        queue.push_back(p);
                    }
            }
            i = j;
        }

        for (auto v : touched)
            count[v] = 0;
    }

    return Partition::from_labels(partition.labels());
}

auto apg::bisimulation_refinement(const Digraph & graph) -> Partition
{
    auto n = graph.size();
    if (0 == n)
        return Partition{};

    // Paige and Tarjan: the fine partition lives in `partition`; the coarse
    // partition groups its blocks into compound blocks. Every fine block is
    // stable with respect to every compound block. Each edge v -> u points at
    // a counter holding |children(v) ∩ X| for the compound block X of u.
    auto reverse = reverse_of(graph);
    RefinablePartition partition(n);

    vector<size_t> counters, counter_of(graph.targets.size());
    for (size_t v = 0 ; v < n ; ++v) {
        auto degree = graph.offsets[v + 1] - graph.offsets[v];
        if (0 == degree)
            continue;
        for (auto e = graph.offsets[v] ; e < graph.offsets[v + 1] ; ++e)
            counter_of[e] = counters.size();
        counters.push_back(degree);
        partition.mark(v);
    }
    partition.split([] (size_t, size_t) { });

    vector<vector<size_t>> compound_blocks(1);
    vector<size_t> compound_of;
    for (size_t b = 0 ; b < partition.block_count() ; ++b) {
        compound_blocks[0].push_back(b);
        compound_of.push_back(0);
    }

    vector<size_t> compound_stack;
    vector<char> on_stack{ 0 };
    if (compound_blocks[0].size() >= 2) {
        compound_stack.push_back(0);
        on_stack[0] = 1;
    }

    auto on_split = [&] (size_t old_block, size_t fresh) {
        auto x = compound_of[old_block];
        compound_of.resize(fresh + 1);
        compound_of[fresh] = x;
        compound_blocks[x].push_back(fresh);
        if (compound_blocks[x].size() == 2 && ! on_stack[x]) {
            on_stack[x] = 1;
            compound_stack.push_back(x);
        }
    };

    vector<size_t> count_in_splitter(n, 0), outer_counter(n), splitter_counter(n);
    vector<size_t> predecessors, splitter_members;

    while (! compound_stack.empty()) {
        auto x = compound_stack.back();
        auto & blocks = compound_blocks[x];
        if (blocks.size() < 2) {
            compound_stack.pop_back();
            on_stack[x] = 0;
            continue;
        }

        size_t which = partition.block_size(blocks[0]) <= partition.block_size(blocks[1]) ? 0 : 1;
        auto splitter = blocks[which];
        blocks[which] = blocks.back();
        blocks.pop_back();
        if (blocks.size() < 2) {
            compound_stack.pop_back();
            on_stack[x] = 0;
        }

        compound_of[splitter] = compound_blocks.size();
        compound_blocks.push_back(vector<size_t>{ splitter });
        on_stack.push_back(0);

        auto members = partition.members(splitter);
        splitter_members.assign(members.begin(), members.end());

        predecessors.clear();
        for (auto u : splitter_members)
            for (auto i = reverse.offsets[u] ; i < reverse.offsets[u + 1] ; ++i) {
                auto e = reverse.edges[i];
                auto v = reverse.sources[e];
                if (0 == count_in_splitter[v]++) {
                    predecessors.push_back(v);
                    outer_counter[v] = counter_of[e];
                }
            }

        // separate pre(S) from the rest ...
        for (auto v : predecessors)
            partition.mark(v);
        partition.split(on_split);

        // ... then pre(S) ∩ pre(X - S) from pre(S) - pre(X - S)
        for (auto v : predecessors)
            if (counters[outer_counter[v]] == count_in_splitter[v])
                partition.mark(v);
        partition.split(on_split);

        for (auto v : predecessors) {
            counters[outer_counter[v]] -= count_in_splitter[v];
            splitter_counter[v] = counters.size();
            counters.push_back(count_in_splitter[v]);
        }
        for (auto u : splitter_members)
            for (auto i = reverse.offsets[u] ; i < reverse.offsets[u + 1] ; ++i) {
                auto e = reverse.edges[i];
                counter_of[e] = splitter_counter[reverse.sources[e]];
            }
        for (auto v : predecessors)
            count_in_splitter[v] = 0;
    }

    return Partition::from_labels(partition.labels());
}
