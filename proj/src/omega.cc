/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/omega.hh>

#include <algorithm>
#include <deque>

using namespace apg;

using std::optional;
using std::set;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

OmegaPresentation::OmegaPresentation(NodeId root, NodeId chain, vector<std::pair<NodeId, SingletonChildren>> singletons) :
    _root(std::move(root)),
    _chain(std::move(chain))
{
    if (! is_valid_name(_chain))
        throw ApgError{ ErrorKind::InvalidName, "'" + _chain + "' is not a valid chain name" };

    auto looks_like_chain_node = [&] (const NodeId & name) {
        return name.size() > _chain.size() && name.starts_with(_chain)
            && std::all_of(name.begin() + _chain.size(), name.end(), [] (char c) { return c >= '0' && c <= '9'; });
    };

    for (auto & [name, children] : singletons) {
        if (! is_valid_name(name))
            throw ApgError{ ErrorKind::InvalidName, "'" + name + "' is not a valid node name" };
        if (looks_like_chain_node(name))
            throw ApgError{ ErrorKind::InvalidName, "'" + name + "' clashes with the chain node names" };
        if (! _children.emplace(name, children).second)
            throw ApgError{ ErrorKind::DuplicateDeclaration, "singleton '" + name + "' declared twice" };
        _singletons.push_back(name);
    }

    if (! _children.contains(_root))
        throw ApgError{ ErrorKind::UndeclaredNode, "root '" + _root + "' is not a singleton" };
    for (auto & [name, children] : _children)
        for (auto & c : children.singletons)
            if (! _children.contains(c))
                throw ApgError{ ErrorKind::UndeclaredNode, "'" + c + "' is a child of '" + name + "' but is never declared" };

    auto reached = reachable_singletons(_root);
    for (auto & s : _singletons)
        if (! reached.contains(s))
            throw ApgError{ ErrorKind::NotAccessible, "singleton '" + s + "' is not reachable from the root" };
    if (reachable_chain(_root).finite())
        throw ApgError{ ErrorKind::NotAccessible, "only finitely many chain nodes are reachable from the root" };
}

auto OmegaPresentation::children_of(string_view singleton) const -> const SingletonChildren &
{
    auto i = _children.find(NodeId{ singleton });
    if (i == _children.end())
        throw ApgError{ ErrorKind::UnknownNode, "no singleton named '" + string{ singleton } + "'" };
    return i->second;
}

auto OmegaPresentation::reachable_singletons(string_view s) const -> set<NodeId>
{
    set<NodeId> seen{ NodeId{ s } };
    std::deque<NodeId> queue{ NodeId{ s } };
    while (! queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto & c : children_of(v).singletons)
            if (seen.insert(c).second)
                queue.push_back(c);
    }
    return seen;
}

auto OmegaPresentation::reachable_chain(string_view s) const -> IndexSet
{
    IndexSet result;
    for (auto & v : reachable_singletons(s))
        result = set_union(result, children_of(v).chain);
    return result;
}

auto apg::make_J() -> OmegaPresentation
{
    IndexSet zero_and_odds{ { 0 }, { Progression{ 1, 2 } } };
    IndexSet evens{ {}, { Progression{ 0, 2 } } };
    return OmegaPresentation{ "r", "b", {
        { "r", SingletonChildren{ { "a", "aprime" }, IndexSet{} } },
        { "a", SingletonChildren{ {}, zero_and_odds } },
        { "aprime", SingletonChildren{ {}, evens } } } };
}

auto apg::make_Q2() -> Apg
{
    return Apg::from_lists("b", { { "b", { "a", "b" } }, { "a", { "a" } } });
}

namespace
{
    /// Either the constant `offset`, or i + offset for a chain index i ≥ lower.
    struct ChainTerm
    {
        bool symbolic;
        long offset;

        auto operator<=> (const ChainTerm &) const = default;
    };

    auto least_value(ChainTerm t, long lower) -> long
    {
        return t.symbolic ? lower + t.offset : t.offset;
    }

    /// Children of b_t: {b_0} at 0, {b_{t-1}, b_t} from 1 on.
    auto chain_children(ChainTerm t, long lower) -> optional<set<ChainTerm>>
    {
        if (! t.symbolic && t.offset == 0)
            return set<ChainTerm>{ t };
        if (least_value(t, lower) < 1)
            return std::nullopt;
        return set<ChainTerm>{ ChainTerm{ t.symbolic, t.offset - 1 }, t };
    }

    /// The witness on the chain: 0 -> 0, t -> t - 1 from 1 on.
    auto shift(ChainTerm t, long lower) -> optional<ChainTerm>
    {
        if (! t.symbolic && t.offset == 0)
            return t;
        if (least_value(t, lower) < 1)
            return std::nullopt;
        return ChainTerm{ t.symbolic, t.offset - 1 };
    }
}

auto apg::chain_shift_is_decoration_like() -> bool
{
    // each region fixes which piece of both definitions applies to every
    // term that arises, so the comparison is between affine expressions
    struct Region
    {
        ChainTerm index;
        long lower;
    };
    const Region regions[] = { { { false, 0 }, 0 }, { { false, 1 }, 0 }, { { true, 0 }, 2 } };

    for (auto & [i, lower] : regions) {
        auto children = chain_children(i, lower);
        auto image = shift(i, lower);
        if (! children || ! image)
            return false;

        set<ChainTerm> mapped;
        for (auto & c : *children) {
            auto m = shift(c, lower);
            if (! m)
                return false;
            mapped.insert(*m);
        }

        auto expected = chain_children(*image, lower);
        if (! expected || mapped != *expected)
            return false;
    }
    return true;
}

auto apg::verify_dhom_symbolic(const OmegaPresentation & p, const SymbolicWitness & w, string_view source, string_view target) -> bool
{
    p.children_of(source);
    p.children_of(target);

    auto image_of = [&] (const NodeId & s) -> const NodeId & {
        auto i = w.singleton_map.find(s);
        if (i == w.singleton_map.end())
            throw ApgError{ ErrorKind::NotTotal, "the witness has no image for singleton '" + s + "'" };
        return i->second;
    };

    auto domain = p.reachable_singletons(source);
    auto codomain = p.reachable_singletons(target);
    for (auto & s : domain)
        image_of(s);

    if (image_of(NodeId{ source }) != target)
        return false;

    for (auto & s : domain) {
        auto & t = image_of(s);
        if (! codomain.contains(t))
            return false;

        auto & from = p.children_of(s);
        auto & to = p.children_of(t);

        set<NodeId> mapped;
        for (auto & c : from.singletons)
            mapped.insert(image_of(c));
        if (mapped != to.singletons)
            return false;

        if (! index_eq(shift_down(from.chain), to.chain))
            return false;
    }

    // the chain nodes below source must map onto exactly the chain nodes
    // below target: b_0..b_m goes onto b_0..b_max(m-1, 0)
    auto below_source = p.reachable_chain(source), below_target = p.reachable_chain(target);
    if (below_source.empty() || below_target.empty()) {
        if (below_source.empty() != below_target.empty())
            return false;
    }
    else if (below_source.finite() != below_target.finite())
        return false;
    else if (below_source.finite()) {
        auto m = *below_source.max();
        if ((m == 0 ? 0 : m - 1) != *below_target.max())
            return false;
    }

    return below_source.empty() || chain_shift_is_decoration_like();
}

auto apg::truncate(const OmegaPresentation & p, Index n) -> Apg
{
    auto & singletons = p.singletons();
    vector<NodeId> names = singletons;
    std::map<NodeId, size_t> index;
    for (size_t i = 0 ; i < singletons.size() ; ++i)
        index.emplace(singletons[i], i);

    auto chain_base = singletons.size();
    for (Index i = 0 ; i <= n ; ++i)
        names.push_back(p.chain_node(i));

    vector<vector<size_t>> children(names.size());
    for (size_t s = 0 ; s < singletons.size() ; ++s) {
        auto & c = p.children_of(singletons[s]);
        for (auto & t : c.singletons)
            children[s].push_back(index.at(t));
        for (auto i : c.chain.members_up_to(n))
            children[s].push_back(chain_base + i);
    }
    children[chain_base].push_back(chain_base);
    for (Index i = 1 ; i <= n ; ++i) {
        children[chain_base + i].push_back(chain_base + i - 1);
        children[chain_base + i].push_back(chain_base + i);
    }

    return Apg{ std::move(names), children, index.at(p.root()) };
}

auto apg::describe(const OmegaPresentation & p) -> string
{
    auto & b = p.chain();
    string result = "omega v1\npoint " + p.root() + "\nchain " + b + ": " + b + "0 -> " + b + "0; "
        + b + "(i+1) -> " + b + "(i) " + b + "(i+1)";
    for (auto & s : p.singletons()) {
        auto & c = p.children_of(s);
        result += "\n" + s + ":";
        for (auto & t : c.singletons)
            result += " " + t;
        if (! c.chain.empty())
            result += " " + b + "[" + c.chain.to_string() + "]";
    }
    return result;
}

auto apg::gallery_names() -> vector<string>
{
    return { "omega-J", "Q2", "omega1", "omega2", "vee" };
}

auto apg::finite_gallery_item(string_view name) -> optional<Apg>
{
    if (name == "Q2")
        return make_Q2();
    if (name == "omega1")
        return Apg::from_lists("x", { { "x", { "x" } } });
    if (name == "omega2")
        return Apg::from_lists("a", { { "a", { "b" } }, { "b", { "a" } } });
    if (name == "vee")
        return Apg::from_lists("p", { { "p", { "a", "b" } }, { "a", {} }, { "b", {} } });
    return std::nullopt;
}
