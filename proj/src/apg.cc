/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/apg.hh>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

using namespace apg;

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    auto split_words(string_view s) -> vector<string_view>
    {
        vector<string_view> result;
        size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                ++i;
            size_t j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t')
                ++j;
            if (j > i)
                result.push_back(s.substr(i, j - i));
            i = j;
        }
        return result;
    }

    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        while (! s.empty() && (s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        return s;
    }

    auto syntax_error(size_t line, const string & what) -> ApgError
    {
        return ApgError{ ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what };
    }
}

auto apg::is_valid_name(string_view name) -> bool
{
    return ! name.empty() && std::all_of(name.begin(), name.end(), [] (char c) {
            return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
            });
}

Apg::Apg(vector<NodeId> names, const vector<vector<size_t>> & children, size_t point) :
    _names(std::move(names)),
    _point(point)
{
    if (_names.empty())
        throw ApgError{ ErrorKind::Syntax, "a graph needs at least one node" };
    if (children.size() != _names.size())
        throw std::invalid_argument{ "children list does not match node list" };
    if (_point >= _names.size())
        throw ApgError{ ErrorKind::UndeclaredNode, "point is not a node" };

    _index.reserve(_names.size());
    for (size_t v = 0 ; v < _names.size() ; ++v) {
        if (! is_valid_name(_names[v]))
            throw ApgError{ ErrorKind::InvalidName, "'" + _names[v] + "' is not a valid node name" };
        if (! _index.emplace(_names[v], v).second)
            throw ApgError{ ErrorKind::DuplicateDeclaration, "node '" + _names[v] + "' declared twice" };
    }

    _offsets.reserve(_names.size() + 1);
    _offsets.push_back(0);
    for (size_t v = 0 ; v < _names.size() ; ++v) {
        size_t begin = _targets.size();
        for (auto c : children[v]) {
            if (c >= _names.size())
                throw ApgError{ ErrorKind::UndeclaredNode, "child of '" + _names[v] + "' is not a node" };
            _targets.push_back(c);
        }
        std::sort(_targets.begin() + begin, _targets.end());
        if (std::adjacent_find(_targets.begin() + begin, _targets.end()) != _targets.end())
            throw ApgError{ ErrorKind::DuplicateChild, "node '" + _names[v] + "' lists a child twice" };
        _offsets.push_back(_targets.size());
    }

    auto seen = reachable_from(*this, _point);
    for (size_t v = 0 ; v < _names.size() ; ++v)
        if (! seen[v])
            throw ApgError{ ErrorKind::NotAccessible, "node '" + _names[v] + "' is not reachable from the point" };
}

auto Apg::from_lists(const NodeId & point, const vector<pair<NodeId, vector<NodeId>>> & nodes) -> Apg
{
    vector<NodeId> names;
    std::unordered_map<string_view, size_t> index;
    for (auto & [name, _] : nodes) {
        if (! index.emplace(name, names.size()).second)
            throw ApgError{ ErrorKind::DuplicateDeclaration, "node '" + name + "' declared twice" };
        names.push_back(name);
    }

    vector<vector<size_t>> children(nodes.size());
    for (size_t v = 0 ; v < nodes.size() ; ++v)
        for (auto & c : nodes[v].second) {
            auto i = index.find(c);
            if (i == index.end())
                throw ApgError{ ErrorKind::UndeclaredNode, "'" + c + "' is a child of '" + nodes[v].first + "' but is never declared" };
            children[v].push_back(i->second);
        }

    auto p = index.find(point);
    if (p == index.end())
        throw ApgError{ ErrorKind::UndeclaredNode, "point '" + point + "' is never declared" };

    return Apg{ std::move(names), children, p->second };
}

auto Apg::has_edge(size_t from, size_t to) const -> bool
{
    auto c = children(from);
    return std::binary_search(c.begin(), c.end(), to);
}

auto Apg::find(string_view name) const -> optional<size_t>
{
    auto i = _index.find(NodeId{ name });
    if (i == _index.end())
        return std::nullopt;
    return i->second;
}

auto Apg::index_of(string_view name) const -> size_t
{
    auto i = find(name);
    if (! i)
        throw ApgError{ ErrorKind::UnknownNode, "no node named '" + string{ name } + "'" };
    return *i;
}

auto Apg::lexicographic_order() const -> vector<size_t>
{
    vector<size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&] (size_t a, size_t b) { return _names[a] < _names[b]; });
    return order;
}

auto Apg::children_names(size_t v) const -> vector<NodeId>
{
    vector<NodeId> result;
    for (auto c : children(v))
        result.push_back(_names[c]);
    std::sort(result.begin(), result.end());
    return result;
}

namespace apg
{
    auto operator== (const Apg & g, const Apg & h) -> bool
    {
        if (g.size() != h.size() || g.edge_count() != h.edge_count() || g.name(g.point()) != h.name(h.point()))
            return false;

        for (size_t v = 0 ; v < g.size() ; ++v) {
            auto w = h.find(g.name(v));
            if (! w || g.children_names(v) != h.children_names(*w))
                return false;
        }
        return true;
    }
}

auto apg::reachable_from(const Apg & g, size_t v) -> vector<bool>
{
    vector<bool> seen(g.size(), false);
    vector<size_t> stack{ v };
    seen[v] = true;
    while (! stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto c : g.children(u))
            if (! seen[c]) {
                seen[c] = true;
                stack.push_back(c);
            }
    }
    return seen;
}

auto apg::parse_apg(string_view text) -> Apg
{
    vector<string_view> lines;
    for (size_t start = 0 ; start <= text.size() ; ) {
        auto end = text.find('\n', start);
        if (end == string_view::npos)
            end = text.size();
        auto line = text.substr(start, end - start);
        if (! line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }

    // only trailing blank lines are tolerated
    while (! lines.empty() && trim(lines.back()).empty())
        lines.pop_back();

    if (lines.empty() || trim(lines[0]) != "apg v1")
        throw syntax_error(1, "expected header 'apg v1'");
    if (lines.size() < 2)
        throw syntax_error(2, "expected 'point <name>'");

    auto point_words = split_words(lines[1]);
    if (point_words.size() != 2 || point_words[0] != "point" || ! is_valid_name(point_words[1]))
        throw syntax_error(2, "expected 'point <name>'");

    vector<pair<NodeId, vector<NodeId>>> nodes;
    std::set<string_view> declared;
    for (size_t l = 2 ; l < lines.size() ; ++l) {
        auto line = lines[l];
        auto colon = line.find(':');
        if (colon == string_view::npos)
            throw syntax_error(l + 1, "expected '<name>: <children>'");

        auto name = trim(line.substr(0, colon));
        if (! is_valid_name(name))
            throw syntax_error(l + 1, "bad node name '" + string{ name } + "'");
        if (! declared.insert(name).second)
            throw ApgError{ ErrorKind::DuplicateDeclaration, "line " + std::to_string(l + 1) + ": node '" + string{ name } + "' declared twice" };

        vector<NodeId> children;
        std::set<string_view> seen_children;
        for (auto w : split_words(line.substr(colon + 1))) {
            if (! is_valid_name(w))
                throw syntax_error(l + 1, "bad child name '" + string{ w } + "'");
            if (! seen_children.insert(w).second)
                throw ApgError{ ErrorKind::DuplicateChild, "line " + std::to_string(l + 1) + ": child '" + string{ w } + "' listed twice" };
            children.emplace_back(w);
        }
        nodes.emplace_back(NodeId{ name }, std::move(children));
    }

    return Apg::from_lists(NodeId{ point_words[1] }, nodes);
}

auto apg::serialize_apg(const Apg & g) -> string
{
    auto order = g.lexicographic_order();
    std::stable_partition(order.begin(), order.end(), [&] (size_t v) { return v == g.point(); });

    string result = "apg v1\npoint " + g.name(g.point());
    for (auto v : order) {
        result += "\n" + g.name(v) + ":";
        for (auto & c : g.children_names(v))
            result += " " + c;
    }
    return result;
}

auto apg::descendant_subgraph(const Apg & g, string_view a) -> Apg
{
    return descendant_subgraph(g, g.index_of(a));
}

auto apg::descendant_subgraph(const Apg & g, size_t a) -> Apg
{
    if (a >= g.size())
        throw ApgError{ ErrorKind::UnknownNode, "node index out of range" };

    auto seen = reachable_from(g, a);
    vector<size_t> renumber(g.size(), 0);
    vector<NodeId> names;
    for (size_t v = 0 ; v < g.size() ; ++v)
        if (seen[v]) {
            renumber[v] = names.size();
            names.push_back(g.name(v));
        }

    vector<vector<size_t>> children(names.size());
    for (size_t v = 0 ; v < g.size() ; ++v)
        if (seen[v])
            for (auto c : g.children(v))
                children[renumber[v]].push_back(renumber[c]);

    return Apg{ std::move(names), children, renumber[a] };
}

auto apg::to_dot(const Apg & g) -> string
{
    std::ostringstream out;
    out << "digraph apg {\n";
    auto order = g.lexicographic_order();
    for (auto v : order)
        out << "    \"" << g.name(v) << "\" [shape=" << (v == g.point() ? "doublecircle" : "circle") << "];\n";
    for (auto v : order)
        for (auto & c : g.children_names(v))
            out << "    \"" << g.name(v) << "\" -> \"" << c << "\";\n";
    out << "}\n";
    return out.str();
}
