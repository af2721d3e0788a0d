/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/set_literal.hh>

#include <algorithm>
#include <unordered_map>

using namespace apg;

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

struct SetLiteral::Rep
{
    vector<SetLiteral> elements;
    string text;
    size_t hash;
    size_t rank;
};

namespace
{
    auto empty_rep() -> const std::shared_ptr<const SetLiteral::Rep> &
    {
        static const std::shared_ptr<const SetLiteral::Rep> rep = std::make_shared<const SetLiteral::Rep>(
                SetLiteral::Rep{ {}, "{}", std::hash<string>{}("{}"), 0 });
        return rep;
    }
}

SetLiteral::SetLiteral(std::shared_ptr<const Rep> rep) :
    _rep(std::move(rep))
{
}

SetLiteral::SetLiteral() :
    _rep(empty_rep())
{
}

auto SetLiteral::of(vector<SetLiteral> elements) -> SetLiteral
{
    if (elements.empty())
        return SetLiteral{};

    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    string text = "{";
    size_t rank = 0;
    for (size_t i = 0 ; i < elements.size() ; ++i) {
        if (i != 0)
            text += ',';
        text += elements[i].text();
        rank = std::max(rank, elements[i].rank() + 1);
    }
    text += '}';

    auto hash = std::hash<string>{}(text);
    return SetLiteral{ std::make_shared<const Rep>(Rep{ std::move(elements), std::move(text), hash, rank }) };
}

auto SetLiteral::elements() const -> const vector<SetLiteral> &
{
    return _rep->elements;
}

auto SetLiteral::text() const -> const string &
{
    return _rep->text;
}

auto SetLiteral::hash() const -> size_t
{
    return _rep->hash;
}

auto SetLiteral::rank() const -> size_t
{
    return _rep->rank;
}

namespace apg
{
    auto operator== (const SetLiteral & a, const SetLiteral & b) -> bool
    {
        return a._rep == b._rep || (a._rep->hash == b._rep->hash && a._rep->text == b._rep->text);
    }
}

namespace apg
{
    auto operator<=> (const SetLiteral & a, const SetLiteral & b) -> std::strong_ordering
    {
        if (a._rep == b._rep)
            return std::strong_ordering::equal;
        return a._rep->text <=> b._rep->text;
    }
}

namespace
{
    struct LiteralParser
    {
        string_view text;
        size_t pos = 0;

        auto skip_space() -> void
        {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
                ++pos;
        }

        auto fail(const string & what) -> ApgError
        {
            return ApgError{ ErrorKind::Syntax, "set literal at offset " + std::to_string(pos) + ": " + what };
        }

        auto expect(char c) -> void
        {
            skip_space();
            if (pos >= text.size() || text[pos] != c)
                throw fail(string{ "expected '" } + c + "'");
            ++pos;
        }

        auto parse() -> SetLiteral
        {
            expect('{');
            vector<SetLiteral> elements;
            skip_space();
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                return SetLiteral{};
            }
            while (true) {
                elements.push_back(parse());
                skip_space();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                expect('}');
                break;
            }
            return SetLiteral::of(std::move(elements));
        }
    };
}

auto apg::parse_set_literal(string_view text) -> SetLiteral
{
    LiteralParser parser{ text };
    auto result = parser.parse();
    parser.skip_space();
    if (parser.pos != text.size())
        throw parser.fail("trailing characters");
    return result;
}

auto apg::decorate_wf(const Apg & g) -> Decoration
{
    // iterative post-order; a grey node met again means a cycle
    enum class Colour { White, Grey, Black };
    vector<Colour> colour(g.size(), Colour::White);
    vector<SetLiteral> value(g.size());

    vector<std::pair<size_t, size_t>> stack;
    for (size_t root = 0 ; root < g.size() ; ++root) {
        if (colour[root] != Colour::White)
            continue;
        stack.emplace_back(root, 0);
        colour[root] = Colour::Grey;
        while (! stack.empty()) {
            auto & [v, next] = stack.back();
            auto children = g.children(v);
            if (next < children.size()) {
                auto c = children[next++];
                if (colour[c] == Colour::Grey)
                    throw ApgError{ ErrorKind::CyclicGraph, "node '" + g.name(c) + "' lies on a cycle, so no well-founded decoration exists" };
                if (colour[c] == Colour::White) {
                    colour[c] = Colour::Grey;
                    stack.emplace_back(c, 0);
                }
            }
            else {
                vector<SetLiteral> elements;
                elements.reserve(children.size());
                for (auto c : children)
                    elements.push_back(value[c]);
                value[v] = SetLiteral::of(std::move(elements));
                colour[v] = Colour::Black;
                stack.pop_back();
            }
        }
    }

    Decoration result;
    for (size_t v = 0 ; v < g.size() ; ++v)
        result.emplace(g.name(v), value[v]);
    return result;
}

auto apg::canonical_picture(const SetLiteral & x) -> Apg
{
    vector<SetLiteral> members;
    std::unordered_map<SetLiteral, size_t> seen;
    vector<SetLiteral> stack{ x };
    seen.emplace(x, 0);
    while (! stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        members.push_back(s);
        for (auto & e : s.elements())
            if (seen.emplace(e, 0).second)
                stack.push_back(e);
    }

    std::sort(members.begin(), members.end(), [] (const SetLiteral & a, const SetLiteral & b) {
            return a.rank() != b.rank() ? a.rank() < b.rank() : a < b;
            });
    for (size_t i = 0 ; i < members.size() ; ++i)
        seen[members[i]] = i;

    vector<NodeId> names;
    vector<vector<size_t>> children(members.size());
    for (size_t i = 0 ; i < members.size() ; ++i) {
        names.push_back("s" + std::to_string(i));
        for (auto & e : members[i].elements())
            children[i].push_back(seen.at(e));
    }

    return Apg{ std::move(names), children, seen.at(x) };
}

auto apg::is_picture_of(const Apg & g, const SetLiteral & x) -> bool
{
    return decorate_wf(g).at(g.name(g.point())) == x;
}
