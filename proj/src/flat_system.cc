/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/constructions.hh>

using namespace apg;

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    auto trim(string_view s) -> string_view
    {
        auto first = s.find_first_not_of(" \t\r");
        if (first == string_view::npos)
            return {};
        auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }

    auto syntax_error(size_t line, const string & what) -> ApgError
    {
        return ApgError{ ErrorKind::Syntax, "line " + std::to_string(line) + ": " + what };
    }

    /// Splits the inside of a braced list at top-level commas.
    auto split_terms(string_view inner, size_t line) -> vector<string_view>
    {
        vector<string_view> result;
        if (trim(inner).empty())
            return result;

        int depth = 0;
        size_t start = 0;
        for (size_t i = 0 ; i < inner.size() ; ++i) {
            if (inner[i] == '{')
                ++depth;
            else if (inner[i] == '}') {
                if (--depth < 0)
                    throw syntax_error(line, "unbalanced braces");
            }
            else if (inner[i] == ',' && 0 == depth) {
                result.push_back(trim(inner.substr(start, i - start)));
                start = i + 1;
            }
        }
        if (depth != 0)
            throw syntax_error(line, "unbalanced braces");
        result.push_back(trim(inner.substr(start)));
        return result;
    }
}

auto apg::parse_flat_system(string_view text) -> FlatSystem
{
    FlatSystem result;
    size_t line_number = 0;
    for (size_t start = 0 ; start <= text.size() ; ) {
        auto end = text.find('\n', start);
        if (end == string_view::npos)
            end = text.size();
        auto line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_number;

        if (line.empty())
            continue;

        if ((line.starts_with("root ") || line.starts_with("root\t")) && line.find('=') == string_view::npos) {
            auto var = trim(line.substr(5));
            if (! is_valid_name(var))
                throw syntax_error(line_number, "bad root variable '" + string{ var } + "'");
            if (result.root)
                throw syntax_error(line_number, "more than one root line");
            result.root = NodeId{ var };
            continue;
        }

        auto eq = line.find('=');
        if (eq == string_view::npos)
            throw syntax_error(line_number, "expected '<var> = { ... }' or 'root <var>'");
        auto var = trim(line.substr(0, eq));
        if (! is_valid_name(var))
            throw syntax_error(line_number, "bad variable name '" + string{ var } + "'");

        auto rhs = trim(line.substr(eq + 1));
        if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}')
            throw syntax_error(line_number, "right side must be a braced list");

        vector<FlatTerm> terms;
        for (auto t : split_terms(rhs.substr(1, rhs.size() - 2), line_number)) {
            if (t.empty())
                throw syntax_error(line_number, "empty term");
            if (t.front() == '{')
                terms.push_back(FlatTerm{ parse_set_literal(t) });
            else if (is_valid_name(t))
                terms.push_back(FlatTerm{ NodeId{ t } });
            else
                throw syntax_error(line_number, "bad term '" + string{ t } + "'");
        }

        if (! result.equations.emplace(NodeId{ var }, std::move(terms)).second)
            throw ApgError{ ErrorKind::DuplicateDeclaration, "line " + std::to_string(line_number) + ": '" + string{ var } + "' defined twice" };
    }
    return result;
}
