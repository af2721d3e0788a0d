/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_SET_LITERAL_HH
#define APG_GUARD_SET_LITERAL_HH 1

#include <apg/apg.hh>

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace apg
{
    /**
     * A hereditarily finite, well-founded set. Values are immutable and share
     * structure. The canonical text ("{}", "{{}}", "{{},{{}}}", ...) sorts
     * elements by their own canonical text and drops repeats, so two literals
     * denote the same set iff their texts are equal.
     */
    class SetLiteral
    {
        public:
            struct Rep;

        private:
            std::shared_ptr<const Rep> _rep;

            explicit SetLiteral(std::shared_ptr<const Rep> rep);

        public:
            /// The empty set.
            SetLiteral();

            /// The set of the given elements; order and repeats do not matter.
            static auto of(std::vector<SetLiteral> elements) -> SetLiteral;

            auto elements() const -> const std::vector<SetLiteral> &;
            auto text() const -> const std::string &;
            auto hash() const -> std::size_t;

            /// Von Neumann rank: 0 for the empty set.
            auto rank() const -> std::size_t;

            auto empty() const -> bool
            {
                return elements().empty();
            }

            friend auto operator== (const SetLiteral & a, const SetLiteral & b) -> bool;
            friend auto operator<=> (const SetLiteral & a, const SetLiteral & b) -> std::strong_ordering;
    };

    /// Accepts braces and commas with optional whitespace, e.g. "{ {}, {{}} }".
    auto parse_set_literal(std::string_view text) -> SetLiteral;

    using Decoration = std::map<NodeId, SetLiteral>;

    /// The unique decoration of a well-founded graph. Throws CyclicGraph.
    auto decorate_wf(const Apg & g) -> Decoration;

    /// trcl({x}) with parent -> member edges, pointed at x. Nodes are named
    /// s0, s1, ... in order of (rank, canonical text), so the empty set is s0.
    auto canonical_picture(const SetLiteral & x) -> Apg;

    auto is_picture_of(const Apg & g, const SetLiteral & x) -> bool;
}

template <>
struct std::hash<apg::SetLiteral>
{
    auto operator() (const apg::SetLiteral & s) const noexcept -> std::size_t
    {
        return s.hash();
    }
};

#endif
