/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef APG_GUARD_INDEX_SET_HH
#define APG_GUARD_INDEX_SET_HH 1

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace apg
{
    using Index = std::uint64_t;

    /// {start, start + period, start + 2 period, ...}
    struct Progression
    {
        Index start;
        Index period;

        friend auto operator<=> (const Progression &, const Progression &) = default;
    };

    /**
     * An ultimately periodic set of naturals: a finite base plus finitely
     * many arithmetic progressions.
     *
     * Values are kept in normal form. With P the least eventual period and t
     * the least threshold from which n ∈ S ⟺ n + P ∈ S, the base is
     * S ∩ [0, t) and there is one progression (r, P) for every
     * r ∈ S ∩ [t, t + P). Equal sets have equal normal forms.
     */
    class IndexSet
    {
        private:
            std::set<Index> _base;
            std::vector<Progression> _progressions;

        public:
            /// The empty set.
            IndexSet() = default;

            /// Throws std::invalid_argument on a zero period.
            IndexSet(std::set<Index> base, std::vector<Progression> progressions);

            static auto naturals() -> IndexSet;

            auto base() const -> const std::set<Index> &
            {
                return _base;
            }

            auto progressions() const -> const std::vector<Progression> &
            {
                return _progressions;
            }

            auto contains(Index n) const -> bool;

            auto empty() const -> bool
            {
                return _base.empty() && _progressions.empty();
            }

            auto finite() const -> bool
            {
                return _progressions.empty();
            }

            /// Largest member of a finite non-empty set.
            auto max() const -> std::optional<Index>;

            /// Members not exceeding n, ascending.
            auto members_up_to(Index n) const -> std::vector<Index>;

            /// e.g. "{0} | 1+2k", "{}", "0+1k".
            auto to_string() const -> std::string;

            friend auto operator== (const IndexSet &, const IndexSet &) -> bool = default;
    };

    /// Image under the chain map 0 -> 0, i + 1 -> i.
    auto shift_down(const IndexSet & s) -> IndexSet;

    auto set_union(const IndexSet & s, const IndexSet & t) -> IndexSet;

    /// Semantic equality by direct comparison up to the common period
    /// horizon; does not rely on the normal form.
    auto index_eq(const IndexSet & s, const IndexSet & t) -> bool;
}

#endif
