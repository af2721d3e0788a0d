/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/index_set.hh>

#include "generators.hh"
#include "oracles.hh"

#include <doctest.h>

#include <ostream>
#include <stdexcept>

using namespace apg;

using std::set;
using std::vector;

namespace
{
    const IndexSet odds{ {}, { { 1, 2 } } };
    const IndexSet evens{ {}, { { 0, 2 } } };
    const IndexSet zero_and_odds{ { 0 }, { { 1, 2 } } };

    /// Bits 0..255 are exact for the shifted set.
    auto low(const oracle::Bits & b) -> oracle::Bits
    {
        auto r = b;
        r.reset(256);
        return r;
    }

    auto random_set(gen::Rng & rng) -> std::pair<set<Index>, vector<Progression>>
    {
        std::uniform_int_distribution<Index> small{ 0, 20 }, period{ 1, 6 }, count{ 0, 3 };
        set<Index> base;
        for (auto i = count(rng) ; i > 0 ; --i)
            base.insert(small(rng));
        vector<Progression> progressions;
        for (auto i = count(rng) ; i > 0 ; --i)
            progressions.push_back(Progression{ small(rng), period(rng) });
        return { base, progressions };
    }
}

TEST_CASE("shift down examples")
{
    CHECK(shift_down(IndexSet::naturals()) == IndexSet::naturals());
    CHECK(shift_down(zero_and_odds) == evens);
    CHECK(shift_down(evens) == zero_and_odds);
    CHECK(shift_down(shift_down(zero_and_odds)) == zero_and_odds);
    CHECK(shift_down(IndexSet{ { 1 }, {} }) == IndexSet{ { 0 }, {} });
    CHECK(shift_down(IndexSet{ { 0, 1, 5 }, {} }) == IndexSet{ { 0, 4 }, {} });
    CHECK(shift_down(IndexSet{}).empty());

    CHECK(oracle::shift_down(oracle::bits_of(zero_and_odds)) .count() > 0);
    for (Index n = 0 ; n <= 64 ; ++n) {
        CHECK(shift_down(zero_and_odds).contains(n) == oracle::shift_down(oracle::bits_of(zero_and_odds))[n]);
        CHECK(shift_down(evens).contains(n) == oracle::shift_down(oracle::bits_of(evens))[n]);
    }
}

TEST_CASE("equality examples")
{
    CHECK(index_eq(odds, odds));
    CHECK(! index_eq(odds, evens));

    IndexSet late_odds{ { 1, 3 }, { { 5, 2 } } };
    CHECK(index_eq(late_odds, odds));
    CHECK(late_odds == odds);
    for (Index n = 0 ; n <= 64 ; ++n)
        CHECK(late_odds.contains(n) == odds.contains(n));
}

TEST_CASE("normal form")
{
    CHECK(evens.base().empty());
    CHECK(evens.progressions() == vector<Progression>{ { 0, 2 } });
    // {0} ∪ evens is just evens
    CHECK(IndexSet{ { 0 }, { { 0, 2 } } } == evens);
    // two interleaved progressions are all of ℕ from 3
    IndexSet merged{ { 0 }, { { 3, 2 }, { 4, 2 } } };
    CHECK(merged.base() == set<Index>{ 0 });
    CHECK(merged.progressions() == vector<Progression>{ { 3, 1 } });
    CHECK(IndexSet{ { 0, 1, 2 }, { { 3, 1 } } } == IndexSet::naturals());

    CHECK_THROWS_AS((IndexSet{ {}, { { 0, 0 } } }), std::invalid_argument);
}

TEST_CASE("printing and queries")
{
    CHECK(IndexSet{}.to_string() == "{}");
    CHECK(zero_and_odds.to_string() == "{0} | 1+2k");
    CHECK(evens.to_string() == "0+2k");
    CHECK(IndexSet{ { 2, 5 }, {} }.to_string() == "{2,5}");
    CHECK(IndexSet::naturals().to_string() == "0+1k");

    CHECK(IndexSet{ { 2, 5 }, {} }.max() == 5);
    CHECK(! evens.max());
    CHECK(! IndexSet{}.max());
    CHECK(zero_and_odds.members_up_to(3) == vector<Index>{ 0, 1, 3 });
    CHECK(evens.members_up_to(3) == vector<Index>{ 0, 2 });
    CHECK(! evens.finite());
    CHECK(IndexSet{ { 4 }, {} }.finite());
}

TEST_CASE("index set algebra against bit vectors")
{
    gen::Rng rng{ 51 };
    for (int i = 0 ; i < 2000 ; ++i) {
        auto [b1, p1] = random_set(rng);
        auto [b2, p2] = random_set(rng);
        IndexSet s{ b1, p1 }, t{ b2, p2 };
        auto sb = oracle::bits_of(b1, p1), tb = oracle::bits_of(b2, p2);

        CHECK(oracle::bits_of(s) == sb);
        CHECK(oracle::bits_of(set_union(s, t)) == (sb | tb));
        CHECK(low(oracle::bits_of(shift_down(s))) == low(oracle::shift_down(sb)));

        // horizons stay far below 256, so the window decides equality
        CHECK(index_eq(s, t) == (sb == tb));
        CHECK((s == t) == (sb == tb));
        CHECK(index_eq(s, IndexSet{ s.base(), s.progressions() }));
        CHECK(s.finite() == p1.empty());
        CHECK(s.empty() == sb.none());
    }
}

TEST_CASE("normal form is unique")
{
    gen::Rng rng{ 52 };
    for (int i = 0 ; i < 1000 ; ++i) {
        auto [b, p] = random_set(rng);
        IndexSet s{ b, p };

        // the same set, written with a doubled period and explicit members
        vector<Progression> doubled;
        for (auto & q : p) {
            doubled.push_back(Progression{ q.start, 2 * q.period });
            doubled.push_back(Progression{ q.start + q.period, 2 * q.period });
        }
        set<Index> more = b;
        for (Index n = 0 ; n < 30 ; ++n)
            if (s.contains(n))
                more.insert(n);
        CHECK(IndexSet{ more, doubled } == s);
        CHECK(IndexSet{ s.base(), s.progressions() } == s);
    }
}
