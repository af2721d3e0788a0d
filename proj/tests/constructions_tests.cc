/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <apg/constructions.hh>
#include <apg/extensionality.hh>
#include <apg/relations.hh>
#include <apg/set_literal.hh>

#include "generators.hh"
#include "oracles.hh"

#include <doctest.h>

using namespace apg;

using std::size_t;
using std::string;

namespace
{
    const auto empty_set = parse_apg("apg v1\npoint p\np:");
    const auto omega = parse_apg("apg v1\npoint x\nx: x");
    const auto two_cycle = parse_apg("apg v1\npoint a\na: b\nb: a");
    const auto q2 = parse_apg("apg v1\npoint b\nb: a b\na: a");
    const auto vee = parse_apg("apg v1\npoint p\np: a b\na:\nb:");

    auto kind_of(auto && f) -> std::optional<ErrorKind>
    {
        try {
            f();
        }
        catch (const ApgError & e) {
            return e.kind();
        }
        return std::nullopt;
    }

    auto solve(const string & text) -> Apg
    {
        return solve_flat_system(parse_flat_system(text));
    }
}

TEST_CASE("afa collapse examples")
{
    CHECK(collapse_afa(empty_set) == empty_set);
    CHECK(serialize_apg(collapse_afa(two_cycle)) == "apg v1\npoint a\na: a");
    CHECK(serialize_apg(collapse_afa(vee)) == "apg v1\npoint p\np: a\na:");
    CHECK(serialize_apg(collapse_afa(q2)) == "apg v1\npoint a\na: a");

    auto q = collapse_afa_with_map(two_cycle);
    CHECK(q.map == NodeMap{ { "a", "a" }, { "b", "a" } });
    CHECK(verify_dhom(two_cycle, q.graph, q.map));
}

TEST_CASE("iterated collapse examples")
{
    CHECK(collapse_iter(q2, Relation::Iso) == q2);
    CHECK(collapse_iter(q2, Relation::Scott) == q2);
    CHECK(collapse_iter(q2, Relation::Finsler) == q2);

    CHECK(serialize_apg(collapse_iter(two_cycle, Relation::Finsler)) == "apg v1\npoint a\na: a");

    auto mixed = parse_apg("apg v1\npoint r\nr: x u\nx: x\nu: v\nv: u");
    // x, u and v merge first; then r has the loop as its only child and
    // unfolds to the same path
    auto q = collapse_iter_with_map(mixed, Relation::Scott);
    CHECK(serialize_apg(q.graph) == "apg v1\npoint r\nr: r");
    CHECK(q.map == NodeMap{ { "r", "r" }, { "u", "r" }, { "v", "r" }, { "x", "r" } });
    CHECK(verify_dhom(mixed, q.graph, q.map));
}

TEST_CASE("afa collapse properties on random graphs")
{
    gen::Rng rng{ 41 };
    for (int i = 0 ; i < 300 ; ++i) {
        auto g = gen::random_apg(rng, 10);
        auto q = collapse_afa_with_map(g);
        CHECK(q.graph == collapse_afa(g));
        CHECK(collapse_afa(q.graph) == q.graph);
        CHECK(verify_dhom(g, q.graph, q.map));
        CHECK(! is_ext_wrt(q.graph, Relation::Bisim));
        CHECK(oracle::greatest_bisimulation(g, q.graph)[g.point()][q.graph.point()]);

        // one node per bisimulation class
        auto labels = oracle::bisim_labels(g);
        CHECK(q.graph.size() == std::set<size_t>(labels.begin(), labels.end()).size());
    }
}

TEST_CASE("iterated collapse properties on random graphs")
{
    gen::Rng rng{ 42 };
    for (int i = 0 ; i < 120 ; ++i) {
        auto g = gen::random_apg(rng, 8);
        for (auto r : { Relation::Iso, Relation::Finsler, Relation::Scott, Relation::Bisim, Relation::MutualDhom }) {
            CAPTURE(relation_name(r));
            auto q = collapse_iter_with_map(g, r);
            CHECK(! is_ext_wrt(q.graph, r));
            CHECK(verify_dhom(g, q.graph, q.map));
            CHECK(collapse_iter(q.graph, r) == q.graph);
        }
    }
}

TEST_CASE("bisimulation products")
{
    NodeMap id;
    PairRelation diagonal;
    for (auto & n : q2.names()) {
        id.emplace(n, n);
        diagonal.emplace(n, n);
    }
    auto self = product_bisim(q2, q2, diagonal);
    CHECK(isomorphic(self.graph, q2));
    CHECK(serialize_apg(self.graph) == "apg v1\npoint b_b\nb_b: a_a b_b\na_a: a_a");
    CHECK(self.left == NodeMap{ { "a_a", "a" }, { "b_b", "b" } });
    CHECK(self.right == self.left);

    auto mixed = product_bisim(omega, two_cycle, { { "x", "a" }, { "x", "b" } });
    CHECK(serialize_apg(mixed.graph) == "apg v1\npoint x_a\nx_a: x_b\nx_b: x_a");
    CHECK(verify_dhom(mixed.graph, omega, mixed.left));
    CHECK(verify_dhom(mixed.graph, two_cycle, mixed.right));

    CHECK(kind_of([] { product_bisim(omega, empty_set, { { "x", "p" } }); }) == ErrorKind::NotABisimulation);

    // names with underscores fall back to numbered pairs
    auto underscored = parse_apg("apg v1\npoint x_1\nx_1: x_1");
    auto p = product_bisim(underscored, omega, { { "x_1", "x" } });
    CHECK(serialize_apg(p.graph) == "apg v1\npoint q0\nq0: q0");
}

TEST_CASE("joinability")
{
    CHECK(joinable(q2, q2));
    auto j = joinable(omega, two_cycle);
    REQUIRE(j);
    CHECK(serialize_apg(j->graph) == "apg v1\npoint x_a\nx_a: x_b\nx_b: x_a");
    CHECK(! joinable(omega, empty_set));

    gen::Rng rng{ 43 };
    for (int i = 0 ; i < 300 ; ++i) {
        auto [g, h] = gen::random_pair(rng, 8);
        auto p = joinable(g, h);
        CHECK(p.has_value() == oracle::greatest_bisimulation(g, h)[g.point()][h.point()]);
        if (p) {
            CHECK(verify_dhom(p->graph, g, p->left));
            CHECK(verify_dhom(p->graph, h, p->right));
        }
    }
}

TEST_CASE("bounded unfolding")
{
    CHECK(unfold_depth(q2, 0).size() == 1);
    CHECK(serialize_apg(unfold_depth(omega, 3)) == "apg v1\npoint t\nt: t_0\nt_0: t_0_0\nt_0_0: t_0_0_0\nt_0_0_0:");
    CHECK(unfold_depth(two_cycle, 3) == unfold_depth(omega, 3));
    CHECK(serialize_apg(unfold_depth(q2, 2)) == "apg v1\npoint t\nt: t_0 t_1\nt_0: t_0_0\nt_0_0:\nt_1: t_1_0 t_1_1\nt_1_0:\nt_1_1:");

    gen::Rng rng{ 44 };
    for (int i = 0 ; i < 200 ; ++i) {
        auto [g, h] = gen::random_pair(rng, 4);
        for (size_t d : { 1, 2, 3, 4 }) {
            oracle::UnfoldingCodes codes;
            bool same = codes.codes(g, d)[g.point()] == codes.codes(h, d)[h.point()];
            CHECK(isomorphic(unfold_depth(g, d), unfold_depth(h, d)).has_value() == same);
        }
    }
}

TEST_CASE("flat systems")
{
    CHECK(solve("x = {}\nroot x") == parse_apg("apg v1\npoint x\nx:"));
    CHECK(solve("x = {x}\nroot x") == parse_apg("apg v1\npoint x\nx: x"));
    CHECK(solve("x = {y}\ny = {x}\nroot x") == parse_apg("apg v1\npoint x\nx: x"));

    auto g = solve("root x\nx = { {}, {{}} }");
    CHECK(is_picture_of(g, parse_set_literal("{{},{{}}}")));
    CHECK(g.size() == 3);

    // a variable equal to a literal keeps its name
    auto h = solve("x = {y, {{}}}\ny = {{}}\nroot x");
    CHECK(serialize_apg(h) == "apg v1\npoint x\nx: y\n_0:\ny: _0");

    auto w = solve("x = {y, z}\ny = {x}\nz = {z}\nroot x");
    CHECK(w.size() == 1);

    CHECK(kind_of([] { solve("x = {y}\nroot x"); }) == ErrorKind::UndefinedVariable);
    CHECK(kind_of([] { solve("x = {}"); }) == ErrorKind::NoRoot);
    CHECK(kind_of([] { solve("x = {}\nroot y"); }) == ErrorKind::UndefinedVariable);
    CHECK(kind_of([] { parse_flat_system("x = {}\nx = {x}\nroot x"); }) == ErrorKind::DuplicateDeclaration);
    CHECK(kind_of([] { parse_flat_system("x = y"); }) == ErrorKind::Syntax);
    CHECK(kind_of([] { parse_flat_system("x = {{}"); }) == ErrorKind::Syntax);
    CHECK(kind_of([] { parse_flat_system("x = {a-b}"); }) == ErrorKind::Syntax);
    CHECK(solve("root = {root}\nroot root") == parse_apg("apg v1\npoint root\nroot: root"));
}
