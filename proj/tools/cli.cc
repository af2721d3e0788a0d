/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <apg/apg.hh>
#include <apg/constructions.hh>
#include <apg/extensionality.hh>
#include <apg/omega.hh>
#include <apg/relations.hh>
#include <apg/set_literal.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

using namespace apg;
using namespace apg::cli;

using std::istream;
using std::optional;
using std::ostream;
using std::string;
using std::vector;

using nlohmann::json;

namespace
{
    /// Bad input or bad usage: exit 2.
    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    auto yes_no(bool b) -> string
    {
        return b ? "yes" : "no";
    }

    auto slurp(const string & file, istream & in) -> string
    {
        if (file == "-")
            return string{ std::istreambuf_iterator<char>{ in }, std::istreambuf_iterator<char>{} };

        std::ifstream f{ file, std::ios::binary };
        if (! f)
            throw UsageError{ "cannot read '" + file + "'" };
        return string{ std::istreambuf_iterator<char>{ f }, std::istreambuf_iterator<char>{} };
    }

    auto load_apg(const string & file, istream & in) -> Apg
    {
        auto text = slurp(file, in);
        try {
            return parse_apg(text);
        }
        catch (const ApgError & e) {
            throw UsageError{ file + ": " + e.what() };
        }
    }

    struct Options
    {
        bool json = false;
        string file, second_file;
        string axiom = "afa";
        string gallery_name;
        optional<Index> truncate_at;
        bool verify_witnesses = false;
    };

    auto emit_json(ostream & out, const json & j) -> void
    {
        out << j.dump(2) << '\n';
    }

    auto cmd_check(const Options & o, istream & in, ostream & out) -> int
    {
        auto report = classify(load_apg(o.file, in));

        if (o.json) {
            json j = json::object();
            for (auto n : all_notions) {
                auto & w = report.witnesses.at(n);
                j[string{ notion_name(n) }] = {
                    { "holds", report.holds(n) },
                    { "witness", w ? json::array({ w->first, w->second }) : json(nullptr) } };
            }
            emit_json(out, j);
        }
        else {
            for (auto n : all_notions) {
                out << notion_name(n) << ": " << yes_no(report.holds(n));
                if (auto & w = report.witnesses.at(n))
                    out << " [" << w->first << "," << w->second << "]";
                out << '\n';
            }
        }
        return success;
    }

    auto cmd_compare(const Options & o, istream & in, ostream & out) -> int
    {
        auto g = load_apg(o.file, in), h = load_apg(o.second_file, in);

        vector<std::pair<string, bool>> rows;
        rows.emplace_back("iso", find_isomorphism(g, h).has_value());
        rows.emplace_back("finsler", finsler_eq(g, h));
        rows.emplace_back("scott", scott_eq(g, h));
        rows.emplace_back("bisim", bisimilar(g, h));
        bool forward = find_dhom(g, h).has_value(), backward = find_dhom(h, g).has_value();
        rows.emplace_back("dhom->", forward);
        rows.emplace_back("dhom<-", backward);
        rows.emplace_back("mutual-dhom", forward && backward);

        if (o.json) {
            json j = json::object();
            for (auto & [k, v] : rows)
                j[k] = v;
            emit_json(out, j);
        }
        else
            for (auto & [k, v] : rows)
                out << k << ": " << yes_no(v) << '\n';
        return success;
    }

    auto cmd_collapse(const Options & o, istream & in, ostream & out) -> int
    {
        auto g = load_apg(o.file, in);

        Quotient q = [&] {
            if (o.axiom == "afa")
                return collapse_afa_with_map(g);
            else if (o.axiom == "safa")
                return collapse_iter_with_map(g, Relation::Scott);
            else if (o.axiom == "fafa")
                return collapse_iter_with_map(g, Relation::Finsler);
            throw UsageError{ "unknown axiom '" + o.axiom + "', expected afa, safa or fafa" };
        }();

        if (o.json)
            emit_json(out, { { "axiom", o.axiom }, { "graph", serialize_apg(q.graph) }, { "map", q.map } });
        else
            out << serialize_apg(q.graph) << '\n';
        return success;
    }

    auto cmd_decorate(const Options & o, istream & in, ostream & out) -> int
    {
        auto g = load_apg(o.file, in);
        auto d = decorate_wf(g);

        if (o.json) {
            json j = json::object();
            for (auto & [name, set] : d)
                j[name] = set.text();
            emit_json(out, j);
        }
        else
            for (auto & [name, set] : d)
                out << name << ": " << set.text() << '\n';
        return success;
    }

    auto cmd_solve(const Options & o, istream & in, ostream & out) -> int
    {
        auto text = slurp(o.file, in);
        optional<Apg> g;
        try {
            g = solve_flat_system(parse_flat_system(text));
        }
        catch (const ApgError & e) {
            throw UsageError{ o.file + ": " + e.what() };
        }

        if (o.json)
            emit_json(out, { { "graph", serialize_apg(*g) } });
        else
            out << serialize_apg(*g) << '\n';
        return success;
    }

    auto cmd_export_dot(const Options & o, istream & in, ostream & out) -> int
    {
        auto dot = to_dot(load_apg(o.file, in));
        if (o.json)
            emit_json(out, { { "dot", dot } });
        else
            out << dot;
        return success;
    }

    auto cmd_gallery(const Options & o, ostream & out) -> int
    {
        if (o.gallery_name.empty()) {
            auto names = gallery_names();
            if (o.json)
                emit_json(out, { { "names", names } });
            else
                for (auto & n : names)
                    out << n << '\n';
            return success;
        }

        if (auto item = finite_gallery_item(o.gallery_name)) {
            if (o.truncate_at || o.verify_witnesses)
                throw UsageError{ "--truncate and --verify-witnesses only apply to omega-J" };
            if (o.json)
                emit_json(out, { { "name", o.gallery_name }, { "graph", serialize_apg(*item) } });
            else
                out << serialize_apg(*item) << '\n';
            return success;
        }

        if (o.gallery_name != "omega-J")
            throw UsageError{ "no gallery item named '" + o.gallery_name + "'" };

        auto j = make_J();

        if (o.verify_witnesses) {
            // the chain part of each witness is the fixed shift
            vector<std::pair<NodeId, NodeId>> directions{ { "a", "aprime" }, { "aprime", "a" } };
            bool all = true;
            json results = json::array();
            for (auto & [source, target] : directions) {
                SymbolicWitness w{ { { source, target } } };
                bool ok = verify_dhom_symbolic(j, w, source, target);
                all = all && ok;
                if (o.json)
                    results.push_back({ { "source", source }, { "target", target }, { "verified", ok } });
                else
                    out << source << " -> " << target << ": " << (ok ? "verified" : "failed") << '\n';
            }
            if (o.json)
                emit_json(out, { { "name", o.gallery_name }, { "witnesses", results } });
            return all ? success : property_false;
        }

        if (o.truncate_at) {
            auto t = truncate(j, *o.truncate_at);
            if (o.json)
                emit_json(out, { { "name", o.gallery_name }, { "truncate", *o.truncate_at }, { "graph", serialize_apg(t) } });
            else
                out << serialize_apg(t) << '\n';
            return success;
        }

        if (o.json)
            emit_json(out, { { "name", o.gallery_name }, { "description", describe(j) } });
        else
            out << describe(j) << '\n';
        return success;
    }
}

auto apg::cli::run(const vector<string> & args, istream & in, ostream & out, ostream & err) -> int
{
    CLI::App app{ "Accessible pointed graphs as pictures of non-well-founded sets", "apgtool" };
    app.fallthrough();
    app.require_subcommand(1);

    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");

    auto check = app.add_subcommand("check", "Report every extensionality notion, with the least failing pair");
    check->add_option("file", o.file, "apg v1 file, or - for stdin")->required();

    auto compare = app.add_subcommand("compare", "Compare two graphs under every relation");
    compare->add_option("file1", o.file, "first apg v1 file")->required();
    compare->add_option("file2", o.second_file, "second apg v1 file")->required();

    auto collapse = app.add_subcommand("collapse", "Canonical picture under an anti-foundation axiom");
    collapse->add_option("file", o.file, "apg v1 file, or - for stdin")->required();
    collapse->add_option("--axiom", o.axiom, "afa, safa or fafa")->check(CLI::IsMember({ "afa", "safa", "fafa" }));

    auto decorate = app.add_subcommand("decorate", "Decoration of a well-founded graph");
    decorate->add_option("file", o.file, "apg v1 file, or - for stdin")->required();

    auto solve = app.add_subcommand("solve", "Solve a flat system of set equations");
    solve->add_option("file", o.file, "flat system file, or - for stdin")->required();

    auto gallery = app.add_subcommand("gallery", "Print a named example graph; lists the names if none is given");
    gallery->add_option("name", o.gallery_name, "omega-J, Q2, omega1, omega2 or vee");
    gallery->add_option("--truncate", o.truncate_at, "omega-J chain nodes 0..N");
    gallery->add_flag("--verify-witnesses", o.verify_witnesses, "check both omega-J witnesses symbolically");

    auto export_dot = app.add_subcommand("export-dot", "Graphviz rendering");
    export_dot->add_option("file", o.file, "apg v1 file, or - for stdin")->required();

    try {
        vector<string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    try {
        if (check->parsed())
            return cmd_check(o, in, out);
        if (compare->parsed())
            return cmd_compare(o, in, out);
        if (collapse->parsed())
            return cmd_collapse(o, in, out);
        if (decorate->parsed())
            return cmd_decorate(o, in, out);
        if (solve->parsed())
            return cmd_solve(o, in, out);
        if (gallery->parsed())
            return cmd_gallery(o, out);
        if (export_dot->parsed())
            return cmd_export_dot(o, in, out);
    }
    catch (const UsageError & e) {
        err << "apgtool: " << e.what() << '\n';
        return usage_error;
    }
    catch (const ApgError & e) {
        // the input was well formed but the operation does not apply to it
        err << "apgtool: " << e.what() << '\n';
        return precondition_violation;
    }

    return usage_error;
}
