// vcat: command-line front end for the vcat library.
//
// Exit codes: 0 ok, 1 parse error, 2 validation failure, 3 unsupported
// operation (including enumeration caps and iteration bounds).

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vcat/coalgebra.hpp"
#include "vcat/extension.hpp"
#include "vcat/io.hpp"
#include "vcat/relpresh.hpp"
#include "vcat/setfunctor.hpp"

namespace fs = std::filesystem;
using namespace vcat;
using io::json;

namespace {

enum exit_code { ok = 0, parse_failed = 1, invalid = 2, unsupported = 3 };

// Thrown when a loaded value fails its law check; carries the report.
struct validation_failure {
    std::string what;
    law_report report;
};

struct options {
    std::string format = "json";
    std::string quantale, space, preorder, automaton, kripke, functor;
    std::string method, grid = "values", heart = "join", to;
    std::string from_set, to_set;
    std::size_t depth = 8, max_steps = 1000;
    double tol = tolerance;
    bool discrete = false;
};

json report_json(const law_report& r) {
    json laws = json::array();
    for (auto& e : r.entries) {
        json one{{"law", e.law}, {"pass", e.pass}};
        if (!e.detail.empty()) one["detail"] = e.detail;
        laws.push_back(one);
    }
    return json{{"ok", r.ok()}, {"laws", laws}};
}

std::string report_table(const law_report& r) {
    std::size_t w = 0;
    for (auto& e : r.entries) w = std::max(w, e.law.size());
    std::string out;
    for (auto& e : r.entries) {
        out += e.law + std::string(w - e.law.size(), ' ') + "  " + (e.pass ? "pass" : "FAIL");
        if (!e.detail.empty()) out += "  " + e.detail;
        out += "\n";
    }
    return out;
}

space load_space(const std::string& path) {
    if (path.empty()) throw parse_error("--space is required");
    const fs::path p(path);
    space x = io::space_from_json(io::load_json(p), p.parent_path());
    law_report r = validate(x);
    if (!r.ok()) throw validation_failure{path + " is not a V-category", r};
    return x;
}

machine load_machine(const std::string& path) {
    const fs::path p(path);
    machine m = io::machine_from_json(io::load_json(p), p.parent_path());
    law_report r = validate(m.outputs);
    if (!r.ok()) throw validation_failure{"output space of " + path + " is not a V-category", r};
    m.check();
    return m;
}

std::vector<std::size_t> object_list(const space& x, const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto it = std::find(x.objects.begin(), x.objects.end(), item);
        if (it == x.objects.end()) throw parse_error("unknown object '" + item + "'");
        out.push_back(static_cast<std::size_t>(it - x.objects.begin()));
    }
    return out;
}

grid_mode parse_grid(const std::string& g) {
    if (g == "values") return grid_mode::values;
    if (g == "full") return grid_mode::full;
    throw parse_error("--grid must be values or full");
}

json grid_json(const quantale& q, const std::vector<elem>& grid) {
    json out = json::array();
    for (elem r : grid) out.push_back(q.format(r));
    return out;
}

json partition_json(const std::vector<std::string>& states, const partition& p) {
    std::size_t k = 0;
    for (std::size_t c : p) k = std::max(k, c + 1);
    json classes = json::array();
    for (std::size_t c = 0; c < k; ++c) {
        json members = json::array();
        for (std::size_t s = 0; s < p.size(); ++s)
            if (p[s] == c) members.push_back(states[s]);
        classes.push_back(members);
    }
    return json{{"states", states}, {"classes", classes}};
}

std::string partition_table(const json& j) {
    std::string out;
    std::size_t i = 0;
    for (auto& cls : j.at("classes")) {
        out += std::to_string(i++) + ":";
        for (auto& s : cls) out += " " + s.get<std::string>();
        out += "\n";
    }
    return out;
}

void emit(const options& o, const json& j, const std::string& table) {
    if (o.format == "table") std::cout << table;
    else std::cout << j.dump(2) << "\n";
}

void emit_space(const options& o, const space& x, const json& meta) {
    std::string table;
    if (!meta.is_null())
        for (auto& [k, v] : meta.items()) table += "# " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    emit(o, io::space_to_json(x, meta), table + io::format_table(x));
}

int cmd_check_quantale(const options& o) {
    if (o.quantale.empty()) throw parse_error("--quantale is required");
    qptr q = io::quantale_from_json(json(o.quantale));
    law_report r = check_laws(*q);
    structure_flags f = q->flags();
    json j{{"quantale", q->name()}, {"ok", r.ok()}};
    j["flags"] = {{"integral", f.integral}, {"zero_divisor_free", f.zero_divisor_free},
                  {"completely_distributive", f.completely_distributive}};
    j["laws"] = report_json(r)["laws"];
    std::string table = report_table(r);
    table += std::string("integral ") + (f.integral ? "yes" : "no") + ", zero-divisor free " +
             (f.zero_divisor_free ? "yes" : "no") + ", completely distributive " +
             (f.completely_distributive ? "yes" : "no") + "\n";
    table += r.ok() ? "all laws pass\n" : "some laws fail\n";
    emit(o, j, table);
    return r.ok() ? ok : invalid;
}

int cmd_check_space(const options& o) {
    if (o.space.empty()) throw parse_error("--space is required");
    const fs::path p(o.space);
    space x = io::space_from_json(io::load_json(p), p.parent_path());
    law_report r = validate(x);
    emit(o, report_json(r), report_table(r) + (r.ok() ? "valid V-category\n" : "not a V-category\n"));
    return r.ok() ? ok : invalid;
}

int cmd_extend(const options& o) {
    if (o.functor.empty()) throw parse_error("--functor is required");
    functor_ptr t = parse_functor(o.functor);
    space x = load_space(o.space);
    const grid_mode mode = parse_grid(o.grid);
    const std::string method = o.method.empty() ? "zigzag" : o.method;
    lan_result res;
    if (method == "zigzag") res = lan_extend(*composed_with_discrete(t), x, mode);
    else if (method == "wpb") res = vcatify_wpb(*t, x, mode);
    else throw parse_error("--method must be zigzag or wpb");
    json meta{{"functor", to_string(*t)}, {"method", method}, {"grid", grid_json(*x.q, res.grid)},
              {"iterations", res.iterations}, {"converged", res.converged}};
    emit_space(o, res.result, meta);
    return ok;
}

int cmd_hausdorff(const options& o) {
    space x = load_space(o.space);
    if (!o.from_set.empty() || !o.to_set.empty()) {
        const elem d = hausdorff(x, object_list(x, o.from_set), object_list(x, o.to_set));
        emit(o, json{{"from", o.from_set}, {"to", o.to_set}, {"distance", x.q->format(d)}}, x.q->format(d) + "\n");
        return ok;
    }
    // Whole powerset: carrier order of the powerset functor.
    auto t = functors::powerset();
    const std::size_t n = card(*t, x.size());
    space out(x.q, apply_on_set(*t, x.objects));
    std::vector<std::vector<std::size_t>> subsets(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < x.size(); ++i)
            if (a >> i & 1) subsets[a].push_back(i);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out.at(a, b) = hausdorff(x, subsets[a], subsets[b]);
    emit_space(o, out, json{{"functor", "powerset"}, {"method", "hausdorff"}});
    return ok;
}

int cmd_matching(const options& o) {
    space x = load_space(o.space);
    const elem d = matching_metric(x, object_list(x, o.from_set), object_list(x, o.to_set));
    emit(o, json{{"from", o.from_set}, {"to", o.to_set}, {"distance", x.q->format(d)}}, x.q->format(d) + "\n");
    return ok;
}

predicate_lifting make_heart(const options& o, functor_ptr t, qptr q) {
    if (o.heart == "join") return predicate_lifting::join(t, q);
    if (o.heart == "meet") return predicate_lifting::meet(t, q);
    if (o.heart.rfind("const:", 0) == 0) return predicate_lifting::constant(t, q, q->parse(o.heart.substr(6)));
    throw parse_error("--heart must be join, meet or const:<element>");
}

int cmd_kantorovich(const options& o) {
    functor_ptr t = parse_functor(o.functor.empty() ? "powerset" : o.functor);
    space x = load_space(o.space);
    if (!x.q->is_finite()) throw unsupported_error("Kantorovich lifting needs a finite quantale");
    predicate_lifting p = make_heart(o, t, x.q);
    space out = o.discrete ? discrete_kantorovich(p, x.objects) : kantorovich_lift(p, x);
    json meta{{"functor", to_string(*t)}, {"heart", p.name}, {"v_monotone", is_vmonotone(p)},
              {"method", o.discrete ? "discrete" : "lift"}};
    emit_space(o, out, meta);
    return ok;
}

int cmd_presheaf(const options& o) {
    space x = load_space(o.space);
    rel_presheaf p = to_presheaf(x);
    space back = from_presheaf(p);
    const bool same = same_space(back, x);
    json levels = json::array();
    std::string table;
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        json pairs = json::array();
        std::string line = x.q->format(p.grid[i]) + ":";
        for (auto [a, b] : p.values[i].pairs()) {
            pairs.push_back({x.objects[a], x.objects[b]});
            line += " (" + x.objects[a] + "," + x.objects[b] + ")";
        }
        levels.push_back(json{{"r", x.q->format(p.grid[i])}, {"pairs", pairs}});
        table += line + "\n";
    }
    const bool cont = is_continuous(p);
    json j{{"levels", levels}, {"continuous", cont}, {"roundtrip", same}};
    table += std::string("continuous ") + (cont ? "yes" : "no") + ", round trip " + (same ? "exact" : "differs") + "\n";
    emit(o, j, table);
    return same && cont ? ok : invalid;
}

int cmd_behave(const options& o) {
    if (o.automaton.empty()) throw parse_error("--automaton is required");
    machine m = load_machine(o.automaton);
    const std::string method = o.method.empty() ? "words" : o.method;
    behaviour b;
    if (method == "words") b = beh_metric_words(m, o.depth);
    else if (method == "iterate") b = beh_metric_iterate(m, o.max_steps, o.tol);
    else throw parse_error("--method must be words or iterate");
    space out(b.q, m.states);
    out.dist = b.dist;
    json meta{{"method", method}, {"iterations", b.iterations}, {"converged", b.converged}};
    if (method == "words") meta["depth"] = o.depth;
    emit_space(o, out, meta);
    return ok;
}

int cmd_bisim(const options& o) {
    json j;
    if (!o.automaton.empty()) {
        machine m = load_machine(o.automaton);
        j = partition_json(m.states, bisimilarity(m));
    } else if (!o.kripke.empty()) {
        kripke k = io::kripke_from_json(io::load_json(o.kripke));
        k.check();
        j = partition_json(k.states, bisimilarity(k));
    } else {
        throw parse_error("bisim needs --automaton or --kripke");
    }
    emit(o, j, partition_table(j));
    return ok;
}

int cmd_base(const options& o) {
    if (o.to == "d") {
        if (o.preorder.empty() || o.quantale.empty()) throw parse_error("base --to d needs --preorder and --quantale");
        qptr q = io::quantale_from_json(json(o.quantale));
        preorder p = io::preorder_from_json(io::load_json(o.preorder));
        if (!p.valid()) throw domain_error("not a preorder");
        emit_space(o, base_d(q, p), json{{"functor", "d*"}});
        return ok;
    }
    if (o.to == "c" || o.to == "v") {
        space x = load_space(o.space);
        preorder p = o.to == "c" ? base_c(x) : underlying_preorder(x);
        json j = io::preorder_to_json(p);
        std::string table;
        for (auto [a, b] : p.leq.pairs())
            if (a != b) table += p.elements[a] + " <= " + p.elements[b] + "\n";
        if (o.to == "c") {
            json comps = partition_json(p.elements, connected_components(p))["classes"];
            j["components"] = comps;
            table += "components: " + std::to_string(comps.size()) + "\n";
        }
        emit(o, j, table);
        return ok;
    }
    throw parse_error("base --to must be d, c or v");
}

void print_error(const char* kind, const std::string& msg) {
    std::cerr << "vcat: " << kind << ": " << msg << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extensions of set functors to quantale-enriched categories"};
    app.require_subcommand(1);
    options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    auto* check_q = app.add_subcommand("check-quantale", "Check the quantale laws");
    check_q->add_option("--quantale,-q", o.quantale, "Name or description file")->required();

    auto* check_s = app.add_subcommand("check-space", "Check the V-category axioms");
    check_s->add_option("--space,-s", o.space)->required();

    auto* extend = app.add_subcommand("extend", "Extend a set functor to V-categories");
    extend->add_option("--functor,-f", o.functor)->required();
    extend->add_option("--space,-s", o.space)->required();
    extend->add_option("--method", o.method, "zigzag or wpb");
    extend->add_option("--grid", o.grid, "values or full");

    auto* haus = app.add_subcommand("hausdorff", "Pompeiu-Hausdorff distances");
    haus->add_option("--space,-s", o.space)->required();
    haus->add_option("--from", o.from_set, "Comma-separated objects");
    haus->add_option("--to", o.to_set, "Comma-separated objects");

    auto* match = app.add_subcommand("matching", "Matching distance of two multisets");
    match->add_option("--space,-s", o.space)->required();
    match->add_option("--from", o.from_set)->required();
    match->add_option("--to", o.to_set)->required();

    auto* kant = app.add_subcommand("kantorovich", "Kantorovich lifting");
    kant->add_option("--space,-s", o.space)->required();
    kant->add_option("--functor,-f", o.functor);
    kant->add_option("--heart", o.heart, "join, meet or const:<element>");
    kant->add_flag("--discrete", o.discrete, "Use all maps, not only V-functors");

    auto* pres = app.add_subcommand("presheaf-roundtrip", "Convert to a relational presheaf and back");
    pres->add_option("--space,-s", o.space)->required();

    auto* behave = app.add_subcommand("behave", "Behavioural distances of a machine");
    behave->add_option("--automaton,-a", o.automaton)->required();
    behave->add_option("--depth", o.depth);
    behave->add_option("--method", o.method, "words or iterate");
    behave->add_option("--tol", o.tol);
    behave->add_option("--max-steps", o.max_steps);

    auto* bisim = app.add_subcommand("bisim", "Bisimilarity classes");
    bisim->add_option("--automaton,-a", o.automaton);
    bisim->add_option("--kripke,-k", o.kripke);

    auto* base = app.add_subcommand("base", "Change of base: d*, c*, v*");
    base->add_option("--to", o.to, "d, c or v")->required();
    base->add_option("--space,-s", o.space);
    base->add_option("--preorder,-p", o.preorder);
    base->add_option("--quantale,-q", o.quantale);

    for (auto* c : {check_q, check_s, extend, haus, match, kant, pres, behave, bisim, base}) add_format(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return parse_failed;
    }

    try {
        if (check_q->parsed()) return cmd_check_quantale(o);
        if (check_s->parsed()) return cmd_check_space(o);
        if (extend->parsed()) return cmd_extend(o);
        if (haus->parsed()) return cmd_hausdorff(o);
        if (match->parsed()) return cmd_matching(o);
        if (kant->parsed()) return cmd_kantorovich(o);
        if (pres->parsed()) return cmd_presheaf(o);
        if (behave->parsed()) return cmd_behave(o);
        if (bisim->parsed()) return cmd_bisim(o);
        if (base->parsed()) return cmd_base(o);
    } catch (const validation_failure& v) {
        print_error("validation", v.what);
        for (auto& e : v.report.entries)
            if (!e.pass) std::cerr << "  " << e.law << ": " << e.detail << "\n";
        return invalid;
    } catch (const parse_error& e) {
        print_error("parse", e.what());
        return parse_failed;
    } catch (const json::exception& e) {
        print_error("parse", e.what());
        return parse_failed;
    } catch (const domain_error& e) {
        print_error("validation", e.what());
        return invalid;
    } catch (const vcat::error& e) {
        print_error("unsupported", e.what());
        return unsupported;
    }
    return parse_failed;
}
