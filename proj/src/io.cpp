#include "vcat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace vcat::io {

namespace fs = std::filesystem;

json load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

namespace {

std::string as_text(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return os.str();
    }
    throw parse_error("expected a string or number, got " + j.dump());
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::string> string_list(const json& j) {
    if (!j.is_array()) throw parse_error("expected an array, got " + j.dump());
    std::vector<std::string> out;
    for (auto& v : j) out.push_back(as_text(v));
    return out;
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& s, const char* what) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) throw parse_error(std::string("unknown ") + what + " '" + s + "'");
    return static_cast<std::size_t>(it - labels.begin());
}

// Reflexive-transitive closure of generating pairs.
std::vector<char> order_closure(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& gen) {
    std::vector<char> le(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
    for (auto [a, b] : gen) le[a * n + b] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (le[i * n + k] && le[k * n + j]) le[i * n + j] = 1;
    return le;
}

// Tensor tables: {"a,b": "c"} or [["a","b","c"], ...]; one of (a,b), (b,a) suffices.
std::vector<int> tensor_table(const json& j, const std::vector<std::string>& labels) {
    const std::size_t n = labels.size();
    std::vector<int> t(n * n, -1);
    auto put = [&](const std::string& a, const std::string& b, const std::string& c) {
        t[index_of(labels, a, "element") * n + index_of(labels, b, "element")] =
            static_cast<int>(index_of(labels, c, "element"));
    };
    if (j.is_object()) {
        for (auto& [k, v] : j.items()) {
            const auto comma = k.find(',');
            if (comma == std::string::npos) throw parse_error("tensor key '" + k + "' is not of the form a,b");
            put(k.substr(0, comma), k.substr(comma + 1), as_text(v));
        }
    } else if (j.is_array()) {
        for (auto& row : j) {
            auto r = string_list(row);
            if (r.size() != 3) throw parse_error("tensor rows need three entries");
            put(r[0], r[1], r[2]);
        }
    } else {
        throw parse_error("tensor must be an object or an array");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int& v = t[a * n + b];
            if (v < 0) v = t[b * n + a];
            if (v < 0) throw parse_error("tensor table has no entry for (" + labels[a] + "," + labels[b] + ")");
        }
    return t;
}

} // namespace

qptr named_quantale(const std::string& name) {
    if (name == "boolean-2" || name == "boolean" || name == "2") return quantale::boolean2();
    if (name == "lawvere") return quantale::lawvere();
    if (name == "ultrametric") return quantale::ultrametric();
    std::smatch m;
    static const std::regex chain_re(R"(chain-(\d+)(?:-e(\d+))?)");
    if (std::regex_match(name, m, chain_re)) {
        const int n = std::stoi(m[1]);
        const int e = m[2].matched ? std::stoi(m[2]) : n - 1;
        return quantale::chain(n, e);
    }
    throw parse_error("unknown quantale '" + name + "'");
}

qptr quantale_from_json(const json& j, const fs::path& base) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return named_quantale(s);
        } catch (const parse_error&) {
            fs::path p = base.empty() ? fs::path(s) : base / s;
            if (!fs::exists(p)) throw;
            return quantale_from_json(load_json(p), p.parent_path());
        }
    }
    const std::string kind = as_text(field(j, "kind"));
    if (kind == "boolean-2" || kind == "lawvere" || kind == "ultrametric") return named_quantale(kind);
    if (kind == "chain" || kind == "chain-n") {
        const int n = field(j, "n").get<int>();
        const int e = j.contains("unit") ? std::stoi(as_text(j.at("unit"))) : n - 1;
        return quantale::chain(n, e);
    }
    if (kind == "ultrametric-grid") {
        std::vector<double> vals;
        for (auto& v : field(j, "values")) vals.push_back(std::stod(as_text(v)));
        return quantale::ultrametric_grid(vals);
    }
    if (kind == "free-commutative-monoid") {
        const json& mon = field(j, "monoid");
        const auto els = string_list(field(mon, "elements"));
        const auto t = tensor_table(field(mon, "table"), els);
        std::vector<std::vector<int>> mult(els.size(), std::vector<int>(els.size()));
        for (std::size_t a = 0; a < els.size(); ++a)
            for (std::size_t b = 0; b < els.size(); ++b) mult[a][b] = t[a * els.size() + b];
        // A missing (b,a) entry was filled from (a,b) above, so check the raw table too.
        const json& raw = field(mon, "table");
        if (raw.is_object())
            for (auto& [k, v] : raw.items()) {
                const auto comma = k.find(',');
                const std::string sw = k.substr(comma + 1) + "," + k.substr(0, comma);
                if (raw.contains(sw) && as_text(raw.at(sw)) != as_text(v))
                    throw domain_error("monoid is not commutative at (" + k + ")");
            }
        return quantale::free_commutative_monoid(
            els, mult, static_cast<int>(index_of(els, as_text(field(mon, "unit")), "monoid element")));
    }
    if (kind == "finite-table" || kind == "finite") {
        const auto els = string_list(field(j, "elements"));
        std::vector<std::pair<std::size_t, std::size_t>> gen;
        for (auto& pr : field(j, "order_pairs")) {
            auto p = string_list(pr);
            if (p.size() != 2) throw parse_error("order pairs need two entries");
            gen.emplace_back(index_of(els, p[0], "element"), index_of(els, p[1], "element"));
        }
        const std::string name = j.contains("name") ? as_text(j.at("name")) : "finite-table";
        return quantale::finite(name, els, order_closure(els.size(), gen), tensor_table(field(j, "tensor"), els),
                                static_cast<int>(index_of(els, as_text(field(j, "unit")), "element")));
    }
    throw parse_error("unknown quantale kind '" + kind + "'");
}

json quantale_to_json(const quantale& q) {
    switch (q.kind()) {
    case quantale_kind::boolean2:
    case quantale_kind::lawvere:
    case quantale_kind::ultrametric:
        return q.name();
    case quantale_kind::chain:
        return json{{"kind", "chain"}, {"n", q.size()}, {"unit", q.format(q.unit())}};
    default: {
        // Labels may contain commas, so the tensor uses the row form.
        json pairs = json::array(), rows = json::array();
        for (std::size_t a = 0; a < q.size(); ++a)
            for (std::size_t b = 0; b < q.size(); ++b) {
                if (q.leq_index(a, b)) pairs.push_back({q.format(a), q.format(b)});
                rows.push_back({q.format(a), q.format(b), q.format(q.tensor(a, b))});
            }
        return json{{"kind", "finite-table"},    {"name", q.name()}, {"elements", q.labels()},
                    {"order_pairs", pairs},      {"tensor", rows},   {"unit", q.format(q.unit())}};
    }
    }
}

space space_from_json(const json& j, const fs::path& base) {
    qptr q = quantale_from_json(field(j, "quantale"), base);
    space x(q, string_list(field(j, "objects")));
    const json& d = field(j, "dist");
    const std::size_t n = x.size();
    if (!d.is_array() || d.size() != n) throw parse_error("dist must have one row per object");
    std::vector<std::string> seen(x.objects);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw parse_error("object labels must be distinct");
    for (std::size_t i = 0; i < n; ++i) {
        if (!d[i].is_array() || d[i].size() != n) throw parse_error("dist row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < n; ++k) x.at(i, k) = q->parse(as_text(d[i][k]));
    }
    return x;
}

json space_to_json(const space& x, const json& meta) {
    json dist = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < x.size(); ++k) row.push_back(x.q->format(x(i, k)));
        dist.push_back(row);
    }
    json out{{"quantale", quantale_to_json(*x.q)}, {"objects", x.objects}, {"dist", dist}};
    if (!meta.is_null()) out["meta"] = meta;
    return out;
}

preorder preorder_from_json(const json& j) {
    auto els = string_list(field(j, "elements"));
    std::vector<std::pair<std::size_t, std::size_t>> gen;
    if (j.contains("order_pairs"))
        for (auto& pr : j.at("order_pairs")) {
            auto p = string_list(pr);
            if (p.size() != 2) throw parse_error("order pairs need two entries");
            gen.emplace_back(index_of(els, p[0], "element"), index_of(els, p[1], "element"));
        }
    const std::size_t n = els.size();
    auto le = order_closure(n, gen);
    preorder p{els, relation(n, n)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) p.leq.set(a, b, le[a * n + b] != 0);
    return p;
}

json preorder_to_json(const preorder& p) {
    json pairs = json::array();
    for (auto [a, b] : p.leq.pairs())
        if (a != b) pairs.push_back({p.elements[a], p.elements[b]});
    return json{{"elements", p.elements}, {"order_pairs", pairs}};
}

machine machine_from_json(const json& j, const fs::path& base) {
    machine m;
    m.inputs = string_list(field(j, "inputs"));
    m.states = string_list(field(j, "states"));
    const json& os = field(j, "output_space");
    if (os.is_string()) {
        fs::path p = base.empty() ? fs::path(os.get<std::string>()) : base / os.get<std::string>();
        m.outputs = space_from_json(load_json(p), p.parent_path());
    } else {
        m.outputs = space_from_json(os, base);
    }
    const json& delta = field(j, "delta");
    const json& out = field(j, "out");
    for (auto& s : m.states) {
        if (!delta.contains(s)) throw parse_error("delta has no row for state '" + s + "'");
        std::vector<std::size_t> row;
        for (auto& a : m.inputs) {
            if (!delta.at(s).contains(a)) throw parse_error("delta(" + s + "," + a + ") is missing");
            row.push_back(index_of(m.states, as_text(delta.at(s).at(a)), "state"));
        }
        m.delta.push_back(row);
        if (!out.contains(s)) throw parse_error("out has no entry for state '" + s + "'");
        m.out.push_back(index_of(m.outputs.objects, as_text(out.at(s)), "output"));
    }
    return m;
}

kripke kripke_from_json(const json& j) {
    kripke k;
    k.states = string_list(field(j, "states"));
    const json& succ = field(j, "succ");
    for (auto& s : k.states) {
        std::vector<std::size_t> row;
        if (succ.contains(s))
            for (auto& t : string_list(succ.at(s))) row.push_back(index_of(k.states, t, "state"));
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        k.succ.push_back(row);
    }
    return k;
}

std::string format_matrix_table(const quantale& q, const std::vector<std::string>& labels, const std::vector<elem>& dist) {
    const std::size_t n = labels.size();
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        cells[0][i + 1] = labels[i];
        cells[i + 1][0] = labels[i];
        for (std::size_t k = 0; k < n; ++k) cells[i + 1][k + 1] = q.format(dist[i * n + k]);
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (auto& row : cells)
        for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (auto& row : cells) {
        for (std::size_t c = 0; c <= n; ++c) {
            if (c) out += "  ";
            out += row[c] + std::string(width[c] - row[c].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += "\n";
    }
    return out;
}

std::string format_table(const space& x) { return format_matrix_table(*x.q, x.objects, x.dist); }

} // namespace vcat::io
