#include "vcat/relpresh.hpp"

#include <algorithm>
#include <cmath>

namespace vcat {

relation rel_presheaf::at(elem r) const {
    const std::size_t n = carrier.size();
    relation out(n, n);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (q->eq(grid[i], r)) return values[i];
        if (q->leq(r, grid[i])) out = out.unite(values[i]);
    }
    return out;
}

rel_presheaf to_presheaf(const space& x) {
    const quantale& q = *x.q;
    rel_presheaf p{x.q, x.objects, {}, {}};
    auto add = [&](elem v) {
        for (elem w : p.grid)
            if (q.eq(v, w)) return;
        p.grid.push_back(v);
    };
    for (elem v : {q.bottom(), q.unit(), q.top()}) add(v);
    for (elem d : x.dist) add(d);
    std::sort(p.grid.begin(), p.grid.end());
    for (elem r : p.grid) p.values.push_back(level_relation(x, r));
    return p;
}

space from_presheaf(const rel_presheaf& p) {
    if (!is_continuous(p)) throw domain_error("presheaf is not continuous on its grid");
    const quantale& q = *p.q;
    space x(p.q, p.carrier);
    for (std::size_t g = 0; g < p.grid.size(); ++g)
        for (auto [i, j] : p.values[g].pairs()) x.at(i, j) = q.join(x(i, j), p.grid[g]);
    auto rep = validate(x);
    if (!rep.ok()) {
        std::string why;
        for (auto& e : rep.entries)
            if (!e.pass) why += e.law + " " + e.detail + "; ";
        throw domain_error("presheaf does not come from a V-category: " + why);
    }
    return x;
}

law_report validate_presheaf(const rel_presheaf& p) {
    law_report rep;
    const quantale& q = *p.q;
    const std::size_t n = p.carrier.size();
    rep.add("identity below unit", relation::identity(n).subset_of(p.at(q.unit())));
    rep.add("lax monoidal", true);
    rep.add("antitone", true);
    for (std::size_t a = 0; a < p.grid.size(); ++a)
        for (std::size_t b = 0; b < p.grid.size(); ++b) {
            const elem r = p.grid[a], s = p.grid[b];
            if (!p.values[a].then(p.values[b]).subset_of(p.at(q.tensor(r, s))))
                rep.fail_once("lax monoidal", "r=" + q.format(r) + ", s=" + q.format(s));
            if (q.leq(s, r) && !p.values[a].subset_of(p.values[b]))
                rep.fail_once("antitone", "r=" + q.format(r) + ", s=" + q.format(s));
        }
    return rep;
}

bool is_continuous(const rel_presheaf& p) {
    const quantale& q = *p.q;
    const std::size_t n = p.carrier.size(), g = p.grid.size();
    const relation full = relation::full(n, n);
    if (!full.subset_of(p.at(q.bottom()))) return false;
    bool chain = true;
    for (std::size_t a = 0; a < g && chain; ++a)
        for (std::size_t b = 0; b < g && chain; ++b)
            if (!q.leq(p.grid[a], p.grid[b]) && !q.leq(p.grid[b], p.grid[a])) chain = false;
    if (chain) {
        // Joins of grid subsets are their maxima; continuity reduces to the
        // empty join and antitonicity.
        for (std::size_t a = 0; a < g; ++a)
            for (std::size_t b = 0; b < g; ++b)
                if (q.leq(p.grid[b], p.grid[a]) && !p.values[a].subset_of(p.values[b])) return false;
        return true;
    }
    if (g > 20) throw resource_error("continuity check over more than 2^20 grid subsets");
    for (std::uint32_t mask = 1; mask < (1u << g); ++mask) {
        relation meet = full;
        std::vector<elem> s;
        for (std::size_t a = 0; a < g; ++a)
            if (mask >> a & 1u) {
                meet = meet.intersect(p.values[a]);
                s.push_back(p.grid[a]);
            }
        if (!meet.subset_of(p.at(q.join(s)))) return false;
    }
    return true;
}

rel_presheaf closure(const rel_presheaf& p) {
    const quantale& q = *p.q;
    if (!q.completely_distributive()) throw unsupported_error("closure needs a completely distributive quantale");
    const std::size_t n = p.carrier.size();
    rel_presheaf out{p.q, p.carrier, p.grid, {}};
    for (elem r : p.grid) {
        std::vector<elem> below;
        if (q.is_finite()) {
            for (elem s : q.carrier())
                if (q.totally_below(s, r)) below.push_back(s);
        } else if (!q.eq(r, q.bottom())) {
            // s << r means s is a strictly larger distance. Between grid
            // points the value is constant, so one point just above r and
            // the larger grid points cover every case.
            double next = q.kind() == quantale_kind::ultrametric ? 1.0 : r + 1.0;
            for (elem g : p.grid)
                if (g > r + tolerance && g < next) next = g;
            below.push_back(r + (next - r) / 2);
            for (elem g : p.grid)
                if (q.totally_below(g, r)) below.push_back(g);
        }
        relation v = relation::full(n, n);
        for (elem s : below) v = v.intersect(p.at(s));
        out.values.push_back(std::move(v));
    }
    return out;
}

bool is_presheaf_morphism(const rel_presheaf& a, const rel_presheaf& b, const object_map& f) {
    for (std::size_t g = 0; g < a.grid.size(); ++g) {
        const relation target = b.at(a.grid[g]);
        for (auto [i, j] : a.values[g].pairs())
            if (!target(f[i], f[j])) return false;
    }
    return true;
}

} // namespace vcat
