#include "vcat/vcat.hpp"

#include <cstdlib>
#include <limits>

namespace vcat {

relation relation::identity(std::size_t n) {
    relation r(n, n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
}

relation relation::full(std::size_t r, std::size_t c) {
    relation out(r, c);
    std::fill(out.bits.begin(), out.bits.end(), 1);
    return out;
}

std::size_t relation::count() const {
    std::size_t c = 0;
    for (auto b : bits) c += b;
    return c;
}

std::vector<std::pair<std::size_t, std::size_t>> relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if ((*this)(i, j)) out.emplace_back(i, j);
    return out;
}

bool relation::subset_of(const relation& o) const {
    for (std::size_t k = 0; k < bits.size(); ++k)
        if (bits[k] && !o.bits[k]) return false;
    return true;
}

relation relation::then(const relation& o) const {
    if (cols != o.rows) throw domain_error("relation composition: shapes do not match");
    relation out(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k)
            if ((*this)(i, k))
                for (std::size_t j = 0; j < o.cols; ++j)
                    if (o(k, j)) out.set(i, j);
    return out;
}

relation relation::intersect(const relation& o) const {
    relation out(rows, cols);
    for (std::size_t k = 0; k < bits.size(); ++k) out.bits[k] = bits[k] & o.bits[k];
    return out;
}

relation relation::unite(const relation& o) const {
    relation out(rows, cols);
    for (std::size_t k = 0; k < bits.size(); ++k) out.bits[k] = bits[k] | o.bits[k];
    return out;
}

relation relation::converse() const {
    relation out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if ((*this)(i, j)) out.set(j, i);
    return out;
}

space::space(qptr quant, std::vector<std::string> objs)
    : q(std::move(quant)), objects(std::move(objs)), dist(objects.size() * objects.size(), q->bottom()) {}

bool preorder::valid() const {
    const std::size_t n = size();
    if (leq.rows != n || leq.cols != n) return false;
    for (std::size_t a = 0; a < n; ++a) {
        if (!leq(a, a)) return false;
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (leq(a, b) && leq(b, c) && !leq(a, c)) return false;
    }
    return true;
}

std::size_t max_enum() {
    if (const char* v = std::getenv("VCAT_MAX_ENUM")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
    }
    return 1000000;
}

law_report validate(const space& x) {
    law_report rep;
    rep.add("unit", true);
    rep.add("triangle", true);
    const quantale& q = *x.q;
    const std::size_t n = x.size();
    if (x.dist.size() != n * n) {
        rep.fail_once("unit", "distance matrix has wrong shape");
        return rep;
    }
    for (elem d : x.dist)
        if (!q.contains(d)) {
            rep.fail_once("unit", "distance outside the carrier");
            return rep;
        }
    for (std::size_t i = 0; i < n; ++i)
        if (!q.leq(q.unit(), x(i, i)))
            rep.fail_once("unit", "e <= X(" + x.objects[i] + "," + x.objects[i] + ") fails");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                // X(b,c) (x) X(a,b) <= X(a,c)
                if (!q.leq(q.tensor(x(b, c), x(a, b)), x(a, c)))
                    rep.fail_once("triangle", "(" + x.objects[a] + "," + x.objects[b] + "," + x.objects[c] + ")");
    return rep;
}

law_report validate_functor(const space& src, const space& dst, const object_map& f) {
    law_report rep;
    rep.add("non-expansive", true);
    if (f.size() != src.size()) {
        rep.fail_once("non-expansive", "object map has wrong length");
        return rep;
    }
    for (std::size_t v : f)
        if (v >= dst.size()) {
            rep.fail_once("non-expansive", "object map leaves the target");
            return rep;
        }
    const quantale& q = *src.q;
    for (std::size_t a = 0; a < src.size(); ++a)
        for (std::size_t b = 0; b < src.size(); ++b)
            if (!q.leq(src(a, b), dst(f[a], f[b])))
                rep.fail_once("non-expansive", "(" + src.objects[a] + "," + src.objects[b] + ")");
    return rep;
}

bool same_matrix(const space& a, const space& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.dist.size(); ++k)
        if (!a.q->eq(a.dist[k], b.dist[k])) return false;
    return true;
}

bool same_space(const space& a, const space& b) { return a.objects == b.objects && same_matrix(a, b); }

space discrete(qptr q, std::vector<std::string> labels) {
    space x(q, std::move(labels));
    for (std::size_t i = 0; i < x.size(); ++i) x.at(i, i) = q->unit();
    return x;
}

space unit_cat(qptr q) { return discrete(q, {"*"}); }

space unit_cat_at(qptr q, elem r) {
    space x(q, {"*"});
    x.at(0, 0) = r;
    return x;
}

space two_r(qptr q, elem r) {
    q->check(r);
    space x = discrete(q, {"0", "1"});
    x.at(0, 1) = r;
    return x;
}

space two_rs(qptr q, elem r, elem s) {
    q->check(r);
    q->check(s);
    if (!q->leq(q->tensor(r, s), q->unit()))
        throw domain_error("two_rs needs r(x)s <= e");
    space x = discrete(q, {"0", "1"});
    x.at(0, 1) = r;
    x.at(1, 0) = s;
    return x;
}

space tensor_cat(const space& x, const space& y) {
    if (x.q != y.q) throw domain_error("tensor_cat: quantale mismatch");
    std::vector<std::string> labels;
    for (auto& a : x.objects)
        for (auto& b : y.objects) labels.push_back("(" + a + "," + b + ")");
    space out(x.q, labels);
    const std::size_t m = y.size();
    for (std::size_t a1 = 0; a1 < x.size(); ++a1)
        for (std::size_t b1 = 0; b1 < m; ++b1)
            for (std::size_t a2 = 0; a2 < x.size(); ++a2)
                for (std::size_t b2 = 0; b2 < m; ++b2)
                    out.at(a1 * m + b1, a2 * m + b2) = x.q->tensor(x(a1, a2), y(b1, b2));
    return out;
}

std::vector<object_map> vfunctors(const space& y, const space& z, std::size_t cap) {
    if (y.q != z.q) throw domain_error("hom_cat: quantale mismatch");
    const std::size_t n = y.size(), m = z.size();
    double candidates = 1;
    for (std::size_t i = 0; i < n; ++i) {
        candidates *= static_cast<double>(m);
        if (candidates > static_cast<double>(cap))
            throw resource_error("hom_cat would enumerate more than " + std::to_string(cap) + " maps");
    }
    std::vector<object_map> out;
    if (m == 0 && n > 0) return out;
    object_map f(n, 0);
    const quantale& q = *y.q;
    while (true) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b)
                if (!q.leq(y(a, b), z(f[a], f[b]))) ok = false;
        if (ok) out.push_back(f);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++f[k] < m) break;
            f[k] = 0;
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

space hom_cat(const space& y, const space& z, std::size_t cap) {
    auto maps = vfunctors(y, z, cap);
    std::vector<std::string> labels;
    for (auto& f : maps) {
        std::string l = "<";
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) l += ",";
            l += z.objects[f[i]];
        }
        labels.push_back(l + ">");
    }
    space out(y.q, labels);
    const quantale& q = *y.q;
    for (std::size_t a = 0; a < maps.size(); ++a)
        for (std::size_t b = 0; b < maps.size(); ++b) {
            elem d = q.top();
            for (std::size_t i = 0; i < y.size(); ++i) d = q.meet(d, z(maps[a][i], maps[b][i]));
            out.at(a, b) = d;
        }
    return out;
}

space power_cat(const space& x, const std::vector<std::string>& a, std::size_t cap) {
    return hom_cat(discrete(x.q, a), x, cap);
}

relation level_relation(const space& x, elem r) {
    relation out(x.size(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x.q->leq(r, x(i, j))) out.set(i, j);
    return out;
}

preorder underlying_preorder(const space& x) {
    preorder p{x.objects, level_relation(x, x.q->unit())};
    return p;
}

space close_space(space m) {
    const quantale& q = *m.q;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = q.join(m(i, i), q.unit());
    // Iterate the join-tensor product until stable; finite lattices and
    // integral quantales both stabilise.
    for (std::size_t round = 0; round < n * n * 64 + 8; ++round) {
        bool changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const elem v = q.join(m(a, c), q.tensor(m(a, b), m(b, c)));
                    if (!q.eq(v, m(a, c))) {
                        m.at(a, c) = v;
                        changed = true;
                    }
                }
        if (!changed) return m;
    }
    throw iteration_error("close_space did not stabilise");
}

} // namespace vcat
