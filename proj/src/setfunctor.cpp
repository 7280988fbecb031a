#include "vcat/setfunctor.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>

namespace vcat {

namespace functors {

namespace {
functor_ptr make(functor_op op, std::size_t param = 0, std::vector<functor_ptr> args = {}) {
    auto t = std::make_shared<set_functor>();
    t->op = op;
    t->param = param;
    t->args = std::move(args);
    return t;
}
} // namespace

functor_ptr identity() { return make(functor_op::identity); }

functor_ptr constant(std::vector<std::string> elements) {
    auto t = std::make_shared<set_functor>();
    t->op = functor_op::constant;
    t->labels = std::move(elements);
    return t;
}

functor_ptr power(std::size_t n) { return make(functor_op::power, n); }
functor_ptr product(functor_ptr a, functor_ptr b) { return make(functor_op::product, 0, {a, b}); }
functor_ptr coproduct(functor_ptr a, functor_ptr b) { return make(functor_op::coproduct, 0, {a, b}); }
functor_ptr list(std::size_t max_len) { return make(functor_op::list, max_len); }
functor_ptr powerset() { return make(functor_op::powerset); }
functor_ptr multiset(std::size_t max_size) { return make(functor_op::multiset, max_size); }
functor_ptr compose(functor_ptr outer, functor_ptr inner) { return make(functor_op::compose, 0, {outer, inner}); }

} // namespace functors

// ---------------------------------------------------------------- parsing

namespace {

struct parser {
    const std::string& s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error("functor expression: expected '" + std::string(1, c) + "' at " + std::to_string(pos));
    }
    std::string word() {
        skip();
        std::size_t b = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '-'))
            ++pos;
        if (b == pos) throw parse_error("functor expression: expected a name at " + std::to_string(pos));
        return s.substr(b, pos - b);
    }
    std::size_t number() {
        std::string w = word();
        if (!std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw parse_error("functor expression: expected a number, got '" + w + "'");
        return std::stoul(w);
    }

    functor_ptr expr() {
        const std::string name = word();
        if (name == "identity" || name == "id") return functors::identity();
        if (name == "powerset" || name == "pow") return functors::powerset();
        if (name == "const" || name == "constant") {
            expect('(');
            std::vector<std::string> els;
            if (!eat(')')) {
                do els.push_back(word());
                while (eat(','));
                expect(')');
            }
            return functors::constant(els);
        }
        if (name == "power" || name == "list" || name == "multiset") {
            if (!eat('('))
                throw parse_error("functor expression: " + name + " needs an explicit bound, e.g. " + name + "(2)");
            std::size_t n = number();
            expect(')');
            if (name == "power") return functors::power(n);
            if (name == "list") return functors::list(n);
            return functors::multiset(n);
        }
        if (name == "product" || name == "coproduct" || name == "compose") {
            expect('(');
            std::vector<functor_ptr> parts{expr()};
            while (eat(',')) parts.push_back(expr());
            expect(')');
            if (parts.size() < 2) throw parse_error("functor expression: " + name + " needs two or more operands");
            functor_ptr acc = parts.back();
            for (std::size_t i = parts.size() - 1; i-- > 0;) {
                if (name == "product") acc = functors::product(parts[i], acc);
                else if (name == "coproduct") acc = functors::coproduct(parts[i], acc);
                else acc = functors::compose(parts[i], acc);
            }
            return acc;
        }
        throw parse_error("functor expression: unknown constructor '" + name + "'");
    }
};

} // namespace

functor_ptr parse_functor(const std::string& text) {
    parser p{text};
    auto t = p.expr();
    p.skip();
    if (p.pos != text.size()) throw parse_error("functor expression: trailing input at " + std::to_string(p.pos));
    return t;
}

std::string to_string(const set_functor& t) {
    switch (t.op) {
    case functor_op::identity: return "identity";
    case functor_op::constant: {
        std::string s = "const(";
        for (std::size_t i = 0; i < t.labels.size(); ++i) s += (i ? "," : "") + t.labels[i];
        return s + ")";
    }
    case functor_op::power: return "power(" + std::to_string(t.param) + ")";
    case functor_op::product: return "product(" + to_string(*t.args[0]) + "," + to_string(*t.args[1]) + ")";
    case functor_op::coproduct: return "coproduct(" + to_string(*t.args[0]) + "," + to_string(*t.args[1]) + ")";
    case functor_op::list: return "list(" + std::to_string(t.param) + ")";
    case functor_op::powerset: return "powerset";
    case functor_op::multiset: return "multiset(" + std::to_string(t.param) + ")";
    case functor_op::compose: return "compose(" + to_string(*t.args[0]) + "," + to_string(*t.args[1]) + ")";
    }
    return "?";
}

bool preserves_weak_pullbacks(const set_functor& t) {
    if (!t.preserves_weak_pullbacks) return false;
    return std::all_of(t.args.begin(), t.args.end(), [](const functor_ptr& a) { return preserves_weak_pullbacks(*a); });
}

// ---------------------------------------------------------------- carriers

namespace {

struct capped {
    std::size_t cap;
    std::size_t check(double v) const {
        if (v > static_cast<double>(cap))
            throw resource_error("functor carrier would exceed " + std::to_string(cap) + " elements");
        return static_cast<std::size_t>(v);
    }
};

double ipow(double b, std::size_t e) {
    double r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

// Multisets of size s over m elements.
double multichoose(std::size_t m, std::size_t s) {
    if (s == 0) return 1;
    if (m == 0) return 0;
    double r = 1;
    for (std::size_t i = 1; i <= s; ++i) r = r * static_cast<double>(m + i - 1) / static_cast<double>(i);
    return std::round(r);
}

std::size_t mc(std::size_t m, std::size_t s) { return static_cast<std::size_t>(multichoose(m, s)); }

// Rank of a sorted tuple among sorted tuples of its size over m elements.
std::size_t bag_rank(const std::vector<std::size_t>& t, std::size_t m) {
    std::size_t rank = 0, lo = 0;
    const std::size_t s = t.size();
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t v = lo; v < t[i]; ++v) rank += mc(m - v, s - i - 1);
        lo = t[i];
    }
    return rank;
}

std::vector<std::size_t> bag_unrank(std::size_t rank, std::size_t s, std::size_t m) {
    std::vector<std::size_t> t(s);
    std::size_t lo = 0;
    for (std::size_t i = 0; i < s; ++i) {
        std::size_t v = lo;
        while (true) {
            std::size_t c = mc(m - v, s - i - 1);
            if (rank < c) break;
            rank -= c;
            ++v;
        }
        t[i] = v;
        lo = v;
    }
    return t;
}

std::size_t bag_offset(std::size_t m, std::size_t s) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < s; ++j) off += mc(m, j);
    return off;
}

std::size_t list_offset(std::size_t m, std::size_t len) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < len; ++j) off += static_cast<std::size_t>(ipow(static_cast<double>(m), j));
    return off;
}

std::vector<std::size_t> digits(std::size_t idx, std::size_t base, std::size_t k) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
        d[i] = idx % base;
        idx /= base;
    }
    return d;
}

std::size_t undigits(const std::vector<std::size_t>& d, std::size_t base) {
    std::size_t idx = 0;
    for (std::size_t v : d) idx = idx * base + v;
    return idx;
}

using leaf_decode = std::function<term(std::size_t)>;
using leaf_encode = std::function<std::size_t(const term&)>;

term atom(std::size_t i) { return term{term::tag::atom, i, {}}; }

term decode_with(const set_functor& t, std::size_t n, std::size_t idx, const leaf_decode& leaf);
std::size_t encode_with(const set_functor& t, std::size_t n, const term& x, const leaf_encode& leaf);

} // namespace

std::size_t card(const set_functor& t, std::size_t n, std::size_t cap) {
    capped c{cap};
    switch (t.op) {
    case functor_op::identity: return c.check(static_cast<double>(n));
    case functor_op::constant: return t.labels.size();
    case functor_op::power: return c.check(ipow(static_cast<double>(n), t.param));
    case functor_op::product:
        return c.check(static_cast<double>(card(*t.args[0], n, cap)) * static_cast<double>(card(*t.args[1], n, cap)));
    case functor_op::coproduct:
        return c.check(static_cast<double>(card(*t.args[0], n, cap)) + static_cast<double>(card(*t.args[1], n, cap)));
    case functor_op::list: {
        double s = 0;
        for (std::size_t l = 0; l <= t.param; ++l) s += ipow(static_cast<double>(n), l);
        return c.check(s);
    }
    case functor_op::powerset:
        if (n >= 63) c.check(1e300);
        return c.check(ipow(2.0, n));
    case functor_op::multiset: {
        double s = 0;
        for (std::size_t l = 0; l <= t.param; ++l) s += multichoose(n, l);
        return c.check(s);
    }
    case functor_op::compose: return card(*t.args[0], card(*t.args[1], n, cap), cap);
    }
    return 0;
}

object_map fmap(const set_functor& t, const object_map& f, std::size_t n_dst) {
    const std::size_t n = f.size();
    switch (t.op) {
    case functor_op::identity: return f;
    case functor_op::constant: {
        object_map out(t.labels.size());
        std::iota(out.begin(), out.end(), 0);
        return out;
    }
    case functor_op::power: {
        const std::size_t size = card(t, n);
        object_map out(size);
        for (std::size_t i = 0; i < size; ++i) {
            auto d = digits(i, n, t.param);
            for (auto& v : d) v = f[v];
            out[i] = undigits(d, n_dst);
        }
        return out;
    }
    case functor_op::product: {
        auto fa = fmap(*t.args[0], f, n_dst), fb = fmap(*t.args[1], f, n_dst);
        const std::size_t nb_dst = card(*t.args[1], n_dst);
        object_map out(fa.size() * fb.size());
        for (std::size_t a = 0; a < fa.size(); ++a)
            for (std::size_t b = 0; b < fb.size(); ++b) out[a * fb.size() + b] = fa[a] * nb_dst + fb[b];
        return out;
    }
    case functor_op::coproduct: {
        auto fa = fmap(*t.args[0], f, n_dst), fb = fmap(*t.args[1], f, n_dst);
        const std::size_t na_dst = card(*t.args[0], n_dst);
        object_map out(fa);
        for (std::size_t b : fb) out.push_back(na_dst + b);
        return out;
    }
    case functor_op::list: {
        object_map out;
        out.reserve(card(t, n));
        for (std::size_t len = 0; len <= t.param; ++len) {
            const std::size_t block = static_cast<std::size_t>(ipow(static_cast<double>(n), len));
            const std::size_t off_dst = list_offset(n_dst, len);
            for (std::size_t i = 0; i < block; ++i) {
                auto d = digits(i, n, len);
                for (auto& v : d) v = f[v];
                out.push_back(off_dst + undigits(d, n_dst));
            }
        }
        return out;
    }
    case functor_op::powerset: {
        const std::size_t size = card(t, n);
        object_map out(size, 0);
        for (std::size_t mask = 1; mask < size; ++mask) {
            const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
            out[mask] = out[mask & (mask - 1)] | (std::size_t{1} << f[low]);
        }
        return out;
    }
    case functor_op::multiset: {
        object_map out;
        out.reserve(card(t, n));
        for (std::size_t s = 0; s <= t.param; ++s) {
            const std::size_t block = mc(n, s), off_dst = bag_offset(n_dst, s);
            for (std::size_t i = 0; i < block; ++i) {
                auto b = bag_unrank(i, s, n);
                for (auto& v : b) v = f[v];
                std::sort(b.begin(), b.end());
                out.push_back(off_dst + bag_rank(b, n_dst));
            }
        }
        return out;
    }
    case functor_op::compose: {
        auto g = fmap(*t.args[1], f, n_dst);
        return fmap(*t.args[0], g, card(*t.args[1], n_dst));
    }
    }
    return {};
}

namespace {

term decode_with(const set_functor& t, std::size_t n, std::size_t idx, const leaf_decode& leaf) {
    switch (t.op) {
    case functor_op::identity: return leaf(idx);
    case functor_op::constant: return term{term::tag::constant, idx, {}};
    case functor_op::power: {
        term x{term::tag::tuple, 0, {}};
        for (std::size_t v : digits(idx, n, t.param)) x.kids.push_back(leaf(v));
        return x;
    }
    case functor_op::product: {
        const std::size_t nb = card(*t.args[1], n);
        return term{term::tag::tuple, 0,
                    {decode_with(*t.args[0], n, idx / nb, leaf), decode_with(*t.args[1], n, idx % nb, leaf)}};
    }
    case functor_op::coproduct: {
        const std::size_t na = card(*t.args[0], n);
        if (idx < na) return term{term::tag::left, 0, {decode_with(*t.args[0], n, idx, leaf)}};
        return term{term::tag::right, 0, {decode_with(*t.args[1], n, idx - na, leaf)}};
    }
    case functor_op::list: {
        std::size_t len = 0;
        while (idx >= static_cast<std::size_t>(ipow(static_cast<double>(n), len))) {
            idx -= static_cast<std::size_t>(ipow(static_cast<double>(n), len));
            ++len;
        }
        term x{term::tag::seq, 0, {}};
        for (std::size_t v : digits(idx, n, len)) x.kids.push_back(leaf(v));
        return x;
    }
    case functor_op::powerset: {
        term x{term::tag::set, 0, {}};
        for (std::size_t i = 0; i < n; ++i)
            if (idx >> i & 1u) x.kids.push_back(leaf(i));
        return x;
    }
    case functor_op::multiset: {
        std::size_t s = 0;
        while (idx >= mc(n, s)) {
            idx -= mc(n, s);
            ++s;
        }
        term x{term::tag::bag, 0, {}};
        for (std::size_t v : bag_unrank(idx, s, n)) x.kids.push_back(leaf(v));
        return x;
    }
    case functor_op::compose: {
        const set_functor& inner = *t.args[1];
        const std::size_t m = card(inner, n);
        return decode_with(*t.args[0], m, idx, [&](std::size_t i) { return decode_with(inner, n, i, leaf); });
    }
    }
    return {};
}

std::size_t encode_with(const set_functor& t, std::size_t n, const term& x, const leaf_encode& leaf) {
    auto bad = [] { return domain_error("term does not belong to the functor carrier"); };
    switch (t.op) {
    case functor_op::identity: return leaf(x);
    case functor_op::constant:
        if (x.kind != term::tag::constant || x.value >= t.labels.size()) throw bad();
        return x.value;
    case functor_op::power: {
        if (x.kind != term::tag::tuple || x.kids.size() != t.param) throw bad();
        std::vector<std::size_t> d;
        for (auto& k : x.kids) d.push_back(leaf(k));
        return undigits(d, n);
    }
    case functor_op::product: {
        if (x.kind != term::tag::tuple || x.kids.size() != 2) throw bad();
        return encode_with(*t.args[0], n, x.kids[0], leaf) * card(*t.args[1], n) +
               encode_with(*t.args[1], n, x.kids[1], leaf);
    }
    case functor_op::coproduct:
        if (x.kind == term::tag::left && x.kids.size() == 1) return encode_with(*t.args[0], n, x.kids[0], leaf);
        if (x.kind == term::tag::right && x.kids.size() == 1)
            return card(*t.args[0], n) + encode_with(*t.args[1], n, x.kids[0], leaf);
        throw bad();
    case functor_op::list: {
        if (x.kind != term::tag::seq || x.kids.size() > t.param) throw bad();
        std::vector<std::size_t> d;
        for (auto& k : x.kids) d.push_back(leaf(k));
        return list_offset(n, d.size()) + undigits(d, n);
    }
    case functor_op::powerset: {
        if (x.kind != term::tag::set) throw bad();
        std::size_t mask = 0;
        for (auto& k : x.kids) mask |= std::size_t{1} << leaf(k);
        return mask;
    }
    case functor_op::multiset: {
        if (x.kind != term::tag::bag || x.kids.size() > t.param) throw bad();
        std::vector<std::size_t> b;
        for (auto& k : x.kids) b.push_back(leaf(k));
        std::sort(b.begin(), b.end());
        return bag_offset(n, b.size()) + bag_rank(b, n);
    }
    case functor_op::compose: {
        const set_functor& inner = *t.args[1];
        const std::size_t m = card(inner, n);
        return encode_with(*t.args[0], m, x, [&](const term& k) { return encode_with(inner, n, k, leaf); });
    }
    }
    return 0;
}

} // namespace

term decode(const set_functor& t, std::size_t n, std::size_t index) {
    if (index >= card(t, n)) throw domain_error("carrier index out of range");
    return decode_with(t, n, index, atom);
}

std::size_t encode(const set_functor& t, std::size_t n, const term& x) {
    return encode_with(t, n, x, [n](const term& k) -> std::size_t {
        if (k.kind != term::tag::atom || k.value >= n) throw domain_error("term does not belong to the functor carrier");
        return k.value;
    });
}

namespace {

using leaf_render = std::function<std::string(const term&)>;

std::string render_with(const set_functor& t, const term& x, const leaf_render& leaf) {
    auto each = [&](const char* open, const char* close, const leaf_render& kid) {
        std::string s = open;
        for (std::size_t i = 0; i < x.kids.size(); ++i) {
            if (i) s += ",";
            s += kid(x.kids[i]);
        }
        return s + close;
    };
    switch (t.op) {
    case functor_op::identity: return leaf(x);
    case functor_op::constant: return x.value < t.labels.size() ? t.labels[x.value] : "?";
    case functor_op::power: return each("(", ")", leaf);
    case functor_op::list: return each("[", "]", leaf);
    case functor_op::powerset: return each("{", "}", leaf);
    case functor_op::multiset: return each("{|", "|}", leaf);
    case functor_op::product:
        if (x.kids.size() != 2) return "?";
        return "(" + render_with(*t.args[0], x.kids[0], leaf) + "," + render_with(*t.args[1], x.kids[1], leaf) + ")";
    case functor_op::coproduct:
        if (x.kids.size() != 1) return "?";
        if (x.kind == term::tag::left) return "inl(" + render_with(*t.args[0], x.kids[0], leaf) + ")";
        return "inr(" + render_with(*t.args[1], x.kids[0], leaf) + ")";
    case functor_op::compose: {
        const set_functor& inner = *t.args[1];
        return render_with(*t.args[0], x, [&](const term& k) { return render_with(inner, k, leaf); });
    }
    }
    return "?";
}

} // namespace

std::string render(const set_functor& t, const term& x, const std::vector<std::string>& labels) {
    return render_with(t, x, [&](const term& k) {
        return k.value < labels.size() ? labels[k.value] : std::to_string(k.value);
    });
}

std::vector<std::string> apply_on_set(const set_functor& t, const std::vector<std::string>& labels) {
    const std::size_t n = labels.size(), size = card(t, n);
    std::vector<std::string> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) out.push_back(render(t, decode(t, n, i), labels));
    return out;
}

// ---------------------------------------------------------------- relation lifting

namespace {

bool perfect_matching(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, const relation& r) {
    const std::size_t k = a.size();
    std::vector<int> match(k, -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& seen) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!r(a[i], b[j]) || seen[j]) continue;
            seen[j] = 1;
            if (match[j] < 0 || augment(static_cast<std::size_t>(match[j]), seen)) {
                match[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<char> seen(k, 0);
        if (!augment(i, seen)) return false;
    }
    return true;
}

} // namespace

relation relation_lift(const set_functor& t, const relation& r) {
    const std::size_t n = r.rows, m = r.cols;
    switch (t.op) {
    case functor_op::identity: return r;
    case functor_op::constant: return relation::identity(t.labels.size());
    case functor_op::power: {
        const std::size_t a = card(t, n), b = card(t, m);
        relation out(a, b);
        for (std::size_t i = 0; i < a; ++i) {
            auto di = digits(i, n, t.param);
            for (std::size_t j = 0; j < b; ++j) {
                auto dj = digits(j, m, t.param);
                bool ok = true;
                for (std::size_t k = 0; k < t.param && ok; ++k) ok = r(di[k], dj[k]);
                if (ok) out.set(i, j);
            }
        }
        return out;
    }
    case functor_op::product: {
        auto ra = relation_lift(*t.args[0], r), rb = relation_lift(*t.args[1], r);
        relation out(ra.rows * rb.rows, ra.cols * rb.cols);
        for (std::size_t a1 = 0; a1 < ra.rows; ++a1)
            for (std::size_t a2 = 0; a2 < ra.cols; ++a2)
                if (ra(a1, a2))
                    for (std::size_t b1 = 0; b1 < rb.rows; ++b1)
                        for (std::size_t b2 = 0; b2 < rb.cols; ++b2)
                            if (rb(b1, b2)) out.set(a1 * rb.rows + b1, a2 * rb.cols + b2);
        return out;
    }
    case functor_op::coproduct: {
        auto ra = relation_lift(*t.args[0], r), rb = relation_lift(*t.args[1], r);
        relation out(ra.rows + rb.rows, ra.cols + rb.cols);
        for (auto [i, j] : ra.pairs()) out.set(i, j);
        for (auto [i, j] : rb.pairs()) out.set(ra.rows + i, ra.cols + j);
        return out;
    }
    case functor_op::list: {
        relation out(card(t, n), card(t, m));
        for (std::size_t len = 0; len <= t.param; ++len) {
            const std::size_t bn = static_cast<std::size_t>(ipow(static_cast<double>(n), len));
            const std::size_t bm = static_cast<std::size_t>(ipow(static_cast<double>(m), len));
            const std::size_t on = list_offset(n, len), om = list_offset(m, len);
            for (std::size_t i = 0; i < bn; ++i) {
                auto di = digits(i, n, len);
                for (std::size_t j = 0; j < bm; ++j) {
                    auto dj = digits(j, m, len);
                    bool ok = true;
                    for (std::size_t k = 0; k < len && ok; ++k) ok = r(di[k], dj[k]);
                    if (ok) out.set(on + i, om + j);
                }
            }
        }
        return out;
    }
    case functor_op::powerset: {
        const std::size_t a = card(t, n), b = card(t, m);
        std::vector<std::size_t> row(n, 0), col(m, 0);
        for (auto [i, j] : r.pairs()) {
            row[i] |= std::size_t{1} << j;
            col[j] |= std::size_t{1} << i;
        }
        // up[u]: everything related to some element of u; down[v] likewise.
        std::vector<std::size_t> up(a, 0), down(b, 0);
        for (std::size_t u = 1; u < a; ++u) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(u));
            up[u] = up[u & (u - 1)] | row[low];
        }
        for (std::size_t v = 1; v < b; ++v) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(v));
            down[v] = down[v & (v - 1)] | col[low];
        }
        relation out(a, b);
        for (std::size_t u = 0; u < a; ++u)
            for (std::size_t v = 0; v < b; ++v)
                if ((v & ~up[u]) == 0 && (u & ~down[v]) == 0) out.set(u, v);
        return out;
    }
    case functor_op::multiset: {
        relation out(card(t, n), card(t, m));
        for (std::size_t s = 0; s <= t.param; ++s) {
            const std::size_t bn = mc(n, s), bm = mc(m, s), on = bag_offset(n, s), om = bag_offset(m, s);
            for (std::size_t i = 0; i < bn; ++i) {
                auto x = bag_unrank(i, s, n);
                for (std::size_t j = 0; j < bm; ++j)
                    if (perfect_matching(x, bag_unrank(j, s, m), r)) out.set(on + i, om + j);
            }
        }
        return out;
    }
    case functor_op::compose: return relation_lift(*t.args[0], relation_lift(*t.args[1], r));
    }
    return {};
}

relation relation_lift_span(const set_functor& t, const relation& r) {
    object_map p, q;
    for (auto [i, j] : r.pairs()) {
        p.push_back(i);
        q.push_back(j);
    }
    const object_map tp = fmap(t, p, r.rows), tq = fmap(t, q, r.cols);
    relation out(card(t, r.rows), card(t, r.cols));
    for (std::size_t c = 0; c < tp.size(); ++c) out.set(tp[c], tq[c]);
    return out;
}

} // namespace vcat
