#include "vcat/quantale.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

namespace vcat {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

int idx(elem a) { return static_cast<int>(a); }

std::string triple(const quantale& q, elem a, elem b, elem c) {
    return "(" + q.format(a) + "," + q.format(b) + "," + q.format(c) + ")";
}

std::string pair(const quantale& q, elem a, elem b) {
    return "(" + q.format(a) + "," + q.format(b) + ")";
}

} // namespace

bool law_report::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const entry& e) { return e.pass; });
}

void law_report::add(std::string law, bool pass, std::string detail) {
    entries.push_back({std::move(law), pass, std::move(detail)});
}

void law_report::fail_once(const std::string& law, const std::string& detail) {
    for (auto& e : entries) {
        if (e.law == law) {
            if (e.pass) {
                e.pass = false;
                e.detail = detail;
            }
            return;
        }
    }
    entries.push_back({law, false, detail});
}

// ---------------------------------------------------------------- factories

qptr quantale::finite(std::string name, std::vector<std::string> labels,
                      std::vector<char> leq, std::vector<int> tensor,
                      int unit, quantale_kind kind) {
    const std::size_t n = labels.size();
    if (n == 0)
        throw domain_error("finite quantale needs at least one element");
    if (leq.size() != n * n || tensor.size() != n * n)
        throw domain_error("table size does not match element count");
    for (int t : tensor)
        if (t < 0 || static_cast<std::size_t>(t) >= n)
            throw domain_error("tensor table entry outside carrier");
    if (unit < 0 || static_cast<std::size_t>(unit) >= n)
        throw domain_error("unit outside carrier");
    std::shared_ptr<quantale> q(new quantale());
    q->kind_ = kind;
    q->name_ = std::move(name);
    q->labels_ = std::move(labels);
    q->leq_ = std::move(leq);
    q->tensor_ = std::move(tensor);
    q->unit_ = unit;
    q->finish_finite();
    return q;
}

void quantale::finish_finite() {
    const int n = static_cast<int>(size());
    auto le = [&](int a, int b) { return leq_[a * n + b] != 0; };

    chain_ = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!le(a, b) && !le(b, a)) chain_ = false;

    join_.assign(n * n, -1);
    meet_.assign(n * n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int lub = -1, glb = -1;
            for (int c = 0; c < n; ++c) {
                if (le(a, c) && le(b, c)) {
                    bool least = true;
                    for (int d = 0; d < n && least; ++d)
                        if (le(a, d) && le(b, d) && !le(c, d)) least = false;
                    if (least) lub = c;
                }
                if (le(c, a) && le(c, b)) {
                    bool greatest = true;
                    for (int d = 0; d < n && greatest; ++d)
                        if (le(d, a) && le(d, b) && !le(d, c)) greatest = false;
                    if (greatest) glb = c;
                }
            }
            join_[a * n + b] = lub;
            meet_[a * n + b] = glb;
        }
    }

    int bot = -1, top = -1;
    for (int c = 0; c < n; ++c) {
        bool is_bot = true, is_top = true;
        for (int d = 0; d < n; ++d) {
            if (!le(c, d)) is_bot = false;
            if (!le(d, c)) is_top = false;
        }
        if (is_bot) bot = c;
        if (is_top) top = c;
    }
    lattice_ = bot >= 0 && top >= 0 &&
               std::none_of(join_.begin(), join_.end(), [](int v) { return v < 0; });
    bot_ = bot < 0 ? 0 : bot;
    top_ = top < 0 ? 0 : top;

    hom_.assign(n * n, -1);
    if (lattice_) {
        for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s) {
                int acc = bot;
                for (int t = 0; t < n; ++t)
                    if (le(tensor_[t * n + r], s)) acc = join_[acc * n + t];
                hom_[r * n + s] = acc;
            }
        }
    }

    below_.clear();
    cd_ = false;
    if (lattice_ && n <= 20) {
        std::vector<std::uint32_t> down(n, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (le(b, a)) down[a] |= 1u << b;
        std::vector<std::uint32_t> inter(n, (n == 32 ? ~0u : ((1u << n) - 1)));
        const std::uint32_t full = 1u << n;
        for (std::uint32_t mask = 0; mask < full; ++mask) {
            bool closed = true;
            int j = bot;
            for (int a = 0; a < n && closed; ++a) {
                if (mask >> a & 1u) {
                    if ((down[a] & mask) != down[a]) closed = false;
                    j = join_[j * n + a];
                }
            }
            if (!closed) continue;
            for (int r = 0; r < n; ++r)
                if (le(r, j)) inter[r] &= mask;
        }
        below_.assign(n * n, 0);
        for (int s = 0; s < n; ++s)
            for (int r = 0; r < n; ++r)
                below_[s * n + r] = (inter[r] >> s & 1u) ? 1 : 0;
        cd_ = true;
        for (int r = 0; r < n && cd_; ++r) {
            int j = bot;
            for (int s = 0; s < n; ++s)
                if (below_[s * n + r]) j = join_[j * n + s];
            if (!le(r, j)) cd_ = false;
        }
    }
}

qptr quantale::chain(int n, int unit) {
    // One instance per (n, unit) so that spaces built separately agree on their quantale.
    static std::mutex mu;
    static std::map<std::pair<int, int>, qptr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, unit}];
    if (!slot) slot = make_chain(n, unit);
    return slot;
}

qptr quantale::make_chain(int n, int unit) {
    if (n < 1) throw domain_error("chain needs at least one element");
    if (unit < 0 || unit >= n) throw domain_error("chain unit outside carrier");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<char> leq(n * n);
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            leq[a * n + b] = a <= b;
            int v;
            if (a == 0 || b == 0) v = 0;
            else if (a <= unit && b <= unit) v = std::min(a, b);
            else v = std::max(a, b);
            t[a * n + b] = v;
        }
    }
    std::string name = "chain-" + std::to_string(n);
    if (unit != n - 1) name += "(e=" + std::to_string(unit) + ")";
    auto q = finite(name, labels, leq, t, unit, quantale_kind::chain);
    auto rep = check_laws(*q);
    if (!rep.ok())
        throw domain_error("chain-" + std::to_string(n) + " with unit " + std::to_string(unit) +
                           " is not a quantale");
    return q;
}

qptr quantale::boolean2() {
    static const qptr q = [] {
        std::vector<char> leq{1, 1, 0, 1};
        std::vector<int> t{0, 0, 0, 1};
        return finite("boolean-2", {"0", "1"}, leq, t, 1, quantale_kind::boolean2);
    }();
    return q;
}

qptr quantale::lawvere() {
    static const qptr q = [] {
        std::shared_ptr<quantale> p(new quantale());
        p->kind_ = quantale_kind::lawvere;
        p->name_ = "lawvere";
        p->bot_ = inf;
        p->top_ = 0;
        p->unit_ = 0;
        p->chain_ = true;
        p->lattice_ = true;
        p->cd_ = true;
        return qptr(p);
    }();
    return q;
}

qptr quantale::ultrametric() {
    static const qptr q = [] {
        std::shared_ptr<quantale> p(new quantale());
        p->kind_ = quantale_kind::ultrametric;
        p->name_ = "ultrametric";
        p->bot_ = 1;
        p->top_ = 0;
        p->unit_ = 0;
        p->chain_ = true;
        p->lattice_ = true;
        p->cd_ = true;
        return qptr(p);
    }();
    return q;
}

qptr quantale::ultrametric_grid(std::vector<double> values) {
    values.push_back(0.0);
    values.push_back(1.0);
    for (double v : values)
        if (!(v >= 0.0 && v <= 1.0)) throw domain_error("ultrametric grid values must lie in [0,1]");
    // Index 0 is bottom (distance 1), the last index is top (distance 0).
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const int n = static_cast<int>(values.size());
    std::vector<std::string> labels;
    for (double v : values) {
        std::ostringstream os;
        os << v;
        labels.push_back(os.str());
    }
    std::vector<char> leq(n * n);
    std::vector<int> t(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            leq[a * n + b] = a <= b;
            t[a * n + b] = std::min(a, b);
        }
    return finite("ultrametric-grid", labels, leq, t, n - 1);
}

qptr quantale::free_commutative_monoid(std::vector<std::string> monoid,
                                       std::vector<std::vector<int>> mult, int unit) {
    const int m = static_cast<int>(monoid.size());
    if (m == 0 || m > 5) throw domain_error("monoid must have between 1 and 5 elements");
    if (static_cast<int>(mult.size()) != m) throw domain_error("monoid table has wrong size");
    for (auto& row : mult) {
        if (static_cast<int>(row.size()) != m) throw domain_error("monoid table has wrong size");
        for (int v : row)
            if (v < 0 || v >= m) throw domain_error("monoid table entry outside carrier");
    }
    if (unit < 0 || unit >= m) throw domain_error("monoid unit outside carrier");
    for (int a = 0; a < m; ++a) {
        if (mult[unit][a] != a || mult[a][unit] != a)
            throw domain_error("monoid unit law fails at " + monoid[a]);
        for (int b = 0; b < m; ++b) {
            if (mult[a][b] != mult[b][a])
                throw domain_error("monoid is not commutative at (" + monoid[a] + "," + monoid[b] + ")");
            for (int c = 0; c < m; ++c)
                if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
                    throw domain_error("monoid is not associative at (" + monoid[a] + "," + monoid[b] +
                                       "," + monoid[c] + ")");
        }
    }
    const int n = 1 << m;
    std::vector<std::string> labels;
    for (int s = 0; s < n; ++s) {
        std::string l = "{";
        bool first = true;
        for (int a = 0; a < m; ++a)
            if (s >> a & 1) {
                if (!first) l += ",";
                l += monoid[a];
                first = false;
            }
        labels.push_back(l + "}");
    }
    std::vector<char> leq(n * n);
    std::vector<int> t(n * n);
    for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
            leq[s * n + u] = (s & u) == s;
            int prod = 0;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if ((s >> a & 1) && (u >> b & 1)) prod |= 1 << mult[a][b];
            t[s * n + u] = prod;
        }
    return finite("free-commutative-monoid", labels, leq, t, 1 << unit,
                  quantale_kind::free_commutative_monoid);
}

// ---------------------------------------------------------------- operations

std::vector<elem> quantale::carrier() const {
    if (!is_finite()) throw unsupported_error(name_ + " has an infinite carrier");
    std::vector<elem> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = static_cast<elem>(i);
    return out;
}

bool quantale::contains(elem a) const {
    if (std::isnan(a)) return false;
    switch (kind_) {
    case quantale_kind::lawvere:
        return a >= -tolerance;
    case quantale_kind::ultrametric:
        return a >= -tolerance && a <= 1 + tolerance;
    default:
        return a >= 0 && a < static_cast<double>(size()) && a == std::floor(a);
    }
}

void quantale::check(elem a) const {
    if (!contains(a)) throw domain_error("element " + std::to_string(a) + " is not in " + name_);
}

bool quantale::leq(elem a, elem b) const {
    if (is_finite()) return leq_[idx(a) * size() + idx(b)] != 0;
    if (std::isinf(a)) return true;
    if (std::isinf(b)) return false;
    return a >= b - tolerance;
}

bool quantale::eq(elem a, elem b) const {
    if (is_finite()) return idx(a) == idx(b);
    if (std::isinf(a) || std::isinf(b)) return std::isinf(a) && std::isinf(b);
    return std::fabs(a - b) <= tolerance;
}

elem quantale::join(elem a, elem b) const {
    check(a);
    check(b);
    if (is_finite()) return join_[idx(a) * size() + idx(b)];
    return std::min(a, b);
}

elem quantale::meet(elem a, elem b) const {
    check(a);
    check(b);
    if (is_finite()) return meet_[idx(a) * size() + idx(b)];
    return std::max(a, b);
}

elem quantale::join(std::span<const elem> s) const {
    elem acc = bot_;
    for (elem a : s) acc = join(acc, a);
    return acc;
}

elem quantale::meet(std::span<const elem> s) const {
    elem acc = top_;
    for (elem a : s) acc = meet(acc, a);
    return acc;
}

elem quantale::tensor(elem a, elem b) const {
    check(a);
    check(b);
    switch (kind_) {
    case quantale_kind::lawvere:
        return a + b;
    case quantale_kind::ultrametric:
        return std::max(a, b);
    default:
        return tensor_[idx(a) * size() + idx(b)];
    }
}

elem quantale::hom(elem r, elem s) const {
    check(r);
    check(s);
    switch (kind_) {
    case quantale_kind::lawvere:
        if (std::isinf(r) || r >= s - tolerance) return 0.0;
        return s - r;
    case quantale_kind::ultrametric:
        if (r >= s - tolerance) return 0.0;
        return s;
    default:
        return hom_[idx(r) * size() + idx(s)];
    }
}

bool quantale::integral() const { return eq(unit_, top_); }

bool quantale::zero_divisor_free() const {
    if (!is_finite()) return true;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (tensor(a, b) == bot_ && a != bot_ && b != bot_) return false;
    return true;
}

bool quantale::completely_distributive() const { return cd_; }

structure_flags quantale::flags() const {
    return {integral(), zero_divisor_free(), completely_distributive()};
}

bool quantale::totally_below(elem s, elem r) const {
    if (!cd_) throw unsupported_error(name_ + " is not known to be completely distributive");
    if (!is_finite()) {
        // Distances: s << r iff s is strictly farther than r.
        if (std::isinf(r)) return false;
        if (std::isinf(s)) return true;
        return s > r + tolerance;
    }
    return below_[idx(s) * size() + idx(r)] != 0;
}

bool quantale::tensor_preserves_totally_below() const {
    if (!cd_) throw unsupported_error(name_ + " is not known to be completely distributive");
    if (!is_finite()) return true;
    const std::size_t n = size();
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = 0; r < n; ++r) {
            if (!below_[s * n + r]) continue;
            for (std::size_t s2 = 0; s2 < n; ++s2)
                for (std::size_t r2 = 0; r2 < n; ++r2)
                    if (below_[s2 * n + r2] && !totally_below(tensor(s, s2), tensor(r, r2))) return false;
        }
    return true;
}

std::string quantale::format(elem a) const {
    if (is_finite()) {
        if (!contains(a)) return "?";
        return labels_[idx(a)];
    }
    if (std::isinf(a)) return "inf";
    if (std::fabs(a) < tolerance) a = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", a);
    return buf;
}

elem quantale::parse(const std::string& text) const {
    if (is_finite()) {
        for (std::size_t i = 0; i < size(); ++i)
            if (labels_[i] == text) return static_cast<elem>(i);
        throw parse_error("'" + text + "' is not an element of " + name_);
    }
    if (text == "inf" || text == "infinity" || text == "∞") {
        if (kind_ == quantale_kind::ultrametric) throw parse_error("ultrametric distances lie in [0,1]");
        return inf;
    }
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw parse_error("'" + text + "' is not a distance");
    }
    if (used != text.size()) throw parse_error("'" + text + "' is not a distance");
    if (!contains(v)) throw parse_error("'" + text + "' is outside the carrier of " + name_);
    return std::max(v, 0.0);
}

elem quantale::sample(std::mt19937_64& rng) const {
    if (is_finite()) {
        std::uniform_int_distribution<std::size_t> d(0, size() - 1);
        return static_cast<elem>(d(rng));
    }
    std::uniform_int_distribution<int> pick(0, 9);
    const double hi = kind_ == quantale_kind::lawvere ? 10.0 : 1.0;
    switch (pick(rng)) {
    case 0:
        return 0.0;
    case 1:
        return bot_;
    case 2:
    case 3: {
        std::uniform_int_distribution<int> k(1, 5);
        return kind_ == quantale_kind::lawvere ? k(rng) : k(rng) / 5.0;
    }
    default:
        return std::uniform_real_distribution<double>(0.0, hi)(rng);
    }
}

// ---------------------------------------------------------------- law checks

namespace {

void finite_laws(const quantale& q, law_report& rep) {
    const int n = static_cast<int>(q.size());
    const std::vector<std::string> names{"partial order", "complete lattice", "tensor associative",
                                         "tensor commutative", "tensor unit", "tensor monotone",
                                         "distributivity over joins", "residuation"};
    for (auto& nm : names) rep.add(nm, true);

    for (int a = 0; a < n; ++a) {
        if (!q.leq_index(a, a)) rep.fail_once("partial order", "not reflexive at " + q.format(a));
        for (int b = 0; b < n; ++b) {
            if (a != b && q.leq_index(a, b) && q.leq_index(b, a))
                rep.fail_once("partial order", "not antisymmetric at " + pair(q, a, b));
            for (int c = 0; c < n; ++c)
                if (q.leq_index(a, b) && q.leq_index(b, c) && !q.leq_index(a, c))
                    rep.fail_once("partial order", "not transitive at " + triple(q, a, b, c));
        }
    }

    bool lattice = true;
    for (int a = 0; a < n && lattice; ++a)
        for (int b = 0; b < n && lattice; ++b)
            if (q.join_index(a, b) < 0) {
                rep.fail_once("complete lattice", "no join of " + pair(q, a, b));
                lattice = false;
            }
    bool has_bot = false;
    for (int c = 0; c < n; ++c) {
        bool all = true;
        for (int d = 0; d < n; ++d) all = all && q.leq_index(c, d);
        has_bot = has_bot || all;
    }
    if (!has_bot) {
        rep.fail_once("complete lattice", "no least element (empty join)");
        lattice = false;
    }
    if (lattice && n <= 12) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<elem> s;
            for (int a = 0; a < n; ++a)
                if (mask >> a & 1u) s.push_back(a);
            const elem j = q.join(s);
            bool ok = true;
            for (elem a : s) ok = ok && q.leq(a, j);
            for (int u = 0; u < n && ok; ++u) {
                bool upper = true;
                for (elem a : s) upper = upper && q.leq(a, u);
                if (upper && !q.leq(j, u)) ok = false;
            }
            if (!ok) rep.fail_once("complete lattice", "join of subset mask " + std::to_string(mask) + " is not least");
        }
    }

    const elem e = q.unit();
    for (int a = 0; a < n; ++a) {
        if (!q.eq(q.tensor(e, a), a)) rep.fail_once("tensor unit", "e(x)" + q.format(a) + " != " + q.format(a));
        for (int b = 0; b < n; ++b) {
            if (!q.eq(q.tensor(a, b), q.tensor(b, a)))
                rep.fail_once("tensor commutative", pair(q, a, b));
            for (int c = 0; c < n; ++c) {
                if (!q.eq(q.tensor(a, q.tensor(b, c)), q.tensor(q.tensor(a, b), c)))
                    rep.fail_once("tensor associative", triple(q, a, b, c));
                if (q.leq_index(b, c) && !q.leq(q.tensor(a, b), q.tensor(a, c)))
                    rep.fail_once("tensor monotone", triple(q, a, b, c));
            }
        }
    }

    if (!lattice) {
        rep.fail_once("distributivity over joins", "skipped: joins do not exist");
        rep.fail_once("residuation", "skipped: joins do not exist");
        return;
    }
    for (int r = 0; r < n; ++r) {
        if (!q.eq(q.tensor(r, q.bottom()), q.bottom()))
            rep.fail_once("distributivity over joins", "r(x)bottom != bottom at r=" + q.format(r));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!q.eq(q.tensor(r, q.join(a, b)), q.join(q.tensor(r, a), q.tensor(r, b))))
                    rep.fail_once("distributivity over joins", triple(q, r, a, b));
    }
    if (n <= 10) {
        for (int r = 0; r < n; ++r)
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<elem> s, ts;
                for (int a = 0; a < n; ++a)
                    if (mask >> a & 1u) {
                        s.push_back(a);
                        ts.push_back(q.tensor(r, a));
                    }
                if (!q.eq(q.tensor(r, q.join(s)), q.join(ts)))
                    rep.fail_once("distributivity over joins",
                                  "r=" + q.format(r) + ", subset mask " + std::to_string(mask));
            }
    }
    for (int t = 0; t < n; ++t)
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                if (q.leq(q.tensor(t, r), s) != q.leq(t, q.hom(r, s)))
                    rep.fail_once("residuation", "t,r,s = " + triple(q, t, r, s));
}

void sampled_laws(const quantale& q, std::uint64_t seed, std::size_t samples, law_report& rep) {
    const std::vector<std::string> names{"partial order", "complete lattice", "tensor associative",
                                         "tensor commutative", "tensor unit", "tensor monotone",
                                         "distributivity over joins", "residuation"};
    for (auto& nm : names) rep.add(nm, true);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size_pick(0, 4);
    const elem e = q.unit();
    for (std::size_t i = 0; i < samples; ++i) {
        const elem a = q.sample(rng), b = q.sample(rng), c = q.sample(rng);
        if (!q.leq(a, a)) rep.fail_once("partial order", "not reflexive at " + q.format(a));
        if (q.leq(a, b) && q.leq(b, a) && !q.eq(a, b))
            rep.fail_once("partial order", "not antisymmetric at " + pair(q, a, b));
        if (q.leq(a, b) && q.leq(b, c) && !q.leq(a, c))
            rep.fail_once("partial order", "not transitive at " + triple(q, a, b, c));

        std::vector<elem> s;
        for (int k = size_pick(rng); k > 0; --k) s.push_back(q.sample(rng));
        const elem j = q.join(s), m = q.meet(s);
        bool ok = true;
        for (elem x : s) ok = ok && q.leq(x, j) && q.leq(m, x);
        // Any sampled upper bound lies above the join, any lower bound below the meet.
        for (elem u : {a, b, c, q.top(), q.bottom()}) {
            bool upper = true, lower = true;
            for (elem x : s) {
                upper = upper && q.leq(x, u);
                lower = lower && q.leq(u, x);
            }
            if (upper && !q.leq(j, u)) ok = false;
            if (lower && !q.leq(u, m)) ok = false;
        }
        if (!ok) rep.fail_once("complete lattice", "sample " + std::to_string(i));

        if (!q.eq(q.tensor(a, q.tensor(b, c)), q.tensor(q.tensor(a, b), c)))
            rep.fail_once("tensor associative", triple(q, a, b, c));
        if (!q.eq(q.tensor(a, b), q.tensor(b, a))) rep.fail_once("tensor commutative", pair(q, a, b));
        if (!q.eq(q.tensor(e, a), a)) rep.fail_once("tensor unit", q.format(a));
        if (q.leq(b, c) && !q.leq(q.tensor(a, b), q.tensor(a, c)))
            rep.fail_once("tensor monotone", triple(q, a, b, c));

        std::vector<elem> ts;
        for (elem x : s) ts.push_back(q.tensor(a, x));
        if (!q.eq(q.tensor(a, j), q.join(ts)))
            rep.fail_once("distributivity over joins", "sample " + std::to_string(i));

        if (q.leq(q.tensor(c, a), b) != q.leq(c, q.hom(a, b)))
            rep.fail_once("residuation", "t,r,s = " + triple(q, c, a, b));
        if (!q.leq(q.tensor(a, q.hom(a, b)), b)) rep.fail_once("residuation", "counit at " + pair(q, a, b));
        if (!q.leq(a, q.hom(b, q.tensor(b, a)))) rep.fail_once("residuation", "unit at " + pair(q, a, b));
    }
}

} // namespace

law_report check_laws(const quantale& q, std::uint64_t seed, std::size_t samples) {
    law_report rep;
    if (q.is_finite()) finite_laws(q, rep);
    else sampled_laws(q, seed, samples, rep);
    return rep;
}

law_report check_totally_below_lemma(const quantale& q) {
    law_report rep;
    const std::string law = "totally-below join lemma";
    rep.add(law, true);
    if (!q.is_finite() || q.size() > 12) {
        rep.fail_once(law, "exhaustive check needs a small finite quantale");
        return rep;
    }
    const int n = static_cast<int>(q.size());
    for (int r = 0; r < n; ++r)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<elem> s;
            bool some = false;
            for (int a = 0; a < n; ++a)
                if (mask >> a & 1u) {
                    s.push_back(a);
                    some = some || q.totally_below(r, a);
                }
            if (q.totally_below(r, q.join(s)) != some)
                rep.fail_once(law, "r=" + q.format(r) + ", subset mask " + std::to_string(mask));
        }
    return rep;
}

} // namespace vcat
