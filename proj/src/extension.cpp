#include "vcat/extension.hpp"

#include <algorithm>
#include <numeric>

namespace vcat {

namespace {

void add_unique(const quantale& q, std::vector<elem>& g, elem v) {
    for (elem w : g)
        if (q.eq(v, w)) return;
    g.push_back(v);
}

void sort_grid(std::vector<elem>& g) { std::sort(g.begin(), g.end()); }

} // namespace

std::vector<elem> nerve_grid(const space& x, grid_mode mode) {
    const quantale& q = *x.q;
    std::vector<elem> g;
    if (mode == grid_mode::full) {
        if (!q.is_finite()) throw unsupported_error("the full grid needs a finite quantale");
        g = q.carrier();
        return g;
    }
    for (elem v : {q.bottom(), q.unit(), q.top()}) add_unique(q, g, v);
    for (elem d : x.dist) add_unique(q, g, d);
    // X_r only depends on the meet of the distances it contains, so the
    // meet-closure of the occurring values (top included) is enough.
    for (bool grown = true; grown;) {
        grown = false;
        const std::size_t n = g.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const std::size_t before = g.size();
                add_unique(q, g, q.meet(g[i], g[j]));
                grown = grown || g.size() != before;
            }
    }
    sort_grid(g);
    return g;
}

nerve_diagram vnerve(const space& x, grid_mode mode) {
    nerve_diagram nd;
    nd.base = x.objects;
    for (elem r : nerve_grid(x, mode)) {
        nerve_level lv{r, level_relation(x, r), {}, {}};
        for (auto [i, j] : lv.rel.pairs()) {
            lv.d0.push_back(i);
            lv.d1.push_back(j);
        }
        nd.levels.push_back(std::move(lv));
    }
    return nd;
}

// ---------------------------------------------------------------- V-valued functors

namespace {

class composed_d final : public vvalued_functor {
public:
    explicit composed_d(functor_ptr t) : t_(std::move(t)) {}
    space on_set(qptr q, const std::vector<std::string>& labels) const override {
        return discrete(std::move(q), apply_on_set(*t_, labels));
    }
    std::size_t card(std::size_t n) const override { return vcat::card(*t_, n); }
    object_map on_map(const object_map& f, std::size_t n_dst) const override { return fmap(*t_, f, n_dst); }
    std::string provenance() const override { return "D." + to_string(*t_); }

private:
    functor_ptr t_;
};

class constant_h final : public vvalued_functor {
public:
    explicit constant_h(space k) : k_(std::move(k)) {}
    space on_set(qptr q, const std::vector<std::string>&) const override {
        if (q != k_.q) throw domain_error("constant functor: quantale mismatch");
        return k_;
    }
    std::size_t card(std::size_t) const override { return k_.size(); }
    object_map on_map(const object_map&, std::size_t) const override {
        object_map id(k_.size());
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    std::string provenance() const override { return "constant"; }

private:
    space k_;
};

class machine_h final : public vvalued_functor {
public:
    machine_h(std::vector<std::string> inputs, space b)
        : inputs_(std::move(inputs)), b_(std::move(b)), pow_(functors::power(inputs_.size())) {}
    space on_set(qptr q, const std::vector<std::string>& labels) const override {
        if (q != b_.q) throw domain_error("machine functor: quantale mismatch");
        return tensor_cat(power_cat(discrete(q, labels), inputs_), b_);
    }
    std::size_t card(std::size_t n) const override { return vcat::card(*pow_, n) * b_.size(); }
    object_map on_map(const object_map& f, std::size_t n_dst) const override {
        const object_map g = fmap(*pow_, f, n_dst);
        object_map out;
        out.reserve(g.size() * b_.size());
        for (std::size_t v : g)
            for (std::size_t b = 0; b < b_.size(); ++b) out.push_back(v * b_.size() + b);
        return out;
    }
    std::string provenance() const override { return "machine"; }

private:
    std::vector<std::string> inputs_;
    space b_;
    functor_ptr pow_;
};

class kantorovich_h final : public vvalued_functor {
public:
    explicit kantorovich_h(predicate_lifting p) : p_(std::move(p)) {}
    space on_set(qptr q, const std::vector<std::string>& labels) const override {
        if (q != p_.q) throw domain_error("kantorovich functor: quantale mismatch");
        return discrete_kantorovich(p_, labels);
    }
    std::size_t card(std::size_t n) const override { return vcat::card(*p_.t, n); }
    object_map on_map(const object_map& f, std::size_t n_dst) const override { return fmap(*p_.t, f, n_dst); }
    std::string provenance() const override { return "kantorovich(" + to_string(*p_.t) + "," + p_.name + ")"; }

private:
    predicate_lifting p_;
};

} // namespace

vfunctor_ptr composed_with_discrete(functor_ptr t) { return std::make_shared<composed_d>(std::move(t)); }
vfunctor_ptr constant_space(space k) { return std::make_shared<constant_h>(std::move(k)); }
vfunctor_ptr machine_functor(std::vector<std::string> inputs, space outputs) {
    return std::make_shared<machine_h>(std::move(inputs), std::move(outputs));
}
vfunctor_ptr kantorovich_functor(predicate_lifting p) { return std::make_shared<kantorovich_h>(std::move(p)); }

// ---------------------------------------------------------------- Kan extension

lan_result lan_extend(const vvalued_functor& h, const space& x, grid_mode mode, const std::vector<elem>& extra_grid) {
    const quantale& q = *x.q;
    lan_result out;
    out.grid = nerve_grid(x, mode);
    for (elem r : extra_grid) {
        q.check(r);
        add_unique(q, out.grid, r);
    }
    sort_grid(out.grid);

    const space base = h.on_set(x.q, x.objects);
    const std::size_t n = base.size();
    if (h.card(x.size()) != n) throw domain_error("functor evaluation disagrees with its carrier size");

    // E(A,B): join of r over C in H(X_r) with H d0 (C) = A and H d1 (C) = B.
    // r = bottom contributes nothing since bottom is absorbing.
    std::vector<elem> edge(n * n, q.bottom());
    for (elem r : out.grid) {
        if (q.eq(r, q.bottom())) continue;
        const relation xr = level_relation(x, r);
        object_map d0, d1;
        for (auto [i, j] : xr.pairs()) {
            d0.push_back(i);
            d1.push_back(j);
        }
        const object_map m0 = h.on_map(d0, x.size()), m1 = h.on_map(d1, x.size());
        for (std::size_t c = 0; c < m0.size(); ++c) {
            elem& e = edge[m0[c] * n + m1[c]];
            e = q.join(e, r);
        }
    }

    // P = E.M, then R <- M v R.P until stable: R = M v M(EM) v M(EM)^2 v ...
    std::vector<elem> p(n * n, q.bottom());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const elem eab = edge[a * n + b];
            if (q.eq(eab, q.bottom())) continue;
            for (std::size_t c = 0; c < n; ++c) p[a * n + c] = q.join(p[a * n + c], q.tensor(eab, base(b, c)));
        }

    std::vector<elem> cur = base.dist;
    const std::size_t bound =
        q.integral() ? n + 2 : (q.is_finite() ? n * n * q.size() + n + 2 : n + 64);
    out.converged = false;
    for (std::size_t round = 0; round < bound; ++round) {
        std::vector<elem> next = base.dist;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const elem rab = cur[a * n + b];
                if (q.eq(rab, q.bottom())) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    const elem pbc = p[b * n + c];
                    if (q.eq(pbc, q.bottom())) continue;
                    next[a * n + c] = q.join(next[a * n + c], q.tensor(rab, pbc));
                }
            }
        ++out.iterations;
        bool same = true;
        for (std::size_t k = 0; k < next.size() && same; ++k) same = q.eq(next[k], cur[k]);
        cur = std::move(next);
        if (same) {
            out.converged = true;
            break;
        }
    }
    if (!out.converged) throw iteration_error("zig-zag closure did not stabilise within " + std::to_string(bound) + " rounds");
    out.result = base;
    out.result.dist = std::move(cur);
    return out;
}

object_map lan_extend_map(const vvalued_functor& h, const object_map& f, std::size_t n_dst) { return h.on_map(f, n_dst); }

lan_result vcatify_wpb(const set_functor& t, const space& x, grid_mode mode) {
    if (!preserves_weak_pullbacks(t)) throw unsupported_error("vcatify_wpb needs a weak-pullback-preserving functor");
    const quantale& q = *x.q;
    lan_result out;
    out.grid = nerve_grid(x, mode);
    out.result = space(x.q, apply_on_set(t, x.objects));
    const std::size_t n = out.result.size();
    for (elem r : out.grid) {
        if (q.eq(r, q.bottom())) continue;
        const relation lifted = relation_lift(t, level_relation(x, r));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (lifted(a, b)) out.result.at(a, b) = q.join(out.result(a, b), r);
    }
    return out;
}

// ---------------------------------------------------------------- closed forms

elem hausdorff(const space& x, const std::vector<std::size_t>& a_from, const std::vector<std::size_t>& a_to) {
    const quantale& q = *x.q;
    if (!q.completely_distributive())
        throw unsupported_error("hausdorff needs a completely distributive quantale; use vcatify_wpb(powerset)");
    elem fwd = q.top(), bwd = q.top();
    for (std::size_t a : a_from) {
        elem best = q.bottom();
        for (std::size_t b : a_to) best = q.join(best, x(a, b));
        fwd = q.meet(fwd, best);
    }
    for (std::size_t b : a_to) {
        elem best = q.bottom();
        for (std::size_t a : a_from) best = q.join(best, x(a, b));
        bwd = q.meet(bwd, best);
    }
    return q.meet(fwd, bwd);
}

elem matching_metric(const space& x, const std::vector<std::size_t>& m_from, const std::vector<std::size_t>& m_to) {
    const quantale& q = *x.q;
    if (m_from.size() != m_to.size()) return q.bottom();
    std::vector<std::size_t> perm(m_to.size());
    std::iota(perm.begin(), perm.end(), 0);
    elem best = q.bottom();
    do {
        elem v = q.top();
        for (std::size_t i = 0; i < perm.size(); ++i) v = q.meet(v, x(m_from[i], m_to[perm[i]]));
        best = q.join(best, v);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ---------------------------------------------------------------- Kantorovich

namespace {

void atoms(const term& x, std::vector<std::size_t>& out) {
    if (x.kind == term::tag::atom) out.push_back(x.value);
    for (auto& k : x.kids) atoms(k, out);
}

predicate_lifting fold_lifting(functor_ptr t, qptr q, bool use_join) {
    if (!q->is_finite()) throw unsupported_error("predicate liftings need a finite quantale");
    predicate_lifting p{t, q, {}, use_join ? "join" : "meet"};
    const std::size_t k = q->size(), size = card(*t, k);
    p.heart.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::vector<std::size_t> vs;
        atoms(decode(*t, k, i), vs);
        elem acc = use_join ? q->bottom() : q->top();
        for (std::size_t v : vs) acc = use_join ? q->join(acc, static_cast<elem>(v)) : q->meet(acc, static_cast<elem>(v));
        p.heart[i] = acc;
    }
    return p;
}

// Calls fn(h) for every map {0..n-1} -> {0..k-1}.
template <class Fn>
void each_map(std::size_t n, std::size_t k, std::size_t cap, Fn fn) {
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(k);
    if (total > static_cast<double>(cap)) throw resource_error("would enumerate more than " + std::to_string(cap) + " maps");
    if (k == 0 && n > 0) return;
    object_map h(n, 0);
    while (true) {
        fn(static_cast<const object_map&>(h));
        std::size_t i = n;
        while (i > 0 && ++h[i - 1] == k) h[--i] = 0;
        if (i == 0) return;
    }
}

space kantorovich_core(const predicate_lifting& p, const space& x, bool vfunctors_only, std::size_t cap) {
    const quantale& q = *p.q;
    if (x.q != p.q) throw domain_error("kantorovich: quantale mismatch");
    const std::size_t n = x.size(), k = q.size();
    space out(p.q, apply_on_set(*p.t, x.objects));
    std::fill(out.dist.begin(), out.dist.end(), q.top());
    const std::size_t size = out.size();
    std::vector<elem> vals(size);
    each_map(n, k, cap, [&](const object_map& h) {
        if (vfunctors_only) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!q.leq(x(a, b), q.hom(static_cast<elem>(h[a]), static_cast<elem>(h[b])))) return;
        }
        const object_map th = fmap(*p.t, h, k);
        for (std::size_t c = 0; c < size; ++c) vals[c] = p.heart[th[c]];
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b) out.at(a, b) = q.meet(out(a, b), q.hom(vals[a], vals[b]));
    });
    return out;
}

} // namespace

predicate_lifting predicate_lifting::join(functor_ptr t, qptr q) { return fold_lifting(std::move(t), std::move(q), true); }
predicate_lifting predicate_lifting::meet(functor_ptr t, qptr q) { return fold_lifting(std::move(t), std::move(q), false); }

predicate_lifting predicate_lifting::constant(functor_ptr t, qptr q, elem c) {
    if (!q->is_finite()) throw unsupported_error("predicate liftings need a finite quantale");
    q->check(c);
    predicate_lifting p{t, q, std::vector<elem>(card(*t, q->size()), c), "const(" + q->format(c) + ")"};
    return p;
}

space discrete_kantorovich(const predicate_lifting& p, const std::vector<std::string>& labels, std::size_t cap) {
    return kantorovich_core(p, discrete(p.q, labels), false, cap);
}

space kantorovich_lift(const predicate_lifting& p, const space& x, std::size_t cap) {
    return kantorovich_core(p, x, true, cap);
}

bool is_vmonotone(const predicate_lifting& p, std::size_t max_size) {
    const quantale& q = *p.q;
    const std::size_t k = q.size();
    for (std::size_t n = 0; n <= max_size; ++n) {
        bool ok = true;
        each_map(n, k, max_enum(), [&](const object_map& h) {
            if (!ok) return;
            const object_map th = fmap(*p.t, h, k);
            each_map(n, k, max_enum(), [&](const object_map& g) {
                if (!ok) return;
                elem lhs = q.top();
                for (std::size_t i = 0; i < n; ++i) lhs = q.meet(lhs, q.hom(static_cast<elem>(h[i]), static_cast<elem>(g[i])));
                const object_map tg = fmap(*p.t, g, k);
                elem rhs = q.top();
                for (std::size_t c = 0; c < th.size(); ++c) rhs = q.meet(rhs, q.hom(p.heart[th[c]], p.heart[tg[c]]));
                if (!q.leq(lhs, rhs)) ok = false;
            });
        });
        if (!ok) return false;
    }
    return true;
}

bool unit_iso_check(const vvalued_functor& h, qptr q) {
    const space e = h.on_set(q, {});
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!q->eq(e(i, i), q->top())) return false;
    return true;
}

space power_by(const space& x, const space& k, std::size_t cap) { return hom_cat(k, x, cap); }

} // namespace vcat
