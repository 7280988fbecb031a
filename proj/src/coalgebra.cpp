#include "vcat/coalgebra.hpp"

#include <cmath>
#include <map>
#include <set>

namespace vcat {

void machine::check() const {
    const std::size_t n = states.size();
    if (delta.size() != n || out.size() != n) throw domain_error("machine: delta and out must cover every state");
    for (std::size_t s = 0; s < n; ++s) {
        if (delta[s].size() != inputs.size())
            throw domain_error("machine: delta is not total at state " + states[s]);
        for (std::size_t t : delta[s])
            if (t >= n) throw domain_error("machine: delta leaves the state set at " + states[s]);
        if (out[s] >= outputs.size()) throw domain_error("machine: output of " + states[s] + " is not an object");
    }
}

void kripke::check() const {
    if (succ.size() != states.size()) throw domain_error("kripke: successor map must cover every state");
    for (auto& row : succ)
        for (std::size_t t : row)
            if (t >= states.size()) throw domain_error("kripke: successor outside the state set");
}

space base_d(qptr q, const preorder& p) {
    space x(q, p.elements);
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b) x.at(a, b) = p.leq(a, b) ? q->unit() : q->bottom();
    return x;
}

preorder base_c(const space& x) {
    const quantale& q = *x.q;
    if (!q.integral() || !q.zero_divisor_free())
        throw unsupported_error("c* needs an integral quantale without zero-divisors");
    preorder p{x.objects, relation(x.size(), x.size())};
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b)
            if (!q.eq(x(a, b), q.bottom())) p.leq.set(a, b);
    return p;
}

partition normalise(const partition& p) {
    std::map<std::size_t, std::size_t> rename;
    partition out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto it = rename.try_emplace(p[i], rename.size()).first;
        out[i] = it->second;
    }
    return out;
}

bool same_partition(const partition& a, const partition& b) { return normalise(a) == normalise(b); }

partition connected_components(const preorder& p) {
    const std::size_t n = p.size();
    partition cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = i;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if ((p.leq(a, b) || p.leq(b, a)) && cls[a] != cls[b]) {
                    const std::size_t lo = std::min(cls[a], cls[b]);
                    cls[a] = cls[b] = lo;
                    changed = true;
                }
    }
    return normalise(cls);
}

behaviour beh_metric_words(const machine& m, std::size_t depth) {
    m.check();
    const quantale& q = *m.outputs.q;
    const std::size_t n = m.size();
    behaviour b{m.outputs.q, std::vector<elem>(n * n), 0, true};
    std::vector<elem> now(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) now[x * n + y] = m.outputs(m.out[x], m.out[y]);
    const std::vector<elem> here = now;
    // d_{k+1}(x,y) = B(out x, out y) meet the meet over a of d_k(x.a, y.a).
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<elem> next = here;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t a = 0; a < m.inputs.size(); ++a)
                    next[x * n + y] = q.meet(next[x * n + y], now[m.delta[x][a] * n + m.delta[y][a]]);
        now = std::move(next);
        ++b.iterations;
    }
    b.dist = std::move(now);
    return b;
}

behaviour beh_metric_iterate(const machine& m, std::size_t max_steps, double tol) {
    m.check();
    const quantale& q = *m.outputs.q;
    const std::size_t n = m.size();
    behaviour b{m.outputs.q, std::vector<elem>(n * n, q.top()), 0, false};
    for (std::size_t step = 0; step < max_steps; ++step) {
        std::vector<elem> next(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                elem v = q.top();
                for (std::size_t a = 0; a < m.inputs.size(); ++a)
                    v = q.meet(v, b.dist[m.delta[x][a] * n + m.delta[y][a]]);
                next[x * n + y] = q.tensor(v, m.outputs(m.out[x], m.out[y]));
            }
        bool stable = true;
        for (std::size_t k = 0; k < next.size() && stable; ++k) {
            if (q.is_finite()) stable = next[k] == b.dist[k];
            else if (std::isinf(next[k]) || std::isinf(b.dist[k])) stable = std::isinf(next[k]) && std::isinf(b.dist[k]);
            else stable = std::fabs(next[k] - b.dist[k]) <= tol;
        }
        b.dist = std::move(next);
        ++b.iterations;
        if (stable) {
            b.converged = true;
            break;
        }
    }
    return b;
}

partition bisimilarity(const machine& m) {
    m.check();
    const std::size_t n = m.size();
    partition cls(n);
    for (std::size_t s = 0; s < n; ++s) cls[s] = m.out[s];
    cls = normalise(cls);
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> sig;
        partition next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::vector<std::size_t> key{cls[s]};
            for (std::size_t t : m.delta[s]) key.push_back(cls[t]);
            next[s] = sig.try_emplace(key, sig.size()).first->second;
        }
        next = normalise(next);
        if (next == cls) return cls;
        cls = std::move(next);
    }
}

partition bisimilarity(const kripke& k) {
    k.check();
    const std::size_t n = k.size();
    partition cls(n, 0);
    while (true) {
        std::map<std::pair<std::size_t, std::set<std::size_t>>, std::size_t> sig;
        partition next(n);
        for (std::size_t s = 0; s < n; ++s) {
            std::set<std::size_t> succ;
            for (std::size_t t : k.succ[s]) succ.insert(cls[t]);
            next[s] = sig.try_emplace({cls[s], succ}, sig.size()).first->second;
        }
        next = normalise(next);
        if (next == cls) return cls;
        cls = std::move(next);
    }
}

partition kernel(const behaviour& b, std::size_t n) {
    const quantale& q = *b.q;
    auto rel = [&](std::size_t x, std::size_t y) {
        return q.leq(q.unit(), b(x, y, n)) && q.leq(q.unit(), b(y, x, n));
    };
    partition cls(n);
    for (std::size_t x = 0; x < n; ++x) {
        cls[x] = x;
        for (std::size_t y = 0; y < x; ++y)
            if (rel(x, y)) {
                cls[x] = cls[y];
                break;
            }
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (rel(x, y) != (cls[x] == cls[y])) throw domain_error("behavioural kernel is not an equivalence");
    return normalise(cls);
}

} // namespace vcat
