// Generators and brute-force oracles shared by the unit and acceptance tests.
// The oracles only use quantale primitives (order, join, tensor) and plain
// loops, never the library routine they are compared against.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vcat/coalgebra.hpp"
#include "vcat/extension.hpp"
#include "vcat/io.hpp"
#include "vcat/relpresh.hpp"
#include "vcat/setfunctor.hpp"

namespace vt {

using namespace vcat;

inline std::string data(const std::string& name) { return std::string(VCAT_TEST_DATA) + "/" + name; }

inline space load_space(const std::string& name) {
    const std::string p = data(name);
    return io::space_from_json(io::load_json(p), std::filesystem::path(p).parent_path());
}

inline std::vector<std::string> labels(std::size_t n, const std::string& prefix = "x") {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

// A random lawvere distance: small multiples of 1/2, sometimes infinite.
inline elem lawvere_value(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(0, 12);
    const int k = d(rng);
    return k == 12 ? std::numeric_limits<double>::infinity() : 0.5 * k;
}

// Random valid space: random entries, then the least V-category above them.
inline space random_space(qptr q, std::size_t n, std::mt19937_64& rng) {
    space x(q, labels(n));
    for (auto& v : x.dist) v = q->kind() == quantale_kind::lawvere ? lawvere_value(rng) : q->sample(rng);
    return close_space(x);
}

// Every V-category structure on n labelled objects over a finite quantale,
// optionally one per isomorphism class.
inline std::vector<space> all_spaces(qptr q, std::size_t n, bool up_to_iso) {
    const std::vector<elem> car = q->carrier();
    std::vector<elem> diag;
    for (elem v : car)
        if (q->leq(q->unit(), v)) diag.push_back(v);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i) cells.emplace_back(i, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) cells.emplace_back(i, j);

    std::vector<space> out;
    std::set<std::vector<int>> seen;
    std::vector<std::size_t> perm(n);
    space x(q, labels(n));
    auto code = [&](const std::vector<std::size_t>& p) {
        std::vector<int> c(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] = static_cast<int>(x(p[i], p[j]));
        return c;
    };
    // Triangle condition restricted to filled cells.
    auto consistent = [&](std::size_t filled) {
        std::vector<char> known(n * n, 0);
        for (std::size_t k = 0; k < filled; ++k) known[cells[k].first * n + cells[k].second] = 1;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (known[a * n + b] && known[b * n + c] && known[a * n + c] &&
                        !q->leq(q->tensor(x(a, b), x(b, c)), x(a, c)))
                        return false;
        return true;
    };
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            if (up_to_iso) {
                std::iota(perm.begin(), perm.end(), 0);
                std::vector<int> best = code(perm);
                while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, code(perm));
                if (!seen.insert(best).second) return;
            }
            out.push_back(x);
            return;
        }
        auto [i, j] = cells[k];
        for (elem v : (i == j ? diag : car)) {
            x.at(i, j) = v;
            if (consistent(k + 1)) fill(k + 1);
        }
    };
    fill(0);
    return out;
}

// All spaces with at most n objects.
inline std::vector<space> all_spaces_upto(qptr q, std::size_t n, bool up_to_iso) {
    std::vector<space> out;
    for (std::size_t k = 0; k <= n; ++k) {
        auto part = all_spaces(q, k, up_to_iso);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// [r,s] as the join of all t with t(x)r <= s, over a finite carrier.
inline elem hom_oracle(const quantale& q, elem r, elem s) {
    elem best = q.bottom();
    for (elem t : q.carrier())
        if (q.leq(q.tensor(t, r), s)) best = q.join(best, t);
    return best;
}

inline std::vector<std::size_t> members(std::size_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

// Pompeiu-Hausdorff distance by the two-sided sup-inf formula.
inline elem hausdorff_oracle(const space& x, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    const quantale& q = *x.q;
    elem left = q.top(), right = q.top();
    for (std::size_t i : a) {
        elem best = q.bottom();
        for (std::size_t j : b) best = q.join(best, x(i, j));
        left = q.meet(left, best);
    }
    for (std::size_t j : b) {
        elem best = q.bottom();
        for (std::size_t i : a) best = q.join(best, x(i, j));
        right = q.meet(right, best);
    }
    return q.meet(left, right);
}

// Best permutation of the meet of pointwise distances.
inline elem matching_oracle(const space& x, std::vector<std::size_t> a, std::vector<std::size_t> b) {
    const quantale& q = *x.q;
    if (a.size() != b.size()) return q.bottom();
    std::vector<std::size_t> sigma(b.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    elem best = q.bottom();
    do {
        elem v = q.top();
        for (std::size_t i = 0; i < a.size(); ++i) v = q.meet(v, x(a[i], b[sigma[i]]));
        best = q.join(best, v);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

// Egli-Milner order on subsets of a preorder.
inline bool egli_milner(const relation& le, std::size_t a, std::size_t b, std::size_t n) {
    for (std::size_t i : members(a, n)) {
        bool hit = false;
        for (std::size_t j : members(b, n)) hit = hit || le(i, j);
        if (!hit) return false;
    }
    for (std::size_t j : members(b, n)) {
        bool hit = false;
        for (std::size_t i : members(a, n)) hit = hit || le(i, j);
        if (!hit) return false;
    }
    return true;
}

// Words over {0..k-1} of length at most depth, shortest first.
inline std::vector<std::vector<std::size_t>> words(std::size_t k, std::size_t depth) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t len = 1; len <= depth; ++len) {
        std::vector<std::size_t> w(len, 0);
        while (true) {
            out.push_back(w);
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    return out;
}

inline std::size_t run(const machine& m, std::size_t s, const std::vector<std::size_t>& w) {
    for (std::size_t a : w) s = m.delta[s][a];
    return s;
}

// Meet over words of the output distances.
inline std::vector<elem> word_metric_oracle(const machine& m, std::size_t depth) {
    const quantale& q = *m.outputs.q;
    const std::size_t n = m.size();
    std::vector<elem> d(n * n, q.top());
    for (auto& w : words(m.inputs.size(), depth))
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                d[x * n + y] = q.meet(d[x * n + y], m.outputs(m.out[run(m, x, w)], m.out[run(m, y, w)]));
    return d;
}

// Accepted words (output object "1") of length at most depth.
inline std::set<std::vector<std::size_t>> language(const machine& m, std::size_t s, std::size_t depth) {
    std::set<std::vector<std::size_t>> out;
    for (auto& w : words(m.inputs.size(), depth))
        if (m.outputs.objects[m.out[run(m, s, w)]] == "1") out.insert(w);
    return out;
}

// Greatest bisimulation on a machine: drop pairs until stable.
inline partition machine_bisim_oracle(const machine& m) {
    const std::size_t n = m.size();
    std::vector<char> rel(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = m.out[x] == m.out[y];
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (!rel[x * n + y]) continue;
                for (std::size_t a = 0; a < m.inputs.size(); ++a)
                    if (!rel[m.delta[x][a] * n + m.delta[y][a]]) {
                        rel[x * n + y] = 0;
                        changed = true;
                        break;
                    }
            }
    }
    partition cls(n);
    for (std::size_t x = 0; x < n; ++x) {
        cls[x] = x;
        for (std::size_t y = 0; y < x; ++y)
            if (rel[x * n + y]) {
                cls[x] = cls[y];
                break;
            }
    }
    return normalise(cls);
}

// Greatest bisimulation on a Kripke frame by trying every relation.
inline partition kripke_bisim_oracle(const kripke& k) {
    const std::size_t n = k.size();
    const std::size_t pairs = n * n;
    auto in = [&](std::uint64_t r, std::size_t x, std::size_t y) { return (r >> (x * n + y) & 1) != 0; };
    auto is_bisim = [&](std::uint64_t r) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                if (!in(r, x, y)) continue;
                for (std::size_t x2 : k.succ[x]) {
                    bool ok = false;
                    for (std::size_t y2 : k.succ[y]) ok = ok || in(r, x2, y2);
                    if (!ok) return false;
                }
                for (std::size_t y2 : k.succ[y]) {
                    bool ok = false;
                    for (std::size_t x2 : k.succ[x]) ok = ok || in(r, x2, y2);
                    if (!ok) return false;
                }
            }
        return true;
    };
    std::uint64_t greatest = 0;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << pairs); ++r)
        if (is_bisim(r)) greatest |= r;
    partition cls(n);
    for (std::size_t x = 0; x < n; ++x) {
        cls[x] = x;
        for (std::size_t y = 0; y < x; ++y)
            if (in(greatest, x, y)) {
                cls[x] = cls[y];
                break;
            }
    }
    return normalise(cls);
}

inline machine random_machine(const space& outputs, std::size_t states, std::size_t inputs, std::mt19937_64& rng) {
    machine m;
    m.inputs = labels(inputs, "a");
    m.states = labels(states, "s");
    m.outputs = outputs;
    std::uniform_int_distribution<std::size_t> st(0, states - 1), ob(0, outputs.size() - 1);
    m.delta.assign(states, std::vector<std::size_t>(inputs));
    m.out.resize(states);
    for (std::size_t s = 0; s < states; ++s) {
        for (auto& t : m.delta[s]) t = st(rng);
        m.out[s] = ob(rng);
    }
    return m;
}

inline bool quantale_leq_all(const space& a, const space& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.dist.size(); ++k)
        if (!a.q->leq(a.dist[k], b.dist[k])) return false;
    return true;
}

} // namespace vt
