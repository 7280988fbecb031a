// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace vt;

namespace {

struct outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure and counts checks.
struct tally {
    std::size_t checks = 0;
    bool pass = true;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            first_failure = what;
        }
    }
    outcome done(const std::string& summary) const {
        return {pass, pass ? summary : summary + "; first failure: " + first_failure};
    }
};

std::string describe(const space& x) {
    std::ostringstream os;
    os << x.q->name() << " [";
    for (std::size_t i = 0; i < x.size(); ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < x.size(); ++j) os << (j ? " " : "") << x.q->format(x(i, j));
    }
    os << "]";
    return os.str();
}

std::mt19937_64 rng_for(int criterion) { return std::mt19937_64(0x5eed0000u + static_cast<unsigned>(criterion)); }

outcome c1_quantale_laws() {
    tally t;
    const qptr qs[] = {quantale::boolean2(),   quantale::chain(3, 1), quantale::chain(3, 2),
                       quantale::lawvere(),    quantale::ultrametric(),
                       io::quantale_from_json(io::load_json(data("z2_monoid.json")))};
    for (const qptr& q : qs) {
        law_report r = check_laws(*q, 20240601, 10000);
        std::string bad;
        for (auto& e : r.entries)
            if (!e.pass) bad += e.law + " (" + e.detail + ") ";
        t.expect(r.ok() && !r.entries.empty(), q->name() + ": " + bad);
    }
    t.expect(qs[5]->size() == 4, "free commutative monoid quantale should have 4 elements");
    return t.done("6 quantales, 10^4 samples for closed forms");
}

outcome c2_identity_extension() {
    tally t;
    auto rng = rng_for(2);
    auto id = composed_with_discrete(functors::identity());
    std::size_t spaces = 0;
    for (const qptr& q : {quantale::boolean2(), quantale::chain(3, 1), quantale::chain(3, 2), quantale::lawvere()}) {
        std::uniform_int_distribution<std::size_t> sz(0, 5);
        for (int i = 0; i < 120; ++i) {
            space x = random_space(q, sz(rng), rng);
            t.expect(validate(x).ok(), "generator produced an invalid space " + describe(x));
            space y = lan_extend(*id, x).result;
            t.expect(same_space(x, y), "Lan_D(D) differs on " + describe(x));
            ++spaces;
        }
    }
    return t.done(std::to_string(spaces) + " random spaces");
}

outcome c3_zigzag_vs_lifting() {
    tally t;
    const std::vector<functor_ptr> fs = {functors::powerset(), functors::multiset(3), functors::power(2),
                                         functors::constant({"a", "b"}), functors::identity()};
    std::size_t spaces = 0;
    for (const qptr& q : {quantale::boolean2(), quantale::chain(3, 1), quantale::chain(3, 2)}) {
        for (const space& x : all_spaces_upto(q, 4, false)) {
            ++spaces;
            for (auto& f : fs) {
                space zig = lan_extend(*composed_with_discrete(f), x).result;
                space wpb = vcatify_wpb(*f, x).result;
                t.expect(same_space(zig, wpb), to_string(*f) + " on " + describe(x));
            }
        }
    }
    auto rng = rng_for(3);
    std::uniform_int_distribution<std::size_t> sz(1, 4);
    for (int i = 0; i < 60; ++i) {
        space x = random_space(quantale::lawvere(), sz(rng), rng);
        ++spaces;
        for (auto& f : fs) {
            space zig = lan_extend(*composed_with_discrete(f), x).result;
            space wpb = vcatify_wpb(*f, x).result;
            t.expect(same_space(zig, wpb), to_string(*f) + " on " + describe(x));
        }
    }
    return t.done(std::to_string(spaces) + " spaces (every labelled finite space) x 5 functors");
}

outcome c4_hausdorff() {
    tally t;
    auto p = functors::powerset();
    std::size_t pairs = 0;
    for (const char* f : {"bool_chain.json", "bool_vee.json", "ultra_three.json", "lawvere_two.json",
                          "lawvere_asym.json", "lawvere_three.json", "lawvere_line.json"}) {
        space x = load_space(f);
        space pv = vcatify_wpb(*p, x).result;
        const std::size_t n = pv.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const elem h = hausdorff(x, members(a, x.size()), members(b, x.size()));
                t.expect(x.q->eq(h, pv(a, b)), std::string(f) + " pair " + pv.objects[a] + "," + pv.objects[b]);
                t.expect(x.q->eq(h, hausdorff_oracle(x, members(a, x.size()), members(b, x.size()))),
                         std::string(f) + " oracle pair " + pv.objects[a] + "," + pv.objects[b]);
                ++pairs;
            }
    }
    // Egli-Milner order on the poset a<b, a<c; rows and columns by bitmask over (a,b,c).
    static const char* egli_milner_table[8] = {"10000000", "01111111", "00100000", "00110011",
                                               "00001000", "00001111", "00000010", "00000011"};
    space vee = load_space("bool_vee.json");
    const relation le = level_relation(vee, vee.q->unit());
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            const bool want = egli_milner_table[a][b] == '1';
            const elem h = hausdorff(vee, members(a, 3), members(b, 3));
            t.expect(vee.q->eq(h, want ? 1.0 : 0.0), "Egli-Milner entry " + std::to_string(a) + "," + std::to_string(b));
            t.expect(egli_milner(le, a, b, 3) == want, "Egli-Milner oracle entry " + std::to_string(a) + "," + std::to_string(b));
        }
    return t.done(std::to_string(pairs) + " subset pairs, 64-entry Egli-Milner table");
}

outcome c5_matching() {
    tally t;
    auto rng = rng_for(5);
    std::vector<space> xs{load_space("lawvere_three.json")};
    for (int i = 0; i < 10; ++i) xs.push_back(random_space(quantale::lawvere(), 3, rng));
    auto bags = functors::multiset(3);
    std::size_t pairs = 0;
    for (const space& x : xs) {
        const std::size_t n = card(*bags, 3);
        std::vector<std::vector<std::size_t>> ms(n);
        for (std::size_t i = 0; i < n; ++i)
            for (auto& k : decode(*bags, 3, i).kids) ms[i].push_back(k.value);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const elem got = matching_metric(x, ms[a], ms[b]);
                t.expect(x.q->eq(got, matching_oracle(x, ms[a], ms[b])), "bags " + std::to_string(a) + "," + std::to_string(b) + " on " + describe(x));
                if (ms[a].size() != ms[b].size()) t.expect(std::isinf(got), "cross-cardinality pair is not inf");
                ++pairs;
            }
    }
    return t.done(std::to_string(pairs) + " multiset pairs on " + std::to_string(xs.size()) + " spaces");
}

outcome c6_unit_iso() {
    tally t;
    const std::vector<functor_ptr> fs = {functors::identity(), functors::powerset(), functors::multiset(2),
                                         functors::power(2), functors::list(2), functors::constant({"a", "b"}),
                                         functors::product(functors::identity(), functors::constant({"c"}))};
    for (const qptr& q : {quantale::boolean2(), quantale::chain(3, 2), quantale::chain(4, 3), quantale::lawvere(), quantale::ultrametric()})
        for (auto& f : fs) t.expect(unit_iso_check(*composed_with_discrete(f), q), "D after " + to_string(*f) + " over " + q->name());
    // H(empty) = empty, over a non-integral quantale.
    const qptr c31 = quantale::chain(3, 1);
    for (auto& f : {functors::identity(), functors::power(2)})
        t.expect(unit_iso_check(*composed_with_discrete(f), c31), "empty image for " + to_string(*f));
    auto one = constant_space(unit_cat(c31));
    t.expect(!unit_iso_check(*one, c31), "constant 1 over chain-3 e=1 should fail");
    auto rng = rng_for(6);
    std::uniform_int_distribution<std::size_t> sz(0, 4);
    for (int i = 0; i < 10; ++i) {
        space x = random_space(c31, sz(rng), rng);
        space y = lan_extend(*one, x).result;
        t.expect(same_matrix(y, unit_cat_at(c31, c31->top())), "Lan of constant 1 is not 1_top on " + describe(x));
    }
    return t.done("integral D.T cases, empty-image cases, constant 1, 10 random extensions");
}

outcome c7_closure_properties() {
    tally t;
    auto p = functors::powerset();
    auto pp = functors::compose(p, p);
    std::size_t spaces = 0;
    for (const qptr& q : {quantale::boolean2(), quantale::ultrametric_grid({0.0, 0.5, 1.0})}) {
        t.expect(q->completely_distributive(), q->name() + " is not completely distributive");
        for (const space& x : all_spaces_upto(q, 3, false)) {
            ++spaces;
            space whole = vcatify_wpb(*pp, x).result;
            space nested = vcatify_wpb(*p, vcatify_wpb(*p, x).result).result;
            t.expect(same_matrix(whole, nested), "compose(powerset,powerset) on " + describe(x));
        }
    }
    auto prod = functors::product(p, functors::power(2));
    const qptr b = quantale::boolean2();
    for (const space& x : all_spaces_upto(b, 3, false)) {
        ++spaces;
        space whole = vcatify_wpb(*prod, x).result;
        space left = vcatify_wpb(*p, x).result, right = vcatify_wpb(*functors::power(2), x).result;
        const std::size_t nb = right.size();
        bool same = whole.size() == left.size() * nb;
        for (std::size_t i = 0; same && i < whole.size(); ++i)
            for (std::size_t j = 0; same && j < whole.size(); ++j)
                same = b->eq(whole(i, j), b->meet(left(i / nb, j / nb), right(i % nb, j % nb)));
        t.expect(same, "product(powerset,power(2)) on " + describe(x));
    }
    return t.done(std::to_string(spaces) + " labelled spaces");
}

outcome c8_presheaves() {
    tally t;
    std::size_t fixtures = 0;
    for (const char* f : {"bool_chain.json", "bool_vee.json", "ultra_three.json", "lawvere_two.json", "lawvere_asym.json",
                          "lawvere_three.json", "lawvere_line.json", "chain3_space.json"}) {
        space x = load_space(f);
        t.expect(same_space(from_presheaf(to_presheaf(x)), x), std::string("round trip on ") + f);
        ++fixtures;
    }
    auto rng = rng_for(8);
    const std::vector<qptr> cd = {quantale::boolean2(), quantale::chain(3, 2), quantale::chain(4, 3),
                                  quantale::ultrametric_grid({0.0, 0.25, 0.5, 1.0})};
    for (int i = 0; i < 20; ++i) {
        const qptr q = cd[static_cast<std::size_t>(i) % cd.size()];
        std::uniform_int_distribution<std::size_t> sz(1, 3);
        const std::size_t n = sz(rng);
        rel_presheaf p{q, labels(n), q->carrier(), {}};
        std::bernoulli_distribution coin(0.4);
        for (std::size_t g = 0; g < p.grid.size(); ++g) {
            relation r(n, n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b2 = 0; b2 < n; ++b2) r.set(a, b2, coin(rng));
            p.values.push_back(r);
        }
        // Antitone: value(r) collects the draws of every s above r.
        std::vector<relation> mono = p.values;
        for (std::size_t g = 0; g < p.grid.size(); ++g)
            for (std::size_t h = 0; h < p.grid.size(); ++h)
                if (q->leq(p.grid[g], p.grid[h])) mono[g] = mono[g].unite(p.values[h]);
        p.values = mono;
        rel_presheaf c = closure(p);
        rel_presheaf cc = closure(c);
        t.expect(c.values == cc.values, "closure not idempotent over " + q->name());
    }
    // Levels of the powerset extension against the closed lifted presheaf.
    const qptr c4 = quantale::chain(4, 3);
    t.expect(c4->completely_distributive() && c4->tensor_preserves_totally_below(), "chain-4 hypotheses");
    auto pw = functors::powerset();
    std::size_t spaces = 0;
    for (const space& x : all_spaces_upto(c4, 3, false)) {
        ++spaces;
        space ext = vcatify_wpb(*pw, x).result;
        rel_presheaf lifted{c4, ext.objects, c4->carrier(), {}};
        for (elem r : lifted.grid) lifted.values.push_back(relation_lift(*pw, level_relation(x, r)));
        rel_presheaf closed = closure(lifted);
        for (std::size_t g = 0; g < lifted.grid.size(); ++g)
            t.expect(closed.values[g] == level_relation(ext, lifted.grid[g]),
                     "level " + c4->format(lifted.grid[g]) + " on " + describe(x));
    }
    return t.done(std::to_string(fixtures) + " fixtures, 20 random presheaves, " + std::to_string(spaces) + " chain-4 spaces");
}

outcome c9_kernel_coincidence() {
    tally t;
    auto rng = rng_for(9);
    std::uniform_int_distribution<std::size_t> st(1, 6), in(1, 2);
    for (int i = 0; i < 25; ++i) {
        // Outputs: 3-point spaces whose distinct objects are not e-related both ways.
        space out;
        if (i % 2 == 0) {
            out = space(quantale::lawvere(), {"o0", "o1", "o2"});
            std::uniform_int_distribution<int> d(1, 6);
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) out.at(a, b) = a == b ? 0.0 : 0.5 * d(rng);
            out = close_space(out);
        } else {
            out = discrete(quantale::boolean2(), {"o0", "o1", "o2"});
            out.at(0, 1) = 1.0; // a partial order: o0 < o1
        }
        machine m = random_machine(out, st(rng), in(rng), rng);
        const std::size_t n = m.size();
        behaviour b = beh_metric_words(m, 36);
        const partition bis = bisimilarity(m);
        t.expect(same_partition(kernel(b, n), bis), "kernel differs from bisimilarity, machine " + std::to_string(i));
        t.expect(same_partition(bis, machine_bisim_oracle(m)), "bisimilarity differs from oracle, machine " + std::to_string(i));
    }
    return t.done("25 random machines, depth 36");
}

outcome c10_dfa_language() {
    tally t;
    auto rng = rng_for(10);
    const qptr b = quantale::boolean2();
    const space out = two_rs(b, 1.0, 0.0);
    std::uniform_int_distribution<std::size_t> st(2, 5);
    const std::size_t depth = 6;
    for (int i = 0; i < 10; ++i) {
        machine m = random_machine(out, st(rng), 2, rng);
        behaviour d = beh_metric_words(m, depth);
        for (std::size_t x = 0; x < m.size(); ++x) {
            const auto lx = language(m, x, depth);
            for (std::size_t y = 0; y < m.size(); ++y) {
                const auto ly = language(m, y, depth);
                const bool incl = std::includes(ly.begin(), ly.end(), lx.begin(), lx.end());
                t.expect((d(x, y, m.size()) == 1.0) == incl, "DFA " + std::to_string(i) + " states " + std::to_string(x) + "," + std::to_string(y));
            }
        }
    }
    return t.done("10 random DFAs, words up to length 6");
}

outcome c11_kantorovich() {
    tally t;
    auto p = functors::powerset();
    std::size_t spaces = 0;
    for (const qptr& q : {quantale::boolean2(), quantale::chain(3, 1), quantale::chain(3, 2)}) {
        predicate_lifting heart = predicate_lifting::join(p, q);
        t.expect(is_vmonotone(heart), "join is not V-monotone over " + q->name());
        auto h = kantorovich_functor(heart);
        for (const space& x : all_spaces_upto(q, 3, false)) {
            ++spaces;
            space sharp = lan_extend(*h, x).result;
            space bar = kantorovich_lift(heart, x);
            t.expect(quantale_leq_all(sharp, bar), "Lan exceeds the lifting on " + describe(x));
        }
    }
    return t.done(std::to_string(spaces) + " labelled spaces");
}

outcome c12_non_extension() {
    tally t;
    const qptr l = quantale::lawvere();
    const space k = two_r(l, l->unit());
    space d = discrete(l, {"a", "b"});
    space gd = power_by(d, k);
    t.expect(gd.size() == 2 && validate(gd).ok(), "power of a discrete space has the wrong size");
    bool discrete_again = true;
    for (std::size_t i = 0; i < gd.size(); ++i)
        for (std::size_t j = 0; j < gd.size(); ++j)
            discrete_again = discrete_again && l->eq(gd(i, j), i == j ? l->unit() : l->bottom());
    t.expect(discrete_again, "G does not preserve discreteness");
    space x(l, {"a", "b"});
    x.at(0, 0) = x.at(1, 1) = 0;
    x.at(0, 1) = 0;
    x.at(1, 0) = 1;
    space gx = power_by(x, k);
    space lx = lan_extend(*composed_with_discrete(functors::identity()), x).result;
    t.expect(same_space(lx, x), "Lan_D(D) is not the identity");
    t.expect(!same_matrix(gx, lx), "G X coincides with Lan_D(D) X");
    return t.done("G X has " + std::to_string(gx.size()) + " objects, X has 2");
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<outcome()>>> criteria = {
        {"quantale laws", c1_quantale_laws},
        {"identity extension", c2_identity_extension},
        {"zig-zag equals relation lifting", c3_zigzag_vs_lifting},
        {"Hausdorff closed form", c4_hausdorff},
        {"matching metric", c5_matching},
        {"unit iso", c6_unit_iso},
        {"composition and products", c7_closure_properties},
        {"relational presheaves", c8_presheaves},
        {"behavioural kernel", c9_kernel_coincidence},
        {"DFA language metric", c10_dfa_language},
        {"Kantorovich comparison", c11_kantorovich},
        {"non-extension witness", c12_non_extension},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
