#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vcat/errors.hpp"

namespace vcat {

// Quantale elements. Finite kinds store the element index, closed-form
// kinds store the real distance (infinity allowed for lawvere).
using elem = double;

inline constexpr double tolerance = 1e-9;

enum class quantale_kind {
    boolean2,
    chain,
    finite_table,
    free_commutative_monoid,
    lawvere,
    ultrametric,
};

struct structure_flags {
    bool integral = false;
    bool zero_divisor_free = false;
    bool completely_distributive = false;
};

struct law_report {
    struct entry {
        std::string law;
        bool pass = true;
        std::string detail;
    };
    std::vector<entry> entries;

    bool ok() const;
    void add(std::string law, bool pass, std::string detail = {});
    // Fold a family of checks into one entry: first failure wins.
    void fail_once(const std::string& law, const std::string& detail);
};

class quantale;
using qptr = std::shared_ptr<const quantale>;

class quantale {
public:
    // Bundled instances.
    static qptr boolean2();
    // Ordinal n = {0 < ... < n-1} with an idempotent tensor, 0 absorbing,
    // min below the unit and max above it.
    static qptr chain(int n, int unit);
    static qptr lawvere();
    static qptr ultrametric();
    // Finite chain of real distances in [0,1] with max as tensor.
    static qptr ultrametric_grid(std::vector<double> values);
    // Powerset of a finite commutative monoid given by its table.
    static qptr free_commutative_monoid(std::vector<std::string> monoid,
                                        std::vector<std::vector<int>> mult,
                                        int unit);
    // Arbitrary finite table. leq and tensor are n*n row-major.
    // Tables are not law-checked here; use check_laws.
    static qptr finite(std::string name, std::vector<std::string> labels,
                       std::vector<char> leq, std::vector<int> tensor,
                       int unit, quantale_kind kind = quantale_kind::finite_table);

    quantale_kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool is_finite() const { return kind_ != quantale_kind::lawvere && kind_ != quantale_kind::ultrametric; }
    bool is_chain() const { return chain_; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<elem> carrier() const;

    elem bottom() const { return bot_; }
    elem top() const { return top_; }
    elem unit() const { return unit_; }

    bool contains(elem a) const;
    void check(elem a) const;

    bool leq(elem a, elem b) const;
    bool eq(elem a, elem b) const;
    bool lt(elem a, elem b) const { return leq(a, b) && !eq(a, b); }
    elem join(elem a, elem b) const;
    elem meet(elem a, elem b) const;
    elem join(std::span<const elem> s) const;
    elem meet(std::span<const elem> s) const;
    elem tensor(elem a, elem b) const;
    elem hom(elem r, elem s) const;

    structure_flags flags() const;
    bool integral() const;
    bool zero_divisor_free() const;
    bool completely_distributive() const;
    // s << r. Throws unsupported_error when not completely distributive.
    bool totally_below(elem s, elem r) const;
    // s << r and s' << r' imply s(x)s' << r(x)r'.
    bool tensor_preserves_totally_below() const;

    std::string format(elem a) const;
    elem parse(const std::string& text) const;

    // Random carrier element for property checks.
    elem sample(std::mt19937_64& rng) const;

    // Finite kinds: raw tables, -1 where a join or hom does not exist.
    int join_index(int a, int b) const { return join_[a * size() + b]; }
    int tensor_index(int a, int b) const { return tensor_[a * size() + b]; }
    bool leq_index(int a, int b) const { return leq_[a * size() + b] != 0; }

private:
    quantale() = default;
    void finish_finite();
    static qptr make_chain(int n, int unit);

    quantale_kind kind_ = quantale_kind::finite_table;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<int> tensor_, join_, meet_, hom_;
    std::vector<char> below_; // totally-below table, s*n+r
    bool chain_ = false;
    bool lattice_ = false;
    bool cd_ = false;
    elem bot_ = 0, top_ = 0, unit_ = 0;
};

// Partial order, complete lattice, monoid laws, distributivity, residuation.
// Finite kinds are checked exhaustively, closed-form kinds on seeded samples.
law_report check_laws(const quantale& q, std::uint64_t seed = 20240601, std::size_t samples = 10000);

// Lemma: r << join S iff r << s for some s in S, over all subsets S.
law_report check_totally_below_lemma(const quantale& q);

} // namespace vcat
