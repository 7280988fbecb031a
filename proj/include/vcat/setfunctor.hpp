#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "vcat/vcat.hpp"

namespace vcat {

enum class functor_op { identity, constant, power, product, coproduct, list, powerset, multiset, compose };

struct set_functor;
using functor_ptr = std::shared_ptr<const set_functor>;

// Syntax tree of a Set endofunctor. Carriers T({0..n-1}) are finite and
// index-coded; the coding is fixed per constructor (see card/decode).
struct set_functor {
    functor_op op = functor_op::identity;
    std::size_t param = 0;           // power arity, list length bound, multiset size bound
    std::vector<std::string> labels; // elements of a constant set
    std::vector<functor_ptr> args;   // product/coproduct operands, compose(outer, inner)
    bool preserves_weak_pullbacks = true;
};

namespace functors {
functor_ptr identity();
functor_ptr constant(std::vector<std::string> elements);
functor_ptr power(std::size_t n);
functor_ptr product(functor_ptr a, functor_ptr b);
functor_ptr coproduct(functor_ptr a, functor_ptr b);
functor_ptr list(std::size_t max_len);
functor_ptr powerset();
functor_ptr multiset(std::size_t max_size);
// compose(outer, inner) is outer after inner.
functor_ptr compose(functor_ptr outer, functor_ptr inner);
} // namespace functors

// Expressions such as powerset, multiset(3), product(identity, const(a,b)),
// compose(powerset, powerset), list(2), power(2), coproduct(identity, identity).
functor_ptr parse_functor(const std::string& text);
std::string to_string(const set_functor& t);
bool preserves_weak_pullbacks(const set_functor& t);

// Structured element of a carrier.
struct term {
    enum class tag { atom, constant, tuple, left, right, seq, set, bag };
    tag kind = tag::atom;
    std::size_t value = 0;
    std::vector<term> kids;

    auto operator<=>(const term&) const = default;
    bool operator==(const term&) const = default;
};

std::size_t card(const set_functor& t, std::size_t n, std::size_t cap = max_enum());
// Action on a map f: {0..f.size()-1} -> {0..n_dst-1}.
object_map fmap(const set_functor& t, const object_map& f, std::size_t n_dst);
term decode(const set_functor& t, std::size_t n, std::size_t index);
std::size_t encode(const set_functor& t, std::size_t n, const term& x);
std::string render(const set_functor& t, const term& x, const std::vector<std::string>& labels);

// Labels of T(S) in carrier order.
std::vector<std::string> apply_on_set(const set_functor& t, const std::vector<std::string>& labels);

// Relation lifting, computed constructor by constructor.
relation relation_lift(const set_functor& t, const relation& r);
// Relation lifting by its definition: apply T to the projections of the graph of r.
relation relation_lift_span(const set_functor& t, const relation& r);

} // namespace vcat
