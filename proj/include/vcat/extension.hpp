#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vcat/setfunctor.hpp"
#include "vcat/vcat.hpp"

namespace vcat {

// values: meet-closure of the occurring distances plus bottom, unit and top.
// full: the whole carrier (finite quantales only).
enum class grid_mode { values, full };

std::vector<elem> nerve_grid(const space& x, grid_mode mode = grid_mode::values);

struct nerve_level {
    elem r;
    relation rel;   // X_r
    object_map d0;  // X_r -> X_o, first component
    object_map d1;  // X_r -> X_o, second component
};

struct nerve_diagram {
    std::vector<std::string> base;
    std::vector<nerve_level> levels;
};

nerve_diagram vnerve(const space& x, grid_mode mode = grid_mode::values);

// A functor Set -> V-cat, seen through finite evaluations.
class vvalued_functor {
public:
    virtual ~vvalued_functor() = default;
    virtual space on_set(qptr q, const std::vector<std::string>& labels) const = 0;
    virtual std::size_t card(std::size_t n) const = 0;
    // Object part of H f for f: {0..f.size()-1} -> {0..n_dst-1}.
    virtual object_map on_map(const object_map& f, std::size_t n_dst) const = 0;
    virtual std::string provenance() const = 0;
};

using vfunctor_ptr = std::shared_ptr<const vvalued_functor>;

// D after T.
vfunctor_ptr composed_with_discrete(functor_ptr t);
// Constant at a fixed V-category.
vfunctor_ptr constant_space(space k);
// S |-> (DS)^A (x) B.
vfunctor_ptr machine_functor(std::vector<std::string> inputs, space outputs);

struct lan_result {
    space result;
    std::vector<elem> grid;
    std::size_t iterations = 0;
    bool converged = true;
};

// Left Kan extension along D, by the zig-zag path formula.
lan_result lan_extend(const vvalued_functor& h, const space& x, grid_mode mode = grid_mode::values,
                      const std::vector<elem>& extra_grid = {});
object_map lan_extend_map(const vvalued_functor& h, const object_map& f, std::size_t n_dst);

// Extension of a weak-pullback-preserving T by relation lifting of level sets.
lan_result vcatify_wpb(const set_functor& t, const space& x, grid_mode mode = grid_mode::values);

elem hausdorff(const space& x, const std::vector<std::size_t>& a_from, const std::vector<std::size_t>& a_to);
elem matching_metric(const space& x, const std::vector<std::size_t>& m_from, const std::vector<std::size_t>& m_to);

// V-valued predicate lifting: heart[i] is the value at the i-th element of T(V).
struct predicate_lifting {
    functor_ptr t;
    qptr q;
    std::vector<elem> heart;
    std::string name;

    static predicate_lifting join(functor_ptr t, qptr q);
    static predicate_lifting meet(functor_ptr t, qptr q);
    static predicate_lifting constant(functor_ptr t, qptr q, elem c);
};

space discrete_kantorovich(const predicate_lifting& p, const std::vector<std::string>& labels,
                           std::size_t cap = max_enum());
space kantorovich_lift(const predicate_lifting& p, const space& x, std::size_t cap = max_enum());
bool is_vmonotone(const predicate_lifting& p, std::size_t max_size = 3);
vfunctor_ptr kantorovich_functor(predicate_lifting p);

// Every self-distance of H(empty) is top.
bool unit_iso_check(const vvalued_functor& h, qptr q);

// X |-> X^K, the internal hom out of K.
space power_by(const space& x, const space& k, std::size_t cap = max_enum());

} // namespace vcat
