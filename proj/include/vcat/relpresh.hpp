#pragma once

#include <string>
#include <vector>

#include "vcat/vcat.hpp"

namespace vcat {

// r |-> relation on the carrier, stored on a finite grid of quantale elements.
struct rel_presheaf {
    qptr q;
    std::vector<std::string> carrier;
    std::vector<elem> grid;
    std::vector<relation> values; // values[i] belongs to grid[i]

    // Off the grid: union of the values at grid elements above r.
    relation at(elem r) const;
};

rel_presheaf to_presheaf(const space& x);
// Throws domain_error for a non-continuous presheaf or an invalid result.
space from_presheaf(const rel_presheaf& p);

// Identity below the unit, lax monoidality, antitonicity.
law_report validate_presheaf(const rel_presheaf& p);
// value(join S) contains the intersection of value(s), for every subset S of the grid.
bool is_continuous(const rel_presheaf& p);
// value'(r) is the intersection of value(s) over s << r; r ranges over the grid.
rel_presheaf closure(const rel_presheaf& p);
// (f x f) maps a(r) into b(r) for every grid r of a.
bool is_presheaf_morphism(const rel_presheaf& a, const rel_presheaf& b, const object_map& f);

} // namespace vcat
