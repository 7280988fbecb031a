#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vcat/quantale.hpp"

namespace vcat {

// Binary relation between {0..rows-1} and {0..cols-1}.
struct relation {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint8_t> bits;

    relation() = default;
    relation(std::size_t r, std::size_t c) : rows(r), cols(c), bits(r * c, 0) {}

    static relation identity(std::size_t n);
    static relation full(std::size_t r, std::size_t c);

    bool operator()(std::size_t i, std::size_t j) const { return bits[i * cols + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v = true) { bits[i * cols + j] = v ? 1 : 0; }
    std::size_t count() const;
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool subset_of(const relation& o) const;
    bool operator==(const relation& o) const = default;
    // Relational composition: (*this)(i,k) and o(k,j).
    relation then(const relation& o) const;
    relation intersect(const relation& o) const;
    relation unite(const relation& o) const;
    relation converse() const;
};

// A finite V-category; dist[i*n+j] = X(objects[i], objects[j]).
struct space {
    qptr q;
    std::vector<std::string> objects;
    std::vector<elem> dist;

    space() = default;
    space(qptr quant, std::vector<std::string> objs);

    std::size_t size() const { return objects.size(); }
    elem operator()(std::size_t i, std::size_t j) const { return dist[i * objects.size() + j]; }
    elem& at(std::size_t i, std::size_t j) { return dist[i * objects.size() + j]; }
};

struct preorder {
    std::vector<std::string> elements;
    relation leq;

    std::size_t size() const { return elements.size(); }
    bool valid() const;
};

// Object map between the objects of two spaces.
using object_map = std::vector<std::size_t>;

// Cap on enumerations (hom_cat candidates, functor carriers).
// VCAT_MAX_ENUM overrides the default of 10^6.
std::size_t max_enum();

law_report validate(const space& x);
law_report validate_functor(const space& src, const space& dst, const object_map& f);

// Same objects in the same order and equal distances.
bool same_space(const space& a, const space& b);
// Same distance matrix, labels ignored.
bool same_matrix(const space& a, const space& b);

space discrete(qptr q, std::vector<std::string> labels);
// One object with self-distance e, or with self-distance r.
space unit_cat(qptr q);
space unit_cat_at(qptr q, elem r);
space two_r(qptr q, elem r);
space two_rs(qptr q, elem r, elem s);

space tensor_cat(const space& x, const space& y);
// Objects are the V-functors y -> z; dist(f,g) is the meet over y of z(fy,gy).
space hom_cat(const space& y, const space& z, std::size_t cap = max_enum());
space power_cat(const space& x, const std::vector<std::string>& a, std::size_t cap = max_enum());
// V-functors y -> z as object maps, in the order used by hom_cat.
std::vector<object_map> vfunctors(const space& y, const space& z, std::size_t cap = max_enum());

relation level_relation(const space& x, elem r);
preorder underlying_preorder(const space& x);

// Join-tensor closure of a matrix: the least V-category above m
// (self-distances raised to at least e).
space close_space(space m);

} // namespace vcat
