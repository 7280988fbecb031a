#pragma once

#include <string>
#include <vector>

#include "vcat/vcat.hpp"

namespace vcat {

// Deterministic automaton with outputs in a V-category.
struct machine {
    std::vector<std::string> inputs;
    std::vector<std::string> states;
    std::vector<std::vector<std::size_t>> delta; // delta[state][input]
    std::vector<std::size_t> out;                // object of outputs
    space outputs;

    std::size_t size() const { return states.size(); }
    // Throws domain_error when delta or out is not total.
    void check() const;
};

struct kripke {
    std::vector<std::string> states;
    std::vector<std::vector<std::size_t>> succ;

    std::size_t size() const { return states.size(); }
    void check() const;
};

// Class index of each element; classes numbered by first occurrence.
using partition = std::vector<std::size_t>;

space base_d(qptr q, const preorder& p);
preorder base_c(const space& x);
partition connected_components(const preorder& p);

// Row-major matrix over states.
struct behaviour {
    qptr q;
    std::vector<elem> dist;
    std::size_t iterations = 0;
    bool converged = true;

    elem operator()(std::size_t i, std::size_t j, std::size_t n) const { return dist[i * n + j]; }
};

// Meet over words of length at most depth of the output distances.
behaviour beh_metric_words(const machine& m, std::size_t depth);
// d_0 = top, d_{n+1}(x,y) = (meet_a d_n(x.a, y.a)) (x) B(out x, out y).
behaviour beh_metric_iterate(const machine& m, std::size_t max_steps, double tol = tolerance);

partition bisimilarity(const machine& m);
partition bisimilarity(const kripke& k);

// Pairs with e below the distance in both directions, as a partition.
// Throws domain_error if the kernel is not an equivalence.
partition kernel(const behaviour& b, std::size_t n);

bool same_partition(const partition& a, const partition& b);
partition normalise(const partition& p);

} // namespace vcat
