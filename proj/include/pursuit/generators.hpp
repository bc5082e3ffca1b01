#pragma once

#include <cstdint>

#include "pursuit/graph.hpp"

/// Graph families used as test corpus and experiment inputs.
///
/// Vertex numbering:
///  - path(n):        0-1-...-(n-1)
///  - cycle(n):       path plus the edge (0, n-1)
///  - grid(w, h):     vertex (x, y) is y*w + x, 4-neighbour lattice
///  - hypercube(d):   bit strings of length d, adjacent when differing in one bit
///  - petersen():     outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5
///  - complete(n), star(m): star centre is 0, leaves 1..m
///  - projective_incidence(q): points 0..N-1 then lines N..2N-1, N = q^2+q+1,
///    both enumerated as normalized triples (1,a,b), (0,1,b), (0,0,1) in
///    lexicographic order of (a, b)
namespace pursuit::gen {

Graph path(int n);
Graph cycle(int n);
Graph grid(int width, int height);
Graph hypercube(int dimension);
Graph petersen();
Graph complete(int n);
Graph star(int leaves);

/// Erdos-Renyi G(n, p): pairs (u, v), u < v, visited in lexicographic order,
/// each an edge when Rng(seed).bernoulli(p).
Graph gnp(int n, double edge_prob, std::uint64_t seed);

/// Uniform random labelled tree via a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Random tree plus independent extra edges with probability extra_prob; always connected.
Graph random_connected(int n, double extra_prob, std::uint64_t seed);

/// Connected graph of girth >= min_girth: a random tree grown by edges whose
/// endpoints are at distance >= min_girth - 1, tried in a seeded random order.
Graph random_high_girth(int n, int min_girth, std::uint64_t seed);

/// Point/line incidence graph of the projective plane over the field with q elements.
Graph projective_incidence(int q);

bool is_prime(int q);

}  // namespace pursuit::gen
