#pragma once

#include <optional>
#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan {

// Injective vertex map, map[f_vertex] = host vertex, under which every edge
// of f lands on an edge of the host (non-induced subhypergraph containment).
struct Embedding {
  std::vector<int> map;
};

// Exhaustive backtracking search for an embedding of f into h. Vertices of f
// are assigned in decreasing-degree order; candidates are filtered by degree
// and partially mapped edges are checked for an extendable host edge.
// A nullopt answer is a proof of absence. Requires f.k() == h.k() when f has
// edges.
std::optional<Embedding> contains_sub(const Hypergraph& h, const Hypergraph& f);

// Embedding required to map some edge of f exactly onto host_edge; used for
// incremental freeness checks anchored at a newly added edge.
std::optional<Embedding> contains_sub_using_edge(const Hypergraph& h,
                                                 const Hypergraph& f,
                                                 const Edge& host_edge);

bool verify_embedding(const Hypergraph& h, const Hypergraph& f,
                      const Embedding& phi);

bool is_family_free(const Hypergraph& h, const std::vector<Hypergraph>& family);

// Whether A ∪ B = A ∪ C forces B = C across edges; equivalently, no edge A
// contains the symmetric difference of two distinct edges B, C.
bool is_cancellative(const Hypergraph& h);

}  // namespace hyturan
