#pragma once

#include <optional>
#include <random>

#include "gemkit/colored_graph.hpp"

namespace corpus {

// Every residue missing one color has only components of regular genus zero
// (3-spheres for 5 colors); for a closed gem this makes K(G) a manifold.
bool residues_are_spheres(const gemkit::ColoredGraph& g);

// S^4: the order-2 gem followed by random dipole insertions.
gemkit::ColoredGraph sphere_gem(std::mt19937_64& rng, int insertions);

// Replaces two edges of one color whose facets share no vertex by the two
// crossing edges; on a gem of M this gives M # (S^1 x S^3) or its twisted
// version. Empty when no such pair exists.
std::optional<gemkit::ColoredGraph> add_handle(const gemkit::ColoredGraph& g, std::mt19937_64& rng);

// Closed 4-manifold gem: a sphere, possibly with handles.
gemkit::ColoredGraph closed_manifold_gem(std::mt19937_64& rng);

// Removes h color-4 edges with pairwise disjoint facets (h balls drilled out).
std::optional<gemkit::ColoredGraph> puncture(const gemkit::ColoredGraph& g, int h, std::mt19937_64& rng);

// Closed manifold gem with h balls removed, then shuffled by dipole insertions.
gemkit::ColoredGraph boundary_manifold_gem(std::mt19937_64& rng, int h);

}  // namespace corpus
