#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fbranch/graph.hpp"

namespace fbranch {

using Rng = std::mt19937_64;

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph star_graph(std::size_t leaves);
// Centre 0 with one path per entry of `legs`.
Graph spider_graph(const std::vector<std::size_t>& legs);
// Path of `handle` vertices whose last vertex carries `bristles` leaves.
Graph broom_graph(std::size_t handle, std::size_t bristles);

// Two hubs joined by three paths with the given numbers of internal vertices.
Graph theta_graph(std::size_t a, std::size_t b, std::size_t c);

Graph random_graph(std::size_t n, double p, Rng& rng);
Graph random_tree(std::size_t n, Rng& rng);
// Cycle 0..len-1 with `extra` further vertices hung off it as random trees.
Graph cycle_with_pendants(std::size_t len, std::size_t extra, Rng& rng);
Graph random_spider(std::size_t max_n, Rng& rng);
Graph random_broom(std::size_t max_n, Rng& rng);
// At least two components, at most max_n vertices in total.
Graph random_disconnected(std::size_t max_n, Rng& rng);

// One representative per isomorphism class, in a fixed order.
std::vector<Graph> graph_classes(std::size_t n);
std::vector<Graph> connected_graph_classes(std::size_t n);
// Unlabelled trees with maximum degree <= 3 on exactly n nodes.
std::vector<Graph> subcubic_tree_shapes(std::size_t n);

}  // namespace fbranch
