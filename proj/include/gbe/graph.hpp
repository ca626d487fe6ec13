#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gbe/dataset.hpp"

namespace gbe {

/// PMI ratio p(a,b) / (p(a) p(b)) for an unordered item pair, a < b.
struct EdgeScore {
    ItemId a = 0;
    ItemId b = 0;
    double score = 0.0;

    bool operator==(const EdgeScore& other) const = default;
};

/**
 * One PMI score per unordered pair of items occurring in >= 1 basket of bs
 * (pairs involving a non-occurring item are omitted: their PMI is undefined).
 * Result is sorted by (a, b) ascending in catalog order.
 */
std::vector<EdgeScore> cooccurrence_scores(const BasketSet& bs, const ItemCatalog& catalog);

/**
 * Top-E pairs by score, E = min(round(rho * n * (n-1) / 2), #positive pairs);
 * ties at the cutoff break by catalog order of (a, b). Zero-score pairs are
 * never selected. n is the count of items occurring in the window.
 */
std::vector<EdgeScore> select_edges(const std::vector<EdgeScore>& scores, double rho, std::size_t n);

/**
 * @brief Connected-component partition of an item set.
 *
 * Clusters are sorted by their lexicographically smallest member (canonical
 * ids); members are sorted in catalog order. Items with no incident edge form
 * singleton clusters.
 */
struct ClusterPartition {
    std::vector<std::vector<ItemId>> clusters;
    std::unordered_map<ItemId, std::uint32_t> membership;  // item -> cluster id

    std::size_t item_count() const { return membership.size(); }
};

ClusterPartition connected_components(const std::vector<ItemId>& items,
                                      const std::vector<EdgeScore>& edges);

/// Per-edge flag, parallel to `edges`: true iff removing the edge increases
/// the number of connected components.
std::vector<bool> classify_bridges(const std::vector<ItemId>& items,
                                   const std::vector<EdgeScore>& edges);

/// Selected co-occurrence graph for one window.
struct CooccurrenceGraph {
    std::vector<ItemId> items;     // occurring items, catalog order
    std::vector<EdgeScore> edges;  // selected edges, sorted by (a, b)
    std::vector<bool> bridge;      // parallel to edges
    double rho = 0.0;
};

/// Full per-window construction: scores -> edge selection -> bridge flags.
CooccurrenceGraph build_graph(const BasketSet& bs, const ItemCatalog& catalog, double rho);

enum class GraphFormat { Dot, Json };

/**
 * Renders the graph and its partition as DOT (bridges dashed, one subgraph
 * per cluster) or JSON ({nodes, edges, clusters}). Output bytes are a pure
 * function of the inputs (catalog order everywhere).
 */
std::string export_graph(const CooccurrenceGraph& graph, const ClusterPartition& partition,
                         const ItemCatalog& catalog, GraphFormat format);

}  // namespace gbe
