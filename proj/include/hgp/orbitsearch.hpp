#pragma once

#include <functional>
#include <optional>
#include <ostream>

#include "hgp/group.hpp"

namespace hgp {

struct SearchConfig {
    // Absolute-value bound on vector entries; images exceeding it are pruned.
    // nullopt disables pruning (use with a small max_depth).
    std::optional<Int> max_entry = Int(1000000);
    int max_depth = 40;
    int threads = 1;
};

struct OrbitNode {
    IntVec vec;
    int parent = -1;  // index into the node list; -1 for the root
    Gen gen = Gen::A;
    int depth = 0;
};

struct BfsOutcome {
    bool found = false;
    int node_index = -1;
    int depth_reached = 0;
    std::vector<OrbitNode> nodes;  // visited vectors, in discovery order
};

// Frontier BFS over the orbit of root under the four generators:
// R_0 = {root}, R_{i+1} = R_i plus the unpruned generator images of the new
// level, deduplicated exactly. New vectors are merged and scanned in a fixed
// order (parent index, then generator order), so the outcome is independent
// of cfg.threads; the first accepted vector ends the search.
BfsOutcome orbit_bfs(const GeneratorSet& gens, const IntVec& root, const SearchConfig& cfg,
                     const std::function<bool(const IntVec&)>& accept,
                     std::ostream* progress = nullptr);

// Letters of the word gamma with eval_word(gamma) * root = node vector,
// read off the parent links; length equals the node depth.
std::vector<Gen> reconstruct_letters(const std::vector<OrbitNode>& nodes, int index);
Word reconstruct_word(const std::vector<OrbitNode>& nodes, int index);

struct SearchResult {
    bool found = false;
    Word word;
    IntVec vector;
    std::size_t visited = 0;
    int depth_reached = 0;
};

// Searches for a certificate word: a vector w = gamma * v_R in the orbit of
// v_R with v_L w = 0 and (v_R, w) linearly independent.
SearchResult search_certificate(const GroupPresentation& gp, const SearchConfig& cfg,
                                std::ostream* progress = nullptr);
SearchResult search_certificate(const GeneratorSet& gens, const SearchConfig& cfg,
                                std::ostream* progress = nullptr);

}  // namespace hgp
