#include "hgp/orbitsearch.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <thread>

namespace hgp {

namespace {

bool within_bound(const IntVec& v, const std::optional<Int>& bound) {
    if (!bound) return true;
    for (const Int& x : v)
        if (x > *bound || -x > *bound) return false;
    return true;
}

}  // namespace

BfsOutcome orbit_bfs(const GeneratorSet& gens, const IntVec& root, const SearchConfig& cfg,
                     const std::function<bool(const IntVec&)>& accept, std::ostream* progress) {
    if (cfg.max_entry && *cfg.max_entry < 1) throw Error("max_entry must be positive");
    if (!within_bound(root, cfg.max_entry))
        throw Error("max_entry is smaller than the largest entry of the start vector");
    const int threads = std::max(1, cfg.threads);

    BfsOutcome out;
    out.nodes.push_back(OrbitNode{root, -1, Gen::A, 0});
    std::set<IntVec> visited;
    visited.insert(root);

    std::vector<int> frontier{0};
    for (int depth = 1; depth <= cfg.max_depth && !frontier.empty(); ++depth) {
        // Generator images of the whole frontier, computed in parallel; the
        // merge below stays strictly sequential so results are independent
        // of the thread count.
        std::vector<std::array<std::optional<IntVec>, 4>> images(frontier.size());
        auto expand_range = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t fi = lo; fi < hi; ++fi) {
                const IntVec& src = out.nodes[static_cast<std::size_t>(frontier[fi])].vec;
                for (int g = 0; g < 4; ++g) {
                    IntVec img = mat_vec(gens[static_cast<Gen>(g)], src);
                    if (within_bound(img, cfg.max_entry))
                        images[fi][static_cast<std::size_t>(g)] = std::move(img);
                }
            }
        };
        if (threads == 1 || frontier.size() < 2 * static_cast<std::size_t>(threads)) {
            expand_range(0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t chunk = (frontier.size() + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const std::size_t lo = std::min(frontier.size(), t * chunk);
                const std::size_t hi = std::min(frontier.size(), lo + chunk);
                if (lo < hi) pool.emplace_back(expand_range, lo, hi);
            }
            for (auto& th : pool) th.join();
        }

        std::vector<int> next;
        for (std::size_t fi = 0; fi < frontier.size(); ++fi)
            for (int g = 0; g < 4; ++g) {
                auto& slot = images[fi][static_cast<std::size_t>(g)];
                if (!slot) continue;
                if (!visited.insert(*slot).second) continue;
                out.nodes.push_back(
                    OrbitNode{std::move(*slot), frontier[fi], static_cast<Gen>(g), depth});
                const int idx = static_cast<int>(out.nodes.size()) - 1;
                next.push_back(idx);
                if (accept(out.nodes.back().vec)) {
                    out.found = true;
                    out.node_index = idx;
                    out.depth_reached = depth;
                    if (progress)
                        *progress << "level=" << depth << " frontier=" << next.size()
                                  << " visited=" << out.nodes.size() << " (hit)\n";
                    return out;
                }
            }
        out.depth_reached = depth;
        frontier = std::move(next);
        if (progress)
            *progress << "level=" << depth << " frontier=" << frontier.size()
                      << " visited=" << out.nodes.size() << "\n";
    }
    return out;
}

std::vector<Gen> reconstruct_letters(const std::vector<OrbitNode>& nodes, int index) {
    // The generator applied last is the leftmost letter, so collecting from
    // the node up to the root is already the word order:
    // eval_word(word) * root = node.vec.
    std::vector<Gen> letters;
    for (int i = index; nodes[static_cast<std::size_t>(i)].parent >= 0;
         i = nodes[static_cast<std::size_t>(i)].parent)
        letters.push_back(nodes[static_cast<std::size_t>(i)].gen);
    return letters;
}

Word reconstruct_word(const std::vector<OrbitNode>& nodes, int index) {
    Word w;
    w.letters = reconstruct_letters(nodes, index);
    w.source = word_str(w.letters);
    return w;
}

SearchResult search_certificate(const GeneratorSet& gens, const SearchConfig& cfg,
                                std::ostream* progress) {
    const Transvection t = group_transvection(gens);
    const auto accept = [&](const IntVec& w) {
        return dot(t.v_L, w) == 0 && independent_pair(t.v_R, w);
    };
    BfsOutcome bfs = orbit_bfs(gens, t.v_R, cfg, accept, progress);

    SearchResult res;
    res.visited = bfs.nodes.size();
    res.depth_reached = bfs.depth_reached;
    if (!bfs.found) return res;
    res.found = true;
    res.word = reconstruct_word(bfs.nodes, bfs.node_index);
    res.vector = bfs.nodes[static_cast<std::size_t>(bfs.node_index)].vec;
    return res;
}

SearchResult search_certificate(const GroupPresentation& gp, const SearchConfig& cfg,
                                std::ostream* progress) {
    return search_certificate(gp.generators(), cfg, progress);
}

}  // namespace hgp
