#include "treeshape/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace treeshape {

auto splitmix64(std::uint64_t x) -> std::uint64_t {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

auto derive_seed(std::uint64_t seed, std::uint64_t stream) -> std::uint64_t {
  return splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

auto uniform_below(std::mt19937_64& rng, std::uint64_t bound) -> std::uint64_t {
  // Reject the top partial block so every residue is equally likely.
  const auto limit = std::numeric_limits<std::uint64_t>::max() -
                     std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    auto x = rng();
    if (x < limit) {
      return x % bound;
    }
  }
}

namespace {

// Pendant-edge index with O(1) insert, erase and uniform choice.
class PendantSet {
 public:
  void sync(const PhyloTree& tree, Edge_id e) {
    if (static_cast<std::size_t>(e) >= slot_.size()) {
      slot_.resize(static_cast<std::size_t>(e) + 1, -1);
    }
    const auto present = slot_[static_cast<std::size_t>(e)] >= 0;
    const auto pendant = tree.is_pendant(e);
    if (pendant && !present) {
      slot_[static_cast<std::size_t>(e)] = static_cast<int>(edges_.size());
      edges_.push_back(e);
    } else if (!pendant && present) {
      auto pos = slot_[static_cast<std::size_t>(e)];
      auto last = edges_.back();
      edges_[static_cast<std::size_t>(pos)] = last;
      slot_[static_cast<std::size_t>(last)] = pos;
      edges_.pop_back();
      slot_[static_cast<std::size_t>(e)] = -1;
    }
  }
  auto size() const -> std::uint64_t { return edges_.size(); }
  auto at(std::uint64_t i) const -> Edge_id { return edges_[i]; }

 private:
  std::vector<Edge_id> edges_;
  std::vector<int> slot_;
};

auto grow_impl(Model model, int n, Rootedness rootedness, std::uint64_t seed,
               GrowOptions options, bool record) -> GrownTree {
  if (n < 2) {
    throw std::invalid_argument("grow: n must be at least 2, got " + std::to_string(n));
  }
  auto rng = std::mt19937_64{seed};
  auto trace = GrowthTrace{seed, model, rootedness, {}, {}};
  trace.permutation.resize(static_cast<std::size_t>(n));
  std::iota(trace.permutation.begin(), trace.permutation.end(), 1);
  if (model == Model::yhk && !options.skip_permutation) {
    for (auto i = n - 1; i > 0; --i) {
      auto j = uniform_below(rng, static_cast<std::uint64_t>(i) + 1);
      std::swap(trace.permutation[static_cast<std::size_t>(i)], trace.permutation[j]);
    }
  }
  if (record) {
    trace.chosen_edges.reserve(static_cast<std::size_t>(n - 2));
  }

  auto tree = PhyloTree::two_leaf(rootedness, trace.permutation[0], trace.permutation[1]);
  auto pendant = PendantSet{};
  if (model == Model::yhk) {
    for (auto e = 0; e < tree.edge_count(); ++e) {
      pendant.sync(tree, e);
    }
  }
  for (auto k = 2; k < n; ++k) {
    auto e = Edge_id{};
    if (model == Model::yhk) {
      e = pendant.at(uniform_below(rng, pendant.size()));
    } else {
      e = static_cast<Edge_id>(uniform_below(rng, static_cast<std::uint64_t>(tree.edge_count())));
    }
    if (record) {
      trace.chosen_edges.push_back(e);
    }
    tree = attach_leaf(std::move(tree), e, trace.permutation[static_cast<std::size_t>(k)]);
    if (model == Model::yhk) {
      pendant.sync(tree, e);
      pendant.sync(tree, tree.edge_count() - 2);
      pendant.sync(tree, tree.edge_count() - 1);
    }
  }
  return {std::move(tree), std::move(trace)};
}

}  // namespace

auto grow(Model model, int n, Rootedness rootedness, std::uint64_t seed, GrowOptions options)
    -> GrownTree {
  return grow_impl(model, n, rootedness, seed, options, true);
}

auto replay(const GrowthTrace& trace) -> PhyloTree {
  const auto n = trace.permutation.size();
  if (n < 2 || trace.chosen_edges.size() != n - 2) {
    throw std::invalid_argument("replay: inconsistent trace");
  }
  auto tree = PhyloTree::two_leaf(trace.rootedness, trace.permutation[0], trace.permutation[1]);
  for (auto k = 2U; k < n; ++k) {
    tree = attach_leaf(std::move(tree), trace.chosen_edges[k - 2], trace.permutation[k]);
  }
  return tree;
}

auto CountHistogram::fraction(int a, int b) const -> double {
  auto it = cells.find({a, b});
  return it == cells.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(reps);
}

auto CountHistogram::mean_a() const -> double {
  auto total = 0.0;
  for (const auto& [ab, count] : cells) {
    total += static_cast<double>(ab.first) * static_cast<double>(count);
  }
  return total / static_cast<double>(reps);
}

auto CountHistogram::mean_b() const -> double {
  auto total = 0.0;
  for (const auto& [ab, count] : cells) {
    total += static_cast<double>(ab.second) * static_cast<double>(count);
  }
  return total / static_cast<double>(reps);
}

auto sample_counts(Model model, int n, Rootedness rootedness, std::uint64_t reps,
                   std::uint64_t seed, int workers, GrowOptions options) -> CountHistogram {
  if (reps < 1) {
    throw std::invalid_argument("sample_counts: reps must be at least 1");
  }
  if (n < 2) {
    throw std::invalid_argument("sample_counts: n must be at least 2");
  }
  workers = std::max(1, workers);
  using Cells = std::map<std::pair<int, int>, std::uint64_t>;
  auto partial = std::vector<Cells>(static_cast<std::size_t>(workers));
  auto run = [&](int w) {
    const auto begin = reps * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
    const auto end = reps * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
    auto& cells = partial[static_cast<std::size_t>(w)];
    for (auto i = begin; i < end; ++i) {
      auto grown = grow_impl(model, n, rootedness, derive_seed(seed, i), options, false);
      auto c = count_subtrees(grown.tree);
      ++cells[{c.a, c.b}];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    auto threads = std::vector<std::thread>{};
    for (auto w = 0; w < workers; ++w) {
      threads.emplace_back(run, w);
    }
    for (auto& t : threads) {
      t.join();
    }
  }
  auto hist = CountHistogram{model, rootedness, n, reps, {}};
  for (const auto& cells : partial) {
    for (const auto& [ab, count] : cells) {
      auto& cell = hist.cells[ab];
      if (cell > std::numeric_limits<std::uint64_t>::max() - count) {
        throw std::overflow_error("sample_counts: histogram counter overflow");
      }
      cell += count;
    }
  }
  return hist;
}

}  // namespace treeshape
