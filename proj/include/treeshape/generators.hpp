#ifndef TREESHAPE_GENERATORS_HPP_
#define TREESHAPE_GENERATORS_HPP_

// Random tree growth under the YHK and PDA processes.
//
// Both processes start from the two-leaf tree and attach one taxon per step:
// YHK attaches to a uniformly chosen pendant edge, PDA to a uniformly chosen
// edge of any kind. YHK inserts taxa in a uniformly random order, PDA in the
// fixed order 1, 2, ..., n (the uniform law on labelled trees does not depend
// on insertion order).
//
// Randomness: every tree is grown from its own std::mt19937_64 stream. When
// many trees are drawn from one user seed, tree i uses the stream seeded with
// derive_seed(seed, i), so results do not depend on how the work is split
// across threads. Bounded integers are drawn by rejection sampling rather
// than std::uniform_int_distribution, whose output differs between standard
// libraries.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "treeshape/model.hpp"
#include "treeshape/tree.hpp"

namespace treeshape {

auto splitmix64(std::uint64_t x) -> std::uint64_t;
auto derive_seed(std::uint64_t seed, std::uint64_t stream) -> std::uint64_t;

// Uniform integer in [0, bound) from a 64-bit engine, bound > 0.
auto uniform_below(std::mt19937_64& rng, std::uint64_t bound) -> std::uint64_t;

struct GrowthTrace {
  std::uint64_t seed = 0;
  Model model = Model::pda;
  Rootedness rootedness = Rootedness::unrooted;
  std::vector<Edge_id> chosen_edges;  // one per attachment, n - 2 in total
  std::vector<Taxon> permutation;     // insertion order of the n taxa

  friend auto operator==(const GrowthTrace&, const GrowthTrace&) -> bool = default;
};

struct GrowOptions {
  // YHK only: keep taxa in order 1..n instead of drawing a random
  // permutation. (A, B) are label-invariant, so counts are unaffected.
  bool skip_permutation = false;
};

struct GrownTree {
  PhyloTree tree;
  GrowthTrace trace;
};

// Throws std::invalid_argument for n < 2.
auto grow(Model model, int n, Rootedness rootedness, std::uint64_t seed,
          GrowOptions options = {}) -> GrownTree;

// Rebuilds the tree a trace describes.
auto replay(const GrowthTrace& trace) -> PhyloTree;

struct CountHistogram {
  Model model = Model::pda;
  Rootedness rootedness = Rootedness::unrooted;
  int n = 0;
  std::uint64_t reps = 0;
  std::map<std::pair<int, int>, std::uint64_t> cells;  // (a, b) -> trees

  auto fraction(int a, int b) const -> double;
  auto mean_a() const -> double;
  auto mean_b() const -> double;
};

// Draws `reps` trees (tree i from derive_seed(seed, i)) and tallies their
// (pitchfork, cherry) counts. `workers` threads share the reps; the
// histogram is the same for any worker count.
auto sample_counts(Model model, int n, Rootedness rootedness, std::uint64_t reps,
                   std::uint64_t seed, int workers = 1, GrowOptions options = {})
    -> CountHistogram;

}  // namespace treeshape

#endif  // TREESHAPE_GENERATORS_HPP_
