#include "pdg/long_detour.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "pdg/detail/parallel.hpp"
#include "pdg/witness.hpp"

namespace pdg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t binomial_guarded(int n, int r, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (int i = 0; i < r; ++i) {
    c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    if (c > cap) return cap + 1;
  }
  return c;
}

}  // namespace

ColoringFamily universal_family(int n, int width, std::uint64_t seed) {
  if (width <= 0) fail(Errc::width_too_large, "width must be positive");
  if (width > n) fail(Errc::width_too_large, "width exceeds the ground set");
  ColoringFamily fam;
  fam.mode = ColoringMode::universal;
  fam.ground_size = n;
  fam.width = width;
  const int blocks = (n + 63) / 64;

  if (width == n) {
    if (n > 24) fail(Errc::family_too_large, "full powerset requested for a large ground set");
    for (std::uint64_t bits = 0; bits < (1ULL << n); ++bits)
      fam.sets.push_back({bits});
    return fam;
  }

  constexpr std::uint64_t kTableCap = 8'000'000;
  if (width > 16 || binomial_guarded(n, width, kTableCap) > kTableCap)
    fail(Errc::family_too_large,
         "constraint table for (" + std::to_string(n) + ", " + std::to_string(width) +
             ") exceeds the construction guard");

  // all width-subsets, flattened
  std::vector<int> combos;
  {
    std::vector<int> idx(width);
    for (int i = 0; i < width; ++i) idx[i] = i;
    while (true) {
      combos.insert(combos.end(), idx.begin(), idx.end());
      int i = width - 1;
      while (i >= 0 && idx[i] == n - width + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < width; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  const std::size_t num_sets = combos.size() / static_cast<std::size_t>(width);
  const int pattern_words = std::max(1, (1 << width) >> 6);
  std::vector<std::uint64_t> covered(num_sets * static_cast<std::size_t>(pattern_words), 0);
  std::uint64_t uncovered = num_sets << width;

  std::mt19937_64 rng(splitmix64(splitmix64(seed ^ (static_cast<std::uint64_t>(n) << 20)) ^
                                 static_cast<std::uint64_t>(width)));
  auto pattern_of = [&](std::size_t set_idx, const std::vector<std::uint64_t>& candidate) {
    int pattern = 0;
    const int* a = &combos[set_idx * static_cast<std::size_t>(width)];
    for (int j = 0; j < width; ++j)
      pattern |= static_cast<int>((candidate[a[j] >> 6] >> (a[j] & 63)) & 1u) << j;
    return pattern;
  };
  auto gain_of = [&](const std::vector<std::uint64_t>& candidate) {
    std::uint64_t gain = 0;
    for (std::size_t i = 0; i < num_sets; ++i) {
      const int p = pattern_of(i, candidate);
      gain += !((covered[i * pattern_words + (p >> 6)] >> (p & 63)) & 1u);
    }
    return gain;
  };
  auto commit = [&](const std::vector<std::uint64_t>& candidate) {
    for (std::size_t i = 0; i < num_sets; ++i) {
      const int p = pattern_of(i, candidate);
      auto& word = covered[i * pattern_words + (p >> 6)];
      if (!((word >> (p & 63)) & 1u)) {
        word |= 1ULL << (p & 63);
        --uncovered;
      }
    }
    fam.sets.push_back(candidate);
  };

  commit(std::vector<std::uint64_t>(blocks, 0));  // all blue
  {
    std::vector<std::uint64_t> full(blocks, ~0ULL);
    if (n & 63) full[blocks - 1] = (1ULL << (n & 63)) - 1;
    commit(full);
  }
  int stale_rounds = 0;
  while (uncovered > 0) {
    std::vector<std::uint64_t> best;
    std::uint64_t best_gain = 0;
    for (int c = 0; c < 32; ++c) {
      std::vector<std::uint64_t> cand(blocks);
      for (int b = 0; b < blocks; ++b) cand[b] = rng();
      if (n & 63) cand[blocks - 1] &= (1ULL << (n & 63)) - 1;
      const std::uint64_t gain = gain_of(cand);
      if (gain > best_gain) {
        best_gain = gain;
        best = std::move(cand);
      }
    }
    if (best_gain == 0) {
      if (++stale_rounds > 100000) fail(Errc::family_too_large, "cover construction stalled");
      continue;
    }
    stale_rounds = 0;
    commit(best);
  }
  return fam;
}

BandCheckResult exact_band_check(const PlaneGraph& g, VertexId s, VertexId t, int k,
                                 const Deadline& deadline) {
  if (k < 1) fail(Errc::bad_argument, "k must be positive");
  const BfsLayers layers = bfs_layers(g, s);
  if (layers.layer_of[t] == kNoLayer) return {Verdict::t_unreachable, std::nullopt};
  const int dist_st = layers.layer_of[t];
  const int lo = dist_st + k;
  const int hi = dist_st + 3 * k - 1;
  const std::vector<int> dist_t = distances_to(g, t);

  if (s == t) return {Verdict::no_detour, std::nullopt};

  struct Frame {
    VertexId vertex;
    std::size_t next_out = 0;
  };
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<VertexId> path{s};
  std::vector<ArcId> path_arcs;
  std::vector<Frame> stack{{s, 0}};
  on_path[s] = 1;
  std::uint64_t ticks = 0;
  while (!stack.empty()) {
    if ((++ticks & 0xfff) == 0 && deadline && std::chrono::steady_clock::now() > *deadline)
      return {Verdict::timeout, std::nullopt};
    Frame& f = stack.back();
    const auto& outs = g.out_arcs(f.vertex);
    if (f.next_out == outs.size()) {
      on_path[f.vertex] = 0;
      path.pop_back();
      if (!path_arcs.empty()) path_arcs.pop_back();
      stack.pop_back();
      continue;
    }
    const ArcId a = outs[f.next_out++];
    const VertexId w = g.arc(a).head;
    const int len = static_cast<int>(path.size()) - 1;
    if (on_path[w] || dist_t[w] == kNoLayer || len + 1 + dist_t[w] > hi) continue;
    if (w == t) {
      if (len + 1 >= lo) {
        path.push_back(t);
        DetourWitness witness{path, len + 1, dist_st};
        return {Verdict::found, witness};
      }
      continue;  // extension through t cannot end at t again
    }
    on_path[w] = 1;
    path.push_back(w);
    path_arcs.push_back(a);
    stack.push_back({w, 0});
  }
  return {Verdict::no_detour, std::nullopt};
}

std::optional<PathPair> special_pair_trial(const PlaneGraph& h, const FaceSet& fs, FaceId outer,
                                           VertexId x, VertexId y, VertexId t, int k,
                                           const std::vector<char>& green, Side side) {
  (void)k;
  if (!green[x]) return std::nullopt;  // the prefix starts at x
  for (VertexId split = 0; split < h.vertex_count(); ++split) {
    if (split == x || split == y || split == t || !green[split]) continue;
    auto prefix = extremal_path(h, fs, outer, x, split, side, &green);
    if (!prefix) continue;
    bool hits_boundary = false;
    for (std::size_t i = 1; i < prefix->vertices.size(); ++i)
      hits_boundary |= prefix->vertices[i] == y;
    if (hits_boundary) continue;

    CutResult cut = cut_along_path(h, fs, outer, *prefix);
    auto resimp = simplify_outer(cut.graph, cut.faces, cut.outer, /*u=*/y, /*v=*/split);
    std::vector<char> clear_of_copies(resimp.graph.vertex_count(), 1);
    for (VertexId z : cut.new_boundary) clear_of_copies[z] = 0;
    auto cont = extremal_path(resimp.graph, resimp.faces, resimp.outer, split, y, side,
                              &clear_of_copies);
    if (!cont) continue;
    for (ArcId a : cont->arcs)
      if (a >= h.arc_count())
        throw std::logic_error("continuation used a surgery arc despite avoiding the copies");

    GroundedPath mid = concat_paths(*prefix, *cont);
    if (!path_vertices_distinct(mid.vertices)) continue;
    bool crosses_t = false;
    for (std::size_t i = 0; i + 1 < mid.vertices.size(); ++i) crosses_t |= mid.vertices[i] == t;
    if (crosses_t) continue;

    std::vector<char> removed(h.vertex_count(), 0);
    for (VertexId v : mid.vertices) removed[v] = 1;
    removed[y] = 0;
    auto tail = reachable_path(h, y, t, removed);
    if (!tail) continue;
    return PathPair{mid, *tail};
  }
  return std::nullopt;
}

LongDetourResult long_detour(const PlaneGraph& g, VertexId s, VertexId t, int k,
                             const LongDetourOptions& options) {
  if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
    fail(Errc::bad_argument, "terminal out of range");
  if (k < 1) fail(Errc::bad_argument, "k must be positive");
  if (options.delta <= 0.0 || options.delta >= 1.0)
    fail(Errc::bad_argument, "delta must lie in (0, 1)");
  if (s == t) return {Verdict::s_equals_t, std::nullopt, false};

  const BfsLayers layers = bfs_layers(g, s);
  if (layers.layer_of[t] == kNoLayer) return {Verdict::t_unreachable, std::nullopt, false};
  const int dist_st = layers.layer_of[t];
  const VertexId n = g.vertex_count();

  Deadline deadline;
  if (options.budget_ms)
    deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(*options.budget_ms);

  if (dist_st + k > n - 1) return {Verdict::no_detour, std::nullopt, false};

  auto band = exact_band_check(g, s, t, k, deadline);
  if (band.verdict == Verdict::found) return {Verdict::found, band.witness, true};
  if (band.verdict == Verdict::timeout) return {Verdict::timeout, std::nullopt, false};

  // beyond the band every witness needs a mid path of length >= 2k
  if (2 * k >= n) return {Verdict::no_detour, std::nullopt, false};

  ColoringFamily family;
  if (options.mode == ColoringMode::universal) family = universal_family(n, 2 * k);

  std::atomic<bool> timed_out{false};
  auto expired = [&] {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      timed_out.store(true, std::memory_order_relaxed);
      return true;
    }
    return timed_out.load(std::memory_order_relaxed);
  };

  for (int p = 1; p <= dist_st; ++p) {
    if (expired()) return {Verdict::timeout, std::nullopt, false};
    LayeredSubgraph sub = layered_subgraph(g, layers, p, t);
    FaceSet faces_sub = trace_faces(sub.graph);
    std::vector<VertexId> layer_sub;
    for (VertexId v : layers.layers[p])
      if (sub.from_original[v] != kNoVertex) layer_sub.push_back(sub.from_original[v]);
    if (layer_sub.size() < 2) continue;
    auto carrier = face_containing_all(sub.graph, faces_sub, layer_sub);
    if (!carrier) throw std::logic_error("surviving layer left the common face");
    const VertexId t_sub = sub.from_original[t];

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId x : layer_sub)
      for (VertexId y : layer_sub) {
        if (x == y || x == t_sub) continue;  // a mid path from t would revisit it
        pairs.emplace_back(x, y);
      }

    auto try_pair = [&](const std::pair<VertexId, VertexId>& xy) -> std::optional<DetourWitness> {
      const auto [x, y] = xy;
      if (expired()) return std::nullopt;
      auto simp = simplify_outer(sub.graph, faces_sub, *carrier, /*u=*/y, /*v=*/x);

      auto finish = [&](const PathPair& pair) -> std::optional<DetourWitness> {
        const VertexId x_orig = sub.to_original[pair.mid.vertices.front()];
        std::vector<VertexId> path = layers.path_from_source(x_orig);
        for (std::size_t i = 1; i < pair.mid.vertices.size(); ++i)
          path.push_back(sub.to_original[pair.mid.vertices[i]]);
        for (std::size_t i = 1; i < pair.tail.vertices.size(); ++i)
          path.push_back(sub.to_original[pair.tail.vertices[i]]);
        DetourWitness witness{path, static_cast<int>(path.size()) - 1, dist_st};
        if (!verify_witness(g, s, t, k, path).ok) return std::nullopt;
        return witness;
      };

      if (k == 1) {
        // the good split vertex for k = 1 is x itself: no cut, no colours
        for (Side side : {Side::left, Side::right}) {
          auto cand = one_face_candidate(simp.graph, simp.faces, simp.outer, x, y, t_sub, side,
                                         simp.f1, simp.f2);
          if (cand)
            if (auto w = finish(*cand)) return w;
        }
      }

      auto run_trial = [&](const std::vector<char>& green) -> std::optional<DetourWitness> {
        for (Side side : {Side::left, Side::right}) {
          auto pair = special_pair_trial(simp.graph, simp.faces, simp.outer, x, y, t_sub, k,
                                         green, side);
          if (pair)
            if (auto w = finish(*pair)) return w;
        }
        return std::nullopt;
      };

      if (options.mode == ColoringMode::universal) {
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i < family.size(); ++i) {
          if ((i & 63) == 0 && expired()) return std::nullopt;
          std::vector<char> green(simp.graph.vertex_count(), 0);
          for (VertexId v = 0; v < simp.graph.vertex_count(); ++v)
            green[v] = family.contains(i, sub.to_original[v]);
          std::string key(green.begin(), green.end());
          if (!seen.insert(std::move(key)).second) continue;
          if (auto w = run_trial(green)) return w;
        }
      } else {
        const VertexId x_orig = sub.to_original[x];
        const VertexId y_orig = sub.to_original[y];
        std::mt19937_64 rng(splitmix64(
            splitmix64(splitmix64(options.seed ^ static_cast<std::uint64_t>(p)) ^
                       static_cast<std::uint64_t>(x_orig)) ^
            static_cast<std::uint64_t>(y_orig)));
        const double rounds = std::ceil(std::pow(4.0, k) * std::log(1.0 / options.delta));
        const std::uint64_t repeats = rounds < 1.0 ? 1 : static_cast<std::uint64_t>(rounds);
        for (std::uint64_t r = 0; r < repeats; ++r) {
          if ((r & 63) == 0 && expired()) return std::nullopt;
          std::vector<char> green(simp.graph.vertex_count(), 0);
          for (VertexId v = 0; v < simp.graph.vertex_count(); ++v)
            green[v] = static_cast<char>(rng() & 1u);
          if (auto w = run_trial(green)) return w;
        }
      }
      return std::nullopt;
    };

    auto witness = detail::parallel_first(pairs, options.jobs, try_pair);
    if (witness) return {Verdict::found, witness, false};
    if (timed_out.load()) return {Verdict::timeout, std::nullopt, false};
  }
  return {Verdict::no_detour, std::nullopt, false};
}

}  // namespace pdg
