#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "specpart/bisect.hpp"
#include "specpart/family.hpp"
#include "specpart/graph.hpp"

namespace specpart {

inline constexpr std::size_t kOracleMaxOrder = 28;
inline constexpr std::size_t kSweepMaxZeros = 20;

struct OracleResult {
  std::size_t best_cut = 0;
  VertexSet best_set{0, {}};
  std::uint64_t enumerated = 0;
};

struct SweepRange {
  std::size_t min_cut = 0;
  std::size_t max_cut = 0;
  std::uint64_t assignments = 0;
};

namespace detail {

// Next bitmask with the same popcount (Gosper's hack).
inline std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

struct ChunkBest {
  std::size_t cut = std::numeric_limits<std::size_t>::max();
  std::uint64_t mask = 0;
  std::uint64_t count = 0;
};

// All h-subsets of [0,n) whose highest member is `top`. In increasing
// bitmask order these form one contiguous run.
inline ChunkBest scan_chunk(const std::vector<std::uint32_t>& adj, std::size_t h, std::size_t top) {
  ChunkBest best;
  const std::uint64_t full = (std::uint64_t{1} << adj.size()) - 1;
  std::uint64_t x = ((std::uint64_t{1} << (h - 1)) - 1) | (std::uint64_t{1} << top);
  while ((x >> (top + 1)) == 0) {
    const std::uint64_t outside = ~x & full;
    std::size_t cut = 0;
    for (std::uint64_t s = x; s != 0; s &= s - 1)
      cut += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(s)] & outside));
    ++best.count;
    if (cut < best.cut) {
      best.cut = cut;
      best.mask = x;
    }
    x = next_combination(x);
  }
  return best;
}

}  // namespace detail

/// Exact minimum bisection by exhaustive enumeration of all floor(n/2)-subsets.
///
/// Subsets are ranked by their bitmask; among optimal subsets the least
/// bitmask is returned. Work is split by the subset's highest member and
/// merged in that fixed order, so the result does not depend on `threads`.
inline OracleResult optimal_bisection(const Graph& g, unsigned threads = 0) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidArgument("optimal bisection needs at least two vertices");
  if (n > kOracleMaxOrder)
    throw InvalidArgument("optimal bisection enumerates at most " + std::to_string(kOracleMaxOrder) +
                          " vertices; got " + std::to_string(n));
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  const std::size_t h = n / 2;
  const std::size_t chunks = n - h + 1;  // top member ranges over [h-1, n-1]
  std::vector<detail::ChunkBest> results(chunks);

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  // Largest chunks (highest top member) are handed out first.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chunks; i = next++) {
      const std::size_t top = n - 1 - i;
      results[top - (h - 1)] = detail::scan_chunk(adj, h, top);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  detail::ChunkBest best;
  for (const auto& r : results) {
    best.count += r.count;
    if (r.cut < best.cut) {  // chunks are in increasing mask order
      best.cut = r.cut;
      best.mask = r.mask;
    }
  }
  return {best.cut, VertexSet::from_mask(n, best.mask), best.count};
}

/// Min and max cut over every way of completing i_+ with zero-set vertices
/// to a side of size floor(n/2).
inline SweepRange zero_assignment_sweep(const Graph& g, const SignPartition& p) {
  const std::size_t n = g.order();
  if (p.source.size() != n) throw InvalidArgument("sign partition size differs from graph order");
  if (p.zero.size() > kSweepMaxZeros)
    throw InvalidArgument("zero set has " + std::to_string(p.zero.size()) + " vertices; sweep limit is " +
                          std::to_string(kSweepMaxZeros));
  detail::require_balanceable(p);
  const std::size_t need = n / 2 - p.plus.size();
  const auto& zeros = p.zero.members();

  std::vector<bool> base = p.plus.indicator();
  SweepRange out{std::numeric_limits<std::size_t>::max(), 0, 0};
  auto evaluate = [&](std::uint64_t pick) {
    std::vector<bool> in = base;
    for (std::size_t k = 0; k < zeros.size(); ++k)
      if ((pick >> k) & 1U) in[zeros[k]] = true;
    std::size_t cut = 0;
    for (const Edge& e : g.edges())
      if (in[e.u] != in[e.v]) ++cut;
    out.min_cut = std::min(out.min_cut, cut);
    out.max_cut = std::max(out.max_cut, cut);
    ++out.assignments;
  };
  if (need == 0) {
    evaluate(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << zeros.size();
  for (std::uint64_t x = (std::uint64_t{1} << need) - 1; x < limit; x = detail::next_combination(x)) evaluate(x);
  return out;
}

/// Bisection induced by the witness vector (1,-1,-1,1) (x) 1_m, zeros at
/// cone vertices, under the deterministic zero-assignment rule.
inline Bisection witness_bisection(const FamilySpec& spec) {
  const FamilyInstance inst = build_family(spec);
  return spectral_bisection(inst.graph, witness_vector(spec.m, spec.cone_count));
}

inline std::size_t witness_cut(const FamilySpec& spec) { return witness_bisection(spec).cut; }

}  // namespace specpart
