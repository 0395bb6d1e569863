// Copyright 2026 The dqcc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dqcc/hypergraph.hpp"

#include <atomic>
#include <cstdlib>
#include <deque>
#include <map>
#include <ostream>
#include <thread>

#include "dqcc/errors.hpp"

namespace dqcc {

Hypergraph build_hypergraph(const PackingResult& r) {
  Hypergraph h;
  h.n = r.n;
  std::map<std::vector<int>, long> folded;
  for (const GatePacket& p : r.packets) ++folded[p.sub_register];
  h.edges.reserve(folded.size());
  for (auto& [pins, weight] : folded) h.edges.push_back({pins, weight});
  return h;
}

long connectivity_cost(const Hypergraph& h, const std::vector<int>& part) {
  long cost = 0;
  std::vector<char> seen;
  for (const Hyperedge& e : h.edges) {
    seen.assign(seen.size(), 0);
    int spanned = 0;
    for (int v : e.pins) {
      const int p = part[v];
      if (p >= static_cast<int>(seen.size())) seen.resize(p + 1, 0);
      if (!seen[p]) {
        seen[p] = 1;
        ++spanned;
      }
    }
    cost += e.weight * (spanned - 1);
  }
  return cost;
}

namespace {

int thread_count() {
  if (const char* env = std::getenv("DQC_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

struct Instance {
  const Hypergraph& h;
  int k;
  int cap;
  std::vector<std::vector<int>> incident;  // vertex -> edge ids

  Instance(const Hypergraph& hg, int kk, int capacity) : h(hg), k(kk), cap(capacity) {
    incident.resize(h.n);
    for (std::size_t e = 0; e < h.edges.size(); ++e)
      for (int v : h.edges[e].pins) incident[v].push_back(static_cast<int>(e));
  }
};

// Region growth: fill the parts one after another from random seeds,
// preferring vertices already reachable through an edge.
std::vector<int> grow_seed(const Instance& in, SplitMix64& rng) {
  const int n = in.h.n;
  std::vector<int> part(n, -1);
  std::vector<int> unassigned(n);
  for (int i = 0; i < n; ++i) unassigned[i] = i;
  auto take_random = [&]() {
    const std::size_t at = rng.uniform_int(unassigned.size());
    const int v = unassigned[at];
    return v;
  };
  auto remove_vertex = [&](int v) {
    for (std::size_t i = 0; i < unassigned.size(); ++i)
      if (unassigned[i] == v) {
        unassigned.erase(unassigned.begin() + i);
        return;
      }
  };

  for (int p = 0; p < in.k && !unassigned.empty(); ++p) {
    int want = n / in.k + (p < n % in.k ? 1 : 0);
    want = std::min(want, in.cap);
    std::deque<int> frontier;
    int size = 0;
    while (size < want && !unassigned.empty()) {
      int v = -1;
      while (!frontier.empty() && part[frontier.front()] != -1)
        frontier.pop_front();
      if (!frontier.empty()) {
        v = frontier.front();
        frontier.pop_front();
      } else {
        v = take_random();
      }
      part[v] = p;
      remove_vertex(v);
      ++size;
      for (int e : in.incident[v])
        for (int u : in.h.edges[e].pins)
          if (part[u] == -1) frontier.push_back(u);
    }
  }
  // Leftovers (possible when capacities force uneven growth) go to the
  // emptiest part with room.
  std::vector<int> sizes(in.k, 0);
  for (int v = 0; v < n; ++v)
    if (part[v] >= 0) ++sizes[part[v]];
  for (int v = 0; v < n; ++v) {
    if (part[v] != -1) continue;
    int best = -1;
    for (int p = 0; p < in.k; ++p)
      if (sizes[p] < in.cap && (best == -1 || sizes[p] < sizes[best])) best = p;
    part[v] = best;
    ++sizes[best];
  }
  return part;
}

// Pass-based refinement: every vertex moves at most once per pass, negative
// moves are allowed to climb out of local minima, and the pass rolls back
// to the best state it saw.
void refine(const Instance& in, std::vector<int>& part, int passes) {
  const int n = in.h.n;
  const auto& edges = in.h.edges;
  std::vector<std::vector<int>> cnt(edges.size(), std::vector<int>(in.k, 0));
  auto rebuild_counts = [&]() {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::fill(cnt[e].begin(), cnt[e].end(), 0);
      for (int v : edges[e].pins) ++cnt[e][part[v]];
    }
  };
  std::vector<int> sizes(in.k, 0);
  auto rebuild_sizes = [&]() {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int v = 0; v < n; ++v) ++sizes[part[v]];
  };

  auto gain_of = [&](int v, int to) {
    const int from = part[v];
    long gain = 0;
    for (int e : in.incident[v]) {
      const int c_from = cnt[e][from];
      const int c_to = cnt[e][to];
      if (c_from == 1 && c_to >= 1)
        gain += edges[e].weight;
      else if (c_from > 1 && c_to == 0)
        gain -= edges[e].weight;
    }
    return gain;
  };

  long cur = connectivity_cost(in.h, part);
  for (int pass = 0; pass < passes; ++pass) {
    rebuild_counts();
    rebuild_sizes();
    std::vector<char> locked(n, 0);
    std::vector<int> best_part = part;
    long best_cost = cur;
    const long pass_start = cur;
    for (int step = 0; step < n; ++step) {
      long top_gain = 0;
      int top_v = -1, top_to = -1;
      for (int v = 0; v < n; ++v) {
        if (locked[v]) continue;
        for (int to = 0; to < in.k; ++to) {
          if (to == part[v] || sizes[to] >= in.cap) continue;
          const long g = gain_of(v, to);
          if (top_v == -1 || g > top_gain) {
            top_gain = g;
            top_v = v;
            top_to = to;
          }
        }
      }
      if (top_v == -1) break;
      const int from = part[top_v];
      part[top_v] = top_to;
      locked[top_v] = 1;
      --sizes[from];
      ++sizes[top_to];
      for (int e : in.incident[top_v]) {
        --cnt[e][from];
        ++cnt[e][top_to];
      }
      cur -= top_gain;
      if (cur < best_cost) {
        best_cost = cur;
        best_part = part;
      }
    }
    part = best_part;
    cur = best_cost;
    if (cur >= pass_start) break;  // no strict improvement, stable
  }
}

}  // namespace

std::vector<int> partition(const Hypergraph& h, const PartitionOptions& opts) {
  const int n = h.n;
  const int cap = opts.capacity < 0 ? n / opts.k + 1 : opts.capacity;
  if (opts.k < 1) throw InfeasibleError("need at least one part");
  if (static_cast<long>(opts.k) * cap < n)
    throw InfeasibleError("capacity " + std::to_string(cap) + " times " +
                          std::to_string(opts.k) + " parts cannot hold " +
                          std::to_string(n) + " qubits");
  if (opts.k == 1 || n == 0) return std::vector<int>(n, 0);

  const Instance in(h, opts.k, cap);
  const int restarts = std::max(1, opts.restarts);
  std::vector<std::vector<int>> results(restarts);
  std::vector<long> costs(restarts);
  SplitMix64 base(opts.seed);

  auto run_one = [&](int r) {
    SplitMix64 rng = base.derive(static_cast<std::uint64_t>(r));
    std::vector<int> part = grow_seed(in, rng);
    refine(in, part, opts.passes);
    costs[r] = connectivity_cost(h, part);
    results[r] = std::move(part);
  };

  const int workers = std::min(thread_count(), restarts);
  if (workers <= 1) {
    for (int r = 0; r < restarts; ++r) run_one(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (int r = next.fetch_add(1); r < restarts; r = next.fetch_add(1))
          run_one(r);
      });
    for (std::thread& t : pool) t.join();
  }

  // Deterministic reduce: lowest cost, then lowest restart index, so the
  // outcome does not depend on the number of workers.
  int best = 0;
  for (int r = 1; r < restarts; ++r)
    if (costs[r] < costs[best]) best = r;
  return results[best];
}

void write_hmetis(const Hypergraph& h, std::ostream& out) {
  out << h.edges.size() << ' ' << h.n << " 1\n";
  for (const Hyperedge& e : h.edges) {
    out << e.weight;
    for (int v : e.pins) out << ' ' << v + 1;
    out << '\n';
  }
}

}  // namespace dqcc
