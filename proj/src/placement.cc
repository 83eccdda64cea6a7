// Copyright 2026 The fleetplan Authors.
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

#include "fleetplan/placement.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "fleetplan/error.h"
#include "fleetplan/random.h"
#include "parallel.h"

namespace fleetplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<char> MemberMask(int n, std::span<const int> members) {
  std::vector<char> mask(n, 0);
  for (int m : members) {
    if (m < 0 || m >= n) throw InputError("group member out of range");
    mask[m] = 1;
  }
  return mask;
}

// Lexicographic order on ascending index lists; used to break exact ties.
bool LexLess(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

GroupCoverageEvaluator::GroupCoverageEvaluator(const Network& network,
                                               const ODMatrix& od,
                                               WeightMode mode, int workers)
    : network_(&network), mode_(mode), workers_(std::max(1, workers)) {
  if (od.empty()) throw InputError("group betweenness needs a nonempty OD");
  const auto rows = od.rows();
  dags_.resize(rows.size());
  internal::ParallelFor(static_cast<int>(rows.size()), workers_, [&](int r) {
    const PathCensus c = ShortestPathCensusAt(network, rows[r].origin, mode);
    OriginDag& dag = dags_[r];
    dag.source = c.source;
    dag.nodes = c.order;
    std::vector<int> position(network.num_nodes(), -1);
    for (size_t p = 0; p < dag.nodes.size(); ++p) {
      position[dag.nodes[p]] = static_cast<int>(p);
    }
    dag.pred_offsets.assign(1, 0);
    for (int v : dag.nodes) {
      for (int e : c.pred_links[v]) dag.preds.push_back(position[network.tail(e)]);
      dag.pred_offsets.push_back(static_cast<int>(dag.preds.size()));
      dag.sigma.push_back(c.sigma[v]);
    }
    for (const auto& [t, trips] : rows[r].targets) {
      if (position[t] >= 0) dag.targets.emplace_back(position[t], trips);
    }
  });
  // Nested in the same order as Value() so that a fully covering group
  // reproduces the total bit for bit.
  for (const ODMatrix::Row& row : rows) {
    double row_total = 0.0;
    for (const auto& target : row.targets) row_total += target.second * 1.0;
    total_demand_ += row_total;
  }
}

double GroupCoverageEvaluator::OriginValue(const OriginDag& dag,
                                           const std::vector<char>& member,
                                           std::vector<double>& avoid) const {
  const int size = static_cast<int>(dag.nodes.size());
  avoid.assign(size, 0.0);
  for (int p = 0; p < size; ++p) {
    if (member[dag.nodes[p]]) continue;
    if (p == 0) {
      avoid[p] = 1.0;
      continue;
    }
    double sum = 0.0;
    for (int i = dag.pred_offsets[p]; i < dag.pred_offsets[p + 1]; ++i) {
      sum += avoid[dag.preds[i]];
    }
    avoid[p] = sum;
  }
  double value = 0.0;
  for (const auto& [pos, trips] : dag.targets) {
    value += trips * (1.0 - avoid[pos] / dag.sigma[pos]);
  }
  return value;
}

double GroupCoverageEvaluator::Value(std::span<const int> members) const {
  const std::vector<char> member = MemberMask(num_nodes(), members);
  const int origins = static_cast<int>(dags_.size());
  std::vector<double> per_origin(origins, 0.0);
  if (workers_ > 1 && origins >= 4 * workers_) {
    internal::ParallelFor(origins, workers_, [&](int r) {
      std::vector<double> avoid;
      per_origin[r] = OriginValue(dags_[r], member, avoid);
    });
  } else {
    std::vector<double> avoid;
    for (int r = 0; r < origins; ++r) {
      per_origin[r] = OriginValue(dags_[r], member, avoid);
    }
  }
  double total = 0.0;
  for (double v : per_origin) total += v;
  return total;
}

std::vector<double> GroupCoverageEvaluator::MarginalGains(
    std::span<const int> members) const {
  const int n = num_nodes();
  const std::vector<char> member = MemberMask(n, members);
  std::vector<double> gains(n, 0.0);
  std::vector<double> forward, backward, target_weight;
  for (const OriginDag& dag : dags_) {
    const int size = static_cast<int>(dag.nodes.size());
    OriginValue(dag, member, forward);
    target_weight.assign(size, 0.0);
    for (const auto& [pos, trips] : dag.targets) {
      target_weight[pos] = trips / dag.sigma[pos];
    }
    // backward[p]: OD-weighted count of member-avoiding paths from p to any
    // target, each path scaled by 1 / sigma of its target.
    backward.assign(size, 0.0);
    for (int p = size - 1; p >= 0; --p) {
      if (member[dag.nodes[p]]) {
        backward[p] = 0.0;
        continue;
      }
      backward[p] += target_weight[p];
      gains[dag.nodes[p]] += forward[p] * backward[p];
      for (int i = dag.pred_offsets[p]; i < dag.pred_offsets[p + 1]; ++i) {
        backward[dag.preds[i]] += backward[p];
      }
    }
  }
  return gains;
}

MonitorGroup MakeMonitorGroup(const GroupCoverageEvaluator& evaluator,
                              std::vector<int> member_indices) {
  std::sort(member_indices.begin(), member_indices.end());
  member_indices.erase(
      std::unique(member_indices.begin(), member_indices.end()),
      member_indices.end());
  MonitorGroup g;
  g.gbc_value = evaluator.Value(member_indices);
  for (int v : member_indices) g.members.push_back(evaluator.network().id(v));
  g.coverage_fraction =
      evaluator.total_demand() > 0.0
          ? std::clamp(g.gbc_value / evaluator.total_demand(), 0.0, 1.0)
          : 0.0;
  return g;
}

double GroupBetweenness(const Network& network, const ODMatrix& od,
                        std::span<const NodeId> group, WeightMode mode) {
  if (od.empty()) return 0.0;
  const GroupCoverageEvaluator evaluator(network, od, mode);
  std::vector<int> members;
  for (NodeId id : group) members.push_back(network.IndexOf(id));
  return evaluator.Value(members);
}

std::vector<GreedyStep> GreedyPlacement(const GroupCoverageEvaluator& evaluator,
                                        int k, bool lazy) {
  const int n = evaluator.num_nodes();
  if (k < 1 || k > n) {
    throw InputError("k must lie in [1, " + std::to_string(n) + "]");
  }
  // Slack on stale (upper-bound) gains: a stale entry is skipped only if it
  // is below the best fresh gain by more than any rounding could explain.
  const double slack = 1e-9 * std::max(1.0, evaluator.total_demand());

  std::vector<int> chosen;
  std::vector<char> taken(n, 0);
  std::vector<GreedyStep> steps;
  double current = 0.0;

  struct Entry {
    double gain;
    int node;
    int round;
  };
  const auto heap_less = [](const Entry& a, const Entry& b) {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.node > b.node;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(heap_less)> heap(
      heap_less);
  if (lazy) {
    for (int v = 0; v < n; ++v) heap.push({kInf, v, -1});
  }

  for (int round = 0; round < k; ++round) {
    int best = -1;
    double best_gain = -kInf;
    const auto consider = [&](int v, double gain) {
      if (best < 0 || gain > best_gain || (gain == best_gain && v < best)) {
        best = v;
        best_gain = gain;
      }
    };
    std::vector<int> scratch = chosen;
    scratch.push_back(0);
    const auto exact_gain = [&](int v) {
      scratch.back() = v;
      return evaluator.Value(scratch) - current;
    };

    if (!lazy) {
      for (int v = 0; v < n; ++v) {
        if (!taken[v]) consider(v, exact_gain(v));
      }
    } else {
      std::vector<Entry> fresh;
      while (!heap.empty()) {
        const Entry top = heap.top();
        if (best >= 0 && top.gain + slack < best_gain) break;
        heap.pop();
        Entry e = top;
        if (e.round != round) {
          e.gain = exact_gain(e.node);
          e.round = round;
        }
        fresh.push_back(e);
        consider(e.node, e.gain);
      }
      for (const Entry& e : fresh) {
        if (e.node != best) heap.push(e);
      }
    }

    taken[best] = 1;
    chosen.push_back(best);
    current = evaluator.Value(chosen);
    steps.push_back({evaluator.network().id(best), best_gain, current});
  }
  return steps;
}

std::vector<GreedyStep> GreedyPlacement(const Network& network,
                                        const ODMatrix& od, int k,
                                        WeightMode mode) {
  const GroupCoverageEvaluator evaluator(network, od, mode);
  return GreedyPlacement(evaluator, k);
}

std::string ToString(SearchAlgorithm algorithm) {
  return algorithm == SearchAlgorithm::kDfbnb ? "dfbnb" : "potential";
}

SearchResult ExactPlacement(const GroupCoverageEvaluator& evaluator, int k,
                            SearchAlgorithm algorithm, double time_budget_s) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const int n = evaluator.num_nodes();
  if (k < 1 || k > n) {
    throw InputError("k must lie in [1, " + std::to_string(n) + "]");
  }
  if (!(time_budget_s > 0.0)) throw InputError("time budget must be > 0");
  const auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };

  SearchResult result;
  result.algorithm = algorithm;

  // Candidates: nonzero singleton value, by descending value then index.
  std::vector<std::pair<double, int>> singles;
  for (int v = 0; v < n; ++v) {
    const int one[] = {v};
    const double value = evaluator.Value(one);
    if (value > 0.0) singles.emplace_back(value, v);
  }
  std::sort(singles.begin(), singles.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<int> cand;
  for (const auto& s : singles) cand.push_back(s.second);
  const int num_cand = static_cast<int>(cand.size());

  if (num_cand <= k) {
    // Every candidate fits; pad with the lowest-index zero-value nodes.
    std::vector<int> group = cand;
    std::vector<char> in(n, 0);
    for (int v : cand) in[v] = 1;
    for (int v = 0; v < n && static_cast<int>(group.size()) < k; ++v) {
      if (!in[v]) group.push_back(v);
    }
    result.group = MakeMonitorGroup(evaluator, group);
    result.upper_bound = result.group.gbc_value;
    result.completed = true;
    result.certificate = 1.0;
    result.elapsed_s = elapsed();
    return result;
  }

  // Incumbent from greedy.
  std::vector<int> best_members;
  for (const GreedyStep& s : GreedyPlacement(evaluator, k)) {
    best_members.push_back(evaluator.network().IndexOf(s.node));
  }
  std::sort(best_members.begin(), best_members.end());
  double best_value = evaluator.Value(best_members);
  const double tol = 1e-12 * std::max(1.0, evaluator.total_demand());

  const auto consider = [&](std::vector<int> members, double value) {
    std::sort(members.begin(), members.end());
    if (value > best_value ||
        (value == best_value && LexLess(members, best_members))) {
      best_value = value;
      best_members = std::move(members);
    }
  };

  struct Node {
    std::vector<int> members;  // in candidate order
    int next = 0;              // next candidate position to decide
    double value = 0.0;
    double bound = 0.0;        // admissible; exact when `exact`
    bool exact = false;
    std::int64_t seq = 0;
  };
  // Value + sum of the `slots` largest gains among cand[from..].
  std::vector<double> top;
  const auto bound_of = [&](double value, const std::vector<double>& gains,
                            int from, int slots) {
    top.clear();
    for (int i = from; i < num_cand; ++i) {
      top.push_back(std::max(0.0, gains[cand[i]]));
    }
    slots = std::min<int>(slots, static_cast<int>(top.size()));
    std::partial_sort(top.begin(), top.begin() + slots, top.end(),
                      std::greater<double>());
    double b = value;
    for (int i = 0; i < slots; ++i) b += top[i];
    return b;
  };
  const auto feasible = [&](const Node& node) {
    return num_cand - node.next >= k - static_cast<int>(node.members.size());
  };

  std::int64_t seq = 0;
  Node root;
  root.bound = kInf;
  const auto heap_less = [](const Node& a, const Node& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.members.size() != b.members.size()) {
      return a.members.size() < b.members.size();
    }
    return a.seq > b.seq;
  };
  std::vector<Node> open;  // stack (DFBnB) or heap (potential)
  const bool best_first = algorithm == SearchAlgorithm::kPotential;
  const auto push = [&](Node node) {
    node.seq = seq++;
    open.push_back(std::move(node));
    if (best_first) std::push_heap(open.begin(), open.end(), heap_less);
  };
  const auto pop = [&] {
    if (best_first) std::pop_heap(open.begin(), open.end(), heap_less);
    Node node = std::move(open.back());
    open.pop_back();
    return node;
  };
  push(std::move(root));

  bool timed_out = false;
  double open_bound = 0.0;  // upper bound over unexplored nodes on timeout
  while (!open.empty()) {
    if (elapsed() > time_budget_s) {
      timed_out = true;
      for (const Node& node : open) open_bound = std::max(open_bound, node.bound);
      break;
    }
    Node node = pop();
    if (node.bound <= best_value + tol) {
      if (best_first) break;  // every remaining bound is at most this one
      continue;
    }
    ++result.expansions;
    const std::vector<double> gains = evaluator.MarginalGains(node.members);
    const int slots = k - static_cast<int>(node.members.size());
    if (!node.exact) {
      node.bound = bound_of(node.value, gains, node.next, slots);
      node.exact = true;
      if (node.bound <= best_value + tol) continue;
      if (best_first) {
        push(std::move(node));
        continue;
      }
    }

    const int x = cand[node.next];
    Node include;
    include.members = node.members;
    include.members.push_back(x);
    include.next = node.next + 1;
    include.value = evaluator.Value(include.members);
    include.bound = node.bound;

    Node exclude;
    exclude.members = node.members;
    exclude.next = node.next + 1;
    exclude.value = node.value;
    exclude.bound = bound_of(node.value, gains, exclude.next, slots);
    exclude.exact = true;

    if (feasible(exclude) && exclude.bound > best_value + tol) {
      push(std::move(exclude));
    }
    if (static_cast<int>(include.members.size()) == k) {
      consider(include.members, include.value);
    } else if (feasible(include)) {
      push(std::move(include));
    }
  }

  result.group = MakeMonitorGroup(evaluator, best_members);
  result.completed = !timed_out;
  result.upper_bound = timed_out ? std::max(best_value, open_bound) : best_value;
  result.certificate =
      result.upper_bound > 0.0 ? best_value / result.upper_bound : 1.0;
  if (result.completed) result.certificate = 1.0;
  result.elapsed_s = elapsed();
  return result;
}

RandomBaselineResult RandomPlacement(const GroupCoverageEvaluator& evaluator,
                                     int k, std::uint64_t seed,
                                     int repetitions) {
  const int n = evaluator.num_nodes();
  if (k < 1 || k > n) {
    throw InputError("k must lie in [1, " + std::to_string(n) + "]");
  }
  if (repetitions < 1) throw InputError("repetitions must be >= 1");
  RandomBaselineResult out;
  out.seed = seed;
  std::vector<int> perm(n);
  for (int r = 0; r < repetitions; ++r) {
    SplitMix64 rng = SplitMix64::Stream(seed, static_cast<std::uint64_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(rng.Below(n - i));
      std::swap(perm[i], perm[j]);
    }
    out.values.push_back(
        evaluator.Value(std::span<const int>(perm.data(), k)));
  }
  double sum = 0.0;
  for (double v : out.values) sum += v;
  out.mean_value = sum / repetitions;
  out.mean_coverage = evaluator.total_demand() > 0.0
                          ? out.mean_value / evaluator.total_demand()
                          : 0.0;
  return out;
}

std::vector<int> RankByScore(const CentralityScores& scores) {
  std::vector<int> order(scores.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return scores.scores[a] > scores.scores[b];
  });
  return order;
}

namespace {

CentralityScores RankingScores(const GroupCoverageEvaluator& evaluator,
                               const ODMatrix& od, WeightMode mode,
                               std::optional<double> alpha) {
  return alpha ? BlendedBetweenness(evaluator.network(), &od, *alpha)
               : Betweenness(evaluator.network(), mode, &od);
}

}  // namespace

MonitorGroup TopBetweennessPlacement(const GroupCoverageEvaluator& evaluator,
                                     const ODMatrix& od, int k,
                                     WeightMode mode,
                                     std::optional<double> alpha) {
  const int n = evaluator.num_nodes();
  if (k < 1 || k > n) {
    throw InputError("k must lie in [1, " + std::to_string(n) + "]");
  }
  std::vector<int> ranking =
      RankByScore(RankingScores(evaluator, od, mode, alpha));
  ranking.resize(k);
  return MakeMonitorGroup(evaluator, ranking);
}

std::string ToString(CurveScheme scheme) {
  switch (scheme) {
    case CurveScheme::kGbcGreedy:
      return "gbc_greedy";
    case CurveScheme::kBcTopK:
      return "bc_topk";
    case CurveScheme::kRandom:
      return "random";
  }
  return "?";
}

CurveScheme ParseCurveScheme(const std::string& text) {
  if (text == "gbc_greedy" || text == "greedy") return CurveScheme::kGbcGreedy;
  if (text == "bc_topk" || text == "bctopk") return CurveScheme::kBcTopK;
  if (text == "random") return CurveScheme::kRandom;
  throw InputError("unknown scheme '" + text +
                   "' (gbc_greedy|bc_topk|random)");
}

CoverageCurve BuildCoverageCurve(const GroupCoverageEvaluator& evaluator,
                                 const ODMatrix& od, CurveScheme scheme,
                                 int k_max, const CurveConfig& config) {
  const int n = evaluator.num_nodes();
  if (k_max < 1 || k_max > n) {
    throw InputError("k_max must lie in [1, " + std::to_string(n) + "]");
  }
  const double total = evaluator.total_demand();
  const auto fraction = [&](double value) {
    return total > 0.0 ? std::clamp(value / total, 0.0, 1.0) : 0.0;
  };
  CoverageCurve curve;
  curve.scheme = scheme;
  switch (scheme) {
    case CurveScheme::kGbcGreedy: {
      const auto steps = GreedyPlacement(evaluator, k_max);
      for (int i = 0; i < k_max; ++i) {
        curve.points.push_back({i + 1, fraction(steps[i].cumulative)});
      }
      break;
    }
    case CurveScheme::kBcTopK: {
      const std::vector<int> ranking = RankByScore(
          RankingScores(evaluator, od, config.bc_mode, config.alpha));
      for (int i = 1; i <= k_max; ++i) {
        curve.points.push_back(
            {i, fraction(evaluator.Value(
                    std::span<const int>(ranking.data(), i)))});
      }
      break;
    }
    case CurveScheme::kRandom: {
      if (config.repetitions < 1) throw InputError("repetitions must be >= 1");
      std::vector<double> sums(k_max, 0.0);
      std::vector<int> perm(n);
      for (int r = 0; r < config.repetitions; ++r) {
        SplitMix64 rng =
            SplitMix64::Stream(config.seed, static_cast<std::uint64_t>(r));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = 0; i < k_max; ++i) {
          const int j = i + static_cast<int>(rng.Below(n - i));
          std::swap(perm[i], perm[j]);
        }
        for (int i = 1; i <= k_max; ++i) {
          sums[i - 1] += fraction(
              evaluator.Value(std::span<const int>(perm.data(), i)));
        }
      }
      for (int i = 1; i <= k_max; ++i) {
        curve.points.push_back({i, sums[i - 1] / config.repetitions});
      }
      break;
    }
  }
  return curve;
}

}  // namespace fleetplan
