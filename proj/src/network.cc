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

#include "fleetplan/network.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "csv.h"
#include "fleetplan/error.h"

namespace fleetplan {
namespace {

const std::vector<std::string> kLinkColumns = {
    "from",          "to",           "length_km", "road_type", "free_flow_min",
    "congested_min", "capacity_vph", "toll_min",  "flow_vph"};
const std::vector<std::string> kOdColumns = {"origin", "destination",
                                             "trips_per_hour"};

// Returns an error message, or empty if the link is acceptable on its own.
std::string CheckLink(const Link& l) {
  if (l.from < 0 || l.to < 0) return "node ids must be nonnegative";
  if (l.from == l.to) return "self-loop on node " + std::to_string(l.from);
  if (!(l.free_flow_min > 0.0)) return "free_flow_min must be > 0";
  if (!(l.congested_min > 0.0)) return "congested_min must be > 0";
  if (l.length_km < 0.0) return "length_km must be >= 0";
  if (l.capacity_vph < 0.0) return "capacity_vph must be >= 0";
  if (l.toll_min < 0.0) return "toll_min must be >= 0";
  if (l.flow_vph < 0.0) return "flow_vph must be >= 0";
  return {};
}

void BuildCsr(int n, const std::vector<int>& key, std::vector<int>& offsets,
              std::vector<int>& items) {
  offsets.assign(n + 1, 0);
  for (int k : key) ++offsets[k + 1];
  for (int i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  items.assign(key.size(), 0);
  std::vector<int> fill(offsets.begin(), offsets.end() - 1);
  for (size_t e = 0; e < key.size(); ++e) {
    items[fill[key[e]]++] = static_cast<int>(e);
  }
}

}  // namespace

Network Network::Build(std::vector<NodeId> node_ids, std::vector<Link> links) {
  Network net;
  std::sort(node_ids.begin(), node_ids.end());
  if (std::adjacent_find(node_ids.begin(), node_ids.end()) != node_ids.end()) {
    throw InputError("duplicate node id");
  }
  net.ids_ = std::move(node_ids);
  net.index_.reserve(net.ids_.size());
  for (size_t i = 0; i < net.ids_.size(); ++i) {
    if (net.ids_[i] < 0) throw InputError("node ids must be nonnegative");
    net.index_.emplace(net.ids_[i], static_cast<int>(i));
  }

  std::set<std::pair<NodeId, NodeId>> seen;
  for (size_t i = 0; i < links.size(); ++i) {
    const Link& l = links[i];
    const std::string problem = CheckLink(l);
    if (!problem.empty()) {
      throw InputError("link " + std::to_string(i) + ": " + problem);
    }
    if (!net.index_.count(l.from) || !net.index_.count(l.to)) {
      throw InputError("link " + std::to_string(l.from) + "->" +
                       std::to_string(l.to) + " references an unknown node");
    }
    if (!seen.emplace(l.from, l.to).second) {
      throw InputError("duplicate link " + std::to_string(l.from) + "->" +
                       std::to_string(l.to));
    }
    if (l.congested_min < l.free_flow_min) {
      net.warnings_.push_back("link " + std::to_string(l.from) + "->" +
                              std::to_string(l.to) +
                              ": congested_min < free_flow_min");
    }
  }
  net.links_ = std::move(links);
  const int m = net.num_links();
  net.tail_.resize(m);
  net.head_.resize(m);
  for (int e = 0; e < m; ++e) {
    net.tail_[e] = net.index_.at(net.links_[e].from);
    net.head_[e] = net.index_.at(net.links_[e].to);
  }
  BuildCsr(net.num_nodes(), net.tail_, net.out_offsets_, net.out_);
  BuildCsr(net.num_nodes(), net.head_, net.in_offsets_, net.in_);
  return net;
}

Network Network::FromLinks(std::vector<Link> links) {
  std::set<NodeId> ids;
  for (const Link& l : links) {
    ids.insert(l.from);
    ids.insert(l.to);
  }
  return Build(std::vector<NodeId>(ids.begin(), ids.end()), std::move(links));
}

std::optional<int> Network::FindIndex(NodeId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Network::IndexOf(NodeId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw InputError("unknown node id " + std::to_string(id));
  }
  return it->second;
}

std::span<const int> Network::out_links(int node) const {
  return std::span<const int>(out_).subspan(
      out_offsets_[node], out_offsets_[node + 1] - out_offsets_[node]);
}

std::span<const int> Network::in_links(int node) const {
  return std::span<const int>(in_).subspan(
      in_offsets_[node], in_offsets_[node + 1] - in_offsets_[node]);
}

ODMatrix ODMatrix::Build(const Network& network, std::vector<ODEntry> entries) {
  ODMatrix od;
  std::vector<std::tuple<int, int, double>> indexed;
  indexed.reserve(entries.size());
  for (const ODEntry& e : entries) {
    if (e.origin == e.destination) {
      throw InputError("self-demand on node " + std::to_string(e.origin));
    }
    if (!(e.trips_per_hour > 0.0) || !std::isfinite(e.trips_per_hour)) {
      throw InputError("demand must be > 0 for pair " +
                       std::to_string(e.origin) + "->" +
                       std::to_string(e.destination));
    }
    indexed.emplace_back(network.IndexOf(e.origin),
                         network.IndexOf(e.destination), e.trips_per_hour);
  }
  std::sort(indexed.begin(), indexed.end());
  for (size_t i = 1; i < indexed.size(); ++i) {
    if (std::get<0>(indexed[i]) == std::get<0>(indexed[i - 1]) &&
        std::get<1>(indexed[i]) == std::get<1>(indexed[i - 1])) {
      throw InputError(
          "duplicate OD pair " +
          std::to_string(network.id(std::get<0>(indexed[i]))) + "->" +
          std::to_string(network.id(std::get<1>(indexed[i]))));
    }
  }
  for (const auto& [o, d, trips] : indexed) {
    od.entries_.push_back({network.id(o), network.id(d), trips});
    if (od.rows_.empty() || od.rows_.back().origin != o) {
      od.rows_.push_back({o, {}});
    }
    od.rows_.back().targets.emplace_back(d, trips);
    od.total_ += trips;
  }
  return od;
}

Network LoadNetwork(std::istream& in) {
  internal::CsvReader reader(in, kLinkColumns);
  std::vector<Link> links;
  std::map<std::pair<NodeId, NodeId>, int> first_line;
  while (reader.Next()) {
    Link l;
    l.from = reader.GetInt(0);
    l.to = reader.GetInt(1);
    l.length_km = reader.GetDouble(2);
    l.road_type = static_cast<int>(reader.GetInt(3));
    l.free_flow_min = reader.GetDouble(4);
    l.congested_min = reader.GetDouble(5);
    l.capacity_vph = reader.GetDouble(6);
    l.toll_min = reader.GetDouble(7);
    l.flow_vph = reader.GetDouble(8);
    const std::string problem = CheckLink(l);
    if (!problem.empty()) throw RowError(reader.line(), problem);
    const auto [it, inserted] =
        first_line.emplace(std::make_pair(l.from, l.to), reader.line());
    if (!inserted) {
      throw RowError(reader.line(),
                     "duplicate link " + std::to_string(l.from) + "->" +
                         std::to_string(l.to) + " (first on line " +
                         std::to_string(it->second) + ")");
    }
    links.push_back(l);
  }
  return Network::FromLinks(std::move(links));
}

Network LoadNetworkFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return LoadNetwork(in);
}

void WriteNetwork(const Network& network, std::ostream& out) {
  using internal::FormatDouble;
  out << "from,to,length_km,road_type,free_flow_min,congested_min,"
         "capacity_vph,toll_min,flow_vph\n";
  for (const Link& l : network.links()) {
    out << l.from << ',' << l.to << ',' << FormatDouble(l.length_km) << ','
        << l.road_type << ',' << FormatDouble(l.free_flow_min) << ','
        << FormatDouble(l.congested_min) << ',' << FormatDouble(l.capacity_vph)
        << ',' << FormatDouble(l.toll_min) << ',' << FormatDouble(l.flow_vph)
        << '\n';
  }
}

ODMatrix LoadODMatrix(std::istream& in, const Network& network) {
  internal::CsvReader reader(in, kOdColumns);
  std::vector<ODEntry> entries;
  std::map<std::pair<NodeId, NodeId>, int> first_line;
  while (reader.Next()) {
    ODEntry e;
    e.origin = reader.GetInt(0);
    e.destination = reader.GetInt(1);
    e.trips_per_hour = reader.GetDouble(2);
    if (!network.FindIndex(e.origin)) {
      throw RowError(reader.line(),
                     "unknown origin node " + std::to_string(e.origin));
    }
    if (!network.FindIndex(e.destination)) {
      throw RowError(reader.line(), "unknown destination node " +
                                        std::to_string(e.destination));
    }
    if (e.origin == e.destination) {
      throw RowError(reader.line(),
                     "self-demand on node " + std::to_string(e.origin));
    }
    if (!(e.trips_per_hour > 0.0)) {
      throw RowError(reader.line(), "trips_per_hour must be > 0");
    }
    const auto [it, inserted] = first_line.emplace(
        std::make_pair(e.origin, e.destination), reader.line());
    if (!inserted) {
      throw RowError(reader.line(), "duplicate OD pair (first on line " +
                                        std::to_string(it->second) + ")");
    }
    entries.push_back(e);
  }
  return ODMatrix::Build(network, std::move(entries));
}

ODMatrix LoadODMatrixFile(const std::string& path, const Network& network) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return LoadODMatrix(in, network);
}

NodeClassification ClassifyNodes(const Network& network, const ODMatrix& od) {
  NodeClassification out;
  out.kinds.assign(network.num_nodes(), NodeKind::kTransit);
  for (const ODEntry& e : od.entries()) {
    out.kinds[network.IndexOf(e.origin)] = NodeKind::kStub;
    out.kinds[network.IndexOf(e.destination)] = NodeKind::kStub;
  }
  out.stub_count = static_cast<int>(
      std::count(out.kinds.begin(), out.kinds.end(), NodeKind::kStub));
  out.transit_count = network.num_nodes() - out.stub_count;
  return out;
}

std::vector<std::vector<int>> StructuralEquivalenceClasses(
    const Network& network) {
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, std::vector<int>> classes;
  for (int v = 0; v < network.num_nodes(); ++v) {
    Key key;
    for (int e : network.in_links(v)) key.first.push_back(network.tail(e));
    for (int e : network.out_links(v)) key.second.push_back(network.head(e));
    std::sort(key.first.begin(), key.first.end());
    std::sort(key.second.begin(), key.second.end());
    classes[std::move(key)].push_back(v);
  }
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> BiconnectedComponents(const Network& network) {
  const int n = network.num_nodes();
  std::vector<std::vector<int>> adj(n);
  for (int e = 0; e < network.num_links(); ++e) {
    adj[network.tail(e)].push_back(network.head(e));
    adj[network.head(e)].push_back(network.tail(e));
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_arc(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<int> dfs;
  std::vector<std::vector<int>> components;
  int clock = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1 || adj[root].empty()) continue;
    disc[root] = low[root] = clock++;
    dfs.push_back(root);
    while (!dfs.empty()) {
      const int u = dfs.back();
      if (next_arc[u] < static_cast<int>(adj[u].size())) {
        const int v = adj[u][next_arc[u]++];
        if (disc[v] == -1) {
          parent[v] = u;
          disc[v] = low[v] = clock++;
          edge_stack.emplace_back(u, v);
          dfs.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          low[u] = std::min(low[u], disc[v]);
          edge_stack.emplace_back(u, v);
        }
        continue;
      }
      dfs.pop_back();
      const int p = parent[u];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) {
        std::vector<int> comp;
        while (true) {
          const auto edge = edge_stack.back();
          edge_stack.pop_back();
          comp.push_back(edge.first);
          comp.push_back(edge.second);
          if (edge.first == p && edge.second == u) break;
        }
        std::sort(comp.begin(), comp.end());
        comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  std::sort(components.begin(), components.end());
  return components;
}

StructuralSummary ComputeStructuralSummary(const Network& network) {
  StructuralSummary s;
  s.node_count = network.num_nodes();
  s.directed_edge_count = network.num_links();
  std::set<std::pair<int, int>> undirected;
  for (int e = 0; e < network.num_links(); ++e) {
    const int a = network.tail(e), b = network.head(e);
    undirected.emplace(std::min(a, b), std::max(a, b));
  }
  s.undirected_edge_count = static_cast<int>(undirected.size());

  const auto classes = StructuralEquivalenceClasses(network);
  s.equivalence_class_count = static_cast<int>(classes.size());
  for (const auto& c : classes) {
    s.largest_equivalence_class =
        std::max(s.largest_equivalence_class, static_cast<int>(c.size()));
  }

  const auto bccs = BiconnectedComponents(network);
  s.bcc_count = static_cast<int>(bccs.size());
  long long total = 0;
  for (const auto& c : bccs) {
    total += static_cast<long long>(c.size());
    s.largest_bcc = std::max(s.largest_bcc, static_cast<int>(c.size()));
  }
  s.avg_bcc_size =
      s.bcc_count > 0 ? static_cast<double>(total) / s.bcc_count : 0.0;
  return s;
}

std::vector<double> InboundFlow(const Network& network) {
  std::vector<double> flow(network.num_nodes(), 0.0);
  for (int v = 0; v < network.num_nodes(); ++v) {
    for (int e : network.in_links(v)) flow[v] += network.link(e).flow_vph;
  }
  return flow;
}

std::vector<double> InboundCongestion(const Network& network) {
  std::vector<double> congestion(network.num_nodes(), 0.0);
  for (int v = 0; v < network.num_nodes(); ++v) {
    for (int e : network.in_links(v)) {
      const Link& l = network.link(e);
      congestion[v] += l.congested_min - l.free_flow_min;
    }
  }
  return congestion;
}

std::vector<FlowBalance> FlowConsistency(const Network& network) {
  std::vector<FlowBalance> out(network.num_nodes());
  for (int v = 0; v < network.num_nodes(); ++v) {
    FlowBalance& b = out[v];
    b.node = network.id(v);
    for (int e : network.in_links(v)) b.inbound_flow += network.link(e).flow_vph;
    for (int e : network.out_links(v)) {
      b.outbound_flow += network.link(e).flow_vph;
    }
    b.imbalance = b.inbound_flow - b.outbound_flow;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FlowBalance& x, const FlowBalance& y) {
                     const double ax = std::abs(x.imbalance);
                     const double ay = std::abs(y.imbalance);
                     if (ax != ay) return ax > ay;
                     return x.node < y.node;
                   });
  return out;
}

Histogram DistributionHistogram(std::span<const double> values, int bins) {
  if (values.empty()) throw InputError("histogram of an empty sample");
  if (bins < 1) throw InputError("histogram needs at least one bin");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it, hi = *hi_it;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  std::vector<double> edges(bins + 1);
  for (int i = 0; i <= bins; ++i) {
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
  }
  edges.back() = hi;
  return DistributionHistogram(values, edges);
}

Histogram DistributionHistogram(std::span<const double> values,
                                std::span<const double> edges) {
  if (edges.size() < 2) throw InputError("histogram needs at least two edges");
  for (size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) {
      throw InputError("histogram edges must be strictly increasing");
    }
  }
  Histogram h;
  h.edges.assign(edges.begin(), edges.end());
  h.counts.assign(edges.size() - 1, 0);
  for (double v : values) {
    if (v < edges.front()) {
      ++h.below;
    } else if (v > edges.back()) {
      ++h.above;
    } else if (v == edges.back()) {
      ++h.counts.back();
    } else {
      const auto it = std::upper_bound(edges.begin(), edges.end(), v);
      ++h.counts[static_cast<size_t>(it - edges.begin()) - 1];
    }
  }
  return h;
}

}  // namespace fleetplan
