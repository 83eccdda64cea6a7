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

// Road network and origin-destination demand model.
//
// A Network is an immutable directed graph of junctions (nodes) and road
// links. Node ids are arbitrary nonnegative integers from the input files;
// internally every node also has a dense index in [0, num_nodes()), ordered
// by ascending id. All public outputs report original ids.

#ifndef FLEETPLAN_NETWORK_H_
#define FLEETPLAN_NETWORK_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fleetplan {

using NodeId = std::int64_t;

enum class NodeKind { kStub, kTransit };

struct Link {
  NodeId from = 0;
  NodeId to = 0;
  double length_km = 0.0;
  int road_type = 0;
  double free_flow_min = 0.0;
  double congested_min = 0.0;
  double capacity_vph = 0.0;
  double toll_min = 0.0;
  double flow_vph = 0.0;

  friend bool operator==(const Link&, const Link&) = default;
};

class Network {
 public:
  // Validates and indexes. Throws InputError on self-loops, duplicate
  // (from, to) pairs, endpoints missing from `node_ids`, nonpositive
  // free-flow or congested times, or negative length/capacity/toll/flow.
  // A congested time below the free-flow time is recorded as a warning.
  static Network Build(std::vector<NodeId> node_ids, std::vector<Link> links);

  // Node set is the union of link endpoints.
  static Network FromLinks(std::vector<Link> links);

  Network() = default;

  int num_nodes() const { return static_cast<int>(ids_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }

  NodeId id(int index) const { return ids_[index]; }
  std::span<const NodeId> ids() const { return ids_; }
  std::optional<int> FindIndex(NodeId id) const;
  // Throws InputError for unknown ids.
  int IndexOf(NodeId id) const;

  const Link& link(int i) const { return links_[i]; }
  std::span<const Link> links() const { return links_; }
  int tail(int link) const { return tail_[link]; }
  int head(int link) const { return head_[link]; }

  // Link indices leaving / entering a node, ascending.
  std::span<const int> out_links(int node) const;
  std::span<const int> in_links(int node) const;

  const std::vector<std::string>& warnings() const { return warnings_; }

  friend bool operator==(const Network& a, const Network& b) {
    return a.ids_ == b.ids_ && a.links_ == b.links_;
  }

 private:
  std::vector<NodeId> ids_;
  std::unordered_map<NodeId, int> index_;
  std::vector<Link> links_;
  std::vector<int> tail_;
  std::vector<int> head_;
  std::vector<int> out_offsets_;
  std::vector<int> out_;
  std::vector<int> in_offsets_;
  std::vector<int> in_;
  std::vector<std::string> warnings_;
};

struct ODEntry {
  NodeId origin = 0;
  NodeId destination = 0;
  double trips_per_hour = 0.0;
};

// Sparse hourly demand. Entries are sorted by (origin index, destination
// index) of the network they were built against.
class ODMatrix {
 public:
  struct Row {
    int origin;                                    // node index
    std::vector<std::pair<int, double>> targets;   // (node index, trips)
  };

  // Throws InputError on unknown ids, origin == destination, nonpositive
  // demand, or duplicate (origin, destination) pairs.
  static ODMatrix Build(const Network& network, std::vector<ODEntry> entries);

  ODMatrix() = default;

  std::span<const ODEntry> entries() const { return entries_; }
  std::span<const Row> rows() const { return rows_; }
  double total_demand() const { return total_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<ODEntry> entries_;
  std::vector<Row> rows_;
  double total_ = 0.0;
};

// CSV header: from,to,length_km,road_type,free_flow_min,congested_min,
//             capacity_vph,toll_min,flow_vph
Network LoadNetwork(std::istream& in);
Network LoadNetworkFile(const std::string& path);
void WriteNetwork(const Network& network, std::ostream& out);

// CSV header: origin,destination,trips_per_hour
ODMatrix LoadODMatrix(std::istream& in, const Network& network);
ODMatrix LoadODMatrixFile(const std::string& path, const Network& network);

struct NodeClassification {
  std::vector<NodeKind> kinds;  // by node index
  int stub_count = 0;
  int transit_count = 0;
};

// Stub iff the node is an origin or destination of some OD entry.
NodeClassification ClassifyNodes(const Network& network, const ODMatrix& od);

struct StructuralSummary {
  int node_count = 0;
  int directed_edge_count = 0;
  int undirected_edge_count = 0;
  int equivalence_class_count = 0;
  int largest_equivalence_class = 0;
  int bcc_count = 0;
  double avg_bcc_size = 0.0;
  int largest_bcc = 0;
};

// Equivalence classes group nodes with identical (in-neighbour set,
// out-neighbour set). Biconnected components are taken on the undirected
// projection; a bridge is a component of size 2 and isolated nodes belong
// to none.
StructuralSummary ComputeStructuralSummary(const Network& network);

// Node-index sets of every biconnected component (undirected projection).
std::vector<std::vector<int>> BiconnectedComponents(const Network& network);

// Partition of node indices into structural equivalence classes.
std::vector<std::vector<int>> StructuralEquivalenceClasses(
    const Network& network);

struct FlowBalance {
  NodeId node = 0;
  double inbound_flow = 0.0;
  double outbound_flow = 0.0;
  double imbalance = 0.0;  // inbound - outbound
};

// Sorted by |imbalance| descending, then node id ascending.
std::vector<FlowBalance> FlowConsistency(const Network& network);

// Per node index: sum of inbound link flows.
std::vector<double> InboundFlow(const Network& network);
// Per node index: sum over inbound links of (congested - free-flow time).
std::vector<double> InboundCongestion(const Network& network);

struct Histogram {
  std::vector<double> edges;  // size = counts.size() + 1
  std::vector<std::int64_t> counts;
  std::int64_t below = 0;  // values < edges.front() (explicit edges only)
  std::int64_t above = 0;  // values > edges.back() (explicit edges only)
};

// Equal-width bins spanning [min, max]; the last bin is closed. A constant
// sample gets a unit-width range centred on the value. Throws InputError on
// empty input or bins < 1.
Histogram DistributionHistogram(std::span<const double> values, int bins);

// Bins [e_i, e_{i+1}), last bin closed. Edges must be strictly increasing.
Histogram DistributionHistogram(std::span<const double> values,
                                std::span<const double> edges);

}  // namespace fleetplan

#endif  // FLEETPLAN_NETWORK_H_
