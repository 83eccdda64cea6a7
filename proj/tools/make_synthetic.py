#!/usr/bin/env python3
# Copyright 2026 The fleetplan Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Generates synthetic road networks with OD demand and link flows.

Nodes sit on a jittered grid; neighbouring nodes are joined in both
directions, with a few links dropped at random. Link flows come from an
all-or-nothing assignment of the OD demand on congested-time shortest paths,
so they are consistent with the demand by construction. OD pairs are drawn
only between centroids joined by a route. A manifest records
the generator arguments and SHA-256 digests of the written files.
"""

import argparse
import hashlib
import heapq
import json
import math
import pathlib
import random

HEADER = ("from,to,length_km,road_type,free_flow_min,congested_min,"
          "capacity_vph,toll_min,flow_vph")


def build_links(rows, cols, drop, rng):
    coords = {}
    for r in range(rows):
        for c in range(cols):
            node = r * cols + c + 1
            coords[node] = (c + rng.uniform(-0.2, 0.2), r + rng.uniform(-0.2, 0.2))
    pairs = []
    for r in range(rows):
        for c in range(cols):
            node = r * cols + c + 1
            if c + 1 < cols:
                pairs.append((node, node + 1))
            if r + 1 < rows:
                pairs.append((node, node + cols))
    links = []
    for u, v in pairs:
        arterial = (u - 1) // cols == rows // 2 or (u - 1) % cols == cols // 2
        road_type = 1 if arterial else rng.choice((2, 3))
        (x1, y1), (x2, y2) = coords[u], coords[v]
        length = round(math.hypot(x2 - x1, y2 - y1) * 1.5, 3)
        speed_kmh = {1: 60.0, 2: 45.0, 3: 30.0}[road_type]
        for a, b in ((u, v), (v, u)):
            if rng.random() < drop:
                continue
            free = round(length / speed_kmh * 60.0, 4)
            congested = round(free * rng.uniform(1.05, 2.5), 4)
            capacity = {1: 1800.0, 2: 1200.0, 3: 600.0}[road_type]
            toll = 0.5 if road_type == 1 and rng.random() < 0.2 else 0.0
            links.append({"from": a, "to": b, "length_km": length,
                          "road_type": road_type, "free_flow_min": free,
                          "congested_min": congested, "capacity_vph": capacity,
                          "toll_min": toll, "flow_vph": 0.0})
    return links


def shortest_tree(links, source):
    adj = {}
    for i, link in enumerate(links):
        adj.setdefault(link["from"], []).append(i)
    dist = {source: 0.0}
    via = {}
    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for i in adj.get(u, []):
            v = links[i]["to"]
            nd = d + links[i]["congested_min"]
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                via[v] = i
                heapq.heappush(heap, (nd, v))
    return via


def build_od(links, nodes, pairs, rng):
    reachable = {o: set(shortest_tree(links, o)) for o in nodes}
    candidates = [(o, d) for o in nodes for d in nodes if d in reachable[o]]
    if len(candidates) < pairs:
        raise SystemExit(f"only {len(candidates)} reachable pairs")
    od = {}
    while len(od) < pairs:
        o, d = rng.sample(nodes, 2)
        if d in reachable[o]:
            od[(o, d)] = round(rng.uniform(10.0, 200.0), 1)
    return sorted(od.items())


def assign(links, od):
    for (o, d), trips in od:
        via = shortest_tree(links, o)
        node = d
        while node != o and node in via:
            i = via[node]
            links[i]["flow_vph"] = round(links[i]["flow_vph"] + trips, 1)
            node = links[i]["from"]


def fmt(value):
    return repr(value) if isinstance(value, float) else str(value)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=6)
    parser.add_argument("--cols", type=int, default=8)
    parser.add_argument("--od-pairs", type=int, default=150)
    parser.add_argument("--drop", type=float, default=0.05,
                        help="probability of dropping each directed link")
    parser.add_argument("--stub-fraction", type=float, default=0.5,
                        help="fraction of nodes that originate or receive "
                             "demand")
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--prefix", required=True,
                        help="writes <prefix>_links.csv, <prefix>_od.csv and "
                             "<prefix>_manifest.json")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    links = build_links(args.rows, args.cols, args.drop, rng)
    nodes = sorted({link["from"] for link in links} | {link["to"] for link in links})
    centroids = sorted(rng.sample(nodes, max(2, round(args.stub_fraction * len(nodes)))))
    od = build_od(links, centroids, args.od_pairs, rng)
    assign(links, od)

    prefix = pathlib.Path(args.prefix)
    links_path = prefix.with_name(prefix.name + "_links.csv")
    od_path = prefix.with_name(prefix.name + "_od.csv")
    with open(links_path, "w", newline="\n") as f:
        f.write(HEADER + "\n")
        for link in links:
            f.write(",".join(fmt(link[k]) for k in HEADER.split(",")) + "\n")
    with open(od_path, "w", newline="\n") as f:
        f.write("origin,destination,trips_per_hour\n")
        for (o, d), trips in od:
            f.write(f"{o},{d},{fmt(trips)}\n")

    stubs = {o for (o, _), _ in od} | {d for (_, d), _ in od}
    manifest = {
        "generator": "make_synthetic.py",
        "arguments": {k: v for k, v in vars(args).items() if k != "prefix"},
        "node_count": len(nodes),
        "link_count": len(links),
        "od_entries": len(od),
        "total_demand": round(sum(t for _, t in od), 6),
        "stub_nodes": len(stubs),
        "transit_nodes": len(nodes) - len(stubs),
        "files": {
            p.name: hashlib.sha256(p.read_bytes()).hexdigest()
            for p in (links_path, od_path)
        },
    }
    manifest_path = prefix.with_name(prefix.name + "_manifest.json")
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")


if __name__ == "__main__":
    main()
