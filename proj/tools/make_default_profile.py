#!/usr/bin/env python3
# Copyright 2026 The ctmpem Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/default_noise_profile.json.

The profile is a 20-qubit CTMP model over data/boeblingen_coupling.json:
1-qubit rates of a few percent, 2-qubit excitation and exchange rates that
fall off with qubit distance, and 2-qubit decay rates that stay roughly flat.
Rates are drawn once from a fixed seed; the committed file is the source of
truth, this script only documents how it was made.
"""

import argparse
import collections
import json
import pathlib

import numpy as np

ROOT = pathlib.Path(__file__).resolve().parent.parent


def distances(num_qubits, edges):
    adj = collections.defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    table = np.full((num_qubits, num_qubits), -1, dtype=int)
    for s in range(num_qubits):
        table[s, s] = 0
        queue = collections.deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if table[s, v] < 0:
                    table[s, v] = table[s, u] + 1
                    queue.append(v)
    return table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--graph", default=ROOT / "data" / "boeblingen_coupling.json")
    parser.add_argument("--out", default=ROOT / "data" / "default_noise_profile.json")
    parser.add_argument("--seed", type=int, default=20200917)
    args = parser.parse_args()

    graph = json.loads(pathlib.Path(args.graph).read_text())
    n = graph["num_qubits"]
    dist = distances(n, graph["edges"])
    rng = np.random.default_rng(args.seed)

    def r(x):
        return float(f"{x:.6g}")

    terms = []
    for q in range(n):
        terms.append({"kind": "single_excite", "qubits": [q], "rate": r(rng.uniform(0.008, 0.02))})
        terms.append({"kind": "single_decay", "qubits": [q], "rate": r(rng.uniform(0.03, 0.055))})
    for i in range(n):
        for j in range(i + 1, n):
            falloff = np.exp(-(dist[i, j] - 1) / 1.5)
            jitter = rng.lognormal(0.0, 0.5, size=4)
            terms.append({"kind": "pair_excite", "qubits": [i, j], "rate": r(4e-4 * falloff * jitter[0])})
            terms.append({"kind": "pair_decay", "qubits": [i, j], "rate": r(1e-3 * jitter[1])})
            terms.append({"kind": "exchange_01_10", "qubits": [i, j], "rate": r(8e-4 * falloff * jitter[2])})
            terms.append({"kind": "exchange_10_01", "qubits": [i, j], "rate": r(8e-4 * falloff * jitter[3])})

    model = {"num_qubits": n, "terms": terms}
    pathlib.Path(args.out).write_text(json.dumps(model, indent=1) + "\n")


if __name__ == "__main__":
    main()
