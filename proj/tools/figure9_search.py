# Copyright 2026 The bicross Authors
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

"""Search for the long-edge crossing fixture used by figure9_configuration().

Blue points a = (-1, 0) and b = (1, 0). Twelve red points are placed so that
the red MST contains five edges that cross ab and are longer than it, in two
fans of two plus one lone edge. Each restart fixes the red tree implied by
the current positions and maximizes the smallest margin t with SLSQP:

  * cut margins: every non-tree pair across the cut of a tree edge e is
    longer than e (squared lengths differ by >= t), so the tree is the MST;
  * squared length of each long edge >= 4 + t;
  * each long edge has endpoints at height >= t on opposite sides of ab and
    meets the x-axis inside [-1 + t, 1 - t].

The winner is nudged off its mirror symmetry, rounded to 16-bit dyadics and
re-checked with exact rationals before a C++ initializer is printed.

Usage: python3 tools/figure9_search.py [--seed S] [--restarts N]
Needs numpy and scipy.
"""

import argparse
import math
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.optimize import minimize

N = 12
LONG = [(0, 1), (0, 2), (3, 4), (3, 5), (6, 7)]
A = (Fraction(-1), Fraction(0))
B = (Fraction(1), Fraction(0))


def kruskal(n, weight, forced=()):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for u, v in forced:
        parent[find(u)] = find(v)
        tree.append((u, v))
    for _, i, j in sorted((weight(i, j), i, j) for i, j in combinations(range(n), 2)):
        if find(i) != find(j):
            parent[find(i)] = find(j)
            tree.append((i, j))
    return tree


def cut_side(tree, edge):
    adj = {i: [] for i in range(N)}
    for u, v in tree:
        if (u, v) != edge:
            adj[u].append(v)
            adj[v].append(u)
    seen, stack = {edge[0]}, [edge[0]]
    while stack:
        for y in adj[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def constraints(tree):
    cuts = []
    for e in tree:
        side = cut_side(tree, e)
        cuts += [(e, p, q) for p in side for q in range(N) if q not in side and (min(p, q), max(p, q)) != e]
    return cuts


def margins(z, cuts):
    X, t = z[:2 * N].reshape(N, 2), z[2 * N]
    d2 = lambda i, j: ((X[i] - X[j]) ** 2).sum()
    out = [d2(p, q) - d2(*e) - t for e, p, q in cuts]
    for u, v in LONG:
        x, y = X[u], X[v]
        out.append(d2(u, v) - 4 - t)
        sign = 1.0 if x[1] > y[1] else -1.0
        out += [sign * x[1] - t, -sign * y[1] - t]
        meet = (x[0] * -y[1] + y[0] * x[1]) / (x[1] - y[1] + 1e-300)
        out += [1 - meet - t, meet + 1 - t]
    return np.array(out)


def restart(rng):
    X = rng.uniform(-2.5, 2.5, (N, 2))
    for u, _ in LONG:
        X[u] = [rng.uniform(-0.9, 0.9), (1 if X[u, 1] >= 0 else -1) * rng.uniform(0.01, 0.3)]
    for u, v in LONG:
        theta = rng.uniform(0.3, math.pi - 0.3)
        X[v] = X[u] + 2.1 * np.array([math.cos(theta), -np.sign(X[u, 1]) * math.sin(theta)])
    t = -math.inf
    for _ in range(4):
        tree = kruskal(N, lambda i, j: ((X[i] - X[j]) ** 2).sum(), LONG)
        cuts = constraints(tree)
        z0 = np.concatenate([X.ravel(), [margins(np.concatenate([X.ravel(), [0.0]]), cuts).min()]])
        res = minimize(lambda z: -z[-1], z0, method="SLSQP",
                       constraints=[{"type": "ineq", "fun": lambda z: margins(z, cuts)}],
                       bounds=[(-5, 5)] * (2 * N) + [(-10, 1)], options={"maxiter": 500})
        X, t = res.x[:2 * N].reshape(N, 2), res.x[-1]
        if kruskal(N, lambda i, j: ((X[i] - X[j]) ** 2).sum(), LONG) == tree:
            break
    return t, X


def exact_check(P):
    d2 = lambda i, j: (P[i][0] - P[j][0]) ** 2 + (P[i][1] - P[j][1]) ** 2
    orient = lambda i, j, k: ((P[j][0] - P[i][0]) * (P[k][1] - P[i][1])
                              - (P[j][1] - P[i][1]) * (P[k][0] - P[i][0]))
    dists = [d2(i, j) for i, j in combinations(range(len(P)), 2)]
    if len(set(dists)) != len(dists):
        return "repeated distance"
    if any(orient(i, j, k) == 0 for i, j, k in combinations(range(len(P)), 3)):
        return "collinear triple"
    red = kruskal(N, d2)
    a, b = N, N + 1
    for u, v in LONG:
        if (u, v) not in red:
            return f"({u},{v}) not in the red MST"
        if not (orient(a, b, u) * orient(a, b, v) < 0 and orient(u, v, a) * orient(u, v, b) < 0):
            return f"({u},{v}) misses ab"
        if not d2(u, v) > d2(a, b):
            return f"({u},{v}) not longer than ab"
    return None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--restarts", type=int, default=30)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    best_t, best_X = -math.inf, None
    for r in range(args.restarts):
        t, X = restart(rng)
        if t > best_t:
            best_t, best_X = t, X
            print(f"restart {r}: margin {t:.6g}", flush=True)
    if best_t <= 0:
        raise SystemExit("no configuration with a positive margin")
    X = best_X + rng.uniform(-1, 1, best_X.shape) / 1024
    P = [(Fraction(round(x * 65536), 65536), Fraction(round(y * 65536), 65536)) for x, y in X] + [A, B]
    problem = exact_check(P)
    if problem:
        raise SystemExit(f"rounded configuration rejected: {problem}")
    for x, y in P:
        print(f"{{Coord({x.numerator}, {x.denominator}), Coord({y.numerator}, {y.denominator})}},")


if __name__ == "__main__":
    main()
