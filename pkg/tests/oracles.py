"""Independent brute-force oracles.

Everything here recomputes from first principles over explicitly built
graphs (itertools.permutations + plain BFS), sharing no code path with the
package's engine, so agreement is meaningful.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations, product

PAIRS = {
    "T": lambda n: [(i, j) for i in range(n) for j in range(i + 1, n)],
    "t": lambda n: [(i, i + 1) for i in range(n - 1)],
    "st": lambda n: [(0, i) for i in range(1, n)],
}


def sym_adjacency(kind: str, n: int) -> dict:
    pairs = PAIRS[kind](n)
    adj = {}
    for p in permutations(range(n)):
        nbrs = []
        for i, j in pairs:
            q = list(p)
            q[i], q[j] = q[j], q[i]
            nbrs.append(tuple(q))
        adj[p] = nbrs
    return adj


def bfs_dist(adj: dict, src) -> dict:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_dist(adj: dict) -> dict:
    return {u: bfs_dist(adj, u) for u in adj}


def overlap_maxima(adj: dict, r: int) -> dict:
    """Max |B_r(x) ∩ B_r(y)| per center distance s, over ALL vertex pairs."""
    dist = all_pairs_dist(adj)
    verts = list(adj)
    balls = {x: {z for z, d in dist[x].items() if d <= r} for x in verts}
    best: dict[int, int] = {}
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            s = dist[x][y]
            if 1 <= s <= 2 * r:
                v = len(balls[x] & balls[y])
                if v > best.get(s, -1):
                    best[s] = v
    return best


def overlap_max(adj: dict, r: int) -> int:
    return max(overlap_maxima(adj, r).values())


def triangle_and_codegree_maxima(adj: dict) -> tuple[int, int]:
    """(lambda, mu) straight from the definitions: common neighbors over
    adjacent pairs / distance-2 pairs."""
    dist = all_pairs_dist(adj)
    nbrs = {u: set(vs) for u, vs in adj.items()}
    lam = mu = 0
    verts = list(adj)
    for i, x in enumerate(verts):
        for y in verts[i + 1 :]:
            if dist[x][y] == 1:
                lam = max(lam, len(nbrs[x] & nbrs[y]))
            elif dist[x][y] == 2:
                mu = max(mu, len(nbrs[x] & nbrs[y]))
    return lam, mu


def cycle_length_counts(p) -> tuple:
    """Cycle type recomputed locally (counts of cycles by length)."""
    n = len(p)
    counts = [0] * n
    seen = set()
    for start in range(n):
        if start in seen:
            continue
        length = 1
        seen.add(start)
        v = p[start]
        while v != start:
            seen.add(v)
            length += 1
            v = p[v]
        counts[length - 1] += 1
    return tuple(counts)


def class_by_filter(n: int, counts: tuple) -> set:
    """All degree-n permutations of the given cycle type, by filtering."""
    return {p for p in permutations(range(n)) if cycle_length_counts(p) == counts}


def factorization_count(n: int, target, length: int) -> int:
    """Ordered transposition sequences of the given length multiplying to
    target (right-to-left function composition, same as right-action
    products)."""
    swaps = []
    for i, j in combinations(range(n), 2):
        q = list(range(n))
        q[i], q[j] = q[j], q[i]
        swaps.append(tuple(q))
    count = 0
    for seq in product(swaps, repeat=length):
        acc = seq[0]
        for s in seq[1:]:
            acc = tuple(acc[v] for v in s)
        if acc == target:
            count += 1
    return count


def is_distance_regular_bruteforce(adj: dict) -> bool:
    dist = all_pairs_dist(adj)
    params: dict[int, tuple[int, int]] = {}
    for u in adj:
        for w in adj:
            d = dist[u][w]
            if d == 0:
                continue
            c = sum(1 for z in adj[w] if dist[u][z] == d - 1)
            b = sum(1 for z in adj[w] if dist[u][z] == d + 1)
            if d not in params:
                params[d] = (c, b)
            elif params[d] != (c, b):
                return False
    return True


def complete_bipartite_count_bruteforce(adj: dict, p: int, q: int, at) -> int:
    """Count K_{p,q} subgraphs through `at` by scanning unordered part pairs
    drawn from the radius-2 ball (any such subgraph fits inside it)."""
    dist = bfs_dist(adj, at)
    near = [v for v, d in dist.items() if d <= 2]
    nbrs = {u: set(adj[u]) for u in near}
    seen = set()
    count = 0
    for side_a in combinations(sorted(near), p):
        a_common = set(near)
        for v in side_a:
            a_common &= nbrs.get(v, set())
        if len(a_common) < q:
            continue
        for side_b in combinations(sorted(a_common), q):
            if set(side_a) & set(side_b):
                continue
            if at not in side_a and at not in side_b:
                continue
            key = frozenset((frozenset(side_a), frozenset(side_b)))
            if key in seen:
                continue
            seen.add(key)
            count += 1
    return count
