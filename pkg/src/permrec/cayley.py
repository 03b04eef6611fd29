"""Metric engine for Cayley graphs of the symmetric group.

Supports the three transposition families (all transpositions, adjacent
swaps, prefix swaps) plus arbitrary explicit involution sets.  Provides
spheres, balls, distances, ball-intersection maxima, triangle/common-
neighbor parameters, local parameters, diameters, distance-regularity and
small-subgraph checks.

Vertices are permutation tuples; edges join x to x*s for generators s.
Left translation is an automorphism, so distances satisfy
d(x, y) = d(e, inverse(x)*y) and every ball is a translate of a ball around
the identity; the engine leans on this throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, partial
from math import factorial

from .errors import CapacityError, UnreachableError
from .parallel import run_mapped
from .perms import (
    CycleType,
    Perm,
    class_representative,
    compose,
    cycle_types,
    format_perm,
    identity,
    inverse,
    is_perm,
    rank,
    transposition,
)

KIND_ALL = "T"
KIND_ADJACENT = "t"
KIND_PREFIX = "st"
KIND_EXPLICIT = "explicit"

KIND_NAMES = {
    KIND_ALL: "all-transpositions",
    KIND_ADJACENT: "adjacent-transpositions",
    KIND_PREFIX: "prefix-transpositions",
    KIND_EXPLICIT: "explicit",
}


@dataclass(frozen=True)
class Budgets:
    """Capacity knobs; exceeding one raises CapacityError instead of thrashing."""

    max_ball_size: int = 2_000_000
    whole_graph_max_n: int = 8
    dense_visited_max_n: int = 8
    max_cycle_search: int = 20_000_000


DEFAULT_BUDGETS = Budgets()


@dataclass(frozen=True)
class GeneratorSet:
    """An involution generating set for the symmetric group of degree n.

    The identity is excluded and every generator is its own inverse, so the
    set is closed under inversion and the Cayley graph is undirected and
    len(gens)-regular.
    """

    kind: str
    n: int
    gens: tuple[Perm, ...]
    # position pairs (i, j) when every generator is a single transposition;
    # enables swap-based neighbor expansion
    pairs: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    @classmethod
    def all_transpositions(cls, n: int) -> "GeneratorSet":
        _check_graph_degree(n)
        pairs = tuple((i, j) for i in range(n) for j in range(i + 1, n))
        gens = tuple(transposition(n, i, j) for i, j in pairs)
        return cls(KIND_ALL, n, gens, pairs)

    @classmethod
    def adjacent(cls, n: int) -> "GeneratorSet":
        _check_graph_degree(n)
        pairs = tuple((i, i + 1) for i in range(n - 1))
        gens = tuple(transposition(n, i, j) for i, j in pairs)
        return cls(KIND_ADJACENT, n, gens, pairs)

    @classmethod
    def prefix(cls, n: int) -> "GeneratorSet":
        _check_graph_degree(n)
        pairs = tuple((0, i) for i in range(1, n))
        gens = tuple(transposition(n, i, j) for i, j in pairs)
        return cls(KIND_PREFIX, n, gens, pairs)

    @classmethod
    def explicit(cls, n: int, gens) -> "GeneratorSet":
        _check_graph_degree(n)
        seen = []
        e = identity(n)
        for g in gens:
            g = tuple(g)
            if len(g) != n or not is_perm(g):
                raise ValueError(f"not a permutation of degree {n}: {g!r}")
            if g == e:
                raise ValueError("identity is not a valid generator")
            if compose(g, g) != e:
                raise ValueError(f"generator is not an involution: {g!r}")
            if g not in seen:
                seen.append(g)
        if not seen:
            raise ValueError("empty generator set")
        return cls(KIND_EXPLICIT, n, tuple(seen), None)

    @classmethod
    def of_kind(cls, kind: str, n: int) -> "GeneratorSet":
        makers = {
            KIND_ALL: cls.all_transpositions,
            KIND_ADJACENT: cls.adjacent,
            KIND_PREFIX: cls.prefix,
        }
        if kind not in makers:
            raise ValueError(f"unknown generator kind {kind!r}")
        return makers[kind](n)

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def display_name(self) -> str:
        return KIND_NAMES[self.kind]

    def neighbors(self, p: Perm) -> list[Perm]:
        if self.pairs is not None:
            out = []
            for i, j in self.pairs:
                q = list(p)
                q[i], q[j] = q[j], q[i]
                out.append(tuple(q))
            return out
        return [compose(p, s) for s in self.gens]


def _check_graph_degree(n: int) -> None:
    if not 2 <= n <= 12:
        raise ValueError(f"graph degree must be in 2..12, got {n}")


@dataclass(frozen=True)
class MetricBall:
    """Explicit ball: all vertices within ``radius`` of ``center``, split
    into spheres by exact distance."""

    gen: GeneratorSet
    center: Perm
    radius: int
    spheres: tuple[frozenset[Perm], ...]

    @cached_property
    def members(self) -> frozenset[Perm]:
        return frozenset().union(*self.spheres)

    @cached_property
    def distance_index(self) -> dict[Perm, int]:
        return {p: d for d, sph in enumerate(self.spheres) for p in sph}

    @property
    def size(self) -> int:
        return sum(len(s) for s in self.spheres)

    def members_within(self, radius: int) -> frozenset[Perm]:
        return frozenset().union(*self.spheres[: radius + 1])


def ball(
    center: Perm,
    radius: int,
    gen: GeneratorSet,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> MetricBall:
    """Breadth-first expansion of the metric ball around ``center``."""
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    if len(center) != gen.n:
        raise ValueError(f"degree mismatch: center {len(center)}, graph {gen.n}")
    spheres = [frozenset([center])]
    visited = {center}
    frontier = [center]
    for _ in range(radius):
        nxt = set()
        for v in frontier:
            for w in gen.neighbors(v):
                if w not in visited and w not in nxt:
                    nxt.add(w)
        if not nxt:
            break
        if len(visited) + len(nxt) > budgets.max_ball_size:
            raise CapacityError(
                f"ball exceeds budget of {budgets.max_ball_size} vertices"
            )
        visited |= nxt
        spheres.append(frozenset(nxt))
        frontier = list(nxt)
    return MetricBall(gen, center, radius, tuple(spheres))


_ball_memo: dict[tuple[GeneratorSet, int], MetricBall] = {}


def ball_of_identity(
    gen: GeneratorSet, radius: int, budgets: Budgets = DEFAULT_BUDGETS
) -> MetricBall:
    """Identity-centered ball, memoized per (generator set, radius).

    Non-default budgets bypass the memo so a cached ball can never dodge a
    tighter cap."""
    if budgets != DEFAULT_BUDGETS:
        return ball(identity(gen.n), radius, gen, budgets)
    key = (gen, radius)
    got = _ball_memo.get(key)
    if got is None:
        got = _ball_memo[key] = ball(identity(gen.n), radius, gen, budgets)
    return got


def prime_identity_ball(b: MetricBall) -> None:
    """Install an externally loaded identity ball into the memo."""
    if b.center != identity(b.gen.n):
        raise ValueError("only identity-centered balls can be primed")
    _ball_memo[(b.gen, b.radius)] = b


def clear_ball_memo() -> None:
    _ball_memo.clear()


def sphere(
    gen: GeneratorSet, s: int, budgets: Budgets = DEFAULT_BUDGETS
) -> frozenset[Perm]:
    """S_s(e): vertices at distance exactly s from the identity."""
    b = ball_of_identity(gen, s, budgets)
    return b.spheres[s] if s < len(b.spheres) else frozenset()


def distance(
    x: Perm,
    y: Perm,
    gen: GeneratorSet,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """Exact graph distance by bidirectional breadth-first search."""
    if len(x) != len(y) or len(x) != gen.n:
        raise ValueError("degree mismatch")
    if x == y:
        return 0
    dist_a = {x: 0}
    dist_b = {y: 0}
    front_a, front_b = [x], [y]
    depth_a = depth_b = 0
    while front_a and front_b:
        if len(dist_a) + len(dist_b) > 2 * budgets.max_ball_size:
            raise CapacityError("distance search exceeds budget")
        # expand the smaller frontier; generators are involutions so the
        # backward search uses the same expansion
        if len(front_a) <= len(front_b):
            front_a, depth_a = _expand(front_a, dist_a, depth_a, gen)
            hit = _meet(front_a, dist_b)
            if hit is not None:
                return depth_a + dist_b[hit]
        else:
            front_b, depth_b = _expand(front_b, dist_b, depth_b, gen)
            hit = _meet(front_b, dist_a)
            if hit is not None:
                return depth_b + dist_a[hit]
    raise UnreachableError(f"{format_perm(y)} not reachable from {format_perm(x)}")


def _expand(frontier, dist, depth, gen):
    nxt = []
    for v in frontier:
        for w in gen.neighbors(v):
            if w not in dist:
                dist[w] = depth + 1
                nxt.append(w)
    return nxt, depth + 1


def _meet(frontier, other_dist):
    best = None
    for v in frontier:
        if v in other_dist and (best is None or other_dist[v] < other_dist[best]):
            best = v
    return best


def intersection_size(b1: MetricBall, b2: MetricBall) -> int:
    """|members(b1) ∩ members(b2)| for balls over the same graph."""
    if b1.gen != b2.gen:
        raise ValueError("balls come from different graphs")
    return len(b1.members & b2.members)


def lambda_mu(gen: GeneratorSet) -> tuple[int, int]:
    """Triangle and common-neighbor maxima from generator products alone.

    A common neighbor of e and a product ab corresponds to a way of writing
    the product from two generators, so the two maxima are the largest
    representation counts of elements inside, respectively outside, the
    generator set (excluding the identity).  No graph traversal is needed.
    """
    gen_set = set(gen.gens)
    e = identity(gen.n)
    reps: Counter[Perm] = Counter()
    for a in gen.gens:
        for b in gen.gens:
            prod = compose(a, b)
            if prod != e:
                reps[prod] += 1
    lam = max((c for p, c in reps.items() if p in gen_set), default=0)
    mu = max((c for p, c in reps.items() if p not in gen_set), default=0)
    return lam, mu


def spheres_by_products(
    gen: GeneratorSet, up_to: int, budgets: Budgets = DEFAULT_BUDGETS
) -> list[frozenset[Perm]]:
    """Spheres built from generator-power sets: the distance-i sphere is the
    i-fold product set minus everything reachable with fewer factors."""
    e = identity(gen.n)
    power = {e}
    cumulative = {e}
    out = [frozenset([e])]
    for _ in range(up_to):
        power = {compose(a, s) for a in power for s in gen.gens}
        if len(power) + len(cumulative) > 2 * budgets.max_ball_size:
            raise CapacityError("product closure exceeds budget")
        out.append(frozenset(power - cumulative))
        cumulative |= power
    return out


@dataclass(frozen=True)
class SphereMax:
    """Largest r-ball overlap over center pairs at one distance s.

    ``value`` is None when the sphere is empty (s beyond the diameter), which
    is reported as absent rather than zero.  ``witnesses`` lists every
    attaining candidate: conjugacy-class strings for the all-transpositions
    graph, vertex strings otherwise.
    """

    s: int
    value: int | None
    witnesses: tuple[str, ...] = ()


@dataclass(frozen=True)
class IntersectionMax:
    """Largest r-ball overlap over all pairs of distinct centers."""

    radius: int
    value: int
    per_s: tuple[SphereMax, ...]

    @property
    def best_s(self) -> tuple[int, ...]:
        return tuple(sm.s for sm in self.per_s if sm.value == self.value)

    @property
    def witnesses(self) -> dict[int, tuple[str, ...]]:
        return {sm.s: sm.witnesses for sm in self.per_s if sm.value == self.value}


def _overlap_count(members: frozenset[Perm], y: Perm) -> int:
    # z lies in both balls iff z is a member and inverse(z)*y is a member
    total = 0
    for z in members:
        if compose(inverse(z), y) in members:
            total += 1
    return total


def ball_overlap(
    gen: GeneratorSet,
    r: int,
    other: Perm,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """|B_r(e) ∩ B_r(other)| without materializing the second ball."""
    return _overlap_count(ball_of_identity(gen, r, budgets).members, other)


def max_ball_intersection_at(
    gen: GeneratorSet,
    r: int,
    s: int,
    budgets: Budgets = DEFAULT_BUDGETS,
    workers: int = 1,
) -> SphereMax:
    """Max |B_r(x) ∩ B_r(y)| over pairs at distance exactly s.

    By vertex-transitivity x is fixed at the identity.  For the
    all-transpositions family the overlap depends only on the conjugacy
    class of y (the family is closed under conjugation), so only one
    representative per class at distance s is scanned; the adjacent and
    prefix families are not conjugation-closed and every sphere vertex is
    scanned.
    """
    if r < 1:
        raise ValueError(f"radius must be >= 1, got {r}")
    if not 1 <= s <= 2 * r:
        raise ValueError(f"need 1 <= s <= 2r, got s={s}, r={r}")
    if gen.kind == KIND_ALL:
        members = ball_of_identity(gen, r, budgets).members
        cands = [
            (str(ct), class_representative(ct))
            for ct in cycle_types(gen.n)
            if ct.min_transpositions == s
        ]
    else:
        big = ball_of_identity(gen, 2 * r, budgets)
        members = big.members_within(r)
        sph = big.spheres[s] if s < len(big.spheres) else frozenset()
        cands = [(format_perm(y), y) for y in sorted(sph)]
    if not cands:
        return SphereMax(s, None, ())
    counts = run_mapped(
        partial(_overlap_count, members), [y for _, y in cands], workers
    )
    best = max(counts)
    wits = tuple(label for (label, _), c in zip(cands, counts) if c == best)
    return SphereMax(s, best, wits)


def max_ball_intersection(
    gen: GeneratorSet,
    r: int,
    budgets: Budgets = DEFAULT_BUDGETS,
    workers: int = 1,
) -> IntersectionMax:
    """Max |B_r(x) ∩ B_r(y)| over all pairs of distinct centers.

    Overlapping balls force d(x, y) <= 2r, so the scan covers s = 1..2r;
    one more erroneous pattern than this value always pins down an unknown
    center."""
    per_s = tuple(
        max_ball_intersection_at(gen, r, s, budgets, workers)
        for s in range(1, 2 * r + 1)
    )
    values = [sm.value for sm in per_s if sm.value is not None]
    if not values:
        raise ValueError("no vertex pairs at any distance in 1..2r")
    return IntersectionMax(r, max(values), per_s)


def local_params(
    pi: Perm, gen: GeneratorSet, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[int, int, int]:
    """(c, a, b): neighbors of pi one step closer to / level with / one step
    farther from the identity.  They always sum to the valency."""
    e = identity(gen.n)
    i = distance(e, pi, gen, budgets)
    idx = ball_of_identity(gen, i + 1, budgets).distance_index
    c = a = b = 0
    for w in gen.neighbors(pi):
        d = idx[w]
        if d == i - 1:
            c += 1
        elif d == i:
            a += 1
        else:
            b += 1
    return c, a, b


def local_params_all(
    gen: GeneratorSet, budgets: Budgets = DEFAULT_BUDGETS
) -> dict[Perm, tuple[int, int, int]]:
    """(c, a, b) for every non-identity vertex, from one whole-graph sweep."""
    levels = bfs_levels(gen, budgets)
    idx = {p: d for d, lvl in enumerate(levels) for p in lvl}
    out = {}
    for d in range(1, len(levels)):
        for y in levels[d]:
            c = a = b = 0
            for w in gen.neighbors(y):
                dw = idx[w]
                if dw == d - 1:
                    c += 1
                elif dw == d:
                    a += 1
                else:
                    b += 1
            out[y] = (c, a, b)
    return out


def bfs_levels(
    gen: GeneratorSet, budgets: Budgets = DEFAULT_BUDGETS
) -> list[list[Perm]]:
    """Whole-graph breadth-first levels from the identity.

    Uses a dense rank-indexed visited bitmap when the degree is small enough,
    a hash set otherwise; both produce identical levels."""
    n = gen.n
    if n > budgets.whole_graph_max_n:
        raise CapacityError(
            f"whole-graph search capped at degree {budgets.whole_graph_max_n}"
        )
    start = identity(n)
    dense = n <= budgets.dense_visited_max_n
    if dense:
        seen_bits = bytearray(factorial(n))
        seen_bits[rank(start)] = 1

        def mark(p: Perm) -> bool:
            i = rank(p)
            if seen_bits[i]:
                return False
            seen_bits[i] = 1
            return True

    else:
        seen = {start}

        def mark(p: Perm) -> bool:
            if p in seen:
                return False
            seen.add(p)
            return True

    levels = [[start]]
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in gen.neighbors(v):
                if mark(w):
                    nxt.append(w)
        if not nxt:
            break
        levels.append(nxt)
        frontier = nxt
    return levels


def diameter(gen: GeneratorSet, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Graph diameter: the eccentricity of the identity, which equals the
    diameter by vertex-transitivity."""
    return len(bfs_levels(gen, budgets)) - 1


@dataclass(frozen=True)
class RegularityWitness:
    """Two vertices at the same distance from a base vertex whose
    closer/farther neighbor counts differ."""

    base: str
    dist: int
    first: str
    first_params: tuple[int, int]
    second: str
    second_params: tuple[int, int]


@dataclass(frozen=True)
class RegularityResult:
    is_distance_regular: bool
    witness: RegularityWitness | None = None
    intersection_array: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def is_distance_regular(
    gen: GeneratorSet, budgets: Budgets = DEFAULT_BUDGETS
) -> RegularityResult:
    """Check whether closer/farther neighbor counts depend only on distance.

    Left translations are automorphisms carrying any base vertex to the
    identity, so scanning all vertices against the identity covers every
    pair.  On failure the witness pair is returned."""
    levels = bfs_levels(gen, budgets)
    idx = {p: d for d, lvl in enumerate(levels) for p in lvl}
    b_arr: list[int] = [len(gen.gens)]
    c_arr: list[int] = []
    for d in range(1, len(levels)):
        ref: tuple[int, int] | None = None
        ref_vertex: Perm | None = None
        for y in levels[d]:
            c = b = 0
            for w in gen.neighbors(y):
                dw = idx[w]
                if dw == d - 1:
                    c += 1
                elif dw == d + 1:
                    b += 1
            if ref is None:
                ref, ref_vertex = (c, b), y
            elif (c, b) != ref:
                witness = RegularityWitness(
                    base=format_perm(identity(gen.n)),
                    dist=d,
                    first=format_perm(ref_vertex),
                    first_params=ref,
                    second=format_perm(y),
                    second_params=(c, b),
                )
                return RegularityResult(False, witness)
        c_arr.append(ref[0])
        if d < len(levels) - 1:
            b_arr.append(ref[1])
    return RegularityResult(True, None, (tuple(b_arr), tuple(c_arr)))


def girth_cycle_check(
    gen: GeneratorSet,
    lengths,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> dict[int, bool]:
    """For each requested length, whether the graph has a simple cycle of
    that length.  Vertex-transitivity means cycles exist somewhere iff they
    exist through the identity, so the search is local."""
    out = {}
    for length in sorted(set(lengths)):
        if length < 3:
            raise ValueError(f"cycle length must be >= 3, got {length}")
        k = len(gen.gens)
        estimate = k * max(k - 1, 1) ** (length - 2)
        if estimate > budgets.max_cycle_search:
            raise CapacityError(f"cycle search for length {length} exceeds budget")
        out[length] = _has_cycle_through_identity(gen, length)
    return out


def _has_cycle_through_identity(gen: GeneratorSet, length: int) -> bool:
    e = identity(gen.n)
    closing = set(gen.neighbors(e))
    on_path = {e}

    def dfs(v: Perm, steps: int) -> bool:
        if steps == length - 1:
            return v in closing
        for w in gen.neighbors(v):
            if w == e or w in on_path:
                continue
            on_path.add(w)
            if dfs(w, steps + 1):
                return True
            on_path.remove(w)
        return False

    for v in gen.neighbors(e):
        on_path.add(v)
        if dfs(v, 1):
            return True
        on_path.remove(v)
    return False


def complete_bipartite_count(
    gen: GeneratorSet,
    p: int,
    q: int,
    at: Perm,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> int:
    """Number of complete-bipartite K_{p,q} subgraphs through vertex ``at``.

    Every such subgraph lies inside the radius-2 ball around ``at``: the
    part not containing ``at`` consists of neighbors of ``at`` and the rest
    are common neighbors of that part.  Subgraphs are counted as unordered
    part pairs with full cross-adjacency (not necessarily induced).
    """
    from itertools import combinations
    from math import comb

    if not 1 <= p <= 4 or not 1 <= q <= 4:
        raise CapacityError("part sizes capped at 4")
    if gen.n > 6:
        raise CapacityError("subgraph search capped at degree 6")
    if len(at) != gen.n:
        raise ValueError("degree mismatch")

    nbr_cache: dict[Perm, frozenset[Perm]] = {}

    def nbrs(v: Perm) -> frozenset[Perm]:
        got = nbr_cache.get(v)
        if got is None:
            got = nbr_cache[v] = frozenset(gen.neighbors(v))
        return got

    def one_side(own_size: int, other_size: int) -> int:
        # `at` sits in the part of size own_size; the other part is chosen
        # among its neighbors and the rest of its own part among their
        # common neighbors.
        total = 0
        for other in combinations(sorted(nbrs(at)), other_size):
            common = nbrs(other[0])
            for w in other[1:]:
                common = common & nbrs(w)
                if len(common) < own_size:
                    break
            else:
                total += comb(len(common - {at}), own_size - 1)
        return total

    count = one_side(p, q)
    if p != q:
        count += one_side(q, p)
    return count


@dataclass(frozen=True)
class GraphReport:
    """Computed metric profile of one Cayley graph instance."""

    kind: str
    n: int
    v: int
    k: int
    lam: int
    mu: int
    diameter: int | None
    per_radius: tuple[IntersectionMax, ...]
    notes: tuple[str, ...] = ()

    @property
    def final(self) -> IntersectionMax:
        return self.per_radius[-1]

    def to_doc(self) -> dict:
        final = self.final
        return {
            "n": self.n,
            "generator_kind": self.kind,
            "v": self.v,
            "k": self.k,
            "lambda": self.lam,
            "mu": self.mu,
            "diameter": self.diameter,
            "n_s": {str(sm.s): sm.value for sm in final.per_s},
            "n_r": {str(im.radius): im.value for im in self.per_radius},
            "witnesses": {
                "n_s": {
                    str(sm.s): sorted(sm.witnesses)
                    for sm in final.per_s
                    if sm.value == final.value
                }
            },
            "notes": list(self.notes),
        }


def build_graph_report(
    gen: GeneratorSet,
    r: int,
    budgets: Budgets = DEFAULT_BUDGETS,
    workers: int = 1,
    with_diameter: bool = True,
) -> GraphReport:
    lam, mu = lambda_mu(gen)
    per_radius = tuple(
        max_ball_intersection(gen, rr, budgets, workers) for rr in range(1, r + 1)
    )
    notes: list[str] = []
    diam: int | None = None
    if with_diameter:
        try:
            diam = diameter(gen, budgets)
        except CapacityError as exc:
            notes.append(f"diameter skipped: {exc}")
    else:
        notes.append("diameter skipped: disabled")
    return GraphReport(
        kind=gen.kind,
        n=gen.n,
        v=factorial(gen.n),
        k=gen.k,
        lam=lam,
        mu=mu,
        diameter=diam,
        per_radius=per_radius,
        notes=tuple(notes),
    )
