"""Generalized flower graphs and their closed-form resistance machinery.

A flower on base graph ``G`` with marked vertices ``x != y`` and petal count
``n`` is built from ``n`` disjoint copies of ``G`` (the petals) by identifying
the ``x`` vertex of each petal with the ``y`` vertex of the next petal,
cyclically.  The shared vertices are the "associated" vertices; everything
else is an "outer" vertex of its petal.

Construction convention used throughout this package: the junction between
petal ``i`` and petal ``i + 1`` is petal ``i``'s copy of ``x`` and petal
``i + 1``'s copy of ``y``.  Canonical locators always record a junction as
vertex ``x`` of the lower-indexed petal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import rationalize
from .graphs import Graph, graph_from_edge_list
from . import oracle


@dataclass(frozen=True)
class FlowerSpec:
    """Base graph, marked vertex pair and petal count defining one flower."""

    base: Graph
    x: int
    y: int
    n: int

    def __post_init__(self) -> None:
        m = self.base.vertex_count
        if m < 2:
            raise ValueError("base graph needs at least two vertices")
        if not (0 <= self.x < m and 0 <= self.y < m):
            raise ValueError(f"marked vertices ({self.x}, {self.y}) out of range")
        if self.x == self.y:
            raise ValueError("marked vertices must be distinct")
        if self.n < 3:
            raise ValueError("petal count must be at least 3")

    @property
    def block_size(self) -> int:
        """Labels per petal block: one junction plus the non-marked vertices."""
        return self.base.vertex_count - 1

    @property
    def vertex_count(self) -> int:
        return self.n * self.block_size

    def outer_vertices(self) -> tuple[int, ...]:
        """Base vertices other than the marked pair, in ascending label order."""
        return tuple(
            v for v in range(self.base.vertex_count) if v not in (self.x, self.y)
        )


@dataclass(frozen=True, order=True)
class FlowerLocator:
    """Position of a flower vertex: petal index, base vertex, junction flag."""

    petal: int
    base_vertex: int
    is_associated: bool


def canonical_locator(spec: FlowerSpec, loc: FlowerLocator) -> FlowerLocator:
    """Normalize a locator so junctions read as vertex ``x`` of the lower petal."""
    if not (1 <= loc.petal <= spec.n):
        raise ValueError(f"petal {loc.petal} out of range 1..{spec.n}")
    if not (0 <= loc.base_vertex < spec.base.vertex_count):
        raise ValueError(f"base vertex {loc.base_vertex} out of range")
    if loc.base_vertex == spec.y:
        previous = (loc.petal - 2) % spec.n + 1
        return FlowerLocator(previous, spec.x, True)
    if loc.base_vertex == spec.x:
        return FlowerLocator(loc.petal, spec.x, True)
    return FlowerLocator(loc.petal, loc.base_vertex, False)


def locator(spec: FlowerSpec, petal: int, base_vertex: int) -> FlowerLocator:
    """Build the canonical locator for ``base_vertex`` inside ``petal``."""
    return canonical_locator(spec, FlowerLocator(petal, base_vertex, False))


@dataclass(frozen=True)
class Flower:
    """A constructed flower graph together with its labelling."""

    spec: FlowerSpec
    graph: Graph

    def label_of(self, petal: int, base_vertex: int) -> int:
        loc = locator(self.spec, petal, base_vertex)
        block = (loc.petal - 1) * self.spec.block_size
        if loc.is_associated:
            return block
        outer = self.spec.outer_vertices()
        return block + 1 + outer.index(loc.base_vertex)

    def locator_of(self, label: int) -> FlowerLocator:
        if not (0 <= label < self.spec.vertex_count):
            raise ValueError(f"label {label} out of range")
        petal, offset = divmod(label, self.spec.block_size)
        petal += 1
        if offset == 0:
            return FlowerLocator(petal, self.spec.x, True)
        return FlowerLocator(petal, self.spec.outer_vertices()[offset - 1], False)

def build_flower(spec: FlowerSpec) -> Flower:
    """Construct the flower graph with deterministic contiguous petal blocks.

    Petal ``i`` occupies labels ``(i - 1) * (m - 1) .. i * (m - 1) - 1`` with
    its junction first, then its non-marked base vertices in ascending order.
    """
    block = spec.block_size
    outer = spec.outer_vertices()
    outer_index = {v: off for off, v in enumerate(outer)}

    def label(petal: int, base_vertex: int) -> int:
        if base_vertex == spec.x:
            return (petal - 1) * block
        if base_vertex == spec.y:
            return ((petal - 2) % spec.n) * block
        return (petal - 1) * block + 1 + outer_index[base_vertex]

    edges = [
        (label(petal, a), label(petal, b))
        for petal in range(1, spec.n + 1)
        for a, b in sorted(spec.base.edges)
    ]
    return Flower(spec, graph_from_edge_list(edges))


@dataclass(frozen=True)
class BaseResBundle:
    """The five base-graph resistances feeding the flower resistance formulas."""

    r_ux: Fraction
    r_uy: Fraction
    r_vx: Fraction
    r_vy: Fraction
    r_xy: Fraction


def _is_complete(g: Graph) -> bool:
    m = g.vertex_count
    return g.edge_count == m * (m - 1) // 2


def _is_cycle(g: Graph) -> bool:
    return g.vertex_count >= 3 and all(d == 2 for d in g.degrees)


@lru_cache(maxsize=64)
def base_resistance_table(g: Graph) -> tuple[tuple[Fraction, ...], ...]:
    """Exact pairwise resistances of a base graph.

    Complete graphs and cycles use their closed forms; any other base falls
    back to the numeric solver with continued-fraction rationalization,
    verified against the float to 1e-9.
    """
    m = g.vertex_count
    if _is_complete(g):
        value = Fraction(2, m)
        return tuple(
            tuple(value if i != j else Fraction(0) for j in range(m)) for i in range(m)
        )
    if _is_cycle(g):
        rows = []
        for i in range(m):
            dist = g.distances_from(i)
            rows.append(tuple(Fraction((m - d) * d, m) for d in dist))
        return tuple(rows)
    matrix = oracle.resistance_matrix(g)
    return tuple(
        tuple(
            Fraction(0) if i == j else rationalize(float(matrix[i, j]))
            for j in range(m)
        )
        for i in range(m)
    )


def flower_resistance_cross(bundle: BaseResBundle, d: int, n: int) -> Fraction:
    """Resistance between vertices ``d`` petals apart (inclusive), ``2 <= d <= n``.

    The bundle is oriented so that ``u``'s petal meets the chain toward ``v``
    at its ``y`` vertex and ``v``'s petal meets it back at its ``x`` vertex.
    """
    if not 2 <= d <= n:
        raise ValueError(f"petal separation d={d} out of range 2..{n}")
    if bundle.r_xy == 0:
        raise ValueError("marked-pair resistance r_xy must be positive")
    s = bundle.r_xy
    series = bundle.r_uy + bundle.r_vx + (d - 2) * s
    imbalance = bundle.r_ux + bundle.r_vy - bundle.r_uy - bundle.r_vx - 2 * (d - 1) * s
    return series - imbalance * imbalance / (4 * n * s)


def flower_resistance_same(bundle: BaseResBundle, r_uv: Fraction, n: int) -> Fraction:
    """Resistance between two vertices in the same petal."""
    if bundle.r_xy == 0:
        raise ValueError("marked-pair resistance r_xy must be positive")
    imbalance = bundle.r_ux + bundle.r_vy - bundle.r_uy - bundle.r_vx
    return r_uv - imbalance * imbalance / (4 * n * bundle.r_xy)


def _bundle(table, x: int, y: int, u_pos: int, v_pos: int) -> BaseResBundle:
    return BaseResBundle(
        r_ux=table[u_pos][x],
        r_uy=table[u_pos][y],
        r_vx=table[v_pos][x],
        r_vy=table[v_pos][y],
        r_xy=table[x][y],
    )


def flower_resistance(
    spec: FlowerSpec,
    u: FlowerLocator,
    v: FlowerLocator,
    table: tuple[tuple[Fraction, ...], ...] | None = None,
) -> Fraction:
    """Exact resistance between two located flower vertices.

    Dispatches to the same-petal or cross-petal closed form after
    canonicalizing both locators.  ``table`` may carry precomputed base
    resistances; by default they are derived from the base graph.
    """
    u = canonical_locator(spec, u)
    v = canonical_locator(spec, v)
    if u == v:
        return Fraction(0)
    if table is None:
        table = base_resistance_table(spec.base)
    bundle = _bundle(table, spec.x, spec.y, u.base_vertex, v.base_vertex)
    if u.petal == v.petal:
        return flower_resistance_same(bundle, table[u.base_vertex][v.base_vertex], spec.n)
    # Count petals from u down to v inclusive; in that direction u's petal
    # exits through its y vertex, matching the cross formula's orientation.
    d = (u.petal - v.petal) % spec.n + 1
    return flower_resistance_cross(bundle, d, spec.n)


def normalized_petal_separation(spec: FlowerSpec, u: FlowerLocator, v: FlowerLocator) -> int:
    """Inclusive petal count between two locators, smaller orientation."""
    u = canonical_locator(spec, u)
    v = canonical_locator(spec, v)
    if u.petal == v.petal:
        return 1
    d = (u.petal - v.petal) % spec.n + 1
    return min(d, spec.n - d + 2)


@dataclass(frozen=True)
class MaxResistance:
    value: Fraction
    u: FlowerLocator
    v: FlowerLocator
    d: int


def _all_locators(spec: FlowerSpec) -> list[FlowerLocator]:
    outer = spec.outer_vertices()
    locs = []
    for petal in range(1, spec.n + 1):
        locs.append(FlowerLocator(petal, spec.x, True))
        locs.extend(FlowerLocator(petal, w, False) for w in outer)
    return locs


def max_resistance_search(
    spec: FlowerSpec,
    table: tuple[tuple[Fraction, ...], ...] | None = None,
) -> MaxResistance:
    """Exhaustive maximum resistance over all vertex pairs of the flower.

    Rotating petals is an automorphism, so scanning pairs whose first vertex
    lies in petal 1 covers every pair orbit; ties break toward the
    lexicographically smallest locator pair.  The reported ``d`` is the
    normalized inclusive petal separation (smaller orientation).
    """
    if table is None:
        table = base_resistance_table(spec.base)
    first_petal = [loc for loc in _all_locators(spec) if loc.petal == 1]
    everyone = _all_locators(spec)
    best: MaxResistance | None = None
    for u in first_petal:
        for v in everyone:
            if u == v:
                continue
            value = flower_resistance(spec, u, v, table)
            pair = (u, v) if u <= v else (v, u)
            d = normalized_petal_separation(spec, u, v)
            if (
                best is None
                or value > best.value
                or (value == best.value and pair < (best.u, best.v))
            ):
                best = MaxResistance(value, pair[0], pair[1], d)
    assert best is not None
    return best


def max_diff_sequence(
    base: Graph, x: int, y: int, n_from: int, n_to: int
) -> list[Fraction]:
    """Consecutive differences of the maximum resistance as petals are added.

    Entry ``k`` is ``max(F_{n+1}) - max(F_n)`` for ``n = n_from + k``; the
    sequence converges to a quarter of the base resistance between the marked
    vertices.
    """
    if n_from < 3:
        raise ValueError("petal counts start at 3")
    if n_to < n_from:
        raise ValueError("empty range")
    table = base_resistance_table(base)
    maxima = [
        max_resistance_search(FlowerSpec(base, x, y, n), table).value
        for n in range(n_from, n_to + 1)
    ]
    return [maxima[i + 1] - maxima[i] for i in range(len(maxima) - 1)]


def kirchhoff_bounds(
    spec: FlowerSpec, kf_base: Fraction, r_xy: Fraction
) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on the flower's Kirchhoff index."""
    m = spec.base.vertex_count
    n = spec.n
    lo = n * kf_base - Fraction(m * (m - 1)) * r_xy / 2
    hi = kf_base * (n + n * m * (n - 1)) + r_xy * Fraction((n**3 - n**2) * m * m) / 4
    return lo, hi


def kemeny_bounds(
    spec: FlowerSpec, kem_base: Fraction, r_xy: Fraction
) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on the flower's Kemeny constant."""
    m = spec.base.vertex_count
    n = spec.n
    q = spec.base.edge_count
    lo = kem_base - Fraction(m * (m - 1) ** 3) * r_xy / (2 * n * q)
    hi = kem_base * (4 * n - 1) + r_xy * Fraction(
        (n * n - 3 * n + 2) * (2 * m - 2) ** 2 * m * m, 8 * q
    )
    return lo, hi


def base_kirchhoff(table: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    """Kirchhoff index of the base graph from its resistance table."""
    m = len(table)
    return sum(
        (table[i][j] for i in range(m) for j in range(i + 1, m)), start=Fraction(0)
    )


def base_kemeny(g: Graph, table: tuple[tuple[Fraction, ...], ...]) -> Fraction:
    """Kemeny's constant of the base graph from its resistance table."""
    degrees = g.degrees
    total = Fraction(0)
    for i in range(g.vertex_count):
        for j in range(g.vertex_count):
            total += degrees[i] * degrees[j] * table[i][j]
    return total / (4 * g.edge_count)


def flower_kirchhoff_exact(
    spec: FlowerSpec, table: tuple[tuple[Fraction, ...], ...] | None = None
) -> Fraction:
    """Exact Kirchhoff index by summing the closed form over all pairs.

    Rotation symmetry reduces the sum to pairs anchored in petal 1.
    """
    if table is None:
        table = base_resistance_table(spec.base)
    first_petal = [loc for loc in _all_locators(spec) if loc.petal == 1]
    everyone = _all_locators(spec)
    anchored = Fraction(0)
    for u in first_petal:
        for v in everyone:
            if u != v:
                anchored += flower_resistance(spec, u, v, table)
    return spec.n * anchored / 2


def flower_kemeny_exact(
    spec: FlowerSpec, table: tuple[tuple[Fraction, ...], ...] | None = None
) -> Fraction:
    """Exact Kemeny constant by degree-weighted summation of the closed form."""
    if table is None:
        table = base_resistance_table(spec.base)
    base = spec.base
    junction_degree = base.degree(spec.x) + base.degree(spec.y)

    def degree(loc: FlowerLocator) -> int:
        return junction_degree if loc.is_associated else base.degree(loc.base_vertex)

    first_petal = [loc for loc in _all_locators(spec) if loc.petal == 1]
    everyone = _all_locators(spec)
    anchored = Fraction(0)
    for u in first_petal:
        du = degree(u)
        for v in everyone:
            if u != v:
                anchored += du * degree(v) * flower_resistance(spec, u, v, table)
    # The flower has n * q_base edges; the rotation factor n cancels one n.
    return anchored / (4 * base.edge_count)
