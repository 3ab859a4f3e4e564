"""Loop-labelled graph calculus for heights of tautological cycles.

The (r+1)-fold self-intersection of

    sum_i m_i^2 w_i - 2 sum_{i<j} m_i m_j D_ij + d sum_i m_i b_i

on X^r is expanded into monomials.  Each monomial is a loop-labelled graph
on the vertex set {1..r}: ``w_i`` and ``b_i`` are loops at ``i`` and
``D_ij`` is an edge.  Intersection numbers are multiplicative over connected
components and invariant under three local contractions, so every monomial
reduces to a product of loop degrees times one of the pairings
<w,w>, <b,w> or the triple diagonal <D,D,D> = <w,w> - Phi.

The result is an :class:`IntersectionVector` in the basis
``(W, Phi, B) = (<w,w>, sum_v phi(X_v) log Nv, <b,w>)`` from which the
universal coefficients ``(a, b, c)`` of the height are read off.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .exact import format_fraction

MAX_RANK = 7
GUARANTEED_RANK = 6


class CapacityError(RuntimeError):
    """The requested expansion exceeds the supported scale."""


class ContractionDefect(RuntimeError):
    """A minimal graph outside the dumbbell / figure-eight / theta list."""


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True, order=True)
class Generator:
    kind: str  # "omega", "delta" or "beta"
    i: int
    j: int = 0

    def __str__(self) -> str:
        if self.kind == "delta":
            return f"Delta({self.i},{self.j})"
        return f"{self.kind.capitalize()}({self.i})"


def Omega(i: int) -> Generator:
    return Generator("omega", i)


def Beta(i: int) -> Generator:
    return Generator("beta", i)


def Delta(i: int, j: int) -> Generator:
    if i == j:
        raise ValueError("Delta needs two distinct indices")
    return Generator("delta", min(i, j), max(i, j))


@dataclass(frozen=True)
class GeneratorSystem:
    g: int
    m: tuple[int, ...]
    d: int
    generators: tuple[tuple[Generator, int], ...]

    @property
    def r(self) -> int:
        return len(self.m)

    def weights(self) -> dict[Generator, int]:
        return dict(self.generators)


def _check_input(m, g: int) -> tuple[int, ...]:
    if isinstance(g, bool) or not isinstance(g, int):
        raise TypeError("g must be an integer")
    if g < 2:
        raise ValueError(f"genus must be at least 2, got g={g}")
    m = tuple(m)
    for x in m:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"entries of m must be integers, got {x!r}")
        if x == 0:
            raise ValueError("entries of m must be non-zero")
    if len(m) > g:
        raise ValueError(f"length of m ({len(m)}) exceeds the genus ({g})")
    return m


def generator_system(m, g: int, *, prune: bool = True) -> GeneratorSystem:
    """Weighted generators for the tuple ``m`` in genus ``g``.

    Generators of weight zero (the beta classes when ``sum(m) == 0``) are
    dropped unless ``prune`` is false.
    """
    m = _check_input(m, g)
    r = len(m)
    d = sum(m)
    gens: list[tuple[Generator, int]] = []
    for i in range(1, r + 1):
        gens.append((Omega(i), m[i - 1] ** 2))
    for i, j in itertools.combinations(range(1, r + 1), 2):
        gens.append((Delta(i, j), -2 * m[i - 1] * m[j - 1]))
    for i in range(1, r + 1):
        gens.append((Beta(i), d * m[i - 1]))
    if prune:
        gens = [(s, w) for s, w in gens if w != 0]
    return GeneratorSystem(g=g, m=m, d=d, generators=tuple(gens))


# ---------------------------------------------------------------------------
# loop-labelled graphs


class LoopLabel(enum.Enum):
    OMEGA = "omega"
    NEG_OMEGA = "-omega"
    BETA = "beta"

    @property
    def sign(self) -> int:
        return -1 if self is LoopLabel.NEG_OMEGA else 1

    @property
    def base(self) -> str:
        return "beta" if self is LoopLabel.BETA else "omega"

    def degree(self, g: int) -> int:
        if self is LoopLabel.OMEGA:
            return 2 * g - 2
        if self is LoopLabel.NEG_OMEGA:
            return 2 - 2 * g
        return 2

    def __lt__(self, other):
        return self.value < other.value


@dataclass(frozen=True)
class LoopLabelledGraph:
    """Multigraph on a fixed vertex set whose loops carry labels.

    ``loops`` and ``edges`` are kept sorted so that equal multisets compare
    equal.  Each edge ``(i, j)`` with ``i < j`` stands for a diagonal class.
    """

    vertices: frozenset
    loops: tuple = ()
    edges: tuple = ()

    def __post_init__(self):
        verts = frozenset(self.vertices)
        loops = tuple(sorted((v, LoopLabel(lab)) for v, lab in self.loops))
        edges = []
        for i, j in self.edges:
            if i == j:
                raise ValueError("use a labelled loop, not an edge, at a single vertex")
            edges.append((min(i, j), max(i, j)))
        edges = tuple(sorted(edges))
        for v, _ in loops:
            if v not in verts:
                raise ValueError(f"loop at unknown vertex {v}")
        for i, j in edges:
            if i not in verts or j not in verts:
                raise ValueError(f"edge {(i, j)} leaves the vertex set")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "loops", loops)
        object.__setattr__(self, "edges", edges)

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.loops) - len(self.edges)

    def degree(self, v) -> int:
        return sum(v in e for e in self.edges) + 2 * sum(w == v for w, _ in self.loops)

    def components(self) -> list["LoopLabelledGraph"]:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for i, j in self.edges:
            a, b = find(i), find(j)
            if a != b:
                parent[a] = b
        groups: dict = {}
        for v in sorted(self.vertices):
            groups.setdefault(find(v), set()).add(v)
        out = []
        for verts in groups.values():
            out.append(
                LoopLabelledGraph(
                    frozenset(verts),
                    tuple(lp for lp in self.loops if lp[0] in verts),
                    tuple(e for e in self.edges if e[0] in verts),
                )
            )
        out.sort(key=lambda c: min(c.vertices))
        return out

    def disjoint_union(self, other: "LoopLabelledGraph") -> "LoopLabelledGraph":
        if self.vertices & other.vertices:
            raise ValueError("vertex sets overlap")
        return LoopLabelledGraph(
            self.vertices | other.vertices,
            self.loops + other.loops,
            self.edges + other.edges,
        )

    def __str__(self) -> str:
        loops = ", ".join(f"{lab.value}@{v}" for v, lab in self.loops)
        edges = ", ".join(f"{i}-{j}" for i, j in self.edges)
        return f"V={sorted(self.vertices)} loops=[{loops}] edges=[{edges}]"


# Named small graphs used throughout the tests and docs.


def dumbbell(sigma: LoopLabel, tau: LoopLabel) -> LoopLabelledGraph:
    return LoopLabelledGraph(frozenset({1, 2}), ((1, sigma), (2, tau)), ((1, 2),))


def figure_eight(sigma: LoopLabel, tau: LoopLabel) -> LoopLabelledGraph:
    return LoopLabelledGraph(frozenset({1}), ((1, sigma), (1, tau)), ())


def theta() -> LoopLabelledGraph:
    return LoopLabelledGraph(frozenset({1, 2}), (), ((1, 2),) * 3)


# ---------------------------------------------------------------------------
# contractions


def _contractions_at(graph: LoopLabelledGraph, v) -> LoopLabelledGraph | None:
    """Apply the unique contraction pivoting on vertex ``v``, if any."""
    if any(w == v for w, _ in graph.loops):
        return None
    incident = [k for k, e in enumerate(graph.edges) if v in e]
    rest_vertices = graph.vertices - {v}
    if len(incident) == 1:
        edges = graph.edges[: incident[0]] + graph.edges[incident[0] + 1 :]
        return LoopLabelledGraph(rest_vertices, graph.loops, edges)
    if len(incident) != 2:
        return None
    e1, e2 = graph.edges[incident[0]], graph.edges[incident[1]]
    i = e1[0] if e1[1] == v else e1[1]
    k = e2[0] if e2[1] == v else e2[1]
    edges = tuple(e for n, e in enumerate(graph.edges) if n not in incident)
    if i != k:
        return LoopLabelledGraph(rest_vertices, graph.loops, edges + ((i, k),))
    return LoopLabelledGraph(
        rest_vertices, graph.loops + ((i, LoopLabel.NEG_OMEGA),), edges
    )


def one_step_contractions(graph: LoopLabelledGraph) -> list[LoopLabelledGraph]:
    """Every graph reachable from ``graph`` by a single contraction."""
    out = []
    for v in sorted(graph.vertices):
        h = _contractions_at(graph, v)
        if h is not None:
            out.append(h)
    return out


def contract_once(graph: LoopLabelledGraph) -> LoopLabelledGraph | None:
    for v in sorted(graph.vertices):
        h = _contractions_at(graph, v)
        if h is not None:
            return h
    return None


def reduce_graph(graph: LoopLabelledGraph) -> LoopLabelledGraph:
    """Contract until no rule applies; the result is componentwise minimal.

    Each step removes one vertex, so at most ``len(graph.vertices)`` steps
    are taken.
    """
    while True:
        h = contract_once(graph)
        if h is None:
            return graph
        graph = h


# ---------------------------------------------------------------------------
# intersection vectors


@dataclass(frozen=True)
class IntersectionVector:
    """``w*<w,w> + p*Phi + b*<b,w>`` with rational coefficients."""

    w: Fraction = Fraction(0)
    p: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("w", "p", "b"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __add__(self, other: "IntersectionVector") -> "IntersectionVector":
        return IntersectionVector(self.w + other.w, self.p + other.p, self.b + other.b)

    def __sub__(self, other: "IntersectionVector") -> "IntersectionVector":
        return IntersectionVector(self.w - other.w, self.p - other.p, self.b - other.b)

    def __neg__(self) -> "IntersectionVector":
        return IntersectionVector(-self.w, -self.p, -self.b)

    def __mul__(self, k) -> "IntersectionVector":
        k = Fraction(k)
        return IntersectionVector(k * self.w, k * self.p, k * self.b)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.w, self.p, self.b)

    @property
    def theta_coefficient(self) -> Fraction:
        """Coefficient of <D,D,D> when the vector is written over (W, T, B)."""
        return -self.p

    def __str__(self) -> str:
        return "(" + ", ".join(format_fraction(x) for x in self.as_tuple()) + ")"


ZERO = IntersectionVector()
W = IntersectionVector(1, 0, 0)
B = IntersectionVector(0, 0, 1)
T = IntersectionVector(1, -1, 0)

_PAIRING = {
    ("omega", "omega"): (1, 0, 0),
    ("omega", "beta"): (0, 0, 1),
    ("beta", "omega"): (0, 0, 1),
    ("beta", "beta"): (0, 0, 0),
}


def pairing(sigma: LoopLabel, tau: LoopLabel) -> tuple[int, int, int]:
    s = sigma.sign * tau.sign
    w, p, b = _PAIRING[(sigma.base, tau.base)]
    return (s * w, s * p, s * b)


# ---------------------------------------------------------------------------
# evaluation


def _minimal_value(comp: LoopLabelledGraph) -> tuple[int, int, int]:
    """Value of a minimal connected graph with chi = -1."""
    nv = len(comp.vertices)
    if nv == 1 and len(comp.loops) == 2 and not comp.edges:
        return pairing(comp.loops[0][1], comp.loops[1][1])
    if nv == 2 and len(comp.loops) == 2 and len(comp.edges) == 1:
        (v1, s1), (v2, s2) = comp.loops
        if v1 != v2:
            return pairing(s1, s2)
    if nv == 2 and not comp.loops and len(comp.edges) == 3:
        return (1, -1, 0)
    raise ContractionDefect(f"unexpected minimal graph with chi=-1: {comp}")


def _unicyclic_degree(comp: LoopLabelledGraph, g: int) -> int:
    # A connected chi=0 graph has one cycle; it contracts to that loop, or to
    # a -omega loop when the cycle is made of ordinary edges.
    if comp.loops:
        return comp.loops[0][1].degree(g)
    return 2 - 2 * g


@lru_cache(maxsize=1 << 16)
def _component_value(comp: LoopLabelledGraph) -> tuple[int, int, int]:
    return _minimal_value(reduce_graph(comp))


def evaluate(graph: LoopLabelledGraph, g: int) -> IntersectionVector:
    """Arithmetic intersection number of a graph with Euler characteristic -1."""
    if graph.euler_characteristic != -1:
        raise ValueError("arithmetic evaluation needs Euler characteristic -1")
    vec = _evaluate_int(graph, g)
    return IntersectionVector(*vec) if vec is not None else ZERO


def _evaluate_int(graph: LoopLabelledGraph, g: int) -> tuple[int, int, int] | None:
    scalar = 1
    vec = None
    for comp in graph.components():
        chi = comp.euler_characteristic
        if chi >= 1:
            return None
        if chi == 0:
            scalar *= _unicyclic_degree(comp, g)
        elif chi == -1 and vec is None:
            vec = _component_value(comp)
        else:
            return None
    if vec is None:
        return None
    return (scalar * vec[0], scalar * vec[1], scalar * vec[2])


def evaluate_by_reduction(graph: LoopLabelledGraph, g: int) -> IntersectionVector:
    """Same as :func:`evaluate` but reduces every component literally."""
    if graph.euler_characteristic != -1:
        raise ValueError("arithmetic evaluation needs Euler characteristic -1")
    scalar = 1
    vec = None
    for comp in reduce_graph(graph).components():
        chi = comp.euler_characteristic
        if chi == 1:
            return ZERO
        if chi == 0:
            (_, label), = comp.loops
            scalar *= label.degree(g)
        elif chi == -1:
            if vec is not None:
                return ZERO
            vec = _minimal_value(comp)
        else:
            return ZERO
    return IntersectionVector(*vec) * scalar


def evaluate_geometric(graph: LoopLabelledGraph, g: int) -> int:
    """Geometric intersection number of a graph with Euler characteristic 0."""
    if graph.euler_characteristic != 0:
        raise ValueError("geometric evaluation needs Euler characteristic 0")
    value = 1
    for comp in graph.components():
        if comp.euler_characteristic != 0:
            return 0
        value *= _unicyclic_degree(comp, g)
    return value


# ---------------------------------------------------------------------------
# expansion


def _graph_from_multiset(gens: list[Generator], vertices: frozenset) -> LoopLabelledGraph:
    loops = []
    edges = []
    for s in gens:
        if s.kind == "delta":
            edges.append((s.i, s.j))
        elif s.kind == "omega":
            loops.append((s.i, LoopLabel.OMEGA))
        else:
            loops.append((s.i, LoopLabel.BETA))
    return LoopLabelledGraph(vertices, tuple(loops), tuple(edges))


def _multiset_coefficient(counts, weights) -> int:
    n = sum(counts)
    coeff = factorial(n)
    for k in counts:
        coeff //= factorial(k)
    for k, w in zip(counts, weights):
        coeff *= w**k
    return coeff


def expand(system: GeneratorSystem, n: int) -> Iterator[tuple[LoopLabelledGraph, int]]:
    """Monomials of ``(sum_s q(s) s)^n`` as (graph, multinomial coefficient)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    vertices = frozenset(range(1, system.r + 1))
    gens = [(s, w) for s, w in system.generators if w != 0]
    for combo in itertools.combinations_with_replacement(range(len(gens)), n):
        counts = Counter(combo)
        coeff = _multiset_coefficient(
            list(counts.values()), [gens[i][1] for i in counts]
        )
        yield _graph_from_multiset([gens[i][0] for i in combo], vertices), coeff


def term_count(system: GeneratorSystem, n: int) -> int:
    k = sum(1 for _, w in system.generators if w != 0)
    if k == 0:
        return 1 if n == 0 else 0
    return comb(k + n - 1, n)


def _check_capacity(r: int) -> None:
    if r > MAX_RANK:
        raise CapacityError(
            f"r={r} exceeds the supported expansion size (r <= {MAX_RANK})"
        )


def _ordered_generators(system: GeneratorSystem) -> list[tuple[Generator, int]]:
    # Block i holds Omega(i), Beta(i) and Delta(i, j>i); once block i is
    # done, no later generator touches vertex i.
    gens = [(s, w) for s, w in system.generators if w != 0]
    return sorted(gens, key=lambda sw: (sw[0].i, sw[0].kind != "omega", sw[0].kind != "beta", sw[0].j))


class _Kernel:
    """Depth-first expansion of ``(sum q(s) s)^n`` with integer evaluation.

    Multiplicities are chosen generator by generator.  A vertex that is still
    uncovered after its last generator has been decided forms a chi = 1
    component, so the whole subtree vanishes and is skipped.
    """

    def __init__(self, system: GeneratorSystem, n: int, *, geometric: bool = False):
        self.geometric = geometric
        self.g = system.g
        self.r = system.r
        self.n = n
        self.gens = _ordered_generators(system)
        self.closes = []
        last_touch = {}
        for idx, (s, _) in enumerate(self.gens):
            last_touch[s.i] = idx
            if s.kind == "delta":
                last_touch[s.j] = max(last_touch.get(s.j, -1), idx)
        for idx in range(len(self.gens)):
            self.closes.append([v for v, t in last_touch.items() if t == idx])
        self.untouchable = [v for v in range(1, self.r + 1) if v not in last_touch]
        self.cache: dict = {}
        self.fact = [factorial(k) for k in range(n + 1)]

    def total(self, first_counts=None) -> tuple[int, int, int]:
        if self.untouchable or not self.gens:
            return (0, 0, 0)
        self.acc = [0, 0, 0]
        self.counts = [0] * len(self.gens)
        self.cover = [0] * (self.r + 1)
        choices = range(self.n + 1) if first_counts is None else first_counts
        self._descend(0, self.n, self.fact[self.n], choices)
        return tuple(self.acc)

    def _descend(self, idx, left, coeff, choices=None):
        gens = self.gens
        if idx == len(gens) - 1:
            options = (left,) if choices is None else [c for c in choices if c == left]
        else:
            options = range(left + 1) if choices is None else [c for c in choices if c <= left]
        s, w = gens[idx]
        for c in options:
            if c:
                self.cover[s.i] += c
                if s.kind == "delta":
                    self.cover[s.j] += c
            if all(self.cover[v] for v in self.closes[idx]):
                self.counts[idx] = c
                term = coeff // self.fact[c] * w**c
                if idx == len(gens) - 1:
                    self._leaf(term)
                else:
                    self._descend(idx + 1, left - c, term)
            if c:
                self.cover[s.i] -= c
                if s.kind == "delta":
                    self.cover[s.j] -= c
        self.counts[idx] = 0

    def _leaf(self, coeff):
        gens = self.gens
        counts = self.counts
        active = [k for k, c in enumerate(counts) if c]
        adj = [0] * (self.r + 1)
        for k in active:
            s = gens[k][0]
            if s.kind == "delta":
                adj[s.i] |= 1 << s.j
                adj[s.j] |= 1 << s.i
        comps = []
        seen = 0
        for v in range(1, self.r + 1):
            bit = 1 << v
            if seen & bit:
                continue
            mask = frontier = bit
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                new = adj[low.bit_length() - 1] & ~mask
                mask |= new
                frontier |= new
            seen |= mask
            comps.append(mask)
        scalar = coeff
        hot = None
        for mask in comps:
            chi = bin(mask).count("1")
            label = None
            for k in active:
                s = gens[k][0]
                if mask >> s.i & 1:
                    chi -= counts[k]
                    if label is None and s.kind != "delta":
                        label = s.kind
            if chi == 0:
                if label == "omega":
                    scalar *= 2 * self.g - 2
                elif label == "beta":
                    scalar *= 2
                else:
                    scalar *= 2 - 2 * self.g
            elif chi == -1 and hot is None and not self.geometric:
                hot = mask
            else:
                return
        if self.geometric:
            self.acc[0] += scalar
            return
        if hot is None:
            return
        key = tuple((k, counts[k]) for k in active if hot >> gens[k][0].i & 1)
        val = self.cache.get(key)
        if val is None:
            loops = []
            edges = []
            for k in active:
                s = gens[k][0]
                if not hot >> s.i & 1:
                    continue
                if s.kind == "delta":
                    edges.extend([(s.i, s.j)] * counts[k])
                else:
                    label = LoopLabel.OMEGA if s.kind == "omega" else LoopLabel.BETA
                    loops.extend([(s.i, label)] * counts[k])
            verts = frozenset(v for v in range(1, self.r + 1) if hot >> v & 1)
            val = _component_value(LoopLabelledGraph(verts, tuple(loops), tuple(edges)))
            self.cache[key] = val
        self.acc[0] += scalar * val[0]
        self.acc[1] += scalar * val[1]
        self.acc[2] += scalar * val[2]


def _partial_sum(args) -> tuple[int, int, int]:
    system, n, first_counts = args
    return _Kernel(system, n).total(first_counts)


def _accumulate(system: GeneratorSystem, n: int, workers: int) -> tuple[int, int, int]:
    if workers <= 1:
        return _Kernel(system, n).total()
    # partition on the multiplicity of the first generator
    jobs = [(system, n, (c,)) for c in range(n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_partial_sum, jobs))
    return (
        sum(p[0] for p in parts),
        sum(p[1] for p in parts),
        sum(p[2] for p in parts),
    )


def expansion_sum(system: GeneratorSystem, *, workers: int = 1) -> IntersectionVector:
    """``sum coeff * evaluate`` over the arithmetic expansion of any weighted system."""
    _check_capacity(system.r)
    return IntersectionVector(*_accumulate(system, system.r + 1, workers))


def expansion_sum_reference(system: GeneratorSystem, n: int) -> IntersectionVector:
    """Plain sum over :func:`expand` with :func:`evaluate_by_reduction`."""
    total = ZERO
    for graph, coeff in expand(system, n):
        total = total + evaluate_by_reduction(graph, system.g) * coeff
    return total


def arithmetic_intersection(m, g: int, *, workers: int = 1) -> IntersectionVector:
    """Top arithmetic self-intersection of the pulled-back polarization class."""
    system = generator_system(m, g)
    _check_capacity(system.r)
    return IntersectionVector(*_accumulate(system, system.r + 1, workers))


def geometric_degree(m, g: int) -> int:
    """Geometric self-intersection ``2^r deg(f) deg_L(Z)`` of the class on X^r."""
    system = generator_system(m, g)
    _check_capacity(system.r)
    total = 0
    if system.r == 0:
        total = 1
    else:
        total = _Kernel(system, system.r, geometric=True).total()[0]
    if total <= 0:
        raise ContractionDefect(f"non-positive geometric degree {total} for m={m}, g={g}")
    return total


@dataclass(frozen=True)
class HeightCoefficients:
    """``h'(Z) = (a W + b Phi)/[k:Q] + c h'(x_alpha)`` for the cycle ``Z_{m,alpha}``."""

    m: tuple[int, ...]
    g: int
    a: Fraction
    b: Fraction
    c: Fraction
    geometric_degree: int
    arithmetic_vector: IntersectionVector = field(default=ZERO)

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    def identity(self) -> str:
        inner = _signed_sum([(self.a, "<w,w>"), (self.b, "sum_v phi(X_v) log Nv")])
        return f"h'_L(Z_m,alpha) = (1/[k:Q]) * ({inner}) + {format_fraction(self.c)} * h'_L(x_alpha)"


def _signed_sum(terms) -> str:
    out = ""
    for coeff, symbol in terms:
        text = f"{format_fraction(abs(coeff))} * {symbol}"
        if not out:
            out = text if coeff >= 0 else "-" + text
        else:
            out += (" + " if coeff >= 0 else " - ") + text
    return out


def height_coefficients(m, g: int, *, workers: int = 1) -> HeightCoefficients:
    m = _check_input(m, g)
    r = len(m)
    if r == 0:
        return HeightCoefficients(m, g, Fraction(0), Fraction(0), Fraction(0), 1, ZERO)
    vec = arithmetic_intersection(m, g, workers=workers)
    G = geometric_degree(m, g)
    denom = 2 * (r + 1) * G
    a = (vec.w + vec.b / (2 * g - 2)) / denom
    b = vec.p / denom
    c = (2 * g - 2) * vec.b / ((r + 1) * G)
    return HeightCoefficients(m, g, a, b, c, G, vec)
