"""Polarized metrized graphs and their exact invariants.

A graph is given by vertices carrying genus marks ``q(v) >= 0`` and edges of
positive rational length; the polarization is ``K(v) = 2q(v) - 2 + val(v)``.

Everything is driven by one exact primitive, effective resistance.  To reach
interior points each edge is cut into four equal pieces; the resulting
network is inverted once by fraction-free elimination, which gives
``r(x, y)`` between all vertices, edge midpoints and quarter points.  Every
integrand met below is quadratic on each half-edge, so the composite
three-point rule over the two halves of an edge is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Mapping, Sequence

from .exact import format_fraction
from .linalg import scaled_inverse


class GraphValidationError(ValueError):
    """The data does not describe a valid polarized metrized graph."""


@dataclass(frozen=True)
class Vertex:
    id: str
    q: int = 0


@dataclass(frozen=True)
class Edge:
    u: str
    v: str
    length: Fraction

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


def _components(n: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return [find(a) for a in range(n)]


@dataclass(frozen=True)
class PolarizedMetrizedGraph:
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        verts = tuple(v if isinstance(v, Vertex) else Vertex(*v) for v in self.vertices)
        edges = tuple(
            Edge(e.u, e.v, Fraction(e.length)) if isinstance(e, Edge) else Edge(e[0], e[1], Fraction(e[2]))
            for e in self.edges
        )
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        if not verts:
            raise GraphValidationError("graph has no vertices")
        seen = set()
        for v in verts:
            if v.id in seen:
                raise GraphValidationError(f"duplicate vertex id {v.id!r}")
            seen.add(v.id)
            if isinstance(v.q, bool) or not isinstance(v.q, int) or v.q < 0:
                raise GraphValidationError(f"genus mark of {v.id!r} must be a nonnegative integer")
        for e in edges:
            for end in (e.u, e.v):
                if end not in seen:
                    raise GraphValidationError(f"edge refers to unknown vertex {end!r}")
            if e.length <= 0:
                raise GraphValidationError(f"nonpositive length {format_fraction(e.length)} on edge {e.u}-{e.v}")
        idx = self.index
        roots = _components(len(verts), ((idx[e.u], idx[e.v]) for e in edges))
        if len(set(roots)) > 1:
            raise GraphValidationError("graph is disconnected")
        for v in verts:
            if self.K(v.id) < 0:
                raise GraphValidationError(f"K(v) < 0 at vertex {v.id!r} (K = {self.K(v.id)})")

    @classmethod
    def build(cls, vertices: Iterable, edges: Iterable) -> PolarizedMetrizedGraph:
        """Convenience constructor from ``(id, q)`` and ``(u, v, length)`` tuples."""
        return cls(tuple(vertices), tuple(edges))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v.id: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _valence(self) -> dict[str, int]:
        val = {v.id: 0 for v in self.vertices}
        for e in self.edges:
            val[e.u] += 1
            val[e.v] += 1
        return val

    def valence(self, v: str) -> int:
        return self._valence[v]

    def q(self, v: str) -> int:
        return self.vertices[self.index[v]].q

    def K(self, v: str) -> int:
        return 2 * self.q(v) - 2 + self.valence(v)

    @property
    def b1(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    @property
    def genus(self) -> int:
        return self.b1 + sum(v.q for v in self.vertices)

    @property
    def total_length(self) -> Fraction:
        return sum((e.length for e in self.edges), Fraction(0))

    @property
    def is_tree(self) -> bool:
        return self.b1 == 0

    def scaled(self, factor) -> PolarizedMetrizedGraph:
        factor = Fraction(factor)
        return PolarizedMetrizedGraph(self.vertices, tuple(Edge(e.u, e.v, e.length * factor) for e in self.edges))


def circle(length, q: int = 0) -> PolarizedMetrizedGraph:
    return PolarizedMetrizedGraph((Vertex("v", q),), (Edge("v", "v", Fraction(length)),))


def bridge(length, q: tuple[int, int] = (1, 1)) -> PolarizedMetrizedGraph:
    return PolarizedMetrizedGraph(
        (Vertex("a", q[0]), Vertex("b", q[1])), (Edge("a", "b", Fraction(length)),)
    )


def theta_network(lengths: Sequence = (1, 1, 1)) -> PolarizedMetrizedGraph:
    return PolarizedMetrizedGraph(
        (Vertex("a"), Vertex("b")), tuple(Edge("a", "b", Fraction(x)) for x in lengths)
    )


def subdivide(G: PolarizedMetrizedGraph, edge: int, t, new_id: str | None = None) -> PolarizedMetrizedGraph:
    """Insert a genus-0 vertex at arclength ``t`` from ``edges[edge].u``."""
    t = Fraction(t)
    e = G.edges[edge]
    if not 0 < t < e.length:
        raise ValueError(f"subdivision point {format_fraction(t)} outside (0, {format_fraction(e.length)})")
    if new_id is None:
        base = f"{e.u}~{e.v}@{format_fraction(t)}"
        new_id, k = base, 1
        while new_id in G.index:
            k += 1
            new_id = f"{base}#{k}"
    elif new_id in G.index:
        raise ValueError(f"vertex id {new_id!r} already in use")
    edges = list(G.edges)
    edges[edge : edge + 1] = [Edge(e.u, new_id, t), Edge(new_id, e.v, e.length - t)]
    return PolarizedMetrizedGraph(G.vertices + (Vertex(new_id, 0),), tuple(edges))


# ---------------------------------------------------------------------------
# resistance


class _Network:
    """All-pairs effective resistance of a connected resistor network."""

    def __init__(self, n: int, resistors: Sequence[tuple[int, int, Fraction]]):
        self.n = n
        scale = lcm(*(Fraction(L).numerator for _, _, L in resistors)) if resistors else 1
        lap = [[0] * n for _ in range(n)]
        for a, b, L in resistors:
            if a == b:
                continue
            L = Fraction(L)
            c = scale * L.denominator // L.numerator
            lap[a][a] += c
            lap[b][b] += c
            lap[a][b] -= c
            lap[b][a] -= c
        reduced = [row[1:] for row in lap[1:]]
        adj, d = scaled_inverse(reduced)
        self._adj = [[0] * n] + [[0] + row for row in adj]
        self._num = scale
        self._den = d

    def __call__(self, a: int, b: int) -> Fraction:
        if a == b:
            return Fraction(0)
        m = self._adj
        return Fraction(self._num * (m[a][a] + m[b][b] - 2 * m[a][b]), self._den)


def _vertex_network(G: PolarizedMetrizedGraph, skip: int | None = None) -> _Network:
    idx = G.index
    return _Network(
        len(G.vertices),
        [(idx[e.u], idx[e.v], e.length) for k, e in enumerate(G.edges) if k != skip],
    )


def vertex_resistance(G: PolarizedMetrizedGraph, u: str, v: str) -> Fraction:
    return _engine(G).r(G.index[u], G.index[v])


def is_bridge(G: PolarizedMetrizedGraph, edge: int) -> bool:
    e = G.edges[edge]
    if e.is_loop:
        return False
    idx = G.index
    roots = _components(
        len(G.vertices), ((idx[f.u], idx[f.v]) for k, f in enumerate(G.edges) if k != edge)
    )
    return roots[idx[e.u]] != roots[idx[e.v]]


# ---------------------------------------------------------------------------
# measures


@dataclass(frozen=True)
class Measure:
    """Point masses at vertices plus a constant density on each edge."""

    point_masses: Mapping[str, Fraction]
    densities: tuple[Fraction, ...]

    def total_mass(self, G: PolarizedMetrizedGraph) -> Fraction:
        total = sum(self.point_masses.values(), Fraction(0))
        return total + sum((d * e.length for d, e in zip(self.densities, G.edges)), Fraction(0))

    def __add__(self, other: Measure) -> Measure:
        keys = set(self.point_masses) | set(other.point_masses)
        masses = {k: self.point_masses.get(k, Fraction(0)) + other.point_masses.get(k, Fraction(0)) for k in keys}
        return Measure(masses, tuple(a + b for a, b in zip(self.densities, other.densities)))

    def __rmul__(self, c) -> Measure:
        c = Fraction(c)
        return Measure({k: c * x for k, x in self.point_masses.items()}, tuple(c * x for x in self.densities))

    def __sub__(self, other: Measure) -> Measure:
        return self + (-1) * other


def canonical_measure(G: PolarizedMetrizedGraph) -> Measure:
    return _engine(G).mu_can


def admissible_measure(G: PolarizedMetrizedGraph) -> Measure:
    return _engine(G).mu_a


def divisor_measure(G: PolarizedMetrizedGraph) -> Measure:
    """The point measure delta_K."""
    return Measure({v.id: Fraction(G.K(v.id)) for v in G.vertices}, tuple(Fraction(0) for _ in G.edges))


# ---------------------------------------------------------------------------
# Green's function


@dataclass(frozen=True)
class EdgeQuadratic:
    """``c0 + c1 t + c2 t^2`` for ``t`` in ``[0, length]``."""

    c0: Fraction
    c1: Fraction
    c2: Fraction
    length: Fraction

    @classmethod
    def from_values(cls, start, middle, end, length) -> EdgeQuadratic:
        L = Fraction(length)
        c2 = 2 * (start - 2 * middle + end) / L**2
        c1 = (end - start) / L - c2 * L
        return cls(Fraction(start), c1, c2, L)

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        return self.c0 + t * (self.c1 + t * self.c2)

    def __str__(self) -> str:
        return f"{format_fraction(self.c0)} + {format_fraction(self.c1)}*t + {format_fraction(self.c2)}*t^2"


class _Engine:
    """Sampled network: vertices, then three quarter points per edge."""

    def __init__(self, G: PolarizedMetrizedGraph):
        self.G = G
        self.n = n = len(G.vertices)
        idx = G.index
        resistors = []
        self.stations: list[tuple[int, int, int, int, int]] = []
        for k, e in enumerate(G.edges):
            piece = e.length / 4
            a, b = idx[e.u], idx[e.v]
            chain = [a, n + 3 * k, n + 3 * k + 1, n + 3 * k + 2, b]
            self.stations.append(tuple(chain))
            resistors.extend((chain[s], chain[s + 1], piece) for s in range(4))
        self.size = n + 3 * len(G.edges)
        net = _Network(self.size, resistors)
        self.R = [[net(a, b) for b in range(self.size)] for a in range(self.size)]

    def r(self, a: int, b: int) -> Fraction:
        return self.R[a][b]

    def integrate(self, mu: Measure, f: Sequence[Fraction], *, halves: bool = False) -> Fraction:
        """Integral against ``mu`` of a function sampled at the stations.

        By default ``f`` must be quadratic on each edge and only its values
        at vertices and midpoints are read.  With ``halves=True`` it need
        only be quadratic on each half-edge and quarter points are used.
        """
        idx = self.G.index
        total = sum((m * f[idx[v]] for v, m in mu.point_masses.items()), Fraction(0))
        for e, dens, st in zip(self.G.edges, mu.densities, self.stations):
            if not dens:
                continue
            if halves:
                s = f[st[0]] + 4 * f[st[1]] + 2 * f[st[2]] + 4 * f[st[3]] + f[st[4]]
                total += dens * e.length * s / 12
            else:
                total += dens * e.length * (f[st[0]] + 4 * f[st[2]] + f[st[4]]) / 6
        return total

    @cached_property
    def nodes(self) -> list[int]:
        """Vertices and edge midpoints: where theta and g_mu(x, x) are sampled."""
        return list(range(self.n)) + [st[2] for st in self.stations]

    @cached_property
    def bridges(self) -> tuple[bool, ...]:
        return tuple(is_bridge(self.G, k) for k in range(len(self.G.edges)))

    @cached_property
    def mu_can(self) -> Measure:
        G = self.G
        masses = {v.id: 1 - Fraction(G.valence(v.id), 2) for v in G.vertices}
        dens = []
        for k, e in enumerate(G.edges):
            if self.bridges[k]:
                dens.append(Fraction(0))
            elif e.is_loop:
                dens.append(1 / e.length)
            else:
                rest = _vertex_network(G, skip=k)(G.index[e.u], G.index[e.v])
                dens.append(1 / (e.length + rest))
        return Measure(masses, tuple(dens))

    @cached_property
    def mu_a(self) -> Measure:
        g = self.G.genus
        return Fraction(1, 2 * g) * (divisor_measure(self.G) + 2 * self.mu_can)

    @cached_property
    def theta(self) -> list[Fraction | None]:
        out: list[Fraction | None] = [None] * self.size
        for x in self.nodes:
            out[x] = self.integrate(self.mu_a, self.R[x], halves=True)
        return out

    @cached_property
    def C(self) -> Fraction:
        return self.integrate(self.mu_a, self.theta) / 2

    @cached_property
    def diagonal(self) -> list[Fraction | None]:
        return [None if t is None else t - self.C for t in self.theta]

    def green(self, x: int, y: int) -> Fraction:
        return (self.theta[x] + self.theta[y] - self.R[x][y]) / 2 - self.C

    def tau_at(self, x: int) -> Fraction:
        return self.integrate(self.mu_can, self.R[x], halves=True) / 2

    @cached_property
    def epsilon(self) -> Fraction:
        g = self.G.genus
        return self.integrate((2 * g - 2) * self.mu_a + divisor_measure(self.G), self.diagonal)

    @cached_property
    def epsilon_dual(self) -> Fraction:
        G = self.G
        return sum((G.K(v.id) * self.theta[G.index[v.id]] for v in G.vertices), Fraction(0))

    @cached_property
    def phi(self) -> Fraction:
        G = self.G
        g = G.genus
        mu = (10 * g + 2) * self.mu_a - divisor_measure(G)
        return -G.total_length / 4 + self.integrate(mu, self.diagonal) / 4

    @cached_property
    def delta_i(self) -> dict[int, Fraction]:
        G = self.G
        g = G.genus
        out = {i: Fraction(0) for i in range(g // 2 + 1)}
        idx = G.index
        for k, e in enumerate(G.edges):
            if not self.bridges[k]:
                out[0] += e.length
                continue
            roots = _components(
                len(G.vertices), ((idx[f.u], idx[f.v]) for j, f in enumerate(G.edges) if j != k)
            )
            side = roots[idx[e.u]]
            nv = sum(1 for r in roots if r == side)
            ne = sum(1 for j, f in enumerate(G.edges) if j != k and roots[idx[f.u]] == side)
            part = ne - nv + 1 + sum(v.q for v in G.vertices if roots[idx[v.id]] == side)
            out[min(part, g - part)] += e.length
        return out


@lru_cache(maxsize=32)
def _engine(G: PolarizedMetrizedGraph) -> _Engine:
    return _Engine(G)


def green_diagonal(G: PolarizedMetrizedGraph) -> list[EdgeQuadratic]:
    """``g_mu(x, x)`` on each edge, parametrized from ``edge.u``."""
    eng = _engine(G)
    diag = eng.diagonal
    return [
        EdgeQuadratic.from_values(diag[st[0]], diag[st[2]], diag[st[4]], e.length)
        for e, st in zip(G.edges, eng.stations)
    ]


def green_value(G: PolarizedMetrizedGraph, x: str, y: str) -> Fraction:
    """``g_mu(x, y)`` for two vertices; subdivide first to reach interior points."""
    return _engine(G).green(G.index[x], G.index[y])


def green_mass(G: PolarizedMetrizedGraph, x: str) -> Fraction:
    """``integral of g_mu(x, y) d mu_a(y)``; zero by normalization."""
    eng = _engine(G)
    xi = G.index[x]
    values = [None] * eng.size
    for y in eng.nodes:
        values[y] = eng.green(xi, y)
    return eng.integrate(eng.mu_a, values)


def tau(G: PolarizedMetrizedGraph, base: str | None = None) -> Fraction:
    eng = _engine(G)
    return eng.tau_at(0 if base is None else G.index[base])


def epsilon_dual(G: PolarizedMetrizedGraph) -> Fraction:
    """epsilon as the double integral of r against delta_K and mu_a."""
    return _engine(G).epsilon_dual


def moriwaki_epsilon(G: PolarizedMetrizedGraph, x: str) -> Fraction:
    """``2g g_mu(x, K) + r(x, K)``, which must equal epsilon for every x."""
    eng = _engine(G)
    xi = G.index[x]
    g = G.genus
    total = Fraction(0)
    for v in G.vertices:
        vi = G.index[v.id]
        total += G.K(v.id) * (2 * g * eng.green(xi, vi) + eng.r(xi, vi))
    return total


@dataclass(frozen=True)
class InvariantReport:
    genus: int
    delta: Fraction
    tau: Fraction
    epsilon: Fraction
    phi: Fraction
    alpha: Fraction
    delta_i: dict[int, Fraction] = field(default_factory=dict)

    def as_dict(self) -> dict[str, object]:
        return {
            "genus": self.genus,
            "delta": format_fraction(self.delta),
            "tau": format_fraction(self.tau),
            "epsilon": format_fraction(self.epsilon),
            "phi": format_fraction(self.phi),
            "alpha": format_fraction(self.alpha),
            "delta_i": {str(i): format_fraction(x) for i, x in sorted(self.delta_i.items())},
        }

    def lines(self) -> list[str]:
        out = [f"genus = {self.genus}"]
        for name in ("delta", "tau", "epsilon", "phi", "alpha"):
            out.append(f"{name} = {format_fraction(getattr(self, name))}")
        for i, x in sorted(self.delta_i.items()):
            out.append(f"delta_{i} = {format_fraction(x)}")
        return out


def invariants(G: PolarizedMetrizedGraph) -> InvariantReport:
    # K >= 0 on a connected graph forces g >= 1, so epsilon and phi are defined.
    eng = _engine(G)
    delta = G.total_length
    t = eng.tau_at(0)
    return InvariantReport(
        genus=G.genus,
        delta=delta,
        tau=t,
        epsilon=eng.epsilon,
        phi=eng.phi,
        alpha=delta / 8 - t / 2,
        delta_i=dict(eng.delta_i),
    )


def cinkir_constant(g: int) -> Fraction:
    if g < 2:
        raise ValueError("the bound is stated for g >= 2")
    if g == 2:
        return Fraction(1, 27)
    return Fraction((g - 1) ** 2, 2 * g * (7 * g + 5))


def cinkir_lower_bound(report: InvariantReport) -> Fraction:
    g = report.genus
    bound = cinkir_constant(g) * report.delta_i.get(0, Fraction(0))
    for i, x in report.delta_i.items():
        if i >= 1:
            bound += Fraction(2 * i * (g - i), g) * x
    return bound
