"""Seeded random corpus of polarized metrized graphs shared by the test suites."""

from __future__ import annotations

import random
from fractions import Fraction

from tautheight.calculus import LoopLabel, LoopLabelledGraph
from tautheight.pmgraph import Edge, PolarizedMetrizedGraph, Vertex

SEED = 20240611
CORPUS_SIZE = 120


def random_graph(rng: random.Random, max_vertices: int = 8, max_edges: int = 12, max_genus: int = 5) -> PolarizedMetrizedGraph:
    """A connected graph with K >= 0 and 1 <= g <= max_genus.

    A random spanning tree is grown first, extra edges (possibly loops or
    parallel edges) are added while the Betti number allows, then genus
    marks are raised at vertices where K would be negative and spent at
    random elsewhere.
    """
    while True:
        n = rng.randint(1, max_vertices)
        ids = [f"v{i}" for i in range(n)]

        def length():
            return Fraction(rng.randint(1, 20), rng.randint(1, 20))

        edges = [Edge(ids[rng.randrange(i)], ids[i], length()) for i in range(1, n)]
        extra = rng.randint(0, min(max_edges - len(edges), max_genus))
        for _ in range(extra):
            edges.append(Edge(rng.choice(ids), rng.choice(ids), length()))
        val = {v: 0 for v in ids}
        for e in edges:
            val[e.u] += 1
            val[e.v] += 1
        q = {v: (1 if val[v] < 2 else 0) for v in ids}
        b1 = len(edges) - n + 1
        if b1 + sum(q.values()) == 0:
            q[ids[0]] = 1
        budget = max_genus - b1 - sum(q.values())
        if budget < 0:
            continue
        for _ in range(rng.randint(0, budget)):
            q[rng.choice(ids)] += 1
        rng.shuffle(edges)
        return PolarizedMetrizedGraph(tuple(Vertex(v, q[v]) for v in ids), tuple(edges))


def corpus(size: int = CORPUS_SIZE, seed: int = SEED) -> list[PolarizedMetrizedGraph]:
    rng = random.Random(seed)
    return [random_graph(rng) for _ in range(size)]


LABELS = [LoopLabel.OMEGA, LoopLabel.NEG_OMEGA, LoopLabel.BETA]


def random_loop_graph(rng: random.Random, chi: int, max_vertices: int = 6, first: int = 1) -> LoopLabelledGraph:
    """Random loop-labelled graph with Euler characteristic ``chi``."""
    n = rng.randint(1, max_vertices)
    k = n - chi
    verts = list(range(first, first + n))
    loops, edges = [], []
    for _ in range(k):
        if n == 1 or rng.random() < 0.35:
            loops.append((rng.choice(verts), rng.choice(LABELS)))
        else:
            edges.append(tuple(rng.sample(verts, 2)))
    return LoopLabelledGraph(frozenset(verts), tuple(loops), tuple(edges))
