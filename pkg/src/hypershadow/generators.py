"""Constructors for the bowtie, octahedron, hyperstar and windmill families,
plus seeded random connected k-graphs and k-cylinders for property tests."""

from __future__ import annotations

from math import comb
from typing import Literal, Sequence

import numpy as np

from .errors import InfeasibleParameters, ValidationError
from .hypergraph import Hypergraph, Multigraph, Partition, new_hypergraph, new_multigraph

__all__ = [
    "pleated_bowtie",
    "bowtie_partition",
    "modified_octahedron",
    "hyperstar",
    "windmill",
    "random_connected_kgraph",
    "random_kcylinder",
    "OCTAHEDRON_SWAP",
]

BowtieConvention = Literal["eigenconsistent", "as_printed"]

# t<->b, p<->q, r<->s carries the red octahedron onto the corrected blue one
OCTAHEDRON_SWAP = {"t": "b", "b": "t", "p": "q", "q": "p", "r": "s", "s": "r", "u": "u"}

_OCTAHEDRON_EDGES = {
    "red": [("t", "p", "q"), ("t", "r", "s"), ("b", "q", "r"), ("b", "p", "s"), ("u", "p", "q")],
    "blue": [("t", "q", "r"), ("t", "p", "s"), ("b", "p", "q"), ("b", "r", "s"), ("u", "p", "q")],
    "blue_as_printed": [
        ("t", "p", "r"), ("t", "p", "s"), ("b", "p", "q"), ("b", "r", "s"), ("u", "p", "q"),
    ],
}


def pleated_bowtie(t: int, convention: BowtieConvention = "eigenconsistent") -> Hypergraph:
    """The t-pleated bowtie 3-graph.

    Right wing: ``[c,r1,r2]`` plus ``[r1,r2,rj]`` for j = 3..t+2.  The left fan
    is ``[c,l1,lj]`` for j = 2..t+2 under ``eigenconsistent`` (t+1 blades, the
    structure behind the bowtie eigenequations), or j = 2..t+1 under
    ``as_printed`` (t blades, the literal edge display once its repeated
    ``[c,l1,l2]`` is removed).  The ``as_printed`` edge list keeps that repeat,
    so ``duplicates`` is 1 whenever t >= 1.
    """
    if t < 0:
        raise ValidationError(f"t must be >= 0, got {t}")
    edges = [("c", "r1", "r2")]
    edges += [("r1", "r2", f"r{j}") for j in range(3, t + 3)]
    if convention == "eigenconsistent":
        edges += [("c", "l1", f"l{j}") for j in range(2, t + 3)]
    elif convention == "as_printed":
        edges += [("c", "l1", "l2")]
        edges += [("c", "l1", f"l{i + 1}") for i in range(1, t + 1)]
    else:
        raise ValueError(f"unknown bowtie convention {convention!r}")
    return new_hypergraph(3, edges)


def bowtie_partition(H: Hypergraph) -> Partition:
    """3-coloring of an eigenconsistent bowtie: {c, r3..}, {r1, l2..}, {r2, l1}."""
    classes: list[list[str]] = [[], [], []]
    for lab in H.labels:
        if lab == "c" or (lab[0] == "r" and int(lab[1:]) >= 3):
            classes[0].append(lab)
        elif lab == "r1" or (lab[0] == "l" and int(lab[1:]) >= 2):
            classes[1].append(lab)
        else:
            classes[2].append(lab)
    return Partition.from_labels(H, classes)


def modified_octahedron(variant: str = "red") -> Hypergraph:
    """Red or blue faces of the octahedron on {t,b,p,q,r,s} plus the edge [u,p,q].

    ``blue`` is the face set complementary to ``red`` (co-umbral with it);
    ``blue_as_printed`` is the literal alternative listing, whose shadow differs.
    """
    try:
        edges = _OCTAHEDRON_EDGES[variant]
    except KeyError:
        raise ValueError(f"unknown octahedron variant {variant!r}") from None
    return new_hypergraph(3, edges)


def hyperstar(eta: int, k: int) -> Hypergraph:
    """eta k-edges sharing vertex 1: ``[1, (i-1)(k-1)+2, ..., (i-1)(k-1)+k]``."""
    if eta < 1 or k < 2:
        raise ValidationError(f"need eta >= 1 and k >= 2, got eta={eta}, k={k}")
    edges = [
        [1] + list(range((i - 1) * (k - 1) + 2, (i - 1) * (k - 1) + k + 1))
        for i in range(1, eta + 1)
    ]
    return new_hypergraph(k, edges)


def windmill(eta: int, k: int) -> Multigraph:
    """W(eta, k): eta copies of K_k each fully joined to center vertex 1.

    Labels follow :func:`hyperstar` so that ``windmill(eta, k - 1)`` equals
    ``clique_shadow(hyperstar(eta, k))``.
    """
    if eta < 1 or k < 1:
        raise ValidationError(f"need eta >= 1 and k >= 1, got eta={eta}, k={k}")
    pairs = []
    for i in range(eta):
        blade = ["1"] + [str(i * k + j) for j in range(2, k + 2)]
        pairs += [(a, b) for x, a in enumerate(blade) for b in blade[x + 1:]]
    return new_multigraph(pairs)


def random_connected_kgraph(n: int, m: int, k: int, seed: int) -> Hypergraph:
    """Seeded connected k-graph on labels 0..n-1 with exactly m edges.

    A random spanning sequence comes first: vertices are shuffled, the first k
    form an edge, and every later edge takes up to k-1 uncovered vertices and
    fills the rest with already-covered ones.  The remaining edges are uniform
    k-subsets drawn by rejection until m distinct edges exist.
    """
    if k < 2 or n < k:
        raise InfeasibleParameters(f"need n >= k >= 2, got n={n}, k={k}")
    spanning = -(-(n - 1) // (k - 1))
    if m < spanning or m > comb(n, k):
        raise InfeasibleParameters(
            f"m={m} outside [{spanning}, {comb(n, k)}] for n={n}, k={k}"
        )
    rng = np.random.default_rng(seed)
    order = [int(v) for v in rng.permutation(n)]
    edges = [tuple(sorted(order[:k]))]
    covered = list(order[:k])
    pos = k
    while pos < n:
        fresh = order[pos:pos + k - 1]
        pos += len(fresh)
        old = rng.choice(len(covered), size=k - len(fresh), replace=False)
        e = tuple(sorted(fresh + [covered[i] for i in old]))
        covered += fresh
        edges.append(e)
    seen = set(edges)
    while len(edges) < m:
        e = tuple(sorted(int(v) for v in rng.choice(n, size=k, replace=False)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    H = new_hypergraph(k, edges)
    # relabel so index i carries label str(i) regardless of first appearance
    return Hypergraph(
        k=k,
        labels=tuple(str(i) for i in range(n)),
        edges=tuple(tuple(sorted(int(H.labels[i]) for i in e)) for e in H.edges),
    )


def random_kcylinder(
    class_sizes: Sequence[int], m: int, seed: int
) -> tuple[Hypergraph, Partition]:
    """Seeded connected k-cylinder with the given color-class sizes.

    Returns the hypergraph and its coloring.  Vertex labels are ``"c<class>v<j>"``.
    """
    k = len(class_sizes)
    if k < 2 or min(class_sizes) < 1:
        raise InfeasibleParameters(f"bad class sizes {list(class_sizes)}")
    n = sum(class_sizes)
    spanning = 1 + (n - k)
    capacity = int(np.prod(class_sizes))
    if m < spanning or m > capacity:
        raise InfeasibleParameters(f"m={m} outside [{spanning}, {capacity}]")
    rng = np.random.default_rng(seed)
    offsets = np.concatenate([[0], np.cumsum(class_sizes)[:-1]])
    members = [list(range(o, o + s)) for o, s in zip(offsets, class_sizes)]

    def pick(pool):
        return pool[int(rng.integers(len(pool)))]

    first = tuple(pick(members[c]) for c in range(k))
    edges = [first]
    covered = [{v} for v in first]
    pending = [v for c in range(k) for v in members[c] if v not in covered[c]]
    rng.shuffle(pending)
    color = {v: c for c in range(k) for v in members[c]}
    for v in pending:
        c = color[v]
        anchor = int(rng.choice([x for x in range(k) if x != c]))
        e = []
        for x in range(k):
            if x == c:
                e.append(v)
            elif x == anchor:
                e.append(pick(sorted(covered[x])))
            else:
                e.append(pick(members[x]))
        for x, w in enumerate(e):
            covered[x].add(w)
        edges.append(tuple(e))
    # spanning edges may coincide; at most 1 + n - k <= m survive
    edges = list(dict.fromkeys(tuple(sorted(e)) for e in edges))
    seen = set(edges)
    while len(edges) < m:
        e = tuple(sorted(pick(members[x]) for x in range(k)))
        if e not in seen:
            seen.add(e)
            edges.append(e)
    labels = tuple(f"c{color[v]}v{v - offsets[color[v]]}" for v in range(n))
    H = Hypergraph(k=k, labels=labels, edges=tuple(edges))
    P = Partition(tuple(frozenset(c) for c in members))
    return H, P
