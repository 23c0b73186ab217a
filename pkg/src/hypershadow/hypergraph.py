"""
Immutable k-uniform hypergraphs, multigraphs and the clique-shadow map.

Vertices carry text labels; internally every structure works with dense
indices assigned in first-appearance order.  Edges are stored as sorted index
tuples, and ``Hypergraph.edge_array`` exposes them as an ``(m, k)`` integer
array for the vectorised tensor kernels in :mod:`hypershadow.spectral`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    EmptyEdgeList,
    InvalidPartition,
    NonUniformEdge,
    RepeatedVertexInEdge,
    ValidationError,
)

__all__ = [
    "Hypergraph",
    "Multigraph",
    "Partition",
    "new_hypergraph",
    "new_multigraph",
    "is_connected",
    "clique_shadow",
    "multigraph_equals",
    "verify_partition",
    "is_strongly_independent",
]


def _components(n: int, groups: Iterable[Sequence[int]]) -> int:
    """Number of connected components when every group is glued together."""
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    count = n
    for g in groups:
        root = find(g[0])
        for v in g[1:]:
            rv = find(v)
            if rv != root:
                parent[rv] = root
                count -= 1
    return count


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A validated k-uniform hypergraph.

    ``labels[i]`` is the token of vertex ``i``; ``edges`` holds sorted index
    tuples in first-appearance order.  ``duplicates`` counts input edges that
    were dropped because they repeated an earlier edge.

    Equality is labeled: same k, same label set and same set of labeled edges.
    """

    k: int
    labels: tuple[str, ...]
    edges: tuple[tuple[int, ...], ...]
    duplicates: int = 0

    def __post_init__(self):
        if self.k < 2:
            raise ValidationError(f"k must be >= 2, got {self.k}")
        if not self.edges:
            raise EmptyEdgeList("a hypergraph needs at least one edge")
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("duplicate vertex labels")
        n = len(self.labels)
        seen = set()
        for e in self.edges:
            if len(e) != self.k:
                raise NonUniformEdge(f"edge {e} has {len(e)} vertices, expected {self.k}")
            if len(set(e)) != self.k:
                raise RepeatedVertexInEdge(f"edge {e} repeats a vertex")
            if min(e) < 0 or max(e) >= n:
                raise ValidationError(f"edge {e} references an unknown vertex")
            if e in seen:
                raise ValidationError(f"duplicate edge {e}")
            seen.add(e)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def edge_array(self) -> np.ndarray:
        arr = np.array(self.edges, dtype=np.intp).reshape(self.m, self.k)
        arr.setflags(write=False)
        return arr

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edge_array.ravel(), minlength=self.n)

    @cached_property
    def _edge_key(self) -> frozenset:
        return frozenset(frozenset(self.labels[i] for i in e) for e in self.edges)

    def labeled_edges(self) -> list[tuple[str, ...]]:
        return [tuple(self.labels[i] for i in e) for e in self.edges]

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.k == other.k
            and set(self.labels) == set(other.labels)
            and self._edge_key == other._edge_key
        )

    def __hash__(self):
        return hash((self.k, frozenset(self.labels), self._edge_key))

    def __repr__(self):
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


def new_hypergraph(k: int, edge_list: Iterable[Sequence]) -> Hypergraph:
    """Build a hypergraph from label lists.

    Labels are converted with ``str``; vertex order is first appearance.
    Repeated edges are dropped and counted in ``Hypergraph.duplicates``.
    """
    if k < 2:
        raise ValidationError(f"k must be >= 2, got {k}")
    index: dict[str, int] = {}
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    duplicates = 0
    for raw in edge_list:
        tokens = [str(v) for v in raw]
        if len(tokens) != k:
            raise NonUniformEdge(f"edge {tokens} has {len(tokens)} vertices, expected {k}")
        if len(set(tokens)) != k:
            raise RepeatedVertexInEdge(f"edge {tokens} repeats a vertex")
        for tok in tokens:
            if not tok:
                raise ValidationError("empty vertex label")
            index.setdefault(tok, len(index))
        e = tuple(sorted(index[tok] for tok in tokens))
        if e in seen:
            duplicates += 1
            continue
        seen.add(e)
        edges.append(e)
    if not edges:
        raise EmptyEdgeList("a hypergraph needs at least one edge")
    return Hypergraph(k=k, labels=tuple(index), edges=tuple(edges), duplicates=duplicates)


@dataclass(frozen=True, eq=False)
class Multigraph:
    """Undirected loopless multigraph: unordered index pair -> multiplicity."""

    labels: tuple[str, ...]
    multiplicity: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError("duplicate vertex labels")
        n = len(self.labels)
        clean = {}
        for (u, v), mu in self.multiplicity.items():
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"pair {(u, v)} references an unknown vertex")
            if int(mu) < 1:
                raise ValidationError(f"multiplicity of {(u, v)} must be >= 1, got {mu}")
            key = (u, v) if u < v else (v, u)
            if key in clean:
                raise ValidationError(f"pair {key} given twice")
            clean[key] = int(mu)
        object.__setattr__(self, "multiplicity", dict(sorted(clean.items())))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def pair_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(u, v, mu)`` arrays over stored pairs, ``u < v``."""
        items = list(self.multiplicity.items())
        u = np.array([p[0] for p, _ in items], dtype=np.intp)
        v = np.array([p[1] for p, _ in items], dtype=np.intp)
        mu = np.array([w for _, w in items], dtype=float)
        return u, v, mu

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degrees counted with multiplicity."""
        u, v, mu = self.pair_arrays
        n = self.n
        return np.bincount(u, mu, minlength=n) + np.bincount(v, mu, minlength=n)

    def mu(self, a: str, b: str) -> int:
        i, j = self.index[a], self.index[b]
        return self.multiplicity.get((min(i, j), max(i, j)), 0)

    def to_dense(self) -> np.ndarray:
        """Co-occurrence (adjacency) matrix with multiplicities."""
        A = np.zeros((self.n, self.n))
        u, v, mu = self.pair_arrays
        A[u, v] = mu
        A[v, u] = mu
        return A

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return _components(self.n, [(u, v) for u, v in self.multiplicity]) == 1

    @cached_property
    def _labeled(self) -> dict[frozenset, int]:
        return {
            frozenset((self.labels[u], self.labels[v])): mu
            for (u, v), mu in self.multiplicity.items()
        }

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return multigraph_equals(self, other)

    def __hash__(self):
        return hash((frozenset(self.labels), frozenset(self._labeled.items())))

    def __repr__(self):
        return f"Multigraph(n={self.n}, pairs={len(self.multiplicity)})"


def new_multigraph(pairs: Iterable[tuple], labels: Sequence | None = None) -> Multigraph:
    """Build a multigraph from ``(a, b)`` or ``(a, b, mu)`` label tuples.

    Repeated pairs accumulate multiplicity.  ``labels`` fixes vertex order
    (and may include isolated vertices); otherwise first appearance is used.
    """
    index: dict[str, int] = {}
    for lab in labels or ():
        index.setdefault(str(lab), len(index))
    counts: Counter = Counter()
    for p in pairs:
        a, b = str(p[0]), str(p[1])
        mu = int(p[2]) if len(p) > 2 else 1
        if a == b:
            raise ValidationError(f"self-loop at {a!r}")
        i, j = index.setdefault(a, len(index)), index.setdefault(b, len(index))
        counts[(min(i, j), max(i, j))] += mu
    return Multigraph(labels=tuple(index), multiplicity=dict(counts))


def is_connected(H: Hypergraph) -> bool:
    """True iff the vertex-edge incidence structure spans one component."""
    return _components(H.n, H.edges) == 1


def clique_shadow(H: Hypergraph) -> Multigraph:
    """Co-occurrence multigraph: mu(uv) counts the edges containing u and v."""
    if not isinstance(H, Hypergraph):
        raise TypeError(f"clique_shadow expects a Hypergraph, got {type(H).__name__}")
    counts: Counter = Counter()
    for e in H.edges:
        counts.update(itertools.combinations(e, 2))
    return Multigraph(labels=H.labels, multiplicity=dict(counts))


def multigraph_equals(G1: Multigraph, G2: Multigraph) -> bool:
    """Labeled equality: same label set and identical multiplicity maps."""
    return set(G1.labels) == set(G2.labels) and G1._labeled == G2._labeled


@dataclass(frozen=True)
class Partition:
    """Disjoint vertex-index classes covering every vertex."""

    classes: tuple[frozenset[int], ...]

    @classmethod
    def from_labels(cls, H: Hypergraph, classes: Iterable[Iterable]) -> "Partition":
        try:
            return cls(tuple(frozenset(H.index[str(v)] for v in c) for c in classes))
        except KeyError as exc:
            raise InvalidPartition(f"unknown vertex {exc.args[0]!r}") from None


def _check_partition(n: int, P: Partition) -> None:
    covered: set[int] = set()
    for c in P.classes:
        if not c:
            raise InvalidPartition("empty class")
        if covered & c:
            raise InvalidPartition("classes overlap")
        covered |= c
    if covered != set(range(n)):
        raise InvalidPartition("classes do not cover the vertex set")


def verify_partition(H: Hypergraph, P: Partition) -> bool:
    """True iff every edge meets every class of ``P`` in exactly one vertex.

    Raises ``InvalidPartition`` if ``P`` is not a partition of V(H) into k
    non-empty classes.
    """
    _check_partition(H.n, P)
    if len(P.classes) != H.k:
        raise InvalidPartition(f"expected {H.k} classes, got {len(P.classes)}")
    color = np.empty(H.n, dtype=np.intp)
    for c_idx, c in enumerate(P.classes):
        color[list(c)] = c_idx
    edge_colors = np.sort(color[H.edge_array], axis=1)
    return bool(np.all(edge_colors == np.arange(H.k)))


def is_strongly_independent(H: Hypergraph, S: Iterable[int]) -> bool:
    """True iff no edge contains two or more vertices of ``S``."""
    mask = np.zeros(H.n, dtype=bool)
    mask[list(S)] = True
    return bool(np.all(mask[H.edge_array].sum(axis=1) <= 1))
