"""Graphs, Cartan matrices, acyclic orientations, and the vertex poset.

Vertices are contiguous ids 1..n.  Multiple edges are kept as individual
arrow instances so that parallel arrows stay distinguishable by index.
All objects are immutable after construction.
"""

from __future__ import annotations

import json
from collections import deque
from functools import lru_cache

from .errors import (
    AcyclicityError,
    FilterViolationError,
    IndecomposabilityError,
    InvalidCartanError,
)


class Graph:
    """Connected loop-free multigraph on vertices 1..n, with n >= 2.

    ``edges`` is a tuple of unordered pairs (u, v) with u < v; repeated
    pairs encode edge multiplicity.
    """

    __slots__ = ("n", "edges", "_mult")

    def __init__(self, n, edges):
        if n < 2:
            raise IndecomposabilityError("graph must have more than one vertex")
        norm = []
        mult = {}
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InvalidCartanError(f"edge ({u},{v}) out of vertex range 1..{n}")
            if u == v:
                raise InvalidCartanError(f"loop at vertex {u}")
            a, b = (u, v) if u < v else (v, u)
            norm.append((a, b))
            mult[(a, b)] = mult.get((a, b), 0) + 1
        self.n = n
        self.edges = tuple(sorted(norm))
        self._mult = mult
        if not self._is_connected():
            raise IndecomposabilityError("graph is disconnected")

    def _is_connected(self):
        seen = {1}
        queue = deque([1])
        while queue:
            u = queue.popleft()
            for a, b in self.edges:
                for w, z in ((a, b), (b, a)):
                    if w == u and z not in seen:
                        seen.add(z)
                        queue.append(z)
        return len(seen) == self.n

    def edge_mult(self, u, v):
        if u == v:
            return 0
        a, b = (u, v) if u < v else (v, u)
        return self._mult.get((a, b), 0)

    def neighbors(self, u):
        out = set()
        for a, b in self.edges:
            if a == u:
                out.add(b)
            elif b == u:
                out.add(a)
        return out

    def cartan(self):
        """The symmetric generalized Cartan matrix: 2 on the diagonal,
        minus the edge multiplicity off it."""
        return tuple(
            tuple(2 if i == j else -self.edge_mult(i, j) for j in range(1, self.n + 1))
            for i in range(1, self.n + 1)
        )

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def graph_from_cartan(A):
    """Build the graph whose Cartan matrix is ``A``.

    Raises InvalidCartanError for a matrix that is not a symmetric
    generalized Cartan matrix, IndecomposabilityError when it splits
    into blocks.
    """
    n = len(A)
    for i in range(n):
        if len(A[i]) != n:
            raise InvalidCartanError("matrix is not square")
        if A[i][i] != 2:
            raise InvalidCartanError(f"diagonal entry a_{i + 1}{i + 1} != 2")
        for j in range(n):
            if A[i][j] != A[j][i]:
                raise InvalidCartanError("matrix is not symmetric")
            if i != j and A[i][j] > 0:
                raise InvalidCartanError("positive off-diagonal entry")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.extend([(i + 1, j + 1)] * (-A[i][j]))
    return Graph(n, edges)


class Quiver:
    """A graph together with an acyclic orientation.

    ``arrows`` is a tuple of ordered pairs (source, target), one entry
    per edge instance.
    """

    __slots__ = ("graph", "arrows")

    def __init__(self, graph, arrows):
        arrows = tuple((int(s), int(e)) for s, e in arrows)
        counts = {}
        for s, e in arrows:
            if s == e:
                raise InvalidCartanError(f"loop arrow at vertex {s}")
            key = (s, e) if s < e else (e, s)
            counts[key] = counts.get(key, 0) + 1
        for u, v in set(graph.edges):
            if counts.get((u, v), 0) != graph.edge_mult(u, v):
                raise InvalidCartanError(
                    f"arrow multiplicity on edge {u}-{v} does not match the graph"
                )
        if counts.keys() - {tuple(sorted(e)) for e in graph.edges}:
            raise InvalidCartanError("arrow on a non-edge")
        self.graph = graph
        self.arrows = arrows
        if self._topological_order() is None:
            raise AcyclicityError("orientation has an oriented cycle")

    @property
    def n(self):
        return self.graph.n

    def vertices(self):
        return range(1, self.n + 1)

    def _topological_order(self):
        indeg = {v: 0 for v in self.vertices()}
        for _, e in self.arrows:
            indeg[e] += 1
        queue = deque(v for v in self.vertices() if indeg[v] == 0)
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for s, e in self.arrows:
                if s == u:
                    indeg[e] -= 1
                    if indeg[e] == 0:
                        queue.append(e)
        return order if len(order) == self.n else None

    def topological_order(self):
        order = self._topological_order()
        assert order is not None
        return order

    def sinks(self):
        """Vertices with no outgoing arrow."""
        starts = {s for s, _ in self.arrows}
        return {v for v in self.vertices() if v not in starts}

    def sources(self):
        ends = {e for _, e in self.arrows}
        return {v for v in self.vertices() if v not in ends}

    def is_sink(self, x):
        return all(s != x for s, _ in self.arrows)

    def is_source(self, x):
        return all(e != x for _, e in self.arrows)

    def reflect(self, x):
        """The quiver with every arrow incident to ``x`` reversed.

        Involutive.  Raises AcyclicityError when the result has an
        oriented cycle (possible only if x is neither sink nor source).
        """
        arrows = tuple(
            (e, s) if s == x or e == x else (s, e) for s, e in self.arrows
        )
        return Quiver(self.graph, arrows)

    def leq(self, u, v):
        """Path order: u <= v iff there is a (possibly empty) path u -> v."""
        return v in self.reachable(u)

    def reachable(self, u):
        seen = {u}
        queue = deque([u])
        while queue:
            w = queue.popleft()
            for s, e in self.arrows:
                if s == w and e not in seen:
                    seen.add(e)
                    queue.append(e)
        return seen

    def is_filter(self, X):
        """True iff X is upward closed in the path order."""
        X = set(X)
        return all(self.reachable(x) <= X for x in X)

    def principal_filter(self, x):
        """<x> = all vertices reachable from x."""
        return frozenset(self.reachable(x))

    def upward_closure(self, X):
        out = set()
        for x in X:
            out |= self.reachable(x)
        return frozenset(out)

    def hull(self, F):
        """Smallest filter containing F and every neighbor of F."""
        F = set(F)
        if not self.is_filter(F):
            raise FilterViolationError(f"{sorted(F)} is not a filter")
        grown = set(F)
        for v in F:
            grown |= self.graph.neighbors(v)
        return self.upward_closure(grown)

    def all_filters(self):
        """Every filter of the vertex poset, as frozensets."""
        from itertools import combinations

        out = []
        verts = list(self.vertices())
        for k in range(self.n + 1):
            for sub in combinations(verts, k):
                if self.is_filter(sub):
                    out.append(frozenset(sub))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Quiver)
            and self.graph == other.graph
            and self.arrows == other.arrows
        )

    def __hash__(self):
        return hash((self.graph, self.arrows))

    def __repr__(self):
        return f"Quiver(n={self.n}, arrows={list(self.arrows)})"


def quiver_from_arrows(n, arrows):
    """Quiver whose underlying graph is read off from the arrow list."""
    edges = [tuple(sorted(a)) for a in arrows]
    return Quiver(Graph(n, edges), arrows)


def quiver_from_dict(data):
    """Parse the JSON quiver format.

    Either {"n": int, "arrows": [[s, e], ...]} or
    {"cartan": [[...]], "arrows": [[s, e], ...]}; in the latter case the
    arrow multiplicities must agree with the Cartan matrix.
    """
    arrows = [tuple(a) for a in data["arrows"]]
    if "cartan" in data:
        g = graph_from_cartan(data["cartan"])
        return Quiver(g, arrows)
    return quiver_from_arrows(int(data["n"]), arrows)


def load_quiver(path):
    with open(path) as fh:
        return quiver_from_dict(json.load(fh))


def quiver_to_dict(q):
    return {"n": q.n, "arrows": [list(a) for a in q.arrows]}


@lru_cache(maxsize=None)
def _acyclic_orientation_cache(graph):
    from itertools import product

    edge_list = list(graph.edges)
    out = []
    for flips in product((False, True), repeat=len(edge_list)):
        arrows = [
            (v, u) if flip else (u, v) for (u, v), flip in zip(edge_list, flips)
        ]
        try:
            out.append(Quiver(graph, tuple(arrows)))
        except AcyclicityError:
            continue
    return tuple(out)


def acyclic_orientations(graph):
    """All acyclic orientations of a graph, as quivers."""
    return _acyclic_orientation_cache(graph)
