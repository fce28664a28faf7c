"""Finite reflexive graphs: neighborhoods, components, induced subgraphs, isomorphism."""

from __future__ import annotations

from collections import deque


class Graph:
    """A finite reflexive undirected simple graph.

    Every vertex carries an implicit loop, so only proper edges between
    distinct vertices are stored.  Vertex labels are opaque strings, and all
    derived sequences (vertex tuple, component blocks, canonical edge list)
    come out in lexicographic label order, which keeps every downstream
    computation deterministic.
    """

    __slots__ = ("vertices", "vertex_set", "proper_edges", "_neighborhoods", "_components")

    def __init__(self, vertices, proper_edges=()):
        labels = list(vertices)
        if not labels:
            raise ValueError("a graph needs at least one vertex")
        seen = set()
        for v in labels:
            if not isinstance(v, str):
                raise ValueError(f"vertex labels must be strings, got {v!r}")
            if v in seen:
                raise ValueError(f"duplicate vertex label {v!r}")
            seen.add(v)
        self.vertices = tuple(sorted(labels))
        self.vertex_set = frozenset(labels)

        edges = set()
        for raw in proper_edges:
            u, v = raw
            for end in (u, v):
                if end not in self.vertex_set:
                    raise ValueError(f"edge endpoint {end!r} is not a declared vertex")
            if u == v:
                raise ValueError(f"loop at {u!r} supplied as a proper edge; loops are implicit")
            e = frozenset((u, v))
            if e in edges:
                raise ValueError(f"duplicate edge ({min(u, v)!r}, {max(u, v)!r})")
            edges.add(e)
        self.proper_edges = frozenset(edges)

        nbhd = {v: {v} for v in self.vertices}
        for e in self.proper_edges:
            u, v = tuple(e)
            nbhd[u].add(v)
            nbhd[v].add(u)
        self._neighborhoods = {v: frozenset(s) for v, s in nbhd.items()}
        self._components = None

    # ------------------------------------------------------------- queries

    def neighborhood(self, x: str) -> frozenset[str]:
        """Closed neighborhood of x: the vertex itself plus everything adjacent."""
        try:
            return self._neighborhoods[x]
        except KeyError:
            raise ValueError(f"unknown vertex {x!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        """Edge test including the implicit loops."""
        if u not in self.vertex_set or v not in self.vertex_set:
            raise ValueError(f"unknown vertex in edge test: ({u!r}, {v!r})")
        return u == v or frozenset((u, v)) in self.proper_edges

    def components(self) -> "ComponentIndex":
        """Connected components, found by breadth-first traversal.

        Blocks are ordered by their smallest member label; the result is
        computed once and cached (the graph is immutable).
        """
        if self._components is None:
            unseen = set(self.vertices)
            blocks = []
            for seed in self.vertices:
                if seed not in unseen:
                    continue
                unseen.discard(seed)
                block = [seed]
                queue = deque([seed])
                while queue:
                    x = queue.popleft()
                    for u in self._neighborhoods[x]:
                        if u in unseen:
                            unseen.discard(u)
                            block.append(u)
                            queue.append(u)
                blocks.append(sorted(block))
            self._components = ComponentIndex(blocks)
        return self._components

    def induced(self, subset) -> "Graph":
        """Subgraph induced by a nonempty subset of the vertices."""
        sub = set(subset)
        if not sub:
            raise ValueError("cannot induce a subgraph on an empty vertex set")
        for v in sub:
            if v not in self.vertex_set:
                raise ValueError(f"unknown vertex {v!r}")
        kept = [tuple(e) for e in self.proper_edges if e <= sub]
        return Graph(sorted(sub), kept)

    def sorted_edges(self) -> list[tuple[str, str]]:
        """Proper edges as sorted pairs, in sorted order (the canonical form)."""
        return sorted(tuple(sorted(e)) for e in self.proper_edges)

    # ------------------------------------------------------------- plumbing

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.proper_edges == other.proper_edges

    def __hash__(self):
        return hash((self.vertices, self.proper_edges))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.proper_edges)} proper edges)"


class ComponentIndex:
    """A graph's vertex partition into connected components.

    ``blocks`` is a tuple of sorted label tuples, ordered by smallest member;
    ``block_of`` maps each vertex to its block ordinal.
    """

    __slots__ = ("blocks", "block_of")

    def __init__(self, blocks):
        self.blocks = tuple(tuple(b) for b in blocks)
        self.block_of = {}
        for i, block in enumerate(self.blocks):
            for v in block:
                self.block_of[v] = i

    @property
    def count(self) -> int:
        return len(self.blocks)

    def block_containing(self, v: str) -> tuple[str, ...]:
        return self.blocks[self.block_of[v]]

    def leaders(self) -> tuple[str, ...]:
        """Smallest label of each block, in block order."""
        return tuple(b[0] for b in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, ComponentIndex):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"ComponentIndex({self.count} blocks)"


def find_isomorphism(g1: Graph, g2: Graph):
    """Search for a graph isomorphism from g1 onto g2.

    Returns the witnessing map as a HomMap, or None when the graphs are not
    isomorphic.  Plain backtracking with degree pruning; vertices are tried
    in decreasing-degree order so constrained vertices are placed first.
    Intended for the small graphs this package works with.
    """
    if len(g1.vertices) != len(g2.vertices):
        return None
    if len(g1.proper_edges) != len(g2.proper_edges):
        return None
    deg1 = {v: len(g1.neighborhood(v)) for v in g1.vertices}
    deg2 = {w: len(g2.neighborhood(w)) for w in g2.vertices}
    if sorted(deg1.values()) != sorted(deg2.values()):
        return None

    order = sorted(g1.vertices, key=lambda v: (-deg1[v], v))
    by_degree: dict[int, list[str]] = {}
    for w in g2.vertices:
        by_degree.setdefault(deg2[w], []).append(w)

    assigned: dict[str, str] = {}
    used: set[str] = set()

    def extend(pos: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for w in by_degree.get(deg1[v], ()):
            if w in used:
                continue
            ok = True
            for u, wu in assigned.items():
                if (frozenset((u, v)) in g1.proper_edges) != (frozenset((wu, w)) in g2.proper_edges):
                    ok = False
                    break
            if not ok:
                continue
            assigned[v] = w
            used.add(w)
            if extend(pos + 1):
                return True
            del assigned[v]
            used.discard(w)
        return False

    if not extend(0):
        return None
    from .homs import HomMap

    return HomMap(g1, g2, dict(assigned))
