"""Vertex permutations, generated groups, orbits, and automorphism search."""

from __future__ import annotations

from .graphs import Graph
from .partitions import Partition


class Permutation:
    """A bijection on a fixed universe of vertex labels."""

    __slots__ = ("mapping",)

    def __init__(self, mapping, universe=None):
        self.mapping = dict(mapping)
        keys = set(self.mapping)
        if universe is not None and keys != set(universe):
            raise ValueError("permutation domain does not match the universe")
        if set(self.mapping.values()) != keys:
            raise ValueError("mapping is not a bijection of its domain")

    @classmethod
    def identity(cls, universe) -> "Permutation":
        return cls({v: v for v in universe})

    def __call__(self, v: str) -> str:
        return self.mapping[v]

    def is_identity(self) -> bool:
        return all(k == v for k, v in self.mapping.items())

    def sort_key(self) -> tuple:
        return tuple(sorted(self.mapping.items()))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self):
        return hash(tuple(sorted(self.mapping.items())))

    def __repr__(self):
        moved = {k: v for k, v in self.mapping.items() if k != v}
        return f"Permutation({moved!r})" if moved else "Permutation(identity)"


class PermGroup:
    """A permutation group on a vertex set, given by generators.

    Only generators are stored; orbits are computed by closure and the full
    element list is materialized only in test oracles.
    """

    __slots__ = ("universe", "generators")

    def __init__(self, universe, generators):
        self.universe = frozenset(universe)
        gens = []
        for f in generators:
            if not isinstance(f, Permutation):
                f = Permutation(f)
            if set(f.mapping) != self.universe:
                raise ValueError("generator domain does not match the universe")
            gens.append(f)
        self.generators = tuple(gens)

    @classmethod
    def trivial(cls, universe) -> "PermGroup":
        return cls(universe, [])

    def __repr__(self):
        return f"PermGroup({len(self.generators)} generators on {len(self.universe)} points)"


def verify_automorphisms(g: Graph, grp: PermGroup) -> bool:
    """True iff every generator maps proper edges of g onto proper edges.

    A bijection sending proper edges into proper edges hits all of them, so
    checking one direction suffices on a finite graph.
    """
    if grp.universe != g.vertex_set:
        raise ValueError("group universe does not match the graph's vertices")
    for f in grp.generators:
        for e in g.proper_edges:
            u, v = tuple(e)
            if frozenset((f.mapping[u], f.mapping[v])) not in g.proper_edges:
                return False
    return True


def orbit_partition(grp: PermGroup) -> Partition:
    """Orbits of the generated group, by forward closure under the generators.

    Repeated application of a permutation cycles back, so forward closure
    already accounts for inverses and the full group is never materialized.
    """
    unseen = set(grp.universe)
    cells = []
    for seed in sorted(grp.universe):
        if seed not in unseen:
            continue
        unseen.discard(seed)
        cell = [seed]
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            for f in grp.generators:
                y = f.mapping[x]
                if y in unseen:
                    unseen.discard(y)
                    cell.append(y)
                    frontier.append(y)
        cells.append(cell)
    return Partition(cells, grp.universe)


def automorphism_group(g: Graph, max_vertices: int = 10) -> PermGroup:
    """A generating set for the automorphism group of g.

    Works through the vertices in a fixed search order: pass i keeps the
    first i vertices pointwise fixed and backtracks for one automorphism
    moving vertex i to each feasible image.  The collected maps generate the
    full group (each pass contributes coset representatives for the next
    pointwise stabilizer).  Degree pruning keeps the search small; the size
    bound guards against graphs this simple search cannot handle.
    """
    n = len(g.vertices)
    if n > max_vertices:
        raise ValueError(f"graph has {n} vertices, above the search bound {max_vertices}")
    deg = {v: len(g.neighborhood(v)) for v in g.vertices}
    order = sorted(g.vertices, key=lambda v: (-deg[v], v))
    position = {v: i for i, v in enumerate(order)}
    gens = []
    for i, v in enumerate(order):
        for w in g.vertices:  # lexicographic, deterministic
            if w == v or deg[w] != deg[v] or position[w] < i:
                continue
            found = _stabilized_automorphism(g, order, deg, i, w)
            if found is not None:
                gens.append(Permutation(found))
    return PermGroup(g.vertex_set, gens)


def _stabilized_automorphism(g, order, deg, fixed, image_of_fixed):
    """Backtrack for an automorphism fixing order[:fixed] and moving
    order[fixed] to image_of_fixed; returns a mapping or None."""
    assigned = {order[j]: order[j] for j in range(fixed)}
    used = set(assigned.values())

    def consistent(v, img):
        for u, uimg in assigned.items():
            if (frozenset((u, v)) in g.proper_edges) != (frozenset((uimg, img)) in g.proper_edges):
                return False
        return True

    v0 = order[fixed]
    if not consistent(v0, image_of_fixed):
        return None
    assigned[v0] = image_of_fixed
    used.add(image_of_fixed)

    def extend(pos):
        if pos == len(order):
            return True
        v = order[pos]
        for cand in g.vertices:
            if cand in used or deg[cand] != deg[v]:
                continue
            if consistent(v, cand):
                assigned[v] = cand
                used.add(cand)
                if extend(pos + 1):
                    return True
                del assigned[v]
                used.discard(cand)
        return False

    if extend(fixed + 1):
        return dict(assigned)
    return None


def is_consistent(m, grp: PermGroup) -> bool:
    """True iff the group fits the map: composing with any generator leaves
    the map unchanged, and each fibre lies inside a single orbit.

    Together the two conditions say the fibres are exactly the orbits, i.e.
    the partition of the map equals the orbit partition.
    """
    if grp.universe != m.source.vertex_set:
        raise ValueError("group universe does not match the map's source vertices")
    for f in grp.generators:
        for x in m.source.vertices:
            if m.mapping[f.mapping[x]] != m.mapping[x]:
                return False
    orbits = orbit_partition(grp)
    for fibre in m.fibres.values():
        if len({orbits.cell_of[v] for v in fibre}) != 1:
            return False
    return True


def generated_elements(grp: PermGroup, limit: int = 100_000) -> list[Permutation]:
    """Materialize every element of the generated group (test-scale only)."""
    universe = sorted(grp.universe)
    identity = Permutation.identity(universe)
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for p in frontier:
            for f in grp.generators:
                q = Permutation({v: f.mapping[p.mapping[v]] for v in universe})
                if q not in seen:
                    if len(seen) >= limit:
                        raise ValueError(f"group exceeds the materialization limit {limit}")
                    seen.add(q)
                    new.append(q)
        frontier = new
    return sorted(seen, key=Permutation.sort_key)
