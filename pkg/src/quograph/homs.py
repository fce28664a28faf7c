"""Vertex maps between reflexive graphs and their classification.

The predicates here sort a homomorphism into the classes that drive the
component-counting results: surjective, complete, tame, the local
surjective/injective/bijective variants, locally strong, pseudo-covering,
equitable, and component equitable.  ``classify`` evaluates all of them at
once and cross-checks the implications that must hold between them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisError, InternalCheckError
from .graphs import Graph


class HomMap:
    """A total vertex map between two reflexive graphs.

    Totality and vertex membership are enforced at construction.  Whether the
    map actually preserves edges is computed lazily and exposed through
    ``validate_hom``, so ill-formed candidate maps can still be represented
    and reported instead of crashing the loaders.
    """

    __slots__ = ("source", "target", "mapping", "image", "fibres", "_edge_preserving")

    def __init__(self, source: Graph, target: Graph, mapping: dict[str, str]):
        for v in source.vertices:
            if v not in mapping:
                raise ValueError(f"map is not total: no image for {v!r}")
        for v in mapping:
            if v not in source.vertex_set:
                raise ValueError(f"map defined on unknown vertex {v!r}")
        for y in mapping.values():
            if y not in target.vertex_set:
                raise ValueError(f"image vertex {y!r} is not in the target")
        self.source = source
        self.target = target
        self.mapping = {v: mapping[v] for v in source.vertices}
        self.image = frozenset(self.mapping.values())
        fibres: dict[str, list[str]] = {}
        for v in source.vertices:  # sorted, so each fibre tuple is sorted
            fibres.setdefault(self.mapping[v], []).append(v)
        self.fibres = {y: tuple(vs) for y, vs in fibres.items()}
        self._edge_preserving = None

    def __call__(self, v: str) -> str:
        return self.mapping[v]

    def fibre(self, y: str) -> tuple[str, ...]:
        """Preimage of a target vertex (possibly empty)."""
        if y not in self.target.vertex_set:
            raise ValueError(f"unknown target vertex {y!r}")
        return self.fibres.get(y, ())

    def __eq__(self, other):
        if not isinstance(other, HomMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.source, self.target, tuple(sorted(self.mapping.items()))))

    def __repr__(self):
        return f"HomMap({len(self.source.vertices)} -> {len(self.target.vertices)} vertices)"


def validate_hom(m: HomMap) -> bool:
    """True iff the map preserves edges.

    A proper source edge may land on a proper target edge or collapse onto a
    single vertex (its implicit loop); implicit source loops are preserved
    automatically.
    """
    if m._edge_preserving is None:
        ok = True
        for e in m.source.proper_edges:
            u, v = tuple(e)
            yu, yv = m.mapping[u], m.mapping[v]
            if yu != yv and frozenset((yu, yv)) not in m.target.proper_edges:
                ok = False
                break
        m._edge_preserving = ok
    return m._edge_preserving


def _require_hom(m: HomMap) -> None:
    if not validate_hom(m):
        raise HypothesisError("map is not a homomorphism (an edge is not preserved)")


# ----------------------------------------------------------------- classes

def is_surjective(m: HomMap) -> bool:
    """True iff every target vertex has a preimage."""
    _require_hom(m)
    return m.image == m.target.vertex_set


def is_complete(m: HomMap) -> bool:
    """True iff the image of the source, edges included, is the whole target.

    On top of vertex surjectivity this needs every proper target edge to be
    the image of some proper source edge (loops take care of themselves once
    the map is surjective).
    """
    _require_hom(m)
    if m.image != m.target.vertex_set:
        return False
    covered = set()
    for e in m.source.proper_edges:
        u, v = tuple(e)
        yu, yv = m.mapping[u], m.mapping[v]
        if yu != yv:
            covered.add(frozenset((yu, yv)))
    return m.target.proper_edges <= covered


def is_tame(m: HomMap) -> bool:
    """True iff every fibre lies inside a single source component."""
    _require_hom(m)
    from .partitions import is_tame as partition_is_tame, partition_of_map

    return partition_is_tame(m.source, partition_of_map(m))


def is_locally_surjective(m: HomMap) -> bool:
    """True iff each restriction N(x) -> N(m(x)) is onto."""
    _require_hom(m)
    for x in m.source.vertices:
        image_nbhd = {m.mapping[u] for u in m.source.neighborhood(x)}
        if not m.target.neighborhood(m.mapping[x]) <= image_nbhd:
            return False
    return True


def is_locally_injective(m: HomMap) -> bool:
    """True iff each restriction N(x) -> N(m(x)) is injective."""
    _require_hom(m)
    for x in m.source.vertices:
        nbhd = m.source.neighborhood(x)
        if len({m.mapping[u] for u in nbhd}) != len(nbhd):
            return False
    return True


def is_locally_bijective(m: HomMap) -> bool:
    """True iff each restriction N(x) -> N(m(x)) is a bijection."""
    return is_locally_surjective(m) and is_locally_injective(m)


def is_locally_strong(m: HomMap) -> bool:
    """True iff every edge between images lifts against any chosen preimage.

    Pointwise: whenever {m(x1), m(x2)} is a target edge, x1 must have a
    neighbor inside the fibre of m(x2).  Implicit loops count as edges on
    both sides, but the loop case is witnessed by x1 itself, so only proper
    target edges between image vertices need checking.  Target vertices
    outside the image impose no condition (there is no x2 for them).
    """
    _require_hom(m)
    for x1 in m.source.vertices:
        nbhd1 = m.source.neighborhood(x1)
        y1 = m.mapping[x1]
        for y2 in m.target.neighborhood(y1):
            if y2 == y1 or y2 not in m.fibres:
                continue
            if not any(x2 in nbhd1 for x2 in m.fibres[y2]):
                return False
    return True


def is_pseudo_covering(m: HomMap) -> bool:
    """True iff the map is locally strong and surjective."""
    return is_locally_strong(m) and is_surjective(m)


def is_component_equitable(m: HomMap) -> bool:
    """True iff each target vertex meets all its admissible components equally.

    For a target vertex y, every source component containing part of the
    fibre of y must contain the same number of fibre members.
    """
    _require_hom(m)
    comp = m.source.components()
    for fibre in m.fibres.values():
        counts: dict[int, int] = {}
        for v in fibre:
            b = comp.block_of[v]
            counts[b] = counts.get(b, 0) + 1
        if len(set(counts.values())) > 1:
            return False
    return True


# ----------------------------------------------------------------- reports

@dataclass(frozen=True)
class ClassificationReport:
    """All class memberships of one homomorphism.

    ``orbit`` is None when no candidate group was supplied, otherwise it
    records whether the map's fibres are exactly the orbits of the group and
    the group acts by automorphisms of the source.
    """

    surjective: bool
    complete: bool
    isomorphism: bool
    tame: bool
    locally_surjective: bool
    locally_injective: bool
    locally_bijective: bool
    locally_strong: bool
    pseudo_covering: bool
    equitable: bool
    component_equitable: bool
    orbit: bool | None = None

    def as_dict(self) -> dict:
        return {
            "surjective": self.surjective,
            "complete": self.complete,
            "isomorphism": self.isomorphism,
            "tame": self.tame,
            "locally_surjective": self.locally_surjective,
            "locally_injective": self.locally_injective,
            "locally_bijective": self.locally_bijective,
            "locally_strong": self.locally_strong,
            "pseudo_covering": self.pseudo_covering,
            "equitable": self.equitable,
            "component_equitable": self.component_equitable,
            "orbit": self.orbit,
        }


def _check_report(r: ClassificationReport) -> None:
    """Cross-check implications that must hold between the class predicates."""
    rules = [
        ("complete implies surjective", (not r.complete) or r.surjective),
        (
            "isomorphism implies surjective and complete",
            (not r.isomorphism) or (r.surjective and r.complete),
        ),
        (
            "locally surjective implies locally strong",
            (not r.locally_surjective) or r.locally_strong,
        ),
        (
            "locally bijective = locally surjective + locally injective",
            r.locally_bijective == (r.locally_surjective and r.locally_injective),
        ),
        (
            "pseudo-covering = locally strong + surjective",
            r.pseudo_covering == (r.locally_strong and r.surjective),
        ),
        (
            "pseudo-covering = locally strong + complete",
            r.pseudo_covering == (r.locally_strong and r.complete),
        ),
        (
            "pseudo-covering = locally surjective + complete",
            r.pseudo_covering == (r.locally_surjective and r.complete),
        ),
        (
            "complete equitable implies pseudo-covering",
            (not (r.complete and r.equitable)) or r.pseudo_covering,
        ),
    ]
    for name, ok in rules:
        if not ok:
            raise InternalCheckError(f"classification self-check failed: {name}")


def classify(m: HomMap, grp=None) -> ClassificationReport:
    """Evaluate every class predicate on a valid homomorphism.

    Raises HypothesisError when the map is not edge-preserving, and
    InternalCheckError if the computed memberships contradict each other
    (which would mean a bug in the predicates, not in the input).
    """
    _require_hom(m)
    from .partitions import is_equitable, partition_of_map

    surjective = is_surjective(m)
    complete = is_complete(m)
    bijective = len(m.image) == len(m.source.vertices) and surjective
    report = ClassificationReport(
        surjective=surjective,
        complete=complete,
        isomorphism=bijective and complete,
        tame=is_tame(m),
        locally_surjective=is_locally_surjective(m),
        locally_injective=is_locally_injective(m),
        locally_bijective=is_locally_bijective(m),
        locally_strong=is_locally_strong(m),
        pseudo_covering=is_pseudo_covering(m),
        equitable=is_equitable(m.source, partition_of_map(m)),
        component_equitable=is_component_equitable(m),
        orbit=None if grp is None else _is_orbit_map(m, grp),
    )
    _check_report(report)
    return report


def _is_orbit_map(m: HomMap, grp) -> bool:
    from .perms import is_consistent, verify_automorphisms

    return verify_automorphisms(m.source, grp) and is_consistent(m, grp)


def factorize(m: HomMap):
    """Split a homomorphism through the quotient by its fibres.

    Returns (projection, injection): the projection of the source onto the
    quotient by the fibre partition, and the injective map sending each fibre
    cell to its common image.  Their composition reproduces the original map;
    the injection is an isomorphism exactly when the map is complete.
    """
    _require_hom(m)
    from .partitions import partition_of_map, quotient

    result = quotient(m.source, partition_of_map(m))
    projection = result.projection
    injection = HomMap(
        result.quotient,
        m.target,
        {projection.mapping[x]: m.mapping[x] for x in m.source.vertices},
    )
    if not validate_hom(injection):
        raise InternalCheckError("factorization produced a non-homomorphism injection")
    if len(injection.image) != len(result.quotient.vertices):
        raise InternalCheckError("factorization injection is not injective")
    for x in m.source.vertices:
        if injection.mapping[projection.mapping[x]] != m.mapping[x]:
            raise InternalCheckError("factorization does not compose back to the map")
    return projection, injection
