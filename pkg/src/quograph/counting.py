"""Component counting through a homomorphism.

The counting formulas need different hypotheses:

* ``count_admissible`` works for any locally surjective map and sums, over
  one representative vertex per target component, the number of source
  components whose intersection with the representative's fibre is nonempty.
* ``count_orbit`` works when the map is complete and its fibres are the
  orbits of an automorphism group; each term is the fibre size divided by
  the multiplicity inside one admissible component.
* ``count_ce`` needs locally surjective plus component equitable and uses
  the same ratio terms without any group.

All three return a CountBreakdown whose total is checked against the
component index of the source before it is handed back.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import homs
from .errors import HypothesisError, InternalCheckError
from .graphs import Graph
from .homs import HomMap
from .partitions import Partition, quotient


@dataclass(frozen=True)
class CountTerm:
    """One summand of a component count.

    ``component_leader``, ``fibre_size`` (k_X) and ``component_multiplicity``
    (k_C) are populated by the ratio-based counts; the admissibility count
    leaves them as None because its term is a number of components, not a
    ratio.
    """

    representative: str
    component_leader: str | None
    fibre_size: int | None
    component_multiplicity: int | None
    value: int

    def as_dict(self) -> dict:
        return {
            "y": self.representative,
            "component_leader": self.component_leader,
            "kX": self.fibre_size,
            "kC": self.component_multiplicity,
            "value": self.value,
        }


@dataclass(frozen=True)
class CountBreakdown:
    terms: tuple[CountTerm, ...]
    total: int

    def as_dict(self) -> dict:
        return {"terms": [t.as_dict() for t in self.terms], "total": self.total}


def multiplicity(m: HomMap, u, y: str) -> int:
    """Number of vertices of u inside the fibre of y."""
    homs._require_hom(m)
    members = set(u)
    for v in members:
        if v not in m.source.vertex_set:
            raise ValueError(f"unknown source vertex {v!r}")
    if y not in m.target.vertex_set:
        raise ValueError(f"unknown target vertex {y!r}")
    return len(members.intersection(m.fibre(y)))


def admissible_components(m: HomMap, y: str) -> list[tuple[str, ...]]:
    """Source components meeting the fibre of y, in component order."""
    homs._require_hom(m)
    if y not in m.target.vertex_set:
        raise ValueError(f"unknown target vertex {y!r}")
    comp = m.source.components()
    hit = {comp.block_of[v] for v in m.fibre(y)}
    return [comp.blocks[i] for i in sorted(hit)]


def _require_locally_surjective(m: HomMap) -> None:
    if not homs.is_locally_surjective(m):
        raise HypothesisError("hypotheses not satisfied: locally_surjective")


def _component_block(m: HomMap, c) -> tuple[str, ...]:
    block = tuple(sorted(set(c)))
    comp = m.source.components()
    if not block or block[0] not in comp.block_of or comp.block_containing(block[0]) != block:
        raise ValueError("argument is not a component of the source graph")
    return block


def image_of_component(m: HomMap, c) -> tuple[str, ...]:
    """The target component a source component lands on.

    For a locally surjective map the image of a component is a full target
    component; the direct image is compared against it before returning.
    """
    _require_locally_surjective(m)
    block = _component_block(m, c)
    target_block = m.target.components().block_containing(m.mapping[block[0]])
    direct = {m.mapping[v] for v in block}
    if direct != set(target_block):
        raise InternalCheckError("component image is not a full target component")
    return target_block


def preimage_of_component_vertices(m: HomMap, c) -> frozenset[str]:
    """All vertices of the source components that map into the image of c.

    Computed as a union of component blocks and cross-checked against the
    plain preimage of the image component's vertex set.
    """
    _require_locally_surjective(m)
    block = _component_block(m, c)
    target_block = set(image_of_component(m, block))
    comp = m.source.components()
    union: set[str] = set()
    for other in comp.blocks:
        if m.mapping[other[0]] in target_block:
            union.update(other)
    direct = {v for v in m.source.vertices if m.mapping[v] in target_block}
    if union != direct:
        raise InternalCheckError("component preimage union differs from the direct preimage")
    return frozenset(union)


def count_admissible(m: HomMap) -> CountBreakdown:
    """Component count via admissible components, one term per target component.

    Requires local surjectivity.  The representative of each target
    component is its smallest label; a term may be 0 when a whole target
    component misses the image.
    """
    _require_locally_surjective(m)
    terms = []
    for block in m.target.components().blocks:
        y = block[0]
        terms.append(CountTerm(y, None, None, None, len(admissible_components(m, y))))
    total = sum(t.value for t in terms)
    if total != m.source.components().count:
        raise InternalCheckError("admissibility count disagrees with the component index")
    return CountBreakdown(tuple(terms), total)


def count_orbit(m: HomMap, grp, rng: random.Random | None = None) -> CountBreakdown:
    """Component count via fibre-size ratios for an orbit map.

    Requires the map to be complete and its fibres to be exactly the orbits
    of ``grp`` acting by automorphisms of the source.  ``rng`` randomizes the
    choice of representatives and admissible components; the total must not
    depend on it.
    """
    report = homs.classify(m, grp)
    if not report.complete:
        raise HypothesisError("hypotheses not satisfied: complete")
    if not report.orbit:
        raise HypothesisError("hypotheses not satisfied: orbit")
    return _ratio_count(m, rng)


def count_ce(m: HomMap, rng: random.Random | None = None) -> CountBreakdown:
    """Component count via fibre-size ratios for a component-equitable map.

    Requires local surjectivity and component equitability; no group is
    involved.
    """
    _require_locally_surjective(m)
    if not homs.is_component_equitable(m):
        raise HypothesisError("hypotheses not satisfied: component_equitable")
    return _ratio_count(m, rng)


def _exact_div(a: int, b: int) -> int:
    if b == 0 or a % b:
        raise InternalCheckError(f"multiplicity {b} does not divide fibre size {a}")
    return a // b


def _ratio_count(m: HomMap, rng: random.Random | None) -> CountBreakdown:
    """Walk the target components one representative at a time.

    Each step picks a target vertex not covered by the components already
    visited (smallest label unless randomized), picks one admissible source
    component for it, and contributes fibre size over multiplicity.  Exactly
    one step happens per target component.
    """
    tcomp = m.target.components()
    covered: set[int] = set()
    terms = []
    for _ in range(tcomp.count):
        eligible = [y for y in m.target.vertices if tcomp.block_of[y] not in covered]
        y = rng.choice(eligible) if rng is not None else eligible[0]
        candidates = admissible_components(m, y)
        if not candidates:
            raise InternalCheckError("no admissible component for a target vertex")
        chosen = rng.choice(candidates) if rng is not None else candidates[0]
        k_x = len(m.fibre(y))
        k_c = multiplicity(m, chosen, y)
        terms.append(CountTerm(y, chosen[0], k_x, k_c, _exact_div(k_x, k_c)))
        covered.add(tcomp.block_of[y])
    total = sum(t.value for t in terms)
    if total != m.source.components().count:
        raise InternalCheckError("ratio count disagrees with the component index")
    return CountBreakdown(tuple(terms), total)


def component_iso_check(m: HomMap, c) -> bool:
    """For a pseudo-covering: is a source component a copy of its image?

    True exactly when every vertex of the image component has multiplicity 1
    in the component.
    """
    if not homs.is_pseudo_covering(m):
        raise HypothesisError("hypotheses not satisfied: pseudo_covering")
    block = _component_block(m, c)
    target_block = image_of_component(m, block)
    return all(multiplicity(m, block, y) == 1 for y in target_block)


def connectedness_criterion(g: Graph, p: Partition) -> bool:
    """Connectedness of g from quotient data.

    Requires the quotient to be connected and the projection to be a
    pseudo-covering.  Returns True when some cell lies inside a single
    component of g, which forces g to be connected; False means the test is
    inconclusive (g may or may not be connected).
    """
    result = quotient(g, p)
    if result.quotient.components().count != 1:
        raise HypothesisError("hypotheses not satisfied: quotient is not connected")
    if not homs.is_pseudo_covering(result.projection):
        raise HypothesisError("hypotheses not satisfied: projection is not a pseudo-covering")
    comp = g.components()
    return any(len({comp.block_of[v] for v in cell}) == 1 for cell in p.cells)
