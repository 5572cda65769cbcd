"""Structural target families with closed-form counting.

Family F: every connected component is a complete bipartite graph with no
loops (a biclique; isolated vertices and single edges included) or a
complete graph with every loop present (a reflexive clique).  Family C is
the subset where every biclique is a star (one side of size at most 1)
and every reflexive clique has at most 2 vertices.  C sits inside F, and
C is exactly the part of F that stays in F under arbitrary vertex and
non-loop-edge deletions; for a target in F but not in C some single edge
deletion already leaves F, and find_hard_edge locates one.

Against targets in F, homomorphism counts have a closed form (a product
over source components of sums over target components); the two
surjective variants reduce to such counts for targets in F and in C
respectively.  Everything here is polynomial in the source for a fixed
target.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import InternalCheckError
from .graphs import (
    Graph,
    _adjacency_lists,
    connected_components,
    delete_nonloop_edge,
    induced_subgraph,
)
from .inversion import dsub_inverse_column

BICLIQUE = "biclique"
REFLEXIVE_CLIQUE = "reflexive_clique"
UNRECOGNIZED = "unrecognized"


@dataclass(frozen=True)
class ComponentShape:
    """Shape of one connected component: biclique(a, b) with a >= b,
    reflexive_clique(k), or unrecognized."""

    kind: str
    a: int = 0
    b: int = 0
    k: int = 0

    @classmethod
    def biclique(cls, a: int, b: int) -> "ComponentShape":
        a, b = (a, b) if a >= b else (b, a)
        return cls(BICLIQUE, a=a, b=b)

    @classmethod
    def reflexive_clique(cls, k: int) -> "ComponentShape":
        return cls(REFLEXIVE_CLIQUE, k=k)

    @classmethod
    def unrecognized(cls) -> "ComponentShape":
        return cls(UNRECOGNIZED)

    def label(self) -> str:
        if self.kind == BICLIQUE:
            return f"biclique({self.a},{self.b})"
        if self.kind == REFLEXIVE_CLIQUE:
            return f"reflexive_clique({self.k})"
        return UNRECOGNIZED


def _bipartition_sizes(c: Graph) -> tuple[int, int] | None:
    """Part sizes (larger first) of a connected loop-free graph, or None if
    an odd cycle makes 2-coloring impossible."""
    color = [-1] * c.n
    adj = _adjacency_lists(c)
    color[0] = 0
    dq = deque([0])
    while dq:
        v = dq.popleft()
        for w in adj[v]:
            if color[w] == -1:
                color[w] = 1 - color[v]
                dq.append(w)
            elif color[w] == color[v]:
                return None
    ones = sum(color)
    x, y = c.n - ones, ones
    return (x, y) if x >= y else (y, x)


def component_shape(c: Graph) -> ComponentShape:
    """Classify one connected graph."""
    if c.n == 0:
        raise ValueError("components are nonempty")
    if len(c.loops) == c.n:
        if len(c.edges) == c.n * (c.n - 1) // 2:
            return ComponentShape.reflexive_clique(c.n)
        return ComponentShape.unrecognized()
    if c.loops:
        return ComponentShape.unrecognized()
    parts = _bipartition_sizes(c)
    if parts is None:
        return ComponentShape.unrecognized()
    a, b = parts
    if len(c.edges) == a * b:
        return ComponentShape.biclique(a, b)
    return ComponentShape.unrecognized()


def classify_F(h: Graph) -> tuple[bool, list[ComponentShape]]:
    """Membership in F plus the per-component shapes (component order
    follows smallest original vertex)."""
    shapes = [component_shape(c) for c in connected_components(h)]
    return all(s.kind != UNRECOGNIZED for s in shapes), shapes


def _in_C(shape: ComponentShape) -> bool:
    if shape.kind == BICLIQUE:
        return shape.b <= 1
    if shape.kind == REFLEXIVE_CLIQUE:
        return shape.k <= 2
    return False


def classify_C(h: Graph) -> tuple[bool, list[ComponentShape]]:
    """Membership in C (stars and reflexive cliques of size at most 2)."""
    shapes = [component_shape(c) for c in connected_components(h)]
    return all(_in_C(s) for s in shapes), shapes


def find_hard_edge(h: Graph) -> tuple[int, int]:
    """Lexicographically smallest non-loop edge whose deletion leaves F.

    Defined for targets in F but not in C; such an edge always exists there
    (deleting one cross edge of a fat biclique or one edge of a reflexive
    clique on 3 or more vertices breaks completeness without splitting the
    component).
    """
    in_f, _ = classify_F(h)
    if not in_f:
        raise ValueError("hard edges are defined only for targets in F")
    in_c, _ = classify_C(h)
    if in_c:
        raise ValueError("targets in C have no hard edge")
    for e in sorted(h.edges):
        if not classify_F(delete_nonloop_edge(h, e))[0]:
            return e
    raise InternalCheckError("no hard edge found for a target in F minus C")


def _hom_into_shape(gc: Graph, shape: ComponentShape) -> int:
    """Closed-form homomorphism count from one connected source component
    into one target component of known shape."""
    if shape.kind == REFLEXIVE_CLIQUE:
        return shape.k**gc.n
    if shape.kind != BICLIQUE:
        raise ValueError("target component shape is unrecognized")
    if gc.loops:
        return 0
    parts = _bipartition_sizes(gc)
    if parts is None:
        return 0
    x, y = parts
    a, b = shape.a, shape.b
    return a**x * b**y + a**y * b**x


def hom_polytime(g: Graph, h: Graph, shapes: list[ComponentShape]) -> int:
    """Homomorphism count via closed forms; shapes must describe h's
    components as returned by classify_F.

    A connected source component lands inside a single target component, so
    the count is the product over source components of the sum over target
    components.  Maps into a reflexive clique on k vertices are
    unconstrained (k^|V|); maps into a biclique follow the source's
    2-coloring, one term per orientation.
    """
    comps_h = connected_components(h)
    if len(shapes) != len(comps_h):
        raise ValueError("shape list does not match the target's components")
    if any(s.kind == UNRECOGNIZED for s in shapes):
        raise ValueError("target is not in F")
    for c, s in zip(comps_h, shapes):
        if component_shape(c) != s:
            raise ValueError("shape list does not match the target's components")
    result = 1
    for gc in connected_components(g):
        total = sum(_hom_into_shape(gc, s) for s in shapes)
        if total == 0:
            return 0
        result *= total
    return result


def vsurj_polytime(g: Graph, h: Graph) -> int:
    """Vertex-surjective count for targets in F, via the signed sum of
    closed-form homomorphism counts over induced subgraphs of h."""
    in_f, _ = classify_F(h)
    if not in_f:
        raise ValueError("target is not in F")
    total = 0
    for r in range(h.n + 1):
        sign = -1 if (h.n - r) % 2 else 1
        for s in combinations(range(h.n), r):
            sub = induced_subgraph(h, s)
            ok, sub_shapes = classify_F(sub)
            if not ok:
                raise InternalCheckError("F is not closed under vertex deletion")
            total += sign * hom_polytime(g, sub, sub_shapes)
    return total


def vesurj_polytime(g: Graph, h: Graph) -> int:
    """Compaction count for targets in C, via the inverse-column-weighted
    sum of closed-form homomorphism counts over deletion subgraphs of h."""
    in_c, _ = classify_C(h)
    if not in_c:
        raise ValueError("target is not in C")
    total = 0
    for _, rep, coeff in dsub_inverse_column(h).items():
        ok, rep_shapes = classify_F(rep)
        if not ok:
            raise InternalCheckError("C is not closed under deletion subgraphs")
        total += coeff * hom_polytime(g, rep, rep_shapes)
    return total


def classification_json(h: Graph) -> dict:
    """Classification record: family memberships, component shape labels,
    and the hard edge when one exists."""
    in_f, shapes = classify_F(h)
    in_c, _ = classify_C(h)
    hard = None
    if in_f and not in_c:
        hard = list(find_hard_edge(h))
    return {
        "in_F": in_f,
        "in_C": in_c,
        "components": [s.label() for s in shapes],
        "hard_edge": hard,
    }
