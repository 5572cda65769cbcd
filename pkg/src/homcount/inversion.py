"""Subgraph-counting matrices and their exact inversion.

Two triangular matrices indexed by isomorphism classes in matrix order:

  ind(f, h)   number of vertex subsets of h inducing a copy of f;
  dsub(f, h)  number of deletion subgraphs of h isomorphic to f, where a
              deletion subgraph keeps a vertex subset V', all loops inside
              V', and any subset of the non-loop edges inside V'.

Both have ones on the diagonal and vanish unless size(f) <= size(h), so
columns of the inverse of dsub come out of integer back-substitution.
Those columns convert plain homomorphism counts into compaction counts;
the signed subset sum over induced subgraphs converts them into
vertex-surjective counts.  verify_expansions replays the two expansions
that make this work and reports any violation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .canonical import (
    GraphKey,
    canonical_form,
    canonical_key,
    enumerate_graphs,
    graph_from_key,
)
from .counting import hom_count, vesurj_count, vsurj_count
from .errors import SizeLimitError
from .graphs import Graph, induced_subgraph, to_text

DSUB_PAIR_LIMIT = 1 << 20


class CoeffVector:
    """Finite-support map from isomorphism classes to signed integers.

    Zero coefficients are dropped on construction.  Each stored key keeps a
    representative graph so callers can rebuild inputs for counting.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        store = {}
        for key, (rep, coeff) in (entries or {}).items():
            if coeff != 0:
                store[key] = (rep, int(coeff))
        self._entries = store

    @classmethod
    def from_pairs(cls, pairs) -> "CoeffVector":
        """Aggregate (graph, coefficient) pairs by isomorphism class."""
        store = {}
        for g, coeff in pairs:
            key, rep = canonical_form(g)
            if key in store:
                store[key] = (store[key][0], store[key][1] + coeff)
            else:
                store[key] = (rep, coeff)
        return cls(store)

    def coeff(self, key: GraphKey) -> int:
        entry = self._entries.get(key)
        return entry[1] if entry else 0

    __getitem__ = coeff

    def rep(self, key: GraphKey) -> Graph:
        return self._entries[key][0]

    def support(self) -> list[GraphKey]:
        return sorted(self._entries)

    def items(self) -> list[tuple[GraphKey, Graph, int]]:
        """Entries as (key, representative, coefficient) in matrix order."""
        return [(k, self._entries[k][0], self._entries[k][1]) for k in sorted(self._entries)]

    def to_json_entries(self) -> list[dict]:
        return [{"graph": to_text(rep), "coeff": str(c)} for _, rep, c in self.items()]

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def __eq__(self, other):
        if not isinstance(other, CoeffVector):
            return NotImplemented
        return {k: v[1] for k, v in self._entries.items()} == {
            k: v[1] for k, v in other._entries.items()
        }

    def __repr__(self):
        inner = ", ".join(f"{k.hex()}: {c}" for k, _, c in self.items())
        return f"CoeffVector({{{inner}}})"


def ind_count(f: Graph, h: Graph) -> int:
    """Number of vertex subsets S of h with h[S] isomorphic to f."""
    if f.size > h.size or f.n > h.n:
        return 0
    kf = canonical_key(f)
    return sum(
        1
        for s in combinations(range(h.n), f.n)
        if canonical_key(induced_subgraph(h, s)) == kf
    )


def _deletion_pair_total(h: Graph) -> int:
    total = 0
    for r in range(h.n + 1):
        for s in combinations(range(h.n), r):
            keep = set(s)
            inside = sum(1 for u, v in h.edges if u in keep and v in keep)
            total += 1 << inside
    return total


@lru_cache(maxsize=None)
def _downset_of(key: GraphKey) -> tuple[tuple[GraphKey, Graph, int], ...]:
    """Isomorphism classes of deletion subgraphs with multiplicities, in
    matrix order.  Cached per class; multiplicities are label-independent."""
    h = graph_from_key(key)
    if _deletion_pair_total(h) > DSUB_PAIR_LIMIT:
        raise SizeLimitError(
            f"deletion-subgraph enumeration would exceed {DSUB_PAIR_LIMIT} pairs"
        )
    acc: dict[GraphKey, list] = {}
    for r in range(h.n + 1):
        for s in combinations(range(h.n), r):
            sub = induced_subgraph(h, s)
            e2 = sorted(sub.edges)
            for k in range(len(e2) + 1):
                for chosen in combinations(e2, k):
                    cand = Graph(sub.n, sub.loops, chosen)
                    ck, rep = canonical_form(cand)
                    if ck in acc:
                        acc[ck][1] += 1
                    else:
                        acc[ck] = [rep, 1]
    return tuple((k, acc[k][0], acc[k][1]) for k in sorted(acc))


def dsub_downset(h: Graph) -> tuple[tuple[GraphKey, Graph, int], ...]:
    """All classes f with dsub(f, h) > 0, with those counts, in matrix order."""
    return _downset_of(canonical_key(h))


def dsub_count(f: Graph, h: Graph) -> int:
    """Number of deletion subgraphs of h isomorphic to f."""
    if f.size > h.size or f.n > h.n:
        return 0
    kf = canonical_key(f)
    for key, _, mult in dsub_downset(h):
        if key == kf:
            return mult
    return 0


def dsub_inverse_column(h: Graph) -> CoeffVector:
    """Column of the inverse of the dsub matrix at h.

    Solved by back-substitution down the triangular system: the entry at h
    is 1, and each smaller class f gets minus the dsub-weighted sum of the
    already-known entries strictly above it.  All entries are integers.
    """
    down = dsub_downset(h)
    order = sorted(down, key=lambda t: t[0], reverse=True)
    coeff: dict[GraphKey, int] = {order[0][0]: 1}
    reps = {key: rep for key, rep, _ in down}
    for i in range(1, len(order)):
        key_f = order[i][0]
        s = 0
        for j in range(i):
            key_g = order[j][0]
            c = coeff.get(key_g, 0)
            if c == 0:
                continue
            for kk, _, mult in _downset_of(key_g):
                if kk == key_f:
                    s += mult * c
                    break
        coeff[key_f] = -s
    return CoeffVector({k: (reps[k], c) for k, c in coeff.items()})


def vsurj_via_inversion(g: Graph, h: Graph) -> int:
    """Vertex-surjective count as the signed sum of homomorphism counts into
    the induced subgraphs of h (sign by the number of deleted vertices)."""
    total = 0
    for r in range(h.n + 1):
        sign = -1 if (h.n - r) % 2 else 1
        for s in combinations(range(h.n), r):
            total += sign * hom_count(g, induced_subgraph(h, s))
    return total


def vesurj_via_inversion(g: Graph, h: Graph) -> int:
    """Compaction count as the inverse-column-weighted sum of homomorphism
    counts into the deletion subgraphs of h."""
    col = dsub_inverse_column(h)
    return sum(c * hom_count(g, rep) for _, rep, c in col.items())


def verify_expansions(n_max: int) -> dict:
    """Replay both expansions for every ordered pair of classes up to n_max.

    Checks, per pair (g, h): the homomorphism count equals the sum of
    vertex-surjective counts over induced subgraphs of h, and equals the
    dsub-weighted sum of compaction counts; and both inversion routes agree
    with the brute-force counters.  Returns a report dict; the violations
    list is expected to stay empty.
    """
    classes = enumerate_graphs(n_max)
    violations = []

    def record(name, g, h, left, right):
        violations.append(
            {
                "identity": name,
                "g": to_text(g),
                "h": to_text(h),
                "left": str(left),
                "right": str(right),
            }
        )

    pairs = 0
    for _, g in classes:
        for _, h in classes:
            pairs += 1
            hom_gh = hom_count(g, h)
            total = 0
            for r in range(h.n + 1):
                for s in combinations(range(h.n), r):
                    total += vsurj_count(g, induced_subgraph(h, s))
            if total != hom_gh:
                record("hom = sum of vsurj over induced subgraphs", g, h, hom_gh, total)
            total = sum(
                mult * vesurj_count(g, rep) for _, rep, mult in dsub_downset(h)
            )
            if total != hom_gh:
                record("hom = dsub-weighted sum of vesurj", g, h, hom_gh, total)
            vs = vsurj_count(g, h)
            vsi = vsurj_via_inversion(g, h)
            if vs != vsi:
                record("vsurj = signed hom sum", g, h, vs, vsi)
            ve = vesurj_count(g, h)
            vei = vesurj_via_inversion(g, h)
            if ve != vei:
                record("vesurj = inverse-column hom sum", g, h, ve, vei)
    return {
        "n_max": n_max,
        "classes": len(classes),
        "pairs": pairs,
        "checks": 4 * pairs,
        "violations": violations,
    }
