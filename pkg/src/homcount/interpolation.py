"""Recovering homomorphism counts from an oracle for a weighted combination.

Suppose a counter f satisfies, for every source G,

    f(G) = sum over classes H of alpha(H) * hom(G, H)

for finitely supported integer coefficients alpha.  Both surjective
counters are of this form: the vertex-surjective counter via the signed
induced-subgraph coefficients, the compaction counter via an inverse
column of the deletion-subgraph matrix.  Querying f on disjoint unions
G + F for F ranging over a set S that is closed under homomorphic images
and contains the support of alpha gives the linear system

    f(G + F) = sum over H in S of hom(F, H) * (alpha(H) * hom(G, H)),

whose matrix hom(F, H) over S x S is invertible.  Solving it exactly and
dividing the entry at a target by alpha(target) recovers hom(G, target)
from oracle access to f alone.  reduction_demo wires this up end to end
against the in-process counters.
"""

from __future__ import annotations

import subprocess
from dataclasses import dataclass, field
from itertools import combinations

from .canonical import GraphKey, canonical_form, canonical_key
from .counting import hom_count, vesurj_count, vsurj_count
from .errors import (
    InternalCheckError,
    OracleMismatchError,
    SingularSystemError,
    SizeLimitError,
)
from .exactsolve import determinant, solve_linear_system
from .graphs import (
    Graph,
    delete_nonloop_edge,
    disjoint_union,
    induced_subgraph,
    quotient,
    to_text,
)
from .inversion import CoeffVector, dsub_inverse_column

QUOTIENT_MAX_VERTICES = 8
SYSTEM_MAX_SIZE = 64


def _set_partitions(n: int):
    """All partitions of 0..n-1; blocks ordered by first member."""
    blocks: list[list[int]] = []

    def rec(v):
        if v == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(v)
            yield from rec(v + 1)
            b.pop()
        blocks.append([v])
        yield from rec(v + 1)
        blocks.pop()

    yield from rec(0)


def homomorphic_images(h: Graph) -> list[tuple[GraphKey, Graph]]:
    """Isomorphism classes of quotients of h, in matrix order.

    These are exactly the homomorphic images: any homomorphism factors as a
    quotient by its fibers followed by an embedding of the image.
    """
    if h.n > QUOTIENT_MAX_VERTICES:
        raise SizeLimitError(
            f"quotient enumeration is limited to {QUOTIENT_MAX_VERTICES} vertices"
        )
    acc: dict[GraphKey, Graph] = {}
    for partition in _set_partitions(h.n):
        key, rep = canonical_form(quotient(h, partition))
        acc.setdefault(key, rep)
    return sorted(acc.items())


def closed_set(graphs) -> list[tuple[GraphKey, Graph]]:
    """Union of the homomorphic images of the given graphs, deduplicated and
    sorted in matrix order.  Closure is verified, not assumed: images of
    members must add nothing."""
    acc: dict[GraphKey, Graph] = {}
    for g in graphs:
        for key, rep in homomorphic_images(g):
            acc.setdefault(key, rep)
    members = sorted(acc.items())
    for _, rep in members:
        for key, _ in homomorphic_images(rep):
            if key not in acc:
                raise InternalCheckError("image closure failed to close")
    return members


@dataclass
class LovaszSystem:
    """Closed set with its homomorphism-count matrix (rows and columns both
    follow matrix order) and optionally the coefficients being inverted."""

    members: list[tuple[GraphKey, Graph]]
    matrix: list[list[int]]
    det: int
    alpha: CoeffVector | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {key: i for i, (key, _) in enumerate(self.members)}

    def index_of(self, key: GraphKey) -> int:
        if key not in self._index:
            raise ValueError("graph is not a member of the system")
        return self._index[key]


def lovasz_matrix(members) -> LovaszSystem:
    """Build the homomorphism-count matrix over a closed set.

    Accepts (key, rep) pairs or plain graphs; the input must already be
    closed under homomorphic images and contain no duplicate classes.  The
    matrix is invertible for closed sets; its determinant is computed
    exactly and checked.
    """
    norm: dict[GraphKey, Graph] = {}
    for m in members:
        key, rep = canonical_form(m) if isinstance(m, Graph) else m
        if key in norm:
            raise ValueError("duplicate isomorphism class in the input set")
        norm[key] = rep
    ordered = sorted(norm.items())
    if len(ordered) > SYSTEM_MAX_SIZE:
        raise SizeLimitError(f"systems are limited to {SYSTEM_MAX_SIZE} members")
    for _, rep in ordered:
        for key, _ in homomorphic_images(rep):
            if key not in norm:
                raise ValueError("input set is not closed under homomorphic images")
    matrix = [
        [hom_count(f, h) for _, h in ordered]
        for _, f in ordered
    ]
    det = determinant(matrix)
    if det == 0:
        raise SingularSystemError("homomorphism matrix of a closed set is singular")
    return LovaszSystem(list(ordered), matrix, det)


def alpha_for_vsurj(h: Graph) -> CoeffVector:
    """Coefficients expressing the vertex-surjective counter against h as a
    combination of plain homomorphism counters: each subset of h's vertices
    contributes its induced class, signed by the number of deleted
    vertices.  The entry at h itself is 1."""
    pairs = []
    for r in range(h.n + 1):
        sign = -1 if (h.n - r) % 2 else 1
        for s in combinations(range(h.n), r):
            pairs.append((induced_subgraph(h, s), sign))
    return CoeffVector.from_pairs(pairs)


def alpha_for_vesurj(h: Graph) -> CoeffVector:
    """Coefficients expressing the compaction counter against h: the inverse
    column of the deletion-subgraph matrix at h."""
    return dsub_inverse_column(h)


class CountingOracle:
    """In-process oracle for one of the two surjective counters."""

    def __init__(self, kind: str, h: Graph):
        if kind not in ("vsurj", "vesurj"):
            raise ValueError("kind must be 'vsurj' or 'vesurj'")
        self.kind = kind
        self.h = h
        self.calls = 0

    def eval(self, g: Graph) -> int:
        self.calls += 1
        counter = vsurj_count if self.kind == "vsurj" else vesurj_count
        return counter(g, self.h)


class ExternalCommandOracle:
    """Oracle that runs a command per query: the graph goes to its standard
    input in text format, the reply is one line holding a decimal count."""

    def __init__(self, argv: list[str]):
        self.argv = list(argv)
        self.calls = 0

    def eval(self, g: Graph) -> int:
        self.calls += 1
        proc = subprocess.run(
            self.argv,
            input=to_text(g),
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            raise RuntimeError(
                f"oracle command failed with status {proc.returncode}: {proc.stderr.strip()}"
            )
        reply = proc.stdout.strip()
        try:
            return int(reply)
        except ValueError:
            raise RuntimeError(f"oracle reply is not a decimal integer: {reply!r}")


def build_system(alpha: CoeffVector) -> LovaszSystem:
    """Closed set spanning the support of alpha, with matrix and alpha attached."""
    system = lovasz_matrix(closed_set(rep for _, rep, _ in alpha.items()))
    member_keys = {key for key, _ in system.members}
    if not set(alpha.support()) <= member_keys:
        raise InternalCheckError("closure lost part of the coefficient support")
    system.alpha = alpha
    return system


def recover_hom(system: LovaszSystem, oracle, g: Graph, target: GraphKey) -> int:
    """Recover hom(g, target) using exactly one oracle query per member.

    Queries f(g + F) for every member F, solves the homomorphism-matrix
    system exactly, and divides the entry at the target by alpha(target).
    A non-integer or negative outcome means the oracle does not match the
    declared coefficients.
    """
    if system.alpha is None:
        raise ValueError("system carries no coefficients")
    a_t = system.alpha[target]
    if a_t == 0:
        raise ValueError("target lies outside the coefficient support")
    idx = system.index_of(target)
    rhs = [oracle.eval(disjoint_union(g, rep)) for _, rep in system.members]
    beta = solve_linear_system(system.matrix, rhs)
    value = beta[idx] / a_t
    if value.denominator != 1 or value < 0:
        raise OracleMismatchError(
            "recovered value is not a nonnegative integer; "
            "oracle and coefficients disagree"
        )
    return int(value)


def reduction_demo(h: Graph, mode: str, g: Graph, oracle=None) -> dict:
    """End-to-end reduction: build the coefficients for the requested
    surjective counter against h, close the support, query the oracle, and
    recover plain homomorphism counts, reported next to ground truth.

    In vesurj mode, when h is in F but not in C, the hard-edge deletion is
    recovered as a second target.
    """
    from .families import classify_C, classify_F, find_hard_edge

    if mode == "vsurj":
        alpha = alpha_for_vsurj(h)
    elif mode == "vesurj":
        alpha = alpha_for_vesurj(h)
    else:
        raise ValueError("mode must be 'vsurj' or 'vesurj'")
    if oracle is None:
        oracle = CountingOracle(mode, h)
    system = build_system(alpha)

    targets = [canonical_key(h)]
    hard = None
    if mode == "vesurj":
        in_f, _ = classify_F(h)
        in_c, _ = classify_C(h)
        if in_f and not in_c:
            hard = find_hard_edge(h)
            targets.append(canonical_key(delete_nonloop_edge(h, hard)))

    calls_before = getattr(oracle, "calls", None)
    target_reports = []
    for key in targets:
        rep = dict(system.members)[key]
        recovered = recover_hom(system, oracle, g, key)
        truth = hom_count(g, rep)
        target_reports.append(
            {
                "key": key.hex(),
                "graph": to_text(rep),
                "recovered": str(recovered),
                "ground_truth": str(truth),
                "match": recovered == truth,
            }
        )
    queries = None
    if calls_before is not None:
        queries = oracle.calls - calls_before

    return {
        "mode": mode,
        "g": to_text(g),
        "h": to_text(h),
        "alpha": alpha.to_json_entries(),
        "closed_set": [
            {"key": key.hex(), "graph": to_text(rep)} for key, rep in system.members
        ],
        "det": str(system.det),
        "oracle_queries": queries,
        "hard_edge": list(hard) if hard else None,
        "targets": target_reports,
    }
