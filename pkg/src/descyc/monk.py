"""Monk-rule instances: direct evaluation plus constructive move proofs.

An instance fixes the middle argument to the adjacent transposition s_i.  The
value is read off combinatorially: complement the first argument, ask whether
the third is that complement with one inverted pair straightened, and check
whether the straightened positions straddle the column.  The proof generator
turns the same answer into a replayable move certificate ending either at
(id, id, w_0) or at a problem with an all-ascending column.
"""

from __future__ import annotations

from dataclasses import dataclass

from descyc.perm import (
    Perm,
    format_perm,
    has_descent,
    identity,
    length,
    long_element,
    simple_transposition,
    w0_complement,
)
from descyc.problems import (
    DcMove,
    DcPath,
    SchubertProblem,
    apply_move,
    easy_problem,
    is_dc_trivial,
)


class ConstructionError(RuntimeError):
    """The move construction violated an expected invariant; never masked."""


@dataclass(frozen=True)
class MonkInstance:
    pi: Perm
    i: int
    sigma: Perm

    def __post_init__(self):
        n = len(self.pi)
        if len(self.sigma) != n:
            raise ValueError("instance arguments need a common degree")
        if not 1 <= self.i <= n - 1:
            raise ValueError(f"column {self.i} out of range for degree {n}")
        if length(self.pi) + 1 + length(self.sigma) != n * (n - 1) // 2:
            raise ValueError(
                "lengths must satisfy l(pi) + 1 + l(sigma) = n(n-1)/2"
            )

    @property
    def n(self) -> int:
        return len(self.pi)

    def problem(self) -> SchubertProblem:
        return SchubertProblem(
            self.pi, simple_transposition(self.n, self.i), self.sigma
        )


@dataclass(frozen=True)
class MonkValue:
    value: int
    cover: bool          # sigma is the complement of pi with one pair straightened
    straddle: bool       # the straightened positions sit on both sides of the column
    positions: tuple[int, int] | None  # (j, k) when cover


def _cover_positions(kappa: Perm, sigma: Perm) -> tuple[int, int] | None:
    """Positions (j, k), 1-based, where sigma straightens one inverted pair of
    kappa; None if sigma does not arise that way with length dropping by 1."""
    diffs = [idx for idx, (a, b) in enumerate(zip(kappa, sigma), start=1) if a != b]
    if len(diffs) != 2:
        return None
    j, k = diffs
    if sigma[j - 1] != kappa[k - 1] or sigma[k - 1] != kappa[j - 1]:
        return None
    if not kappa[j - 1] > kappa[k - 1]:
        return None
    if length(sigma) != length(kappa) - 1:
        return None
    return j, k


def monk_value(inst: MonkInstance) -> MonkValue:
    """Evaluate the instance: 1 when the straightened pair straddles the
    column, 0 when it sits on one side, 0 ("not a cover") otherwise.

    >>> monk_value(MonkInstance((3,4,1,5,2), 2, (3,1,5,2,4))).value
    1
    """
    kappa = w0_complement(inst.pi)
    pos = _cover_positions(kappa, inst.sigma)
    if pos is None:
        return MonkValue(0, False, False, None)
    j, k = pos
    straddle = j <= inst.i < k
    return MonkValue(1 if straddle else 0, True, straddle, pos)


@dataclass(frozen=True)
class MonkProof:
    path: DcPath
    kind: str                    # "easy" or "trivial"
    witness_column: int | None   # all-ascending column for the trivial case

    @property
    def end(self) -> SchubertProblem:
        return self.path.end


def _slide_move(prob: SchubertProblem, col: int) -> DcMove:
    """The move cycling the unique descent at ``col`` between arguments 1 and 3."""
    first = has_descent(prob.u, col)
    third = has_descent(prob.w, col)
    if first == third:
        raise ConstructionError(
            f"expected exactly one descent among outer arguments at column {col} "
            f"of {prob}"
        )
    return DcMove(col, 1, 3) if first else DcMove(col, 3, 1)


def monk_dc_proof(inst: MonkInstance) -> MonkProof:
    """Constructive certificate for a covered instance.

    Straightened positions are slid together by cycling descents between the
    outer arguments (the target position first down, then the source up); a
    straddling pair funnels through the column itself into the easy problem,
    a one-sided pair lands on an all-ascending column.  Any invariant failure
    raises ConstructionError: it would contradict the rule, so it must never
    be papered over.
    """
    val = monk_value(inst)
    if not val.cover:
        raise ValueError("proof construction requires the covered case")
    start = inst.problem()
    cur = start
    moves: list[DcMove] = []
    guard = inst.n * inst.n + 4

    def positions() -> tuple[int, int]:
        pos = _cover_positions(w0_complement(cur.u), cur.w)
        if pos is None:
            raise ConstructionError(f"cover shape lost at {cur}")
        return pos

    j, k = positions()
    while k - j > 1:
        if len(moves) > guard:
            raise ConstructionError(f"slide failed to converge from {start}")
        if k != inst.i + 1:
            col = k - 1
        elif j != inst.i:
            col = j
        else:
            break
        m = _slide_move(cur, col)
        cur = apply_move(cur, m)
        moves.append(m)
        j2, k2 = positions()
        if k2 - j2 >= k - j:
            raise ConstructionError(f"slide did not shrink the gap at {cur}")
        j, k = j2, k2

    if j == inst.i and k == inst.i + 1:
        m = DcMove(inst.i, 2, 3)
        cur = apply_move(cur, m)
        moves.append(m)
        if cur.w != w0_complement(cur.u):
            raise ConstructionError(f"outer arguments not complementary at {cur}")
        while cur.u != identity(inst.n):
            col = next(c for c in range(1, inst.n) if has_descent(cur.u, c))
            m = DcMove(col, 1, 3)
            cur = apply_move(cur, m)
            moves.append(m)
        if cur != easy_problem(inst.n):
            raise ConstructionError(f"straddling instance did not reach easy: {cur}")
        return MonkProof(DcPath(start, tuple(moves)), "easy", None)

    trivial, witness = is_dc_trivial(cur)
    if not trivial:
        raise ConstructionError(f"one-sided instance not all-ascending: {cur}")
    return MonkProof(DcPath(start, tuple(moves)), "trivial", witness)


@dataclass(frozen=True)
class CrossCheckReport:
    n: int
    checked: int
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def monk_cross_check(n: int, limit: int | None = None, seed: int = 0) -> CrossCheckReport:
    """Compare the rule against the polynomial oracle on every instance of
    degree n (or a seeded sample of ``limit`` instances).  Mismatches are
    collected, and any mismatch is a hard failure for the caller."""
    import random

    from descyc.perm import all_perms, perms_by_length
    from descyc.schubert import symmetric_number

    if n > 5:
        raise ValueError("cross-check supported through degree 5")
    goal = n * (n - 1) // 2
    by_len = perms_by_length(n)
    instances = [
        (pi, i, sigma)
        for pi in all_perms(n)
        if 0 <= goal - 1 - length(pi) <= goal
        for i in range(1, n)
        for sigma in by_len[goal - 1 - length(pi)]
    ]
    if limit is not None and limit < len(instances):
        instances = random.Random(seed).sample(instances, limit)
    mismatches = []
    for pi, i, sigma in instances:
        inst = MonkInstance(pi, i, sigma)
        rule = monk_value(inst).value
        oracle = symmetric_number(pi, simple_transposition(n, i), sigma)
        if rule != oracle:
            mismatches.append(
                f"({format_perm(pi)}, s_{i}, {format_perm(sigma)}): "
                f"rule {rule} oracle {oracle}"
            )
    return CrossCheckReport(n, len(instances), tuple(mismatches))
