"""Schubert problems and the descent-cycling move system.

A problem is an ordered triple of permutations of a common degree.  Vertices
of the problem graph have lengths summing to n(n-1)/2; triples one short of
that ("base" triples) sit under the triangles that connect three vertices at
once.  Moving a descent from one argument to another at a fixed column is
legal exactly when that argument is the only one descending there, and the
intersection number is constant along such moves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from descyc.perm import (
    Perm,
    bruhat_leq,
    format_perm,
    has_descent,
    identity,
    length,
    long_element,
    parse_perm,
    right_mult_s,
    validate,
    w0_complement,
)


class InvalidProblemError(ValueError):
    pass


class IllegalMoveError(ValueError):
    pass


@dataclass(frozen=True)
class SchubertProblem:
    u: Perm
    v: Perm
    w: Perm

    def __post_init__(self):
        object.__setattr__(self, "u", validate(self.u))
        object.__setattr__(self, "v", validate(self.v))
        object.__setattr__(self, "w", validate(self.w))
        if not (len(self.u) == len(self.v) == len(self.w)):
            raise InvalidProblemError(
                f"degree mismatch: {len(self.u)}, {len(self.v)}, {len(self.w)}"
            )

    @property
    def n(self) -> int:
        return len(self.u)

    @property
    def args(self) -> tuple[Perm, Perm, Perm]:
        return (self.u, self.v, self.w)

    def arg(self, index: int) -> Perm:
        """Argument by 1-based index."""
        return self.args[index - 1]

    @property
    def length_sum(self) -> int:
        return length(self.u) + length(self.v) + length(self.w)

    @property
    def is_vertex(self) -> bool:
        return self.length_sum == self.n * (self.n - 1) // 2

    @property
    def is_base(self) -> bool:
        return self.length_sum == self.n * (self.n - 1) // 2 - 1

    def replace(self, index: int, p: Perm) -> "SchubertProblem":
        parts = list(self.args)
        parts[index - 1] = p
        return SchubertProblem(*parts)

    def to_obj(self) -> dict:
        return {"u": list(self.u), "v": list(self.v), "w": list(self.w)}

    @classmethod
    def from_obj(cls, obj: dict) -> "SchubertProblem":
        return cls(parse_perm(obj["u"]), parse_perm(obj["v"]), parse_perm(obj["w"]))

    def __str__(self) -> str:
        return f"({format_perm(self.u)}, {format_perm(self.v)}, {format_perm(self.w)})"


def easy_problem(n: int) -> SchubertProblem:
    """The distinguished value-one vertex (id, id, w_0)."""
    return SchubertProblem(identity(n), identity(n), long_element(n))


@dataclass(frozen=True)
class DcMove:
    """Move the descent at ``col`` from argument ``src`` to argument ``tgt``."""

    col: int
    src: int
    tgt: int

    def __post_init__(self):
        if self.src not in (1, 2, 3) or self.tgt not in (1, 2, 3):
            raise ValueError("move arguments are indexed 1..3")
        if self.src == self.tgt:
            raise ValueError("move source and target must differ")

    def reverse(self) -> "DcMove":
        return DcMove(self.col, self.tgt, self.src)

    def to_obj(self) -> dict:
        return {"col": self.col, "from": self.src, "to": self.tgt}

    @classmethod
    def from_obj(cls, obj: dict) -> "DcMove":
        return cls(int(obj["col"]), int(obj["from"]), int(obj["to"]))


def _require_vertex(p: SchubertProblem) -> None:
    if not p.is_vertex:
        raise InvalidProblemError(
            f"length sum {p.length_sum} != {p.n * (p.n - 1) // 2}: not a vertex"
        )


def is_dc_trivial(p: SchubertProblem) -> tuple[bool, int | None]:
    """True with a witness column when all three arguments ascend somewhere.

    >>> is_dc_trivial(SchubertProblem((3,4,1,2), (1,3,4,2), (1,2,3,4)))
    (True, 1)
    """
    _require_vertex(p)
    for i in range(1, p.n):
        if not (has_descent(p.u, i) or has_descent(p.v, i) or has_descent(p.w, i)):
            return True, i
    return False, None


def legal_moves(p: SchubertProblem) -> list[DcMove]:
    """All legal moves: two per column having exactly one descending argument."""
    _require_vertex(p)
    out = []
    for i in range(1, p.n):
        holders = [a for a in (1, 2, 3) if has_descent(p.arg(a), i)]
        if len(holders) == 1:
            src = holders[0]
            out.extend(DcMove(i, src, t) for t in (1, 2, 3) if t != src)
    return out


def apply_move(p: SchubertProblem, m: DcMove) -> SchubertProblem:
    """Apply a move; the source loses its descent at the column, the target
    gains one, and the total length is preserved.  Raises IllegalMoveError
    with the violated clause otherwise."""
    _require_vertex(p)
    if not 1 <= m.col <= p.n - 1:
        raise IllegalMoveError(f"column {m.col} out of range for degree {p.n}")
    holders = [a for a in (1, 2, 3) if has_descent(p.arg(a), m.col)]
    if len(holders) != 1:
        kind = "no descent" if not holders else f"{len(holders)} descents"
        raise IllegalMoveError(
            f"column {m.col} has {kind}; moves need exactly one descending argument"
        )
    if holders[0] != m.src:
        raise IllegalMoveError(
            f"argument {m.src} does not hold the descent at column {m.col} "
            f"(argument {holders[0]} does)"
        )
    out = p.replace(m.src, right_mult_s(p.arg(m.src), m.col))
    out = out.replace(m.tgt, right_mult_s(p.arg(m.tgt), m.col))
    return out


@dataclass(frozen=True)
class DcPath:
    """A replayable certificate: a start problem and a legal move sequence."""

    start: SchubertProblem
    moves: tuple[DcMove, ...] = ()

    def replay(self) -> list[SchubertProblem]:
        """All intermediate problems; raises if any step is illegal."""
        states = [self.start]
        for m in self.moves:
            states.append(apply_move(states[-1], m))
        return states

    @property
    def end(self) -> SchubertProblem:
        return self.replay()[-1]

    def to_obj(self) -> dict:
        return {
            "start": self.start.to_obj(),
            "moves": [m.to_obj() for m in self.moves],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "DcPath":
        return cls(
            SchubertProblem.from_obj(obj["start"]),
            tuple(DcMove.from_obj(m) for m in obj["moves"]),
        )


_State = tuple[Perm, Perm, Perm]


def _state(p: SchubertProblem) -> _State:
    return p.args


def _neighbors(state: _State):
    u, v, w = state
    n = len(u)
    args = (u, v, w)
    for i in range(1, n):
        holders = [a for a in range(3) if args[a][i - 1] > args[a][i]]
        if len(holders) == 1:
            src = holders[0]
            moved_src = right_mult_s(args[src], i)
            for tgt in range(3):
                if tgt == src:
                    continue
                out = list(args)
                out[src] = moved_src
                out[tgt] = right_mult_s(args[tgt], i)
                yield DcMove(i, src + 1, tgt + 1), tuple(out)


def dc_path(p: SchubertProblem, goal: str = "easy") -> DcPath | None:
    """Breadth-first search for a move certificate, or None if unreachable.

    goal "easy" targets (id, id, w_0) with a bidirectional search; goal
    "trivial" walks outward until any problem with an all-ascending column
    turns up.
    """
    _require_vertex(p)
    if goal not in ("easy", "trivial"):
        raise ValueError(f"goal must be 'easy' or 'trivial', got {goal!r}")
    start = _state(p)

    if goal == "trivial":
        if is_dc_trivial(p)[0]:
            return DcPath(p, ())
        seen: dict[_State, tuple[_State, DcMove] | None] = {start: None}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for move, nxt in _neighbors(cur):
                if nxt in seen:
                    continue
                seen[nxt] = (cur, move)
                prob = SchubertProblem(*nxt)
                if is_dc_trivial(prob)[0]:
                    return DcPath(p, _backtrack(seen, nxt))
                queue.append(nxt)
        return None

    target = _state(easy_problem(p.n))
    if start == target:
        return DcPath(p, ())
    # bidirectional BFS; the backward tree stores, per state, the move that
    # steps one closer to the target
    fwd: dict[_State, tuple[_State, DcMove] | None] = {start: None}
    bwd: dict[_State, tuple[_State, DcMove] | None] = {target: None}
    fq, bq = deque([start]), deque([target])
    while fq and bq:
        if len(fq) <= len(bq):
            frontier, tree, other, backward = fq, fwd, bwd, False
        else:
            frontier, tree, other, backward = bq, bwd, fwd, True
        for _ in range(len(frontier)):
            cur = frontier.popleft()
            for move, nxt in _neighbors(cur):
                if nxt in tree:
                    continue
                tree[nxt] = (cur, move.reverse() if backward else move)
                if nxt in other:
                    head = _backtrack(fwd, nxt)
                    tail = _forward_track(bwd, nxt)
                    return DcPath(p, head + tail)
                frontier.append(nxt)
    return None


def _backtrack(tree, state) -> tuple[DcMove, ...]:
    moves = []
    while tree[state] is not None:
        prev, move = tree[state]
        moves.append(move)
        state = prev
    return tuple(reversed(moves))


def _forward_track(tree, state) -> tuple[DcMove, ...]:
    moves = []
    while tree[state] is not None:
        prev, move = tree[state]
        moves.append(move)
        state = prev
    return tuple(moves)


def stabilize(p: SchubertProblem) -> SchubertProblem:
    """Embed a degree-n vertex into degree n+1, preserving its number.

    The new top value is appended to the first two arguments (no new
    inversions); the third argument's entries are incremented and a final 1 is
    appended, adding exactly the n inversions the larger degree demands.  The
    complement of the new third argument is the complement of the old one with
    a fixed point appended, so the underlying structure constant is untouched.

    >>> str(stabilize(SchubertProblem((2,1,4,3), (1,2,4,3), (3,2,1,4))))
    '(21435, 12435, 43251)'
    """
    _require_vertex(p)
    n = p.n
    out = SchubertProblem(
        p.u + (n + 1,),
        p.v + (n + 1,),
        tuple(x + 1 for x in p.w) + (1,),
    )
    assert out.is_vertex
    return out


def bruhat_vanishing_check(p: SchubertProblem) -> bool:
    """False when the intersection number is forced to vanish by Bruhat order.

    Nonvanishing requires each argument to sit below the complement of each
    other argument; the condition is symmetric in every pair.  True only means
    "no conclusion".
    """
    _require_vertex(p)
    pairs = ((p.u, p.v), (p.u, p.w), (p.v, p.w))
    return all(bruhat_leq(a, w0_complement(b)) for a, b in pairs)
