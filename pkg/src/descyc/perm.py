"""Permutations of {1..n} in one-line notation.

A permutation is a tuple of the integers 1..n, each appearing once; ``p[i-1]``
is the image of position ``i``.  These are immutable values, so every function
here is pure.  Positions (columns) are 1-based throughout, matching the usual
"descent in the i-th place" convention.

>>> length((2, 1, 4, 3))
2
>>> sorted(descent_set((3, 4, 1, 5, 2)))
[2, 4]
>>> w0_complement((3, 4, 1, 5, 2))
(3, 2, 5, 1, 4)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def validate(word: Iterable[int]) -> Perm:
    """Return ``word`` as a permutation tuple, or raise ValueError."""
    p = tuple(int(x) for x in word)
    n = len(p)
    if n < 1:
        raise ValueError("permutation must have degree >= 1")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p}")
    return p


def parse_perm(text: str | Sequence[int]) -> Perm:
    """Parse a permutation from a digit string (n <= 9) or an integer sequence.

    >>> parse_perm("34152")
    (3, 4, 1, 5, 2)
    >>> parse_perm([3, 4, 1, 5, 2])
    (3, 4, 1, 5, 2)
    """
    if isinstance(text, str):
        s = text.strip()
        if not s:
            raise ValueError("empty permutation")
        if s.startswith("["):
            import json

            try:
                return validate(json.loads(s))
            except (TypeError, json.JSONDecodeError) as exc:
                raise ValueError(f"invalid permutation {text!r}: {exc}") from None
        for pos, ch in enumerate(s, start=1):
            if not ch.isdigit() or ch == "0":
                raise ValueError(
                    f"invalid permutation {text!r}: character {ch!r} at position {pos}"
                )
        return validate(int(ch) for ch in s)
    return validate(text)


def format_perm(p: Perm) -> str:
    """Compact digit string for n <= 9, bracketed list otherwise."""
    if len(p) <= 9:
        return "".join(str(x) for x in p)
    return str(list(p))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def long_element(n: int) -> Perm:
    """The order-reversing permutation n, n-1, ..., 1."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return tuple(range(n, 0, -1))


def simple_transposition(n: int, i: int) -> Perm:
    """The adjacent transposition swapping i and i+1, as a permutation of 1..n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"transposition index {i} out of range for degree {n}")
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return tuple(word)


def length(p: Perm) -> int:
    """Number of inversions of p.

    >>> length((4, 3, 2, 1))
    6
    """
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def has_descent(p: Perm, i: int) -> bool:
    """True iff p descends in the i-th place (1-based), i.e. p(i) > p(i+1)."""
    return p[i - 1] > p[i]


def descent_set(p: Perm) -> frozenset[int]:
    """Positions i in 1..n-1 with p(i) > p(i+1)."""
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def right_mult_s(p: Perm, i: int) -> Perm:
    """p * s_i: swap the entries in positions i and i+1 (1-based).

    Length changes by exactly one: +1 if p ascends at i, -1 if it descends.
    """
    if not 1 <= i <= len(p) - 1:
        raise ValueError(f"position {i} out of range for degree {len(p)}")
    word = list(p)
    word[i - 1], word[i] = word[i], word[i - 1]
    return tuple(word)


def w0_complement(p: Perm) -> Perm:
    """w_0 composed with p: every value j replaced by n+1-j.

    >>> w0_complement((3, 4, 1, 5, 2))
    (3, 2, 5, 1, 4)
    """
    n = len(p)
    return tuple(n + 1 - x for x in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def bruhat_leq(a: Perm, b: Perm) -> bool:
    """Bruhat order comparison by rank-matrix dominance.

    a <= b iff for all i, j: #{k <= i : a(k) >= j} <= #{k <= i : b(k) >= j}.
    O(n^2) once the cumulative tables are built, so suitable for graph-scale
    sweeps.
    """
    n = len(a)
    if len(b) != n:
        raise ValueError(f"degree mismatch: {len(a)} vs {len(b)}")
    # row i of the table is row i-1 plus the indicator of a(i) >= j
    ca = [0] * (n + 2)
    cb = [0] * (n + 2)
    for i in range(n):
        for j in range(1, a[i] + 1):
            ca[j] += 1
        for j in range(1, b[i] + 1):
            cb[j] += 1
        for j in range(1, n + 1):
            if ca[j] > cb[j]:
                return False
    return True


def covered_by_list(b: Perm) -> list[Perm]:
    """All a with a <. b: length(a) = length(b) - 1 and a <= b.

    Each cover is b with one inverted value pair swapped back into order; the
    pair (i, j) qualifies exactly when no intermediate position holds a value
    between b(j) and b(i).

    >>> covered_by_list((3, 2, 5, 1, 4))
    [(2, 3, 5, 1, 4), (3, 1, 5, 2, 4), (3, 2, 1, 5, 4), (3, 2, 4, 1, 5)]
    """
    n = len(b)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if b[i] > b[j] and not any(b[j] < b[k] < b[i] for k in range(i + 1, j)):
                word = list(b)
                word[i], word[j] = word[j], word[i]
                out.append(tuple(word))
    return sorted(out)


def code(p: Perm) -> tuple[int, ...]:
    """Lehmer code: code(p)[i] = #{j > i : p(j) < p(i)}; entries sum to length(p)."""
    n = len(p)
    return tuple(
        sum(1 for j in range(i + 1, n) if p[j] < p[i]) for i in range(n)
    )


def code_to_perm(c: Sequence[int]) -> Perm:
    """Inverse of ``code``, on the smallest degree where the code is valid.

    >>> code_to_perm((2,))
    (3, 1, 2)
    >>> code_to_perm((1, 0, 1, 0))
    (2, 1, 4, 3)
    """
    c = tuple(int(x) for x in c)
    if any(x < 0 for x in c):
        raise ValueError(f"negative code entry in {c}")
    m = max([1, len(c)] + [x + i for i, x in enumerate(c, start=1)])
    avail = list(range(1, m + 1))
    word = []
    for i in range(m):
        k = c[i] if i < len(c) else 0
        word.append(avail.pop(k))
    return tuple(word)


def trim_fixed_tail(p: Perm) -> Perm:
    """Drop trailing fixed points, down to degree 1: the minimal-degree
    representative of p among its stabilizations.

    >>> trim_fixed_tail((2, 1, 3, 4))
    (2, 1)
    >>> trim_fixed_tail((1, 2, 3))
    (1,)
    """
    m = len(p)
    while m > 1 and p[m - 1] == m:
        m -= 1
    return p[:m]


def is_grassmannian(p: Perm) -> tuple[bool, int | None]:
    """(True, descent position) if p has exactly one descent, (True, None) for
    the identity, (False, None) otherwise."""
    ds = sorted(descent_set(p))
    if not ds:
        return True, None
    if len(ds) == 1:
        return True, ds[0]
    return False, None


def lex_rank(p: Perm) -> int:
    """Rank of p among all permutations of its degree in lexicographic order."""
    n = len(p)
    c = code(p)
    rank = 0
    fact = 1
    for i in range(n - 2, -1, -1):
        # fact == (n-1-i)! at this point
        rank += c[i] * fact
        fact *= n - i
    return rank


def lex_unrank(n: int, rank: int) -> Perm:
    facts = [1] * n
    for i in range(1, n):
        facts[i] = facts[i - 1] * i
    if not 0 <= rank < facts[n - 1] * n:
        raise ValueError(f"rank {rank} out of range for degree {n}")
    c = []
    for i in range(n - 1, -1, -1):
        c.append(rank // facts[i])
        rank %= facts[i]
    return code_to_perm(c)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All permutations of 1..n in lexicographic order (index = lex_rank)."""
    return tuple(itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def perms_by_length(n: int) -> tuple[tuple[Perm, ...], ...]:
    """perms_by_length(n)[l] lists the permutations of 1..n with l inversions."""
    buckets: list[list[Perm]] = [[] for _ in range(n * (n - 1) // 2 + 1)]
    for p in all_perms(n):
        buckets[length(p)].append(p)
    return tuple(tuple(b) for b in buckets)
