"""Schubert polynomials and structure constants via divided differences.

The polynomial for the longest element of S_m is the staircase monomial
x_1^{m-1} x_2^{m-2} ... (single mode) or the product of (x_i - y_j) over
i + j <= m (double mode); every other polynomial is obtained by walking down
with divided-difference operators, which satisfy: a descent at i sends S_w to
S_{w s_i}, an ascent kills it.

``symmetric_number`` is the independent oracle the move system is checked
against: it never looks at descent patterns of the triple, only at polynomial
arithmetic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from descyc.perm import (
    Perm,
    code_to_perm,
    has_descent,
    length,
    long_element,
    right_mult_s,
    w0_complement,
)
from descyc.poly import MAX_VARS, Poly, YPoly, divided_difference, pack, unpack

# Expanding f in the Schubert basis re-multiplies the result and compares with
# f; costs a second pass but turns the greedy elimination into a checked fact.
VERIFY_EXPANSION = True

# A double staircase for S_m has 2^(m(m-1)/2) terms; m = 7 is ~2M terms and
# hundreds of MB, so refuse early rather than fall over mid-computation.
MAX_DOUBLE_STAIRCASE = 6


class MemoryBudgetError(RuntimeError):
    """Raised instead of attempting a computation known to exhaust memory."""


# Memo tables are only ever extended with values that are pure functions of
# the key, so racing writers are benign; the GIL gives read consistency.
_single: dict[Perm, Poly] = {}
_double: dict[Perm, Poly] = {}
_lock = threading.Lock()


def _staircase(m: int, double: bool) -> Poly:
    if not double:
        return Poly._raw({pack([m - 1 - i for i in range(m - 1)]): 1}) if m > 1 else Poly.const(1)
    if m > MAX_DOUBLE_STAIRCASE:
        raise MemoryBudgetError(
            f"double staircase for degree {m} has 2^{m*(m-1)//2} terms; "
            f"supported only up to degree {MAX_DOUBLE_STAIRCASE}"
        )
    poly = Poly.const(1)
    for i in range(1, m):
        for j in range(1, m - i + 1):
            factor = Poly({pack([0] * (i - 1) + [1]): 1, 0: -YPoly.variable(j)})
            poly = poly * factor
    return poly


def schubert_polynomial(w: Perm, double: bool = False) -> Poly:
    """The (single or double) Schubert polynomial of w, memoized.

    >>> schubert_polynomial((1, 3, 2))
    x1 + x2
    """
    cache = _double if double else _single
    got = cache.get(w)
    if got is not None:
        return got
    n = len(w)
    if n - 1 > MAX_VARS:
        raise ValueError(f"degree {n} exceeds the {MAX_VARS + 1} variable budget")
    # climb to the longest element along ascents, then walk back down
    chain: list[tuple[Perm, int]] = []
    u = w
    w0 = long_element(n)
    while u != w0 and u not in cache:
        i = next(i for i in range(1, n) if u[i - 1] < u[i])
        chain.append((u, i))
        u = right_mult_s(u, i)
    poly = cache.get(u)
    if poly is None:
        poly = _staircase(n, double)
        cache[u] = poly
    for v, i in reversed(chain):
        poly = divided_difference(i, poly)
        cache[v] = poly
    return cache[w]


def descent_word(w: Perm) -> tuple[int, ...]:
    """Divided-difference application order for the operator indexed by w.

    Repeatedly extracts the smallest descent; applying the operators in the
    returned order realizes one reduced word of w (any reduced word gives the
    same operator).
    """
    word = []
    u = w
    n = len(u)
    while True:
        i = next((i for i in range(1, n) if u[i - 1] > u[i]), None)
        if i is None:
            return tuple(word)
        word.append(i)
        u = right_mult_s(u, i)


def apply_divided_chain(w: Perm, f: Poly) -> Poly:
    """Apply the divided-difference operator indexed by w to f."""
    for i in descent_word(w):
        if not f:
            return f
        f = divided_difference(i, f)
    return f


@lru_cache(maxsize=1024)
def _product(u: Perm, v: Perm, double: bool) -> Poly:
    return schubert_polynomial(u, double) * schubert_polynomial(v, double)


def structure_constant(u: Perm, v: Perm, w: Perm, double: bool = False):
    """The coefficient of the identity class in the operator image of S_u S_v.

    Single mode returns an int, nonzero only when length(w) equals
    length(u) + length(v); double mode returns the equivariant coefficient as
    a YPoly.  The identity coefficient of a single-mode homogeneous polynomial
    is its constant term; in double mode it is the specialization x := y,
    which kills every non-identity double Schubert polynomial.
    """
    n = len(u)
    if len(v) != n or len(w) != n:
        raise ValueError("structure constant needs a common degree")
    if not double and length(w) > length(u) + length(v):
        return 0
    g = apply_divided_chain(w, _product(u, v, double))
    if double:
        return g.substitute_x_to_y()
    return g.constant_term()


def symmetric_number(u: Perm, v: Perm, w: Perm) -> int:
    """Triple-intersection Schubert number, via the structure-constant route.

    Zero unless the lengths sum to n(n-1)/2.  Fully symmetric in its three
    arguments; the longest argument is moved into the operator slot, which is
    the cheapest of the equivalent computations.
    """
    n = len(u)
    if len(v) != n or len(w) != n:
        raise ValueError("symmetric number needs a common degree")
    if length(u) + length(v) + length(w) != n * (n - 1) // 2:
        return 0
    a, b, c = sorted((u, v, w), key=length)
    return structure_constant(a, b, w0_complement(c))


def expand_in_schubert_basis(f: Poly, double: bool = False) -> dict[Perm, "int | YPoly"]:
    """Expand f over the Schubert basis by greedy leading-term elimination.

    The leading monomial (max total x-degree, ties compared from the last
    variable down) of S_w is x^{code(w)} with unit coefficient, so reading the
    leading exponent vector as a Lehmer code and subtracting strictly shrinks
    the leading term; the loop terminates at zero.  Keys are reported at
    minimal degree (trailing fixed points trimmed); degrees above the input's
    can and do appear.

    >>> expand_in_schubert_basis(Poly.x(2))
    {(1, 3, 2): 1, (2, 1): -1}
    """
    out: dict[Perm, int | YPoly] = {}
    rem = f
    while rem:
        key, coeff = rem.max_term()
        exps = unpack(key)
        perm = code_to_perm(exps)
        if len(perm) - 1 > MAX_VARS:
            raise ValueError(
                f"expansion needs a permutation of degree {len(perm)}, beyond "
                f"the {MAX_VARS + 1} variable budget"
            )
        rank = _order_rank(key)
        rem = rem - schubert_polynomial(perm, double).scaled(coeff)
        assert not rem or _order_rank(rem.max_term()[0]) < rank, \
            "leading-term elimination failed to decrease"
        assert perm not in out
        out[perm] = coeff
    if VERIFY_EXPANSION:
        total = Poly.zero()
        for perm, coeff in out.items():
            total = total + schubert_polynomial(perm, double).scaled(coeff)
        assert total == f, "Schubert-basis expansion failed to re-sum to its input"
    return out


def _order_rank(key: int) -> tuple[int, int]:
    from descyc.poly import monomial_degree

    return (monomial_degree(key), key)


class HypothesisError(ValueError):
    """The arguments violate the premises of the cycling identity."""


@dataclass(frozen=True)
class EquivariantCheck:
    """Outcome of one equivariant descent-cycling identity check."""

    column: int
    case: str  # "vanishing" (middle ascends) or "cycling" (middle descends)
    lhs: YPoly
    rhs: YPoly
    ok: bool


def equivariant_dc_check(u: Perm, v: Perm, w: Perm, i: int) -> EquivariantCheck:
    """Verify the equivariant cycling identity at column i, in double mode.

    Premises: u ascends at i and w descends at i.  Then either v also ascends
    and the constant c_{uv}^w vanishes identically as a y-polynomial, or v
    descends and c_{uv}^w = c_{u,vs}^{ws}.  Premise violations raise
    HypothesisError; they are bad input, not failed checks.
    """
    n = len(u)
    if len(v) != n or len(w) != n:
        raise ValueError("equivariant check needs a common degree")
    if not 1 <= i <= n - 1:
        raise ValueError(f"column {i} out of range for degree {n}")
    if has_descent(u, i):
        raise HypothesisError(f"first argument must ascend at column {i}")
    if not has_descent(w, i):
        raise HypothesisError(f"third argument must descend at column {i}")
    lhs = structure_constant(u, v, w, double=True)
    if not has_descent(v, i):
        rhs = YPoly()
        return EquivariantCheck(i, "vanishing", lhs, rhs, lhs == rhs)
    rhs = structure_constant(u, right_mult_s(v, i), right_mult_s(w, i), double=True)
    return EquivariantCheck(i, "cycling", lhs, rhs, lhs == rhs)


def clear_caches() -> None:
    """Drop all memoized polynomials (mainly for memory-sensitive test runs)."""
    with _lock:
        _single.clear()
        _double.clear()
        _product.cache_clear()
