"""Sparse multivariate polynomials over exact integers.

Monomials are packed into a single Python int, 8 bits per variable with x_1 in
the lowest byte, so multiplying monomials is integer addition and dictionaries
of terms stay fast at graph-sweep scale.  Exponents must stay below 256; every
computation in this package is degree-bounded far under that.

Two coefficient domains are supported: plain ints ("single" mode) and ``YPoly``
values, integer polynomials in a second variable set y_1..y_16 ("double" mode).
``Poly`` arithmetic is agnostic: coefficients only need +, *, unary -, and
truthiness, which both ints and ``YPoly`` provide.

All values are immutable by convention: no operation mutates its inputs.
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_VARS = 16
_BITS = 8
_MASK = 0xFF
_MAX_EXP = 255


def pack(exps: Sequence[int]) -> int:
    """Pack an exponent vector into a monomial key."""
    if len(exps) > MAX_VARS:
        raise ValueError(f"at most {MAX_VARS} variables supported, got {len(exps)}")
    key = 0
    for i, e in enumerate(exps):
        if not 0 <= e <= _MAX_EXP:
            raise ValueError(f"exponent {e} out of range 0..{_MAX_EXP}")
        key |= int(e) << (_BITS * i)
    return key


def unpack(key: int) -> tuple[int, ...]:
    """Exponent vector of a key, trailing zeros stripped."""
    exps = []
    while key:
        exps.append(key & _MASK)
        key >>= _BITS
    return tuple(exps)


def monomial_degree(key: int) -> int:
    deg = 0
    while key:
        deg += key & _MASK
        key >>= _BITS
    return deg


def _exps_full(key: int) -> tuple[int, ...]:
    return tuple((key >> (_BITS * i)) & _MASK for i in range(MAX_VARS))


class YPoly:
    """An exact-integer polynomial in y_1..y_16, used as a coefficient domain.

    Supports mixed arithmetic with ints, which are treated as constants.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, c: int) -> "YPoly":
        return cls({0: c} if c else {})

    @classmethod
    def variable(cls, j: int) -> "YPoly":
        if not 1 <= j <= MAX_VARS:
            raise ValueError(f"variable index {j} out of range")
        return cls({1 << (_BITS * (j - 1)): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {0: other}
        if isinstance(other, YPoly):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "YPoly | int") -> "YPoly":
        if isinstance(other, int):
            other = YPoly.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        res = YPoly.__new__(YPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "YPoly":
        res = YPoly.__new__(YPoly)
        res.terms = {k: -v for k, v in self.terms.items()}
        return res

    def __sub__(self, other: "YPoly | int") -> "YPoly":
        return self + (-other if isinstance(other, YPoly) else -other)

    def __rsub__(self, other: int) -> "YPoly":
        return (-self) + other

    def __mul__(self, other: "YPoly | int") -> "YPoly":
        if isinstance(other, int):
            if not other:
                return YPoly()
            res = YPoly.__new__(YPoly)
            res.terms = {k: v * other for k, v in self.terms.items()}
            return res
        out: dict[int, int] = {}
        get = out.get
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                s = get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        res = YPoly.__new__(YPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def shifted(self, key: int) -> "YPoly":
        """Multiply by the monomial y^key (key in packed form)."""
        res = YPoly.__new__(YPoly)
        res.terms = {k + key: v for k, v in self.terms.items()}
        return res

    def degree(self) -> int:
        return max((monomial_degree(k) for k in self.terms), default=0)

    def to_obj(self) -> list[dict]:
        return [
            {"y": list(unpack(k)), "c": str(v)}
            for k, v in sorted(self.terms.items())
        ]

    @classmethod
    def from_obj(cls, obj: Iterable[dict]) -> "YPoly":
        out: dict[int, int] = {}
        for t in obj:
            k = pack(t.get("y", []))
            out[k] = out.get(k, 0) + int(t["c"])
        return cls(out)

    def __repr__(self) -> str:
        return _render(self.terms, "y") or "0"


Coeff = "int | YPoly"


class Poly:
    """Sparse polynomial in x_1..x_16 with int or YPoly coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, "int | YPoly"] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        res = cls.__new__(cls)
        res.terms = terms
        return res

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    @classmethod
    def const(cls, c: "int | YPoly") -> "Poly":
        return cls({0: c})

    @classmethod
    def x(cls, i: int, exp: int = 1) -> "Poly":
        if not 1 <= i <= MAX_VARS:
            raise ValueError(f"variable index {i} out of range")
        return cls._raw({pack([0] * (i - 1) + [exp]): 1})

    @classmethod
    def from_exps(cls, terms: dict[tuple[int, ...], "int | YPoly"]) -> "Poly":
        return cls({pack(e): c for e, c in terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {0: other}
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Poly._raw(out)

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) - v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Poly._raw(out)

    def __mul__(self, other: "Poly | int | YPoly") -> "Poly":
        if isinstance(other, (int, YPoly)):
            return self.scaled(other)
        out: dict[int, int | YPoly] = {}
        get = out.get
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = k1 + k2
                s = get(k, 0) + v1 * v2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return Poly._raw(out)

    def __rmul__(self, other: "int | YPoly") -> "Poly":
        return self.scaled(other)

    def scaled(self, c: "int | YPoly") -> "Poly":
        if not c:
            return Poly.zero()
        return Poly({k: v * c for k, v in self.terms.items()})

    def degree(self) -> int:
        """Total x-degree."""
        return max((monomial_degree(k) for k in self.terms), default=0)

    def num_vars(self) -> int:
        nv = 0
        for k in self.terms:
            e = unpack(k)
            nv = max(nv, len(e))
        return nv

    def constant_term(self) -> "int | YPoly":
        return self.terms.get(0, 0)

    def max_term(self) -> tuple[int, "int | YPoly"]:
        """Leading term under (total x-degree, then packed-key order).

        The packed key compares exponent vectors lexicographically from the
        last variable down; under this order the leading monomial of every
        Schubert polynomial is exactly its Lehmer-code monomial, which is what
        makes greedy basis elimination strictly decrease.
        """
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = max(self.terms, key=lambda k: (monomial_degree(k), k))
        return key, self.terms[key]

    def swap_vars(self, i: int) -> "Poly":
        """Exchange x_i and x_{i+1} in every monomial."""
        lo, hi = _BITS * (i - 1), _BITS * i
        out: dict[int, int | YPoly] = {}
        for k, v in self.terms.items():
            p = (k >> lo) & _MASK
            q = (k >> hi) & _MASK
            k2 = k - (p << lo) - (q << hi) + (q << lo) + (p << hi)
            s = out.get(k2, 0) + v
            if s:
                out[k2] = s
            else:
                out.pop(k2, None)
        return Poly._raw(out)

    def substitute_x_to_y(self) -> YPoly:
        """Evaluate at x_i := y_i; in single mode the result is a YPoly too."""
        acc = YPoly()
        for k, v in self.terms.items():
            if isinstance(v, YPoly):
                acc = acc + v.shifted(k)
            else:
                acc = acc + YPoly({k: v})
        return acc

    def map_coeffs(self, f) -> "Poly":
        return Poly({k: f(v) for k, v in self.terms.items()})

    def to_obj(self) -> list[dict]:
        """JSON form: a list of {x, y?, c} term records."""
        out = []
        for k in sorted(self.terms):
            v = self.terms[k]
            x = list(unpack(k))
            if isinstance(v, YPoly):
                for ky in sorted(v.terms):
                    out.append({"x": x, "y": list(unpack(ky)), "c": str(v.terms[ky])})
            else:
                out.append({"x": x, "c": str(v)})
        return out

    @classmethod
    def from_obj(cls, obj: Iterable[dict]) -> "Poly":
        single: dict[int, int] = {}
        double: dict[int, dict[int, int]] = {}
        is_double = False
        for t in obj:
            k = pack(t.get("x", []))
            c = int(t["c"])
            if "y" in t:
                is_double = True
                double.setdefault(k, {})
                ky = pack(t["y"])
                double[k][ky] = double[k].get(ky, 0) + c
            else:
                single[k] = single.get(k, 0) + c
        if is_double:
            for k, c in single.items():
                double.setdefault(k, {})
                double[k][0] = double[k].get(0, 0) + c
            return cls({k: YPoly(t) for k, t in double.items()})
        return cls(single)

    def __repr__(self) -> str:
        return _render(self.terms, "x") or "0"


def _render(terms: dict, letter: str) -> str:
    parts = []
    for k in sorted(terms, key=lambda k: (-monomial_degree(k), _exps_full(k))):
        v = terms[k]
        mono = "*".join(
            f"{letter}{i}" + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(unpack(k), start=1)
            if e
        )
        if isinstance(v, YPoly):
            cs = repr(v)
            cs = cs if ("+" not in cs and " - " not in cs) else f"({cs})"
        else:
            cs = str(v)
        if mono:
            parts.append(mono if cs == "1" else f"{cs}*{mono}")
        else:
            parts.append(cs)
    return " + ".join(parts).replace("+ -", "- ")


def divided_difference(i: int, f: Poly) -> Poly:
    """(f - swap_i(f)) / (x_i - x_{i+1}), computed term by term.

    For a monomial x_i^p x_{i+1}^q the quotient telescopes into |p - q|
    monomials, so the division is exact by construction and the degree drops
    by one.  Coefficients (including y-polynomials in double mode) pass
    through untouched.
    """
    if i < 1 or i + 1 > MAX_VARS:
        raise ValueError(f"divided difference index {i} out of range")
    lo, hi = _BITS * (i - 1), _BITS * i
    out: dict[int, int | YPoly] = {}
    get = out.get
    for k, v in f.terms.items():
        p = (k >> lo) & _MASK
        q = (k >> hi) & _MASK
        if p == q:
            continue
        base = k - (p << lo) - (q << hi)
        if p > q:
            for t in range(p - q):
                k2 = base + ((p - 1 - t) << lo) + ((q + t) << hi)
                s = get(k2, 0) + v
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
        else:
            for t in range(q - p):
                k2 = base + ((q - 1 - t) << lo) + ((p + t) << hi)
                s = get(k2, 0) - v
                if s:
                    out[k2] = s
                else:
                    out.pop(k2, None)
    return Poly._raw(out)
