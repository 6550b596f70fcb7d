"""
Sparse integer Laurent polynomials in one variable x.

Coefficients are Python ints, so all arithmetic is exact at any size.
A polynomial is stored as a dict mapping exponent -> nonzero coefficient;
zero coefficients are never kept.
"""

from __future__ import annotations


class LaurentPoly:
    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._t = {}
        else:
            self._t = {e: c for e, c in terms.items() if c != 0}
        self._hash = None

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPoly":
        """Monomial coeff * x**exp."""
        p = cls.__new__(cls)
        p._t = {exp: coeff} if coeff != 0 else {}
        p._hash = None
        return p

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentPoly":
        t = {}
        for e, c in pairs:
            t[e] = t.get(e, 0) + c
        return cls(t)

    def items(self):
        return self._t.items()

    def coeff(self, exp: int) -> int:
        return self._t.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._t

    def in_neg_span(self) -> bool:
        """True iff every exponent is <= -1 (vacuously true for 0)."""
        return all(e <= -1 for e in self._t)

    def bar(self) -> "LaurentPoly":
        """The involution x -> x**-1, i.e. negate every exponent."""
        p = LaurentPoly.__new__(LaurentPoly)
        p._t = {-e: c for e, c in self._t.items()}
        p._hash = None
        return p

    def eval_one(self) -> int:
        """Evaluate at x = 1 (a ring homomorphism to the integers)."""
        return sum(self._t.values())

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            elif e in t:
                del t[e]
        p = LaurentPoly.__new__(LaurentPoly)
        p._t = t
        p._hash = None
        return p

    def __neg__(self):
        p = LaurentPoly.__new__(LaurentPoly)
        p._t = {e: -c for e, c in self._t.items()}
        p._hash = None
        return p

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) - c
            if v:
                t[e] = v
            elif e in t:
                del t[e]
        p = LaurentPoly.__new__(LaurentPoly)
        p._t = t
        p._hash = None
        return p

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            p = LaurentPoly.__new__(LaurentPoly)
            p._t = {e: c * other for e, c in self._t.items()}
            p._hash = None
            return p
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        t = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = e1 + e2
                v = t.get(e, 0) + c1 * c2
                if v:
                    t[e] = v
                elif e in t:
                    del t[e]
        p = LaurentPoly.__new__(LaurentPoly)
        p._t = t
        p._hash = None
        return p

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def to_pairs(self):
        """Canonical serialized form: [exponent, coefficient] pairs, ascending exponent."""
        return [[e, self._t[e]] for e in sorted(self._t)]

    def __repr__(self):
        if not self._t:
            return "0"
        bits = []
        for e in sorted(self._t, reverse=True):
            c = self._t[e]
            if e == 0:
                bits.append(f"{c}")
            else:
                xe = "x" if e == 1 else f"x^{e}"
                if c == 1:
                    bits.append(xe)
                elif c == -1:
                    bits.append(f"-{xe}")
                else:
                    bits.append(f"{c}*{xe}")
        out = bits[0]
        for b in bits[1:]:
            out += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
        return out


ZERO = LaurentPoly.term(0)
ONE = LaurentPoly.term(1)
X = LaurentPoly.term(1, 1)
X_INV = LaurentPoly.term(1, -1)
# x - x^-1, the constant in the quadratic relation of the Hecke algebra
X_MINUS_XINV = X - X_INV


def arith(p: LaurentPoly, q: LaurentPoly, kind: str) -> LaurentPoly:
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def coeff(p: LaurentPoly, exp: int) -> int:
    return p.coeff(exp)


def in_neg_span(p: LaurentPoly) -> bool:
    return p.in_neg_span()


def from_pairs(pairs) -> LaurentPoly:
    return LaurentPoly.from_pairs(pairs)
