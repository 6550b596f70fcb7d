"""
The Iwahori-Hecke algebra of S_n over Z[x, x^-1].

Standard basis {H_w}, with H_s H_w = H_{sw} when the product is longer and
H_{sw} + (x - x^-1) H_w otherwise; the bar involution fixes each H_s up to
the correction -(x - x^-1) and inverts x.  The Kazhdan-Lusztig basis element
for w is the unique bar-invariant element lying in H_w plus an
x^-1 Z[x^-1]-combination of shorter basis elements.  This module exists to
cross-validate the canonical-basis engine and the cell machinery against
the classical picture, so it stays deliberately small.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _permutations

from .laurent import ONE, X_INV, X_MINUS_XINV, LaurentPoly
from .perm import Permutation, word_length

DEFAULT_MAX_N = 6


class HeckeElement:
    """A finite Z[x,x^-1]-combination of standard basis elements H_w."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, w) -> "HeckeElement":
        word = w.word if isinstance(w, Permutation) else tuple(w)
        return cls({word: ONE})

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls.basis(tuple(range(1, n + 1)))

    def coeff(self, w) -> LaurentPoly:
        word = w.word if isinstance(w, Permutation) else tuple(w)
        return self.terms.get(word, LaurentPoly())

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t[w] + c if w in t else c
        return HeckeElement(t)

    def __sub__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = t[w] - c if w in t else -c
        return HeckeElement(t)

    def scale(self, p: LaurentPoly) -> "HeckeElement":
        return HeckeElement({w: c * p for w, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "HeckeElement(0)"
        bits = [f"({c})*H{list(w)}" for w, c in sorted(self.terms.items())]
        return " + ".join(bits)


def _s_mul_word(i: int, word):
    """One-line word of s_i * w (swap the values i and i+1)."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in word)


def _left_ascent(word, i: int) -> bool:
    """True iff l(s_i w) > l(w), i.e. i appears before i+1 in the word."""
    return word.index(i) < word.index(i + 1)


def h_s_mul(i: int, h: HeckeElement) -> HeckeElement:
    """Left multiplication by H_{s_i}."""
    out = {}

    def add(w, c):
        out[w] = out[w] + c if w in out else c

    for w, c in h.terms.items():
        if not 1 <= i <= len(w) - 1:
            raise ValueError(f"generator index {i} out of range for n={len(w)}")
        sw = _s_mul_word(i, w)
        add(sw, c)
        if not _left_ascent(w, i):
            add(w, c * X_MINUS_XINV)
    return HeckeElement(out)


def reduced_word(w) -> tuple:
    """The lexicographically least reduced word of w."""
    word = w.word if isinstance(w, Permutation) else tuple(w)
    letters = []
    while True:
        for i in range(1, len(word)):
            if word.index(i) > word.index(i + 1):  # left descent
                letters.append(i)
                word = _s_mul_word(i, word)
                break
        else:
            return tuple(letters)


@lru_cache(maxsize=None)
def _bar_basis(word) -> HeckeElement:
    """bar(H_w), as the product of (H_s - (x - x^-1)) over a reduced word of w."""
    rw = reduced_word(word)
    acc = HeckeElement.unit(len(word))
    for i in reversed(rw):
        acc = h_s_mul(i, acc) - acc.scale(X_MINUS_XINV)
    return acc


def h_bar(h: HeckeElement) -> HeckeElement:
    """The bar involution, extended bar-semilinearly from the basis."""
    out = HeckeElement()
    for w, c in h.terms.items():
        out = out + _bar_basis(w).scale(c.bar())
    return out


def _sorted_perms(n: int):
    """All of S_n as words, by (length, word); the identity comes first."""
    return sorted((tuple(p) for p in _permutations(range(1, n + 1))),
                  key=lambda w: (word_length(w), w))


def kl_table(n: int):
    """
    Kazhdan-Lusztig coefficient columns and mu values for S_n.

    Returns (words, columns, mu) where columns[w][y] is the coefficient of
    H_y in the KL basis element of w and mu[y, w] is its x^-1 coefficient.
    Each column is produced by the length recursion: peel off a left descent
    s of w, multiply the shorter column by H_s + x^-1, and subtract mu-many
    copies of lower columns keyed by their left descents.
    """
    words = _sorted_perms(n)
    columns = {}
    mu = {}
    mu_by_col = {w: {} for w in words}
    for w in words:
        if word_length(w) == 0:
            columns[w] = {w: ONE}
            continue
        i = next(j for j in range(1, n) if w.index(j) > w.index(j + 1))
        v = _s_mul_word(i, w)
        col_v = columns[v]
        col = {}

        def add(u, c):
            col[u] = col[u] + c if u in col else c

        # (H_s + x^-1) * column of v
        for y, c in col_v.items():
            add(_s_mul_word(i, y), c)
            add(y, c * X_INV)
            if not _left_ascent(y, i):
                add(y, c * X_MINUS_XINV)
        for y, m in mu_by_col[v].items():
            if not _left_ascent(y, i):
                for u, c in columns[y].items():
                    add(u, c * (-m))
        col = {y: c for y, c in col.items() if c}
        if col.get(w) != ONE:
            raise RuntimeError(f"KL column of {w} is not unitriangular")
        lw = word_length(w)
        for y, c in col.items():
            if y != w and (word_length(y) >= lw or not c.in_neg_span()):
                raise RuntimeError(f"KL column of {w} has a bad term at {y}: {c}")
        columns[w] = col
        ml = {y: c.coeff(-1) for y, c in col.items() if y != w and c.coeff(-1)}
        mu_by_col[w] = ml
        for y, m in ml.items():
            mu[(y, w)] = m
    return words, columns, mu


def kl_basis(n: int, max_n: int = DEFAULT_MAX_N):
    """The KL basis of H(S_n) as a map from words to HeckeElements."""
    if n > max_n:
        raise ValueError(f"n={n} exceeds the bound {max_n}; pass max_n to override")
    _, columns, _ = kl_table(n)
    return {w: HeckeElement(col) for w, col in columns.items()}


def asc_left(word) -> frozenset:
    return frozenset(i for i in range(1, len(word)) if _left_ascent(word, i))


def asc_right(word) -> frozenset:
    # l(w s_i) > l(w) iff the values at positions i, i+1 increase
    return frozenset(i for i in range(1, len(word)) if word[i - 1] < word[i])


def kl_wgraph(n: int, side: str, reduced: bool = True, max_n: int = DEFAULT_MAX_N):
    """The left or right Kazhdan-Lusztig W-graph of S_n."""
    from .wgraph import WGraph, symmetrize_mu

    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the bound {max_n}; pass max_n to override")
    words, _, mu = kl_table(n)
    index = {w: k for k, w in enumerate(words)}
    tau_fn = asc_left if side == "left" else asc_right
    tau = tuple(tau_fn(w) for w in words)
    omega = symmetrize_mu({(index[y], index[w]): m for (y, w), m in mu.items()})
    return WGraph(
        n=n,
        variant=f"kl_{side}",
        reduced=reduced,
        vertices=tuple(words),
        tau=tau,
        omega=omega,
    )


def kl_cells(n: int, side: str, max_n: int = DEFAULT_MAX_N):
    """Cells of the left/right KL graph, as lists of one-line words."""
    from .wgraph import cells

    g = kl_wgraph(n, side, reduced=True, max_n=max_n)
    parts, _ = cells(g)
    return [[g.vertices[v] for v in part] for part in parts]
