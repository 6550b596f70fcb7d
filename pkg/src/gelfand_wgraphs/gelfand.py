"""
Two Gelfand models for the Hecke algebra of S_n and their canonical bases.

The models M and N are free Z[x,x^-1]-modules whose bases are indexed by
fixed-point-free involutions of [2n]: the images of I_n under an ascending
embedding (variant "asc", module M) or a descending one (variant "des",
module N).  A generator H_{s_i} with i < n acts through the conjugation
z -> s_i z s_i except at weak positions, where it scales by x or -x^-1;
the two modules differ only in which sign the weak ascents and descents
take.

Each model carries a bar operator determined by fixing the basis vectors
without strict descents, and a canonical basis: the unique bar-invariant
family that is unitriangular over the standard basis with lower terms in
x^-1 Z[x^-1].  The x^-1 coefficients of the transition matrix (the mu
table) are what the W-graph layer consumes.

Indices i always range over [n-1] here even though vertex words live on
[2n]; the model only sees the first n positions' interactions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .beissinger import p_cbs, p_rbs
from .laurent import ONE, X, X_INV, X_MINUS_XINV, LaurentPoly
from .perm import Involution, Permutation, enumerate_involutions, word_conj_s, word_length
from .tableau import Tableau, restrict

# classification of an index i in [n-1] at a vertex z
ASC_LT, DES_LT, ASC_EQ, DES_EQ = 0, 1, 2, 3

_VARIANT_MSG = "variant must be 'asc' or 'des'"


def one_fpf(i: int) -> int:
    """The involution of the integers matching 2k-1 with 2k."""
    return i + 1 if i % 2 else i - 1


class GelfandVertex:
    """A fixed-point-free involution of [2n] lying in the chosen embedding's image."""

    __slots__ = ("word", "n", "variant")

    def __init__(self, word, n: int, variant: str, validate: bool = True):
        word = tuple(word)
        if variant not in ("asc", "des"):
            raise ValueError(_VARIANT_MSG)
        if validate:
            if len(word) != 2 * n:
                raise ValueError(f"vertex word must have length 2n={2*n}")
            inv = Involution(Permutation(word))
            if inv.fixed_points():
                raise ValueError("vertex must be fixed-point-free")
            if embed(inverse_embed(word, n), variant).word != word:
                raise ValueError(f"{word} is not in the image of the {variant} embedding")
        object.__setattr__(self, "word", word)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "variant", variant)

    @property
    def involution(self) -> Involution:
        return Involution(Permutation(self.word))

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def length(self) -> int:
        return word_length(self.word)

    def __eq__(self, other):
        return (
            isinstance(other, GelfandVertex)
            and self.word == other.word
            and self.variant == other.variant
        )

    def __hash__(self):
        return hash((self.word, self.variant))

    def __repr__(self):
        return f"GelfandVertex({list(self.word)}, n={self.n}, variant={self.variant!r})"


def embed(w: Involution, mode: str) -> GelfandVertex:
    """
    Extend an involution of [n] to a fixed-point-free involution of [2n]:
    2-cycles are kept, the q fixed points c_1 < ... < c_q are matched into
    the block n+1..n+q (in order for mode 'asc', reversed for 'des'), and
    the remaining tail is paired off consecutively.
    """
    if mode not in ("asc", "des"):
        raise ValueError(_VARIANT_MSG)
    n = w.n
    word = list(range(1, 2 * n + 1))
    for i in range(1, n + 1):
        if w(i) != i:
            word[i - 1] = w(i)
    fixed = w.fixed_points()
    q = len(fixed)
    for k, c in enumerate(fixed, 1):
        partner = n + k if mode == "asc" else n + q + 1 - k
        word[c - 1] = partner
        word[partner - 1] = c
    for i in range(n + q + 1, 2 * n + 1):
        word[i - 1] = one_fpf(i)
    return GelfandVertex(word, n, mode, validate=False)


def inverse_embed(word, n: int) -> Involution:
    """Collapse a vertex word back to I_n: transfer points become fixed points."""
    return Involution(Permutation(
        word[i - 1] if word[i - 1] <= n else i for i in range(1, n + 1)
    ))


def has_visible_descent_above(word, n: int) -> bool:
    """A visible descent is an i with z(i+1) < min(i, z(i)); scan i > n."""
    return any(word[i] < min(i, word[i - 1]) for i in range(n + 1, len(word)))


def in_asc_image(word, n: int) -> bool:
    """Membership test for the ascending image by the visible-descent criterion."""
    w = tuple(word)
    inv = Involution(Permutation(w))
    if inv.fixed_points():
        return False
    return not has_visible_descent_above(w, n)


@dataclass(frozen=True)
class DescentData:
    """The partition of [n-1] into weak/strict descents and ascents at a vertex."""

    des_eq: frozenset
    asc_eq: frozenset
    des_lt: frozenset
    asc_lt: frozenset


def _classify(word, n: int, i: int) -> int:
    zi, zi1 = word[i - 1], word[i]
    if zi == i + 1 and zi1 == i:
        return DES_EQ
    if zi > n and zi1 > n:
        return ASC_EQ
    return DES_LT if zi > zi1 else ASC_LT


def descent_data(z: GelfandVertex) -> DescentData:
    groups = {ASC_LT: [], DES_LT: [], ASC_EQ: [], DES_EQ: []}
    for i in range(1, z.n):
        groups[_classify(z.word, z.n, i)].append(i)
    return DescentData(
        des_eq=frozenset(groups[DES_EQ]),
        asc_eq=frozenset(groups[ASC_EQ]),
        des_lt=frozenset(groups[DES_LT]),
        asc_lt=frozenset(groups[ASC_LT]),
    )


def tau(z: GelfandVertex) -> frozenset:
    """
    The ascent set feeding the W-graph: for the ascending variant the i with
    z(i) < z(i+1); the descending variant also counts weak descents, i.e.
    the i with l(s_i z s_i) >= l(z).
    """
    word, n = z.word, z.n
    if z.variant == "asc":
        return frozenset(i for i in range(1, n) if word[i - 1] < word[i])
    return frozenset(
        i for i in range(1, n) if word[i - 1] < word[i] or word[i - 1] == i + 1
    )


def transfer_points(z: GelfandVertex) -> frozenset:
    return frozenset(i for i in range(1, z.n + 1) if z.word[i - 1] > z.n)


class ModuleElement:
    """A sparse vector over Gelfand vertices with Laurent coefficients."""

    __slots__ = ("coeffs", "variant")

    def __init__(self, coeffs, variant=None):
        coeffs = {z: c for z, c in coeffs.items() if c}
        variants = {z.variant for z in coeffs}
        if len(variants) > 1:
            raise ValueError("mixed vertex variants in one element")
        if variants:
            found = "M" if variants.pop() == "asc" else "N"
            if variant is not None and variant != found:
                raise ValueError(f"vertices are {found}-type, element declared {variant}")
            variant = found
        self.coeffs = coeffs
        self.variant = variant

    @classmethod
    def basis(cls, z: GelfandVertex) -> "ModuleElement":
        return cls({z: ONE})

    def __add__(self, other):
        t = dict(self.coeffs)
        for z, c in other.coeffs.items():
            t[z] = t[z] + c if z in t else c
        return ModuleElement(t, self.variant or other.variant)

    def __sub__(self, other):
        t = dict(self.coeffs)
        for z, c in other.coeffs.items():
            t[z] = t[z] - c if z in t else -c
        return ModuleElement(t, self.variant or other.variant)

    def scale(self, p: LaurentPoly) -> "ModuleElement":
        return ModuleElement({z: c * p for z, c in self.coeffs.items()}, self.variant)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "ModuleElement(0)"
        sym = self.variant or "?"
        bits = [
            f"({c})*{sym}[{''.join(map(str, z.word)) if z.n < 5 else list(z.word)}]"
            for z, c in sorted(self.coeffs.items(), key=lambda t: t[0].word)
        ]
        return " + ".join(bits)


@dataclass(frozen=True)
class MuTable:
    """Sparse x^-1 coefficients of the canonical basis transition matrix."""

    variant: str  # 'M' or 'N'
    entries: dict  # (y, z) vertex pair -> nonzero int, with l(y) < l(z)

    def omega(self):
        return omega(self)


class Model:
    """
    The whole model for one (n, variant): indexed vertices, their descent
    classifications and conjugation tables, plus lazily computed canonical
    basis columns, mu entries, and memoized bar expansions.  Columns are
    plain dicts from vertex index to LaurentPoly.
    """

    def __init__(self, n: int, variant: str, pick: str = "min"):
        if variant not in ("asc", "des"):
            raise ValueError(_VARIANT_MSG)
        if pick not in ("min", "max"):
            raise ValueError("pick must be 'min' or 'max'")
        self.n = n
        self.variant = variant
        self.pick = pick
        words = sorted(
            (embed(w, variant).word for w in enumerate_involutions(n)),
            key=lambda wd: (word_length(wd), wd),
        )
        self.words = words
        self.index = {wd: k for k, wd in enumerate(words)}
        self.length = [word_length(wd) for wd in words]
        self.cls = {}   # i -> per-vertex classification
        self.cnj = {}   # i -> per-vertex index of s_i z s_i
        for i in range(1, n):
            self.cls[i] = [_classify(wd, n, i) for wd in words]
            self.cnj[i] = [
                self.index[word_conj_s(wd, i)] if self.cls[i][k] in (ASC_LT, DES_LT) else k
                for k, wd in enumerate(words)
            ]
        self.strict_descents = [
            [i for i in range(1, n) if self.cls[i][k] == DES_LT]
            for k in range(len(words))
        ]
        self.tau = [
            tau(GelfandVertex(wd, n, variant, validate=False)) for wd in words
        ]
        # weak-position scalars: M scales weak ascents by -x^-1 and weak
        # descents by x; N swaps the two
        if variant == "asc":
            self.weak_asc, self.weak_des = -X_INV, X
        else:
            self.weak_asc, self.weak_des = X, -X_INV
        self._columns = None
        self._mu_by_col = None
        self._barvecs = {}

    # -- raw H_{s_i} action on an index-keyed column ------------------------

    def h_col(self, i: int, col: dict) -> dict:
        out = {}
        cls_i, cnj_i = self.cls[i], self.cnj[i]
        for v, c in col.items():
            k = cls_i[v]
            if k == ASC_LT:
                w = cnj_i[v]
                out[w] = out[w] + c if w in out else c
            elif k == DES_LT:
                w = cnj_i[v]
                out[w] = out[w] + c if w in out else c
                d = c * X_MINUS_XINV
                out[v] = out[v] + d if v in out else d
            else:
                d = c * (self.weak_asc if k == ASC_EQ else self.weak_des)
                out[v] = out[v] + d if v in out else d
        return {v: c for v, c in out.items() if c}

    # -- canonical basis -----------------------------------------------------

    def canonical_columns(self, check_bar: bool = False):
        if self._columns is None:
            self._compute_columns()
        if check_bar:
            self._check_bar_invariance()
        return self._columns

    def _compute_columns(self):
        V = len(self.words)
        cols = [None] * V
        mu_by_col = [None] * V
        for z in range(V):
            dlt = self.strict_descents[z]
            if not dlt:
                col = {z: ONE}
            else:
                i = dlt[0] if self.pick == "min" else dlt[-1]
                w = self.cnj[i][z]
                col_w = cols[w]
                col = self.h_col(i, col_w)
                for v, c in col_w.items():
                    d = c * X_INV
                    col[v] = col[v] + d if v in col else d
                for y, m in mu_by_col[w].items():
                    if i not in self.tau[y]:
                        for v, c in cols[y].items():
                            d = c * (-m)
                            col[v] = col[v] + d if v in col else d
                col = {v: c for v, c in col.items() if c}
            if col.get(z) != ONE:
                raise RuntimeError(f"column {self.words[z]} is not unitriangular")
            lz = self.length[z]
            for y, c in col.items():
                if y != z and (self.length[y] >= lz or not c.in_neg_span()):
                    raise RuntimeError(
                        f"column {self.words[z]} has a bad term at {self.words[y]}: {c}"
                    )
            cols[z] = col
            mu_by_col[z] = {
                y: c.coeff(-1) for y, c in col.items() if y != z and c.coeff(-1)
            }
        self._columns = cols
        self._mu_by_col = mu_by_col

    def mu_entries(self) -> dict:
        if self._mu_by_col is None:
            self._compute_columns()
        return {
            (y, z): m
            for z, ml in enumerate(self._mu_by_col)
            for y, m in ml.items()
        }

    # -- bar operator ----------------------------------------------------------

    def barvec(self, v: int) -> dict:
        """Expansion of bar(basis vector v) over the standard basis, memoized."""
        got = self._barvecs.get(v)
        if got is not None:
            return got
        dlt = self.strict_descents[v]
        if not dlt:
            out = {v: ONE}
        else:
            i = dlt[0]
            w = self.cnj[i][v]
            bw = self.barvec(w)
            out = self.h_col(i, bw)
            for u, c in bw.items():
                d = c * X_MINUS_XINV
                out[u] = out[u] - d if u in out else -d
            out = {u: c for u, c in out.items() if c}
        self._barvecs[v] = out
        return out

    def bar_col(self, col: dict) -> dict:
        out = {}
        for v, c in col.items():
            cb = c.bar()
            for u, d in self.barvec(v).items():
                e = d * cb
                out[u] = out[u] + e if u in out else e
        return {u: c for u, c in out.items() if c}

    def _check_bar_invariance(self):
        for z, col in enumerate(self._columns):
            if self.bar_col(col) != col:
                raise RuntimeError(
                    f"canonical column of {self.words[z]} is not bar-invariant"
                )

    # -- conversions -------------------------------------------------------------

    def vertex(self, k: int) -> GelfandVertex:
        return GelfandVertex(self.words[k], self.n, self.variant, validate=False)

    def element(self, col: dict) -> ModuleElement:
        sym = "M" if self.variant == "asc" else "N"
        return ModuleElement({self.vertex(v): c for v, c in col.items()}, sym)

    def column_of(self, e: ModuleElement) -> dict:
        return {self.index[z.word]: c for z, c in e.coeffs.items()}


@lru_cache(maxsize=None)
def _model(n: int, variant: str) -> Model:
    return Model(n, variant)


def _variant_of(e: ModuleElement) -> str:
    if e.variant == "M":
        return "asc"
    if e.variant == "N":
        return "des"
    raise ValueError("cannot act on the zero element of unknown variant")


def h_action(i: int, e: ModuleElement) -> ModuleElement:
    """Left action of H_{s_i} on a module element."""
    if not e.coeffs:
        return e
    variant = _variant_of(e)
    n = next(iter(e.coeffs)).n
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    m = _model(n, variant)
    return m.element(m.h_col(i, m.column_of(e)))


def bar_module(e: ModuleElement) -> ModuleElement:
    """The bar operator of the element's model, extended bar-semilinearly."""
    if not e.coeffs:
        return e
    m = _model(next(iter(e.coeffs)).n, _variant_of(e))
    return m.element(m.bar_col(m.column_of(e)))


def canonical_basis(n: int, variant: str, check_bar=None, pick: str = "min"):
    """
    The canonical basis of model M (variant 'M'/'asc') or N ('N'/'des').

    Returns (columns, mu): a map from each vertex z to the canonical basis
    element expanded over the standard basis, and the table of x^-1
    coefficients.  check_bar=None verifies bar-invariance only for n <= 6,
    where the quadratic-cost check is cheap; triangularity is always
    verified.
    """
    key = {"M": "asc", "N": "des", "asc": "asc", "des": "des"}.get(variant)
    if key is None:
        raise ValueError(f"variant must be 'M' or 'N', got {variant!r}")
    if check_bar is None:
        check_bar = n <= 6
    m = Model(n, key, pick=pick) if pick != "min" else _model(n, key)
    cols = m.canonical_columns(check_bar=check_bar)
    sym = "M" if key == "asc" else "N"
    out = {m.vertex(z): m.element(col) for z, col in enumerate(cols)}
    mu = MuTable(sym, {
        (m.vertex(y), m.vertex(z)): v for (y, z), v in m.mu_entries().items()
    })
    return out, mu


def omega(mu: MuTable) -> dict:
    """Symmetrized edge weights: omega(y, z) = mu(y, z) + mu(z, y)."""
    out = {}
    for (y, z), v in mu.entries.items():
        out[(y, z)] = out.get((y, z), 0) + v
        out[(z, y)] = out.get((z, y), 0) + v
    return {k: v for k, v in out.items() if v}


def hat_p(z: GelfandVertex) -> Tableau:
    """The insertion tableau of the vertex, restricted to entries <= n."""
    inv = z.involution
    full = p_rbs(inv) if z.variant == "asc" else p_cbs(inv)
    return restrict(full, range(1, z.n + 1))


def lambda_shape(z: GelfandVertex):
    return hat_p(z).shape


def iota_line(T: Tableau, direction: str) -> Tableau:
    """
    Double a standard tableau with n cells to one with 2n cells.

    direction 'row': n+1..n+k close off the odd columns left to right, then
    the leftover values join rows 1 and 2 alternately, killing all odd
    columns.  direction 'col': n+1..n+k close off the odd rows top to
    bottom, then everything left joins row 1, killing all odd rows.
    """
    if not T.is_standard():
        raise ValueError("input must be a standard tableau")
    n = T.size
    rows = [list(r) for r in T.rows]
    if direction == "row":
        ncols = len(rows[0]) if rows else 0
        odd = [c for c in range(1, ncols + 1)
               if sum(1 for r in rows if len(r) >= c) % 2]
        k = len(odd)
        for offset, c in enumerate(odd, 1):
            depth = sum(1 for r in rows if len(r) >= c)
            if depth < len(rows):
                rows[depth].append(n + offset)
            else:
                rows.append([n + offset])
        if n + k < 2 * n:
            if not rows:
                rows.append([])
            if len(rows) < 2:
                rows.append([])
            for j, v in enumerate(range(n + k + 1, 2 * n + 1)):
                rows[j % 2].append(v)
            rows = [r for r in rows if r]
        return Tableau(rows)
    if direction == "col":
        odd = [r for r in range(len(rows)) if len(rows[r]) % 2]
        k = len(odd)
        for offset, r in enumerate(odd, 1):
            rows[r].append(n + offset)
        if not rows and n + k < 2 * n:
            rows.append([])
        rows[0].extend(range(n + k + 1, 2 * n + 1))
        return Tableau(rows)
    raise ValueError(f"direction must be 'row' or 'col', got {direction!r}")


def tables_json(n: int, variant: str) -> dict:
    """Canonical-basis and mu tables in the documented JSON layout."""
    key = {"M": "asc", "N": "des", "asc": "asc", "des": "des"}[variant]
    m = _model(n, key)
    cols = m.canonical_columns()
    return {
        "variant": "M" if key == "asc" else "N",
        "n": n,
        "vertices": [list(w) for w in m.words],
        "columns": {
            str(z): [[y, col[y].to_pairs()] for y in sorted(col)]
            for z, col in enumerate(cols)
        },
        "mu": sorted([y, z, v] for (y, z), v in m.mu_entries().items()),
    }
