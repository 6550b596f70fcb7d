"""
Row and column Beissinger insertion and the bijections they define between
involutions and standard Young tableaux.

Both operations insert a pair (a, b) with a <= b into a partially standard
tableau.  A fixed point (b, b) is appended directly: to the end of row 1
(row variant) or column 1 (column variant).  For a < b, first a is
Schensted-inserted; if that adds a box in row i (column j), then b is
appended to the end of row i+1 (column j+1).

Inserting the cycles of an involution in increasing order of their larger
elements keeps every intermediate tableau partially standard, giving the
maps p_rbs and p_cbs; both are bijections I_n -> SYT(n), and composing one
with the transpose of the other yields the permutation psi of I_n.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .perm import Involution, Permutation, conj_by_s, cycles_sorted, enumerate_involutions
from .tableau import EMPTY, Tableau, rs_insert, rs_uninsert, transpose


def _append_to_row(rows, r: int, b: int):
    """Append b at the end of row r (1-based), creating the row if it is the next one."""
    if r <= len(rows):
        rows[r - 1].append(b)
    elif r == len(rows) + 1:
        rows.append([b])
    else:
        raise ValueError(f"cannot append to row {r} of a {len(rows)}-row tableau")


def _append_to_column(rows, c: int, b: int):
    """Append b at the end of column c (1-based)."""
    depth = sum(1 for row in rows if len(row) >= c)
    if depth < len(rows):
        if len(rows[depth]) != c - 1:
            raise ValueError(f"appending to column {c} would not give a tableau")
        rows[depth].append(b)
    elif c == 1:
        rows.append([b])
    else:
        raise ValueError(f"appending to column {c} would not give a tableau")


def _check_pair(T: Tableau, a: int, b: int):
    if a > b:
        raise ValueError(f"need a <= b, got ({a},{b})")
    entries = T.entries()
    if a in entries or b in entries:
        raise ValueError(f"pair ({a},{b}) collides with existing entries")


def rbs_insert(T: Tableau, a: int, b: int) -> Tableau:
    """
    Row Beissinger insertion of the pair (a, b), a <= b.

    Inserting an arbitrary pair can break the increase conditions (the
    appended b may sit below or after a larger entry), so the result is
    returned as a filling; along the p_rbs insertion order it is always
    partially standard.
    """
    _check_pair(T, a, b)
    if a == b:
        rows = [list(r) for r in T.rows]
        _append_to_row(rows, 1, b)
        return Tableau.filling(rows)
    T1, path = rs_insert(T, a, validate=False)
    rows = [list(r) for r in T1.rows]
    _append_to_row(rows, path.final_row + 1, b)
    return Tableau.filling(rows)


def _column_insert(T: Tableau, a: int):
    """
    Schensted insertion by column bumping: a displaces the first entry
    greater than it in column 1, which bumps into column 2, and so on.
    Returns the new tableau and the (row, col) of the added box.
    """
    rows = [list(r) for r in T.rows]
    x = a
    c = 1
    while True:
        col = [row[c - 1] for row in rows if len(row) >= c]
        k = bisect_right(col, x)
        if k == len(col):
            if k < len(rows):
                if len(rows[k]) != c - 1:
                    raise ValueError("column insertion left a gap")
                rows[k].append(x)
            else:
                rows.append([x])
            return Tableau(rows, validate=False), (k + 1, c)
        x, rows[k][c - 1] = rows[k][c - 1], x
        c += 1


def cbs_insert(T: Tableau, a: int, b: int, variant: str = "standard") -> Tableau:
    """
    Column Beissinger insertion of (a, b), a <= b.

    The standard variant row-inserts a and appends b below the next column;
    the transposed variant column-inserts a and appends b to the next row,
    so that it agrees with the standard variant conjugated by transpose.
    """
    _check_pair(T, a, b)
    if variant == "standard":
        rows = [list(r) for r in T.rows]
        if a == b:
            rows.append([b])
            return Tableau.filling(rows)
        T1, path = rs_insert(T, a, validate=False)
        rows = [list(r) for r in T1.rows]
        _append_to_column(rows, path.new_cell[1] + 1, b)
        return Tableau.filling(rows)
    if variant == "transposed":
        if a == b:
            rows = [list(r) for r in T.rows]
            _append_to_row(rows, 1, b)
            return Tableau.filling(rows)
        T1, cell = _column_insert(T, a)
        rows = [list(r) for r in T1.rows]
        _append_to_row(rows, cell[0] + 1, b)
        return Tableau.filling(rows)
    raise ValueError(f"variant must be 'standard' or 'transposed', got {variant!r}")


def p_rbs(y: Involution) -> Tableau:
    """Insert the cycles of y by increasing larger element, row variant."""
    T = EMPTY
    for a, b in cycles_sorted(y):
        T = rbs_insert(T, a, b)
        if not T.is_partially_standard():
            raise ValueError(f"insertion of ({a},{b}) left the tableau non-standard")
    return T


def p_cbs(y: Involution) -> Tableau:
    """Insert the cycles of y by increasing larger element, column variant."""
    T = EMPTY
    for a, b in cycles_sorted(y):
        T = cbs_insert(T, a, b)
        if not T.is_partially_standard():
            raise ValueError(f"insertion of ({a},{b}) left the tableau non-standard")
    return T


def p_cbs_inverse(T: Tableau) -> Involution:
    """
    The unique involution y with p_cbs(y) = T, for standard T.

    Peel off the largest entry b: in column 1 it records a fixed point;
    otherwise the entry at the bottom of the preceding column starts an
    inverse Schensted insertion whose output is the partner of b.
    """
    if not T.is_standard():
        raise ValueError("input must be a standard tableau")
    n = T.size
    pairs = []
    U = T
    while U.size:
        b = max(U.entries())
        r, c = U.find(b)
        rows = [list(row) for row in U.rows]
        del rows[r - 1][c - 1]
        if not rows[r - 1]:
            del rows[r - 1]
        if c == 1:
            pairs.append((b, b))
            U = Tableau(rows, validate=False)
        else:
            col = U.column(c - 1)
            stripped = Tableau(rows, validate=False)
            U, a = rs_uninsert(stripped, (len(col), c - 1))
            pairs.append((a, b))
    return Involution.from_cycles(n, pairs)


def p_rbs_inverse(T: Tableau) -> Involution:
    """
    The unique involution y with p_rbs(y) = T: the row-column mirror of
    p_cbs_inverse (largest entry in row 1 records a fixed point; otherwise
    uninsert from the corner ending the row above it).
    """
    if not T.is_standard():
        raise ValueError("input must be a standard tableau")
    n = T.size
    pairs = []
    U = T
    while U.size:
        b = max(U.entries())
        r, c = U.find(b)
        rows = [list(row) for row in U.rows]
        del rows[r - 1][c - 1]
        if not rows[r - 1]:
            del rows[r - 1]
        if r == 1:
            pairs.append((b, b))
            U = Tableau(rows, validate=False)
        else:
            above = U.rows[r - 2]
            stripped = Tableau(rows, validate=False)
            U, a = rs_uninsert(stripped, (r - 1, len(above)))
            pairs.append((a, b))
    return Involution.from_cycles(n, pairs)


def psi(y: Involution) -> Involution:
    """The involution z with p_rbs(y) equal to the transpose of p_cbs(z)."""
    return p_cbs_inverse(transpose(p_rbs(y)))


def psi_orbit(y: Involution):
    """The forward psi-orbit of y, starting at y, as a list."""
    orbit = [y]
    z = psi(y)
    while z != y:
        orbit.append(z)
        z = psi(z)
    return orbit


@dataclass(frozen=True)
class PsiStats:
    longest_cycle: int
    fixed_points: tuple
    cycle_sizes: tuple  # sorted multiset of orbit sizes


def psi_cycle_stats(n: int) -> PsiStats:
    """Cycle structure of psi acting on I_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    seen = set()
    sizes = []
    fixed = []
    for y in enumerate_involutions(n):
        if y.word in seen:
            continue
        orbit = psi_orbit(y)
        seen.update(z.word for z in orbit)
        sizes.append(len(orbit))
        if len(orbit) == 1:
            fixed.append(y)
    return PsiStats(max(sizes), tuple(fixed), tuple(sorted(sizes)))


def _between(m: int, a: int, b: int) -> bool:
    return a < m < b or b < m < a


def _conj_by_transposition(y: Involution, a: int, b: int) -> Involution:
    t = Permutation.transposition(y.n, a, b)
    return Involution(t * y.perm * t)


def simrbs_partner(y: Involution, i: int) -> Involution:
    """
    The unique involution z whose row Beissinger tableau is D_i of y's.

    Keyed on whether y permutes A = {i-1, i, i+1} and on which of the three
    images y(i-1), y(i), y(i+1) lies between the other two.
    """
    if not 1 < i < y.n:
        raise ValueError(f"need 1 < i < n, got i={i}, n={y.n}")
    lo, mid, hi = y(i - 1), y(i), y(i + 1)
    if {lo, mid, hi} == {i - 1, i, i + 1}:
        return _conj_by_transposition(y, i - 1, i + 1)
    if _between(mid, lo, hi):
        return y
    if _between(hi, lo, mid):
        return conj_by_s(y, i - 1)
    return conj_by_s(y, i)


def simcbs_partner(y: Involution, i: int) -> Involution:
    """
    The unique involution z whose column Beissinger tableau is D_i of y's.

    Works through adjusted values e(j) for j in {i-1, i, i+1}: y(j) when that
    lands outside the window, -j at a fixed point, and j when y pairs j with
    another window element.  Whichever e lies between the other two picks the
    case, exactly as in the row formula.
    """
    if not 1 < i < y.n:
        raise ValueError(f"need 1 < i < n, got i={i}, n={y.n}")
    window = (i - 1, i, i + 1)

    def e(j):
        v = y(j)
        if v not in window:
            return v
        return -j if v == j else j

    e0, e1, e2 = e(i - 1), e(i), e(i + 1)
    if _between(e1, e0, e2):
        return y
    if _between(e2, e0, e1):
        return conj_by_s(y, i - 1)
    return conj_by_s(y, i)
