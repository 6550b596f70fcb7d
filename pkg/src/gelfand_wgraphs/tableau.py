"""
Partially standard Young tableaux and Schensted insertion.

A tableau is stored row-major (top row first) as a tuple of tuples of
distinct positive integers; rows and columns strictly increase and row
lengths weakly decrease.  "Partially standard" means exactly that; a
standard tableau additionally uses the entries 1..n.

Rows and columns are 1-based throughout, matching one-line notation for
permutations.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .perm import Permutation


class Tableau:
    __slots__ = ("rows",)

    def __init__(self, rows=(), validate: bool = True):
        rows = tuple(tuple(r) for r in rows)
        if validate:
            _validate(rows, increase=True)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def filling(cls, rows) -> "Tableau":
        """
        A filling of a partition shape by distinct positive integers that
        need not increase along rows or columns.  Beissinger insertion of an
        arbitrary pair can produce such fillings; the involution-to-tableau
        maps never do.
        """
        rows = tuple(tuple(r) for r in rows)
        _validate(rows, increase=False)
        t = cls.__new__(cls)
        object.__setattr__(t, "rows", rows)
        return t

    def is_partially_standard(self) -> bool:
        try:
            _validate(self.rows, increase=True)
        except ValueError:
            return False
        return True

    @property
    def shape(self):
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entries(self):
        return {v for row in self.rows for v in row}

    def entry(self, r: int, c: int) -> int:
        return self.rows[r - 1][c - 1]

    def find(self, value: int):
        """The (row, col) of a value."""
        for r, row in enumerate(self.rows, 1):
            for c, v in enumerate(row, 1):
                if v == value:
                    return (r, c)
        raise ValueError(f"{value} does not occur in the tableau")

    def column(self, c: int):
        return tuple(row[c - 1] for row in self.rows if len(row) >= c)

    def is_standard(self) -> bool:
        return self.entries() == set(range(1, self.size + 1))

    def corners(self):
        """Removable cells: (r, c) at the end of a row that is longer than the next."""
        sh = self.shape
        return [
            (r, sh[r - 1])
            for r in range(1, len(sh) + 1)
            if r == len(sh) or sh[r] < sh[r - 1]
        ]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        if not self.rows:
            return "Tableau([])"
        return "Tableau(" + str([list(r) for r in self.rows]) + ")"

    def pretty(self) -> str:
        if not self.rows:
            return "(empty)"
        w = max(len(str(v)) for row in self.rows for v in row)
        return "\n".join(" ".join(str(v).rjust(w) for v in row) for row in self.rows)


def _validate(rows, increase: bool):
    seen = set()
    for r, row in enumerate(rows):
        if not row:
            raise ValueError("empty rows are not allowed")
        if r and len(row) > len(rows[r - 1]):
            raise ValueError(f"row lengths must weakly decrease, got {[len(x) for x in rows]}")
        for c, v in enumerate(row):
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"entries must be positive integers, got {v!r}")
            if v in seen:
                raise ValueError(f"duplicate entry {v}")
            seen.add(v)
            if increase and c and v <= row[c - 1]:
                raise ValueError(f"row {r + 1} is not strictly increasing: {list(row)}")
            if increase and r and v <= rows[r - 1][c]:
                raise ValueError(f"column {c + 1} is not strictly increasing")


EMPTY = Tableau()


@dataclass(frozen=True)
class BumpingPath:
    """
    The cells changed by a Schensted insertion, one per row 1..k, plus the
    values pushed into each row.  Columns weakly decrease down the path and
    the inserted values strictly increase.
    """

    cells: tuple
    inserted_values: tuple

    @property
    def final_row(self) -> int:
        return len(self.cells)

    @property
    def new_cell(self):
        return self.cells[-1]

    def col(self, j: int) -> int:
        return self.cells[j - 1][1]

    def ivalue(self, j: int) -> int:
        return self.inserted_values[j - 1]


def rs_insert(T: Tableau, a: int, validate: bool = True):
    """
    Row-bumping insertion of a into T.  Returns the new tableau and the
    bumping path; a must not already occur in T.
    """
    if validate and a in T.entries():
        raise ValueError(f"{a} already occurs in the tableau")
    rows = [list(r) for r in T.rows]
    cells = []
    values = []
    x = a
    for r, row in enumerate(rows, 1):
        j = bisect_right(row, x)
        values.append(x)
        if j == len(row):
            row.append(x)
            cells.append((r, len(row)))
            return Tableau(rows, validate=False), BumpingPath(tuple(cells), tuple(values))
        x, row[j] = row[j], x
        cells.append((r, j + 1))
    rows.append([x])
    values.append(x)
    cells.append((len(rows), 1))
    return Tableau(rows, validate=False), BumpingPath(tuple(cells), tuple(values))


def rs_uninsert(T: Tableau, corner):
    """
    Inverse Schensted insertion from a removable cell.  Returns (U, x) with
    rs_insert(U, x) recreating T and adding its new cell at `corner`.
    """
    r, c = corner
    if corner not in T.corners():
        raise ValueError(f"{corner} is not a removable cell of shape {T.shape}")
    rows = [list(row) for row in T.rows]
    x = rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop()
    for j in range(r - 2, -1, -1):
        row = rows[j]
        # rightmost entry smaller than the carried value gets bumped out
        k = bisect_right(row, x) - 1
        row[k], x = x, row[k]
    return Tableau(rows, validate=False), x


def pq_rs(w):
    """The insertion and recording tableaux of a permutation (or word)."""
    word = w.word if isinstance(w, Permutation) else tuple(w)
    P = EMPTY
    q_rows = []
    for i, a in enumerate(word, 1):
        P, path = rs_insert(P, a, validate=False)
        r, c = path.new_cell
        if r > len(q_rows):
            q_rows.append([i])
        else:
            q_rows[r - 1].append(i)
    return P, Tableau(q_rows, validate=False)


def reading_word(T: Tableau):
    """Row reading word: concatenate the rows, last row first."""
    out = []
    for row in reversed(T.rows):
        out.extend(row)
    return tuple(out)


def dual_equiv(T: Tableau, i: int) -> Tableau:
    """
    The elementary dual equivalence operator D_i.  Looking at the positions
    of i-1, i, i+1 in the reading word: if i is in the middle the tableau is
    unchanged; if i-1 is in the middle, i and i+1 trade places; if i+1 is in
    the middle, i-1 and i trade places.
    """
    entries = T.entries()
    for v in (i - 1, i, i + 1):
        if v not in entries:
            raise ValueError(f"entry {v} is missing; D_{i} needs i-1, i, i+1 present")
    word = reading_word(T)
    pos = {v: word.index(v) for v in (i - 1, i, i + 1)}
    middle = sorted((i - 1, i, i + 1), key=pos.get)[1]
    if middle == i:
        return T
    a, b = (i, i + 1) if middle == i - 1 else (i - 1, i)
    swap = {a: b, b: a}
    return Tableau([[swap.get(v, v) for v in row] for row in T.rows])


def transpose(T: Tableau) -> Tableau:
    if not T.rows:
        return T
    cols = [[] for _ in range(len(T.rows[0]))]
    for row in T.rows:
        for c, v in enumerate(row):
            cols[c].append(v)
    return Tableau(cols, validate=False)


def restrict(T: Tableau, keep) -> Tableau:
    """
    The tableau T|_X formed by omitting entries outside `keep`.  The kept
    cells must themselves form a top-left justified tableau.
    """
    keep = set(keep)
    rows = []
    for r, row in enumerate(T.rows, 1):
        kept = [v for v in row if v in keep]
        if len(kept) < len(row) and any(v in keep for v in row[len(kept):]):
            raise ValueError(f"kept entries of row {r} are not a prefix")
        if kept:
            if len(rows) < r - 1:
                raise ValueError("kept cells are not top-justified")
            rows.append(kept)
        elif any(v in keep for row2 in T.rows[r:] for v in row2):
            raise ValueError("kept cells are not top-justified")
    return Tableau(rows)


def standard_tableaux(n: int):
    """All standard tableaux with n cells, by growing one addable corner at a time."""
    if n == 0:
        yield EMPTY
        return
    for small in standard_tableaux(n - 1):
        sh = small.shape
        for r in range(len(sh)):
            if r == 0 or sh[r] < sh[r - 1]:
                rows = [list(x) for x in small.rows]
                rows[r].append(n)
                yield Tableau(rows, validate=False)
        yield Tableau([list(x) for x in small.rows] + [[n]], validate=False)


def odd_lines(T: Tableau, direction: str) -> int:
    """Number of odd rows or odd columns of the shape."""
    sh = T.shape
    if direction == "rows":
        return sum(1 for p in sh if p % 2)
    if direction == "columns":
        ncols = sh[0] if sh else 0
        return sum(1 for c in range(1, ncols + 1) if sum(1 for p in sh if p >= c) % 2)
    raise ValueError(f"direction must be 'rows' or 'columns', got {direction!r}")
