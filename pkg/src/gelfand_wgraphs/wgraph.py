"""
W-graphs: the data structure, the defining-relation checker, molecules,
cells, and the classification harness for the two Gelfand graphs.

A W-graph for S_n is a vertex set with an ascent-set map tau into subsets
of {1, .., n-1} and integer edge weights omega, such that the prescribed
action of each generator on the free Z[x,x^-1]-module over the vertices
(scale by x off tau, otherwise -x^-1 plus the weighted sum of neighbours
whose tau misses the generator) satisfies the quadratic, braid, and
commutation relations.

Weights with tau(v) contained in tau(w) never enter that action, so a graph
and its "reduced" version (those weights dropped) define the same module.
Molecule and cell analysis here defaults to the reduced convention: with
the raw symmetrized weights every edge would be bidirected and, e.g., the
two left cells of S_2 would merge, contradicting the classical cell
picture.  Both conventions can be built and compared.

The row graph lives on the ascending embedding's vertex set and the column
graph on the descending one (conventions for the latter differ across the
literature; the descending set is the one matching the module it encodes).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations as _permutations

from .gelfand import GelfandVertex, _model, lambda_shape
from .laurent import ONE, X, X_INV, X_MINUS_XINV, LaurentPoly
from .perm import Permutation, word_conj_s


def symmetrize_mu(mu: dict) -> dict:
    """omega(v, w) = mu(v, w) + mu(w, v) on index pairs, zero entries dropped."""
    out = {}
    for (y, z), m in mu.items():
        out[(y, z)] = out.get((y, z), 0) + m
        out[(z, y)] = out.get((z, y), 0) + m
    return {k: v for k, v in out.items() if v}


class WGraph:
    """
    Vertex labels are one-line words; tau sets and omega weights are keyed
    by vertex index.  If reduced is set, omega already had the tau-inclusion
    entries dropped.
    """

    def __init__(self, n, variant, reduced, vertices, tau, omega, shapes=None):
        self.n = n
        self.variant = variant
        self.reduced = bool(reduced)
        self.vertices = tuple(tuple(v) for v in vertices)
        self.tau = tuple(frozenset(t) for t in tau)
        omega = {k: v for k, v in omega.items() if v}
        if self.reduced:
            omega = {
                (v, w): c
                for (v, w), c in omega.items()
                if not self.tau[v] <= self.tau[w]
            }
        self.omega = omega
        self.shapes = tuple(tuple(s) for s in shapes) if shapes is not None else None

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self):
        """Sorted (v, w, weight) triples."""
        return [(v, w, self.omega[(v, w)]) for (v, w) in sorted(self.omega)]

    def bidirected_pairs(self):
        """Sorted pairs {v < w} carrying nonzero weights in both directions."""
        return sorted(
            (v, w)
            for (v, w) in self.omega
            if v < w and (w, v) in self.omega
        )

    def __eq__(self, other):
        return (
            isinstance(other, WGraph)
            and (self.n, self.variant, self.reduced) == (other.n, other.variant, other.reduced)
            and self.vertices == other.vertices
            and self.tau == other.tau
            and self.omega == other.omega
        )

    def __repr__(self):
        return (
            f"WGraph(n={self.n}, variant={self.variant!r}, reduced={self.reduced}, "
            f"|V|={self.size}, |E|={len(self.omega)})"
        )


def build_gamma(n: int, variant: str, reduced: bool = True) -> WGraph:
    """
    The row or column Gelfand graph: vertices are the ascending (row) or
    descending (column) embedding's image, tau the matching ascent sets,
    and weights the symmetrized x^-1 coefficients of the canonical basis.
    """
    if variant not in ("row", "col"):
        raise ValueError(f"variant must be 'row' or 'col', got {variant!r}")
    m = _model(n, "asc" if variant == "row" else "des")
    m.canonical_columns()
    mu = m.mu_entries()
    shapes = [lambda_shape(m.vertex(k)) for k in range(len(m.words))]
    return WGraph(
        n=n,
        variant=variant,
        reduced=reduced,
        vertices=m.words,
        tau=m.tau,
        omega=symmetrize_mu(mu),
        shapes=shapes,
    )


# -- defining relations -------------------------------------------------------


def _rho_matrix(g: WGraph, i: int):
    """Column v of the action of H_{s_i}: a dict u -> LaurentPoly."""
    cols = []
    for v in range(g.size):
        if i not in g.tau[v]:
            cols.append({v: X})
        else:
            col = {v: -X_INV}
            for w in range(g.size):
                c = g.omega.get((v, w))
                if c and i not in g.tau[w]:
                    p = col.get(w)
                    cp = LaurentPoly.term(c)
                    col[w] = p + cp if p is not None else cp
            cols.append({u: c for u, c in col.items() if c})
    return cols


def _mat_mul(A, B):
    """Composition: apply B first, then A (columns map v -> dict)."""
    out = []
    for v in range(len(B)):
        col = {}
        for u, c in B[v].items():
            for t, d in A[u].items():
                e = d * c
                col[t] = col[t] + e if t in col else e
        out.append({t: c for t, c in col.items() if c})
    return out


def _mat_eq(A, B) -> bool:
    return all(a == b for a, b in zip(A, B))


def _identity(size):
    return [{v: ONE} for v in range(size)]


def _mat_add_scaled(A, B, p):
    """A + p*B columnwise."""
    out = []
    for a, b in zip(A, B):
        col = dict(a)
        for u, c in b.items():
            d = c * p
            col[u] = col[u] + d if u in col else d
        out.append({u: c for u, c in col.items() if c})
    return out


@dataclass
class AxiomReport:
    n: int
    variant: str
    reduced: bool
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_axioms(g: WGraph) -> AxiomReport:
    """
    Check that the prescribed generator action satisfies the quadratic
    relation, the braid relation for adjacent generators, and commutation
    for distant ones.  Failures are reported, not raised.
    """
    report = AxiomReport(g.n, g.variant, g.reduced)
    gens = range(1, g.n)
    rho = {i: _rho_matrix(g, i) for i in gens}
    I = _identity(g.size)
    for i in gens:
        lhs = _mat_mul(rho[i], rho[i])
        rhs = _mat_add_scaled(I, rho[i], X_MINUS_XINV)
        if not _mat_eq(lhs, rhs):
            report.violations.append(f"quadratic relation fails for s_{i}")
    for i in gens:
        for j in gens:
            if j <= i:
                continue
            if j == i + 1:
                lhs = _mat_mul(rho[i], _mat_mul(rho[j], rho[i]))
                rhs = _mat_mul(rho[j], _mat_mul(rho[i], rho[j]))
                if not _mat_eq(lhs, rhs):
                    report.violations.append(f"braid relation fails for s_{i}, s_{j}")
            else:
                if not _mat_eq(_mat_mul(rho[i], rho[j]), _mat_mul(rho[j], rho[i])):
                    report.violations.append(f"commutation fails for s_{i}, s_{j}")
    return report


# -- molecules and cells ------------------------------------------------------


def molecules(g: WGraph):
    """Connected components of the bidirected-edge graph, by least vertex."""
    adj = [[] for _ in range(g.size)]
    for v, w in g.bidirected_pairs():
        adj[v].append(w)
        adj[w].append(v)
    seen = [False] * g.size
    parts = []
    for start in range(g.size):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        parts.append(sorted(comp))
    return sorted(parts)


def cells(g: WGraph):
    """
    Strongly connected components of the weighted digraph, plus the edges of
    the condensation.  Components are sorted by least vertex; condensation
    edges point along the original arrows.
    """
    succ = [[] for _ in range(g.size)]
    for (v, w) in g.omega:
        succ[v].append(w)

    index = [-1] * g.size
    low = [0] * g.size
    on_stack = [False] * g.size
    stack = []
    comps = []
    counter = 0
    for root in range(g.size):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(succ[v]):
                w = succ[v][pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    comps.sort()
    whichcomp = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            whichcomp[v] = ci
    cond = sorted({
        (whichcomp[v], whichcomp[w])
        for (v, w) in g.omega
        if whichcomp[v] != whichcomp[w]
    })
    return comps, cond


# -- combinatorial bidirected edges -------------------------------------------


def _cc_word(word, i: int) -> int:
    """conj_compare on a bare word: +1 higher, 0 equal, -1 lower."""
    zi, zi1 = word[i - 1], word[i]
    if (zi == i and zi1 == i + 1) or (zi == i + 1 and zi1 == i):
        return 0
    return 1 if zi < zi1 else -1


def _bidirected_words(u, v, i: int, row: bool) -> bool:
    for a, b in ((u, v), (v, u)):
        for s, t in ((i - 1, i), (i, i - 1)):
            cs = _cc_word(a, s)
            if cs > 0 or (not row and cs == 0):
                continue  # need s a s <= a, strictly below in the column case
            if _cc_word(a, t) <= 0:
                continue
            if word_conj_s(a, t) != b:
                continue
            cb = _cc_word(b, s)
            if cb > 0 or (not row and cb == 0):
                return True
    return False


def combinatorial_bidirected(y: GelfandVertex, z: GelfandVertex, i: int) -> bool:
    """
    The order-theoretic description of a bidirected edge at window i: one of
    the two vertices is the other conjugated by t, with the four Bruhat
    comparisons against conjugation by s holding, for {s, t} = {s_{i-1}, s_i}
    in either role.  The row and column variants differ in which of the two
    outer comparisons is strict.
    """
    if y.variant != z.variant:
        raise ValueError("vertices come from different graphs")
    if not 1 < i < y.n:
        raise ValueError(f"need 1 < i < n, got i={i}, n={y.n}")
    return _bidirected_words(y.word, z.word, i, row=y.variant == "asc")


def algebraic_bidirected_pairs(g: WGraph):
    """Bidirected edges of the graph as sorted word pairs."""
    return sorted(
        tuple(sorted((g.vertices[v], g.vertices[w])))
        for v, w in g.bidirected_pairs()
    )


def combinatorial_bidirected_pairs(n: int, variant: str):
    """All pairs related by the order-theoretic description, for any window i."""
    m = _model(n, "asc" if variant == "row" else "des")
    row = variant == "row"
    by_length = {}
    for k, l in enumerate(m.length):
        by_length.setdefault(l, []).append(k)
    out = []
    # the relation forces a length gap of exactly 2
    for l, lower in by_length.items():
        for a in lower:
            wa = m.words[a]
            for b in by_length.get(l + 2, ()):
                if any(_bidirected_words(wa, m.words[b], i, row) for i in range(2, n)):
                    out.append(tuple(sorted((wa, m.words[b]))))
    return sorted(out)


# -- classification harness ---------------------------------------------------


@dataclass
class ClassifyReport:
    n: int
    variant: str
    reduced: bool
    fiber_count: int = 0
    molecules_match_fibers: bool = False
    edges_match: bool = False
    cells_match_molecules: bool = False
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.molecules_match_fibers
            and self.edges_match
            and self.cells_match_molecules
        )


def classify(n: int, variant: str, reduced: bool = True) -> ClassifyReport:
    """
    Check, for one Gelfand graph: molecules are the shape fibers of the
    restricted insertion tableau; bidirected edges agree with their
    order-theoretic description; and every molecule is a cell.
    """
    g = build_gamma(n, variant, reduced=reduced)
    report = ClassifyReport(n, variant, g.reduced)

    fibers = {}
    for k, sh in enumerate(g.shapes):
        fibers.setdefault(sh, []).append(k)
    fiber_parts = sorted(sorted(part) for part in fibers.values())
    report.fiber_count = len(fiber_parts)

    mols = molecules(g)
    report.molecules_match_fibers = mols == fiber_parts
    if not report.molecules_match_fibers:
        report.counterexamples.append(
            f"molecules differ from shape fibers: {len(mols)} vs {len(fiber_parts)} parts"
        )

    alg = algebraic_bidirected_pairs(g)
    comb = combinatorial_bidirected_pairs(n, variant)
    report.edges_match = alg == comb
    if not report.edges_match:
        extra = [p for p in alg if p not in set(comb)]
        missing = [p for p in comb if p not in set(alg)]
        report.counterexamples.append(
            f"bidirected edges disagree: {len(extra)} algebraic-only, "
            f"{len(missing)} combinatorial-only; first: {(extra + missing)[:1]}"
        )

    parts, _ = cells(g)
    report.cells_match_molecules = parts == mols
    if not report.cells_match_molecules:
        report.counterexamples.append(
            f"cells differ from molecules: {len(parts)} cells vs {len(mols)} molecules"
        )
    return report


# -- character of the specialized module ---------------------------------------


def _rho_one_matrix(g: WGraph, i: int):
    """Integer matrix of H_{s_i} at x = 1 (columns as dense lists)."""
    size = g.size
    cols = [[0] * size for _ in range(size)]
    for v in range(size):
        if i not in g.tau[v]:
            cols[v][v] = 1
        else:
            cols[v][v] = -1
            for w in range(size):
                c = g.omega.get((v, w))
                if c and i not in g.tau[w]:
                    cols[v][w] += c
    return cols


def _int_mat_mul(A, B):
    size = len(B)
    out = [[0] * size for _ in range(size)]
    for v in range(size):
        colB = B[v]
        outv = out[v]
        for u in range(size):
            c = colB[u]
            if c:
                colA = A[u]
                for t in range(size):
                    if colA[t]:
                        outv[t] += colA[t] * c
    return out


def character_trace(g: WGraph, w: Permutation) -> int:
    """Trace of the graph's module action at x = 1, at the group element w."""
    from .hecke import reduced_word

    rw = reduced_word(w)
    size = g.size
    acc = None
    for i in rw:
        m = _rho_one_matrix(g, i)
        acc = m if acc is None else _int_mat_mul(acc, m)
    if acc is None:
        return size
    return sum(acc[v][v] for v in range(size))


def square_root_count(w: Permutation) -> int:
    """#{g in S_n : g*g = w}, by brute force."""
    n = w.n
    target = w.word
    count = 0
    for p in _permutations(range(1, n + 1)):
        if tuple(p[p[i] - 1] for i in range(n)) == target:
            count += 1
    return count


def character_check(g: WGraph, w: Permutation) -> bool:
    """The x = 1 character at w equals the number of square roots of w in S_n."""
    return character_trace(g, w) == square_root_count(w)


# -- serialization --------------------------------------------------------------


def export(g: WGraph, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "n": g.n,
            "variant": g.variant,
            "reduced": g.reduced,
            "vertices": [list(v) for v in g.vertices],
            "tau": [sorted(t) for t in g.tau],
            "edges": [[v, w, c] for v, w, c in g.edges()],
        }
        if g.shapes is not None:
            doc["shapes"] = [list(s) for s in g.shapes]
        return json.dumps(doc, indent=1)
    if fmt == "dot":
        lines = [f'digraph "{g.variant}_{g.n}" {{']
        for k, v in enumerate(g.vertices):
            label = "".join(map(str, v)) if g.n < 5 else ",".join(map(str, v))
            if g.shapes is not None:
                label += "|" + ",".join(map(str, g.shapes[k]))
            lines.append(f'  v{k} [label="{label}"];')
        bidir = set(g.bidirected_pairs())
        for v, w, c in g.edges():
            if (v, w) in bidir:
                lines.append(f'  v{v} -> v{w} [dir=both, label="{c}"];')
            elif (w, v) not in bidir:
                lines.append(f'  v{v} -> v{w} [style=dashed, label="{c}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unsupported format {fmt!r}")


def parse_wgraph(text: str) -> WGraph:
    doc = json.loads(text)
    return WGraph(
        n=doc["n"],
        variant=doc["variant"],
        reduced=doc["reduced"],
        vertices=[tuple(v) for v in doc["vertices"]],
        tau=[frozenset(t) for t in doc["tau"]],
        omega={(v, w): c for v, w, c in doc["edges"]},
        shapes=[tuple(s) for s in doc["shapes"]] if "shapes" in doc else None,
    )
