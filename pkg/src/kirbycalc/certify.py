"""Exact certification tools: integer linear algebra and coset enumeration.

Everything here runs on arbitrary-precision integers; no floating point.
Smith normal form feeds abelianization checks, and a relator-driven coset
enumerator (with an independent post-hoc verification pass) certifies finite
group orders, in particular order 1 for presentations of the trivial group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .presentations import Presentation


class MatrixError(ValueError):
    pass


class IntegerMatrix:
    """Immutable rectangular matrix of Python ints."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries):
        rows = tuple(tuple(int(v) for v in row) for row in entries)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise MatrixError("ragged rows")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", len(rows[0]) if rows else 0)

    def __setattr__(self, name, value):
        raise AttributeError("IntegerMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntegerMatrix({[list(r) for r in self.entries]})"

    def __mul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise MatrixError(f"shape mismatch {self.rows}x{self.cols} * "
                              f"{other.rows}x{other.cols}")
        return IntegerMatrix(
            [[sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
              for j in range(other.cols)] for i in range(self.rows)])

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(list(zip(*self.entries))) if self.rows else self

    def is_square(self) -> bool:
        return self.rows == self.cols

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square():
            raise MatrixError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


def exponent_matrix(p: Presentation) -> IntegerMatrix:
    """Row i, column j: exponent sum of generator j in relator i."""
    return IntegerMatrix([[r.exponent_sum(g) for g in p.generators]
                          for r in p.relators])


@dataclass(frozen=True)
class SmithNormalForm:
    diagonal: tuple[int, ...]
    left: IntegerMatrix
    right: IntegerMatrix

    def diagonal_matrix(self, rows: int, cols: int) -> IntegerMatrix:
        m = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(self.diagonal):
            m[i][i] = d
        return IntegerMatrix(m)


def smith_normal_form(mat: IntegerMatrix) -> SmithNormalForm:
    """Diagonalize by unimodular row/column operations.

    Returns (diagonal, left, right) with left * mat * right diagonal,
    nonnegative entries in a divisibility chain, and det(left), det(right)
    in {1, -1}.
    """
    rows, cols = mat.rows, mat.cols
    a = [list(r) for r in mat.entries]
    left = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    right = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + c * y for x, y in zip(left[dst], left[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in right:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    n = min(rows, cols)
    for t in range(n):
        # smallest nonzero entry in the remaining block becomes the pivot
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(a[i][j])
                if v and (pivot is None or v < pivot[0]):
                    pivot = (v, i, j)
        if pivot is None:
            break
        _, pi, pj = pivot
        if pi != t:
            swap_rows(t, pi)
        if pj != t:
            swap_cols(t, pj)
        while True:
            # clear column t, then row t, restarting while remainders appear
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            culprit = None
            d = a[t][t]
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % d:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            add_row(culprit, t, 1)
        if a[t][t] < 0:
            negate_row(t)
    diag = tuple(a[i][i] for i in range(n))
    return SmithNormalForm(diag, IntegerMatrix(left), IntegerMatrix(right))


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group: free rank plus torsion factors."""

    rank: int
    torsion: tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "trivial"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}


def h1_from_matrix(mat: IntegerMatrix) -> AbelianGroup:
    """Cokernel of a square integer matrix as an abelian group."""
    if not mat.is_square():
        raise MatrixError(
            f"cokernel descriptor needs a square matrix, got {mat.rows}x{mat.cols}")
    diag = smith_normal_form(mat).diagonal
    rank = sum(1 for d in diag if d == 0)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroup(rank, torsion)


def abelianization(p: Presentation) -> AbelianGroup:
    """Abelianization of a presented group (rectangular matrices allowed)."""
    mat = exponent_matrix(p)
    diag = smith_normal_form(mat).diagonal
    free = mat.cols - sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroup(free, torsion)


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration (relator-driven, with coincidence handling)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CosetTable:
    """Result of a coset enumeration over the trivial subgroup.

    ``status`` is "closed" or "budget".  A closed table has one row per live
    coset and one column per generator letter (x0, X0, x1, X1, ...), and
    ``order`` equals the group order.  ``defined`` counts every coset ever
    defined, including those later merged away.
    """

    status: str
    generators: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    order: Optional[int]
    live: int
    defined: int

    def closed(self) -> bool:
        return self.status == "closed"

    def to_json(self) -> dict:
        data = {"status": self.status, "live": self.live, "defined": self.defined}
        if self.order is not None:
            data["order"] = self.order
        return data


def _letter_index(generators: Sequence[str]):
    idx = {}
    for k, g in enumerate(generators):
        idx[(g, 1)] = 2 * k
        idx[(g, -1)] = 2 * k + 1
    return idx


def todd_coxeter(p: Presentation, max_cosets: int = 100_000) -> CosetTable:
    """Enumerate cosets of the trivial subgroup of the presented group.

    Relator-driven strategy: process live cosets in definition order, scan
    every relator through each, filling gaps by defining new cosets, then
    complete the row.  Deterministic for a fixed presentation and budget.
    Budget exhaustion is reported as status "budget", never an error.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    gens = p.generators
    letter = _letter_index(gens)
    width = 2 * len(gens)
    relator_paths = [tuple(letter[l] for l in r.letters) for r in p.relators]

    table: list[list[Optional[int]]] = [[None] * width]
    rep: list[int] = [0]            # union-find for coincidences
    defined = 1

    def find(c: int) -> int:
        while rep[c] != c:
            rep[c] = rep[rep[c]]
            c = rep[c]
        return c

    def define(alpha: int, x: int) -> Optional[int]:
        nonlocal defined
        if defined >= max_cosets:
            return None
        beta = len(table)
        table.append([None] * width)
        rep.append(beta)
        defined += 1
        table[alpha][x] = beta
        table[beta][x ^ 1] = alpha
        return beta

    def coincidence(alpha: int, beta: int) -> None:
        queue: list[int] = []

        def merge(u: int, v: int) -> None:
            u, v = find(u), find(v)
            if u != v:
                lo, hi = min(u, v), max(u, v)
                rep[hi] = lo
                queue.append(hi)

        merge(alpha, beta)
        qi = 0
        while qi < len(queue):
            gamma = queue[qi]       # a dead coset whose row must be rewired
            qi += 1
            for x in range(width):
                delta = table[gamma][x]
                if delta is None:
                    continue
                table[delta][x ^ 1] = None
                mu, nu = find(gamma), find(delta)
                if table[mu][x] is not None:
                    merge(nu, table[mu][x])
                elif table[nu][x ^ 1] is not None:
                    merge(mu, table[nu][x ^ 1])
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(alpha: int, path: tuple[int, ...]) -> bool:
        """Trace a relator at alpha, defining cosets as needed.

        Returns False when the coset budget is exhausted.
        """
        if not path:
            return True
        f, i = alpha, 0
        b, j = alpha, len(path) - 1
        while True:
            while i <= j and table[f][path[i]] is not None:
                f = find(table[f][path[i]])
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return True
            while j >= i and table[b][path[j] ^ 1] is not None:
                b = find(table[b][path[j] ^ 1])
                j -= 1
            if j < i:
                coincidence(f, b)
                return True
            if i == j:
                # deduction closes the gap
                table[f][path[i]] = b
                table[b][path[i] ^ 1] = f
                return True
            new = define(f, path[i])
            if new is None:
                return False

    exhausted = False
    alpha = 0
    while alpha < len(table):
        if find(alpha) != alpha:
            alpha += 1
            continue
        for path in relator_paths:
            if not scan_and_fill(alpha, path):
                exhausted = True
                break
            if find(alpha) != alpha:
                break
        if exhausted:
            break
        if find(alpha) == alpha:
            for x in range(width):
                if table[alpha][x] is None:
                    if define(alpha, x) is None:
                        exhausted = True
                        break
        if exhausted:
            break
        alpha += 1

    live_ids = [c for c in range(len(table)) if find(c) == c]
    if exhausted:
        return CosetTable("budget", gens, (), None, len(live_ids), defined)

    renumber = {c: k for k, c in enumerate(live_ids)}
    compact = tuple(
        tuple(renumber[find(table[c][x])] for x in range(width))
        for c in live_ids)
    order = len(live_ids)
    return CosetTable("closed", gens, compact, order, order, defined)


def verify_coset_table(result: CosetTable, p: Presentation) -> bool:
    """Independent check of a closed table: inverse-consistency, columns are
    permutations, all cosets reachable from 0, and every relator traces to
    the identity at every coset."""
    if not result.closed():
        raise ValueError("only closed tables can be verified")
    table = result.table
    n = len(table)
    width = 2 * len(p.generators)
    letter = _letter_index(p.generators)
    for c in range(n):
        if len(table[c]) != width:
            return False
        for x in range(width):
            d = table[c][x]
            if not (0 <= d < n) or table[d][x ^ 1] != c:
                return False
    seen = {0}
    stack = [0]
    while stack:
        c = stack.pop()
        for x in range(width):
            d = table[c][x]
            if d not in seen:
                seen.add(d)
                stack.append(d)
    if len(seen) != n:
        return False
    for r in p.relators:
        path = [letter[l] for l in r.letters]
        for c in range(n):
            d = c
            for x in path:
                d = table[d][x]
            if d != c:
                return False
    return True


def certification_report(p: Presentation, max_cosets: int = 100_000) -> dict:
    """Abelianization plus coset-enumeration status, as a JSON-ready dict."""
    coset = todd_coxeter(p, max_cosets)
    report = {
        "presentation": p.to_json(),
        "abelianization": abelianization(p).to_json(),
        "coset": coset.to_json(),
    }
    if coset.closed():
        report["coset"]["verified"] = verify_coset_table(coset, p)
    return report
