"""Exact linear algebra over the rationals.

Determinants use Bareiss fraction-free elimination and ranks use integer row
reduction; rational input is scaled row by row to integers first. The block
row selection at the end is what turns an abelianization matrix into a
coloring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InternalError, ParseError, PreconditionError
from .freegroup import ProductShape


class RationalMatrix:
    """Immutable r x c matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise PreconditionError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, r: int, c: int) -> "RationalMatrix":
        return cls([[0] * c for _ in range(r)], c)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, RationalMatrix) and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self.entries[i][j] for i in range(self.rows)]
                               for j in range(self.cols)], self.rows)

    def permute_rows(self, order: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([self.entries[i] for i in order], self.cols)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise PreconditionError("dimension mismatch in product")
        return RationalMatrix(
            [[sum((a * other.entries[t][j] for t, a in enumerate(row) if a), Fraction(0))
              for j in range(other.cols)] for row in self.entries], other.cols)

    def to_text(self) -> str:
        return "".join(" ".join(_fmt(x) for x in row) + "\n" for row in self.entries)

    @classmethod
    def from_text(cls, text: str) -> "RationalMatrix":
        rows = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                rows.append([Fraction(tok) for tok in line.split()])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(str(exc), lineno) from None
        try:
            return cls(rows)
        except PreconditionError as exc:
            raise ParseError(str(exc)) from None


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _integer_rows(entries) -> tuple[list, int]:
    """Scale each row to integers; returns rows and the product of scale factors."""
    out, scale = [], 1
    for row in entries:
        den = 1
        for x in row:
            den = math.lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
        scale *= den
    return out, scale


def det(M: RationalMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination."""
    if not M.is_square:
        raise PreconditionError(f"determinant of non-square {M.rows}x{M.cols} matrix")
    a, scale = _integer_rows(M.entries)
    return Fraction(bareiss_det(a), scale)


def bareiss_det(a: list) -> int:
    """Bareiss on a square integer matrix (list of lists, modified in place)."""
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - lead * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise InternalError("Bareiss division left a remainder")
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def rank(M: RationalMatrix) -> int:
    a, _ = _integer_rows(M.entries)
    return _integer_rank(a, M.cols)


def _integer_rank(a: list, cols: int) -> int:
    rows = [r for r in a if any(r)]
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, len(rows)):
            lead = rows[i][c]
            if lead:
                new = [x * piv - lead * y for x, y in zip(rows[i], piv_row)]
                g = math.gcd(*new)
                rows[i] = [x // g for x in new] if g > 1 else new
        r += 1
        if r == len(rows):
            break
    return r


def left_kernel(M: RationalMatrix) -> RationalMatrix:
    """Basis (as columns) of {y : y^T M = 0}; shape rows x (rows - rank)."""
    # Reduced row echelon form of M^T; free columns index the kernel basis.
    t = [list(row) for row in M.transpose().entries]
    n = M.rows
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(t)) if t[i][c]), None)
        if p is None:
            continue
        t[r], t[p] = t[p], t[r]
        inv = 1 / t[r][c]
        t[r] = [x * inv for x in t[r]]
        for i in range(len(t)):
            if i != r and t[i][c]:
                f = t[i][c]
                t[i] = [x - f * y for x, y in zip(t[i], t[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        y = [Fraction(0)] * n
        y[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            y[pc] = -t[i][f]
        basis.append(y)
    return RationalMatrix([[basis[j][i] for j in range(len(free))] for i in range(n)],
                          len(free))


def principal_completion_check(M: RationalMatrix, chosen: Iterable[int], block: int) -> bool:
    """Does M keep full rank on the complement of the leading column block once
    the chosen rows are deleted?

    ``block`` is the width of the leading column block. This is the pruning
    predicate of the row selection, stated directly in terms of ranks.
    """
    chosen = set(chosen)
    keep = [i for i in range(M.rows) if i not in chosen]
    rest_cols = list(range(block, M.cols))
    return rank(M.submatrix(keep, rest_cols)) == len(rest_cols)


@dataclass(frozen=True)
class BlockRowPartition:
    blocks: tuple
    shape: ProductShape

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(sorted(b)) for b in self.blocks))
        if len(self.blocks) != self.shape.k:
            raise PreconditionError("one row block per factor is required")
        for b, m in zip(self.blocks, self.shape.ranks):
            if len(b) != m:
                raise PreconditionError(f"row block {b} should have {m} rows")
        flat = sorted(i for b in self.blocks for i in b)
        if flat != list(range(self.shape.total)):
            raise PreconditionError("row blocks must partition 0..n-1")

    def block_of_row(self) -> list:
        out = [0] * self.shape.total
        for i, b in enumerate(self.blocks):
            for r in b:
                out[r] = i
        return out


class _Echelon:
    """Rows in echelon form with pivot entries 1; extend() returns a new object."""

    __slots__ = ("pivots",)

    def __init__(self, pivots=()):
        self.pivots = pivots

    def reduce(self, v):
        v = list(v)
        for col, row in self.pivots:
            f = v[col]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def extend(self, reduced):
        col = next(j for j, x in enumerate(reduced) if x)
        inv = 1 / reduced[col]
        return _Echelon(self.pivots + ((col, [x * inv for x in reduced]),))


def _select_leading_block(cur: list, m: int):
    """Lexicographically least row set S (local indices) with cur[S, :m]
    invertible and cur[not S, m:] invertible, found depth-first.

    The second condition is tested through the left kernel of cur[:, m:]:
    the complement of S spans those columns exactly when the kernel rows
    indexed by S are independent.
    """
    r = len(cur)
    lead = [row[:m] for row in cur]
    if m == r:
        return tuple(range(r))
    kern = left_kernel(RationalMatrix([row[m:] for row in cur], r - m)).entries

    def search(start, chosen, ea, ek):
        if len(chosen) == m:
            return chosen
        for idx in range(start, r - (m - len(chosen)) + 1):
            ra = ea.reduce(lead[idx])
            if not any(ra):
                continue
            rk = ek.reduce(kern[idx])
            if not any(rk):
                continue
            found = search(idx + 1, chosen + (idx,), ea.extend(ra), ek.extend(rk))
            if found is not None:
                return found
        return None

    return search(0, (), _Echelon(), _Echelon())


def select_block_rows(M: RationalMatrix, shape: ProductShape) -> BlockRowPartition:
    """Split the rows of an invertible M into blocks J_1..J_k, |J_i| = m_i.

    Block i is chosen among the rows not yet used so that its restriction to
    column block i is invertible and what is left (remaining rows, columns
    after block i) is still invertible. Each J_i is the lexicographically
    least such set given the earlier blocks.
    """
    if not M.is_square or M.rows != shape.total:
        raise PreconditionError(
            f"expected {shape.total}x{shape.total} matrix for shape {shape.ranks}, "
            f"got {M.rows}x{M.cols}")
    if det(M) == 0:
        raise PreconditionError("matrix is singular; no block row selection exists")
    remaining = list(range(M.rows))
    cur = [list(row) for row in M.entries]
    blocks = []
    for m in shape.ranks:
        local = _select_leading_block(cur, m)
        if local is None:
            raise InternalError("row selection exhausted on an invertible matrix")
        picked = set(local)
        blocks.append(tuple(remaining[i] for i in local))
        keep = [i for i in range(len(cur)) if i not in picked]
        remaining = [remaining[i] for i in keep]
        cur = [cur[i][m:] for i in keep]
    return BlockRowPartition(tuple(blocks), shape)


def partition_satisfies(M: RationalMatrix, partition: BlockRowPartition) -> bool:
    """Check the per-block conditions of a partition directly with determinants.

    For every i: rows J_i on column block i are invertible, and the rows
    outside J_1..J_i on the columns after block i are invertible.
    """
    shape = partition.shape
    used = set()
    for i, rows in enumerate(partition.blocks):
        cols = list(shape.column_block(i))
        if det(M.submatrix(rows, cols)) == 0:
            return False
        used |= set(rows)
        rest_rows = [r for r in range(M.rows) if r not in used]
        rest_cols = list(range(cols[-1] + 1, M.cols))
        if rest_cols and det(M.submatrix(rest_rows, rest_cols)) == 0:
            return False
    return True


def laplace_block_terms(M: RationalMatrix, width: int):
    """Terms of the generalized Laplace expansion along the first ``width`` columns.

    Yields (rows, sign, det(M[rows, :width]), det(M[other rows, width:])); the
    signed products sum to det(M).
    """
    if not M.is_square:
        raise PreconditionError("Laplace expansion needs a square matrix")
    n = M.rows
    left, right = list(range(width)), list(range(width, n))
    for rows in combinations(range(n), width):
        sign = -1 if (sum(rows) + sum(left)) % 2 else 1
        others = [i for i in range(n) if i not in rows]
        yield rows, sign, det(M.submatrix(rows, left)), det(M.submatrix(others, right))
