"""Exact linear algebra for small symmetric integer matrices.

Everything here is exact: determinants are fraction-free (Bareiss),
inertia is computed by congruence diagonalization over the rationals
(with an integer leading-minor fast path), mod-2 systems are solved by
Gaussian elimination over GF(2), and Smith normal form uses integer row
and column operations.  Intermediate values use Python's
arbitrary-precision integers throughout; nothing rounds and nothing
overflows.

The 0x0 matrix is a legal value: its determinant is 1 (empty product)
and its inertia is (0, 0, 0).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


class SymmetricIntMatrix:
    """Immutable symmetric matrix with integer entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Sequence[int]]):
        rows = tuple(tuple(row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for x in row:
                if not isinstance(x, int):
                    raise ValueError("entries must be integers, got %r" % (x,))
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        "matrix is not symmetric at (%d, %d)" % (i, j)
                    )
        self._rows = rows

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, key: Tuple[int, int]) -> int:
        i, j = key
        return self._rows[i][j]

    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self._rows[i][i] for i in range(self.dim))

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self._rows]

    def block_sum(self, other: "SymmetricIntMatrix") -> "SymmetricIntMatrix":
        """Block-diagonal sum self (+) other."""
        n, m = self.dim, other.dim
        rows = [list(row) + [0] * m for row in self._rows]
        rows += [[0] * n + list(row) for row in other._rows]
        return SymmetricIntMatrix(rows)

    def bordered(self, border: Sequence[int], corner: int) -> "SymmetricIntMatrix":
        """Append one row and column: border entries off-diagonal, corner last."""
        if len(border) != self.dim:
            raise ValueError("border length must equal dim")
        rows = [list(row) + [b] for row, b in zip(self._rows, border)]
        rows.append(list(border) + [corner])
        return SymmetricIntMatrix(rows)

    def without_index(self, j: int) -> "SymmetricIntMatrix":
        """Delete row and column j."""
        keep = [i for i in range(self.dim) if i != j]
        return SymmetricIntMatrix(
            [[self._rows[i][k] for k in keep] for i in keep]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricIntMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return "SymmetricIntMatrix(%r)" % (self.to_lists(),)


class Mod2Failure(Enum):
    """Why solve_mod2 returned no vector."""

    NO_SOLUTION = "no solution"
    NON_UNIQUE = "non-unique"


def determinant(m: SymmetricIntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    Row pivoting handles zero pivots; every interior division is exact
    by the Sylvester identity, so the result is an exact integer.
    """
    n = m.dim
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if pivot is None:
                return 0
            a[k], a[pivot] = a[pivot], a[k]
            sign = -sign
        for i in range(k + 1, n):
            aik = a[i][k]
            akk = a[k][k]
            arow = a[i]
            krow = a[k]
            for j in range(k + 1, n):
                arow[j] = (arow[j] * akk - aik * krow[j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _leading_minors(m: SymmetricIntMatrix):
    """Leading principal minors D_1..D_n via Bareiss, or None if one vanishes."""
    n = m.dim
    a = m.to_lists()
    minors = []
    prev = 1
    for k in range(n):
        d = a[k][k]
        if d == 0:
            return None
        minors.append(d)
        if k < n - 1:
            for i in range(k + 1, n):
                aik = a[i][k]
                arow = a[i]
                krow = a[k]
                for j in range(k + 1, n):
                    arow[j] = (arow[j] * d - aik * krow[j]) // prev
            prev = d
    return minors


def _sym_swap(a: List[List[Fraction]], i: int, j: int) -> None:
    if i == j:
        return
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def _inertia_congruence(m: SymmetricIntMatrix) -> Tuple[int, int, int]:
    """Inertia by exact congruence diagonalization over the rationals.

    Nonzero diagonal pivots contribute their sign; when the active
    diagonal is all zero, a nonzero off-diagonal entry spans a
    hyperbolic 2x2 block contributing (1, 0, 1).
    """
    n = m.dim
    a = [[Fraction(x) for x in row] for row in m.rows]
    n_plus = n_zero = n_minus = 0
    p = 0
    while p < n:
        piv = next((i for i in range(p, n) if a[i][i] != 0), None)
        if piv is not None:
            _sym_swap(a, p, piv)
            d = a[p][p]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            for i in range(p + 1, n):
                if a[i][p]:
                    t = a[i][p] / d
                    prow = a[p]
                    irow = a[i]
                    for j in range(p + 1, n):
                        irow[j] -= t * prow[j]
            # column p is never read again; the Schur complement above
            # keeps the active block symmetric
            p += 1
            continue
        off = None
        for i in range(p, n):
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            n_zero += n - p
            break
        i, j = off
        _sym_swap(a, p, i)
        if j == p:
            j = i
        _sym_swap(a, p + 1, j)
        c = a[p][p + 1]
        for r in range(p + 2, n):
            rp, rq = a[r][p], a[r][p + 1]
            if rp or rq:
                prow = a[p]
                qrow = a[p + 1]
                rrow = a[r]
                for s in range(p + 2, n):
                    rrow[s] -= (rp * qrow[s] + rq * prow[s]) / c
        n_plus += 1
        n_minus += 1
        p += 2
    return (n_plus, n_zero, n_minus)


def inertia(m: SymmetricIntMatrix) -> Tuple[int, int, int]:
    """Inertia triple (n_plus, n_zero, n_minus), computed exactly.

    Fast path: when no leading principal minor vanishes, Jacobi's
    criterion gives n_minus as the number of sign changes in the
    fraction-free minor sequence 1, D_1, ..., D_n.  Otherwise falls
    back to congruence diagonalization over the rationals.
    """
    n = m.dim
    if n == 0:
        return (0, 0, 0)
    minors = _leading_minors(m)
    if minors is None:
        return _inertia_congruence(m)
    n_minus = 0
    last = 1
    for d in minors:
        s = 1 if d > 0 else -1
        if s != last:
            n_minus += 1
        last = s
    return (n - n_minus, 0, n_minus)


def signature(m: SymmetricIntMatrix) -> int:
    """n_plus - n_minus."""
    n_plus, _, n_minus = inertia(m)
    return n_plus - n_minus


def solve_mod2(a: SymmetricIntMatrix, b: Sequence[int]):
    """Solve A x = b over GF(2).

    Returns the unique solution as a list of 0/1 ints, or a
    Mod2Failure member: NO_SOLUTION when the reduction is inconsistent,
    NON_UNIQUE when the mod-2 kernel is nontrivial.  Input entries are
    reduced mod 2.
    """
    n = a.dim
    if len(b) != n:
        raise ValueError("right-hand side length must equal dim")
    # rows packed as bitmasks, bit n holding the rhs
    rows = [
        sum((x & 1) << j for j, x in enumerate(row)) | ((bv & 1) << n)
        for row, bv in zip(a.rows, b)
    ]
    pivot_cols = []
    r = 0
    for c in range(n):
        bit = 1 << c
        piv = next((i for i in range(r, n) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_cols.append(c)
        r += 1
        if r == n:
            break
    rhs_bit = 1 << n
    for i in range(r, n):
        if rows[i] & rhs_bit:
            return Mod2Failure.NO_SOLUTION
    if len(pivot_cols) < n:
        return Mod2Failure.NON_UNIQUE
    x = [0] * n
    for i, c in enumerate(pivot_cols):
        x[c] = 1 if rows[i] & rhs_bit else 0
    return x


def _min_nonzero(a: List[List[int]], t: int, n: int):
    best = None
    best_abs = None
    for i in range(t, n):
        for j in range(t, n):
            v = a[i][j]
            if v:
                av = -v if v < 0 else v
                if best_abs is None or av < best_abs:
                    best = (i, j)
                    best_abs = av
    return best


def smith_invariant_factors(m: SymmetricIntMatrix) -> Tuple[int, ...]:
    """Diagonal of the Smith normal form, as nonnegative invariant factors.

    Returns a tuple of length dim with d_1 | d_2 | ... and trailing
    zeros; the cokernel Z^n / A Z^n is the direct sum of Z/d_i (with
    Z/0 = Z).
    """
    n = m.dim
    a = m.to_lists()
    factors: List[int] = []
    t = 0
    while t < n:
        if _min_nonzero(a, t, n) is None:
            break
        while True:
            bi, bj = _min_nonzero(a, t, n)
            a[t], a[bi] = a[bi], a[t]
            for row in a:
                row[t], row[bj] = row[bj], row[t]
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        trow = a[t]
                        a[i] = [x - q * y for x, y in zip(a[i], trow)]
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                factors.append(p)
                t += 1
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
    factors += [0] * (n - len(factors))
    return tuple(factors)
