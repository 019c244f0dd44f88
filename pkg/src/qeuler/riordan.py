"""Exponential Riordan arrays and their production matrices.

An exponential Riordan array is a pair of series ``(g, f)`` with
``g(0) != 0``, ``f(0) = 0``, ``f'(0) != 0``; its matrix has entries

    l[n][k] = (n!/k!) * [x^n] g(x) f(x)^k,

lower triangular with invertible diagonal.  The production matrix ``P``
is defined by the row-shift identity ``Lbar = L P`` (``Lbar`` is ``L``
without its top row), so ``P = L^{-1} Lbar``.  It can also be computed
without ever forming ``L`` from the two series

    r(x) = f'(fbar(x)),    c(x) = g'(fbar(x)) / g(fbar(x)),

where ``fbar`` is the compositional inverse of ``f``, via

    p[i][j] = (i!/j!) * (c[i-j] + j * r[i-j+1]),   c[-1] = 0.

Having both routes match, entry by entry, is one of the package's core
cross-checks: a tridiagonal production matrix hands back exactly the
Jacobi continued-fraction weights of the array's first column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import QPoly, QRatFun, Rat, RF_ONE, RF_ZERO, as_fraction
from .series import TruncSeries, egf_series

__all__ = [
    "ExpRiordan",
    "LowerTri",
    "ProductionData",
    "exp_riordan_from_params",
    "riordan_matrix",
    "lower_tri_inverse",
    "production_series",
    "production_matrix_from_series",
    "production_matrix_direct",
]


@dataclass(frozen=True)
class ExpRiordan:
    """The pair (g, f) defining an exponential Riordan array."""

    g: TruncSeries
    f: TruncSeries

    def __post_init__(self) -> None:
        if self.g.order != self.f.order:
            raise ValueError("g and f must share a truncation order")
        if self.g.coeffs[0].is_zero:
            raise ValueError("g(0) must be invertible")
        if not self.f.coeffs[0].is_zero:
            raise ValueError("f(0) must be 0")
        if self.f.order < 2 or self.f.coeffs[1].is_zero:
            raise ValueError("f'(0) must be invertible")

    @property
    def order(self) -> int:
        return self.g.order


class LowerTri:
    """Square lower-triangular matrix with exact entries."""

    __slots__ = ("rows",)

    rows: tuple[tuple[QRatFun, ...], ...]

    def __init__(self, rows):
        norm: list[tuple[QRatFun, ...]] = []
        size = len(rows)
        for i, row in enumerate(rows):
            if len(row) != size:
                raise ValueError("matrix must be square")
            entries = tuple(e if isinstance(e, QRatFun) else QRatFun(e) for e in row)
            if any(not e.is_zero for e in entries[i + 1 :]):
                raise ValueError(f"row {i} has nonzero entries above the diagonal")
            norm.append(entries)
        if not norm:
            raise ValueError("empty matrix")
        object.__setattr__(self, "rows", tuple(norm))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LowerTri is immutable")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> QRatFun:
        return self.rows[i][j]

    @classmethod
    def identity(cls, size: int) -> "LowerTri":
        return cls([[RF_ONE if i == j else RF_ZERO for j in range(size)] for i in range(size)])

    def __matmul__(self, other: "LowerTri") -> "LowerTri":
        if self.size != other.size:
            raise ValueError("size mismatch")
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = RF_ZERO
                for k in range(j, i + 1):  # both factors triangular
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if not a.is_zero and not b.is_zero:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LowerTri(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LowerTri):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("LowerTri", self.rows))

    def to_json(self) -> list[list[dict]]:
        return [[e.to_json() for e in row] for row in self.rows]

    def __repr__(self) -> str:
        return f"LowerTri(size={self.size})"


@dataclass(frozen=True)
class ProductionData:
    """A production matrix window plus what was used to build it.

    ``entries[i][j]`` covers rows ``0..nrows-1`` and columns
    ``0..ncols-1``; everything the window can see beyond column ``i+1``
    must be zero for ``tridiagonal`` to be set, and then the diagonal
    carries ``s_i`` and the subdiagonal ``t_i`` with a unit
    superdiagonal.
    """

    entries: tuple[tuple[QRatFun, ...], ...]
    tridiagonal: bool
    c: TruncSeries | None = None
    r: TruncSeries | None = None

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int) -> QRatFun:
        return self.entries[i][j]

    def s_values(self, count: int) -> list[QPoly]:
        """Diagonal entries s_0 .. s_{count-1} as polynomials."""
        if count > self.nrows:
            raise ValueError(f"window holds only {self.nrows} diagonal entries")
        return [self.entries[i][i].as_poly() for i in range(count)]

    def t_values(self, count: int) -> list[QPoly]:
        """Subdiagonal entries t_1 .. t_count as polynomials."""
        if count > self.nrows - 1:
            raise ValueError(f"window holds only {self.nrows - 1} subdiagonal entries")
        return [self.entries[i][i - 1].as_poly() for i in range(1, count + 1)]

    def to_json(self) -> dict:
        return {
            "entries": [[e.to_json() for e in row] for row in self.entries],
            "tridiagonal": self.tridiagonal,
        }


def _tridiagonal(entries: list[list[QRatFun]]) -> bool:
    for i, row in enumerate(entries):
        for j, e in enumerate(row):
            if j == i + 1:
                if e != RF_ONE:
                    return False
            elif (j > i + 1 or j < i - 1) and not e.is_zero:
                return False
    return True


def exp_riordan_from_params(a: Rat | str, b: Rat | str, d: Rat | str, order: int) -> ExpRiordan:
    """The array [g, f] whose first column EGF is the (a, b, d) family.

    f = (e^{d(1-q)x} - 1) / (d (1 - q e^{d(1-q)x})); d = 0 would collapse
    the kernel, so it is rejected.
    """
    fd = as_fraction(d)
    if fd == 0:
        raise ValueError("d must be nonzero")
    one_minus_q = QRatFun(QPoly(1, -1))
    q = QRatFun(QPoly(0, 1))
    x = TruncSeries.x(order)
    exp_d = (x * (fd * one_minus_q)).exp()
    f = (exp_d - 1) * ((-(exp_d * q) + 1) * fd).inverse()
    return ExpRiordan(egf_series(a, b, d, order), f)


def riordan_matrix(arr: ExpRiordan) -> LowerTri:
    """Materialize l[n][k] = (n!/k!) [x^n] g f^k for n, k < order."""
    n = arr.order
    fact = [1] * n
    for i in range(1, n):
        fact[i] = fact[i - 1] * i
    rows = [[RF_ZERO] * n for _ in range(n)]
    col = arr.g
    for k in range(n):
        for i in range(k, n):
            scale = Fraction(fact[i], fact[k])
            rows[i][k] = col.coeffs[i] * scale
        if k + 1 < n:
            col = col * arr.f
    return LowerTri(rows)


def lower_tri_inverse(mat: LowerTri) -> LowerTri:
    """Inverse by forward substitution; diagonal must be invertible."""
    n = mat.size
    for i in range(n):
        if mat.rows[i][i].is_zero:
            raise ValueError(f"diagonal entry {i} is zero; matrix not invertible")
    inv = [[RF_ZERO] * n for _ in range(n)]
    for i in range(n):
        diag = mat.rows[i][i].reciprocal()
        inv[i][i] = diag
        for j in range(i - 1, -1, -1):
            acc = RF_ZERO
            for k in range(j, i):
                a = mat.rows[i][k]
                b = inv[k][j]
                if not a.is_zero and not b.is_zero:
                    acc = acc + a * b
            inv[i][j] = -(acc * diag) if not acc.is_zero else RF_ZERO
    return LowerTri(inv)


def production_series(arr: ExpRiordan) -> tuple[TruncSeries, TruncSeries]:
    """The series c = g'(fbar)/g(fbar) and r = f'(fbar), one order short."""
    n = arr.order
    if n < 3:
        raise ValueError("need order >= 3 to extract production series")
    fbar = arr.f.reversion().truncate(n - 1)
    r = arr.f.derivative().compose(fbar)
    c = arr.g.derivative().compose(fbar) * arr.g.truncate(n - 1).compose(fbar).inverse()
    return c, r


def production_matrix_from_series(c: TruncSeries, r: TruncSeries) -> ProductionData:
    """Assemble p[i][j] = (i!/j!)(c[i-j] + j r[i-j+1]) on the valid window.

    With c and r known to index M-1, row i needs r[i+1], so rows
    0 .. M-2 are available.
    """
    if c.order != r.order:
        raise ValueError("c and r must share a truncation order")
    m = c.order
    if m < 2:
        raise ValueError("need at least two known coefficients")
    nrows = m - 1
    ncols = nrows + 1
    fact = [1] * (ncols + 1)
    for i in range(1, ncols + 1):
        fact[i] = fact[i - 1] * i
    entries: list[list[QRatFun]] = []
    for i in range(nrows):
        row = []
        for j in range(ncols):
            if j > i + 1:
                row.append(RF_ZERO)
                continue
            diff = i - j
            term = c.coeffs[diff] if diff >= 0 else RF_ZERO
            if j:
                term = term + j * r.coeffs[diff + 1]
            row.append(term * Fraction(fact[i], fact[j]))
        entries.append(row)
    return ProductionData(
        entries=tuple(tuple(row) for row in entries),
        tridiagonal=_tridiagonal(entries),
        c=c,
        r=r,
    )


def production_matrix_direct(mat: LowerTri) -> ProductionData:
    """P = L^{-1} Lbar computed from the matrix alone.

    Lbar drops the top row of L, so with L of size N the product is
    known on rows 0 .. N-2 and all N columns.
    """
    n = mat.size
    if n < 2:
        raise ValueError("need at least a 2x2 window")
    inv = lower_tri_inverse(mat)
    entries: list[list[QRatFun]] = []
    for i in range(n - 1):
        row = []
        for j in range(n):
            acc = RF_ZERO
            for k in range(max(0, j - 1), i + 1):
                a = inv.rows[i][k]
                b = mat.rows[k + 1][j] if j <= k + 1 else RF_ZERO
                if not a.is_zero and not b.is_zero:
                    acc = acc + a * b
            row.append(acc)
        entries.append(row)
    return ProductionData(
        entries=tuple(tuple(row) for row in entries),
        tridiagonal=_tridiagonal(entries),
    )
