"""Jacobi continued fractions, moments, and orthogonal polynomials.

A ``JFraction`` holds the weights of

    h(x) = 1 / (1 - s_0 x - t_1 x^2 / (1 - s_1 x - t_2 x^2 / (...)))

whose Taylor coefficients mu_n are the moments of a linear functional.
Three independent computations meet here and must agree exactly:

* ``moments_by_motzkin_paths``   -- weighted lattice-path sums (level
  step at height i weighs s_i, down step from height i weighs t_i);
* ``moments_by_cfrac_expansion`` -- truncated series expansion of the
  nested fraction itself;
* the first column of a Riordan array whose production matrix is
  tridiagonal with these weights (checked in the test suite).

``orthogonal_basis`` runs the three-term recurrence

    Q_{n+1}(x) = (x - s_n) Q_n(x) - t_n Q_{n-1}(x)

and ``jfraction_from_moments`` inverts moments back to weights by
Gram-Schmidt against the moment functional, failing loudly when a norm
vanishes (the functional is not quasi-definite).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ONE, QPoly, QRatFun, RF_ONE, RF_ZERO, ZERO
from .series import TruncSeries

__all__ = [
    "JFraction",
    "MomentSeq",
    "OrthoBasis",
    "NonQuasiDefiniteError",
    "jfraction_from_params",
    "moments_by_motzkin_paths",
    "moments_by_cfrac_expansion",
    "orthogonal_basis",
    "verify_orthogonality",
    "jfraction_from_moments",
]


class NonQuasiDefiniteError(ValueError):
    """A Gram-Schmidt norm vanished: the functional has no J-fraction."""


def _as_qpoly(value) -> QPoly:
    if isinstance(value, QPoly):
        return value
    return QPoly(value)


@dataclass(frozen=True)
class JFraction:
    """Continued-fraction weights; ``t[i]`` stores ``t_{i+1}``."""

    s: tuple[QPoly, ...]
    t: tuple[QPoly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", tuple(_as_qpoly(v) for v in self.s))
        object.__setattr__(self, "t", tuple(_as_qpoly(v) for v in self.t))
        if not self.s:
            raise ValueError("at least s_0 is required")
        if len(self.t) != len(self.s) - 1:
            raise ValueError(
                f"want len(t) = len(s) - 1, got {len(self.t)} vs {len(self.s)}"
            )

    @property
    def depth(self) -> int:
        return len(self.s)

    def to_json(self) -> dict:
        return {"s": [p.to_json() for p in self.s], "t": [p.to_json() for p in self.t]}

    @classmethod
    def from_json(cls, data) -> "JFraction":
        return cls(
            tuple(QPoly.from_json(p) for p in data["s"]),
            tuple(QPoly.from_json(p) for p in data["t"]),
        )


@dataclass(frozen=True)
class MomentSeq:
    """The moments mu_0, mu_1, ... of a linear functional, as polynomials."""

    mu: tuple[QPoly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mu", tuple(_as_qpoly(v) for v in self.mu))
        if not self.mu:
            raise ValueError("empty moment sequence")

    def __len__(self) -> int:
        return len(self.mu)

    def to_json(self) -> dict:
        return {"mu": [p.to_json() for p in self.mu]}

    @classmethod
    def from_json(cls, data) -> "MomentSeq":
        return cls(tuple(QPoly.from_json(p) for p in data["mu"]))


@dataclass(frozen=True)
class OrthoBasis:
    """Rows of monic orthogonal polynomials; ``rows[n][k] = [x^k] Q_n``."""

    rows: tuple[tuple[QPoly, ...], ...]

    def __post_init__(self) -> None:
        for n, row in enumerate(self.rows):
            if len(row) != n + 1 or row[-1] != ONE:
                raise ValueError(f"row {n} is not a monic degree-{n} polynomial")

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_json(self) -> list[list[list[str]]]:
        return [[p.to_json() for p in row] for row in self.rows]


def jfraction_from_params(a, b, d, depth: int) -> JFraction:
    """Closed-form weights attached to the EGF parameters (a, b, d):

        s_i     = (d i + a b) + (d i + b d - a b) q
        t_{i+1} = d^2 (i + 1)(i + b) q
    """
    from .algebra import as_fraction

    fa, fb, fd = as_fraction(a), as_fraction(b), as_fraction(d)
    if depth < 1:
        raise ValueError("depth must be positive")
    s = tuple(
        QPoly(fd * i + fa * fb, fd * i + fb * fd - fa * fb) for i in range(depth)
    )
    t = tuple(QPoly(0, fd * fd * (i + 1) * (i + fb)) for i in range(depth - 1))
    return JFraction(s, t)


def _require_depth(jf: JFraction, height: int, what: str) -> None:
    if len(jf.s) < height + 1 or len(jf.t) < height:
        raise ValueError(
            f"{what} needs weights up to height {height} "
            f"(depth >= {height + 1}), have depth {jf.depth}"
        )


def moments_by_motzkin_paths(jf: JFraction, count: int) -> MomentSeq:
    """mu_n as the total weight of closed lattice paths of length n.

    Paths live on heights 0..floor((count-1)/2); anything climbing
    higher cannot return to 0 within the window, so it is pruned.
    """
    if count < 1:
        raise ValueError("count must be positive")
    height = (count - 1) // 2
    _require_depth(jf, height, "motzkin moment computation")
    cur: list[QPoly] = [ONE] + [ZERO] * height
    out: list[QPoly] = [ONE]
    for _ in range(1, count):
        nxt: list[QPoly] = [ZERO] * (height + 1)
        for h, w in enumerate(cur):
            if w.is_zero:
                continue
            nxt[h] = nxt[h] + w * jf.s[h]
            if h + 1 <= height:
                nxt[h + 1] = nxt[h + 1] + w
            if h:
                nxt[h - 1] = nxt[h - 1] + w * jf.t[h - 1]
        cur = nxt
        out.append(cur[0])
    return MomentSeq(tuple(out))


def _x_shift(series: TruncSeries, k: int) -> TruncSeries:
    return TruncSeries(series.order, [RF_ZERO] * k + list(series.coeffs[: series.order - k]))


def moments_by_cfrac_expansion(jf: JFraction, count: int) -> MomentSeq:
    """mu_n by expanding the nested fraction bottom-up as a series.

    Levels below floor((count-1)/2) only influence x-powers beyond the
    window, so the tail is cut there; this route shares nothing with the
    path count except the weights themselves.
    """
    if count < 1:
        raise ValueError("count must be positive")
    height = (count - 1) // 2
    _require_depth(jf, height, "cfrac moment expansion")
    if count >= 2:
        level = TruncSeries(count, [RF_ONE, -QRatFun(jf.s[height])]).inverse()
    else:
        level = TruncSeries(count, [RF_ONE])
    # level == 1/(1 - s_H x); now wrap upwards
    for k in range(height - 1, -1, -1):
        lin = TruncSeries(count, [RF_ZERO, QRatFun(jf.s[k])])
        quad = _x_shift(level * QRatFun(jf.t[k]), 2)
        level = (-(lin + quad) + 1).inverse()
    out = []
    for n in range(count):
        out.append(level.coeffs[n].as_poly())
    return MomentSeq(tuple(out))


def orthogonal_basis(jf: JFraction, size: int) -> OrthoBasis:
    """The first ``size`` monic orthogonal polynomials of the weights."""
    if size < 1:
        raise ValueError("size must be positive")
    if len(jf.s) < size - 1 or len(jf.t) < max(0, size - 2):
        raise ValueError(f"need depth >= {size - 1} for {size} rows, have {jf.depth}")
    rows: list[tuple[QPoly, ...]] = [(ONE,)]
    if size >= 2:
        rows.append((-jf.s[0], ONE))
    for n in range(2, size):
        s, t = jf.s[n - 1], jf.t[n - 2]
        prev = rows[n - 1]
        prev2 = rows[n - 2]
        new = [ZERO] * (n + 1)
        for k, ck in enumerate(prev):
            new[k + 1] = new[k + 1] + ck
            new[k] = new[k] - s * ck
        for k, ck in enumerate(prev2):
            new[k] = new[k] - t * ck
        rows.append(tuple(new))
    return OrthoBasis(tuple(rows))


def verify_orthogonality(basis: OrthoBasis, moments: MomentSeq) -> bool:
    """Check <Q_n, x^m> = 0 for m < n and <Q_n, x^n> != 0, exactly.

    The norm check at the last row touches mu_{2(size-1)}, hence the
    moment sequence must reach that index.
    """
    size = basis.size
    need = 2 * (size - 1)
    if len(moments) < need + 1:
        raise ValueError(f"need {need + 1} moments for {size} rows, have {len(moments)}")
    mu = moments.mu
    for n in range(size):
        row = basis.rows[n]
        for m in range(n):
            acc = ZERO
            for k, ck in enumerate(row):
                if not ck.is_zero:
                    acc = acc + ck * mu[k + m]
            if not acc.is_zero:
                return False
        norm = ZERO
        for k, ck in enumerate(row):
            if not ck.is_zero:
                norm = norm + ck * mu[k + n]
        if norm.is_zero:
            return False
    return True


def _inner(f: list[QRatFun], g: list[QRatFun], mu: list[QRatFun]) -> QRatFun:
    acc = RF_ZERO
    for i, fi in enumerate(f):
        if fi.is_zero:
            continue
        for j, gj in enumerate(g):
            if not gj.is_zero:
                acc = acc + fi * gj * mu[i + j]
    return acc


def jfraction_from_moments(moments: MomentSeq, depth: int | None = None) -> JFraction:
    """Recover (s, t) from moments by Gram-Schmidt against the functional.

    s_n = <x Q_n, Q_n> / <Q_n, Q_n> and t_n = <Q_n, Q_n> / <Q_{n-1}, Q_{n-1}>,
    which needs moments up to index 2*depth - 1; a vanishing norm on the
    way raises ``NonQuasiDefiniteError``.  The convention mu_0 = 1 is
    enforced because the leading "1/(1 - ...)" of the fraction cannot
    carry a scale factor.
    """
    mu_polys = moments.mu
    if mu_polys[0] != ONE:
        raise ValueError("moment inversion requires mu_0 = 1")
    max_depth = len(mu_polys) // 2
    if depth is None:
        depth = max_depth
    if depth < 1:
        raise ValueError("depth must be positive")
    if depth > max_depth:
        raise ValueError(
            f"depth {depth} needs {2 * depth} moments, have {len(mu_polys)}"
        )
    mu = [QRatFun(m) for m in mu_polys]

    def to_poly(value: QRatFun, what: str) -> QPoly:
        try:
            return value.as_poly()
        except ValueError as exc:
            raise ValueError(f"moment inversion produced a nonpolynomial {what}: {value!r}") from exc

    s_out: list[QPoly] = []
    t_out: list[QPoly] = []
    q_prev: list[QRatFun] | None = None
    q_cur: list[QRatFun] = [RF_ONE]
    norm_prev: QRatFun | None = None
    for n in range(depth):
        norm_cur = _inner(q_cur, q_cur, mu)
        if norm_cur.is_zero:
            raise NonQuasiDefiniteError(
                f"norm of Q_{n} vanishes; no J-fraction of depth {depth} exists"
            )
        x_q_cur = [RF_ZERO] + q_cur
        s_rf = _inner(x_q_cur, q_cur, mu) / norm_cur
        s_out.append(to_poly(s_rf, f"s_{n}"))
        t_rf: QRatFun | None = None
        if n:
            t_rf = norm_cur / norm_prev
            t_out.append(to_poly(t_rf, f"t_{n}"))
        if n + 1 < depth:
            nxt: list[QRatFun] = [RF_ZERO] * (n + 2)
            for k, ck in enumerate(q_cur):
                nxt[k + 1] = nxt[k + 1] + ck
                nxt[k] = nxt[k] - s_rf * ck
            if q_prev is not None:
                for k, ck in enumerate(q_prev):
                    nxt[k] = nxt[k] - t_rf * ck
            q_prev, q_cur = q_cur, nxt
        norm_prev = norm_cur
    return JFraction(tuple(s_out), tuple(t_out))
