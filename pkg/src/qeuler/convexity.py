"""q-log-convexity checks, a continued-fraction criterion, and transforms.

For polynomials, ``f >=_q g`` means every coefficient of ``f - g`` is
nonnegative.  A sequence (f_n) is q-log-convex when
``f_{n-1} f_{n+1} >=_q f_n^2`` for n >= 1, and strongly q-log-convex
when ``f_{m-1} f_{n+1} >=_q f_m f_n`` for all n >= m >= 1.

``moment_convexity_criterion`` implements the sufficient condition for
strong q-log-convexity of a J-fraction's moment sequence: with all
weights coefficientwise nonnegative,

    s_i s_{i+1} >=_q t_{i+1}   for every i >= 1

suffices.  The hypothesis starts at i = 1; the i = 0 gap is computed
and reported informationally, and the nonnegativity hypothesis itself
is reported separately instead of being silently assumed.

``weight_gap`` expands the same gap symbolically for the closed-form
family weights attached to EGF parameters (a, b, d), together with the
simpler quadratic that is claimed to bound it from below.

``transform_log_convexity_experiment`` gathers evidence for two open
conjectures: applying either Eulerian triangle to a log-convex input
sequence, does log-convexity survive?  It proves nothing; it computes
``z_n = sum_k triangle(n,k) x_k`` exactly and reports any witnesses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .algebra import QPoly, Rat, as_fraction
from .families import eulerian_numbers_type_a, eulerian_numbers_type_b
from .jacobi import JFraction

__all__ = [
    "Witness",
    "ConvexityReport",
    "CriterionReport",
    "GapResult",
    "Triangle",
    "TransformReport",
    "check_q_log_convex",
    "check_strong_q_log_convex",
    "moment_convexity_criterion",
    "weight_gap",
    "transform_log_convexity_experiment",
    "BUILTIN_SEQUENCES",
    "builtin_sequence",
]

#: (m, n, k): comparing indices m <= n, coefficient k of the difference
#: f_{m-1} f_{n+1} - f_m f_n is the first negative one.
Witness = tuple[int, int, int]


@dataclass(frozen=True)
class ConvexityReport:
    """Outcome of a (strong) q-log-convexity check with evidence."""

    verdict: bool
    witnesses: tuple[Witness, ...]
    checked_range: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "witnesses": [list(w) for w in self.witnesses],
            "checked_range": list(self.checked_range),
        }


@dataclass(frozen=True)
class CriterionReport(ConvexityReport):
    """Adds the separately reported hypothesis and boundary information."""

    hypothesis_nonneg: bool = True
    hypothesis_witnesses: tuple[tuple[str, int, int], ...] = ()
    gap_at_zero_nonneg: bool = True

    def to_json(self) -> dict:
        data = super().to_json()
        data["hypothesis_nonneg"] = self.hypothesis_nonneg
        data["hypothesis_witnesses"] = [list(w) for w in self.hypothesis_witnesses]
        data["gap_at_zero_nonneg"] = self.gap_at_zero_nonneg
        return data


def _first_negative(poly: QPoly) -> int:
    for k, c in enumerate(poly.coeffs):
        if c < 0:
            return k
    raise ValueError("polynomial has no negative coefficient")


def _as_poly_sequence(seq: Sequence) -> list[QPoly]:
    out = []
    for f in seq:
        out.append(f if isinstance(f, QPoly) else QPoly(f))
    return out


def check_q_log_convex(seq: Sequence[QPoly]) -> ConvexityReport:
    """Check f_{n-1} f_{n+1} >=_q f_n^2 for every interior index."""
    polys = _as_poly_sequence(seq)
    if len(polys) < 3:
        raise ValueError("need at least three polynomials")
    witnesses: list[Witness] = []
    last = len(polys) - 2
    for n in range(1, last + 1):
        diff = polys[n - 1] * polys[n + 1] - polys[n] * polys[n]
        if not diff.is_nonneg():
            witnesses.append((n, n, _first_negative(diff)))
    return ConvexityReport(
        verdict=not witnesses,
        witnesses=tuple(witnesses),
        checked_range=(1, last),
    )


def check_strong_q_log_convex(seq: Sequence[QPoly]) -> ConvexityReport:
    """Check f_{m-1} f_{n+1} >=_q f_m f_n for all n >= m >= 1."""
    polys = _as_poly_sequence(seq)
    if len(polys) < 3:
        raise ValueError("need at least three polynomials")
    witnesses: list[Witness] = []
    last = len(polys) - 2
    for m in range(1, last + 1):
        for n in range(m, last + 1):
            diff = polys[m - 1] * polys[n + 1] - polys[m] * polys[n]
            if not diff.is_nonneg():
                witnesses.append((m, n, _first_negative(diff)))
    return ConvexityReport(
        verdict=not witnesses,
        witnesses=tuple(witnesses),
        checked_range=(last, last),
    )


def moment_convexity_criterion(jf: JFraction, i_max: int) -> CriterionReport:
    """The sufficient criterion s_i s_{i+1} >=_q t_{i+1}, i = 1 .. i_max.

    The verdict covers only the stated range; nonnegativity of all
    weights seen (the criterion's standing hypothesis) and the i = 0
    gap are reported alongside without influencing the verdict.
    """
    if i_max < 1:
        raise ValueError("i_max must be >= 1")
    if len(jf.s) < i_max + 2 or len(jf.t) < i_max + 1:
        raise ValueError(
            f"criterion to i_max={i_max} needs depth >= {i_max + 2}, have {jf.depth}"
        )
    witnesses: list[Witness] = []
    for i in range(1, i_max + 1):
        gap = jf.s[i] * jf.s[i + 1] - jf.t[i]
        if not gap.is_nonneg():
            witnesses.append((i, i + 1, _first_negative(gap)))
    hypothesis_witnesses: list[tuple[str, int, int]] = []
    for i in range(i_max + 2):
        if not jf.s[i].is_nonneg():
            hypothesis_witnesses.append(("s", i, _first_negative(jf.s[i])))
    for j in range(1, i_max + 2):
        if not jf.t[j - 1].is_nonneg():
            hypothesis_witnesses.append(("t", j, _first_negative(jf.t[j - 1])))
    gap0 = jf.s[0] * jf.s[1] - jf.t[0]
    return CriterionReport(
        verdict=not witnesses,
        witnesses=tuple(witnesses),
        checked_range=(1, i_max),
        hypothesis_nonneg=not hypothesis_witnesses,
        hypothesis_witnesses=tuple(hypothesis_witnesses),
        gap_at_zero_nonneg=gap0.is_nonneg(),
    )


@dataclass(frozen=True)
class GapResult:
    """The expanded gap s_i s_{i+1} - t_{i+1} and its simpler lower bound."""

    gap: QPoly
    reference_bound: QPoly
    bound_is_lower: bool

    def to_json(self) -> dict:
        return {
            "gap": self.gap.to_json(),
            "reference_bound": self.reference_bound.to_json(),
            "bound_is_lower": self.bound_is_lower,
        }


def weight_gap(i: int, a: Rat | str, b: Rat | str, d: Rat | str) -> GapResult:
    """Expand s_i s_{i+1} - t_{i+1} for the closed-form family weights.

    The reference bound drops the cross terms down to

        (di+ab)(di+d+ab) + (ab^2 d - a^2 b^2) q
                         + (di+bd-ab)(di+d+bd-ab) q^2,

    and ``bound_is_lower`` records whether gap - bound >=_q 0 (it is
    whenever b >= 0 and d >= a >= 0).
    """
    if i < 0:
        raise ValueError("i must be >= 0")
    fa, fb, fd = as_fraction(a), as_fraction(b), as_fraction(d)

    def s(k: int) -> QPoly:
        return QPoly(fd * k + fa * fb, fd * k + fb * fd - fa * fb)

    t_next = QPoly(0, fd * fd * (i + 1) * (i + fb))
    gap = s(i) * s(i + 1) - t_next
    bound = QPoly(
        (fd * i + fa * fb) * (fd * i + fd + fa * fb),
        fa * fb * fb * fd - fa * fa * fb * fb,
        (fd * i + fb * fd - fa * fb) * (fd * i + fd + fb * fd - fa * fb),
    )
    return GapResult(gap=gap, reference_bound=bound, bound_is_lower=(gap - bound).is_nonneg())


# -- transform experiments ---------------------------------------------------


class Triangle(enum.Enum):
    EULERIAN_A = "A"
    EULERIAN_B = "B"


_TRIANGLE_ROWS = {
    Triangle.EULERIAN_A: eulerian_numbers_type_a,
    Triangle.EULERIAN_B: eulerian_numbers_type_b,
}


@dataclass(frozen=True)
class TransformReport:
    """z = triangle * x and the log-convexity evidence for z."""

    triangle: Triangle
    z: tuple[Fraction, ...]
    verdict: bool
    witnesses: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "triangle": self.triangle.value,
            "z": [str(v) for v in self.z],
            "verdict": self.verdict,
            "witnesses": list(self.witnesses),
        }


def transform_log_convexity_experiment(
    triangle: Triangle, xs: Sequence[Rat | str], n_max: int
) -> TransformReport:
    """Apply a triangle to a log-convex input and test the output.

    Evidence gathering only.  The input must itself be nonnegative and
    log-convex on the used window (x_k^2 <= x_{k-1} x_{k+1}); otherwise
    the experiment is undefined and refused.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2 to test anything")
    values = [as_fraction(x) for x in xs]
    if len(values) < n_max + 1:
        raise ValueError(f"need x_0 .. x_{n_max}, got {len(values)} values")
    values = values[: n_max + 1]
    for k, v in enumerate(values):
        if v < 0:
            raise ValueError(f"input is not nonnegative at index {k}")
    for k in range(1, n_max):
        if values[k] * values[k] > values[k - 1] * values[k + 1]:
            raise ValueError(f"input is not log-convex at index {k}")
    rows = _TRIANGLE_ROWS[triangle]
    z: list[Fraction] = []
    for n in range(n_max + 1):
        row = rows(n)
        z.append(sum((row[k] * values[k] for k in range(n + 1)), Fraction(0)))
    witnesses = tuple(
        n for n in range(1, n_max) if z[n] * z[n] > z[n - 1] * z[n + 1]
    )
    return TransformReport(
        triangle=triangle,
        z=tuple(z),
        verdict=not witnesses,
        witnesses=witnesses,
    )


# -- builtin log-convex inputs -------------------------------------------------


def _ones(count: int) -> list[Fraction]:
    return [Fraction(1)] * count

def _powers_of_two(count: int) -> list[Fraction]:
    return [Fraction(2) ** n for n in range(count)]

def _factorials(count: int) -> list[Fraction]:
    out, acc = [], 1
    for n in range(count):
        acc = acc * n if n else 1
        out.append(Fraction(acc))
    return out

def _catalan(count: int) -> list[Fraction]:
    out = [Fraction(1)]
    for n in range(1, count):
        out.append(out[-1] * 2 * (2 * n - 1) / (n + 1))
    return out

def _motzkin(count: int) -> list[Fraction]:
    out = [1, 1]
    for n in range(1, count):
        out.append(out[n] + sum(out[k] * out[n - 1 - k] for k in range(n)))
    return [Fraction(v) for v in out[:count]]


BUILTIN_SEQUENCES: dict[str, Callable[[int], list[Fraction]]] = {
    "ones": _ones,
    "powers2": _powers_of_two,
    "factorial": _factorials,
    "catalan": _catalan,
    "motzkin": _motzkin,
}


def builtin_sequence(name: str, count: int) -> list[Fraction]:
    try:
        gen = BUILTIN_SEQUENCES[name]
    except KeyError:
        raise ValueError(
            f"unknown sequence {name!r}; builtins: {', '.join(sorted(BUILTIN_SEQUENCES))}"
        ) from None
    return gen(count)
