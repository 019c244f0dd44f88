"""Truncated formal power series with exact rational-function coefficients.

A ``TruncSeries`` of order ``N`` stores the coefficients of
``x^0 .. x^{N-1}`` as ``QRatFun`` values (rational functions in ``q``) and
claims nothing about higher terms.  All operations are exact; results of
binary operations require matching orders so that truncation windows are
never silently mixed.

The module also exposes the family of exponential generating functions

    g(x) = ( (1-q) * e^{a(1-q)x} / (1 - q e^{d(1-q)x}) )^b

whose Taylor coefficients, scaled by n!, are the q-Eulerian polynomials
that the rest of the package cross-checks by independent routes.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (
    ONE,
    QPoly,
    QRatFun,
    Rat,
    RF_ONE,
    RF_ZERO,
    as_fraction,
)

__all__ = ["TruncSeries", "egf_series", "egf_polynomials"]


def _coerce_rf(value) -> QRatFun:
    if isinstance(value, QRatFun):
        return value
    if isinstance(value, QPoly):
        return QRatFun(value)
    return QRatFun(QPoly(as_fraction(value)))


class TruncSeries:
    """Power series in ``x`` truncated to a fixed number of known terms."""

    __slots__ = ("order", "coeffs")

    order: int
    coeffs: tuple[QRatFun, ...]

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("a truncated series needs at least the constant term")
        cs = [_coerce_rf(c) for c in coeffs]
        if len(cs) > order:
            raise ValueError(f"{len(cs)} coefficients exceed order {order}")
        cs.extend([RF_ZERO] * (order - len(cs)))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def constant(cls, order: int, value) -> "TruncSeries":
        return cls(order, [value])

    @classmethod
    def x(cls, order: int) -> "TruncSeries":
        """The identity series ``x`` (truncated, so order 1 gives 0)."""
        return cls(order, [RF_ZERO, RF_ONE] if order >= 2 else [RF_ZERO])

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def coefficient(self, n: int) -> QRatFun:
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient {n} outside truncation window {self.order}")
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("TruncSeries", self.order, self.coeffs))

    def _same_order(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            self._same_order(other)
            return TruncSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])
        return self + TruncSeries.constant(self.order, _coerce_rf(other))

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, TruncSeries) else -_coerce_rf(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            s = _coerce_rf(other)
            return TruncSeries(self.order, [c * s for c in self.coeffs])
        self._same_order(other)
        n = self.order
        out = [RF_ZERO] * n
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out)

    __rmul__ = __mul__

    # -- multiplicative and compositional structure ---------------------------

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a = self.coeffs
        if a[0].is_zero:
            raise ValueError("series with zero constant term has no multiplicative inverse")
        inv0 = a[0].reciprocal()
        out = [inv0]
        for m in range(1, self.order):
            acc = RF_ZERO
            for k in range(1, m + 1):
                if not a[k].is_zero and not out[m - k].is_zero:
                    acc = acc + a[k] * out[m - k]
            out.append(-(acc * inv0) if not acc.is_zero else RF_ZERO)
        return TruncSeries(self.order, out)

    def exp(self) -> "TruncSeries":
        """Exponential; requires constant term 0.

        Uses the derivative identity F' = f'F, i.e.
        ``m F_m = sum_{k=1..m} k f_k F_{m-k}``.
        """
        a = self.coeffs
        if not a[0].is_zero:
            raise ValueError("exp of a series requires constant term 0")
        out = [RF_ONE]
        for m in range(1, self.order):
            acc = RF_ZERO
            for k in range(1, m + 1):
                if not a[k].is_zero and not out[m - k].is_zero:
                    acc = acc + (k * a[k]) * out[m - k]
            out.append(acc / m)
        return TruncSeries(self.order, out)

    def log(self) -> "TruncSeries":
        """Logarithm; requires constant term 1.

        Solved from f = exp(L):
        ``L_m = f_m - (1/m) sum_{k=1..m-1} k L_k f_{m-k}``.
        """
        a = self.coeffs
        if a[0] != RF_ONE:
            raise ValueError("log of a series requires constant term 1")
        out = [RF_ZERO]
        for m in range(1, self.order):
            acc = RF_ZERO
            for k in range(1, m):
                if not out[k].is_zero and not a[m - k].is_zero:
                    acc = acc + (k * out[k]) * a[m - k]
            out.append(a[m] - acc / m)
        return TruncSeries(self.order, out)

    def pow(self, exponent: Rat | str) -> "TruncSeries":
        """Raise a series with constant term 1 to a rational power.

        Defined as exp(exponent * log(self)); for integer exponents this
        agrees with repeated multiplication.
        """
        e = as_fraction(exponent)
        if self.coeffs[0] != RF_ONE:
            raise ValueError("pow requires constant term 1")
        if e == 0:
            return TruncSeries.constant(self.order, RF_ONE)
        if e == 1:
            return self
        return (self.log() * e).exp()

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """Substitute ``inner`` (constant term 0) for ``x``, by Horner."""
        self._same_order(inner)
        if not inner.coeffs[0].is_zero:
            raise ValueError("composition requires the inner series to vanish at 0")
        result = TruncSeries.constant(self.order, self.coeffs[-1])
        for k in range(self.order - 2, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def derivative(self) -> "TruncSeries":
        """Formal d/dx; the result's order drops by one."""
        if self.order < 2:
            raise ValueError("cannot differentiate below order 2")
        return TruncSeries(self.order - 1, [k * self.coeffs[k] for k in range(1, self.order)])

    def truncate(self, order: int) -> "TruncSeries":
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return TruncSeries(order, self.coeffs[:order])

    def _padded(self, order: int) -> "TruncSeries":
        # internal: extends the window with zeros the caller knows are safe
        if order < self.order:
            raise ValueError("padding cannot shrink")
        return TruncSeries(order, self.coeffs)

    def reversion(self) -> "TruncSeries":
        """Compositional inverse h with self(h(x)) = x.

        Requires constant term 0 and an invertible linear term.  Newton
        iteration h <- h - (f(h) - x)/f'(h) doubles the number of correct
        coefficients each round, so a handful of rounds suffice.
        """
        n = self.order
        if n < 2:
            raise ValueError("reversion needs at least the linear term")
        if not self.coeffs[0].is_zero:
            raise ValueError("reversion requires constant term 0")
        if self.coeffs[1].is_zero:
            raise ValueError("reversion requires an invertible linear term")
        # f' is known one order short; the padded top coefficient only
        # touches the product with a valuation >= 2 factor, beyond the window
        fprime = self.derivative()._padded(n)
        ident = TruncSeries.x(n)
        h = ident * self.coeffs[1].reciprocal()
        for _ in range(n.bit_length() + 2):
            err = self.compose(h) - ident
            if err.is_zero:
                return h
            h = h - err * fprime.compose(h).inverse()
        raise ArithmeticError("series reversion did not converge")

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"TruncSeries(order={self.order}, [{inner}])"


def egf_series(a: Rat | str, b: Rat | str, d: Rat | str, order: int) -> TruncSeries:
    """The generating series ((1-q) e^{a(1-q)x} / (1 - q e^{d(1-q)x}))^b."""
    fa, fb, fd = as_fraction(a), as_fraction(b), as_fraction(d)
    one_minus_q = QRatFun(QPoly(1, -1))
    q = QRatFun(QPoly(0, 1))
    x = TruncSeries.x(order)
    exp_d = (x * (fd * one_minus_q)).exp()
    denom = -(exp_d * q) + 1
    exp_a = exp_d if fa == fd else (x * (fa * one_minus_q)).exp()
    base = (exp_a * one_minus_q) * denom.inverse()
    return base.pow(fb)


def egf_polynomials(a: Rat | str, b: Rat | str, d: Rat | str, count: int) -> list[QPoly]:
    """The polynomials T_n(q) = n! [x^n] g(x) for n = 0 .. count-1.

    Each scaled coefficient must reduce to denominator 1; a residue of
    (1-q) powers surviving the reduction would mean the expansion is
    wrong, so that case raises instead of returning a rational function.
    """
    ser = egf_series(a, b, d, count)
    out: list[QPoly] = []
    factorial = 1
    for n in range(count):
        if n:
            factorial *= n
        value = ser.coeffs[n] * factorial
        try:
            out.append(value.as_poly())
        except ValueError as exc:
            raise ValueError(
                f"coefficient n={n} of the EGF did not clear its denominator: {value!r}"
            ) from exc
    return out
