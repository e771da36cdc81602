"""Truncated formal Laurent series in one variable with a strict precision
contract, one-dimensional residues, and the tame symbol.

A series stores coefficients for exponents v_min..prec-1 and represents the
class f + O(t^prec), where the true series is known to have support in
[v_min, oo).  Exponents below v_min are exactly zero; exponents at or above
prec are unknown and are never claimed by any operation:

    add        -> prec = min(prec_a, prec_b)
    mul        -> prec = min(prec_a + val_b, prec_b + val_a)
    inverse    -> prec = prec_a - 2*val_a
    derivative -> exponents shift down by one

where val is the valuation, read as prec when every stored coefficient
vanishes (the series is then indistinguishable from 0 at this precision and
carries no valuation).
"""

from __future__ import annotations

from .fields import FFElement, FiniteField, QQ


class PrecisionError(ArithmeticError):
    """A computation would need coefficients outside the known window."""


class TruncatedLaurentSeries:
    __slots__ = ("field", "v_min", "coeffs", "prec", "var")

    def __init__(self, field, v_min: int, coeffs, prec: int, var: str = "t"):
        coeffs = list(coeffs)
        if prec <= v_min:
            raise ValueError(f"empty window: v_min={v_min}, prec={prec}")
        if len(coeffs) != prec - v_min:
            raise ValueError("coefficient list does not match the window")
        self.field = field
        self.v_min = v_min
        self.coeffs = coeffs
        self.prec = prec
        self.var = var

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, field, c, prec: int, var: str = "t"):
        if isinstance(c, int):
            c = field.from_int(c)
        if prec < 1:
            raise ValueError("constant needs prec >= 1")
        coeffs = [field.zero] * prec
        coeffs[0] = c
        return cls(field, 0, coeffs, prec, var)

    @classmethod
    def monomial(cls, field, exp: int, prec: int, c=1, var: str = "t"):
        if isinstance(c, int):
            c = field.from_int(c)
        if prec <= exp:
            raise ValueError("window must contain the monomial exponent")
        coeffs = [field.zero] * (prec - exp)
        coeffs[0] = c
        return cls(field, exp, coeffs, prec, var)

    @classmethod
    def zero_series(cls, field, prec: int, var: str = "t"):
        return cls(field, prec - 1, [field.zero], prec, var)

    @classmethod
    def from_coeff_map(cls, field, cmap: dict[int, object], prec: int, var: str = "t"):
        v_min = min(list(cmap) + [prec - 1])
        coeffs = [field.zero] * (prec - v_min)
        for e, c in cmap.items():
            if e < prec:
                if isinstance(c, int):
                    c = field.from_int(c)
                coeffs[e - v_min] = c
        return cls(field, v_min, coeffs, prec, var)

    # -- inspection ----------------------------------------------------------

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, or None when the
        series is indistinguishable from 0 at this precision."""
        for i, c in enumerate(self.coeffs):
            if c:
                return self.v_min + i
        return None

    def effective_valuation(self) -> int:
        v = self.valuation()
        return self.prec if v is None else v

    def is_indistinguishable_from_zero(self) -> bool:
        return self.valuation() is None

    def leading_coeff(self):
        v = self.valuation()
        if v is None:
            raise PrecisionError("series has no determinable valuation")
        return self.coeffs[v - self.v_min]

    def coefficient(self, exp: int):
        """Coefficient at exp; exact 0 below v_min, PrecisionError at >= prec."""
        if exp >= self.prec:
            raise PrecisionError(f"coefficient at {self.var}^{exp} is beyond precision {self.prec}")
        if exp < self.v_min:
            return self.field.zero
        return self.coeffs[exp - self.v_min]

    def equal_at_precision(self, other: "TruncatedLaurentSeries", n: int) -> bool:
        """Coefficient-wise equality for all exponents < n; requires both
        windows to reach n."""
        if self.prec < n or other.prec < n:
            raise PrecisionError("window does not reach the requested precision")
        lo = min(self.v_min, other.v_min)
        for e in range(lo, n):
            a = self.coeffs[e - self.v_min] if e >= self.v_min else self.field.zero
            b = other.coeffs[e - other.v_min] if e >= other.v_min else other.field.zero
            if a != b:
                return False
        return True

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedLaurentSeries):
            return other
        return TruncatedLaurentSeries.constant(self.field, other, self.prec, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        v = min(self.v_min, other.v_min)
        prec = min(self.prec, other.prec)
        if prec <= v:
            raise PrecisionError("windows do not overlap")
        coeffs = []
        for e in range(v, prec):
            a = self.coeffs[e - self.v_min] if self.v_min <= e < self.prec else self.field.zero
            b = other.coeffs[e - other.v_min] if other.v_min <= e < other.prec else self.field.zero
            coeffs.append(a + b)
        return TruncatedLaurentSeries(self.field, v, coeffs, prec, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedLaurentSeries(
            self.field, self.v_min, [-c for c in self.coeffs], self.prec, self.var
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        return TruncatedLaurentSeries(
            self.field, self.v_min, [c * a for a in self.coeffs], self.prec, self.var
        )

    def __mul__(self, other):
        if isinstance(other, (int, FFElement)) and not isinstance(other, TruncatedLaurentSeries):
            return self.scale(other)
        if self.field == QQ and not isinstance(other, TruncatedLaurentSeries):
            return self.scale(other)
        ea, eb = self.effective_valuation(), other.effective_valuation()
        prec = min(self.prec + eb, other.prec + ea)
        v = self.v_min + other.v_min
        if prec <= v:
            prec = v + 1
            coeffs = [self.field.zero]
            return TruncatedLaurentSeries(self.field, v, coeffs, prec, self.var)
        coeffs = [self.field.zero] * (prec - v)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            ei = self.v_min + i
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                e = ei + other.v_min + j
                if e < prec:
                    coeffs[e - v] = coeffs[e - v] + a * b
        return TruncatedLaurentSeries(self.field, v, coeffs, prec, self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedLaurentSeries":
        """Multiply by t^k (exact)."""
        return TruncatedLaurentSeries(
            self.field, self.v_min + k, list(self.coeffs), self.prec + k, self.var
        )

    def inverse(self) -> "TruncatedLaurentSeries":
        v = self.valuation()
        if v is None:
            raise PrecisionError(
                "cannot invert a series indistinguishable from 0 at this precision"
            )
        n = self.prec - v  # known length of the unit part
        u = [self.coeffs[v - self.v_min + i] if v - self.v_min + i < len(self.coeffs) else self.field.zero for i in range(n)]
        u0inv = _inv_elt(u[0])
        b = [self.field.zero] * n
        b[0] = u0inv
        for k in range(1, n):
            s = self.field.zero
            for i in range(1, k + 1):
                if u[i]:
                    s = s + u[i] * b[k - i]
            b[k] = -s * u0inv
        return TruncatedLaurentSeries(self.field, -v, b, self.prec - 2 * v, self.var)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedLaurentSeries.constant(self.field, 1, self.prec - 0, self.var)
        # keep the window generous; multiplication tightens it as required
        base = self
        first = True
        while n:
            if n & 1:
                result = base if first and n == 1 else result * base
                first = False
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def derivative(self) -> "TruncatedLaurentSeries":
        coeffs = []
        for i, c in enumerate(self.coeffs):
            e = self.v_min + i
            coeffs.append(c * e)
        return TruncatedLaurentSeries(self.field, self.v_min - 1, coeffs, self.prec - 1, self.var)

    def truncate(self, prec: int) -> "TruncatedLaurentSeries":
        """Forget coefficients at exponents >= prec."""
        if prec > self.prec:
            raise PrecisionError("cannot extend precision")
        if prec <= self.v_min:
            return TruncatedLaurentSeries.zero_series(self.field, prec, self.var)
        return TruncatedLaurentSeries(
            self.field, self.v_min, self.coeffs[: prec - self.v_min], prec, self.var
        )

    def map_coeffs(self, fn, field) -> "TruncatedLaurentSeries":
        return TruncatedLaurentSeries(
            field, self.v_min, [fn(c) for c in self.coeffs], self.prec, self.var
        )

    # -- text form -------------------------------------------------------------

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.v_min + i
            cs = repr(c)
            if e == 0:
                terms.append(cs)
            else:
                pw = self.var if e == 1 else f"{self.var}^{e}"
                terms.append(pw if cs == "1" else f"{cs}*{pw}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.var}^{self.prec})"


def _inv_elt(c):
    if isinstance(c, FFElement):
        return c.inverse()
    return 1 / c  # Fraction


class OneForm:
    """A 1-form f dt, carried by the series f."""

    __slots__ = ("series", "var")

    def __init__(self, series: TruncatedLaurentSeries, var: str | None = None):
        self.series = series
        self.var = var or series.var

    def __repr__(self):
        return f"({self.series}) d{self.var}"


def residue_1d(form) -> object:
    """Coefficient of t^-1 of f where form = f dt.

    The window must reach exponent -1 (prec > -1); exponents below v_min are
    exact zeros, so a window starting above -1 gives residue 0."""
    s = form.series if isinstance(form, OneForm) else form
    if s.prec <= -1:
        raise PrecisionError("window does not contain exponent -1")
    return s.coefficient(-1) if s.v_min <= -1 else s.field.zero


def tame_symbol_1d(f: TruncatedLaurentSeries, g: TruncatedLaurentSeries):
    """Signed tame symbol (-1)^(v(f)v(g)) * (f^v(g) g^-v(f))(0).

    Only the valuations and leading coefficients enter: the constant term of
    the unit part of f^v(g) g^-v(f) is lc(f)^v(g) * lc(g)^-v(f)."""
    vf, vg = f.valuation(), g.valuation()
    if vf is None or vg is None:
        raise PrecisionError("tame symbol needs determinable valuations")
    lf, lg = f.leading_coeff(), g.leading_coeff()
    sign = f.field.from_int(-1 if (vf * vg) % 2 else 1)
    return sign * lf**vg * _pow_elt(lg, -vf)


def _pow_elt(c, e: int):
    if isinstance(c, FFElement):
        return c**e
    return c**e  # Fraction supports negative powers
