"""Exact arithmetic in finite fields F_{p^m}, sparse polynomials in one or
two variables, and rational functions.

Field elements are coefficient vectors over F_p modulo an explicit monic
irreducible modulus.  The modulus is chosen deterministically (smallest
coefficient tuple in lexicographic order) unless supplied, so that field
constructions and embeddings are reproducible across runs.

Polynomials are sparse maps exponent-tuple -> element; only nonzero
coefficients are stored.  Bivariate polynomials are never factored here;
factorization is univariate only (distinct-degree / equal-degree splitting
with a deterministic seed).
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def mobius(n: int) -> int:
    if n == 1:
        return 1
    m, res = n, 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            res = -res
        d += 1
    if m > 1:
        res = -res
    return res


def squarefree_part(n: int) -> int:
    """Largest squarefree divisor times the sign of n (0 maps to 0)."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    res, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                res *= d
        d += 1
    return sign * res * n


# ---------------------------------------------------------------------------
# F_p polynomial helpers on plain coefficient lists (lowest degree first).
# Used internally for modulus arithmetic before FiniteField objects exist.


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _polyrem(prod, mod, p)


def _polyrem(a: list[int], mod: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    while a and len(a) - 1 >= dm:
        k = len(a) - 1 - dm
        f = a[-1] * inv_lead % p
        for i, mi in enumerate(mod):
            a[i + k] = (a[i + k] - f * mi) % p
        _trim(a)
    return a


def _poly_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _polyrem(a, mod, p)
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        e >>= 1
    return result


def _is_irreducible_fp(coeffs: list[int], p: int) -> bool:
    """Irreducibility over F_p: x^(p^m) = x mod f and gcd tests at maximal
    proper divisors of m."""
    m = len(coeffs) - 1
    if m < 1:
        return False
    x = [0, 1]
    xq = _poly_powmod(x, p**m, coeffs, p)
    diff = _trim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)])
    if diff:
        return False
    for r in {m // q for q in range(2, m + 1) if m % q == 0 and is_prime(q)}:
        xr = _poly_powmod(x, p**r, coeffs, p)
        diff = _trim([(a - b) % p for a, b in itertools.zip_longest(xr, x, fillvalue=0)])
        g = _gcd_fp(coeffs, diff, p)
        if len(g) - 1 > 0:
            return False
    return True


def _gcd_fp(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a = _polyrem(a, b, p)
        a, b = b, a
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


@lru_cache(maxsize=None)
def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over F_p,
    ordering by the tuple (c_0, ..., c_{m-1})."""
    for tail in itertools.product(range(p), repeat=m):
        coeffs = list(tail) + [1]
        if _is_irreducible_fp(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible of degree {m} over F_{p}")  # unreachable


class FiniteField:
    """The field F_{p^m} with an explicit monic irreducible modulus."""

    def __init__(self, p: int, m: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if m < 1:
            raise FieldError("extension degree must be >= 1")
        self.p = p
        self.m = m
        self.order = p**m
        if m == 1:
            self.modulus = (0, 1) if modulus is None else modulus
        else:
            if modulus is None:
                self.modulus = _default_modulus(p, m)
            else:
                modulus = tuple(c % p for c in modulus)
                if len(modulus) != m + 1 or modulus[-1] != 1:
                    raise FieldError("modulus must be monic of degree m")
                if not _is_irreducible_fp(list(modulus), p):
                    raise FieldError("modulus is not irreducible over F_p")
                self.modulus = modulus
        self.zero = FFElement(self, (0,) * m)
        self.one = FFElement(self, (1,) + (0,) * (m - 1))

    def __repr__(self):
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}"

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.m == other.m
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def from_int(self, n: int) -> FFElement:
        return FFElement(self, (n % self.p,) + (0,) * (self.m - 1))

    def element(self, coeffs) -> FFElement:
        coeffs = tuple(c % self.p for c in coeffs)
        if len(coeffs) < self.m:
            coeffs = coeffs + (0,) * (self.m - len(coeffs))
        if len(coeffs) != self.m:
            raise FieldError("coefficient vector has wrong length")
        return FFElement(self, coeffs)

    @property
    def gen(self) -> FFElement:
        if self.m == 1:
            return self.one
        return FFElement(self, (0, 1) + (0,) * (self.m - 2))

    def elements(self):
        for tail in itertools.product(range(self.p), repeat=self.m):
            yield FFElement(self, tail)

    def random_element(self, rng: random.Random) -> FFElement:
        return FFElement(self, tuple(rng.randrange(self.p) for _ in range(self.m)))

    def random_nonzero(self, rng: random.Random) -> FFElement:
        while True:
            a = self.random_element(rng)
            if a:
                return a


class FFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _check(self, other: "FFElement"):
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        self._check(other)
        F = self.field
        if F.m == 1:
            return FFElement(F, ((self.coeffs[0] * other.coeffs[0]) % F.p,))
        prod = _polymulmod(list(self.coeffs), list(other.coeffs), list(F.modulus), F.p)
        prod += [0] * (F.m - len(prod))
        return FFElement(F, tuple(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FFElement":
        F = self.field
        if not self:
            raise ZeroDivisionError("inverse of zero field element")
        if F.m == 1:
            return FFElement(F, (pow(self.coeffs[0], -1, F.p),))
        # extended Euclid in F_p[x] against the modulus
        p = F.p
        r0, r1 = list(F.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            q, r = _polydivmod_fp(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(
                [
                    (a - b) % p
                    for a, b in itertools.zip_longest(s0, _polymul_fp(q, s1, p), fillvalue=0)
                ]
            )
        inv_lead = pow(r0[-1], -1, p)
        s0 = [c * inv_lead % p for c in s0]
        s0 = _polyrem(s0, list(F.modulus), p)
        s0 += [0] * (F.m - len(s0))
        return FFElement(F, tuple(s0))

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.from_int(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        return (
            isinstance(other, FFElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.field.m == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def frobenius(self, times: int = 1) -> "FFElement":
        return self ** (self.field.p**times)


def _polymul_fp(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _trim(prod)


def _polydivmod_fp(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = a[:]
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and _trim(a):
        k = len(a) - len(b)
        f = a[-1] * inv % p
        q[k] = f
        for i, bi in enumerate(b):
            a[i + k] = (a[i + k] - f * bi) % p
        _trim(a)
    return _trim(q), a


class Embedding:
    """Deterministic embedding F_{p^e} -> F_{p^{e*k}}: the base generator is
    sent to the lexicographically smallest root of the base modulus."""

    def __init__(self, base: FiniteField, big: FiniteField):
        if base.p != big.p or big.m % base.m != 0:
            raise FieldError(f"no embedding {base} -> {big}")
        self.base = base
        self.big = big
        if base.m == 1:
            self.gen_image = big.one
        else:
            self.gen_image = self._find_root()
        # powers of the generator image, used by lift() and project()
        self.powers = [big.one]
        for _ in range(base.m - 1):
            self.powers.append(self.powers[-1] * self.gen_image)

    def _find_root(self) -> FFElement:
        big, base = self.big, self.base
        mod = base.modulus
        best = None
        # roots of the base modulus in the big field, via gcd with x^(p^e)-x
        # would be fancier; fields here are desk-scale so scan candidates that
        # satisfy the polynomial directly.
        for cand in big.elements():
            acc = big.zero
            for c in reversed(mod):
                acc = acc * cand + big.from_int(c)
            if not acc:
                key = cand.coeffs
                if best is None or key < best.coeffs:
                    best = cand
        if best is None:
            raise FieldError("modulus has no root in the extension")
        return best

    def lift(self, a: FFElement) -> FFElement:
        if a.field != self.base:
            raise FieldError("element not in the embedding base")
        acc = self.big.zero
        for c, pw in zip(a.coeffs, self.powers):
            if c:
                acc = acc + pw * c
        return acc

    def project(self, a: FFElement) -> FFElement:
        """Inverse of lift on the image; raises if a is not in the image."""
        if a.field != self.big:
            raise FieldError("element not in the embedding target")
        # solve sum c_i * powers[i] = a over F_p
        p = self.base.p
        cols = [pw.coeffs for pw in self.powers]
        target = list(a.coeffs)
        n, k = self.big.m, self.base.m
        mat = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(n)]
        # Gaussian elimination mod p
        row = 0
        pivots = []
        for col in range(k):
            pr = next((r for r in range(row, n) if mat[r][col] % p), None)
            if pr is None:
                continue
            mat[row], mat[pr] = mat[pr], mat[row]
            inv = pow(mat[row][col], -1, p)
            mat[row] = [x * inv % p for x in mat[row]]
            for r in range(n):
                if r != row and mat[r][col] % p:
                    f = mat[r][col]
                    mat[r] = [(x - f * y) % p for x, y in zip(mat[r], mat[row])]
            pivots.append(col)
            row += 1
        sol = [0] * k
        for i, col in enumerate(pivots):
            sol[col] = mat[i][k] % p
        for r in range(row, n):
            if mat[r][k] % p:
                raise FieldError("element does not lie in the embedded subfield")
        # verify (cheap, guards pivot bookkeeping)
        if self.lift(self.base.element(sol)) != a:
            raise FieldError("element does not lie in the embedded subfield")
        return self.base.element(sol)


@lru_cache(maxsize=None)
def embedding(base: FiniteField, big: FiniteField) -> Embedding:
    return Embedding(base, big)


def trace_to_base(a: FFElement, base: FiniteField) -> FFElement:
    """Tr_{F_{q^k}/F_q}(a) = sum of a^(q^i), returned as a base-field element."""
    big = a.field
    emb = embedding(base, big)
    q = base.order
    k = big.m // base.m
    acc = big.zero
    power = a
    for _ in range(k):
        acc = acc + power
        power = power**q
    return emb.project(acc)


def norm_to_base(a: FFElement, base: FiniteField) -> FFElement:
    big = a.field
    emb = embedding(base, big)
    q = base.order
    k = big.m // base.m
    acc = big.one
    power = a
    for _ in range(k):
        acc = acc * power
        power = power**q
    return emb.project(acc)


def legendre_symbol(a: int, p: int) -> int:
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return 1 if e == 1 else -1


# ---------------------------------------------------------------------------
# Sparse polynomials in 1 or 2 variables.

VARS = ("x", "y")


class Polynomial:
    """Sparse polynomial over a FiniteField in `nvars` (1 or 2) variables.

    Exponent keys are tuples of length nvars; zero coefficients are never
    stored."""

    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field: FiniteField, nvars: int, coeffs: dict | None = None):
        if nvars not in (1, 2):
            raise ValueError("only 1 or 2 variables supported")
        self.field = field
        self.nvars = nvars
        clean = {}
        if coeffs:
            for exps, c in coeffs.items():
                if isinstance(exps, int):
                    exps = (exps,)
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent tuple {exps}")
                if isinstance(c, int):
                    c = field.from_int(c)
                if c:
                    clean[exps] = clean.get(exps, field.zero) + c
                    if not clean[exps]:
                        del clean[exps]
        self.coeffs = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, field, c, nvars=2):
        if isinstance(c, int):
            c = field.from_int(c)
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, field, idx, nvars=2):
        e = [0] * nvars
        e[idx] = 1
        return cls(field, nvars, {tuple(e): field.one})

    # -- basic structure ----------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.coeffs), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.coeffs), default=-1)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.coeffs.items())))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return Polynomial.constant(self.field, other, self.nvars)
        if isinstance(other, FFElement):
            return Polynomial.constant(self.field, other, self.nvars)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, self.field.zero) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, self.nvars, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, self.field.zero) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.field, 1, self.nvars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, *points: FFElement) -> FFElement:
        """Evaluate at points in self.field or any extension of it."""
        if len(points) != self.nvars:
            raise ValueError("wrong number of evaluation points")
        F = points[0].field
        emb = None if self.field == F else embedding(self.field, F)
        acc = F.zero
        for exps, c in self.coeffs.items():
            term = c if emb is None else emb.lift(c)
            for pt, e in zip(points, exps):
                if e:
                    term = term * pt**e
            acc = acc + term
        return acc

    def lift_to(self, big: FiniteField) -> "Polynomial":
        emb = embedding(self.field, big)
        return self.map_coeffs(emb.lift, big)

    def partial(self, var: int) -> "Polynomial":
        out = {}
        for exps, c in self.coeffs.items():
            e = exps[var]
            if e == 0:
                continue
            ne = list(exps)
            ne[var] = e - 1
            d = c * e
            if d:
                out[tuple(ne)] = out.get(tuple(ne), self.field.zero) + d
        return Polynomial(self.field, self.nvars, out)

    def map_coeffs(self, fn, field: FiniteField) -> "Polynomial":
        return Polynomial(field, self.nvars, {e: fn(c) for e, c in self.coeffs.items()})

    # -- division ------------------------------------------------------------

    def _lex_lead(self):
        e = max(self.coeffs)  # lex on exponent tuples
        return e, self.coeffs[e]

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial | None":
        """Quotient self/divisor if the division is exact, else None.

        Reduction by a single divisor in lex order; the remainder is the
        normal form modulo the principal ideal, so it vanishes iff divisor
        divides self."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = self
        quot: dict = {}
        de, dc = divisor._lex_lead()
        dcinv = dc.inverse()
        while not rem.is_zero():
            # find a reducible term (lex-largest first for termination)
            target = None
            for e in sorted(rem.coeffs, reverse=True):
                if all(a >= b for a, b in zip(e, de)):
                    target = e
                    break
            if target is None:
                return None
            f = rem.coeffs[target] * dcinv
            shift = tuple(a - b for a, b in zip(target, de))
            quot[shift] = quot.get(shift, self.field.zero) + f
            mono = Polynomial(self.field, self.nvars, {shift: f})
            rem = rem - mono * divisor
        return Polynomial(self.field, self.nvars, quot)

    # -- univariate helpers ---------------------------------------------------

    def to_dense(self) -> list[FFElement]:
        if self.nvars != 1:
            raise ValueError("not univariate")
        d = self.degree_in(0)
        out = [self.field.zero] * (d + 1)
        for (e,), c in self.coeffs.items():
            out[e] = c
        return out

    @classmethod
    def from_dense(cls, field, dense) -> "Polynomial":
        return cls(field, 1, {(i,): c for i, c in enumerate(dense)})

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        if self.nvars != 1:
            raise ValueError("monic() is univariate")
        lc = self.coeffs[(self.degree_in(0),)]
        return self * lc.inverse()

    def leading_coeff_uni(self) -> FFElement:
        return self.coeffs[(self.degree_in(0),)]

    # -- text form -------------------------------------------------------------

    def __repr__(self):
        return format_polynomial(self)


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Univariate division with remainder."""
    if a.nvars != 1 or b.nvars != 1:
        raise ValueError("poly_divmod is univariate")
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    F = a.field
    da, db = a.degree_in(0), b.degree_in(0)
    q: dict = {}
    rem = a
    binv = b.leading_coeff_uni().inverse()
    while not rem.is_zero() and rem.degree_in(0) >= db:
        k = rem.degree_in(0) - db
        f = rem.leading_coeff_uni() * binv
        q[(k,)] = f
        rem = rem - Polynomial(F, 1, {(k,): f}) * b
    return Polynomial(F, 1, q), rem


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    return a.monic() if not a.is_zero() else a


def _poly_powmod_ff(a: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    result = Polynomial.constant(a.field, 1, 1)
    base = poly_divmod(a, mod)[1]
    while e:
        if e & 1:
            result = poly_divmod(result * base, mod)[1]
        base = poly_divmod(base * base, mod)[1]
        e >>= 1
    return result


def roots_univariate(f: Polynomial, field: FiniteField | None = None) -> list[FFElement]:
    """All roots of a univariate polynomial in `field` (default: its own),
    by exhaustive evaluation; desk-scale fields only."""
    field = field or f.field
    if field.order > 10**6:
        raise FieldError("field too large for exhaustive root search")
    emb = None if field == f.field else embedding(f.field, field)
    dense = [(c if emb is None else emb.lift(c)) for c in f.to_dense()]
    out = []
    for a in field.elements():
        acc = field.zero
        for c in reversed(dense):
            acc = acc * a + c
        if not acc:
            out.append(a)
    return out


def factor_univariate(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Factor a nonzero univariate polynomial into monic irreducibles.

    Returns [(irreducible, multiplicity)] sorted by (degree, text form); the
    product of the factors times the leading coefficient equals f.
    Squarefree decomposition, then distinct-degree and equal-degree splitting
    with a deterministic seed."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.nvars != 1:
        raise ValueError("factor_univariate needs a univariate polynomial")
    F = f.field
    work = f.monic()
    factors: dict[Polynomial, int] = {}

    def add(g: Polynomial, mult: int):
        factors[g] = factors.get(g, 0) + mult

    def squarefree(g: Polynomial, mult: int):
        if g.degree_in(0) == 0:
            return
        dg = g.partial(0)
        if dg.is_zero():
            # g = h(x^p); take p-th root of coefficients
            p = F.p
            root = {}
            for (e,), c in g.coeffs.items():
                assert e % p == 0
                root[(e // p,)] = c ** (F.order // p)  # p-th root in F_q
            squarefree(Polynomial(F, 1, root), mult * p)
            return
        g1 = poly_gcd(g, dg)
        sqfree = poly_divmod(g, g1)[0]
        found = distinct_degree(sqfree)
        rest = g
        for h in found:
            add(h, mult)
            rest = poly_divmod(rest, h)[0]
        if rest.degree_in(0) > 0:
            squarefree(rest, mult)

    def distinct_degree(g: Polynomial) -> list[Polynomial]:
        out = []
        q = F.order
        x = Polynomial.variable(F, 0, 1)
        h = x
        d = 0
        while g.degree_in(0) > 0:
            d += 1
            if 2 * d > g.degree_in(0):
                out.append(g.monic())
                break
            h = _poly_powmod_ff(h, q, g)
            gd = poly_gcd(g, h - x)
            if gd.degree_in(0) > 0:
                out.extend(equal_degree(gd, d))
                g = poly_divmod(g, gd)[0]
                h = poly_divmod(h, g)[1]
        return out

    def equal_degree(g: Polynomial, d: int) -> list[Polynomial]:
        n = g.degree_in(0)
        if n == d:
            return [g.monic()]
        q = F.order
        seed_key = (F.p, F.m, tuple(sorted((e, c.coeffs) for (e,), c in g.coeffs.items())), d)
        rng = random.Random(repr(seed_key))
        for _ in range(200):
            r = Polynomial(F, 1, {(i,): F.random_element(rng) for i in range(n)})
            if r.degree_in(0) < 1:
                continue
            if F.p == 2:
                # trace map sum r^(2^i) over F_{2^...*d}
                t = r
                acc = r
                for _ in range(F.m * d - 1):
                    t = poly_divmod(t * t, g)[1]
                    acc = acc + t
                cand = poly_gcd(g, acc)
            else:
                e = (q**d - 1) // 2
                rp = _poly_powmod_ff(r, e, g)
                cand = poly_gcd(g, rp - Polynomial.constant(F, 1, 1))
            if 0 < cand.degree_in(0) < n:
                return equal_degree(cand, d) + equal_degree(poly_divmod(g, cand)[0], d)
        raise FieldError("equal-degree splitting failed to converge")

    squarefree(work, 1)
    out = sorted(factors.items(), key=lambda t: (t[0].degree_in(0), format_polynomial(t[0])))
    return out


# ---------------------------------------------------------------------------
# Rational functions.


class RationalFunction:
    """num/den with den != 0; normalized by gcd in the univariate case."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, normalize: bool = True):
        if den is None:
            den = Polynomial.constant(num.field, 1, num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if normalize and num.nvars == 1 and not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree_in(0) > 0:
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @property
    def nvars(self):
        return self.num.nvars

    def is_zero(self):
        return self.num.is_zero()

    def __mul__(self, other):
        if isinstance(other, (int, FFElement, Polynomial)):
            other = RationalFunction(self.num._coerce(other))
        return RationalFunction(self.num * other.num, self.den * other.den, normalize=False)

    def __truediv__(self, other):
        if isinstance(other, (int, FFElement, Polynomial)):
            other = RationalFunction(self.num._coerce(other))
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num, normalize=False)

    def __add__(self, other):
        if isinstance(other, (int, FFElement, Polynomial)):
            other = RationalFunction(self.num._coerce(other))
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den, normalize=False
        )

    def __sub__(self, other):
        if isinstance(other, (int, FFElement, Polynomial)):
            other = RationalFunction(self.num._coerce(other))
        return RationalFunction(
            self.num * other.den - other.num * self.den, self.den * other.den, normalize=False
        )

    def __neg__(self):
        return RationalFunction(-self.num, self.den, normalize=False)

    def __pow__(self, e: int):
        if e >= 0:
            return RationalFunction(self.num**e, self.den**e, normalize=False)
        return RationalFunction(self.den ** (-e), self.num ** (-e), normalize=False)

    def __repr__(self):
        return f"({self.num})/({self.den})"


# ---------------------------------------------------------------------------
# Canonical text form: terms "c*x^i*y^j" joined by "+" (or "-").


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos}: {text[:pos]}>>>{text[pos:]}")
        self.pos = pos


def format_polynomial(poly: Polynomial) -> str:
    if poly.is_zero():
        return "0"
    terms = []
    for exps in sorted(poly.coeffs, key=lambda e: (sum(e), e), reverse=True):
        c = poly.coeffs[exps]
        parts = []
        cstr = repr(c)
        if all(e == 0 for e in exps) or cstr != "1":
            parts.append(cstr)
        for v, e in zip(VARS, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        terms.append("*".join(parts))
    return " + ".join(terms)


def parse_polynomial(text: str, field: FiniteField, nvars: int = 2) -> Polynomial:
    """Parse the canonical text form; raises ParseError with a position."""
    coeffs: dict = {}
    i, n = 0, len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    i = skip_ws(i)
    if i >= n:
        raise ParseError(text, i, "empty polynomial")
    sign = 1
    first = True
    while i < n:
        i = skip_ws(i)
        if not first:
            if i >= n:
                break
            if text[i] == "+":
                sign = 1
            elif text[i] == "-":
                sign = -1
            else:
                raise ParseError(text, i, "expected '+' or '-'")
            i += 1
            i = skip_ws(i)
        else:
            if i < n and text[i] == "-":
                sign = -1
                i += 1
                i = skip_ws(i)
            first = False
        # term: [int] ['*' var ['^' int]]*  or just vars
        coeff = None
        exps = [0] * nvars
        saw_anything = False
        while i < n:
            i = skip_ws(i)
            if i < n and text[i].isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                val = int(text[i:j])
                if coeff is None and not saw_anything:
                    coeff = val
                else:
                    raise ParseError(text, i, "unexpected number")
                i = j
                saw_anything = True
            elif i < n and text[i] in VARS[:nvars]:
                v = VARS.index(text[i])
                i += 1
                e = 1
                if i < n and text[i] == "^":
                    i += 1
                    j = i
                    while j < n and text[j].isdigit():
                        j += 1
                    if j == i:
                        raise ParseError(text, i, "expected exponent")
                    e = int(text[i:j])
                    i = j
                exps[v] += e
                saw_anything = True
            elif i < n and text[i] == "*":
                i += 1
                continue
            else:
                break
        if not saw_anything:
            raise ParseError(text, i, "expected a term")
        c = field.from_int(sign * (1 if coeff is None else coeff))
        key = tuple(exps)
        if c:
            prev = coeffs.get(key, field.zero) + c
            if prev:
                coeffs[key] = prev
            else:
                coeffs.pop(key, None)
        i = skip_ws(i)
    return Polynomial(field, nvars, coeffs)


# ---------------------------------------------------------------------------
# Exact rationals with the same small protocol as FiniteField, so Laurent
# series can run over Q (used by the zeta-residue machinery).


class RationalField:
    p = 0
    m = 1

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")


QQ = RationalField()
