"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are represented by rational coordinates on the power basis
1, zeta_n, ..., zeta_n^(phi(n)-1), reduced modulo the n-th cyclotomic
polynomial. Internally a value stores integer numerators plus one common
positive denominator; the public ``coeffs`` property exposes Fractions.

Everything is immutable and every operation is a pure function, so values
are safe to share between threads. The cyclotomic-polynomial and descent
solver memo tables are only ever extended with identical entries, which is
safe under the GIL.

The canonical text rendering (``str(x)``) writes values as sums of terms
``q*E(n)^k`` where ``E(n)`` denotes exp(2*pi*i/n); the parser for that
grammar lives in mtckit.dataio.
"""

from __future__ import annotations

import cmath
import dataclasses
import math
import os
from fractions import Fraction

from ._poly import poly_mulmod, poly_reduce

__all__ = [
    "Cyclotomic",
    "RootOfUnity",
    "Classification",
    "CycloDomainError",
    "DescentError",
    "cyclotomic_polynomial",
    "root_of_unity",
    "zeta",
    "from_rational",
    "inverse",
    "galois_apply",
    "descend",
    "recognize",
    "dft",
    "idft",
    "euler_phi",
    "set_order_limit",
    "get_order_limit",
    "ZERO",
    "ONE",
]

DEFAULT_ORDER_LIMIT = 10_000

_order_limit = int(os.environ.get("MTCKIT_MAX_ORDER", DEFAULT_ORDER_LIMIT))


class CycloDomainError(ValueError):
    """Invalid parameters for a cyclotomic operation (bad order, bad Galois index)."""


class DescentError(ArithmeticError):
    """A value does not lie in the requested subfield Q(zeta_m).

    Signals a pipeline bug upstream when raised from galois_apply; carries
    the first offending power-basis coordinate as a witness.
    """

    def __init__(self, order: int, target: int, witness_index: int):
        self.order = order
        self.target = target
        self.witness_index = witness_index
        super().__init__(
            f"value of order {order} does not descend to Q(zeta_{target}); "
            f"first mismatch at power-basis coordinate {witness_index}"
        )


def set_order_limit(limit: int) -> None:
    """Set the largest permitted cyclotomic order (cost grows like phi(n)^2)."""
    global _order_limit
    if limit < 1:
        raise CycloDomainError("order limit must be positive")
    _order_limit = limit


def get_order_limit() -> int:
    return _order_limit


def _check_order(n: int) -> None:
    if n < 1:
        raise CycloDomainError(f"cyclotomic order must be >= 1, got {n}")
    if n > _order_limit:
        raise CycloDomainError(
            f"cyclotomic order {n} exceeds the configured limit {_order_limit}"
        )


# ---------------------------------------------------------------------------
# integer helpers


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    out = 1
    for p, e in _factorize(n).items():
        out *= (p - 1) * p ** (e - 1)
    return out


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in _factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # exact division by a monic int polynomial, ascending coefficients
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    r = list(num)
    for i in range(len(q) - 1, -1, -1):
        c = r[i + dd]
        q[i] = c
        if c:
            for j in range(dd + 1):
                r[i + j] -= c * den[j]
    assert all(c == 0 for c in r), "non-exact polynomial division"
    return q


_cyclo_poly_cache: dict[int, tuple[int, ...]] = {1: (-1, 1)}


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """The n-th cyclotomic polynomial as a monic ascending int tuple.

    Computed by dividing x^n - 1 by Phi_d over the proper divisors d of n,
    memoized across calls.
    """
    _check_order(n)
    cached = _cyclo_poly_cache.get(n)
    if cached is not None:
        return cached
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        if d < n:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    result = tuple(poly)
    assert len(result) == euler_phi(n) + 1 and result[-1] == 1
    _cyclo_poly_cache[n] = result
    return result


# ---------------------------------------------------------------------------
# the field element


class Cyclotomic:
    """An exact element of Q(zeta_n).

    ``order`` is the ambient field order (not necessarily minimal for the
    value; see :meth:`reduced`). Two values compare equal iff they agree
    after embedding into the common field Q(zeta_lcm).
    """

    __slots__ = ("order", "_num", "_den", "_reduced", "_hash")

    def __init__(self, order: int, num: tuple[int, ...], den: int):
        # internal constructor; use the module factories
        self.order = order
        self._num = num
        self._den = den
        self._reduced: Cyclotomic | None = None
        self._hash: int | None = None

    # -- construction ------------------------------------------------------

    @staticmethod
    def _make(order: int, num: list[int], den: int) -> "Cyclotomic":
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if g > 1:
            den //= g
            num = [c // g for c in num]
        return Cyclotomic(order, tuple(num), den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Power-basis coordinates as Fractions (length phi(order))."""
        d = self._den
        return tuple(Fraction(c, d) for c in self._num)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._num)

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction if it is rational, else None."""
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    # -- representation changes --------------------------------------------

    def embedded(self, target: int) -> "Cyclotomic":
        """The same value represented in Q(zeta_target); order must divide target."""
        n = self.order
        if target == n:
            return self
        if target % n != 0:
            raise CycloDomainError(f"cannot embed order {n} into order {target}")
        _check_order(target)
        s = target // n
        p = [0] * target
        for j, c in enumerate(self._num):
            if c:
                p[j * s] = c
        poly_reduce(p, cyclotomic_polynomial(target))
        return Cyclotomic(target, tuple(p), self._den)

    def reduced(self) -> "Cyclotomic":
        """The value represented in its minimal cyclotomic field."""
        cached = self._reduced
        if cached is not None:
            return cached
        x = self
        while x.order > 1:
            for p in _factorize(x.order):
                try:
                    x = descend(x, x.order // p)
                    break
                except DescentError:
                    continue
            else:
                break
        self._reduced = x
        x._reduced = x
        return x

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Cyclotomic | None":
        if isinstance(value, Cyclotomic):
            return value
        if isinstance(value, int):
            return Cyclotomic(1, (value,), 1)
        if isinstance(value, Fraction):
            return Cyclotomic(1, (value.numerator,), value.denominator)
        return None

    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.order == other.order:
            return self, other
        n = math.lcm(self.order, other.order)
        return self.embedded(n), other.embedded(n)

    def __add__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        da, db = a._den, b._den
        num = [x * db + y * da for x, y in zip(a._num, b._num)]
        return Cyclotomic._make(a.order, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        if o.order == 1:
            num = o._num[0]
            if num == 0:
                return Cyclotomic(1, (0,), 1)
            return Cyclotomic._make(
                self.order, [num * c for c in self._num], self._den * o._den
            )
        if self.order == 1:
            return o * self
        a, b = self._common(o)
        num = poly_mulmod_lists(list(a._num), list(b._num), a.order)
        return Cyclotomic._make(a.order, num, a._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return self * inverse(o)

    def __rtruediv__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        return o * inverse(self)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return inverse(self) ** (-exponent)
        result = Cyclotomic(1, (1,), 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation (the Galois automorphism zeta -> zeta^-1)."""
        if self.order == 1:
            return self
        return _galois_same_order(self, self.order - 1)

    # -- comparison ----------------------------------------------------------

    def __eq__(self, other):
        o = Cyclotomic._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._common(o)
        return a._num == b._num and a._den == b._den

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        h = self._hash
        if h is None:
            r = self.reduced()
            h = hash((r.order, r._num, r._den))
            self._hash = h
        return h

    def __bool__(self):
        return not self.is_zero()

    # -- output --------------------------------------------------------------

    def to_complex(self) -> complex:
        n = self.order
        total = 0j
        for j, c in enumerate(self._num):
            if c:
                total += c * cmath.exp(2j * cmath.pi * j / n)
        return total / self._den

    def __str__(self):
        return format_expr(self)

    def __repr__(self):
        return f"Cyclotomic({format_expr(self)})"


def poly_mulmod_lists(a: list[int], b: list[int], order: int) -> list[int]:
    return poly_mulmod(a, b, cyclotomic_polynomial(order))


ZERO = Cyclotomic(1, (0,), 1)
ONE = Cyclotomic(1, (1,), 1)


def from_rational(q) -> Cyclotomic:
    """The rational q (int or Fraction) as a Cyclotomic of order 1."""
    x = Cyclotomic._coerce(q)
    if x is None:
        raise CycloDomainError(f"not a rational value: {q!r}")
    return x


def root_of_unity(q: int, k: int) -> Cyclotomic:
    """The exact value zeta_q^k, represented at its minimal order."""
    if q < 1:
        raise CycloDomainError(f"root-of-unity order must be >= 1, got {q}")
    k %= q
    g = math.gcd(k, q)
    q, k = q // g, k // g
    if q == 1:
        return ONE
    if q == 2:
        return Cyclotomic(1, (-1,), 1)
    _check_order(q)
    d = euler_phi(q)
    if k < d:
        num = [0] * d
        num[k] = 1
        return Cyclotomic(q, tuple(num), 1)
    p = [0] * (k + 1)
    p[k] = 1
    poly_reduce(p, cyclotomic_polynomial(q))
    return Cyclotomic(q, tuple(p), 1)


def zeta(n: int) -> Cyclotomic:
    return root_of_unity(n, 1)


# ---------------------------------------------------------------------------
# Galois automorphisms, descent, inversion


def _galois_same_order(x: Cyclotomic, k: int) -> Cyclotomic:
    # zeta_n -> zeta_n^k on a value already represented at order n; gcd(k, n) = 1
    n = x.order
    p = [0] * n
    for j, c in enumerate(x._num):
        if c:
            p[(j * k) % n] += c
    poly_reduce(p, cyclotomic_polynomial(n))
    return Cyclotomic(n, tuple(p), x._den)


def galois_apply(x: Cyclotomic, k: int, m: int) -> Cyclotomic:
    """Apply the Galois automorphism zeta_m -> zeta_m^k of Q(zeta_m) to x.

    x must lie in Q(zeta_m); that is verified by descending its
    representation to order m, so a value outside the field raises
    DescentError rather than being silently mangled.
    """
    if m < 1:
        raise CycloDomainError(f"automorphism modulus must be >= 1, got {m}")
    k %= m
    if math.gcd(k, m) != 1:
        raise CycloDomainError(f"gcd({k}, {m}) != 1: not a Galois automorphism")
    n = x.order
    if n == m:
        y = x
    elif m % n == 0:
        y = x.embedded(m)
    elif n % m == 0:
        y = descend(x, m)
    else:
        y = descend(x.embedded(math.lcm(n, m)), m)
    if y.order == 1:
        return y
    return _galois_same_order(y, k)


def _invert_fraction_matrix(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(mat)
    work = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if work[i][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        inv = 1 / work[col][col]
        work[col] = [v * inv for v in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [v - f * w for v, w in zip(work[i], work[col])]
    return [row[n:] for row in work]


_descent_cache: dict[tuple[int, int], tuple[list[int], list[list[int]], int, list[list[int]]]] = {}


def _descent_solver(n: int, m: int):
    """Pivot rows, integer solving matrix (with denominator), and embedding
    columns for Q(zeta_m) inside Q(zeta_n)."""
    key = (n, m)
    cached = _descent_cache.get(key)
    if cached is not None:
        return cached
    dn = euler_phi(n)
    dm = euler_phi(m)
    s = n // m
    phi_n = cyclotomic_polynomial(n)
    cols: list[list[int]] = []
    for i in range(dm):
        p = [0] * (i * s + 1)
        p[i * s] = 1
        poly_reduce(p, phi_n)
        cols.append(p)
    # select dm pivot rows by elimination, then invert the square subsystem
    work = [[Fraction(cols[j][i]) for j in range(dm)] for i in range(dn)]
    rowperm = list(range(dn))
    for col in range(dm):
        piv = next(i for i in range(col, dn) if work[i][col] != 0)
        work[col], work[piv] = work[piv], work[col]
        rowperm[col], rowperm[piv] = rowperm[piv], rowperm[col]
        for i in range(col + 1, dn):
            if work[i][col]:
                f = work[i][col] / work[col][col]
                for jj in range(col, dm):
                    work[i][jj] -= f * work[col][jj]
    rows = rowperm[:dm]
    sub = [[Fraction(cols[j][i]) for j in range(dm)] for i in rows]
    frac_solver = _invert_fraction_matrix(sub)
    # clear denominators so the per-call solve and verify are pure int work
    den = 1
    for row in frac_solver:
        for v in row:
            den = math.lcm(den, v.denominator)
    solver = [[int(v * den) for v in row] for row in frac_solver]
    result = (rows, solver, den, cols)
    _descent_cache[key] = result
    return result


def descend(x: Cyclotomic, m: int) -> Cyclotomic:
    """Re-represent x at order m, or raise DescentError if x is not in Q(zeta_m).

    m must divide the order of x.
    """
    n = x.order
    if m < 1 or n % m != 0:
        raise CycloDomainError(f"descent target {m} does not divide order {n}")
    if m == n:
        return x
    rows, solver, den, cols = _descent_solver(n, m)
    dm = len(rows)
    rhs = [x._num[i] for i in rows]
    ynum = [
        sum(srow[k] * rhs[k] for k in range(dm) if rhs[k]) for srow in solver
    ]
    # verify the full system in integers; failure carries the offending coordinate
    for i in range(len(x._num)):
        acc = 0
        for j in range(dm):
            cj = cols[j][i]
            if cj and ynum[j]:
                acc += cj * ynum[j]
        if acc != den * x._num[i]:
            raise DescentError(n, m, i)
    return Cyclotomic._make(m, ynum, x._den * den)


def inverse(x: Cyclotomic) -> Cyclotomic:
    """The multiplicative inverse, via the product of Galois conjugates.

    x * inverse(x) = 1 exactly; the field norm (x times all its nontrivial
    conjugates) is a nonzero rational, so the inverse is the conjugate
    product divided by the norm.
    """
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero cyclotomic")
    r = x.reduced()
    n = r.order
    if n == 1:
        return Cyclotomic._make(1, [r._den], r._num[0])
    prod = ONE
    for k in range(2, n):
        if math.gcd(k, n) == 1:
            prod = prod * _galois_same_order(r, k)
    norm = (r * prod).reduced()
    q = norm.as_rational()
    assert q is not None and q != 0, "field norm must be a nonzero rational"
    return prod * Fraction(q.denominator, q.numerator)


# ---------------------------------------------------------------------------
# roots of unity as (order, exponent) pairs


@dataclasses.dataclass(frozen=True, order=True)
class RootOfUnity:
    """exp(2*pi*i*exponent/order) in lowest terms; a cheap exact handle.

    Multiplication, powers, and equality are integer arithmetic on the
    exponent fraction, so spectral gates never touch field arithmetic.
    """

    order: int
    exponent: int

    @staticmethod
    def make(order: int, exponent: int) -> "RootOfUnity":
        if order < 1:
            raise CycloDomainError(f"root order must be >= 1, got {order}")
        exponent %= order
        g = math.gcd(exponent, order)
        return RootOfUnity(order // g, exponent // g)

    def value(self) -> Cyclotomic:
        return root_of_unity(self.order, self.exponent)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        n = math.lcm(self.order, other.order)
        return RootOfUnity.make(
            n, self.exponent * (n // self.order) + other.exponent * (n // other.order)
        )

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity.make(self.order, self.exponent * k)

    def inverse(self) -> "RootOfUnity":
        return RootOfUnity.make(self.order, -self.exponent)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return self * other.inverse()

    def is_one(self) -> bool:
        return self.order == 1

    def turn(self) -> Fraction:
        """The angle as a fraction of a full turn, in [0, 1)."""
        return Fraction(self.exponent, self.order)

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.exponent / self.order)


ROOT_ONE = RootOfUnity(1, 0)
ROOT_MINUS_ONE = RootOfUnity(2, 1)


# ---------------------------------------------------------------------------
# recognition and rendering


@dataclasses.dataclass(frozen=True)
class Classification:
    """What a value is: zero, a rational, or a rational multiple of a root."""

    kind: str  # "zero" | "integer" | "rational" | "scaled_root" | "generic"
    rational: Fraction | None
    scale: Fraction | None
    root: RootOfUnity | None
    approx: complex

    def is_integer(self) -> bool:
        return self.kind in ("zero", "integer")

    def integer_value(self) -> int:
        if self.kind == "zero":
            return 0
        if self.kind == "integer":
            return int(self.rational)
        raise ValueError(f"not an integer: kind={self.kind}")


_monomial_cache: dict[int, list[tuple[int, ...]]] = {}


def _monomials(n: int) -> list[tuple[int, ...]]:
    cached = _monomial_cache.get(n)
    if cached is None:
        phi_n = cyclotomic_polynomial(n)
        d = len(phi_n) - 1
        cached = []
        for j in range(n):
            p = [0] * (j + 1)
            p[j] = 1
            poly_reduce(p, phi_n)
            cached.append(tuple(p))
        _monomial_cache[n] = cached
    return cached


def recognize(x: Cyclotomic) -> Classification:
    """Classify x as zero, rational (integer), or q * (root of unity).

    The scale q is always positive; signs are absorbed into the root.
    """
    r = x.reduced()
    approx = r.to_complex()
    q = r.as_rational()
    if q is not None:
        if q == 0:
            return Classification("zero", Fraction(0), None, None, approx)
        kind = "integer" if q.denominator == 1 else "rational"
        return Classification(kind, q, None, None, approx)
    n = r.order
    num = r._num
    for j, mono in enumerate(_monomials(n)):
        if j == 0:
            continue
        i0 = next(i for i in range(len(mono)) if mono[i])
        if num[i0] == 0:
            continue
        ratio = Fraction(num[i0], mono[i0])
        if all(num[i] * mono[i0] == mono[i] * num[i0] for i in range(len(mono))):
            scale = ratio / r._den
            if scale < 0:
                root = RootOfUnity.make(2 * n, n + 2 * j)
                scale = -scale
            else:
                root = RootOfUnity.make(n, j)
            return Classification("scaled_root", None, scale, root, approx)
    return Classification("generic", None, None, None, approx)


def as_root_of_unity(x: Cyclotomic) -> RootOfUnity | None:
    """x as a RootOfUnity if it is exactly one, else None."""
    c = recognize(x)
    if c.kind == "scaled_root" and c.scale == 1:
        return c.root
    if c.kind == "integer" and c.rational == 1:
        return ROOT_ONE
    if c.kind == "integer" and c.rational == -1:
        return ROOT_MINUS_ONE
    return None


def as_integer(x: Cyclotomic) -> int | None:
    """x as a Python int if it is a rational integer, else None."""
    q = x.as_rational()  # power-basis coordinates are unique at any order
    if q is None or q.denominator != 1:
        return None
    return q.numerator


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_expr(x: Cyclotomic) -> str:
    """Canonical E-notation rendering, at the value's minimal order.

    Rational multiples of roots of unity print as a single q*E(n)^k term
    (signs absorbed into the root); everything else prints as the
    power-basis sum.
    """
    r = x.reduced()
    q = r.as_rational()
    if q is not None:
        return _format_rational(q)
    cls = recognize(r)
    if cls.kind == "scaled_root":
        root = cls.root
        mono = f"E({root.order})" if root.exponent == 1 else f"E({root.order})^{root.exponent}"
        if cls.scale == 1:
            return mono
        return f"{_format_rational(cls.scale)}*{mono}"
    n = r.order
    parts: list[str] = []
    for j, c in enumerate(r._num):
        if not c:
            continue
        coeff = Fraction(c, r._den)
        mono = f"E({n})" if j == 1 else f"E({n})^{j}" if j > 1 else ""
        if not mono:
            term = _format_rational(coeff)
        elif coeff == 1:
            term = mono
        elif coeff == -1:
            term = f"-{mono}"
        else:
            term = f"{_format_rational(coeff)}*{mono}"
        if parts and not term.startswith("-"):
            parts.append(f" + {term}")
        elif parts:
            parts.append(f" - {term[1:]}")
        else:
            parts.append(term)
    return "".join(parts)


# ---------------------------------------------------------------------------
# discrete Fourier transform over roots of unity


def dft(xs: list) -> list[Cyclotomic]:
    """F(x)_k = sum_m x_m zeta_N^(m k) for k, m = 1..N (exact)."""
    n = len(xs)
    vals = [from_rational(v) if not isinstance(v, Cyclotomic) else v for v in xs]
    powers = [root_of_unity(n, j) for j in range(n)]
    out = []
    for k in range(1, n + 1):
        acc = ZERO
        for m in range(1, n + 1):
            acc = acc + vals[m - 1] * powers[(m * k) % n]
        out.append(acc)
    return out


def idft(xs: list) -> list[Cyclotomic]:
    """Inverse transform: F^-1(X)_k = (1/N) sum_m X_m zeta_N^(-m k) (exact)."""
    n = len(xs)
    vals = [from_rational(v) if not isinstance(v, Cyclotomic) else v for v in xs]
    powers = [root_of_unity(n, j) for j in range(n)]
    scale = Fraction(1, n)
    out = []
    for k in range(1, n + 1):
        acc = ZERO
        for m in range(1, n + 1):
            acc = acc + vals[m - 1] * powers[(-m * k) % n]
        out.append(acc * scale)
    return out
