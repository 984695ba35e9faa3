"""Generalized Frobenius-Schur indicators, by two independent routes.

Route one evaluates the SL2(Z) representation of the center on a word g
with (1,0) g^-1 = (m,l) and multiplies the forgetful matrix A. Route two
derives nu_{n,k} from the single-rotation column nu_{n,1} by a Galois
automorphism, after pinning a root theta^(1/n); the two must agree, and
the n = 2 case additionally has a closed-form double sum over the base
data (nu2_direct) to check against.
"""

from __future__ import annotations

import dataclasses
import math

from . import cyclo
from .center import CenterData
from .cyclo import Cyclotomic
from .fusion_ring import FusionRing, ObjectMultiset, power_decompose
from .modular_data import ModularData

__all__ = [
    "Sl2Word",
    "IndicatorTable",
    "sl2_word",
    "matrix_tokens",
    "gfs_matrix",
    "nu_general",
    "nu2_direct",
    "hom_dim_under_forgetful",
]

S_MAT = ((0, -1), (1, 0))
T_MAT = ((1, 1), (0, 1))
T_INV_MAT = ((1, -1), (0, 1))
_TOKEN_MATS = {"s": S_MAT, "t": T_MAT, "T": T_INV_MAT}


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


@dataclasses.dataclass(frozen=True)
class Sl2Word:
    """A word in the generators s, t, t^-1 (token 'T'), targeting (m, l)."""

    tokens: tuple[str, ...]
    m: int
    l: int

    def matrix(self):
        g = ((1, 0), (0, 1))
        for tok in self.tokens:
            g = _mat_mul(g, _TOKEN_MATS[tok])
        return g

    def verify(self) -> None:
        g = self.matrix()
        det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
        if det != 1:
            raise AssertionError(f"word evaluates to det {det}")
        # g^-1 = ((d, -b), (-c, a)); need its first row equal to (m, l)
        if (g[1][1], -g[0][1]) != (self.m, self.l):
            raise AssertionError(
                f"word for ({self.m}, {self.l}) evaluates to g with "
                f"(1,0) g^-1 = {(g[1][1], -g[0][1])}"
            )


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def matrix_tokens(mat) -> tuple[str, ...]:
    """Decompose an SL2(Z) matrix into s / t / t^-1 tokens (Euclidean descent)."""
    (a, b), (c, d) = mat
    if a * d - b * c != 1:
        raise ValueError("matrix is not in SL2(Z)")
    recorded: list[tuple[str, int]] = []  # left-multipliers reducing the matrix
    while c:
        q = a // c
        if q:
            recorded.append(("T", q))  # T^-q on the left
            a, b = a - q * c, b - q * d
        recorded.append(("sinv", 1))
        a, b, c, d = c, d, -a, -b
    if a == 1:
        if b:
            recorded.append(("T", b))
    else:  # a == d == -1: the matrix is s^2 t^-b
        recorded.append(("sinv", 2))
        b = -b
        if b:
            recorded.append(("T", b))

    tokens: list[str] = []
    for kind, count in recorded:
        if kind == "sinv":
            tokens.extend("s" * count)  # inverse of s^-1
        elif count > 0:  # inverse of T^-q is t^q
            tokens.extend("t" * count)
        else:
            tokens.extend("T" * (-count))
    return tuple(tokens)


def sl2_word(m: int, l: int) -> Sl2Word:
    """A word whose matrix g satisfies (1,0) g^-1 = (m, l), gcd(m, l) = 1.

    Built by Euclidean reduction; t-powers come out as runs of t or t^-1
    tokens. The postcondition is re-verified by integer evaluation.
    """
    if math.gcd(m, l) != 1:
        raise ValueError(f"gcd({m}, {l}) != 1: no SL2(Z) word exists")
    g, x, y = _ext_gcd(m, l)
    if g < 0:
        g, x, y = -g, -x, -y
    v, u = x, -y  # m v - l u = 1
    word = Sl2Word(tokens=matrix_tokens(((v, -l), (-u, m))), m=m, l=l)
    word.verify()
    return word


@dataclasses.dataclass(frozen=True)
class IndicatorTable:
    """The matrix of indicators nu^b_{m,l}(a): rows center simples, columns base."""

    m: int
    l: int
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    values: tuple[tuple[Cyclotomic, ...], ...]

    def entry(self, row: int, col: int) -> Cyclotomic:
        return self.values[row][col]


def gfs_matrix(cd: CenterData, m: int, l: int, word: Sl2Word | None = None) -> IndicatorTable:
    """The indicator table via the center's SL2(Z) representation: pi(g) A.

    Requires gcd(m, l) = 1. Valid because the center is anomaly-free
    (xi = 1, asserted at construction), so the word choice cannot matter;
    a custom word for the same (m, l) must produce the same table.
    """
    if math.gcd(m, l) != 1:
        raise ValueError(f"gcd({m}, {l}) != 1")
    if word is not None:
        if (word.m, word.l) != (m, l):
            raise ValueError(f"word targets ({word.m}, {word.l}), not ({m}, {l})")
        word.verify()
        return _gfs_apply(cd, m, l, word)
    cached = cd._gfs_cache.get((m, l))
    if cached is not None:
        return cached
    table = _gfs_apply(cd, m, l, sl2_word(m, l))
    cd._gfs_cache[(m, l)] = table
    return table


def _gfs_apply(cd: CenterData, m: int, l: int, word: Sl2Word) -> IndicatorTable:
    x: list[list] = [list(row) for row in cd.a_matrix]
    for tok in reversed(word.tokens):
        if tok == "s":
            x = cd.apply_s(x)
        elif tok == "t":
            x = cd.apply_t(x)
        else:
            x = cd.apply_t(x, inverse=True)
    values = tuple(
        tuple(v if isinstance(v, Cyclotomic) else cyclo.from_rational(v) for v in row)
        for row in x
    )
    return IndicatorTable(
        m=m,
        l=l,
        row_labels=cd.labels,
        col_labels=cd.base.labels,
        values=values,
    )


def hom_dim_under_forgetful(cd: CenterData, b: int, a: int | ObjectMultiset, n: int) -> int:
    """dim Hom(b, a^(x)n) for a center simple b and base object a."""
    powers = power_decompose(cd.base_ring, a, n)
    arow = cd.a_matrix[b]
    return sum(arow[c] * mult for c, mult in powers.items())


def _theta_root(cd: CenterData, b: int, n: int, shift: int) -> Cyclotomic:
    # theta_b = zeta_M^t with M the center conductor; the pinned n-th root is
    # zeta_{Mn}^t (shift selects the alternative root for independence tests)
    m_cond = cd.conductor
    t = cd.theta[b]
    exp = t.exponent * (m_cond // t.order) + shift * m_cond
    return cyclo.root_of_unity(m_cond * n, exp)


def nu_general(
    cd: CenterData,
    b: int,
    n: int,
    k: int,
    a: int | ObjectMultiset,
    root_shift: int = 0,
) -> Cyclotomic:
    """nu^b_{n,k}(a) for any integer k, reduced through the indicator identities.

    k is first brought into 0..n-1 by periodicity (each full turn costs a
    factor theta_b^-1). k = 0 is the hom dimension; otherwise, with
    g = gcd(k, n), the value is theta_b^{-k/n} applied to the Galois image
    alpha_{k/g, n/g} of theta_b^{g/n} nu^b_{n/g,1}(a^g), the inner indicator
    expanding additively over the decomposition of a^g.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    q, k0 = divmod(k, n)
    prefactor = (cd.theta[b].inverse() ** q).value() if q else None

    if k0 == 0:
        base = cyclo.from_rational(hom_dim_under_forgetful(cd, b, a, n))
        return base if prefactor is None else prefactor * base

    g = math.gcd(k0, n)
    n1, k1 = n // g, k0 // g
    table = gfs_matrix(cd, n1, 1)
    a_pow = power_decompose(cd.base_ring, a, g)
    nu1 = cyclo.ZERO
    for c, mult in a_pow.items():
        if mult:
            nu1 = nu1 + mult * table.values[b][c]

    if k1 == 1:
        # theta^{-k0/n} * theta^{g/n} = 1 when k0 == g
        result = nu1
    else:
        root = _theta_root(cd, b, n, root_shift)
        image = cyclo.galois_apply((root**g) * nu1, k1, n1)
        result = (root ** (-k0)) * image
    return result if prefactor is None else prefactor * result


def nu2_direct(md: ModularData, fr: FusionRing, c: int, b: int, a: int) -> Cyclotomic:
    """nu^{c (x) b~}_{2,1}(a) as the closed double sum over the base data.

    sum_{d,e} (theta_d / theta_e)^2 S_{c,d} S_{b-bar,e} N^a_{d,e}; exact,
    and independent of the center machinery.
    """
    r = md.rank
    u_row = [md.theta[d].value() ** 2 * md.s[c][d] for d in range(r)]
    v_row = [
        (md.theta[e].inverse() ** 2).value() * md.s[md.dual[b]][e] for e in range(r)
    ]
    n_a = fr.table[a]
    z = [cyclo.ZERO] * r
    for d in range(r):
        ud = u_row[d]
        if ud.is_zero():
            continue
        row = n_a[d]
        for e in range(r):
            if row[e]:
                z[e] = z[e] + row[e] * ud
    total = cyclo.ZERO
    for e in range(r):
        if not z[e].is_zero():
            total = total + z[e] * v_row[e]
    return total
