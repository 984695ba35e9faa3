"""Exact eigenvalue/multiplicity data for rotations and braid elements.

Rotation eigenvalues on Hom(b, a^(x)n) are n-th roots of theta_b^-1; the
multiplicity of each candidate is the inverse-DFT value P^b_{n,a}(lambda^-1)
with P built from the indicator sequence. Braid spectra for the
one-strand-wrapping elements reduce to rotations on the center: the braid
value theta_a^-1 omega occurs with multiplicity K^{a-bar^(l+m) (x) b~}(omega).

Every multiplicity must recognize as a non-negative integer; anything else
raises IntegralityError, which doubles as an end-to-end data check.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from . import cyclo
from .center import CenterData, center_for
from .cyclo import Cyclotomic, RootOfUnity
from .fusion_ring import FusionRing, ObjectMultiset, power_decompose, verlinde
from .indicators import nu_general, nu2_direct
from .modular_data import ModularData, reverse

__all__ = [
    "IntegralityError",
    "MultiplicityPolynomial",
    "SpectrumRow",
    "SpectrumReport",
    "rotation_spectrum",
    "rotation_report",
    "semisimple_K",
    "braid_jm_spectrum",
    "sigma_spectrum_n2",
    "k2_pairs",
    "render_report",
]


class IntegralityError(ArithmeticError):
    """A multiplicity failed to be a non-negative rational integer."""


def _require_count(value: Cyclotomic, what) -> int:
    n = cyclo.as_integer(value)
    if n is None or n < 0:
        label = what() if callable(what) else what
        raise IntegralityError(f"{label} = {value} is not a non-negative integer")
    return n


@dataclasses.dataclass(frozen=True)
class MultiplicityPolynomial:
    """P^b_{n,a}(x) = sum_k (nu^b_{n,k}(a)/n) x^k; values at admissible
    lambda^-1 are the eigenvalue multiplicities."""

    n: int
    coeffs: tuple[Cyclotomic, ...]

    def evaluate(self, x: Cyclotomic) -> Cyclotomic:
        acc = cyclo.ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def multiplicity_polynomial(
    cd: CenterData, b: int, a: int | ObjectMultiset, n: int, root_shift: int = 0
) -> MultiplicityPolynomial:
    inv_n = Fraction(1, n)
    coeffs = tuple(
        nu_general(cd, b, n, k, a, root_shift=root_shift) * inv_n for k in range(n)
    )
    return MultiplicityPolynomial(n=n, coeffs=coeffs)


@dataclasses.dataclass(frozen=True)
class SpectrumRow:
    """Candidate eigenvalues (zero multiplicities retained) for one object."""

    label: str
    eigenvalues: tuple[RootOfUnity, ...]
    multiplicities: tuple[int, ...]

    def as_map(self) -> dict[RootOfUnity, int]:
        return dict(zip(self.eigenvalues, self.multiplicities))

    def total(self) -> int:
        return sum(self.multiplicities)


@dataclasses.dataclass(frozen=True)
class SpectrumReport:
    kind: str
    source: str
    params: tuple[tuple[str, str], ...]
    rows: tuple[SpectrumRow, ...]

    def spectrum(self) -> set[RootOfUnity]:
        """The union of eigenvalues with nonzero multiplicity over all rows."""
        out: set[RootOfUnity] = set()
        for row in self.rows:
            for ev, mult in zip(row.eigenvalues, row.multiplicities):
                if mult:
                    out.add(ev)
        return out


def _sorted_candidates(cands: set[RootOfUnity]) -> list[RootOfUnity]:
    return sorted(cands, key=lambda r: r.turn())


def _rotation_candidates(theta_b: RootOfUnity, n: int) -> list[RootOfUnity]:
    # all lambda = zeta_{n q}^j with lambda^n = theta_b^-1 (q = order of theta_b)
    q = theta_b.order
    base = (-theta_b.exponent) % q
    return _sorted_candidates(
        {RootOfUnity.make(n * q, base + q * i) for i in range(n)}
    )


def rotation_spectrum(
    cd: CenterData,
    b: int,
    a: int | ObjectMultiset,
    n: int,
    root_shift: int = 0,
) -> SpectrumRow:
    """Eigenvalues-with-multiplicities of the rotation on Hom(b, a^(x)n).

    b is a center simple; candidates are exactly the n-th roots of
    theta_b^-1 and zero-multiplicity candidates are kept in the row.
    """
    if n < 1:
        raise ValueError("rotation power n must be >= 1")
    poly = multiplicity_polynomial(cd, b, a, n, root_shift=root_shift)
    cands = _rotation_candidates(cd.theta[b], n)
    mults = [
        _require_count(
            poly.evaluate(lam.inverse().value()),
            lambda lam=lam: f"multiplicity of {lam.value()} on Hom({cd.labels[b]}, a^{n})",
        )
        for lam in cands
    ]
    return SpectrumRow(
        label=cd.labels[b], eigenvalues=tuple(cands), multiplicities=tuple(mults)
    )


def rotation_report(
    cd: CenterData, a: int | ObjectMultiset, n: int, source: str = ""
) -> SpectrumReport:
    rows = tuple(rotation_spectrum(cd, b, a, n) for b in range(cd.rank))
    a_desc = cd.base.labels[a] if isinstance(a, int) else str(a)
    return SpectrumReport(
        kind="rotation",
        source=source,
        params=(("object", a_desc), ("n", str(n))),
        rows=rows,
    )


def semisimple_K(
    cd: CenterData,
    b: ObjectMultiset,
    a: int | ObjectMultiset,
    n: int,
    omega: RootOfUnity,
    root_shift: int = 0,
) -> int:
    """K^b_{n,a}(omega) for a semisimple center object b = {simple: mult}.

    Sum over the simples occurring in b of the P-multiplicity, gated by
    omega^n = theta_c^-1 (exact root-of-unity comparison).
    """
    total = cyclo.ZERO
    omega_inv = omega.inverse().value()
    gate = omega**n
    for c, mult in b.items():
        if not mult:
            continue
        if gate != cd.theta[c].inverse():
            continue
        poly = multiplicity_polynomial(cd, c, a, n, root_shift=root_shift)
        total = total + mult * poly.evaluate(omega_inv)
    return _require_count(total, lambda: f"K at omega = {omega.value()}")


def braid_jm_spectrum(
    md: ModularData,
    a: int,
    n: int,
    l: int,
    m: int,
    sign: str = "over",
    fr: FusionRing | None = None,
) -> SpectrumReport:
    """Spectrum of the one-strand-wrapping braid on n strands (l, m legs).

    Per base simple b, the eigenvalue theta_a^-1 omega occurs on
    Hom(b, a^(x)n) with multiplicity K^{a-bar^(l+m) (x) b~}_{n-(l+m), a}(omega);
    the inverse-crossing family (sign="under") runs the same computation on
    the reversed braiding.
    """
    if l < 0 or m < 0 or l + m >= n:
        raise ValueError("need l, m >= 0 and l + m < n")
    if sign not in ("over", "under"):
        raise ValueError(f"sign must be 'over' or 'under', got {sign!r}")
    if sign == "under":
        md = reverse(md)
        fr = None
    if fr is None:
        fr = verlinde(md)
    cd = center_for(md, fr)
    n1 = n - (l + m)
    theta_a_inv = md.theta[a].inverse()
    wrap = power_decompose(fr, md.dual[a], l + m)

    rows = []
    for b in range(md.rank):
        center_ms: ObjectMultiset = {
            cd.pair_index(c, b): mult for c, mult in wrap.items() if mult
        }
        cands: set[RootOfUnity] = set()
        for p in center_ms:
            cands.update(_rotation_candidates(cd.theta[p], n1))
        omegas = _sorted_candidates(cands)
        eigen = []
        mults = []
        for omega in omegas:
            k_val = semisimple_K(cd, center_ms, a, n1, omega)
            eigen.append(theta_a_inv * omega)
            mults.append(k_val)
        order = sorted(range(len(eigen)), key=lambda i: eigen[i].turn())
        rows.append(
            SpectrumRow(
                label=md.labels[b],
                eigenvalues=tuple(eigen[i] for i in order),
                multiplicities=tuple(mults[i] for i in order),
            )
        )
    return SpectrumReport(
        kind="braid-jm",
        source="",
        params=(
            ("object", md.labels[a]),
            ("n", str(n)),
            ("l", str(l)),
            ("m", str(m)),
            ("sign", sign),
        ),
        rows=tuple(rows),
    )


def k2_pairs(
    md: ModularData, fr: FusionRing, c: int, b: int, a: int
) -> tuple[tuple[RootOfUnity, int], tuple[RootOfUnity, int]]:
    """The two admissible omega with K^{c (x) b~}_{2,omega} for the braid square.

    K = [omega^2 = theta_b/theta_c] (omega^-1 nu^{c (x) b~}_{2,1}(a) +
    N^b_{c-bar,a,a}) / 2, computed without constructing the center.
    """
    ratio = md.theta[b] / md.theta[c]
    omega0 = RootOfUnity.make(2 * ratio.order, ratio.exponent)
    omega1 = RootOfUnity.make(2 * ratio.order, ratio.exponent + ratio.order)
    nu = nu2_direct(md, fr, c, b, a)
    cbar = md.dual[c]
    n_hom = sum(
        fr.table[b][cbar][e] * fr.table[e][a][a]
        for e in range(md.rank)
        if fr.table[e][a][a]
    )
    half = Fraction(1, 2)
    out = []
    for omega in (omega0, omega1):
        val = (omega.inverse().value() * nu + n_hom) * half
        out.append(
            (omega, _require_count(val, lambda omega=omega: f"K^(2) at omega = {omega.value()}"))
        )
    if n_hom > 0 and not any(k for _, k in out):
        raise IntegralityError(
            f"nonzero hom space but no admissible eigenvalue for "
            f"(c={md.labels[c]}, b={md.labels[b]}, a={md.labels[a]})"
        )
    return tuple(out)


def sigma_spectrum_n2(
    md: ModularData, fr: FusionRing, a: int, braid: str = "sigma"
) -> SpectrumReport:
    """Braid-generator spectra via the self-contained n = 2 formula.

    braid="sigma" is the generator (conjugating object is the unit);
    braid="sigma-triple" is sigma_i sigma_{i+1} sigma_i (conjugating object
    a-bar). Serves as the fast path and as an oracle against
    braid_jm_spectrum on (2,0,0) and (3,1,0).
    """
    if braid == "sigma":
        c = md.unit
    elif braid == "sigma-triple":
        c = md.dual[a]
    else:
        raise ValueError(f"unknown braid {braid!r}")
    theta_a_inv = md.theta[a].inverse()
    rows = []
    for b in range(md.rank):
        pairs = k2_pairs(md, fr, c, b, a)
        eigen = [theta_a_inv * omega for omega, _ in pairs]
        mults = [k for _, k in pairs]
        order = sorted(range(len(eigen)), key=lambda i: eigen[i].turn())
        rows.append(
            SpectrumRow(
                label=md.labels[b],
                eigenvalues=tuple(eigen[i] for i in order),
                multiplicities=tuple(mults[i] for i in order),
            )
        )
    return SpectrumReport(
        kind=f"braid-{braid}",
        source="",
        params=(("object", md.labels[a]),),
        rows=tuple(rows),
    )


# ---------------------------------------------------------------------------
# rendering


def format_eigenvalue(r: RootOfUnity) -> str:
    """Render exp(2 pi i e/q) as +-e^(i*pi*p/q) with p/q in [0, 1) lowest terms."""
    turn2 = Fraction(2 * r.exponent, r.order)  # angle in units of pi
    sign = ""
    if turn2 >= 1:
        sign = "-"
        turn2 -= 1
    if turn2 == 0:
        return f"{sign}1"
    return f"{sign}e^(i*pi*{turn2.numerator}/{turn2.denominator})"


def render_report(report: SpectrumReport, fmt: str = "table") -> str:
    """Deterministic text rendering; rows ordered by object index."""
    if fmt == "structured":
        from . import dataio

        return dataio.serialize_report(report)
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    header = ["object", "possible eigenvalues", "multiplicities"]
    lines = []
    for row in report.rows:
        evs = ", ".join(format_eigenvalue(ev) for ev in row.eigenvalues)
        mults = ", ".join(str(m) for m in row.multiplicities)
        lines.append([row.label, f"({evs})", f"({mults})"])
    widths = [
        max(len(header[i]), *(len(line[i]) for line in lines)) if lines else len(header[i])
        for i in range(3)
    ]
    out = []
    title = " ".join(f"{k}={v}" for k, v in report.params)
    out.append(f"{report.kind} {title}".strip())
    out.append(" | ".join(h.ljust(w) for h, w in zip(header, widths)))
    out.append("-+-".join("-" * w for w in widths))
    for line in lines:
        out.append(" | ".join(v.ljust(w) for v, w in zip(line, widths)))
    return "\n".join(out) + "\n"
