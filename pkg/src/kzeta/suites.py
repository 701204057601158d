"""Verification suites run by ``kzeta verify``."""

from __future__ import annotations

import math

from .audit import run_audit
from .euler_maclaurin import bernoulli_half, endpoint_derivative, midpoint_residual
from .fpi import ac_reference, finite_part, mellin_point
from .quadrature import beta_via_cosh, bridge_xi, ck_kernel_integral, mellin_closed_form, zeta_via_sinh
from .report import Entry, Provenance, VerificationReport
from .selector import dst2_gram, expected_selector, poisson_reconstruction, selector_average
from .series import CATALAN, clausen_average, clausen_sl, dirichlet_value, xi, xi_checkpoint

SUITES = ("selectors", "series", "mellin", "bridge", "fpi", "em", "audit")
EXACT_TOLERANCE = 1e-12
SELECTOR_MAX_J = 16
# independent literal: Apery's constant
APERY = 1.2020569031595942853997381615114499907649862923405


def _tight(tol: float) -> float:
    return min(tol, EXACT_TOLERANCE)


def selectors_suite(tol: float) -> list[Entry]:
    t = _tight(tol)
    out = []
    for J in range(1, SELECTOR_MAX_J + 1):
        for k in range(4 * J):
            out.append(
                Entry.compare(
                    f"selectors.ss_J{J:02d}_k{k:03d}",
                    expected_selector("SS", J, k),
                    selector_average("SS", J, k),
                    t,
                    Provenance.PAPER,
                )
            )
            if J % 2 == 0:
                out.append(
                    Entry.compare(
                        f"selectors.cc_J{J:02d}_k{k:03d}",
                        expected_selector("CC", J, k),
                        selector_average("CC", J, k),
                        t,
                        Provenance.PAPER,
                    )
                )
            if k % 2 == 1:
                out.append(
                    Entry.compare(
                        f"selectors.poisson_J{J:02d}_k{k:03d}",
                        selector_average("SS", J, k),
                        poisson_reconstruction(J, k),
                        t,
                        Provenance.DERIVED,
                    )
                )
    for J in (2, 4, 8, 16):
        gram = dst2_gram(J)
        for m in range(1, J + 1):
            brute = math.fsum(
                math.sin((2 * j + 1) * math.pi * m / (2 * J)) ** 2 for j in range(J)
            )
            out.append(
                Entry.compare(
                    f"selectors.dst2_J{J:02d}_diag_n{m:02d}",
                    brute,
                    gram[m - 1, m - 1],
                    t,
                    Provenance.DERIVED,
                    "n=J column: J, not J/2" if m == J else "",
                )
            )
        off = max(
            (abs(gram[a, b]) for a in range(J) for b in range(J) if a != b),
            default=0.0,
        )
        out.append(
            Entry.compare(
                f"selectors.dst2_J{J:02d}_offdiag_max", 0.0, off, 1e-10 * J, Provenance.DERIVED
            )
        )
    return out


def series_suite(tol: float) -> list[Entry]:
    t = _tight(tol)
    out = []
    for s, J in ((3, 1), (3, 2), (3, 4), (3, 8), (2, 1)):
        out.append(
            Entry.compare(
                f"series.xi_s{s}_J{J}_checkpoint", xi_checkpoint(s, J), xi(s, J).value, t, Provenance.PAPER
            )
        )
    for s in (2, 3, 4, 5):
        out.append(
            Entry.compare(
                f"series.xi_s{s}_J1_equals_beta", dirichlet_value("beta", s), xi(s, 1).value, t, Provenance.TRIVIAL
            )
        )
    out.append(Entry.compare("series.zeta2", math.pi ** 2 / 6, dirichlet_value("zeta", 2), t, Provenance.TRIVIAL))
    out.append(Entry.compare("series.zeta3", APERY, dirichlet_value("zeta", 3), t, Provenance.DERIVED))
    out.append(Entry.compare("series.beta2_catalan", CATALAN, dirichlet_value("beta", 2), t, Provenance.PAPER))
    out.append(Entry.compare("series.beta3", math.pi ** 3 / 32, dirichlet_value("beta", 3), t, Provenance.PAPER))
    out.append(
        Entry.compare("series.clausen_s3_half_pi", math.pi ** 3 / 32, clausen_sl(3, math.pi / 2).value, 1e-10,
                      Provenance.PAPER)
    )
    out.append(
        Entry.compare("series.clausen_s2_half_pi", CATALAN, clausen_sl(2, math.pi / 2).value, 1e-10,
                      Provenance.DERIVED)
    )
    for s in (2, 3):
        for J in (1, 2, 4, 8):
            out.append(
                Entry.compare(
                    f"series.clausen_average_s{s}_J{J}",
                    xi(s, J).value,
                    clausen_average(s, J).value,
                    max(tol, 1e-9),
                    Provenance.DERIVED,
                )
            )
    return out


def mellin_suite(tol: float) -> list[Entry]:
    zeta = lambda s: dirichlet_value("zeta", s)  # noqa: E731
    beta = lambda s: dirichlet_value("beta", s)  # noqa: E731
    out = [
        Entry.compare("mellin.zeta3_sinh", zeta(3), zeta_via_sinh(3), tol, Provenance.PAPER),
        Entry.compare("mellin.zeta5_sinh", zeta(5), zeta_via_sinh(5), tol, Provenance.PAPER),
        Entry.compare("mellin.zeta2_sinh", math.pi ** 2 / 6, zeta_via_sinh(2), tol, Provenance.DERIVED),
        Entry.compare("mellin.beta2_cosh", beta(2), beta_via_cosh(2), tol, Provenance.PAPER),
        Entry.compare("mellin.beta4_cosh", beta(4), beta_via_cosh(4), tol, Provenance.PAPER),
        Entry.compare("mellin.beta3_cosh", math.pi ** 3 / 32, beta_via_cosh(3), tol, Provenance.DERIVED),
    ]
    for n in (1, 2):
        scaled = mellin_closed_form("zeta", 2 * n + 1) / math.pi ** (2 * n + 1)
        out.append(
            Entry.compare(f"mellin.csch_pi_scaling_n{n}", scaled, ck_kernel_integral(n), tol, Provenance.DERIVED)
        )
    return out


def bridge_suite(tol: float) -> list[Entry]:
    out = []
    for s in (2, 3):
        for J in (1, 2, 4, 8):
            out.append(
                Entry.compare(
                    f"bridge.s{s}_J{J}_vs_series", xi(s, J).value, bridge_xi(s, J).value, tol, Provenance.PAPER
                )
            )
        out.append(
            Entry.compare(f"bridge.s{s}_J1_vs_cosh", beta_via_cosh(s), bridge_xi(s, 1).value, tol, Provenance.TRIVIAL)
        )
    for s, J in ((3, 1), (3, 2), (3, 4), (3, 8), (2, 1)):
        out.append(
            Entry.compare(
                f"bridge.s{s}_J{J}_checkpoint", xi_checkpoint(s, J), bridge_xi(s, J).value, tol, Provenance.PAPER
            )
        )
    return out


def fpi_suite(tol: float) -> list[Entry]:
    out = []
    for kernel, p in (("csch", -3), ("csch", -5), ("sech", -2), ("sech", -4)):
        results = {c: finite_part(kernel, p, c) for c in (0.5, 1.0, 2.0)}
        ref = results[1.0].value
        for c in (0.5, 2.0):
            out.append(
                Entry.compare(
                    f"fpi.{kernel}_p{-p}_split_c{c:g}", ref, results[c].value, tol, Provenance.TRIVIAL
                )
            )
        out.append(
            Entry.compare(
                f"fpi.{kernel}_p{-p}_vs_continuation",
                ac_reference(kernel, mellin_point(p)),
                ref,
                max(tol, 1e-9),
                Provenance.DERIVED,
            )
        )
        for c, r in results.items():
            out.append(
                Entry.compare(
                    f"fpi.{kernel}_p{-p}_reconstruction_c{c:g}",
                    r.value,
                    r.regular_part + r.compensation + r.tail,
                    1e-13,
                    Provenance.TRIVIAL,
                )
            )
    out.append(
        Entry.compare(
            "fpi.csch_p3_identity",
            3 * dirichlet_value("zeta", 3) / (4 * math.pi ** 2),
            finite_part("csch", -3).value,
            max(tol, 1e-9),
            Provenance.DERIVED,
        )
    )
    return out


def em_suite(tol: float) -> list[Entry]:
    out = [
        Entry.compare("em.bernoulli_half_m1", -1 / 12, float(bernoulli_half(1)), 0.0, Provenance.PAPER),
        Entry.compare("em.bernoulli_half_m2", 7 / 240, float(bernoulli_half(2)), 0.0, Provenance.PAPER),
    ]
    worst = 0.0
    for k in range(1, 100, 2):
        for end in ("zero", "pi"):
            worst = max(worst, abs(endpoint_derivative(k, end)))
    out.append(Entry.compare("em.endpoint_derivative_max_k99", 0.0, worst, 0.0, Provenance.PAPER))
    for J in (2, 4, 8, 16):
        for k in range(1, 2 * J, 2):
            out.append(
                Entry.compare(
                    f"em.residual_J{J:02d}_k{k:02d}", 0.0, midpoint_residual(k, J), _tight(tol), Provenance.DERIVED
                )
            )
    return out


_BUILDERS = {
    "selectors": selectors_suite,
    "series": series_suite,
    "mellin": mellin_suite,
    "bridge": bridge_suite,
    "fpi": fpi_suite,
    "em": em_suite,
    "audit": lambda tol: run_audit().entries,
}


def run_suite(name: str, tol: float = 1e-10) -> VerificationReport:
    """Run one named suite (or ``all``) and return a report sorted by entry name."""
    if name == "all":
        entries = []
        for suite in SUITES:
            entries.extend(_BUILDERS[suite](tol))
    elif name in _BUILDERS:
        entries = _BUILDERS[name](tol)
    else:
        raise KeyError(f"unknown suite {name!r}")
    return VerificationReport(name, tol, entries).sorted()
