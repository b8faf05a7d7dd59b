"""Reproduction of the published energy tables against embedded reference values."""

from __future__ import annotations

import csv
import io
from importlib import resources

from .errors import EHPError
from .molecules import builtin_catalog, context_for
from .potential import PotentialParams
from .spectra import QuantumNumbers, Variant, ehp_energy
from .units import PhysicalContext

TABLE4_CTX = PhysicalContext.natural(hbar=1.0, mu=0.5)
TABLE1_CTX = PhysicalContext.natural(hbar=1.0, mu=1.0)
# C = 2, D = -1 is the only set that reproduces the reference 1s value -2.250500250.
TABLE4_C, TABLE4_D = 2.0, -1.0

TABLE3_UNAVAILABLE = (
    "Table 3 cannot be reproduced: the potential strengths A, B, C, D used for the "
    "molecules were never published. Pass --A --B --C --D to compute the same grid of "
    "states with strengths of your choice; the reference column is shown for comparison only."
)


def reference(name: str) -> list[dict[str, str]]:
    text = resources.files("ehpspec.data").joinpath(f"{name}.csv").read_text(encoding="utf-8")
    return list(csv.DictReader(io.StringIO(text)))


def _energy(params, qn, ctx, variant) -> float | None:
    try:
        lev = ehp_energy(params, qn, ctx, variant)
    except EHPError:
        return None
    if variant is Variant.REDERIVED and not lev.bound:
        return None
    return lev.energy


def _gap(value, expected):
    return None if value is None else abs(value - expected)


def table4_rows(variant: Variant = Variant.REDERIVED) -> list[dict]:
    variant = Variant(variant)
    rows = []
    for ref in reference("table4"):
        qn = QuantumNumbers.from_label(ref["state"])
        alpha = float(ref["alpha"])
        p = PotentialParams(C=TABLE4_C, D=TABLE4_D, alpha=alpha)
        red = _energy(p, qn, TABLE4_CTX, Variant.REDERIVED)
        prt = _energy(p, qn, TABLE4_CTX, Variant.AS_PRINTED)
        expected = float(ref["reference"])
        chosen = red if variant is Variant.REDERIVED else prt
        rows.append(
            dict(state=ref["state"], n=qn.n, l=qn.l, alpha=alpha, E_rederived=red,
                 E_as_printed=prt, reference=expected, gap=_gap(chosen, expected))
        )
    return rows


def table1_rows(variant: Variant = Variant.AS_PRINTED) -> list[dict]:
    variant = Variant(variant)
    rows = []
    for ref in reference("table1"):
        qn = QuantumNumbers.from_label(ref["state"])
        p = PotentialParams(*(float(ref[k]) for k in "ABCD"), alpha=float(ref["alpha"]))
        red = _energy(p, qn, TABLE1_CTX, Variant.REDERIVED)
        prt = _energy(p, qn, TABLE1_CTX, Variant.AS_PRINTED)
        expected = float(ref["reference"])
        chosen = red if variant is Variant.REDERIVED else prt
        rows.append(
            dict(state=ref["state"], n=qn.n, l=qn.l, alpha=p.alpha, A=p.A, B=p.B, C=p.C,
                 D=p.D, E_rederived=red, E_as_printed=prt, reference=expected,
                 gap=_gap(chosen, expected))
        )
    return rows


def table3_rows(A: float, B: float, C: float, D: float,
                variant: Variant = Variant.REDERIVED) -> list[dict]:
    """Table 3's state grid for the four molecules, with caller-supplied strengths."""
    variant = Variant(variant)
    rows = []
    refs = reference("table3")
    for m in builtin_catalog():
        ctx = context_for(m)
        p = PotentialParams(A, B, C, D, alpha=m.alpha)
        for ref in refs:
            qn = QuantumNumbers(int(ref["n"]), int(ref["l"]))
            value = _energy(p, qn, ctx, variant)
            expected = float(ref[m.name])
            rows.append(
                dict(molecule=m.name, n=qn.n, l=qn.l, alpha=m.alpha, energy=value,
                     reference=expected, gap=_gap(value, expected))
            )
    return rows
