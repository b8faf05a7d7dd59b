"""Diatomic molecule catalog and physical-unit contexts."""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

from .errors import CatalogError
from .units import PhysicalContext, amu_to_ev


@dataclass(frozen=True)
class MoleculeSpec:
    name: str
    mu_amu: float
    alpha: float  # 1/Angstrom

    def __post_init__(self):
        if not (self.mu_amu > 0 and self.alpha > 0):
            raise CatalogError(f"{self.name}: reduced mass and alpha must be positive")


_BUILTIN = (
    MoleculeSpec("VH", 0.988005, 1.44370),
    MoleculeSpec("TiH", 0.987371, 1.32408),
    MoleculeSpec("TiC", 9.606079, 1.52550),
    MoleculeSpec("CuLi", 6.259494, 1.00818),
)


def builtin_catalog() -> list[MoleculeSpec]:
    return list(_BUILTIN)


def find(name: str, catalog: Iterable[MoleculeSpec] | None = None) -> MoleculeSpec:
    for m in catalog if catalog is not None else _BUILTIN:
        if m.name.lower() == name.lower():
            return m
    raise KeyError(f"unknown molecule {name!r}")


def context_for(m: MoleculeSpec) -> PhysicalContext:
    return PhysicalContext.physical(amu_to_ev(m.mu_amu))


def load_catalog(source: str | Path | TextIO) -> list[MoleculeSpec]:
    """Parse ``name mu_amu alpha`` lines; '#' starts a comment."""
    if isinstance(source, Path):
        text = source.read_text(encoding="utf-8")
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    out = []
    for lineno, raw in enumerate(io.StringIO(text), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise CatalogError(f"line {lineno}: expected 'name mu_amu alpha', got {raw.rstrip()!r}")
        name = parts[0]
        try:
            mu, alpha = float(parts[1]), float(parts[2])
        except ValueError:
            raise CatalogError(f"line {lineno}: non-numeric value in {raw.rstrip()!r}") from None
        try:
            out.append(MoleculeSpec(name, mu, alpha))
        except CatalogError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from None
    return out


def save_catalog(catalog: Iterable[MoleculeSpec]) -> str:
    lines = ["# name mu_amu alpha_per_angstrom"]
    lines += [f"{m.name} {m.mu_amu!r} {m.alpha!r}" for m in catalog]
    return "\n".join(lines) + "\n"
