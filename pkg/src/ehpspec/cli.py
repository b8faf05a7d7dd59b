"""Command-line front end.

Subcommands: energy, table, sweep, validate, wavefunction. Every option may
also come from a ``key = value`` config file (``--config``); command-line
flags win over the file, the file wins over built-in defaults.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import csvio, tables
from .errors import EHPError, NoBoundState, NotBelowThreshold, SupercriticalBarrier
from .grid import GridSpec
from .molecules import MoleculeSpec, context_for, find
from .oracle import Adjudication, adjudicate, auto_grid
from .potential import PotentialParams
from .spectra import (
    QuantumNumbers,
    Variant,
    coulomb_energy,
    eckart_energy,
    ehp_energy,
    enumerate_bound_states,
    hellmann_energy,
    yukawa_energy,
)
from .units import PhysicalContext
from .wavefunctions import build_wavefunction, count_nodes, normalize

EXIT_OK, EXIT_USAGE, EXIT_NO_BOUND = 0, 1, 2

MODEL_FLAGS = {
    "ehp": ("A", "B", "C", "D", "alpha"),
    "hellmann": ("C", "D", "alpha"),
    "eckart": ("A", "B", "alpha"),
    "coulomb": ("C",),
    "yukawa": ("D", "alpha"),
}

# Figure captions: defaults for the parameters a sweep holds fixed.
SWEEP_DEFAULTS = {"A": 1.0, "B": -1.0, "C": 4.0, "D": -4.0, "alpha": 0.025}

DEFAULTS = {
    "model": "ehp",
    "n": 0,
    "l": 0,
    "units": "natural",
    "hbar": 1.0,
    "mu": 1.0,
    "variant": "rederived",
}

FLOAT_KEYS = {"A", "B", "C", "D", "alpha", "hbar", "mu", "mu_amu", "alpha_anginv", "r_min", "r_max"}
INT_KEYS = {"n", "l", "grid_points", "n_max"}


class UsageError(Exception):
    pass


def read_config(path: str | Path) -> dict[str, str]:
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        cfg[key.lstrip("-").replace("-", "_")] = value
    return cfg


def _coerce(key, value):
    if value is None:
        return None
    if key in FLOAT_KEYS:
        return float(value)
    if key in INT_KEYS:
        return int(value)
    return value


def resolve(args: argparse.Namespace) -> dict:
    """Merge flags > config file > defaults."""
    cfg = read_config(args.config) if getattr(args, "config", None) else {}
    out = {}
    for key in set(vars(args)) | set(cfg) | set(DEFAULTS):
        flag = getattr(args, key, None)
        if flag is not None:
            out[key] = flag
        elif key in cfg:
            out[key] = _coerce(key, cfg[key])
        else:
            out[key] = DEFAULTS.get(key)
    return out


def _context(o: dict) -> tuple[PhysicalContext, MoleculeSpec | None]:
    if o["units"] == "physical" or o.get("molecule") or o.get("mu_amu") is not None:
        if o.get("molecule"):
            try:
                m = find(o["molecule"])
            except KeyError as exc:
                raise UsageError(str(exc)) from None
        elif o.get("mu_amu") is not None and o.get("alpha_anginv") is not None:
            m = MoleculeSpec("custom", o["mu_amu"], o["alpha_anginv"])
        else:
            raise UsageError("physical units need --molecule NAME or --mu-amu X --alpha-anginv Y")
        return context_for(m), m
    return PhysicalContext.natural(o["hbar"], o["mu"]), None


def _params(o: dict, molecule: MoleculeSpec | None, required=("A", "B", "C", "D", "alpha"),
            defaults: dict | None = None) -> PotentialParams:
    vals = {}
    if molecule is not None and o.get("alpha") is None:
        o = dict(o, alpha=molecule.alpha)
    missing = []
    for k in ("A", "B", "C", "D", "alpha"):
        v = o.get(k)
        if v is None and defaults is not None:
            v = defaults.get(k)
        if v is None:
            if k in required:
                missing.append(k)
            v = 0.0 if k != "alpha" else 1.0
        vals[k] = v
    if missing:
        raise UsageError("missing required flags: " + " ".join(f"--{k}" for k in missing))
    return PotentialParams(**vals)


def _variant(o) -> Variant:
    try:
        return Variant(o["variant"])
    except ValueError:
        raise UsageError("--variant must be rederived or as-printed") from None


def _parse_states(text: str) -> list[QuantumNumbers]:
    states = []
    for tok in text.replace(" ", ",").split(","):
        if not tok:
            continue
        if ":" in tok:
            n, l = tok.split(":")
            states.append(QuantumNumbers(int(n), int(l)))
        else:
            states.append(QuantumNumbers.from_label(tok))
    return states


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_energy(o: dict) -> int:
    model = o["model"]
    if model not in MODEL_FLAGS:
        raise UsageError(f"--model must be one of {', '.join(MODEL_FLAGS)}")
    ctx, mol = _context(o)
    p = _params(o, mol, MODEL_FLAGS[model])
    qn = QuantumNumbers(o["n"], o["l"])
    variant = _variant(o)
    try:
        if model == "ehp":
            lev = ehp_energy(p, qn, ctx, variant)
        elif model == "hellmann":
            lev = hellmann_energy(p.C, p.D, p.alpha, qn, ctx)
        elif model == "eckart":
            lev = eckart_energy(p.A, p.B, p.alpha, qn, ctx, variant)
        elif model == "coulomb":
            lev = coulomb_energy(p.C, qn, ctx)
        else:
            lev = yukawa_energy(p.D, p.alpha, qn, ctx)
    except (NoBoundState, SupercriticalBarrier) as exc:
        print(f"{type(exc).__name__}: {exc}")
        return EXIT_NO_BOUND
    print(f"{lev.energy:#.12g}")
    if variant is Variant.REDERIVED and not lev.bound:
        print("NotBelowThreshold")
        return EXIT_NO_BOUND
    print("bound" if lev.bound or variant is Variant.REDERIVED else "unbound (as-printed formula)")
    return EXIT_OK


def cmd_table(o: dict) -> int:
    preset = o["preset"]
    variant = Variant(o["variant"]) if o.get("variant_given") else None
    if preset == "table4":
        rows = tables.table4_rows(variant or Variant.REDERIVED)
        header = ["state", "n", "l", "alpha", "E_rederived", "E_as_printed", "reference", "gap"]
        comments = ["Hellmann special case, hbar = 2mu = 1, C = 2, D = -1"]
    elif preset == "table1":
        rows = tables.table1_rows(variant or Variant.AS_PRINTED)
        header = ["state", "n", "l", "alpha", "A", "B", "C", "D", "E_rederived",
                  "E_as_printed", "reference", "gap"]
        comments = [
            "hbar = mu = 1. The published values are not reproduced by the printed closed form;",
            "neither variant matches; empty E_rederived cells have no bound state.",
        ]
    else:
        missing = [k for k in "ABCD" if o.get(k) is None]
        if missing:
            raise UsageError(tables.TABLE3_UNAVAILABLE + " Missing: "
                             + " ".join(f"--{k}" for k in missing))
        rows = tables.table3_rows(o["A"], o["B"], o["C"], o["D"], variant or Variant.REDERIVED)
        header = ["molecule", "n", "l", "alpha", "energy", "reference", "gap"]
        comments = [tables.TABLE3_UNAVAILABLE]
        print(tables.TABLE3_UNAVAILABLE, file=sys.stderr)
    text = csvio.render(header, ([r[h] for h in header] for r in rows), comments)
    _emit(text, o.get("out"))
    gaps = [r["gap"] for r in rows if r["gap"] is not None]
    if gaps:
        print(f"{preset}: {len(rows)} rows, max gap {max(gaps):.3e}", file=sys.stderr)
    return EXIT_OK


def cmd_sweep(o: dict) -> int:
    param = o["param"]
    if param not in SWEEP_DEFAULTS:
        raise UsageError("--param must be one of A, B, C, D, alpha")
    start, stop, num = o["range"]
    num = int(num)
    if num < 2:
        raise UsageError("a sweep needs at least 2 samples")
    if not o.get("states"):
        raise UsageError("--states must list at least one state")
    states = _parse_states(o["states"])
    if not states:
        raise UsageError("--states must list at least one state")
    ctx, mol = _context(o)
    base = _params(o, mol, (), defaults=SWEEP_DEFAULTS)
    variant = _variant(o)
    rows = []
    for v in np.linspace(float(start), float(stop), num):
        v = float(v)
        row = [v]
        try:
            p = base.with_(**{param: v})
        except EHPError:
            rows.append(row + [None] * len(states))
            continue
        for qn in states:
            try:
                lev = ehp_energy(p, qn, ctx, variant)
                row.append(lev.energy if (lev.bound or variant is Variant.AS_PRINTED) else None)
            except EHPError:
                row.append(None)
        rows.append(row)
    header = [param] + [f"E_{qn.n}_{qn.l}" for qn in states]
    _emit(csvio.render(header, rows), o.get("out"))
    return EXIT_OK


def _grid(o: dict) -> GridSpec | None:
    if o.get("r_max") is None and o.get("grid_points") is None:
        return None
    if o.get("r_max") is None or o.get("grid_points") is None:
        raise UsageError("--grid-points and --r-max must be given together")
    return GridSpec(o["r_max"], o["grid_points"], o.get("r_min") or 0.0)


def _tolerance(e: float) -> float:
    return max(1e-6, 1e-4 * abs(e))


def cmd_validate(o: dict) -> int:
    if all(o.get(k) is None for k in "ABCD"):
        raise UsageError("validate needs a parameter block: at least one of --A --B --C --D")
    ctx, mol = _context(o)
    p = _params(o, mol, ("alpha",))
    grid = _grid(o)
    if o.get("states"):
        states = _parse_states(o["states"])
    else:
        n_max = o.get("n_max") if o.get("n_max") is not None else 3
        levels = enumerate_bound_states(p, o["l"], ctx, Variant.REDERIVED, n_max)
        states = [lev.qn for lev in levels] or [QuantumNumbers(0, o["l"])]
    reports: list[Adjudication] = []
    for qn in states:
        try:
            reports.append(adjudicate(p, qn, ctx, grid))
        except EHPError as exc:
            raise EHPError(f"validate failed at n={qn.n}, l={qn.l}: {exc}") from exc
    _emit(csvio.render(Adjudication.FIELDS, (r.row() for r in reports)), o.get("out"))
    bound = [r for r in reports if r.E_rederived is not None]
    ok = all(r.gap_rederived is not None and r.gap_rederived <= _tolerance(r.E_rederived)
             for r in bound)
    verdicts = sorted({r.verdict for r in reports})
    max_gap = max((r.gap_rederived for r in bound if r.gap_rederived is not None), default=0.0)
    print(f"verdict: {'/'.join(verdicts)}; bound rows: {len(bound)}; "
          f"max rederived gap: {max_gap:.3e}; {'PASS' if ok else 'FAIL'}", file=sys.stderr)
    for r in reports:
        if r.E_oracle_ga is None and r.E_as_printed is not None:
            print(f"n={r.n} l={r.l}: GA oracle has no eigenvalue below the continuum edge; "
                  f"the printed formula's {r.E_as_printed:.10g} is not a bound state",
                  file=sys.stderr)
    return EXIT_OK if ok else EXIT_USAGE


def cmd_wavefunction(o: dict) -> int:
    ctx, mol = _context(o)
    model = o["model"]
    if model not in MODEL_FLAGS or model == "coulomb":
        raise UsageError("wavefunction needs --model ehp, hellmann, eckart or yukawa")
    p = _params(o, mol, MODEL_FLAGS[model])
    qn = QuantumNumbers(o["n"], o["l"])
    try:
        wf = normalize(build_wavefunction(p, qn, ctx))
    except (NoBoundState, NotBelowThreshold, SupercriticalBarrier) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NO_BOUND
    grid = _grid(o) or auto_grid(p, qn.l, ctx, qn.n)
    r = grid.nodes
    u = wf(r)
    nodes = count_nodes(wf, grid)
    comments = [
        f"state={qn.label} n={qn.n} l={qn.l} energy={wf.energy!r}",
        f"norm={wf.norm!r} lambda={wf.lam!r} nu={wf.nu!r} nodes={nodes}",
    ]
    _emit(csvio.render(["r", "u"], zip(r.tolist(), u.tolist()), comments), o.get("out"))
    return EXIT_OK


def _add_common(sp: argparse.ArgumentParser):
    g = sp.add_argument_group("potential")
    for k in ("A", "B", "C", "D"):
        g.add_argument(f"--{k}", type=float)
    g.add_argument("--alpha", type=float)
    g.add_argument("--model", choices=sorted(MODEL_FLAGS))
    q = sp.add_argument_group("state")
    q.add_argument("--n", type=int)
    q.add_argument("--l", type=int)
    u = sp.add_argument_group("units")
    u.add_argument("--units", choices=["natural", "physical"])
    u.add_argument("--hbar", type=float)
    u.add_argument("--mu", type=float)
    u.add_argument("--molecule")
    u.add_argument("--mu-amu", dest="mu_amu", type=float)
    u.add_argument("--alpha-anginv", dest="alpha_anginv", type=float)
    sp.add_argument("--variant", choices=[v.value for v in Variant])
    gr = sp.add_argument_group("grid")
    gr.add_argument("--grid-points", dest="grid_points", type=int)
    gr.add_argument("--r-min", dest="r_min", type=float)
    gr.add_argument("--r-max", dest="r_max", type=float)
    sp.add_argument("--out")
    sp.add_argument("--config")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ehpspec", description="Bound states of the Eckart-Hellmann potential."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("energy", help="single energy level")
    _add_common(sp)

    sp = sub.add_parser("table", help="reproduce a published table as CSV")
    sp.add_argument("preset", choices=["table1", "table3", "table4"])
    _add_common(sp)

    sp = sub.add_parser("sweep", help="energies along one parameter")
    _add_common(sp)
    sp.add_argument("--param", required=True)
    sp.add_argument("--range", nargs=3, metavar=("START", "STOP", "NUM"), required=True)
    sp.add_argument("--states", help="labels (1s,2p) or n:l pairs, comma separated")

    sp = sub.add_parser("validate", help="adjudicate closed forms against the FD oracle")
    _add_common(sp)
    sp.add_argument("--states")
    sp.add_argument("--n-max", dest="n_max", type=int)

    sp = sub.add_parser("wavefunction", help="normalised u(r) as CSV")
    _add_common(sp)
    return parser


COMMANDS = {
    "energy": cmd_energy,
    "table": cmd_table,
    "sweep": cmd_sweep,
    "validate": cmd_validate,
    "wavefunction": cmd_wavefunction,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    o = resolve(args)
    o["variant_given"] = o.get("variant") is not None and (
        args.variant is not None or "variant" in (read_config(args.config) if args.config else {})
    )
    if o.get("variant") is None:
        o["variant"] = DEFAULTS["variant"]
    try:
        return COMMANDS[args.command](o)
    except BrokenPipeError:
        return EXIT_OK
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EHPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
