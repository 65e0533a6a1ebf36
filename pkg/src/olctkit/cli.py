"""Command line front end.

Usage::

    olctkit transform [--config cfg.json] [--out DIR] [--grid-n N]
    olctkit inverse   [--config cfg.json] [--out DIR]
    olctkit verify --theorem heisenberg [--domain olct|qolct] [--config cfg.json]
    olctkit table --which young [--mode quadrature|reference] [--svg]
    olctkit selftest [--grid-n 128] [--seed 0]

Exit status: 0 success, 1 invalid input, 2 numerical failure, 3 I/O failure.
Errors are reported on stderr as one ``error code=<Name> exit=<n> message=...``
line.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .errors import IOFailure, NumericalError, OlctError, ParseError, ValidationError
from .fields import (Grid2D, QuaternionField2D, read_complex_csv,
                     read_quaternion_csv, table_number, write_complex_csv,
                     write_quaternion_csv)
from .olct import IDENTITY_CHIRP, OLCTParams, validate_params

__all__ = ["RunConfig", "load_config", "config_from_dict", "run", "emit_plot_data", "main"]

THEOREMS = ("young", "pitt", "logup", "entropy", "nazarov", "heisenberg")


@dataclass(frozen=True)
class RunConfig:
    M1: OLCTParams = IDENTITY_CHIRP
    M2: OLCTParams = IDENTITY_CHIRP
    grid_n: int = 256
    half_width: object = "auto"
    signal: dict | None = None
    check: dict = field(default_factory=dict)
    table: dict = field(default_factory=dict)
    output: dict = field(default_factory=lambda: {"dir": ".", "svg": False})
    seed: int = 0


# ------------------------------------------------------------------- config

def _params(value, name):
    if isinstance(value, dict):
        keys = ("a", "b", "c", "d", "tau", "eta")
        unknown = set(value) - set(keys)
        if unknown:
            raise ParseError(f"unknown keys {sorted(unknown)}", field=name)
        try:
            vals = [float(value[k]) for k in keys[:4]] + [float(value.get(k, 0.0)) for k in keys[4:]]
        except KeyError as exc:
            raise ParseError(f"missing parameter {exc.args[0]!r}", field=name) from None
    elif isinstance(value, (list, tuple)) and len(value) in (4, 6):
        vals = [float(v) for v in value]
    else:
        raise ParseError("expected 4 or 6 numbers or an object with a, b, c, d[, tau, eta]",
                         field=name)
    p = OLCTParams.from_seq(vals)
    try:
        return validate_params(p)
    except ValidationError as exc:
        raise type(exc)(f"{name}: {exc}") from None


def _number(value, name, positive=False):
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ParseError(f"expected a number, got {value!r}", field=name) from None
    if not math.isfinite(x) or (positive and x <= 0):
        raise ValidationError(f"{name} must be a {'positive ' if positive else ''}finite number")
    return x


def config_from_dict(data: dict, base_dir=".") -> RunConfig:
    """Validate a decoded configuration object and apply defaults."""
    if not isinstance(data, dict):
        raise ParseError("configuration must be a JSON object")
    known = {"M1", "M2", "grid", "signal", "check", "table", "output", "seed"}
    extra = set(data) - known
    if extra:
        raise ParseError(f"unknown top-level keys {sorted(extra)}", field=sorted(extra)[0])
    cfg = RunConfig()
    kw = {}
    if "M1" in data:
        kw["M1"] = _params(data["M1"], "M1")
    if "M2" in data:
        kw["M2"] = _params(data["M2"], "M2")
    grid = data.get("grid", {})
    if not isinstance(grid, dict):
        raise ParseError("expected an object", field="grid")
    if "n" in grid:
        n = grid["n"]
        if not isinstance(n, int) or n < 2:
            raise ValidationError("grid.n must be an integer >= 2")
        kw["grid_n"] = n
    if "half_width" in grid:
        hw = grid["half_width"]
        kw["half_width"] = hw if hw == "auto" else _number(hw, "grid.half_width", positive=True)
    sig = None
    if "signal" in data:
        sig = dict(data["signal"])
        kind = sig.setdefault("kind", "gaussian")
        if kind not in ("gaussian", "quaternion_gaussian", "csv"):
            raise ValidationError(f"signal.kind {kind!r} not one of gaussian, quaternion_gaussian, csv")
        if kind == "csv":
            if "path" not in sig:
                raise ParseError("csv signal needs a path", field="signal.path")
            path = Path(base_dir) / sig["path"]
            if not path.is_file():
                raise IOFailure(f"signal file {str(path)!r} does not exist")
            sig["path"] = str(path)
        else:
            alpha = sig.setdefault("alpha", 1.0)
            pair = alpha if isinstance(alpha, (list, tuple)) else [alpha]
            for a in pair:
                _number(a, "signal.alpha", positive=True)
    kw["signal"] = sig
    for key in ("check", "table", "output"):
        if key in data:
            if not isinstance(data[key], dict):
                raise ParseError("expected an object", field=key)
            kw[key] = dict(data[key]) if key != "output" else {**cfg.output, **data[key]}
    theorem = kw.get("check", {}).get("theorem")
    if theorem is not None and theorem.removesuffix("_q") not in THEOREMS:
        raise ValidationError(f"check.theorem {theorem!r} unknown")
    if "seed" in data:
        kw["seed"] = int(data["seed"])
    return replace(cfg, **kw)


def load_config(path) -> RunConfig:
    """Read and validate a JSON configuration file.

    Raises
    ------
    ParseError
        Malformed JSON (with line number) or a malformed field.
    ValidationError
        A parameter violates an invariant (``DegenerateB``,
        ``SymplecticViolation``, ...).
    IOFailure
        The file or a referenced file cannot be read.
    """
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IOFailure(f"cannot read {str(path)!r}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None
    return config_from_dict(data, Path(path).parent)


# ------------------------------------------------------------------- signals

def _alpha_pair(sig):
    a = sig.get("alpha", 1.0)
    return (float(a[0]), float(a[1])) if isinstance(a, (list, tuple)) else (float(a), float(a))


def build_signal(cfg: RunConfig, domain="olct"):
    """Field described by ``cfg.signal`` on the configured grid."""
    from .gaussian import GaussianSpec, default_half_width, gaussian_field
    from .qolct import QGAUSS_WIDTHS, quaternion_gaussian

    sig = cfg.signal or {"kind": "quaternion_gaussian" if domain == "qolct" else "gaussian",
                         "alpha": 1.0}
    kind = sig.get("kind", "gaussian")
    if kind == "csv":
        path = sig["path"]
        with open(path) as fh:
            header = fh.readline()
        f = read_quaternion_csv(path) if header.count(",") == 5 else read_complex_csv(path)
    else:
        a1, a2 = _alpha_pair(sig)
        center = tuple(sig.get("center", (0.0, 0.0)))
        if cfg.half_width == "auto":
            slowest = min(QGAUSS_WIDTHS) if kind == "quaternion_gaussian" else 1.0
            hw1 = default_half_width(slowest * a1) + abs(center[0])
            hw2 = default_half_width(slowest * a2) + abs(center[1])
        else:
            hw1 = hw2 = float(cfg.half_width)
        grid = Grid2D.centered(cfg.grid_n, hw1, cfg.grid_n, hw2)
        if kind == "quaternion_gaussian":
            if a1 != a2:
                raise ValidationError("quaternion_gaussian takes a single alpha")
            f = quaternion_gaussian(a1, grid, center)
        else:
            f = gaussian_field(GaussianSpec(a1, a2), grid, center)
    quaternion = isinstance(f, QuaternionField2D)
    if domain == "qolct" and not quaternion:
        raise ValidationError(f"signal kind {kind!r} is complex but the qolct engine was selected")
    if domain == "olct" and quaternion:
        raise ValidationError("quaternion signal given to the complex olct engine")
    return f


# ------------------------------------------------------------------ commands

def _outdir(cfg):
    d = Path(cfg.output.get("dir", "."))
    try:
        d.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IOFailure(f"cannot create {str(d)!r}: {exc.strerror}") from None
    return d


def _guard(*arrays):
    for a in arrays:
        if not np.all(np.isfinite(a)):
            raise NumericalError("non-finite values in result")


def _write(fn, *args):
    try:
        fn(*args)
    except OSError as exc:
        raise IOFailure(f"cannot write output: {exc.strerror}") from None


def _domain(cfg):
    sig = cfg.signal or {}
    if sig.get("kind") == "quaternion_gaussian" or (sig.get("kind") == "csv" and _is_q_csv(cfg)):
        return "qolct"
    return "olct"


def _forward(f, cfg):
    from .olct import olct_2d
    from .qolct import qolct_direct, qolct_via_ops
    if isinstance(f, QuaternionField2D):
        return qolct_via_ops(f, cfg.M1, cfg.M2) if f.grid.pow2() else qolct_direct(f, cfg.M1, cfg.M2)
    return olct_2d(f, cfg.M1, cfg.M2)


def _write_field(f, path, spectral):
    if isinstance(f, QuaternionField2D):
        _write(write_quaternion_csv, f, path, spectral)
    else:
        _write(write_complex_csv, f, path, spectral)


def cmd_transform(cfg, out):
    f = build_signal(cfg, _domain(cfg))
    F = _forward(f, cfg)
    _guard(F.values)
    _write_field(F, out / "spectrum.csv", True)
    print(f"wrote {out / 'spectrum.csv'} ({F.grid.n1}x{F.grid.n2} nodes)")
    return 0


def _tgrid_for(F, cfg):
    """Signal lattice whose induced spectral lattice is ``F.grid``."""
    g = F.grid
    h1 = abs(cfg.M1.b) * 2 * math.pi / (g.n1 * g.t1_step)
    h2 = abs(cfg.M2.b) * 2 * math.pi / (g.n2 * g.t2_step)
    return Grid2D(g.n1, g.n2, -0.5 * g.n1 * h1, h1, -0.5 * g.n2 * h2, h2)


def cmd_inverse(cfg, out):
    from .olct import inverse_olct_2d
    from .qolct import inverse_qolct
    if (cfg.signal or {}).get("kind") == "csv":
        F = build_signal(cfg, _domain(cfg))
        tgrid = _tgrid_for(F, cfg)
    else:
        f = build_signal(cfg, _domain(cfg))
        F = _forward(f, cfg)
        tgrid = f.grid
        _write_field(F, out / "spectrum.csv", True)
    if isinstance(F, QuaternionField2D):
        back = inverse_qolct(F, cfg.M1, cfg.M2, tgrid)
    else:
        back = inverse_olct_2d(F, cfg.M1, cfg.M2, tgrid)
    _guard(back.values)
    _write_field(back, out / "signal.csv", False)
    print(f"wrote {out / 'signal.csv'}")
    return 0


def _is_q_csv(cfg):
    with open(cfg.signal["path"]) as fh:
        return fh.readline().count(",") == 5


def _check(theorem, f, cfg):
    from . import inequalities as iq
    from .functionals import RectSet
    from .qolct import check_q_inequality
    c = cfg.check
    T1 = RectSet.square(float(c.get("T1", 1.0)))
    T2 = RectSet.square(float(c.get("T2", 1.0)))
    if isinstance(f, QuaternionField2D):
        return check_q_inequality(theorem, f, cfg.M1, cfg.M2, p=float(c.get("p", 1.5)),
                                  lam=float(c.get("lam", 0.5)), T1=T1, T2=T2)
    t = theorem.removesuffix("_q")
    if t == "young":
        return iq.check_young(f, float(c.get("p", 1.5)), cfg.M1, cfg.M2)
    if t == "pitt":
        return iq.check_pitt(f, float(c.get("lam", 0.5)), cfg.M1, cfg.M2)
    if t == "logup":
        return iq.check_logup(f, cfg.M1, cfg.M2)
    if t == "entropy":
        return iq.check_entropy(f, cfg.M1, cfg.M2)
    if t == "nazarov":
        return iq.check_nazarov(f, T1, T2, cfg.M1, cfg.M2)
    return iq.check_heisenberg(f, int(c.get("k", 1)), cfg.M1, cfg.M2,
                               norm_sq=float(c.get("norm_sq", 1.0)))


def cmd_verify(cfg, out, theorem, domain):
    f = build_signal(cfg, domain)
    rep = _check(theorem, f, cfg)
    _guard(np.array([rep.lhs, rep.rhs]))
    diff = rep.lhs - rep.rhs
    header = ("theorem_id", "lhs", "rhs", "difference", "margin", "quad_error", "satisfied")
    row = (rep.theorem_id, table_number(rep.lhs), table_number(rep.rhs), table_number(diff),
           table_number(rep.margin), table_number(rep.quad_error), str(rep.satisfied).lower())

    def dump(path):
        with open(path, "w") as fh:
            fh.write(",".join(header) + "\n" + ",".join(row) + "\n")

    _write(dump, out / "report.csv")
    print(f"theorem={rep.theorem_id} domain={domain}")
    print(f"LHS={table_number(rep.lhs)} RHS={table_number(rep.rhs)} Difference={table_number(diff)}")
    print(f"margin={table_number(rep.margin)} quad_error={table_number(rep.quad_error)} "
          f"satisfied={str(rep.satisfied).lower()}")
    if rep.theorem_id == "heisenberg" and domain == "olct":
        from .calibration import heisenberg_reference_lhs
        a1 = _alpha_pair(cfg.signal or {})[0]
        ref = heisenberg_reference_lhs(a1, cfg.M1.b, cfg.M1.a)
        print(f"reference-convention LHS={table_number(ref)} RHS={table_number(cfg.M1.b ** 2)}")
    for k in sorted(rep.extras):
        v = rep.extras[k]
        if isinstance(v, (float, int, bool, np.floating)):
            print(f"  {k}={table_number(v) if isinstance(v, (float, np.floating)) else v}")
    return 0


def emit_plot_data(which, rows, outdir, svg=True):
    """Write ``lhs.csv``, ``rhs.csv``, ``difference.csv`` (long form) and an optional SVG.

    Each CSV has columns ``alpha,<second>,value`` in sweep order.  The SVG
    plots lhs, rhs and difference against the second parameter, one line
    per alpha.
    """
    from .inequalities import TABLE_HEADERS
    outdir = Path(outdir)
    akey, skey = TABLE_HEADERS[which][:2]
    written = []
    for col in ("lhs", "rhs", "difference"):
        path = outdir / f"{col}.csv"

        def dump(path=path, col=col):
            with open(path, "w") as fh:
                fh.write(f"{akey},{skey},{col}\n")
                for r in rows:
                    fh.write(f"{table_number(r[akey])},{table_number(r[skey])},"
                             f"{table_number(r[col])}\n")

        _write(dump)
        written.append(path)
    if svg:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        matplotlib.rcParams["svg.hashsalt"] = "olctkit"
        fig, axes = plt.subplots(1, 3, figsize=(12, 3.6))
        alphas = sorted({r[akey] for r in rows})
        for ax, col in zip(axes, ("lhs", "rhs", "difference")):
            for a in alphas:
                sub = [r for r in rows if r[akey] == a]
                ax.plot([r[skey] for r in sub], [r[col] for r in sub], marker="o",
                        label=f"{akey}={a:g}")
            ax.set_xlabel(skey)
            ax.set_title(col)
            if alphas:
                ax.legend(fontsize=7)
        fig.tight_layout()
        path = outdir / f"{which}.svg"
        _write(lambda: fig.savefig(path, format="svg", metadata={"Date": None}))
        plt.close(fig)
        written.append(path)
    return written


def cmd_table(cfg, out, which, mode, svg):
    from .inequalities import TableDefaults, make_table, write_table_csv
    t = cfg.table
    defaults = TableDefaults(**{k: v for k, v in t.get("defaults", {}).items()})
    if "n" not in t.get("defaults", {}):
        defaults = replace(defaults, n=cfg.grid_n)
    rows = make_table(which, t.get("sweep"), defaults, mode)
    for r in rows:
        _guard(np.array([r["lhs"], r["rhs"]]))
    path = out / f"table_{which}.csv"
    _write(write_table_csv, which, rows, path)
    files = emit_plot_data(which, rows, out, svg=svg or bool(cfg.output.get("svg")))
    print(f"wrote {path} ({len(rows)} rows) and {len(files)} plot-data files")
    return 0


def cmd_selftest(cfg, n, seed):
    from .selftest import run_selftest
    ok = run_selftest(n=n, seed=seed, stream=sys.stdout)
    return 0 if ok else 2


# --------------------------------------------------------------------- main

def run(command, cfg: RunConfig, **opts) -> int:
    """Dispatch one command; returns the exit status (errors propagate)."""
    if command == "selftest":
        return cmd_selftest(cfg, opts.get("grid_n") or 128, opts.get("seed", cfg.seed))
    out = _outdir(cfg)
    if command == "transform":
        return cmd_transform(cfg, out)
    if command == "inverse":
        return cmd_inverse(cfg, out)
    if command == "verify":
        theorem = opts.get("theorem") or cfg.check.get("theorem")
        if theorem is None:
            raise ValidationError("verify needs --theorem or check.theorem")
        if theorem.removesuffix("_q") not in THEOREMS:
            raise ValidationError(f"unknown theorem {theorem!r}")
        domain = opts.get("domain") or ("qolct" if theorem.endswith("_q") else "olct")
        return cmd_verify(cfg, out, theorem, domain)
    if command == "table":
        return cmd_table(cfg, out, opts.get("which") or cfg.table.get("which", "heisenberg"),
                         opts.get("mode") or cfg.table.get("mode", "quadrature"),
                         bool(opts.get("svg")))
    raise ValidationError(f"unknown command {command!r}")


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--out", help="output directory (overrides output.dir)")
    common.add_argument("--grid-n", type=int, help="nodes per axis (overrides grid.n)")
    common.add_argument("--seed", type=int, help="seed for randomized self checks")
    p = argparse.ArgumentParser(prog="olctkit", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("transform", parents=[common], help="forward transform to spectrum.csv")
    sub.add_parser("inverse", parents=[common], help="inverse transform to signal.csv")
    v = sub.add_parser("verify", parents=[common], help="evaluate one inequality")
    v.add_argument("--theorem", choices=THEOREMS + tuple(t + "_q" for t in THEOREMS))
    v.add_argument("--domain", choices=("olct", "qolct"))
    t = sub.add_parser("table", parents=[common], help="Gaussian table sweep")
    t.add_argument("--which", choices=("heisenberg", "young"))
    t.add_argument("--mode", choices=("quadrature", "reference"))
    t.add_argument("--svg", action="store_true", help="also write an SVG chart")
    sub.add_parser("selftest", parents=[common], help="run the invariant suite")
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else RunConfig()
        if args.grid_n is not None:
            if args.grid_n < 2:
                raise ValidationError("--grid-n must be >= 2")
            cfg = replace(cfg, grid_n=args.grid_n)
        if args.out is not None:
            cfg = replace(cfg, output={**cfg.output, "dir": args.out})
        if args.seed is not None:
            cfg = replace(cfg, seed=args.seed)
        return run(args.command, cfg, theorem=getattr(args, "theorem", None),
                   domain=getattr(args, "domain", None), which=getattr(args, "which", None),
                   mode=getattr(args, "mode", None), svg=getattr(args, "svg", False),
                   grid_n=args.grid_n, seed=cfg.seed)
    except OlctError as exc:
        print(f"error code={exc.code} exit={exc.exit_code} message={json.dumps(str(exc))}",
              file=sys.stderr)
        return exc.exit_code
    except (FloatingPointError, ArithmeticError) as exc:
        print(f"error code=NumericalError exit=2 message={json.dumps(str(exc))}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
