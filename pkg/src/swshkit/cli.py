"""Command-line front end.

Subcommands:

  eval    evaluate a harmonic or operator at one point
  euler   relative Euler angles between two directions
  verify  run the addition-identity verifier over a parameter grid,
          one JSON line per report; exit 0 iff everything passed
  sweep   tabulate an equal-spin mode sum against its closed form on a
          theta grid (CSV or JSON)

Spins are exact tokens ("2", "-1/2"); decimals are rejected.  Angles are
radians unless --degrees is given.  The default seed comes from the
SWSHKIT_SEED environment variable (fallback 42).  Report floats are written
with 17 significant digits; output is byte-stable for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

from . import harmonics, kernels, theorems
from .errors import DomainError
from .halfint import HalfInt
from .harmonics import Direction
from .geometry import euler_consistency_residual, relative_euler
from .theorems import TheoremId, TheoremParams, theorem_params

SEED_ENV_VAR = "SWSHKIT_SEED"

_THEOREM_TOKENS = {t.value: t for t in TheoremId}

_EVAL_TARGETS = ("Y", "dtheta", "dphi", "edth", "edthbar", "de_residual")


@dataclass
class RunConfig:
    """Parsed invocation: one command plus everything it needs."""

    command: str
    spins: dict = field(default_factory=dict)   # name -> HalfInt
    angles: dict = field(default_factory=dict)  # name -> float (radians)
    theorem: str = "all"
    mode: str = "two_point"
    spin_max: HalfInt = HalfInt(4)
    ell_max: HalfInt = HalfInt(16)
    samples: int = 100
    tol_scale: float = 1.0
    seed: int = 42
    target: str = "Y"
    thetas: list = field(default_factory=list)
    output_format: str = "text"
    output_path: str | None = None

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError(f"need samples >= 1, got {self.samples}")
        if not self.tol_scale > 0.0:
            raise DomainError(f"need tol_scale > 0, got {self.tol_scale}")


def _f17(x: float) -> str:
    return f"{x:.17g}"


def _json_line(pairs) -> str:
    """JSON object with floats at 17 significant digits, fixed key order."""
    parts = []
    for key, value in pairs:
        if isinstance(value, bool):
            text = "true" if value else "false"
        elif isinstance(value, float):
            text = _f17(value)
        elif isinstance(value, int):
            text = str(value)
        elif value is None:
            text = "null"
        else:
            text = json.dumps(str(value))
        parts.append(f"{json.dumps(key)}: {text}")
    return "{" + ", ".join(parts) + "}"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError as exc:
        raise DomainError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from exc


def _spin(token: str) -> HalfInt:
    try:
        return HalfInt.parse(token)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swshkit",
        description="Spin-weighted spherical harmonics and their azimuthal "
                    "addition identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--degrees", action="store_true",
                       help="interpret input angles as degrees")
        p.add_argument("--output", metavar="PATH", default=None,
                       help="write to PATH instead of stdout")

    p = sub.add_parser("eval", help="evaluate a harmonic or operator")
    p.add_argument("--s", type=_spin, required=True)
    p.add_argument("--ell", type=_spin, required=True)
    p.add_argument("--m", type=_spin, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--target", choices=_EVAL_TARGETS, default="Y")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p)

    p = sub.add_parser("euler", help="relative Euler angles of two directions")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--theta-p", type=float, required=True)
    p.add_argument("--phi-p", type=float, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_common(p)

    p = sub.add_parser("verify", help="verify addition identities on a grid")
    p.add_argument("--theorem", default="all",
                   choices=("all", *_THEOREM_TOKENS))
    p.add_argument("--mode", choices=theorems.VERIFY_MODES, default="two_point")
    p.add_argument("--s", type=_spin, default=None,
                   help="verify a single spin instead of the grid")
    p.add_argument("--sprime", type=_spin, default=None)
    p.add_argument("--ell", type=_spin, default=None,
                   help="verify a single degree instead of the grid")
    p.add_argument("--spin-max", type=_spin, default=HalfInt(4),
                   help="grid: |s|, |s'| <= spin-max (default 2)")
    p.add_argument("--ell-max", type=_spin, default=HalfInt(16),
                   help="grid: ell <= ell-max (default 8)")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol-scale", type=float, default=1.0,
                   help="multiply the default tolerances")
    add_common(p)

    p = sub.add_parser("sweep", help="equal-spin mode sum over a theta grid")
    p.add_argument("--theorem", required=True, choices=tuple(_THEOREM_TOKENS))
    p.add_argument("--s", type=_spin, required=True)
    p.add_argument("--ell", type=_spin, required=True)
    p.add_argument("--thetas", default=None,
                   help="comma-separated theta values")
    p.add_argument("--theta-start", type=float, default=0.0)
    p.add_argument("--theta-stop", type=float, default=math.pi)
    p.add_argument("--theta-count", type=int, default=9)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_common(p)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    cfg.seed = _default_seed()
    scale = math.pi / 180.0 if getattr(args, "degrees", False) else 1.0
    cfg.output_path = getattr(args, "output", None)

    for name in ("theta", "phi", "theta_p", "phi_p"):
        if getattr(args, name, None) is not None:
            cfg.angles[name] = scale * getattr(args, name)
    for name in ("s", "sprime", "m", "ell"):
        value = getattr(args, name, None)
        if value is not None:
            cfg.spins[name] = value

    if args.command == "eval":
        cfg.target = args.target
        cfg.output_format = args.format
    elif args.command == "euler":
        cfg.output_format = args.format
    elif args.command == "verify":
        cfg.theorem = args.theorem
        cfg.mode = args.mode
        cfg.spin_max = args.spin_max
        cfg.ell_max = args.ell_max
        cfg.samples = args.samples
        cfg.tol_scale = args.tol_scale
        if args.seed is not None:
            cfg.seed = args.seed
    elif args.command == "sweep":
        cfg.theorem = args.theorem
        cfg.output_format = args.format
        if args.thetas is not None:
            cfg.thetas = [scale * float(t) for t in args.thetas.split(",")]
        else:
            n = args.theta_count
            if n < 1:
                raise DomainError(f"need theta-count >= 1, got {n}")
            lo = scale * args.theta_start
            hi = scale * args.theta_stop
            step = (hi - lo) / (n - 1) if n > 1 else 0.0
            cfg.thetas = [lo + k * step for k in range(n)]
    return cfg


def _emit(lines: list[str], path: str | None) -> None:
    text = "\n".join(lines) + "\n" if lines else ""
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_eval(cfg: RunConfig) -> tuple[int, list[str]]:
    q = harmonics.QuantumNumbers(cfg.spins["s"], cfg.spins["ell"], cfg.spins["m"])
    d = Direction(cfg.angles["theta"], cfg.angles["phi"])
    target = cfg.target
    if target == "Y":
        value = harmonics.swsh_eval(q, d)
    elif target == "dtheta":
        value = harmonics.dtheta(q, d)
    elif target == "dphi":
        value = harmonics.dphi(q, d)
    elif target == "edth":
        value = harmonics.edth_analytic(q, d, lower=False)
    elif target == "edthbar":
        value = harmonics.edth_analytic(q, d, lower=True)
    else:
        value = complex(harmonics.de_residual(q, d))

    if cfg.output_format == "json":
        line = _json_line([
            ("s", str(q.s)), ("ell", str(q.ell)), ("m", str(q.m)),
            ("theta", d.theta), ("phi", d.phi), ("target", target),
            ("re", value.real), ("im", value.imag),
        ])
    else:
        line = f"re={value.real:.15g} im={value.imag:.15g}"
    return 0, [line]


def cmd_euler(cfg: RunConfig) -> tuple[int, list[str]]:
    d = Direction(cfg.angles["theta"], cfg.angles["phi"])
    dp = Direction(cfg.angles["theta_p"], cfg.angles["phi_p"])
    eu = relative_euler(d, dp)
    try:
        residual = euler_consistency_residual(d, dp, eu)
    except DomainError:
        residual = None
    if cfg.output_format == "json":
        line = _json_line([
            ("theta", d.theta), ("phi", d.phi),
            ("theta_p", dp.theta), ("phi_p", dp.phi),
            ("alpha", eu.alpha), ("beta", eu.beta), ("gamma", eu.gamma),
            ("residual", residual),
        ])
    else:
        tail = "n/a" if residual is None else f"{residual:.3e}"
        line = (f"alpha={eu.alpha:.15g} beta={eu.beta:.15g} "
                f"gamma={eu.gamma:.15g} residual={tail}")
    return 0, [line]


def _verify_cells(cfg: RunConfig):
    """Fixed-order (theorem, params) grid for the verify command."""
    if cfg.theorem == "all":
        ids = list(TheoremId)
    else:
        ids = [_THEOREM_TOKENS[cfg.theorem]]

    s_given = cfg.spins.get("s")
    sp_given = cfg.spins.get("sprime")
    ell_given = cfg.spins.get("ell")
    if cfg.mode == "spinsame":
        if s_given is not None and sp_given is not None and s_given != sp_given:
            raise DomainError("spinsame mode needs --sprime equal to --s")
        if s_given is None and sp_given is not None:
            s_given = sp_given

    two_smax = cfg.spin_max.twice
    two_lmax = cfg.ell_max.twice
    if two_smax < 0 or two_lmax < 0:
        raise DomainError("spin-max and ell-max must be non-negative")

    def spin_range():
        if s_given is not None:
            return [s_given.twice]
        return range(-two_smax, two_smax + 1)

    for tid in ids:
        for two_s in spin_range():
            if cfg.mode == "spinsame":
                sp_list = [two_s]
            elif sp_given is not None:
                sp_list = [sp_given.twice]
            else:
                lo = -two_smax + ((two_s - two_smax) % 2)
                sp_list = range(lo, two_smax + 1, 2)
            for two_sp in sp_list:
                if (two_s - two_sp) % 2:
                    raise DomainError(
                        f"spins must differ by an integer, got "
                        f"s={HalfInt(two_s)}, s'={HalfInt(two_sp)}"
                    )
                two_l_lo = max(abs(two_s), abs(two_sp))
                if ell_given is not None:
                    if (ell_given.twice - two_s) % 2 or ell_given.twice < two_l_lo:
                        raise DomainError(
                            f"--ell {ell_given} is invalid for s={HalfInt(two_s)}, "
                            f"s'={HalfInt(two_sp)}"
                        )
                    ells = [ell_given.twice]
                else:
                    start = two_l_lo + ((two_s - two_l_lo) % 2)
                    ells = range(start, two_lmax + 1, 2)
                for two_ell in ells:
                    yield tid, TheoremParams(HalfInt(two_s), HalfInt(two_sp),
                                             HalfInt(two_ell))


def cmd_verify(cfg: RunConfig) -> tuple[int, list[str]]:
    lines = []
    all_passed = True
    for tid, params in _verify_cells(cfg):
        tol = (theorems.DEFAULT_TOL[cfg.mode][tid]
               * (params.ell.twice + 1) * cfg.tol_scale)
        report = theorems.verify(tid, params, cfg.samples, tol, cfg.seed,
                                 cfg.mode)
        all_passed = all_passed and report.passed
        d, dp = report.worst_case
        lines.append(_json_line([
            ("theorem", tid.value),
            ("s", str(params.s)), ("sprime", str(params.sprime)),
            ("ell", str(params.ell)), ("mode", cfg.mode),
            ("samples", report.samples),
            ("max_abs_residual", report.max_abs_residual),
            ("tolerance", report.tolerance),
            ("pass", report.passed),
            ("worst_theta", d.theta), ("worst_phi", d.phi),
            ("worst_theta_p", dp.theta), ("worst_phi_p", dp.phi),
        ]))
    return (0 if all_passed else 1), lines


def cmd_sweep(cfg: RunConfig) -> tuple[int, list[str]]:
    tid = _THEOREM_TOKENS[cfg.theorem]
    s = cfg.spins["s"]
    ell = cfg.spins["ell"]
    params = theorem_params(s, s, ell)
    rows = []
    for theta in cfg.thetas:
        d = Direction(theta, 0.0)
        total = (theorems.lhs_sum(tid, params, d, d)
                 * kernels.spin_phase(-s.twice))
        ref = theorems.spinsame_rhs(tid, s, ell, d)
        rows.append((d.theta, total.real, total.imag, ref.real, ref.imag,
                     abs(total - ref)))

    if cfg.output_format == "json":
        lines = [
            _json_line([
                ("theta", r[0]), ("lhs_re", r[1]), ("lhs_im", r[2]),
                ("rhs_re", r[3]), ("rhs_im", r[4]), ("abs_err", r[5]),
            ])
            for r in rows
        ]
    else:
        lines = ["theta,lhs_re,lhs_im,rhs_re,rhs_im,abs_err"]
        lines += [",".join(_f17(v) for v in r) for r in rows]
    return 0, lines


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        handler = {
            "eval": cmd_eval,
            "euler": cmd_euler,
            "verify": cmd_verify,
            "sweep": cmd_sweep,
        }[cfg.command]
        status, lines = handler(cfg)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(lines, cfg.output_path)
    return status


def entry() -> None:  # console-script target
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
