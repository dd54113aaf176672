"""Command-line interface.

Subcommands: classify, counterexample, verify, sweep.  Outputs are
deterministic for fixed arguments (identical bytes run to run).  Exit
codes: 0 success, 1 the theory predicts failure or a check failed,
2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .algebra import COMPLEX, QUATERNION, HypercomplexScalar, cplx, format_scalar, quat
from .characterize import (
    COUNTEREXAMPLE_EXISTS,
    CRITERION_TOL,
    RESIDUAL_TOL,
    classify_heyde,
    classify_skitovich_darmois,
    construct_heyde_counterexample,
    construct_proposition1,
    construct_sd_counterexample,
    default_nonscalar_shape,
    gaussian_independence_criterion,
    independence_residual,
    symmetry_residual,
)
from .gaussian import is_narrow_sense, law_from_dict, law_to_dict
from .montecarlo import (
    CONSISTENT_WITH_NULL,
    conditional_symmetry_test,
    cross_covariance_test,
    distance_covariance_test,
    sample_forms,
    sample_linear_forms,
)

_TERM = re.compile(r"([+-]?)((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?([ijk]?)")


def parse_scalar(text: str, kind: str | None = None) -> HypercomplexScalar:
    """Parse 'a+bi' or 'a+bi+cj+dk'; bare units like 'i' or '-k' work too."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    pos = 0
    seen: dict[str, float] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and not m.group(3)):
            raise ValueError(f"cannot parse scalar {text!r} at position {pos}")
        sign, num, unit = m.groups()
        if pos > 0 and not sign:
            raise ValueError(f"missing sign before term at position {pos} in {text!r}")
        value = float(num) if num is not None else 1.0
        if sign == "-":
            value = -value
        if unit in seen:
            label = unit if unit else "real"
            raise ValueError(f"duplicate {label} term in scalar {text!r}")
        seen[unit] = value
        pos = m.end()
    has_jk = "j" in seen or "k" in seen
    inferred = QUATERNION if has_jk else COMPLEX
    if kind is None:
        kind = inferred
    if kind == COMPLEX and has_jk:
        raise ValueError(f"scalar {text!r} has j/k terms but kind is complex")
    if kind == COMPLEX:
        return cplx(seen.get("", 0.0), seen.get("i", 0.0))
    return quat(seen.get("", 0.0), seen.get("i", 0.0),
                seen.get("j", 0.0), seen.get("k", 0.0))


def _load_shape(arg: str, dim: int) -> np.ndarray:
    if arg == "preset":
        return default_nonscalar_shape(dim)
    raw = json.loads(Path(arg).read_text())
    if isinstance(raw, dict):
        raw = raw["shape"]
    matrix = np.asarray(raw, dtype=float)
    if matrix.shape != (dim, dim):
        raise ValueError(f"matrix in {arg} has shape {matrix.shape}, expected ({dim}, {dim})")
    return matrix


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(payload.keys())
    writer.writerow(payload.values())
    sys.stdout.write(buf.getvalue())


def cmd_classify(args) -> int:
    s = parse_scalar(args.alpha, args.kind)
    verdict = classify_heyde(s) if args.theorem == "heyde" else classify_skitovich_darmois(s)
    _emit(
        {
            "alpha": format_scalar(s),
            "kind": s.kind,
            "theorem": args.theorem,
            "outcome": verdict.outcome,
            "rationale": verdict.rationale,
        },
        args.format,
    )
    return 0


def cmd_counterexample(args) -> int:
    s = parse_scalar(args.alpha, args.kind)
    verdict = classify_heyde(s) if args.mode == "heyde" else classify_skitovich_darmois(s)
    if verdict.outcome != COUNTEREXAMPLE_EXISTS:
        _emit(
            {
                "alpha": format_scalar(s),
                "mode": args.mode,
                "outcome": verdict.outcome,
                "error": f"no counterexample for this alpha: {verdict.rationale}",
            },
            args.format,
        )
        return 1
    B = _load_shape(args.B, s.dim)
    if args.mode == "heyde":
        law1, law2 = construct_heyde_counterexample(s, B)
        residual = symmetry_residual(law1, law2, s)
    else:
        law1, law2 = construct_sd_counterexample(s, B)
        residual = independence_residual([law1, law2], [1, 1], [1, s])
    criterion = gaussian_independence_criterion([law1, law2], [1, 1], [1, s])
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for idx, law in enumerate((law1, law2), start=1):
        path = out_dir / f"law{idx}.json"
        path.write_text(json.dumps(law_to_dict(law), indent=2) + "\n")
        files.append(str(path))
    _emit(
        {
            "alpha": format_scalar(s),
            "mode": args.mode,
            "outcome": verdict.outcome,
            "criterion_norm": float(np.linalg.norm(criterion)),
            "residual": residual,
            "narrow_sense": [is_narrow_sense(law1), is_narrow_sense(law2)],
            "law_files": files,
        },
        args.format,
    )
    return 0


def _check(name: str, value, passed: bool, threshold=None) -> dict:
    entry = {"check": name, "value": value, "pass": bool(passed)}
    if threshold is not None:
        entry["threshold"] = threshold
    return entry


def _verify_counterexample(args, mode: str) -> tuple[list[dict], dict]:
    s = parse_scalar(args.alpha, args.kind)
    classify = classify_heyde if mode == "heyde" else classify_skitovich_darmois
    verdict = classify(s)
    header = {"mode": mode, "alpha": format_scalar(s), "outcome": verdict.outcome}
    if verdict.outcome != COUNTEREXAMPLE_EXISTS:
        raise _PredictedFailure(
            {**header, "error": f"no counterexample for this alpha: {verdict.rationale}"}
        )
    B = _load_shape(args.B, s.dim)
    n = args.n if args.n is not None else (1000 if mode == "heyde" else 200000)
    checks = []
    if mode == "heyde":
        law1, law2 = construct_heyde_counterexample(s, B)
        residual = symmetry_residual(law1, law2, s)
        pair = sample_forms(law1, law2, [1, 1], [1, s], min(n, 2000), args.seed)
        result = conditional_symmetry_test(pair, args.permutations, args.seed,
                                           args.alpha_level)
        checks.append(_check("symmetry_residual", residual, residual < RESIDUAL_TOL,
                             RESIDUAL_TOL))
        checks.append(_check("conditional_symmetry_p", result.p_value,
                             result.verdict == CONSISTENT_WITH_NULL, args.alpha_level))
    else:
        law1, law2 = construct_sd_counterexample(s, B)
        residual = independence_residual([law1, law2], [1, 1], [1, s])
        criterion = float(np.linalg.norm(
            gaussian_independence_criterion([law1, law2], [1, 1], [1, s])))
        checks.append(_check("criterion_norm", criterion, criterion < CRITERION_TOL,
                             CRITERION_TOL))
        checks.append(_check("independence_residual", residual,
                             residual < RESIDUAL_TOL, RESIDUAL_TOL))
        z_pair = sample_forms(law1, law2, [1, 1], [1, s], n, args.seed)
        z_result = cross_covariance_test(z_pair, args.z_threshold)
        checks.append(_check("cross_covariance_z", z_result.statistic,
                             z_result.verdict == CONSISTENT_WITH_NULL,
                             args.z_threshold))
        d_pair = sample_forms(law1, law2, [1, 1], [1, s], min(n, 2000), args.seed)
        d_result = distance_covariance_test(d_pair, args.permutations, args.seed,
                                            args.alpha_level)
        checks.append(_check("distance_covariance_p", d_result.p_value,
                             d_result.verdict == CONSISTENT_WITH_NULL,
                             args.alpha_level))
    checks.append(_check("wide_sense_inputs",
                         [not is_narrow_sense(law1), not is_narrow_sense(law2)],
                         not (is_narrow_sense(law1) or is_narrow_sense(law2))))
    return checks, header


def _parse_scalar_list(text: str, kind: str | None) -> list[HypercomplexScalar]:
    tokens = [t for t in text.split(",") if t.strip()]
    if not tokens:
        raise ValueError("empty scalar list")
    parsed = [parse_scalar(t, kind) for t in tokens]
    if kind is None and any(p.kind == QUATERNION for p in parsed):
        parsed = [parse_scalar(t, QUATERNION) for t in tokens]
    return parsed


def _verify_prop1(args) -> tuple[list[dict], dict]:
    betas = _parse_scalar_list(args.betas, args.kind)
    sigmas = [float(t) for t in args.sigmas.split(",")]
    dim = betas[0].dim
    A = _load_shape(args.A, dim)
    laws = construct_proposition1(sigmas, betas, A)
    ones = [1] * len(laws)
    criterion = float(np.linalg.norm(
        gaussian_independence_criterion(laws, ones, betas)))
    residual = independence_residual(laws, ones, betas)
    n = args.n if args.n is not None else 200000
    pair = sample_linear_forms(laws, ones, betas, n, args.seed)
    z_result = cross_covariance_test(pair, args.z_threshold)
    d_pair = sample_linear_forms(laws, ones, betas, min(n, 2000), args.seed)
    d_result = distance_covariance_test(d_pair, args.permutations, args.seed,
                                        args.alpha_level)
    checks = [
        _check("criterion_norm", criterion, criterion < CRITERION_TOL, CRITERION_TOL),
        _check("independence_residual", residual, residual < RESIDUAL_TOL, RESIDUAL_TOL),
        _check("cross_covariance_z", z_result.statistic,
               z_result.verdict == CONSISTENT_WITH_NULL, args.z_threshold),
        _check("distance_covariance_p", d_result.p_value,
               d_result.verdict == CONSISTENT_WITH_NULL, args.alpha_level),
        _check("wide_sense_inputs", [not is_narrow_sense(law) for law in laws],
               not any(is_narrow_sense(law) for law in laws)),
    ]
    header = {"mode": "prop1", "sigmas": sigmas,
              "betas": [format_scalar(b) for b in betas]}
    return checks, header


class _PredictedFailure(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("error", ""))
        self.payload = payload


def cmd_verify(args) -> int:
    try:
        if args.mode == "prop1":
            checks, header = _verify_prop1(args)
        else:
            checks, header = _verify_counterexample(args, args.mode)
    except _PredictedFailure as exc:
        print(json.dumps(exc.payload, indent=2))
        return 1
    ok = all(c["pass"] for c in checks)
    print(json.dumps({**header, "checks": checks, "pass": ok}, indent=2))
    return 0 if ok else 1


@dataclass(frozen=True)
class SweepSpec:
    """Grid sweep over the real/first-imaginary plane of alpha."""

    kind: str
    lo: float
    hi: float
    step: float
    checks: tuple[str, ...]
    seed: int
    n: int
    permutations: int

    def points(self):
        count = int(round((self.hi - self.lo) / self.step))
        axis = [self.lo + k * self.step for k in range(count + 1)]
        for re_part in axis:
            for im_part in axis:
                if abs(re_part) < 1e-12 and abs(im_part) < 1e-12:
                    continue
                yield re_part, im_part


_SWEEP_HEADER = ["re", "im1", "im2", "im3", "sd_verdict", "heyde_verdict",
                 "criterion_norm", "residual", "p_value"]


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def run_sweep(spec: SweepSpec) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_SWEEP_HEADER)
    for re_part, im_part in spec.points():
        if spec.kind == QUATERNION:
            s = quat(re_part, im_part)
        else:
            s = cplx(re_part, im_part)
        sd = classify_skitovich_darmois(s)
        heyde = classify_heyde(s)
        criterion_norm = residual = p_value = ""
        if sd.outcome == COUNTEREXAMPLE_EXISTS and (
            "residual" in spec.checks or "montecarlo" in spec.checks
        ):
            law1, law2 = construct_sd_counterexample(s, default_nonscalar_shape(s.dim))
            if "residual" in spec.checks:
                matrix = gaussian_independence_criterion([law1, law2], [1, 1], [1, s])
                criterion_norm = _fmt(float(np.linalg.norm(matrix)))
                residual = _fmt(independence_residual([law1, law2], [1, 1], [1, s]))
            if "montecarlo" in spec.checks:
                pair = sample_forms(law1, law2, [1, 1], [1, s],
                                    min(spec.n, 2000), spec.seed)
                result = distance_covariance_test(pair, spec.permutations, spec.seed)
                p_value = _fmt(result.p_value)
        writer.writerow([
            _fmt(re_part), _fmt(im_part), _fmt(0.0), _fmt(0.0),
            sd.outcome, heyde.outcome, criterion_norm, residual, p_value,
        ])
    return buf.getvalue()


def cmd_sweep(args) -> int:
    lo_text, _, hi_text = args.grid.partition(":")
    if not hi_text:
        raise ValueError(f"grid must look like '-2:2', got {args.grid!r}")
    lo, hi = float(lo_text), float(hi_text)
    if not (hi > lo):
        raise ValueError("grid upper bound must exceed lower bound")
    if args.step <= 0:
        raise ValueError("step must be positive")
    checks = tuple(t.strip() for t in args.checks.split(",") if t.strip())
    for name in checks:
        if name not in ("classify", "residual", "montecarlo"):
            raise ValueError(f"unknown check {name!r}")
    spec = SweepSpec(kind=args.kind, lo=lo, hi=hi, step=args.step, checks=checks,
                     seed=args.seed, n=args.n if args.n is not None else 2000,
                     permutations=args.permutations)
    text = run_sweep(spec)
    if args.out:
        Path(args.out).write_text(text)
        rows = text.count("\n") - 1
        print(json.dumps({"rows": rows, "out": args.out}))
    else:
        sys.stdout.write(text)
    return 0


def _add_common_scalar_args(p) -> None:
    p.add_argument("--alpha", required=True,
                   help="scalar like '-2', '1+1i', '1+0i+0j-1k'; use --alpha=-2 "
                        "for values starting with a minus sign")
    p.add_argument("--kind", choices=[COMPLEX, QUATERNION], default=None,
                   help="force the scalar kind (default: inferred from the text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypergauss",
        description="Classify, construct, and test Gaussian characterization "
                    "counterexamples over complex and quaternion scalars.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="decide the verdict for a coefficient alpha")
    _add_common_scalar_args(p)
    p.add_argument("--theorem", choices=["sd", "heyde"], default="sd",
                   help="sd: independence of two forms; heyde: conditional symmetry")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("counterexample",
                       help="construct wide-sense laws witnessing the failure")
    _add_common_scalar_args(p)
    p.add_argument("--mode", choices=["sd", "heyde"], default="sd")
    p.add_argument("--B", default="preset",
                   help="'preset' or a JSON file with the shape matrix B")
    p.add_argument("--out", default=".", help="directory for law1.json/law2.json")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify",
                       help="re-derive and Monte Carlo test a construction")
    p.add_argument("mode", choices=["sd", "heyde", "prop1"])
    p.add_argument("--alpha", help="coefficient for sd/heyde modes")
    p.add_argument("--kind", choices=[COMPLEX, QUATERNION], default=None)
    p.add_argument("--sigmas", help="comma list of positive reals (prop1)")
    p.add_argument("--betas", help="comma list of scalars (prop1)")
    p.add_argument("--B", default="preset")
    p.add_argument("--A", default="preset", help="shape matrix for prop1")
    p.add_argument("--n", type=int, default=None,
                   help="sample size (default 200000; 1000 for heyde)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--permutations", type=int, default=199)
    p.add_argument("--z-threshold", type=float, default=4.0, dest="z_threshold")
    p.add_argument("--alpha-level", type=float, default=0.01, dest="alpha_level")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="classify a grid in the (re, im1) plane")
    p.add_argument("--kind", choices=[COMPLEX, QUATERNION], default=COMPLEX)
    p.add_argument("--grid", default="-2:2",
                   help="axis range lo:hi for re and im1; use --grid=-2:2 "
                        "when the range starts with a minus sign")
    p.add_argument("--step", type=float, default=0.5)
    p.add_argument("--checks", default="classify,residual",
                   help="comma subset of classify,residual,montecarlo")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=None,
                   help="Monte Carlo sample size (default 2000)")
    p.add_argument("--permutations", type=int, default=199)
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.mode in ("sd", "heyde") and not args.alpha:
            parser.error("verify sd/heyde needs --alpha")
        if args.mode == "prop1" and (not args.sigmas or not args.betas):
            parser.error("verify prop1 needs --sigmas and --betas")
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError, KeyError,
            json.JSONDecodeError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
