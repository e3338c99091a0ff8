"""Command-line front end: ``mubell field|mub|bell|verify``.

Exit codes: 0 when every exact check passes, 1 when a mathematical check
fails, 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable

from . import bell, mub, suite
from .cyclotomic import ScaledMatrix
from .galois import (
    MAX_FIELD_ORDER,
    BasisSpec,
    FieldError,
    GaloisField,
    dual_basis,
    find_selfdual,
    galois_field,
    is_prime,
    normal_basis,
    polynomial_basis,
    selfdual_exists,
)
from .pauli import conductor_for

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2

DEFAULT_MAX_DIM = {"mub": 32, "bell": 16, "verify": 32}
TABLE_BOUND = 81


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    p: int | None
    n: int
    basis_kind: str | None
    mode: str
    fmt: str
    output: str | None
    level: str
    verify: bool

    @property
    def q(self) -> int | None:
        return None if self.p is None else self.p**self.n


def max_dim(command: str) -> int:
    raw = os.environ.get("MUBELL_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM[command]
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"MUBELL_MAX_DIM must be an integer, got {raw!r}") from None
    if value < 2:
        raise ConfigError("MUBELL_MAX_DIM must be at least 2")
    return value


def validate(cfg: RunConfig) -> None:
    if cfg.p is None:
        if cfg.command != "verify":
            raise ConfigError(f"{cfg.command} needs -p")
        return
    if not is_prime(cfg.p):
        raise ConfigError(f"{cfg.p} is not prime")
    if cfg.n < 1:
        raise ConfigError("n must be at least 1")
    q = cfg.q
    if q > MAX_FIELD_ORDER:
        raise ConfigError(f"p^n = {q} exceeds the supported field order {MAX_FIELD_ORDER}")
    if cfg.mode == bell.SINGLE_PARTICLE and q != 4:
        raise ConfigError("single-particle mode requires p^n = 4")
    if cfg.basis_kind == "selfdual" and not selfdual_exists(cfg.p, cfg.n):
        raise ConfigError(f"GF({cfg.p}^{cfg.n}) has no self-dual basis; use almost-selfdual")
    if cfg.command == "verify" and cfg.level == "exhaustive":
        if q > suite.FIELD_LEVEL_BOUND:
            raise ConfigError(f"p^n = {q} is above the exhaustive bound {suite.FIELD_LEVEL_BOUND}")
    elif cfg.command in ("mub", "bell", "verify") and q > max_dim(cfg.command):
        raise ConfigError(f"p^n = {q} is above the matrix bound {max_dim(cfg.command)} (set MUBELL_MAX_DIM)")


# ---------------------------------------------------------------------------
# field
# ---------------------------------------------------------------------------


def _basis_json(b: BasisSpec) -> dict:
    out = {
        "kind": b.kind,
        "elements": [str(e) for e in b],
        "coefficients": [list(e.coeffs) for e in b],
        "self_traces": b.self_traces(),
    }
    if b.exception is not None:
        out["exception"] = b.exception
    return out


def _selected_basis(f: GaloisField, kind: str | None) -> BasisSpec:
    if kind == "polynomial":
        return polynomial_basis(f)
    return find_selfdual(f)


def field_report(cfg: RunConfig) -> dict:
    f = galois_field(cfg.p, cfg.n)
    poly = polynomial_basis(f)
    bases = {
        "polynomial": _basis_json(poly),
        "polynomial_dual": _basis_json(dual_basis(poly)),
        "normal": _basis_json(normal_basis(f)),
    }
    sd = find_selfdual(f)
    bases[sd.kind] = _basis_json(sd)
    report = {
        "field": f.describe(),
        "p": f.p,
        "n": f.n,
        "modulus": list(f.modulus),
        "primitive": list(f.primitive.coeffs),
        "selected_basis": _basis_json(_selected_basis(f, cfg.basis_kind)),
        "bases": bases,
    }
    if f.q <= TABLE_BOUND:
        report["elements"] = [
            {
                "element": str(a),
                "coefficients": list(a.coeffs),
                "trace": a.trace(),
                "character": str(f.additive_character(a)),
            }
            for a in f.enumeration
        ]
    return report


def field_text(report: dict) -> str:
    lines = [report["field"]]
    for name, b in report["bases"].items():
        extra = f" exception={b['exception']}" if "exception" in b else ""
        lines.append(f"{name}: {{{', '.join(b['elements'])}}} self-traces={b['self_traces']}{extra}")
    for row in report.get("elements", []):
        lines.append(f"{row['element']:>8s}  tr={row['trace']}  chi={row['character']}")
    return "\n".join(lines)


def field_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["element", "coefficients", "trace", "character"])
    for row in report.get("elements", []):
        w.writerow([row["element"], " ".join(map(str, row["coefficients"])), row["trace"], row["character"]])
    return buf.getvalue()


def cmd_field(cfg: RunConfig) -> tuple[int, str]:
    report = field_report(cfg)
    return EXIT_OK, render(report, cfg.fmt, field_text, field_csv)


# ---------------------------------------------------------------------------
# mub
# ---------------------------------------------------------------------------


def mub_text(report: dict) -> str:
    v = report["verification"]
    lines = [
        f"GF({report['p']}^{report['n']}): {len(report['bases'])} bases",
        f"pairs verified: {v['pairs_verified']}, exact: {v['exact']}",
    ]
    for label, states in zip(report["labels"], report["bases"]):
        lines.append(f"[{label}]")
        for k, s in enumerate(states):
            lines.append(f"  {k}: scale={s['scale']} " + " ".join(s["entries"]))
    return "\n".join(lines)


def mub_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["basis", "state", "component", "scale", "entry"])
    for label, states in zip(report["labels"], report["bases"]):
        for k, s in enumerate(states):
            for c, z in enumerate(s["entries"]):
                w.writerow([label, k, c, s["scale"], z])
    return buf.getvalue()


def cmd_mub(cfg: RunConfig) -> tuple[int, str]:
    f = galois_field(cfg.p, cfg.n)
    table = mub.mub_table(f, verify=False)
    code = EXIT_OK
    if cfg.verify:
        try:
            table.verify()
        except mub.ConstructionError as exc:
            print(f"verification failed: {exc}", file=sys.stderr)
            code = EXIT_CHECK_FAILED
    report = table.to_json()
    if not cfg.verify:
        report["verification"]["exact"] = None
    return code, render(report, cfg.fmt, mub_text, mub_csv)


# ---------------------------------------------------------------------------
# bell
# ---------------------------------------------------------------------------


def _vector_json(vec) -> dict:
    return {"scale": vec.scale, "entries": [str(z) for z in vec.entries()]}


def _multiqudit_report(f: GaloisField, verify: bool) -> dict:
    q = f.q
    states = bell.full_basis(f)
    target = bell.maximally_mixed(f)
    records = []
    for s in states:
        sym = bell.symmetry_class(s.label)
        rec = {
            "label": str(s.label),
            "symmetry": {
                "kind": sym.kind,
                "phase": str(sym.phase),
                "swap_eigenstate": sym.swap_eigenstate,
            },
            "vector": _vector_json(s.vector),
            "schmidt_check": bool(
                bell.reduced_density(s, "A") == target and bell.reduced_density(s, "B") == target
            ),
        }
        name = bell.qubit_name(s)
        if name is not None:
            rec["name"] = name
        records.append(rec)
    census = bell.symmetry_census(f)
    report = {
        "field": f.describe(),
        "mode": bell.MULTIQUDIT,
        "conventions": {
            "construction": "amplitudes = matrix elements of Lambda(mu, nu) = Z_mu X_{nu mu}",
            "labels": "PsiTilde(mu) for all mu, then Psi(mu, nu) for mu != 0",
            "index": "pos(lam_A) * q + pos(lam_B), field enumeration order",
            "conductor": conductor_for(f.p),
        },
        "states": records,
        "census": dict(zip(("sym", "antisym", "none"), census)),
    }
    if verify:
        eye = ScaledMatrix.identity(f.p, conductor_for(f.p), q * q)
        checks = {
            "gram_identity": bell.gram(states) == eye,
            "completeness": bell.projector_total(states) == eye,
            "cross_overlaps_vanish": bell.cross_overlaps_vanish(f),
            "reduced_density": all(r["schmidt_check"] for r in records),
            "projector_sum": all(bell.projector_sum_shifted(nu).holds for nu in f.enumeration),
            "projector_sum_tilde": bell.projector_sum_tilde(f).holds,
        }
        report["checks"] = checks
        report["literal_forms"] = {
            "projector_sum_over_lambda_states": [bell.projector_sum(nu).holds for nu in f.enumeration],
            "labelwise_construction_agreement": sum(
                e.literal_phase is not None for e in bell.construction_equivalence(f)
            ),
        }
    return report


def _single_particle_report(verify: bool) -> dict:
    records = []
    states = bell.ququart_states()
    for (m, n), vec in states:
        phase = bell.swap_phase(vec, 4)
        records.append(
            {
                "label": f"Psi[{m},{n}]",
                "symmetry": {
                    "kind": bell.swap_kind(phase),
                    "phase": None if phase is None else str(phase),
                    "swap_eigenstate": phase is not None,
                },
                "vector": _vector_json(vec),
                "schmidt_check": bool(
                    bell.reduced_density(vec, "A", 4) == bell.reduced_density(vec, "B", 4)
                    and bell.reduced_density(vec, "A", 4) == bell.maximally_mixed(galois_field(2, 2))
                ),
            }
        )
    census = bell.symmetry_census(galois_field(2, 2), bell.SINGLE_PARTICLE)
    report = {
        "field": "Z_4 (single particle, d = 4)",
        "mode": bell.SINGLE_PARTICLE,
        "conventions": {
            "construction": "(1/2) sum_l i^(m l) |l>|l + n mod 4>",
            "index": "l_A * 4 + l_B",
            "conductor": 4,
        },
        "states": records,
        "census": dict(zip(("sym", "antisym", "none"), census)),
    }
    if verify:
        vecs = [v for _, v in states]
        eye = ScaledMatrix.identity(2, 4, 16)
        report["checks"] = {
            "gram_identity": bell.gram(vecs) == eye,
            "completeness": bell.projector_total(vecs) == eye,
            "reduced_density": all(r["schmidt_check"] for r in records),
        }
    return report


def bell_text(report: dict) -> str:
    c = report["census"]
    lines = [f"{report['field']} [{report['mode']}]", f"census: sym={c['sym']} antisym={c['antisym']} none={c['none']}"]
    for r in report["states"]:
        name = f" = {r['name']}" if "name" in r else ""
        lines.append(f"{r['label']}{name}: {r['symmetry']['kind']}  scale={r['vector']['scale']} " + " ".join(r["vector"]["entries"]))
    for k, v in report.get("checks", {}).items():
        lines.append(f"{'PASS' if v else 'FAIL'} {k}")
    return "\n".join(lines)


def bell_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["label", "symmetry", "scale", "component", "entry"])
    for r in report["states"]:
        for c, z in enumerate(r["vector"]["entries"]):
            w.writerow([r["label"], r["symmetry"]["kind"], r["vector"]["scale"], c, z])
    return buf.getvalue()


def cmd_bell(cfg: RunConfig) -> tuple[int, str]:
    if cfg.mode == bell.SINGLE_PARTICLE:
        report = _single_particle_report(cfg.verify)
    else:
        report = _multiqudit_report(galois_field(cfg.p, cfg.n), cfg.verify)
    ok = all(report.get("checks", {}).values())
    return (EXIT_OK if ok else EXIT_CHECK_FAILED), render(report, cfg.fmt, bell_text, bell_csv)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    if cfg.p is None:
        fields = [galois_field(p, n) for p, n in suite.FAST_FIELDS]
    else:
        fields = [galois_field(cfg.p, cfg.n)]
    exhaustive = cfg.level == "exhaustive"
    bound = suite.MATRIX_LEVEL_BOUND if exhaustive else max_dim("verify")
    results = suite.run(fields, exhaustive, bound)
    ok = suite.all_passed(results)
    report = {"level": cfg.level, "passed": ok, "results": [r.to_json() for r in results]}

    def text(_: dict) -> str:
        tail = "all invariants pass" if ok else "some invariants FAILED"
        return "\n".join([r.line() for r in results] + [tail])

    def as_csv(_: dict) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["status", "field", "name", "detail"])
        for r in results:
            w.writerow([r.status, r.field, r.name, r.detail])
        return buf.getvalue()

    return (EXIT_OK if ok else EXIT_CHECK_FAILED), render(report, cfg.fmt, text, as_csv)


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------


def render(report: dict, fmt: str, text: Callable[[dict], str], as_csv: Callable[[dict], str]) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return as_csv(report)
    return text(report).rstrip("\n") + "\n"


COMMANDS = {"field": cmd_field, "mub": cmd_mub, "bell": cmd_bell, "verify": cmd_verify}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, help="field characteristic (prime)")
    common.add_argument("-n", type=int, default=1, help="extension degree (default 1)")
    common.add_argument("--basis", choices=["polynomial", "selfdual", "almost-selfdual"], dest="basis_kind")
    common.add_argument("--mode", choices=[bell.MULTIQUDIT, bell.SINGLE_PARTICLE], default=bell.MULTIQUDIT)
    common.add_argument("--format", choices=["json", "csv", "text"], dest="fmt")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--level", choices=["fast", "exhaustive"], default="fast")
    common.add_argument("--no-verify", action="store_false", dest="verify", help="skip exact verification")

    parser = argparse.ArgumentParser(prog="mubell", description="Exact MUB and Bell-basis constructions over GF(p^n).")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("field", parents=[common], help="field description, bases, trace and character tables")
    sub.add_parser("mub", parents=[common], help="the p^n + 1 mutually unbiased bases")
    sub.add_parser("bell", parents=[common], help="Bell basis, symmetry census and identity checks")
    sub.add_parser("verify", parents=[common], help="run the invariant suite")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fmt = args.fmt or ("text" if args.command == "verify" else "json")
    p = args.p
    if p is None and args.command == "bell" and args.mode == bell.SINGLE_PARTICLE:
        p, n = 2, 2
    else:
        n = args.n
    return RunConfig(args.command, p, n, args.basis_kind, args.mode, fmt, args.output, args.level, args.verify)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        validate(cfg)
        code, out = COMMANDS[cfg.command](cfg)
    except (ConfigError, FieldError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except mub.ConstructionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
