"""Command-line entry point.

One executable, `entorder`, exposes the library with machine-readable
output.  Spectra are given inline in the text form (`0.5,0.25,0.25`, tails
as `head...geom(first,ratio)`), as JSON objects, or via `@path` indirection
for long vectors.  Exit codes: 0 success, 2 invalid input, 3 size-cap
exceeded.  Diagnostics go to stderr only; identical invocations produce
byte-identical stdout.

Defaults may be set in a key=value config file passed with --config or named
by the ENTORDER_CONFIG environment variable; command-line flags win over the
file.  Recognized keys: tau_norm, tau_zero, tau_cmp, size_cap, m_max,
catalyst_dim, grid_steps, format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace

from . import catalysis, genericity, sampling
from .errors import (
    EntOrderError,
    InternalInconsistency,
    InvalidInput,
    SizeCapExceeded,
)
from .majorization import compare
from .spectra import (
    SchmidtSpectrum,
    Tolerances,
    format_spectrum,
    g17,
    parse_spectrum,
    schmidt_number,
    schmidt_spectrum,
    spectrum_to_json,
)

CONFIG_ENV_VAR = "ENTORDER_CONFIG"

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_SIZE_CAP = 3


@dataclass(frozen=True)
class Config:
    tolerances: Tolerances = Tolerances()
    size_cap: int = catalysis.DEFAULT_SIZE_CAP
    m_max: int = 3
    catalyst_dim: int = 3
    grid_steps: int = 100
    output_format: str | None = None

    def __post_init__(self):
        if self.size_cap < 1 or self.m_max < 1 or self.grid_steps < 2:
            raise InvalidInput("config values must be positive")
        if self.catalyst_dim < 2:
            raise InvalidInput("catalyst_dim must be at least 2")
        if self.output_format not in (None, "json", "csv", "text"):
            raise InvalidInput(f"unknown format {self.output_format!r}")


def load_config(path: str | None) -> Config:
    """Read a key=value config file; missing path means library defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    if path is None:
        return Config()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InvalidInput(f"cannot read config {path}: {exc}") from exc
    tol_kwargs = {}
    cfg_kwargs = {}
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidInput(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        try:
            if key in ("tau_norm", "tau_zero", "tau_cmp"):
                tol_kwargs[key] = float(value)
            elif key in ("size_cap", "m_max", "catalyst_dim", "grid_steps"):
                cfg_kwargs[key] = int(value)
            elif key == "format":
                cfg_kwargs["output_format"] = value
            else:
                raise InvalidInput(f"{path}:{lineno}: unknown key {key!r}")
        except ValueError as exc:
            raise InvalidInput(f"{path}:{lineno}: {exc}") from exc
    return Config(tolerances=Tolerances(**tol_kwargs), **cfg_kwargs)


def _read_arg(value: str) -> str:
    """Resolve @path indirection for long inline arguments."""
    if value.startswith("@"):
        try:
            with open(value[1:], "r", encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InvalidInput(f"cannot read {value[1:]}: {exc}") from exc
    return value


def _spectrum_arg(value: str, tol: Tolerances) -> SchmidtSpectrum:
    return parse_spectrum(_read_arg(value), tol=tol)


def _matrix_arg(value: str):
    """Parse a JSON matrix; entries are numbers or [re, im] pairs."""
    text = _read_arg(value)
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad matrix JSON: {exc}") from exc
    if not isinstance(rows, list) or not rows:
        raise InvalidInput("matrix JSON must be a non-empty array of rows")

    def entry(x):
        if isinstance(x, (int, float)):
            return complex(x)
        if isinstance(x, list) and len(x) == 2:
            return complex(x[0], x[1])
        raise InvalidInput(f"bad matrix entry {x!r}: use a number or [re, im]")

    return [[entry(x) for x in row] for row in rows]


def _emit(out, text: str) -> None:
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _emit_json(out, payload) -> None:
    _emit(out, json.dumps(payload, indent=2))


def _warn_adjusted(err, **specs) -> None:
    for name, spec in specs.items():
        if spec.adjusted:
            print(
                f"warning: spectrum {name!r} was reordered or renormalized "
                "on ingestion",
                file=err,
            )


def _resolve_format(args, config: Config, default: str) -> str:
    return args.format or config.output_format or default


def _csv_bool(flag: bool) -> str:
    return "true" if flag else "false"


# --- subcommand handlers --------------------------------------------------


def _cmd_spectrum(args, config, out, err) -> int:
    spec = schmidt_spectrum(_matrix_arg(args.matrix), config.tolerances)
    fmt = _resolve_format(args, config, "text")
    if fmt == "json":
        _emit_json(out, spectrum_to_json(spec))
    else:
        _emit(out, format_spectrum(spec))
    return EXIT_OK


def _cmd_compare(args, config, out, err) -> int:
    tol = config.tolerances
    if args.tol is not None:
        tol = replace(tol, tau_cmp=args.tol)
    a = _spectrum_arg(args.a, tol)
    b = _spectrum_arg(args.b, tol)
    _warn_adjusted(err, a=a, b=b)
    verdict = compare(a, b, tol)
    fmt = _resolve_format(args, config, "text")
    if fmt == "json":
        _emit_json(out, verdict.to_json())
    else:
        _emit(
            out,
            "\n".join(
                [
                    f"relation: {verdict.relation.value}",
                    "forward violations: "
                    + (",".join(map(str, verdict.forward_violations)) or "-"),
                    "backward violations: "
                    + (",".join(map(str, verdict.backward_violations)) or "-"),
                    f"near tie: {_csv_bool(verdict.near_tie)}",
                ]
            ),
        )
    return EXIT_OK


def _cmd_strong(args, config, out, err) -> int:
    tol = config.tolerances
    a = _spectrum_arg(args.a, tol)
    b = _spectrum_arg(args.b, tol)
    _warn_adjusted(err, a=a, b=b)
    verdict = catalysis.strong_verdict(
        a,
        b,
        m_max=args.m_max if args.m_max is not None else config.m_max,
        catalyst_dim_max=(
            args.catalyst_dim if args.catalyst_dim is not None else config.catalyst_dim
        ),
        grid_steps=args.grid if args.grid is not None else config.grid_steps,
        tol=tol,
        size_cap=config.size_cap,
    )
    fmt = _resolve_format(args, config, "text")
    if fmt == "json":
        payload = verdict.to_json()
        # Echo the inputs so any witness can be re-checked with `compare`.
        payload["a"] = spectrum_to_json(a)
        payload["b"] = spectrum_to_json(b)
        _emit_json(out, payload)
    else:
        lines = [f"outcome: {verdict.outcome.value}"]
        if isinstance(verdict.witness, catalysis.MultiCopyWitness):
            lines.append(
                f"witness: {verdict.witness.direction.value} "
                f"at {verdict.witness.copies} copies"
            )
        elif isinstance(verdict.witness, catalysis.CatalystWitness):
            lines.append(
                f"witness: {verdict.witness.direction.value} with catalyst "
                + format_spectrum(verdict.witness.catalyst)
            )
        bounds = verdict.checked_bounds
        lines.append(
            f"checked bounds: m_max={bounds[0]} catalyst_dim={bounds[1]} "
            f"grid_steps={bounds[2]}"
        )
        _emit(out, "\n".join(lines))
    return EXIT_OK


def _cmd_power(args, config, out, err) -> int:
    a = _spectrum_arg(args.a, config.tolerances)
    _warn_adjusted(err, a=a)
    spec = catalysis.tensor_power_spectrum(a, args.m, size_cap=config.size_cap)
    fmt = _resolve_format(args, config, "text")
    if fmt == "json":
        _emit_json(out, spectrum_to_json(spec))
    else:
        _emit(out, format_spectrum(spec))
    return EXIT_OK


def _cmd_catalyze(args, config, out, err) -> int:
    tol = config.tolerances
    a = _spectrum_arg(args.a, tol)
    b = _spectrum_arg(args.b, tol)
    c = _spectrum_arg(args.c, tol)
    _warn_adjusted(err, a=a, b=b, c=c)
    direction = catalysis.catalyst_convertible(a, b, c, tol, size_cap=config.size_cap)
    prod_a = catalysis.tensor_product_spectrum(a, c, size_cap=config.size_cap)
    prod_b = catalysis.tensor_product_spectrum(b, c, size_cap=config.size_cap)
    fmt = _resolve_format(args, config, "text")
    if fmt == "json":
        _emit_json(
            out,
            {
                "direction": None if direction is None else direction.value,
                "a_product": spectrum_to_json(prod_a),
                "b_product": spectrum_to_json(prod_b),
            },
        )
    else:
        _emit(
            out,
            "\n".join(
                [
                    "direction: " + ("-" if direction is None else direction.value),
                    "a (x) c: " + format_spectrum(prod_a),
                    "b (x) c: " + format_spectrum(prod_b),
                ]
            ),
        )
    return EXIT_OK


def _cmd_construct(args, config, out, err) -> int:
    tol = config.tolerances
    fmt_default = "csv" if args.construction == "audit" else "text"
    fmt = _resolve_format(args, config, fmt_default)
    if args.construction == "complete":
        base = _spectrum_arg(args.base, tol)
        _warn_adjusted(err, base=base)
        spec = genericity.complete_extension(base, args.m, tol=tol)
        if fmt == "json":
            _emit_json(out, spectrum_to_json(spec))
        else:
            _emit(out, format_spectrum(spec))
        return EXIT_OK
    a = _spectrum_arg(args.a, tol)
    b = _spectrum_arg(args.b, tol)
    _warn_adjusted(err, a=a, b=b)
    if args.construction == "truncate":
        pair = genericity.truncation_pair(a, b, args.m, tol=tol)
        if fmt == "json":
            _emit_json(
                out,
                {
                    "a_m": spectrum_to_json(pair.a_m),
                    "b_m": spectrum_to_json(pair.b_m),
                    "m": pair.m,
                    "swapped": pair.swapped,
                },
            )
        else:
            _emit(
                out,
                "\n".join(
                    [
                        "a_m: " + format_spectrum(pair.a_m),
                        "b_m: " + format_spectrum(pair.b_m),
                        f"m: {pair.m}",
                        f"swapped: {_csv_bool(pair.swapped)}",
                    ]
                ),
            )
        return EXIT_OK
    # audit
    m_list = _int_list(args.m_list, "m-list")
    rows = genericity.convergence_report(a, b, m_list, tol=tol)
    if fmt == "json":
        _emit_json(
            out,
            [
                {
                    "m": row.m,
                    "dist_a": row.dist_a,
                    "dist_b": row.dist_b,
                    "condition_C": row.condition_c,
                    "incomparable": row.incomparable,
                }
                for row in rows
            ],
        )
    else:
        lines = ["m,dist_a,dist_b,condition_C,incomparable"]
        for row in rows:
            lines.append(
                ",".join(
                    [
                        str(row.m),
                        g17(row.dist_a),
                        g17(row.dist_b),
                        _csv_bool(row.condition_c),
                        _csv_bool(row.incomparable),
                    ]
                )
            )
        _emit(out, "\n".join(lines))
    return EXIT_OK


def _cmd_sweep(args, config, out, err) -> int:
    dims = _int_list(args.dims, "dims")
    records = sampling.sweep(dims, args.samples, args.seed, config.tolerances)
    fmt = _resolve_format(args, config, "csv")
    if fmt == "json":
        text = json.dumps([record.to_json() for record in records], indent=2)
    else:
        lines = ["n,samples,incomparable,fraction,ci95,seed"]
        for record in records:
            lines.append(
                ",".join(
                    [
                        str(record.n),
                        str(record.samples),
                        str(record.incomparable_count),
                        g17(record.fraction),
                        g17(record.ci95_halfwidth),
                        str(record.seed),
                    ]
                )
            )
        text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}", file=err)
    else:
        _emit(out, text)
    return EXIT_OK


def _int_list(raw: str, what: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidInput(f"bad {what}: {exc}") from exc


# --- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entorder",
        description="Convertibility and incomparability of bipartite pure "
        "entangled states via majorization of Schmidt spectra.",
    )
    parser.add_argument("--config", help="key=value config file")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("json", "text")):
        p.add_argument("--format", choices=choices, default=None)

    p = sub.add_parser("spectrum", help="Schmidt spectrum of a coefficient matrix")
    p.add_argument("--matrix", required=True, help="JSON rows, or @file")
    add_format(p)
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("compare", help="four-way convertibility verdict")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--tol", type=float, default=None, help="override tau_cmp")
    add_format(p)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("strong", help="strong-incomparability verdict")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--m-max", dest="m_max", type=int, default=None)
    p.add_argument("--catalyst-dim", dest="catalyst_dim", type=int, default=None)
    p.add_argument("--grid", type=int, default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_strong)

    p = sub.add_parser("power", help="spectrum of m collective copies")
    p.add_argument("--a", required=True)
    p.add_argument("--m", required=True, type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_power)

    p = sub.add_parser("catalyze", help="attach a catalyst and compare")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True, help="catalyst spectrum")
    add_format(p)
    p.set_defaults(handler=_cmd_catalyze)

    p = sub.add_parser("construct", help="density constructions")
    csub = p.add_subparsers(dest="construction", required=True)
    pc = csub.add_parser("complete", help="all-positive extension of a spectrum")
    pc.add_argument("--base", required=True)
    pc.add_argument("--m", required=True, type=int)
    add_format(pc)
    pc.set_defaults(handler=_cmd_construct)
    pt = csub.add_parser("truncate", help="finite pair with a Schmidt-number gap")
    pt.add_argument("--a", required=True)
    pt.add_argument("--b", required=True)
    pt.add_argument("--m", required=True, type=int)
    add_format(pt)
    pt.set_defaults(handler=_cmd_construct)
    pa = csub.add_parser("audit", help="convergence table over truncation indices")
    pa.add_argument("--a", required=True)
    pa.add_argument("--b", required=True)
    pa.add_argument("--m-list", dest="m_list", required=True)
    add_format(pa, choices=("json", "csv", "text"))
    pa.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("sweep", help="incomparability fraction across dimensions")
    p.add_argument("--dims", required=True, help="comma-separated dimensions")
    p.add_argument("--samples", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--out", default=None, help="write output to a file")
    add_format(p, choices=("json", "csv"))
    p.set_defaults(handler=_cmd_sweep)

    return parser


def run(argv=None, out=None, err=None) -> int:
    """Parse arguments and dispatch; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.handler(args, config, out, err)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_SIZE_CAP
    except InternalInconsistency:
        raise  # a bug, not an input problem: crash loudly
    except EntOrderError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
