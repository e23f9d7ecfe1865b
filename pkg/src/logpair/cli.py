"""``logpair`` command line.

Exit status is 0 on success, 1 for malformed input and 2 when a well-formed
input violates a mathematical precondition. Errors go to stderr as a JSON
object with a stable ``error_kind``.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from typing import Any, Callable

from logpair import chern, cones, euler, pairs
from logpair.documents import InputDocument, document_to_json, parse_document
from logpair.errors import InputError, LogPairError, SchemaError
from logpair.rational import render
from logpair.scan import ScanConfig, scan_conjecture

COMMANDS = (
    "classify",
    "kstab",
    "volume",
    "euler",
    "quotient",
    "degenerate",
    "chern",
    "my-check",
    "langer-c2",
    "scan",
)

ACCEPTS = {
    "classify": ("marked_sphere", "cone", "arrangement"),
    "kstab": ("marked_sphere", "cone", "arrangement"),
    "volume": ("cone", "arrangement", "volume_formula"),
    "euler": ("cone", "arrangement"),
    "quotient": ("weighted_plane",),
    "degenerate": ("arrangement",),
    "chern": ("surface_chern",),
    "my-check": ("surface_chern",),
    "langer-c2": ("bundle",),
}

SURFACE_ATTESTATION = "K-semistability of the surface pair is caller-attested, not verified"


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return render(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "value") and isinstance(getattr(value, "value"), str):
        return value.value
    return value


def _sphere_of(doc: InputDocument) -> pairs.MarkedSphere:
    if doc.kind == "marked_sphere":
        return doc.payload
    if doc.kind == "cone":
        return doc.payload.base
    return doc.payload.to_sphere()


def _classify(doc: InputDocument, opts: argparse.Namespace) -> dict:
    sphere = _sphere_of(doc)
    cls = pairs.classify(sphere)
    out = {
        "log_canonical_degree": pairs.log_canonical_degree(sphere),
        "positivity": cls.positivity,
        "singularity": cls.singularity,
    }
    if doc.kind == "cone":
        out["lambda"] = cones.lambda_of(doc.payload)
        out["cone_class"] = cones.classify_cone(doc.payload)
    return out


def _kstab(doc: InputDocument, opts: argparse.Namespace) -> dict:
    sphere = _sphere_of(doc)
    return {
        "k_semistable": pairs.is_k_semistable(sphere),
        "k_stable": pairs.is_k_stable(sphere),
        "attestations": {"k_stable": "strict Troyanov condition"},
    }


def _volume(doc: InputDocument, opts: argparse.Namespace) -> dict:
    if doc.kind == "volume_formula":
        value = cones.normalized_volume(doc.payload["lambda"], doc.payload["Ln"], opts.n or 1)
        return {
            "normalized_volume": value,
            "case_tag": None,
            "method": "SemistableConeFormula",
            "attestations": {"k_semistable": "caller-attested, not verified"},
        }
    if doc.kind == "cone":
        cone = doc.payload
        value = cones.cone_normalized_volume(cone)
        tag = euler.euler_line_arrangement(cones.LineArrangement(cone.base.points)).case_tag
        return {
            "normalized_volume": value,
            "lambda": cones.lambda_of(cone),
            "case_tag": tag,
            "method": "SemistableConeFormula",
            "attestations": {"k_semistable": "verified by Troyanov condition"},
        }
    arr = doc.payload
    tag = euler.euler_line_arrangement(arr).case_tag
    if pairs.is_k_semistable(arr.to_sphere()):
        value = cones.cone_normalized_volume(arr.to_cone())
        method = "SemistableConeFormula"
    else:
        value = cones.destabilizing_degeneration(arr).vol_hat
        method = "Degeneration"
    return {
        "normalized_volume": value,
        "case_tag": tag,
        "method": method,
        "attestations": {"k_semistable": "verified by Troyanov condition"},
    }


def _euler(doc: InputDocument, opts: argparse.Namespace) -> dict:
    if doc.kind == "arrangement":
        result = euler.euler_line_arrangement(doc.payload)
    elif opts.cover_degree is not None:
        result = euler.euler_via_langer(doc.payload, opts.cover_degree)
    else:
        result = euler.euler_orbifold_cone(doc.payload)
    attest = None
    if result.method is euler.Method.VIA_LANGER:
        attest = {"sbar": "c1/2, licensed by K-semistability of the base"}
    return {
        "e_orb": result.value,
        "case_tag": result.case_tag,
        "method": result.method,
        "attestations": attest,
    }


def _quotient(doc: InputDocument, opts: argparse.Namespace) -> dict:
    cone = cones.quotient_of_weighted_plane(doc.payload)
    return {
        "cone": document_to_json(InputDocument("cone", cone)),
        "lambda": cones.lambda_of(cone),
    }


def _degenerate(doc: InputDocument, opts: argparse.Namespace) -> dict:
    data = cones.destabilizing_degeneration(doc.payload)
    return {"a": data.a, "b": data.b, "gamma": data.gamma, "vol_hat": data.vol_hat}


def _chern(doc: InputDocument, opts: argparse.Namespace) -> dict:
    numbers = chern.log_chern(doc.payload)
    ext = chern.extension_sheaf_invariants(doc.payload, opts.n or 2)
    return {
        "c1_sq": numbers.c1_sq,
        "c2": numbers.c2,
        "extension_sheaf": ext._asdict(),
    }


def _my_check(doc: InputDocument, opts: argparse.Namespace) -> dict:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cy = chern.my_cy_check(doc.payload)
    fano = chern.my_fano_check(doc.payload)
    numbers = chern.log_chern(doc.payload)
    return {
        "fano": {"value": fano.value, "holds": fano.holds},
        "cy": {"value": cy.value, "holds": cy.holds, "c1_sq_vanishes": numbers.c1_sq == 0},
        "case_tag": None,
        "method": "LogChernNumbers",
        "attestations": {
            "fano": SURFACE_ATTESTATION + "; pair must be log-Fano",
            "cy": "K + Delta numerically trivial is caller-attested",
        },
    }


def _langer(doc: InputDocument, opts: argparse.Namespace) -> dict:
    s = euler.sbar(doc.payload)
    return {"sbar": s, "local_c2": euler.langer_local_c2(doc.payload.e, s, doc.payload.d)}


HANDLERS: dict[str, Callable[[InputDocument, argparse.Namespace], dict]] = {
    "classify": _classify,
    "kstab": _kstab,
    "volume": _volume,
    "euler": _euler,
    "quotient": _quotient,
    "degenerate": _degenerate,
    "chern": _chern,
    "my-check": _my_check,
    "langer-c2": _langer,
}


def run_command(name: str, doc: InputDocument | None, opts: argparse.Namespace | None = None) -> dict:
    """Dispatch ``name`` on ``doc`` and return the JSON-ready report."""
    opts = opts or build_parser().parse_args([name])
    if name == "scan":
        cfg = ScanConfig(opts.max_denominator, opts.max_points, opts.workers)
        report = scan_conjecture(cfg)
        return _jsonable(
            {
                "command": "scan",
                "input": {"max_denominator": cfg.max_denominator, "max_points": cfg.max_points},
                "output": {
                    "tuples_checked": report.tuples_checked,
                    "violations": [
                        {
                            "weights": list(v.weights),
                            "expected": v.expected,
                            "actual": v.actual,
                            "identity_name": v.identity_name,
                        }
                        for v in report.violations
                    ],
                    "elapsed_seconds": round(report.elapsed, 3),
                },
            }
        )
    if name not in HANDLERS:
        raise SchemaError(f"unknown command {name!r}")
    if doc is None:
        raise SchemaError(f"command {name!r} needs an input document")
    if doc.kind not in ACCEPTS[name]:
        raise SchemaError(f"command {name!r} does not accept {doc.kind!r} input")
    return _jsonable(
        {"command": name, "input": document_to_json(doc), "output": HANDLERS[name](doc, opts)}
    )


def _table(report: dict) -> str:
    lines = []

    def walk(prefix: str, value: Any) -> None:
        if isinstance(value, dict):
            for key, sub in value.items():
                walk(f"{prefix}.{key}" if prefix else key, sub)
        else:
            lines.append(f"{prefix:<40} {json.dumps(value) if isinstance(value, list) else value}")

    walk("", report)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="logpair", description="Exact invariants of log pairs and cone singularities."
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", default="-", help="JSON document, or - for stdin")
    parser.add_argument("--output", choices=("json", "table"), default="json")
    parser.add_argument("--n", type=int, default=None, help="dimension of the base")
    parser.add_argument("--cover-degree", type=int, default=None)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--max-denominator", type=int, default=4)
    parser.add_argument("--max-points", type=int, default=4)
    return parser


def _load(path: str) -> InputDocument:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return parse_document(raw)


def main(argv: list[str] | None = None) -> int:
    opts = build_parser().parse_args(argv)
    try:
        doc = None if opts.command == "scan" else _load(opts.input)
        report = run_command(opts.command, doc, opts)
    except LogPairError as exc:
        print(json.dumps({"error_kind": exc.error_kind, "message": str(exc)}), file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(json.dumps({"error_kind": "InputError", "message": str(exc)}), file=sys.stderr)
        return 1
    if opts.output == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_table(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
