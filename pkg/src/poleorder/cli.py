"""Command line: ``analyze``, ``membership`` and ``corpus``.

Exit codes: 0 success, 2 non-isolated singularity, 3 not quasi-homogeneous,
4 parse error, 5 oracle disagreement (or oracle not stabilized), 6 input
outside the supported domain (n < 3, f(0) != 0, smooth origin).
Errors are also written to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Tuple

from .corpus import builtin_corpus
from .dmodlen import IN_L, MeromorphicGerm, min_power_index, witness_classes
from .errors import AnalysisError, ParseError
from .parser import check_variables, parse_element, parse_polynomial, split_variables
from .report import Report, build_report, consistency_checks
from .singularity import build_profile

EXIT_OK = 0
EXIT_ORACLE = 5

log = logging.getLogger(__name__)


@dataclass
class AnalysisRequest:
    poly: str
    variables: Tuple[str, ...]
    l_max: Optional[int] = None
    fmt: str = "json"
    oracle: bool = False
    pole_cap: Optional[int] = None

    def __post_init__(self):
        self.variables = check_variables(self.variables)
        if self.l_max is not None and self.l_max < 0:
            raise ValueError("l_max must be non-negative")
        if self.fmt not in ("json", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisRequest":
        variables = d.get("vars", d.get("variables"))
        if isinstance(variables, str):
            variables = split_variables(variables)
        return cls(
            poly=d["poly"],
            variables=tuple(variables),
            l_max=d.get("lmax", d.get("l_max")),
            oracle=bool(d.get("oracle", True)),
            pole_cap=d.get("pole_cap"),
        )


def error_payload(exc: Exception) -> dict:
    code = getattr(exc, "exit_code", 1)
    payload = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    if isinstance(exc, ParseError):
        payload["position"] = exc.position
        payload["message"] = exc.reason
    return payload


def run_analyze(req: AnalysisRequest) -> Tuple[Optional[Report], int, Optional[dict]]:
    """Full pipeline. Returns (report, exit code, error payload)."""
    try:
        f = parse_polynomial(req.poly, req.variables)
        profile = build_profile(f)
        l_max = req.l_max if req.l_max is not None else profile.n - 2
        report = build_report(req.poly, req.variables, profile, l_max, req.oracle, req.pole_cap)
    except AnalysisError as exc:
        return None, exc.exit_code, error_payload(exc)
    if report.oracle is not None and not report.oracle["agrees"]:
        payload = {
            "error": "OracleDisagreement",
            "message": "brute-force pole dimensions differ from the spectral count",
            "exit_code": EXIT_ORACLE,
        }
        return report, EXIT_ORACLE, payload
    return report, EXIT_OK, None


def run_membership(req: AnalysisRequest, element: str) -> Tuple[Optional[dict], int, Optional[dict]]:
    try:
        f = parse_polynomial(req.poly, req.variables)
        h, k = parse_element(element, req.variables)
        profile = build_profile(f)
    except AnalysisError as exc:
        return None, exc.exit_code, error_payload(exc)
    l_max = req.l_max if req.l_max is not None else profile.n - 2
    germ = MeromorphicGerm(h, k)
    index = min_power_index(germ, profile)
    witnesses = []
    for beta, c in witness_classes(germ, profile):
        if c.coeffs:
            witnesses.append({
                "multiplier": list(beta),
                "class": [{"basis": list(b), "coefficient": str(v), "pole": c.pole_level(b)}
                          for b, v in sorted(c.coeffs.items())],
            })
    if index == IN_L:
        verdict = IN_L
    elif index <= l_max:
        verdict = "min_power_index"
    else:
        verdict = "not_in_tested_range"
    result = {
        "input": req.poly,
        "variables": list(req.variables),
        "element": element,
        "verdict": verdict,
        "min_power_index": None if index == IN_L else index,
        "lmax": l_max,
        "witnesses": witnesses,
    }
    return result, EXIT_OK, None


def _load_requests(directory: Path) -> List[Tuple[str, Optional[dict], Optional[str]]]:
    """(name, request dict or None, I/O error or None) per entry, sorted."""
    entries = []
    for path in sorted(directory.iterdir()):
        if path.suffix not in (".json", ".jsonl") or not path.is_file():
            continue
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            entries.append((path.name, None, str(exc)))
            continue
        if path.suffix == ".jsonl":
            for i, line in enumerate(text.splitlines()):
                if not line.strip():
                    continue
                try:
                    entries.append((f"{path.name}:{i + 1}", json.loads(line), None))
                except json.JSONDecodeError as exc:
                    entries.append((f"{path.name}:{i + 1}", None, f"invalid JSON: {exc}"))
        else:
            try:
                entries.append((path.name, json.loads(text), None))
            except json.JSONDecodeError as exc:
                entries.append((path.name, None, f"invalid JSON: {exc}"))
    return entries


def run_corpus(directory: Optional[Path], out: TextIO, builtin: bool = False) -> Tuple[dict, int]:
    if builtin:
        entries = [(e["name"], dict(e), None) for e in builtin_corpus()]
    else:
        entries = _load_requests(directory)
    summary = {"entries": 0, "ok": 0, "errors": {}, "failed_checks": 0, "oracle_disagreements": 0}
    for name, data, io_error in entries:
        summary["entries"] += 1
        record = {"name": name}
        if io_error is not None:
            record.update(status="IOError", message=io_error)
            summary["errors"]["IOError"] = summary["errors"].get("IOError", 0) + 1
            out.write(json.dumps(record) + "\n")
            continue
        try:
            req = AnalysisRequest.from_dict(data)
        except (KeyError, TypeError, ValueError, ParseError) as exc:
            record.update(status="BadRequest", message=str(exc))
            summary["errors"]["BadRequest"] = summary["errors"].get("BadRequest", 0) + 1
            out.write(json.dumps(record) + "\n")
            continue
        report, code, err = run_analyze(req)
        if report is None:
            record.update(status=err["error"], message=err["message"])
            summary["errors"][err["error"]] = summary["errors"].get(err["error"], 0) + 1
        else:
            checks = consistency_checks(report)
            record.update(status="ok" if all(checks.values()) else "check_failed",
                          checks=checks, report=report.to_dict())
            if all(checks.values()):
                summary["ok"] += 1
            else:
                summary["failed_checks"] += 1
            if report.oracle is not None and not report.oracle["agrees"]:
                summary["oracle_disagreements"] += 1
        out.write(json.dumps(record) + "\n")
    bad = summary["oracle_disagreements"] or summary["failed_checks"]
    return summary, EXIT_ORACLE if bad else EXIT_OK


def _emit_error(payload: dict, err: TextIO) -> None:
    err.write(json.dumps(payload) + "\n")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="poleorder", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--poly", required=True, help="polynomial, e.g. 'x^3 + y^3 + z^3'")
        p.add_argument("--vars", required=True, help="comma separated variable names")
        p.add_argument("--lmax", type=int, default=None, help="largest l reported (default n-2)")

    a = sub.add_parser("analyze", help="filtration dimensions and D-module lengths")
    common(a)
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    a.add_argument("--pole-cap", type=int, default=None)

    m = sub.add_parser("membership", help="locate h/f^k in the D(1/f^(l+1)) tower")
    common(m)
    m.add_argument("--element", required=True, help="germ such as 'x*y*z/f^2'")

    c = sub.add_parser("corpus", help="run a directory of JSON requests")
    c.add_argument("directory", nargs="?", type=Path)
    c.add_argument("--builtin", action="store_true", help="use the built-in corpus")
    return ap


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=err)

    if args.command == "corpus":
        if not args.builtin and args.directory is None:
            _emit_error({"error": "UsageError", "message": "give a directory or --builtin",
                         "exit_code": 1}, err)
            return 1
        if not args.builtin and not args.directory.is_dir():
            _emit_error({"error": "IOError", "message": f"not a directory: {args.directory}",
                         "exit_code": 1}, err)
            return 1
        summary, code = run_corpus(args.directory, out, builtin=args.builtin)
        out.write(json.dumps({"summary": summary}, sort_keys=True) + "\n")
        return code

    try:
        variables = split_variables(args.vars)
        req = AnalysisRequest(
            poly=args.poly, variables=variables, l_max=args.lmax,
            fmt=getattr(args, "format", "json"), oracle=getattr(args, "oracle", False),
            pole_cap=getattr(args, "pole_cap", None),
        )
    except ParseError as exc:
        _emit_error(error_payload(exc), err)
        return exc.exit_code
    except ValueError as exc:
        _emit_error({"error": "UsageError", "message": str(exc), "exit_code": 1}, err)
        return 1

    if args.command == "analyze":
        report, code, payload = run_analyze(req)
        if report is not None:
            out.write((report.to_json() if req.fmt == "json" else report.to_text()) + "\n")
        if payload is not None:
            _emit_error(payload, err)
        return code

    result, code, payload = run_membership(req, args.element)
    if result is not None:
        out.write(json.dumps(result, indent=2) + "\n")
    if payload is not None:
        _emit_error(payload, err)
    return code


if __name__ == "__main__":
    sys.exit(main())
