"""Command line: ``vcdim classify|validate|corpus``.

Exit codes: 0 success, 1 parse or structural error, 2 semantic error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .classify import (
    MissingOrder,
    clause_of,
    gdvc_corollary_geometric,
    gdvc_manifold,
    semantic_diagnostics,
)
from .jsj import ACYLINDRICITY_CONSTANT, InvalidJsj
from .model import Diagnostic, DimResult, Jsj, ManifoldDescription
from .serialize import load_json, parse_description

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SEMANTIC = 2


@dataclass
class Report:
    digest: str
    result: Optional[DimResult] = None
    diagnostics: list[Diagnostic] = field(default_factory=list)
    corollary_value: Optional[int] = None
    cross_check: Optional[bool] = None
    exit_code: int = EXIT_OK
    notes: list[str] = field(default_factory=list)
    version: str = __version__

    def to_dict(self, trace: bool = False) -> dict:
        out = {
            "version": self.version,
            "input_sha256": self.digest,
            "exit_code": self.exit_code,
        }
        if self.result is not None:
            res = {"value": self.result.value, "clause": clause_of(self.result)}
            if trace:
                res["trace"] = [{"ref": j.ref, "clause": j.clause} for j in self.result.trace]
            out["result"] = res
            out["corollary_value"] = self.corollary_value
            out["cross_check"] = self.cross_check
        if self.diagnostics:
            out["diagnostics"] = [_diag_dict(d) for d in self.diagnostics]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _diag_dict(d: Diagnostic) -> dict:
    out = {"code": d.code, "where": d.where, "message": d.message}
    if d.redirect:
        out["redirect"] = d.redirect
    return out


def _read(path) -> tuple[Optional[bytes], Optional[Diagnostic]]:
    try:
        return Path(path).read_bytes(), None
    except OSError as exc:
        return None, Diagnostic("io", str(path), exc.strerror or str(exc))


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _check(data: bytes) -> tuple[Optional[ManifoldDescription], Report]:
    report = Report(_digest(data))
    m, diags = parse_description(data)
    if m is None:
        report.diagnostics, report.exit_code = diags, EXIT_PARSE
        return None, report
    diags = semantic_diagnostics(m)
    if diags:
        report.diagnostics, report.exit_code = diags, EXIT_SEMANTIC
        return None, report
    return m, report


def classify_bytes(data: bytes) -> Report:
    m, report = _check(data)
    if m is None:
        return report
    try:
        report.result = gdvc_manifold(m)
        report.corollary_value = gdvc_corollary_geometric(m)
    except (InvalidJsj, MissingOrder) as exc:
        # semantic_diagnostics should have caught these already
        report.diagnostics = [Diagnostic("semantic", "document", str(exc))]
        report.exit_code = EXIT_SEMANTIC
        report.result = None
        return report
    report.cross_check = report.result.value == report.corollary_value
    return report


def validate_bytes(data: bytes) -> Report:
    m, report = _check(data)
    if m is not None:
        for i, s in enumerate(m.summands):
            if isinstance(s, Jsj):
                report.notes.append(f"summands[{i}]: acylindrical, k = {ACYLINDRICITY_CONSTANT}")
    return report


def _emit_errors(report: Report, stderr) -> None:
    for d in report.diagnostics:
        print(f"error: {d}", file=stderr)


def _dump(obj, stdout) -> None:
    stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def run_classify(path, as_json=False, trace=False, stdout=None, stderr=None) -> int:
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    data, err = _read(path)
    if data is None:
        print(f"error: {err}", file=stderr)
        return EXIT_PARSE
    report = classify_bytes(data)
    _emit_errors(report, stderr)
    if as_json:
        _dump(report.to_dict(trace=trace), stdout)
    elif report.result is not None:
        res = report.result
        print(f"gdvc = {res.value}", file=stdout)
        fired = res.trace[-1]
        print(f"clause: {fired.ref}: {fired.clause}", file=stdout)
        agree = "agrees" if report.cross_check else "DISAGREES"
        print(f"geometric route: {report.corollary_value} ({agree})", file=stdout)
        if trace:
            print("trace:", file=stdout)
            for j in res.trace:
                print(f"  [{j.ref}] {j.clause}", file=stdout)
    return report.exit_code


def run_validate(path, as_json=False, stdout=None, stderr=None) -> int:
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    data, err = _read(path)
    if data is None:
        print(f"error: {err}", file=stderr)
        return EXIT_PARSE
    report = validate_bytes(data)
    _emit_errors(report, stderr)
    if as_json:
        out = report.to_dict()
        out["valid"] = report.exit_code == EXIT_OK
        _dump(out, stdout)
    elif report.exit_code == EXIT_OK:
        for note in report.notes:
            print(note, file=stdout)
        print("valid", file=stdout)
    return report.exit_code


def _expectation(data: bytes) -> dict:
    try:
        doc = load_json(data.decode("utf-8-sig"))
    except (ValueError, UnicodeDecodeError, RecursionError):
        return {}
    exp = doc.get("expected") if isinstance(doc, dict) else None
    return exp if isinstance(exp, dict) else {}


def corpus_entry(path: Path) -> dict:
    """Classify one corpus file and compare against its ``expected`` block."""
    data, err = _read(path)
    if data is None:
        return {"file": path.name, "exit_code": EXIT_PARSE, "ok": False, "problems": [str(err)]}
    report = classify_bytes(data)
    expected = _expectation(data)
    entry = {"file": path.name, "exit_code": report.exit_code}
    if report.result is not None:
        entry["value"] = report.result.value
        entry["clause"] = clause_of(report.result)
        entry["cross_check"] = report.cross_check
    if report.diagnostics:
        entry["codes"] = sorted({d.code for d in report.diagnostics})
    problems = []
    want_exit = expected.get("exit", EXIT_OK)
    if report.exit_code != want_exit:
        problems.append(f"exit {report.exit_code}, expected {want_exit}")
    if "gdvc" in expected and entry.get("value") != expected["gdvc"]:
        problems.append(f"gdvc {entry.get('value')}, expected {expected['gdvc']}")
    if "clause" in expected and entry.get("clause") != str(expected["clause"]):
        problems.append(f"clause {entry.get('clause')}, expected {expected['clause']}")
    if "rule" in expected and expected["rule"] not in entry.get("codes", []):
        problems.append(f"no diagnostic citing {expected['rule']}")
    if report.cross_check is False:
        problems.append("geometric route disagrees")
    entry["ok"] = not problems
    if problems:
        entry["problems"] = problems
    return entry


def run_corpus(directory, as_json=False, stdout=None, stderr=None) -> int:
    stdout, stderr = stdout or sys.stdout, stderr or sys.stderr
    root = Path(directory)
    if not root.is_dir():
        print(f"error: {root}: not a directory", file=stderr)
        return EXIT_PARSE
    entries = [corpus_entry(p) for p in sorted(root.glob("*.json"))]
    failed = [e for e in entries if not e["ok"]]
    if as_json:
        _dump({"version": __version__, "files": entries, "failed": len(failed)}, stdout)
    else:
        print("file\texit\tgdvc\tclause\tstatus", file=stdout)
        for e in entries:
            status = "ok" if e["ok"] else "FAIL: " + "; ".join(e["problems"])
            print(f"{e['file']}\t{e['exit_code']}\t{e.get('value', '-')}\t{e.get('clause', '-')}\t{status}",
                  file=stdout)
        print(f"{len(entries) - len(failed)}/{len(entries)} ok", file=stdout)
    if not failed:
        return EXIT_OK
    return max(e["exit_code"] if e["exit_code"] != EXIT_OK else EXIT_SEMANTIC for e in failed)


class _Parser(argparse.ArgumentParser):
    """Command-line mistakes are parse errors, so they exit 1 like bad files."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="vcdim",
        description="Virtually cyclic dimension of closed oriented 3-manifold groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="compute the dimension for one description file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--trace", action="store_true", help="include the justification chain")

    p = sub.add_parser("validate", help="structural and semantic validation only")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("corpus", help="classify every *.json file in a directory")
    p.add_argument("dir")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "classify":
        return run_classify(args.file, args.json, args.trace)
    if args.command == "validate":
        return run_validate(args.file, args.json)
    return run_corpus(args.dir, args.json)


if __name__ == "__main__":
    raise SystemExit(main())
