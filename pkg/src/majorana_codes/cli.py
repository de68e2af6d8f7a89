"""Command-line front end.

Every subcommand prints a JSON report on stdout (sorted keys, exact values as
strings) and exits 0 when all checks pass, 1 when some check failed and 2 on
usage or parse errors. Set ``MAJORANA_CODES_REPORT_DIR`` (or pass
``--report-dir``) to also write the report to ``<dir>/<command>-report.json``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import codes, e8, embed, stab
from .fock import format_state, inner, same_span, span_rank
from .majorana import MajoranaOperator, PauliOperator, majorana_to_pauli, parse_operator, pauli_to_majorana
from .scalar import parse_scalar

REPORT_DIR_ENV = "MAJORANA_CODES_REPORT_DIR"

BUILD_CODES = ("hastings", "glued", "four-qubit-embedded", "single-occupancy", "four-qubit")
VERIFY_TARGETS = ("mermin", "transport", "cartan", "detection", "mixed", "e8")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 as well; keep the message on stderr
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _digest(*parts: str) -> str:
    h = hashlib.sha256()
    for p in parts:
        h.update(p.encode())
        h.update(b"\0")
    return h.hexdigest()


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# --- build ------------------------------------------------------------------------


def _named_code(args) -> codes.NamedCode:
    if args.code == "hastings":
        if args.l < 3:
            raise UsageError(f"--l must be at least 3, got {args.l}")
        return codes.hastings_code(args.l)
    if args.code == "glued":
        return codes.glued_code()
    if args.code == "four-qubit-embedded":
        return codes.embedded_16_2_4(args.occupancy)
    if args.code == "single-occupancy":
        if args.n < 1:
            raise UsageError(f"--n must be positive, got {args.n}")
        return codes.single_occupancy_code(args.n)
    raise AssertionError(args.code)


def _build_four_qubit(args, out: Path) -> tuple[dict, bool]:
    fq = codes.four_qubit_code()
    gens = [pauli_to_majorana(s) for s in fq.stabilizers]
    spec = stab.format_code_spec(gens, 4)
    files = {"four-qubit.code": spec}
    if args.emit_basis:
        for label, v in fq.basis.items():
            files[f"four-qubit.basis-{label}.state"] = format_state(v)
    mermin = codes.mermin_square_check()
    report = stab.code_report(gens, 4, args.max_weight)
    results = {
        "code": "four-qubit",
        "qubit_stabilizers": [str(s) for s in fq.stabilizers],
        "logicals": {k: str(v) for k, v in fq.logicals.items()},
        "parameters": report,
        "mermin_square": mermin.to_dict(),
    }
    return _write_files(out, files, results), mermin.ok and report["valid"]


def _write_files(out: Path, files: dict[str, str], results: dict) -> dict:
    out.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (out / name).write_text(text, encoding="utf-8")
    results["files"] = sorted(files)
    return results


def cmd_build(args) -> tuple[dict, bool]:
    out = Path(args.out)
    if args.code == "four-qubit":
        return _build_four_qubit(args, out)
    named = _named_code(args)
    code = named.code
    stem = named.name if args.code != "hastings" else f"hastings-l{args.l}"
    files = {f"{stem}.code": stab.format_code_spec(code.generators, code.modes)}
    report = stab.code_report(code.generators, code.modes, args.max_weight, args.jobs)
    checks = {}
    logicals = {}
    for label, check in named.verify_logicals().items():
        entry = named.logicals[label]
        logicals[label] = {"operator": str(entry.operator), "sign": str(entry.sign), **check.to_dict()}
        checks[f"logical {label}"] = bool(check)
    if args.emit_basis:
        labels = named.basis_labels or tuple(str(i) for i in range(len(code.basis)))
        for label, v in zip(labels, code.basis):
            files[f"{stem}.basis-{label}.state"] = format_state(v)
    results = {
        "code": named.name,
        "parameters": report,
        "logicals": logicals,
        "checks": checks,
        "notes": named.notes,
    }
    ok = report["valid"] and all(checks.values())
    return _write_files(out, files, results), ok


# --- check / convert ----------------------------------------------------------------


def cmd_check(args) -> tuple[dict, bool]:
    text = _read(args.codefile)
    try:
        modes, gens = stab.parse_code_spec(text)
    except ValueError as exc:
        raise UsageError(f"{args.codefile}: {exc}") from None
    max_weight = 2 * modes if args.max_weight is None else args.max_weight
    report = stab.code_report(gens, modes, max_weight, args.jobs)
    return {"codefile": args.codefile, **report}, report["valid"]


def cmd_convert(args) -> tuple[dict, bool]:
    try:
        op = parse_operator(args.operator, args.modes)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    target = args.to or ("pauli" if isinstance(op, MajoranaOperator) else "majorana")
    if target == "pauli":
        out = majorana_to_pauli(op) if isinstance(op, MajoranaOperator) else op
    else:
        out = pauli_to_majorana(op) if isinstance(op, PauliOperator) else op
    # round trip as a self-check
    back = pauli_to_majorana(out) if isinstance(out, PauliOperator) else majorana_to_pauli(out)
    again = majorana_to_pauli(back) if isinstance(back, MajoranaOperator) else pauli_to_majorana(back)
    ok = again == out
    return {"input": str(op), "output": str(out), "to": target, "roundtrip_ok": ok}, ok


# --- invariants / embed ---------------------------------------------------------------


def cmd_invariants(args) -> tuple[dict, bool]:
    if len(args.amplitudes) != 8:
        raise UsageError(f"expected 8 amplitudes, got {len(args.amplitudes)}")
    try:
        psi = [parse_scalar(a) for a in args.amplitudes]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    values = e8.evaluate_invariants(psi)
    results = {
        "amplitudes": [str(a) for a in psi],
        "invariants": {f"Pi_{d}": str(v) for d, v in zip(e8.DEGREES, values)},
    }
    if args.decimal:
        results["decimal"] = {f"Pi_{d}": v.decimal_str() for d, v in zip(e8.DEGREES, values)}
    return results, True


def cmd_embed(args) -> tuple[dict, bool]:
    text = _read(args.statefile)
    try:
        psi = embed.parse_qubit_state(text)
    except ValueError as exc:
        raise UsageError(f"{args.statefile}: {exc}") from None
    if args.n is not None and args.n != psi.n:
        raise UsageError(f"state has {psi.n} qubits, --n says {args.n}")
    alpha = args.occupancy if args.occupancy is not None else "0" * psi.n
    if len(alpha) != psi.n or set(alpha) - {"0", "1"}:
        raise UsageError(f"--occupancy must be a {psi.n}-bit label, got {alpha!r}")
    state = embed.embed_mixed(psi, alpha)
    body = format_state(state)
    results = {"qubits": psi.n, "occupancy": alpha, "modes": state.modes, "state": body.splitlines()}
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
        results["file"] = args.out
    return results, True


# --- verify ---------------------------------------------------------------------------


def _verify_mixed(n: int) -> dict:
    labels = [format(i, f"0{n}b") for i in range(1 << n)]
    spaces = {a: embed.mixed_subspace(a) for a in labels}
    orth = all(
        not inner(u, v)
        for i, a in enumerate(labels)
        for b in labels[i + 1 :]
        for u in spaces[a]
        for v in spaces[b]
    )
    dims = {a: span_rank(vs, 2 * n) for a, vs in spaces.items()}
    total = sum(dims.values())
    return {
        "n": n,
        "dimensions": dims,
        "total_dimension": total,
        "pairwise_orthogonal": orth,
        "ok": orth and total == 1 << (2 * n),
    }


def cmd_verify(args) -> tuple[dict, bool]:
    t = args.target
    if t == "mermin":
        rep = codes.mermin_square_check().to_dict()
    elif t == "transport":
        table = embed.intertwiner_transport(4)
        tilde_ok = all(
            v == codes.e_tilde()[i] for i, v in enumerate(codes.embedded_16_2_4("double").code.basis)
        )
        rep = {
            "table": [{"single": e.source, "double": e.target, "sign": str(e.sign)} for e in table],
            "double_basis_matches": tilde_ok,
            "ok": tilde_ok,
        }
    elif t == "cartan":
        rep = e8.cartan_commutativity_check(codes.glued_basis()).to_dict()
    elif t == "detection":
        code = codes.hastings_code(4).code
        res = stab.error_detection_check(code, args.max_weight)
        rep = {
            "operators_checked": res.operators_checked,
            "failures": [list(f) for f in res.failures],
            "ok": res.ok,
        }
    elif t == "mixed":
        rep = _verify_mixed(args.n)
    else:
        point = e8.GENERIC_POINT
        rank = e8.jacobian_rank_check(point)
        glued = codes.hastings_code(4).code
        rep = {
            "num_roots": len(e8.roots()),
            "jacobian_point": [str(x) for x in point],
            "jacobian_rank": rank,
            "glued_span_equals_projected": same_span(codes.glued_basis(), glued.projected_basis),
            "ok": rank == 8,
        }
        rep["ok"] = rep["ok"] and rep["glued_span_equals_projected"]
    return {"target": t, **rep}, bool(rep["ok"])


# --- plumbing -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="majorana-codes", description="Build and verify Majorana fermion stabilizer codes.")
    p.add_argument("--report-dir", help=f"also write the JSON report here (default: ${REPORT_DIR_ENV})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="construct a named code and write its code-spec file")
    b.add_argument("--code", required=True, choices=BUILD_CODES)
    b.add_argument("--l", type=int, default=4, help="Hastings family parameter (2^l Majorana modes)")
    b.add_argument("--n", type=int, default=2, help="qubits for the single-occupancy code")
    b.add_argument("--occupancy", default="single", choices=("single", "double", "s", "d"))
    b.add_argument("--emit-basis", action="store_true", help="write code-space vectors as state files")
    b.add_argument("--max-weight", type=int, default=4, help="distance search budget")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--out", default=".", help="output directory")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("check", help="validate a code-spec file")
    c.add_argument("codefile")
    c.add_argument("--max-weight", type=int, default=None, help="distance search budget (default: exhaustive)")
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("convert", help="convert between Majorana and Pauli form")
    v.add_argument("operator", help='e.g. "c1 c4 c5" or "+1 XYXYXYXY"')
    v.add_argument("--to", choices=("pauli", "majorana"))
    v.add_argument("--modes", type=int)
    v.set_defaults(func=cmd_convert)

    i = sub.add_parser("invariants", help="E8 invariants of eight glued-code amplitudes")
    i.add_argument("amplitudes", nargs="+", help="eight exact amplitudes such as 1/2 or 1+i")
    i.add_argument("--decimal", action="store_true")
    i.set_defaults(func=cmd_invariants)

    e = sub.add_parser("embed", help="embed a qubit state into the Fock space")
    e.add_argument("statefile", help="one amplitude per line, 2^n lines")
    e.add_argument("--occupancy", help="occupancy label alpha, 0 = single and 1 = double per qubit")
    e.add_argument("--n", type=int)
    e.add_argument("--out", help="write the Fock state file here")
    e.set_defaults(func=cmd_embed)

    r = sub.add_parser("verify", help="run one of the built-in structural checks")
    r.add_argument("target", choices=VERIFY_TARGETS)
    r.add_argument("--max-weight", type=int, default=3, help="detection: largest error weight")
    r.add_argument("--n", type=int, default=2, help="mixed: number of qubits")
    r.set_defaults(func=cmd_verify)
    return p


def _input_digest(args, argv: Sequence[str]) -> str:
    parts = list(argv)
    for attr in ("codefile", "statefile"):
        path = getattr(args, attr, None)
        if path and os.path.exists(path):
            parts.append(Path(path).read_text(encoding="utf-8"))
    return _digest(*parts)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        results, ok = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"majorana-codes: error: {exc}", file=sys.stderr)
        return 2
    report = {
        "command": ["majorana-codes", *argv],
        "inputs_sha256": _input_digest(args, argv),
        "ok": ok,
        "results": results,
    }
    text = json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    sys.stdout.write(text)
    report_dir = args.report_dir or os.environ.get(REPORT_DIR_ENV)
    if report_dir:
        path = Path(report_dir)
        path.mkdir(parents=True, exist_ok=True)
        (path / f"{args.command}-report.json").write_text(text, encoding="utf-8")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
