"""Command-line interface.

Thin client over the service operations: every subcommand builds the same
request model the HTTP routes accept, runs it in-process by default, or
POSTs it to a running server when ``--server`` is given.

Exit codes:
  0  success (verify: no counterexamples)
  1  verify found at least one counterexample
  2  a table failed ring/involution validation
  3  malformed input: bad JSON, bad constructor expression, bad request
  4  an order cap was exceeded
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from .errors import (
    AxiomError,
    CapExceededError,
    MalformedRingError,
    PreconditionError,
    StarcleanError,
)
from .service import ops
from .service.models import (
    ClassifyRequest,
    ExtendRequest,
    IdealsRequest,
    RingSpecModel,
    VerifyRequest,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_AXIOM = 2
EXIT_INPUT = 3
EXIT_CAP = 4

_KIND_TO_EXIT = {
    "axiom-violation": EXIT_AXIOM,
    "cap-exceeded": EXIT_CAP,
    "malformed-ring": EXIT_INPUT,
    "constructor-error": EXIT_INPUT,
    "precondition-error": EXIT_INPUT,
    "bad-request": EXIT_INPUT,
}


class CliFailure(Exception):
    def __init__(self, code: int, kind: str, message: str, detail=None):
        super().__init__(message)
        self.code = code
        self.kind = kind
        self.detail = detail

    def envelope(self) -> dict:
        body = {"kind": self.kind, "message": str(self)}
        if self.detail is not None:
            body["detail"] = self.detail
        return {"error": body}


def _failure_from_exception(exc: Exception) -> CliFailure:
    if isinstance(exc, AxiomError):
        detail = [v.to_dict() if hasattr(v, "to_dict") else v for v in exc.violations]
        return CliFailure(EXIT_AXIOM, "axiom-violation", str(exc), detail)
    if isinstance(exc, CapExceededError):
        return CliFailure(EXIT_CAP, "cap-exceeded", str(exc))
    if isinstance(exc, (MalformedRingError, PreconditionError)):
        return CliFailure(EXIT_INPUT, "malformed-ring", str(exc))
    if isinstance(exc, ValidationError):
        return CliFailure(EXIT_INPUT, "bad-request", "invalid request",
                          detail=json.loads(exc.json()))
    if isinstance(exc, StarcleanError):
        return CliFailure(EXIT_INPUT, "error", str(exc))
    raise exc


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliFailure(EXIT_INPUT, "bad-request", f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliFailure(EXIT_INPUT, "bad-request", f"{path} is not valid JSON: {exc}") from exc


def _spec_from_file(path: str) -> RingSpecModel:
    data = _read_json(path)
    if not isinstance(data, dict):
        raise CliFailure(EXIT_INPUT, "bad-request",
                         f"{path}: expected a JSON object with ring tables")
    return RingSpecModel(**data)


def _post(server: str, route: str, payload: dict) -> dict:
    import httpx

    url = server.rstrip("/") + route
    try:
        resp = httpx.post(url, json=payload, timeout=600.0)
    except httpx.HTTPError as exc:
        raise CliFailure(EXIT_INPUT, "bad-request", f"request to {url} failed: {exc}") from exc
    try:
        data = resp.json()
    except ValueError as exc:
        raise CliFailure(EXIT_INPUT, "bad-request",
                         f"{url} returned non-JSON (status {resp.status_code})") from exc
    if resp.status_code != 200:
        error = data.get("error", {}) if isinstance(data, dict) else {}
        kind = error.get("kind", "bad-request")
        raise CliFailure(_KIND_TO_EXIT.get(kind, EXIT_INPUT), kind,
                         error.get("message", f"status {resp.status_code}"),
                         error.get("detail"))
    return data


def _run(server: str | None, route: str, op, req) -> dict:
    if server:
        payload = json.loads(req.model_dump_json(exclude_none=True, by_alias=True))
        return _post(server, route, payload)
    try:
        return op(req)
    except StarcleanError as exc:
        raise _failure_from_exception(exc) from exc


def _dump(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def _write_out(report: dict, path: str | Path) -> Path:
    path = Path(path)
    if path.parent != Path(""):
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(_dump(report) + "\n", encoding="utf-8")
    return path


def _source_args(args) -> tuple[str | None, RingSpecModel | None]:
    if args.construct is not None and args.ring is not None:
        raise CliFailure(EXIT_INPUT, "bad-request",
                         "give either --construct or a ring-spec file, not both")
    if args.construct is None and args.ring is None:
        raise CliFailure(EXIT_INPUT, "bad-request",
                         "give a ring: --construct EXPR or a ring-spec file")
    spec = _spec_from_file(args.ring) if args.ring is not None else None
    return args.construct, spec


def _cmd_classify(args) -> int:
    construct, spec = _source_args(args)
    req = ClassifyRequest(construct=construct, spec=spec)
    report = _run(args.server, "/classify", ops.classify_op, req)
    out = args.out or Path(args.reports_dir) / f"{report['ring']['hash']}.json"
    path = _write_out(report, out)
    if not args.quiet:
        print(_dump(report))
    print(f"report written to {path}", file=sys.stderr)
    return EXIT_OK


def _parse_corpus_file(path: str) -> tuple[list[str], list[RingSpecModel]]:
    data = _read_json(path)
    if not isinstance(data, list):
        raise CliFailure(EXIT_INPUT, "bad-request",
                         f"{path}: expected a JSON array of constructor expressions "
                         "and/or ring-spec objects")
    recipe: list[str] = []
    rings: list[RingSpecModel] = []
    for i, entry in enumerate(data):
        if isinstance(entry, str):
            recipe.append(entry)
        elif isinstance(entry, dict):
            rings.append(RingSpecModel(**entry))
        else:
            raise CliFailure(EXIT_INPUT, "bad-request",
                             f"{path}[{i}]: expected a string or an object")
    return recipe, rings


def _cmd_verify(args) -> int:
    recipe = rings = None
    if args.corpus != "default":
        recipe, rings = _parse_corpus_file(args.corpus)
    req = VerifyRequest(
        recipe=recipe,
        rings=rings,
        only=args.only.split(",") if args.only else None,
        jobs=args.jobs,
        ideal_cap=args.ideal_cap,
        cor211_cap=args.cor211_cap,
        cor211_degrees=([int(d) for d in args.cor211_degrees.split(",")]
                        if args.cor211_degrees else None),
    )
    report = _run(args.server, "/verify", ops.verify_op, req)
    for check in report["checks"]:
        s = check["summary"]
        line = (f"{check['id']:<10} pass={s['pass']:<5} fail={s['fail']:<3} "
                f"skip={s['skip']:<4} vacuous={s['vacuous']}")
        if check.get("covered_by"):
            line += f"  (items via {check['covered_by']})"
        print(line, file=sys.stderr)
    summary = report["summary"]
    print(f"total: {summary['items']} items, {summary['counterexamples']} counterexample(s)",
          file=sys.stderr)
    if "warning" in summary:
        print(f"warning: {summary['warning']}", file=sys.stderr)
    if args.out:
        path = _write_out(report, args.out)
        print(f"report written to {path}", file=sys.stderr)
    if not args.quiet:
        print(_dump(report))
    return EXIT_OK if summary["counterexamples"] == 0 else EXIT_COUNTEREXAMPLE


def _cmd_extend(args) -> int:
    construct, spec = _source_args(args)
    req = ExtendRequest(construct=construct, spec=spec, mu=args.mu, eta=args.eta,
                        degree=args.poly)
    result = _run(args.server, "/extend", ops.extend_op, req)
    if args.out:
        path = _write_out(result["spec"], args.out)
        print(f"ring spec written to {path} (hash {result['hash']})", file=sys.stderr)
    else:
        print(_dump(result["spec"]))
        print(f"hash {result['hash']}", file=sys.stderr)
    return EXIT_OK


def _cmd_ideals(args) -> int:
    construct, spec = _source_args(args)
    req = IdealsRequest(construct=construct, spec=spec,
                        include_flags=not args.no_flags, cap=args.cap)
    result = _run(args.server, "/ideals", ops.ideals_op, req)
    if args.out:
        path = _write_out(result, args.out)
        print(f"ideal lattice written to {path}", file=sys.stderr)
    if not args.quiet:
        print(_dump(result))
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def _add_source_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("ring", nargs="?", default=None,
                        help="path to a ring-spec JSON file")
    parser.add_argument("--construct", default=None,
                        help="constructor expression, e.g. 'zn:4' or "
                             "'product:zn:2,zn:4' or 'ri:zn:2,mu=1,eta=1'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starclean",
        description="Classify finite rings with involution and verify the "
                    "equivalences behind the classifiers.")
    parser.add_argument("--server", default=None,
                        help="base URL of a running service; default runs in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="full predicate/witness report for one ring")
    _add_source_arguments(p)
    p.add_argument("--out", default=None, help="report path (default: reports/<hash>.json)")
    p.add_argument("--reports-dir", default="reports",
                   help="directory for hash-named reports (default: reports)")
    p.add_argument("--quiet", action="store_true", help="do not print the report to stdout")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="run the equivalence checks over a corpus")
    p.add_argument("--corpus", default="default",
                   help="'default' or a path to a JSON array of constructor "
                        "expressions and/or ring-spec objects")
    p.add_argument("--only", default=None,
                   help="comma-separated check ids, e.g. 'thm-2.4,prop-3.1'")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("--ideal-cap", type=int, default=None,
                   help="max ring order for ideal-lattice checks (default 64)")
    p.add_argument("--cor211-cap", type=int, default=None,
                   help="max extension order for cor-2.11 (default 256)")
    p.add_argument("--cor211-degrees", default=None,
                   help="comma-separated degrees for cor-2.11 (default 2,3)")
    p.add_argument("--out", default=None, help="also write the report JSON here")
    p.add_argument("--quiet", action="store_true", help="do not print the report to stdout")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extend", help="build a quadratic or truncated polynomial extension")
    _add_source_arguments(p)
    p.add_argument("--mu", type=int, default=None, help="mu for i*i = mu*i + eta")
    p.add_argument("--eta", type=int, default=None, help="eta for i*i = mu*i + eta")
    p.add_argument("--poly", type=int, default=None, metavar="N",
                   help="truncated polynomial degree (x^N = 0) instead of mu/eta")
    p.add_argument("--out", default=None, help="write the ring spec here")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("ideals", help="enumerate the ideal lattice with flags")
    _add_source_arguments(p)
    p.add_argument("--cap", type=int, default=None,
                   help="max ring order for enumeration (default 64)")
    p.add_argument("--no-flags", action="store_true", help="skip per-ideal flags")
    p.add_argument("--out", default=None, help="write the lattice JSON here")
    p.add_argument("--quiet", action="store_true", help="do not print to stdout")
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as failure:
        print(json.dumps(failure.envelope(), indent=2, sort_keys=True), file=sys.stderr)
        return failure.code
    except ValidationError as exc:
        failure = _failure_from_exception(exc)
        print(json.dumps(failure.envelope(), indent=2, sort_keys=True), file=sys.stderr)
        return failure.code


def console_main() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
