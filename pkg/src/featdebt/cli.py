"""Command-line entry point.

Subcommands: analyze a tree or revision into a JSON report, diff two
revisions into a debt delta, extract a sampled inserted/paid series as
CSV, and serve a report over the read-only HTTP API. Exit codes: 0 on
success, 1 on analysis errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from featdebt import __version__
from featdebt.config import AnalysisConfig, load_config
from featdebt.errors import FeatdebtError
from featdebt.mining import (
    debt_diff,
    debt_series,
    ledger_csv,
    list_revisions,
    snapshot_analyze,
)
from featdebt.report import (
    analyze_sources,
    build_report,
    discover_sources,
    export_delta_json,
    export_json,
    load_report,
)
from featdebt.server import serve_api


def _load_cfg(path: str | None) -> AnalysisConfig:
    if path is None:
        return AnalysisConfig()
    return load_config(path)


def _emit(data: bytes, out: str | None) -> None:
    if out is None:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(out).write_bytes(data)


def _cmd_analyze(args) -> int:
    cfg = _load_cfg(args.config)
    if args.rev is not None:
        model, findings = snapshot_analyze(args.path, args.rev, cfg)
        revisions = {r.id: r for r in list_revisions(args.path)}
        rev_ts = None
        for rev in revisions.values():
            if rev.id.startswith(args.rev) or rev.id == args.rev:
                rev_ts = rev.timestamp
        report = build_report(
            model, findings, cfg, revision=args.rev, revision_timestamp=rev_ts
        )
    else:
        sources = discover_sources(args.path, cfg)
        model, findings = analyze_sources(sources, cfg)
        report = build_report(model, findings, cfg)
    _emit(export_json(report), args.out)
    return 0


def _cmd_diff(args) -> int:
    cfg = _load_cfg(args.config)
    _, findings_a = snapshot_analyze(args.path, args.from_rev, cfg)
    _, findings_b = snapshot_analyze(args.path, args.to_rev, cfg)
    delta = debt_diff(findings_a, findings_b, args.from_rev, args.to_rev)
    _emit(export_delta_json(delta), args.out)
    return 0


def _cmd_series(args) -> int:
    cfg = _load_cfg(args.config)
    ledger = debt_series(
        args.path, args.from_date, args.to_date, args.interval, cfg, args.branch
    )
    _emit(ledger_csv(ledger).encode("utf-8"), args.out)
    return 0


def _cmd_serve(args) -> int:
    report = load_report(args.report)
    server = serve_api(report, args.port, host=args.host, static_dir=args.static)
    host, port = server.server_address[:2]
    print(f"serving report on http://{host}:{port}/api/features", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="featdebt",
        description="Feature-level technical debt analyzer for Java codebases",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a source tree or a revision")
    p.add_argument("path", help="source directory (or git repo with --rev)")
    p.add_argument("--rev", help="analyze this revision instead of the work tree")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--out", help="write report here instead of stdout")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("diff", help="debt inserted/paid between two revisions")
    p.add_argument("path", help="git repository path")
    p.add_argument("--from", dest="from_rev", required=True, metavar="REV")
    p.add_argument("--to", dest="to_rev", required=True, metavar="REV")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--out", help="write delta JSON here instead of stdout")
    p.set_defaults(func=_cmd_diff)

    p = sub.add_parser("series", help="sampled inserted/paid ledger as CSV")
    p.add_argument("path", help="git repository path")
    p.add_argument("--from", dest="from_date", required=True, metavar="DATE")
    p.add_argument("--to", dest="to_date", required=True, metavar="DATE")
    p.add_argument("--interval", type=int, required=True, metavar="DAYS")
    p.add_argument("--branch", default="HEAD")
    p.add_argument("--config", help="JSON config file")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("serve", help="serve a report over the read-only API")
    p.add_argument("report", help="report JSON produced by analyze")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="directory of UI assets to serve at /")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FeatdebtError as exc:
        print(f"featdebt: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"featdebt: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
