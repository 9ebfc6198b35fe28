"""Read-only JSON API over a loaded report, plus static file serving for
the explorer UI.

The API is strictly a view: every value it returns is taken verbatim from
the report document, never recomputed. GET only; unknown ids are 404.
"""

from __future__ import annotations

import json
import mimetypes
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional
from urllib.parse import unquote, urlparse

from featdebt.errors import FeatdebtError


class ReportIndex:
    """Lookup structures over one immutable report document."""

    def __init__(self, report: dict):
        self.report = report
        self.features_by_id = {f["id"]: f for f in report.get("features", [])}
        self.files = {f["path"]: f for f in report.get("files", [])}
        self.findings_by_file: dict[str, list[dict]] = {}
        self.findings_by_entity: dict[str, list[dict]] = {}
        for finding in report.get("findings", []):
            self.findings_by_file.setdefault(finding["file"], []).append(finding)
            self.findings_by_entity.setdefault(finding["entity_key"], []).append(
                finding
            )
        self.entities = report.get("entities", {})
        self.entities_by_file: dict[str, list[str]] = {}
        for key, info in self.entities.items():
            self.entities_by_file.setdefault(info["file"], []).append(key)
        metrics = report.get("metrics", {})
        self.vectors = {}
        for qname, values in metrics.get("classes", {}).items():
            self.vectors[qname] = {"scope": "class", "values": values}
        for mqname, values in metrics.get("methods", {}).items():
            self.vectors[mqname] = {"scope": "method", "values": values}

    # -- endpoint payloads -------------------------------------------------

    def meta(self) -> dict:
        return {
            "metadata": self.report.get("metadata", {}),
            "summary": self.report.get("summary", {}),
            "schema_version": self.report.get("schema_version"),
        }

    def feature_list(self) -> list[dict]:
        return [
            {
                "id": f["id"],
                "name": f["name"],
                "controller": f["controller"],
                "main_method": f["main_method"],
                "total": f["total"],
                "file_count": len(f["files"]),
            }
            for f in self.report.get("features", [])
        ]

    def feature_detail(self, fid: str) -> Optional[dict]:
        return self.features_by_id.get(fid)

    def file_detail(self, path: str) -> Optional[dict]:
        info = self.files.get(path)
        if info is None:
            return None
        return {
            **info,
            "findings": self.findings_by_file.get(path, []),
            "entities": sorted(self.entities_by_file.get(path, [])),
        }

    def entity_detail(self, key: str) -> Optional[dict]:
        vector = self.vectors.get(key)
        if vector is None:
            return None
        info = self.entities.get(key, {})
        return {
            "key": key,
            "kind": info.get("kind"),
            "file": info.get("file"),
            "scope": vector["scope"],
            "metrics": vector["values"],
            "findings": self.findings_by_entity.get(key, []),
        }


def _make_handler(index: ReportIndex, static_dir: Optional[Path]):
    class Handler(BaseHTTPRequestHandler):
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # keep test output clean
            pass

        def _send_json(self, payload, status=200):
            body = json.dumps(payload, sort_keys=True).encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json; charset=utf-8")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _send_404(self, what: str):
            self._send_json({"error": f"{what} not found"}, status=404)

        def _send_static(self, rel: str):
            if static_dir is None:
                self._send_404("resource")
                return
            rel = rel.lstrip("/") or "index.html"
            target = (static_dir / rel).resolve()
            if not str(target).startswith(str(static_dir.resolve())) or not target.is_file():
                self._send_404("resource")
                return
            ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
            body = target.read_bytes()
            self.send_response(200)
            self.send_header("Content-Type", ctype)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_GET(self):
            path = unquote(urlparse(self.path).path)
            if path == "/api/meta":
                self._send_json(index.meta())
            elif path == "/api/features":
                self._send_json(index.feature_list())
            elif path.startswith("/api/features/"):
                detail = index.feature_detail(path[len("/api/features/") :])
                if detail is None:
                    self._send_404("feature")
                else:
                    self._send_json(detail)
            elif path.startswith("/api/files/"):
                detail = index.file_detail(path[len("/api/files/") :])
                if detail is None:
                    self._send_404("file")
                else:
                    self._send_json(detail)
            elif path.startswith("/api/entities/"):
                detail = index.entity_detail(path[len("/api/entities/") :])
                if detail is None:
                    self._send_404("entity")
                else:
                    self._send_json(detail)
            elif path.startswith("/api/"):
                self._send_404("endpoint")
            else:
                self._send_static(path)

    return Handler


def serve_api(
    report: dict,
    port: int,
    host: str = "127.0.0.1",
    static_dir: Optional[str] = None,
) -> ThreadingHTTPServer:
    """Bind and return the server; the caller drives serve_forever()."""
    index = ReportIndex(report)
    handler = _make_handler(
        index, Path(static_dir) if static_dir is not None else None
    )
    try:
        return ThreadingHTTPServer((host, port), handler)
    except OSError as exc:
        raise FeatdebtError(f"cannot bind {host}:{port}: {exc}") from exc
