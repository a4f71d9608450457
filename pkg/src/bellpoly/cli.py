"""Thin command-line client for the bellpoly service.

Every subcommand builds a request, sends it to the service (an in-process
ASGI app by default, or a remote server via --server) and writes the response
body out untouched.  Exit codes: 0 success, 2 config error, 3 capacity error,
4 numerical-consistency error.
"""
from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path
from typing import Optional

try:
    import tomllib  # py311+
except ModuleNotFoundError:  # pragma: no cover - py310 fallback
    import tomli as tomllib

import httpx

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CAPACITY = 3
EXIT_NUMERICAL = 4

_KIND_EXIT = {"config": EXIT_CONFIG, "capacity": EXIT_CAPACITY, "numerical": EXIT_NUMERICAL}


class CliFailure(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def load_config_file(path: str) -> dict:
    """Parse a TOML or JSON config file into a plain dict."""
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise CliFailure(f"cannot read config {path}: {exc}", EXIT_CONFIG) from exc
    if p.suffix.lower() == ".json":
        parsers = [("json", json.loads)]
    elif p.suffix.lower() == ".toml":
        parsers = [("toml", tomllib.loads)]
    else:
        parsers = [("toml", tomllib.loads), ("json", json.loads)]
    errors = []
    text = raw.decode("utf-8")
    for name, parse in parsers:
        try:
            data = parse(text)
        except Exception as exc:  # noqa: BLE001 - surface as config error
            errors.append(f"{name}: {exc}")
            continue
        if not isinstance(data, dict):
            raise CliFailure(f"config {path} must be a table/object", EXIT_CONFIG)
        return data
    raise CliFailure(f"cannot parse config {path}: " + "; ".join(errors), EXIT_CONFIG)


async def _send(server: Optional[str], method: str, url: str, payload: dict) -> httpx.Response:
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
            return await client.request(method, url, json=payload)
    from .service import app

    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(
        transport=transport, base_url="http://bellpoly.internal", timeout=None
    ) as client:
        return await client.request(method, url, json=payload)


def request(server: Optional[str], method: str, url: str, payload: dict) -> httpx.Response:
    try:
        resp = asyncio.run(_send(server, method, url, payload))
    except httpx.HTTPError as exc:
        raise CliFailure(f"cannot reach service: {exc}", EXIT_CONFIG) from exc
    if resp.status_code == 200:
        return resp
    kind, detail = "config", resp.text
    try:
        body = resp.json()
        kind = body.get("kind", "config")
        detail = body.get("detail", detail)
    except ValueError:
        pass
    raise CliFailure(f"{kind} error: {detail}", _KIND_EXIT.get(kind, EXIT_CONFIG))


def _write_body(resp: httpx.Response, out: Optional[str]) -> None:
    if out:
        Path(out).write_bytes(resp.content)
    else:
        sys.stdout.write(resp.text)
        if not resp.text.endswith("\n"):
            sys.stdout.write("\n")


def cmd_sweep(args: argparse.Namespace) -> int:
    config = load_config_file(args.config)
    resp = request(args.server, "POST", "/sweep", {"config": config, "format": args.format})
    _write_body(resp, args.out)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    config = load_config_file(args.config)
    resp = request(args.server, "POST", "/spectrum", {"config": config, "format": args.format})
    _write_body(resp, args.out)
    return EXIT_OK


def cmd_audit(args: argparse.Namespace) -> int:
    config = load_config_file(args.config)
    resp = request(args.server, "POST", "/audit", config)
    _write_body(resp, args.out)
    return EXIT_OK


def cmd_bell(args: argparse.Namespace) -> int:
    p = Path(args.state)
    try:
        payload = json.loads(p.read_text())
    except (OSError, ValueError) as exc:
        raise CliFailure(f"cannot read state {args.state}: {exc}", EXIT_CONFIG) from exc
    if not isinstance(payload, dict) or "matrix" not in payload:
        raise CliFailure(f"state {args.state} must be an object with a 'matrix' key", EXIT_CONFIG)
    resp = request(args.server, "POST", "/bell", {"matrix": payload["matrix"]})
    _write_body(resp, args.out)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellpoly",
        description="XXZ coupling-graph diagonalization and CHSH nonlocality sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_server(p: argparse.ArgumentParser) -> None:
        p.add_argument("--server", default=None, help="remote service URL (default: in-process)")

    p_sweep = sub.add_parser("sweep", help="run a (J/J0, T) sweep from a config file")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    add_server(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_bell = sub.add_parser("bell", help="analyze one serialized 4x4 two-qubit state")
    p_bell.add_argument("--state", required=True)
    p_bell.add_argument("--out", default=None)
    add_server(p_bell)
    p_bell.set_defaults(func=cmd_bell)

    p_spec = sub.add_parser("spectrum", help="lowest energy levels over the grid")
    p_spec.add_argument("--config", required=True)
    p_spec.add_argument("--out", default=None)
    p_spec.add_argument("--format", choices=("csv", "json"), default="csv")
    add_server(p_spec)
    p_spec.set_defaults(func=cmd_spectrum)

    p_audit = sub.add_parser("audit", help="monogamy and witness report at one grid point")
    p_audit.add_argument("--config", required=True)
    p_audit.add_argument("--out", default=None)
    add_server(p_audit)
    p_audit.set_defaults(func=cmd_audit)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliFailure as exc:
        print(f"bellpoly: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
