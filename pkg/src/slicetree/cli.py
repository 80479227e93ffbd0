"""Command-line interface.

The CLI is a thin client: every command talks HTTP to the service layer,
by default in-process over an ASGI transport (no socket), or to a running
server via --server.  Exit codes: 0 success, 1 domain error (structured
JSON error record on stderr), 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from .service.app import create_app


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    # in-process: drive the ASGI app directly, no socket involved
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from starlette.testclient import TestClient

    return TestClient(create_app(), raise_server_exceptions=False)


def _fail(payload: dict) -> None:
    click.echo(json.dumps(payload, indent=2), err=True)
    sys.exit(1)


def _post(client: httpx.Client, path: str, body: dict) -> dict:
    resp = client.post(path, json=body)
    if resp.status_code >= 400:
        try:
            _fail(resp.json())
        except json.JSONDecodeError:
            _fail({"error": "HTTPError", "detail": resp.text})
    return resp.json()


def _read_tree(path: str) -> dict:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        _fail({"error": "InvalidTree", "detail": f"cannot read {path}: {exc}"})
    return obj


def _emit(obj: dict, json_out: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if json_out:
        Path(json_out).write_text(text)
    else:
        click.echo(text, nl=False)


_server_option = click.option("--server", default=None, help="URL of a running service; default runs in-process.")


@click.group()
def main() -> None:
    """Combinatorics of stable reduction: sliced trees, pruning, censuses."""


@main.command()
@click.option("--in", "infile", required=True, help="Tree JSON file.")
@click.option("--target", type=click.Choice(["sliced", "pruned"]), default="pruned")
@click.option("--json", "json_out", default=None, help="Write the report here instead of stdout.")
@_server_option
def validate(infile: str, target: str, json_out: str | None, server: str | None) -> None:
    """Validate a tree and report stability data."""
    with _client(server) as c:
        out = _post(c, "/api/validate", {"tree": _read_tree(infile), "target": target})
    _emit(out, json_out)
    if not out["ok"]:
        sys.exit(1)


def _parse_policy(policy: str) -> tuple[str, list[str] | None]:
    if policy.startswith("order="):
        seq = [v for v in policy[len("order="):].split(",") if v]
        if not seq:
            raise click.UsageError("order= needs a comma-separated vertex list")
        return "id", seq
    if policy not in ("id", "rounds"):
        raise click.UsageError(f"unknown policy {policy!r}")
    return policy, None


def _run_prune(infile: str, policy: str, server: str | None, snapshots: bool = True) -> dict:
    name, order = _parse_policy(policy)
    body = {"tree": _read_tree(infile), "policy": name, "snapshots": snapshots}
    if order is not None:
        body["order"] = order
    with _client(server) as c:
        return _post(c, "/api/prune", body)


def _write_dot_frames(trace_obj: dict, dot_dir: str) -> None:
    """One DOT frame per pruning round, replayed from the trace record."""
    from .pruning import _Working, _as_pruned
    from .serial import tree_from_obj, tree_to_dot

    p = tree_from_obj(trace_obj["input"])
    frames = [tree_to_dot(p, name="frame0")]
    events = trace_obj["events"]
    if events:
        w = _Working(_as_pruned(p))
        for i, e in enumerate(events):
            w.remove_leaf(e["removed"])
            nxt = events[i + 1] if i + 1 < len(events) else None
            if nxt is None or nxt["round"] != e["round"]:
                frames.append(tree_to_dot(w.snapshot(), name=f"frame{len(frames)}"))
    out = Path(dot_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i, frame in enumerate(frames):
        (out / f"frame{i}.dot").write_text(frame)


@main.command()
@click.option("--in", "infile", required=True, help="Tree JSON file.")
@click.option("--policy", default="id", help="id | rounds | order=v1,v2,...")
@click.option("--trace", "with_trace", is_flag=True, help="Emit the full trace, not just the final tree.")
@click.option("--json", "json_out", default=None)
@click.option("--dot", "dot_dir", default=None, help="Directory for DOT frames of the trace.")
@_server_option
def prune(infile: str, policy: str, with_trace: bool, json_out: str | None, dot_dir: str | None, server: str | None) -> None:
    """Prune a tree to its stable model."""
    out = _run_prune(infile, policy, server)
    if dot_dir:
        _write_dot_frames(out, dot_dir)
    _emit(out if with_trace else {"final": out["final"], "final_key": out["final_key"]}, json_out)


@main.command()
@click.option("--in", "infile", required=True, help="Tree JSON file.")
@click.option("--policy", default="rounds", help="id | rounds | order=v1,v2,...")
@click.option("--json", "json_out", default=None)
@click.option("--dot", "dot_dir", default=None)
@_server_option
def trace(infile: str, policy: str, json_out: str | None, dot_dir: str | None, server: str | None) -> None:
    """Prune and emit the full event trace (per-round policy by default)."""
    out = _run_prune(infile, policy, server)
    if dot_dir:
        _write_dot_frames(out, dot_dir)
    _emit(out, json_out)


@main.command(name="enumerate")
@click.option("--height", required=True, type=int)
@click.option("--target", required=True, type=click.Choice(["sliced", "pruned"]))
@click.option("--json", "json_out", default=None)
@click.option("--dot", "dot_dir", default=None, help="Directory for one DOT file per census entry.")
@click.option("--max-entries", default=10_000, type=int)
@click.option("--max-vertices", default=40, type=int)
@_server_option
def enumerate_cmd(height: int, target: str, json_out: str | None, dot_dir: str | None, max_entries: int, max_vertices: int, server: str | None) -> None:
    """Enumerate all stable trees of a given height, up to isomorphism."""
    with _client(server) as c:
        out = _post(c, "/api/enumerate", {
            "height": height,
            "target": target,
            "max_entries": max_entries,
            "max_vertices": max_vertices,
        })
    if dot_dir:
        from .serial import tree_from_obj, tree_to_dot

        d = Path(dot_dir)
        d.mkdir(parents=True, exist_ok=True)
        for i, entry in enumerate(out["census"]["entries"]):
            p = tree_from_obj(entry["tree"])
            (d / f"entry{i:05d}.dot").write_text(tree_to_dot(p, name=f"entry{i}"))
    _emit(out["census"], json_out)
    if out.get("cap_exceeded"):
        _fail({"error": "CapExceeded", "detail": out.get("cap_message", "cap exceeded")})


@main.command()
@click.option("--profile", "profile_file", required=True, help="Weierstrass profile JSON file.")
@click.option("--json", "json_out", default=None)
@_server_option
def classify(profile_file: str, json_out: str | None, server: str | None) -> None:
    """Classify the points of a Weierstrass vanishing-order profile."""
    with _client(server) as c:
        out = _post(c, "/api/classify", {"profile": _read_tree(profile_file)})
    _emit(out, json_out)


@main.command()
@click.option("--n", "n", required=True, type=int, help="Height of the fibration.")
@click.option("--eps", default=None, help="Optional epsilon as p/q.")
@click.option("--json", "json_out", default=None)
@_server_option
def formulas(n: int, eps: str | None, json_out: str | None, server: str | None) -> None:
    """Volume, stability window and moduli dimension for height n."""
    params = {"n": n}
    if eps is not None:
        params["eps"] = eps
    with _client(server) as c:
        resp = c.get("/api/formulas", params=params)
        if resp.status_code >= 400:
            _fail(resp.json())
        out = resp.json()
    _emit(out, json_out)


@main.command(name="export-dot")
@click.option("--in", "infile", required=True, help="Tree JSON file.")
@click.option("--dot", "dot_out", default=None, help="Output DOT file (default stdout).")
@_server_option
def export_dot(infile: str, dot_out: str | None, server: str | None) -> None:
    """Render a tree as DOT with marking stubs."""
    with _client(server) as c:
        out = _post(c, "/api/export/dot", {"tree": _read_tree(infile)})
    if dot_out:
        Path(dot_out).write_text(out["dot"])
    else:
        click.echo(out["dot"], nl=False)


if __name__ == "__main__":
    main()
