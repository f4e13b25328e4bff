"""Command-line interface.

Every subcommand is a thin HTTP client.  By default requests run in-process
against the bundled service app (no socket, no server needed); pass
``--server URL`` to talk to a running instance instead.

Exit codes: 0 success, 1 domain error (invalid algebra, malformed diagram,
failed axiom check, broken invariance), 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx


def _post_inprocess(path: str, payload: dict) -> httpx.Response:
    import asyncio

    from .service.app import create_app

    async def call() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://bondlekit.local", timeout=600.0
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(call())


def _post(ctx: click.Context, path: str, payload: dict) -> dict:
    server = ctx.obj.get("server")
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            resp = client.post(path, json=payload)
    else:
        resp = _post_inprocess(path, payload)
    if resp.status_code == 422:
        detail = resp.json().get("detail")
        click.echo(f"error: {detail}", err=True)
        sys.exit(1)
    resp.raise_for_status()
    return resp.json()


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise click.UsageError(f"cannot read JSON file {path}: {exc}")


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise click.UsageError(f"cannot read {path}: {exc}")


def _parse_affine(spec: str) -> dict:
    """Parse 'n=15,a=4,b=3,m=6' (m optional) into request parameters."""
    params: dict[str, int] = {}
    for part in spec.split(","):
        key, _, value = part.partition("=")
        key = key.strip()
        if key not in {"n", "a", "b", "m"} or not value.strip().lstrip("-").isdigit():
            raise click.UsageError(f"bad --affine component {part!r}; expected n=..,a=..,b=..[,m=..]")
        params[key] = int(value)
    missing = {"n", "a", "b"} - params.keys()
    if missing:
        raise click.UsageError(f"--affine missing {sorted(missing)}")
    return params


@click.group()
@click.option("--server", default=None, metavar="URL", help="Use a running service instead of in-process calls.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Coloring invariants and state sums for bonded open-chain diagrams."""
    ctx.ensure_object(dict)
    ctx.obj["server"] = server


@main.command()
@click.option("--affine", "affine_spec", default=None, metavar="SPEC", help="n=..,a=..,b=..[,m=..]")
@click.option("--bondle", "bondle_path", default=None, type=click.Path(), help="Bondle JSON file.")
@click.option("--level", type=click.Choice(["quandle", "singquandle", "bondle", "auto"]), default="auto")
@click.option("--json", "as_json", is_flag=True, help="Emit the full JSON report.")
@click.pass_context
def check(ctx: click.Context, affine_spec: str | None, bondle_path: str | None, level: str, as_json: bool) -> None:
    """Verify the algebra axioms of a bondle."""
    if (affine_spec is None) == (bondle_path is None):
        raise click.UsageError("provide exactly one of --affine and --bondle")
    payload: dict = {"level": level}
    if affine_spec:
        payload["affine"] = _parse_affine(affine_spec)
    else:
        payload["bondle"] = _read_json(bondle_path)
    data = _post(ctx, "/check", payload)
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        verdict = "PASS" if data["report"]["passed"] else "FAIL"
        click.echo(f"{verdict} {data['level']} axioms")
        for v in data["report"]["violations"][:10]:
            click.echo(f"  {v['axiom']} at {tuple(v['witness'])}")
    sys.exit(0 if data["report"]["passed"] else 1)


@main.command("weights-check")
@click.option("--bondle", "bondle_path", required=True, type=click.Path())
@click.option("--weights", "weights_path", required=True, type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def weights_check(ctx: click.Context, bondle_path: str, weights_path: str, as_json: bool) -> None:
    """Verify the Boltzmann-weight compatibility conditions."""
    data = _post(
        ctx,
        "/weights/check",
        {"bondle": _read_json(bondle_path), "weights": _read_json(weights_path)},
    )
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        verdict = "PASS" if data["report"]["passed"] else "FAIL"
        click.echo(f"{verdict} weight conditions")
        for v in data["report"]["violations"][:10]:
            click.echo(f"  {v['axiom']} at {tuple(v['witness'])}")
    sys.exit(0 if data["report"]["passed"] else 1)


@main.command()
@click.argument("diagram", type=click.Path())
@click.option("--bondle", "bondle_path", required=True, type=click.Path())
@click.option("--engine", type=click.Choice(["backtrack", "affine", "both"]), default="backtrack")
@click.option("--enumerate", "do_enumerate", is_flag=True, help="List colorings as well as counting.")
@click.option("--limit", default=1000, show_default=True, help="Cap on enumerated colorings.")
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def color(ctx: click.Context, diagram: str, bondle_path: str, engine: str, do_enumerate: bool, limit: int, as_json: bool) -> None:
    """Count (and optionally enumerate) colorings of a diagram."""
    data = _post(
        ctx,
        "/color",
        {
            "diagram": _read_text(diagram),
            "bondle": _read_json(bondle_path),
            "engine": engine,
            "enumerate": do_enumerate,
            "limit": limit,
        },
    )
    if as_json:
        click.echo(json.dumps(data, indent=2))
        return
    click.echo(f"colorings: {data['count']}")
    for e in data["engines"]:
        click.echo(f"  {e['engine']}: {e['count']} in {e['seconds']:.6f}s")
    if data["colorings"] is not None:
        for c in data["colorings"]:
            click.echo("  " + " ".join(str(x) for x in c))
        if data["truncated"]:
            click.echo("  ... (truncated)")


@main.command()
@click.argument("diagram", type=click.Path())
@click.option("--bondle", "bondle_path", required=True, type=click.Path())
@click.option("--weights", "weights_path", required=True, type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def statesum(ctx: click.Context, diagram: str, bondle_path: str, weights_path: str, as_json: bool) -> None:
    """Compute the Boltzmann-weight state sum of a diagram."""
    data = _post(
        ctx,
        "/statesum",
        {
            "diagram": _read_text(diagram),
            "bondle": _read_json(bondle_path),
            "weights": _read_json(weights_path),
        },
    )
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(data["rendered"])


@main.command()
@click.argument("diagrams", nargs=-1, required=True, type=click.Path())
@click.option("--bondle", "bondle_path", required=True, type=click.Path())
@click.option("--weights", "weights_path", required=True, type=click.Path())
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def cluster(ctx: click.Context, diagrams: tuple[str, ...], bondle_path: str, weights_path: str, as_json: bool) -> None:
    """Two-stage clustering: group by coloring count, refine by state sum."""
    named = {Path(p).stem: _read_text(p) for p in diagrams}
    data = _post(
        ctx,
        "/cluster",
        {
            "diagrams": named,
            "bondle": _read_json(bondle_path),
            "weights": _read_json(weights_path),
        },
    )
    if as_json:
        click.echo(json.dumps(data, indent=2))
        return
    click.echo("stage 1 (coloring count):")
    for key, members in data["stage1"].items():
        click.echo(f"  {key}: {', '.join(members)}")
    click.echo("stage 2 (count + state sum):")
    for key, members in data["stage2"].items():
        click.echo(f"  {key}: {', '.join(members)}")
    if data["distinguished_pairs"]:
        click.echo("separated only by the state sum:")
        for a, b in data["distinguished_pairs"]:
            click.echo(f"  {a} vs {b}")


@main.command()
@click.argument("diagram", type=click.Path())
@click.option("--bondle", "bondle_path", required=True, type=click.Path())
@click.option("--weights", "weights_path", default=None, type=click.Path())
@click.option("--moves", "n_moves", default=100, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def moves(ctx: click.Context, diagram: str, bondle_path: str, weights_path: str | None, n_moves: int, seed: int, as_json: bool) -> None:
    """Apply random kink/poke moves and verify invariance of the invariants."""
    payload = {
        "diagram": _read_text(diagram),
        "bondle": _read_json(bondle_path),
        "moves": n_moves,
        "seed": seed,
    }
    if weights_path:
        payload["weights"] = _read_json(weights_path)
    data = _post(ctx, "/moves", payload)
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        verdict = "PASS" if data["invariant"] else "FAIL"
        extra = f", state sum {data['rendered']}" if data["rendered"] is not None else ""
        click.echo(
            f"{verdict} {data['applied']} moves: count {data['count']}{extra}"
        )
        for f in data["failures"][:5]:
            click.echo(f"  step {f['step']} ({f['move']}): count {f['count']}, sum {f['rendered']}")
    sys.exit(0 if data["invariant"] else 1)


@main.group()
def search() -> None:
    """Search for valid affine bondles or Boltzmann weights."""


@search.command("bondles")
@click.option("--n", "n", required=True, type=int)
@click.option("--with-r3/--no-r3", default=True, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def search_bondles(ctx: click.Context, n: int, with_r3: bool, as_json: bool) -> None:
    """Enumerate all affine parameter triples valid for Z_n."""
    data = _post(ctx, "/search/bondles", {"n": n, "with_r3": with_r3})
    if as_json:
        click.echo(json.dumps(data, indent=2))
        return
    click.echo(f"{len(data['triples'])} valid triples ({data['checked']} candidates examined)")
    for t in data["triples"]:
        click.echo(f"  n={t['n']} a={t['a']} b={t['b']} m={t['m']}")


@search.command("weights")
@click.option("--bondle", "bondle_path", required=True, type=click.Path())
@click.option("--m", "m", required=True, type=int)
@click.option("--budget", default=1_000_000, show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def search_weights_cmd(ctx: click.Context, bondle_path: str, m: int, budget: int, as_json: bool) -> None:
    """Search weight triples (zero crossing weight) passing all conditions."""
    data = _post(
        ctx,
        "/search/weights",
        {"bondle": _read_json(bondle_path), "m": m, "budget": budget},
    )
    if as_json:
        click.echo(json.dumps(data, indent=2))
        return
    click.echo(f"{len(data['solutions'])} solutions" + (" (truncated)" if data["truncated"] else ""))
    for w in data["solutions"]:
        if w.get("constant"):
            click.echo(f"  constant phi1={w['constant']['a']} phi2={w['constant']['b']} (m={w['m']})")
        else:
            click.echo(f"  table solution (m={w['m']})")


if __name__ == "__main__":
    main()
