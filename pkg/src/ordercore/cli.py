"""Command-line front end: generators, decomposition dumps, workload replay
with per-op statistics, the stability protocol, heuristic comparison, the
HTTP service, and a thin client for it."""

import sys

import click

from .decomp import core_decompose
from .errors import CheckFailed, OrderCoreError
from .generators import format_edge_list, generate
from .graph import load_edge_list_path
from .workload import (
    CSV_HEADER,
    HISTOGRAM_EDGES,
    heuristics_compare,
    make_engine,
    parse_workload_path,
    replay,
    split_temporal,
    stability_run,
)


@click.group()
def main():
    """Dynamic k-core maintenance toolkit."""


@main.command()
@click.option("--gen", "spec", required=True, help="lollipop:n | er:n,m | cliquechain:c,k")
@click.option("--seed", type=int, default=None)
@click.option("--out", type=click.Path(writable=True), default=None, help="output file (default stdout)")
def gen(spec, seed, out):
    """Write a synthetic edge-list file."""
    try:
        edges, n = generate(spec, seed=seed)
    except (OrderCoreError, ValueError) as exc:
        raise click.ClickException(str(exc))
    text = format_edge_list(edges, n, comment=f"generator: {spec} seed={seed}")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--heuristic", type=click.Choice(["small", "large", "random"]), default="small")
@click.option("--seed", type=int, default=None)
def decompose(graph_path, heuristic, seed):
    """Peel a graph and dump per-vertex core, rem and in-bucket rank."""
    report = load_edge_list_path(graph_path)
    g = report.graph
    state, order = core_decompose(g, heuristic=heuristic, seed=seed)
    for v in range(g.n):
        click.echo(
            f"{report.external_ids[v]} {state.core[v]} {state.rem[v]} "
            f"{order.rank_within(v) if g.n else 0}"
        )
    sizes = " ".join(
        f"|O_{k}|={order.bucket_size(k)}"
        for k in order.bucket_keys()
        if order.bucket_size(k)
    )
    click.echo(f"# n={g.n} m={g.m} max_core={state.max_core} {sizes}".rstrip())


def _load_graph_and_ops(graph_path, workload_path, derive_latest):
    report = load_edge_list_path(graph_path)
    if derive_latest:
        base, ops = split_temporal(report, derive_latest)
        report.graph = base
        return report, ops
    if workload_path is None:
        raise click.ClickException("need --workload (or --derive-latest on a temporal graph)")
    raw = parse_workload_path(workload_path)
    # workload vertex ids live in the same namespace as the graph file
    for op in raw:
        op.u = report.intern(op.u)
        if op.kind != "Q":
            op.v = report.intern(op.v)
    return report, raw


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--workload", "workload_path", type=click.Path(exists=True), default=None)
@click.option("--algo", type=click.Choice(["order", "traversal", "oracle"]), default="order")
@click.option("--heuristic", type=click.Choice(["small", "large", "random"]), default="small")
@click.option("--check-every", type=int, default=0, help="oracle check period, 0 = never")
@click.option("--stats-out", type=click.Path(writable=True), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--derive-latest", type=int, default=0, help="derive an insert workload from the N newest timestamped edges")
def apply(graph_path, workload_path, algo, heuristic, check_every, stats_out, seed, derive_latest):
    """Replay a workload on a graph and emit per-op statistics."""
    report, ops = _load_graph_and_ops(graph_path, workload_path, derive_latest)
    engine = make_engine(algo, report.graph, heuristic=heuristic, seed=seed)
    out = open(stats_out, "w", encoding="utf-8") if stats_out else sys.stdout
    try:
        out.write(CSV_HEADER + "\n")
        out.flush()

        def sink(row):
            out.write(row + "\n")
            out.flush()  # keep the prefix on a crash

        try:
            summary = replay(engine, ops, check_every=check_every, row_sink=sink)
        except CheckFailed as exc:
            click.echo(f"CHECK FAILED: {exc}", err=True)
            click.echo(f"cores: {engine.cores()}", err=True)
            sys.exit(1)
        except OrderCoreError as exc:
            click.echo(f"replay aborted: {exc}", err=True)
            sys.exit(1)
    finally:
        if stats_out:
            out.close()
    edges = [f"<={e}" for e in HISTOGRAM_EDGES] + [f">{HISTOGRAM_EDGES[-1]}"]
    hist = " ".join(f"{e}:{c}" for e, c in zip(edges, summary.histogram))
    click.echo(
        f"# ops={summary.ops} ratio={summary.ratio:.3f} "
        f"visited_hist[{hist}] total_micros={summary.elapsed_micros_total}"
    )


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--groups", type=int, required=True)
@click.option("--group-size", type=int, required=True)
@click.option("--p", type=float, default=0.0, help="per-insert random-removal probability")
@click.option("--seed", type=int, default=None)
@click.option("--algo", type=click.Choice(["order", "traversal", "oracle"]), default="order")
@click.option("--check/--no-check", default=False, help="oracle check at group boundaries")
@click.option("--stats-out", type=click.Path(writable=True), default=None)
def stability(graph_path, groups, group_size, p, seed, algo, check, stats_out):
    """Remove sampled edges, reinsert them group by group, time each group."""
    report = load_edge_list_path(graph_path)
    try:
        rows = stability_run(
            report.graph, groups, group_size, p, seed=seed, algo=algo, check=check
        )
    except (ValueError, CheckFailed) as exc:
        raise click.ClickException(str(exc))
    out = open(stats_out, "w", encoding="utf-8") if stats_out else sys.stdout
    try:
        out.write("group_index,micros,vstar_total\n")
        for row in rows:
            out.write(f"{row.group_index},{row.micros},{row.vstar_total}\n")
            out.flush()
    finally:
        if stats_out:
            out.close()


@main.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--workload", "workload_path", type=click.Path(exists=True), default=None)
@click.option("--seed", type=int, default=None)
@click.option("--derive-latest", type=int, default=0)
def heuristics(graph_path, workload_path, seed, derive_latest):
    """Compare initial-order heuristics on the same insertion workload."""
    report, ops = _load_graph_and_ops(graph_path, workload_path, derive_latest)
    try:
        results = heuristics_compare(report.graph, ops, seed=seed)
    except CheckFailed as exc:
        raise click.ClickException(str(exc))
    click.echo("heuristic ratio visited vstar")
    for name, summary in results.items():
        click.echo(
            f"{name} {summary.ratio:.3f} "
            f"{summary.insert_visited_total} {summary.insert_vstar_total}"
        )


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


@main.group()
@click.option("--url", default="http://127.0.0.1:8000", help="service base URL")
@click.pass_context
def client(ctx, url):
    """Thin HTTP client for a running service."""
    ctx.obj = url.rstrip("/")


def _client_call(method, url, **kwargs):
    import httpx

    resp = httpx.request(method, url, timeout=30.0, **kwargs)
    if resp.status_code >= 400:
        raise click.ClickException(f"{resp.status_code}: {resp.text}")
    return resp


@client.command("create")
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--algo", type=click.Choice(["order", "traversal", "oracle"]), default="order")
@click.option("--heuristic", type=click.Choice(["small", "large", "random"]), default="small")
@click.pass_obj
def client_create(url, graph_path, algo, heuristic):
    """Create a session from an edge-list file; prints the session id."""
    with open(graph_path, "r", encoding="utf-8") as fh:
        text = fh.read()
    resp = _client_call(
        "POST",
        f"{url}/sessions",
        json={"edge_text": text, "engine": algo, "heuristic": heuristic},
    )
    click.echo(resp.json()["session_id"])


@client.command("insert")
@click.argument("sid")
@click.argument("u", type=int)
@click.argument("v", type=int)
@click.pass_obj
def client_insert(url, sid, u, v):
    resp = _client_call("POST", f"{url}/sessions/{sid}/edges", json={"u": u, "v": v})
    click.echo(resp.text)


@client.command("remove")
@click.argument("sid")
@click.argument("u", type=int)
@click.argument("v", type=int)
@click.pass_obj
def client_remove(url, sid, u, v):
    resp = _client_call("DELETE", f"{url}/sessions/{sid}/edges/{u}/{v}")
    click.echo(resp.text)


@client.command("cores")
@click.argument("sid")
@click.option("--vertex", type=int, default=None)
@click.pass_obj
def client_cores(url, sid, vertex):
    path = f"{url}/sessions/{sid}/cores"
    if vertex is not None:
        path += f"/{vertex}"
    click.echo(_client_call("GET", path).text)


@client.command("validate")
@click.argument("sid")
@click.pass_obj
def client_validate(url, sid):
    click.echo(_client_call("GET", f"{url}/sessions/{sid}/validate").text)


if __name__ == "__main__":
    main()
