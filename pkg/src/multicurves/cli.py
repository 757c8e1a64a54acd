"""Unified command-line front end.

Exit codes: 0 on success or all-match, 1 when a verification sweep finds a
mismatch, 2 on usage errors.  Every command is deterministic given its flags
(and seed, where sampling is involved).
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import decompositions, formulas
from .curves import (
    cut_pieces,
    disjoint,
    enumerate_curves,
    multicurve_from_json,
)
from .graphs import bfs_distance, build_graph, run_qi_suite
from .surfaces import SurfaceSig, parse_sig
from .triangulations import triangulate


def _sig_argument(text: str) -> SurfaceSig:
    try:
        return parse_sig(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        click.echo(text, nl=False)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


@click.group()
def main():
    """Ranks, classifications, and verification tools for multicurve graphs."""


@main.command()
@click.argument("surface")
@click.argument("k", type=int)
def rank(surface, k):
    """Quasi-flat rank of the k-multicurve graph on surface "g,b"."""
    sig = _sig_argument(surface)
    try:
        value = formulas.quasiflat_rank(sig, k)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(_json_dumps({"g": sig.g, "b": sig.b, "k": k, "rank": value}), nl=False)


@main.command()
@click.argument("surface")
@click.argument("xi", type=int)
def mu(surface, xi):
    """Closed-form maximal piece count at complexity floor xi."""
    sig = _sig_argument(surface)
    try:
        value = formulas.max_piece_count(sig, xi)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(
        _json_dumps({"g": sig.g, "b": sig.b, "xi": xi, "mu": value, "source": "formula"}),
        nl=False,
    )


def _classify_payload(sig: SurfaceSig, k: int, source: str) -> dict:
    payload: dict = {"g": sig.g, "b": sig.b, "k": k, "source": source}
    if source in ("formula", "both"):
        payload_formula = formulas.classify_closed_form(sig, k).kind
    if source in ("oracle", "both"):
        payload_oracle = decompositions.classify_exhaustive(sig, k).kind
    if source == "formula":
        payload["classification"] = payload_formula
        payload["rank"] = formulas.quasiflat_rank(sig, k)
    elif source == "oracle":
        payload["classification"] = payload_oracle
    else:
        payload["classification_formula"] = payload_formula
        payload["classification_oracle"] = payload_oracle
        payload["match"] = payload_formula == payload_oracle
    return payload


@main.command()
@click.argument("surface")
@click.argument("k", type=int)
@click.option("--source", type=click.Choice(["formula", "oracle", "both"]), default="formula")
def classify(surface, k, source):
    """Hyperbolic / relatively hyperbolic / thick for the k-multicurve graph."""
    sig = _sig_argument(surface)
    try:
        payload = _classify_payload(sig, k, source)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(_json_dumps(payload), nl=False)


def _table_rows(gmax: int, bmax: int):
    rows = []
    for g in range(gmax + 1):
        for b in range(bmax + 1):
            sig = SurfaceSig(g, b)
            if sig.complexity < 2:
                continue
            for k in range(1, sig.complexity + 1):
                kf = formulas.classify_closed_form(sig, k).kind
                ko = decompositions.classify_exhaustive(sig, k).kind
                rows.append(
                    {
                        "g": g,
                        "b": b,
                        "k": k,
                        "rank": formulas.quasiflat_rank(sig, k),
                        "classification_formula": kf,
                        "classification_oracle": ko,
                        "match": kf == ko,
                    }
                )
    return rows


@main.command()
@click.option("--gmax", type=int, default=4, show_default=True)
@click.option("--bmax", type=int, default=5, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(), default=None)
def table(gmax, bmax, fmt, out):
    """Classification table over a parameter range, formula and oracle."""
    if gmax < 0 or bmax < 0:
        raise click.UsageError("ranges must be nonnegative")
    rows = _table_rows(gmax, bmax)
    summary: dict[str, int] = {}
    for row in rows:
        summary[row["classification_formula"]] = (
            summary.get(row["classification_formula"], 0) + 1
        )
    if fmt == "json":
        _emit(_json_dumps({"rows": rows, "summary": summary}), out)
    else:
        header = [
            "g", "b", "k", "rank",
            "classification_formula", "classification_oracle", "match",
        ]
        _emit(
            _csv_text(header, [[row[h] for h in header] for row in rows]),
            out,
        )
        click.echo(
            "summary: "
            + ", ".join(f"{kind}={n}" for kind, n in sorted(summary.items())),
            err=True,
        )


def _verify_rows(gmax: int, bmax: int):
    """Formula-versus-oracle sweep plus the rank identity check."""
    rows = []
    identity_failures = []
    for g in range(gmax + 1):
        for b in range(bmax + 1):
            sig = SurfaceSig(g, b)
            if sig.complexity < 1:
                continue
            for xi in range(1, sig.complexity + 1):
                mf = formulas.max_piece_count(sig, xi)
                mo = decompositions.max_piece_count_search(sig, xi)
                rows.append([g, b, xi, mf, mo, mf == mo])
            for k in range(1, sig.complexity + 1):
                rank_value = formulas.quasiflat_rank(sig, k)
                if (b, k) == (0, 1):
                    expected = 1
                else:
                    expected = formulas.max_piece_count(sig, 3 * g - 2 + b - k)
                if rank_value != expected:
                    identity_failures.append((g, b, k, rank_value, expected))
    return rows, identity_failures


@main.command()
@click.option("--gmax", type=int, default=4, show_default=True)
@click.option("--bmax", type=int, default=5, show_default=True)
@click.option("--out", type=click.Path(), default=None)
@click.pass_context
def verify(ctx, gmax, bmax, out):
    """Exhaustively compare the piece-count formula with the oracle."""
    if gmax < 0 or bmax < 0:
        raise click.UsageError("ranges must be nonnegative")
    rows, identity_failures = _verify_rows(gmax, bmax)
    header = ["g", "b", "xi", "mu_formula", "mu_oracle", "match"]
    _emit(_csv_text(header, rows), out)
    bad = [row for row in rows if not row[5]]
    for g, b, k, got, want in identity_failures:
        click.echo(f"rank identity failed at g={g} b={b} k={k}: {got} != {want}", err=True)
    if bad or identity_failures:
        ctx.exit(1)


@main.group()
def oracle():
    """Brute-force decomposition oracle commands."""


@oracle.command("mu")
@click.argument("surface")
@click.argument("xi", type=int)
def oracle_mu(surface, xi):
    """Maximal piece count at complexity floor xi, by exhaustive search."""
    sig = _sig_argument(surface)
    try:
        value = decompositions.max_piece_count_search(sig, xi)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(
        _json_dumps({"g": sig.g, "b": sig.b, "xi": xi, "mu": value, "source": "oracle"}),
        nl=False,
    )


oracle.add_command(verify, name="verify")


@oracle.command("classify")
@click.argument("surface")
@click.argument("k", type=int)
def oracle_classify(surface, k):
    """Classification adjudicated by the decomposition oracle."""
    sig = _sig_argument(surface)
    try:
        payload = _classify_payload(sig, k, "oracle")
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(_json_dumps(payload), nl=False)


@oracle.command("discrepancies")
@click.option("--gmax", type=int, default=4, show_default=True)
@click.option("--bmax", type=int, default=5, show_default=True)
@click.option("--out", type=click.Path(), default=None)
def oracle_discrepancies(gmax, bmax, out):
    """Triples where the printed classification differs from the oracle."""
    if gmax < 0 or bmax < 0:
        raise click.UsageError("ranges must be nonnegative")
    rows = [
        [r["g"], r["b"], r["k"], r["classification_formula"], r["classification_oracle"]]
        for r in _table_rows(gmax, bmax)
        if not r["match"]
    ]
    header = ["g", "b", "k", "classification_formula", "classification_oracle"]
    _emit(_csv_text(header, rows), out)


@main.group()
def curves():
    """Normal-coordinate multicurve commands."""


@curves.command("enumerate")
@click.argument("surface")
@click.option("--max-weight", type=int, required=True)
@click.option("--out", type=click.Path(), default=None)
def curves_enumerate(surface, max_weight, out):
    """Curve inventory with all edge weights bounded by --max-weight."""
    sig = _sig_argument(surface)
    try:
        tri = triangulate(sig)
        inventory = enumerate_curves(tri, max_weight)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    payload = {
        "surface": {"g": sig.g, "b": sig.b},
        "max_weight": max_weight,
        "triangulation": tri.to_json(),
        "curves": [list(c) for c in inventory],
    }
    _emit(_json_dumps(payload), out)


def _load_multicurve(path: str):
    with open(path) as handle:
        obj = json.load(handle)
    if "surface" not in obj:
        raise click.UsageError(f"{path} lacks a 'surface' entry")
    sig = SurfaceSig(int(obj["surface"]["g"]), int(obj["surface"]["b"]))
    return sig, multicurve_from_json(obj)


@curves.command("disjoint")
@click.option("--a", "path_a", type=click.Path(exists=True), required=True)
@click.option("--b", "path_b", type=click.Path(exists=True), required=True)
def curves_disjoint(path_a, path_b):
    """Decide whether two multicurve files are disjoint."""
    sig_a, comps_a = _load_multicurve(path_a)
    sig_b, comps_b = _load_multicurve(path_b)
    if sig_a != sig_b:
        raise click.UsageError("multicurves live on different surfaces")
    tri = triangulate(sig_a)
    value = disjoint(tri, comps_a, comps_b)
    click.echo(
        _json_dumps({"surface": {"g": sig_a.g, "b": sig_a.b}, "disjoint": value}),
        nl=False,
    )


@curves.command("cut")
@click.argument("surface")
@click.option("--nu", "nu_path", type=click.Path(exists=True), required=True)
def curves_cut(surface, nu_path):
    """Complementary pieces of the multicurve in --nu."""
    sig = _sig_argument(surface)
    with open(nu_path) as handle:
        components = multicurve_from_json(json.load(handle))
    tri = triangulate(sig)
    try:
        pieces = cut_pieces(tri, components)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    payload = {
        "surface": {"g": sig.g, "b": sig.b},
        "pieces": [
            {
                "g": p.g,
                "b": p.b,
                "complexity": p.complexity,
                "punctures": list(pieces.punctures(i)),
            }
            for i, p in enumerate(pieces.pieces)
        ],
    }
    click.echo(_json_dumps(payload), nl=False)


@main.group()
def graph():
    """Finite graph instances."""


@graph.command("build")
@click.argument("surface")
@click.option("--kind", type=click.Choice(["mk", "ixi"]), required=True)
@click.option("--param", type=int, required=True)
@click.option("--max-weight", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "dot"]), default="json")
@click.option("--out", type=click.Path(), default=None)
def graph_build(surface, kind, param, max_weight, fmt, out):
    """Build an induced multicurve (mk) or interpolating (ixi) graph."""
    sig = _sig_argument(surface)
    kind_name = "multicurve" if kind == "mk" else "interpolating"
    try:
        instance = build_graph(triangulate(sig), kind_name, param, max_weight)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if fmt == "dot":
        _emit(instance.to_dot(), out)
    else:
        _emit(_json_dumps(instance.to_json()), out)


@graph.command("dist")
@click.argument("path", type=click.Path(exists=True))
@click.argument("u", type=int)
@click.argument("v", type=int)
def graph_dist(path, u, v):
    """BFS distance between two vertex indices of a stored graph."""
    with open(path) as handle:
        obj = json.load(handle)
    n = len(obj["vertices"])
    if not (0 <= u < n and 0 <= v < n):
        raise click.UsageError(f"vertex indices must lie in [0, {n - 1}]")
    adjacency = [set() for _ in range(n)]
    for i, j in obj["edges"]:
        adjacency[i].add(j)
        adjacency[j].add(i)
    dist = {u: 0}
    frontier = [u]
    while frontier and v not in dist:
        nxt = []
        for node in frontier:
            for nbr in sorted(adjacency[node]):
                if nbr not in dist:
                    dist[nbr] = dist[node] + 1
                    nxt.append(nbr)
        frontier = nxt
    value = dist.get(v)
    click.echo(
        _json_dumps({"u": u, "v": v, "distance": value, "reachable": value is not None}),
        nl=False,
    )


@main.command("qi-check")
@click.argument("surface")
@click.argument("k", type=int)
@click.option("--max-weight", type=int, default=3, show_default=True)
@click.option("--samples", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def qi_check(ctx, surface, k, max_weight, samples, seed):
    """Extension, edge-bound, path-lift, and density checks for one (g,b,k)."""
    sig = _sig_argument(surface)
    try:
        report = run_qi_suite(sig, k, max_weight, samples, seed)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    for line in report.lines():
        click.echo(line)
    if not report.passed:
        ctx.exit(1)


if __name__ == "__main__":
    main()
