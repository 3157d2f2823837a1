"""Command-line entry point.

Subcommands: ``catalogue validate``, ``tree build``, ``detect``, ``analyze``
and ``report render``.  Outputs are deterministic for identical inputs: rows
sort lexicographically and run metadata goes to a ``run.json`` sidecar, not
into report bodies.  Every flag can also be set through a ``WEBLIBS_``
environment variable.

Exit status: 0 on success, 1/2 for missing or invalid inputs (with a named
cause), 3 when ``analyze --fail-on-vuln`` found a vulnerable inclusion.
"""

from __future__ import annotations

import concurrent.futures
import hashlib
import json
import sys
import time
from pathlib import Path

import click

from . import __version__
from .analysis import attach_detections, risk_breakdown, site_report
from .catalogue import MIN_MATCHABLE_BYTES, Catalogue, CatalogueError, load_catalogue_path
from .causality import CausalityTree, build_tree, host_of, tree_metrics
from .detection import ScriptSample, static_detect
from .dot import export_dot
from .events import EventLogError, parse_event_log, parse_event_log_path
from .filterlist import LABELS, FilterSet, label_tree, parse_filter_list
from .report import (
    render_corpus_tables,
    write_corpus_report,
    write_site_reports,
)

EXIT_VULNERABLE = 3


def _fail(message: str) -> None:
    raise click.ClickException(message)


def _load_catalogue(path: str) -> Catalogue:
    try:
        return load_catalogue_path(path)
    except FileNotFoundError:
        _fail(f"catalogue not found: {path}")
    except CatalogueError as exc:
        _fail(f"invalid catalogue {path}: {exc}")
    raise AssertionError("unreachable")


def _load_events(path: str):
    try:
        return parse_event_log_path(path)
    except FileNotFoundError:
        _fail(f"event log not found: {path}")
    except EventLogError as exc:
        _fail(f"invalid event log {path}: {exc}")
    raise AssertionError("unreachable")


def _site_domain_for(events, override: str | None, path: str) -> str:
    if override:
        return override
    for ev in events:
        if ev.kind == "document_committed":
            host = host_of(ev.url)
            if host:
                return host
            break
    return Path(path).stem


def _parse_filter_specs(specs: tuple[str, ...]) -> list[FilterSet]:
    sets: list[FilterSet] = []
    for spec in specs:
        label, sep, path = spec.partition("=")
        if not sep or label not in LABELS:
            _fail(
                f"bad --filters value {spec!r}; expected label=PATH with label "
                f"in {','.join(LABELS)}"
            )
        try:
            with open(path, "r", encoding="utf-8") as fh:
                sets.append(parse_filter_list(fh, label))
        except FileNotFoundError:
            _fail(f"filter list not found: {path}")
    return sets


@click.group(context_settings={"auto_envvar_prefix": "WEBLIBS"})
@click.version_option(__version__)
def main() -> None:
    """Analyse client-side library usage from crawl event logs."""


@main.group()
def catalogue() -> None:
    """Catalogue file operations."""


@catalogue.command("validate")
@click.option("--catalogue", "catalogue_path", required=True, type=click.Path())
def catalogue_validate(catalogue_path: str) -> None:
    """Parse a catalogue and report its contents."""
    cat = _load_catalogue(catalogue_path)
    click.echo(
        json.dumps(
            {
                "libraries": len(cat.library_ids),
                "releases": len(cat.releases),
                "reference_files": len(cat.reference_files),
                "vulnerabilities": len(cat.vulnerabilities),
                "dropped_small_files": cat.dropped_small_files,
            },
            sort_keys=True,
        )
    )


@main.group()
def tree() -> None:
    """Causality tree operations."""


@tree.command("build")
@click.option("--events", "events_path", required=True, type=click.Path())
@click.option("--site", "site", default=None, help="Site domain (default: main document host).")
@click.option("--out", "out_dir", type=click.Path(), default=None)
@click.option("--dot", "emit_dot", is_flag=True, default=False)
def tree_build(events_path: str, site: str | None, out_dir: str | None, emit_dot: bool) -> None:
    """Build a tree from an event log and print its metrics."""
    events = _load_events(events_path)
    site_domain = _site_domain_for(events, site, events_path)
    try:
        t = build_tree(events, site_domain)
    except Exception as exc:
        _fail(f"cannot build tree from {events_path}: {exc}")
        return
    metrics = tree_metrics(t)
    click.echo(
        json.dumps(
            {
                "site_domain": site_domain,
                "nodes": metrics.node_count,
                "depth": metrics.depth,
                "counts_by_kind": dict(sorted(metrics.counts_by_kind.items())),
                "documents_per_frame": dict(sorted(metrics.documents_per_frame.items())),
                "skipped_events": t.skipped_events,
            },
            sort_keys=True,
        )
    )
    if emit_dot:
        text = export_dot(t)
        if out_dir:
            out = Path(out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{site_domain}.dot").write_text(text, encoding="utf-8")
        else:
            click.echo(text, nl=False)


@main.command("detect")
@click.argument("files", nargs=-1, required=True, type=click.Path())
@click.option("--catalogue", "catalogue_path", required=True, type=click.Path())
def detect(files: tuple[str, ...], catalogue_path: str) -> None:
    """Static detection over script files."""
    cat = _load_catalogue(catalogue_path)
    for index, path in enumerate(files):
        try:
            data = Path(path).read_bytes()
        except FileNotFoundError:
            _fail(f"script file not found: {path}")
            return
        sample = ScriptSample(
            node_id=f"file{index}",
            bytes_length=len(data),
            digest=hashlib.sha256(data).hexdigest(),
        )
        det = static_detect(sample, cat)
        if det is not None:
            click.echo(f"{path}: {det.library_id} {det.version}")
        elif len(data) < MIN_MATCHABLE_BYTES:
            click.echo(
                f"{path}: no detection (size {len(data)} below the "
                f"{MIN_MATCHABLE_BYTES}-byte matchable floor)"
            )
        else:
            click.echo(f"{path}: no detection")


def _analyze_one(
    events_path: str, cat: Catalogue, filter_sets: list[FilterSet], site: str | None
):
    events = _load_events(events_path)
    site_domain = _site_domain_for(events, site, events_path)
    t = build_tree(events, site_domain)
    label_tree(t, filter_sets)
    counters = attach_detections(t, cat)
    return t, site_report(t, cat, counters)


@main.command("analyze")
@click.option("--catalogue", "catalogue_path", required=True, type=click.Path())
@click.option("--events", "events_paths", multiple=True, required=True, type=click.Path())
@click.option("--filters", "filter_specs", multiple=True,
              help="Filter list as label=PATH (label: ad, tracker or widget).")
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--dot", "emit_dot", is_flag=True, default=False)
@click.option("--jobs", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--fail-on-vuln", is_flag=True, default=False,
              help="Exit with a distinct nonzero status when any vulnerable inclusion is found.")
@click.option("--site", "site", default=None)
def analyze(
    catalogue_path: str,
    events_paths: tuple[str, ...],
    filter_specs: tuple[str, ...],
    out_dir: str,
    emit_dot: bool,
    jobs: int,
    fail_on_vuln: bool,
    site: str | None,
) -> None:
    """Full pipeline: build, label, detect, merge and report."""
    started = time.time()
    cat = _load_catalogue(catalogue_path)
    filter_sets = _parse_filter_specs(filter_specs)

    results: list[tuple[CausalityTree, object]] = []
    if jobs == 1 or len(events_paths) <= 1:
        for path in events_paths:
            results.append(_analyze_one(path, cat, filter_sets, site))
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(lambda p: _analyze_one(p, cat, filter_sets, site), events_paths)
            )

    trees = [t for t, _ in results]
    reports = [r for _, r in results]
    corpus = risk_breakdown(sorted(reports, key=lambda r: r.site_domain))

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "sites.jsonl", "w", encoding="utf-8") as fh:
        write_site_reports(reports, fh)
    with open(out / "corpus.json", "w", encoding="utf-8") as fh:
        write_corpus_report(corpus, fh)
    (out / "tables.txt").write_text(render_corpus_tables(corpus), encoding="utf-8")
    if emit_dot:
        dot_dir = out / "dot"
        dot_dir.mkdir(exist_ok=True)
        for t in trees:
            (dot_dir / f"{t.site_domain}.dot").write_text(export_dot(t), encoding="utf-8")
    # Sidecar only: timestamps must never reach the report bodies.
    (out / "run.json").write_text(
        json.dumps(
            {
                "catalogue": str(catalogue_path),
                "event_logs": [str(p) for p in events_paths],
                "elapsed_seconds": round(time.time() - started, 3),
                "finished_unix": int(time.time()),
            },
            sort_keys=True,
            indent=2,
        )
        + "\n",
        encoding="utf-8",
    )

    vulnerable_sites = sum(1 for r in reports if r.vulnerable_distinct_versions > 0)
    click.echo(
        f"analyzed {len(reports)} site(s); {vulnerable_sites} with vulnerable inclusions; "
        f"reports in {out_dir}"
    )
    if fail_on_vuln and vulnerable_sites:
        sys.exit(EXIT_VULNERABLE)


@main.group("report")
def report_group() -> None:
    """Render reports produced by analyze."""


@report_group.command("render")
@click.option("--out", "out_dir", required=True, type=click.Path())
def report_render(out_dir: str) -> None:
    """Print the rendered tables for an analyze output directory."""
    tables = Path(out_dir) / "tables.txt"
    if not tables.exists():
        _fail(f"no tables.txt under {out_dir}; run analyze first")
    click.echo(tables.read_text(encoding="utf-8"), nl=False)


@main.group()
def events() -> None:
    """Event log utilities."""


@events.command("validate")
@click.argument("path", type=click.Path(allow_dash=True))
def events_validate(path: str) -> None:
    """Validate an event log against the line-record schema."""
    try:
        if path == "-":
            evs = parse_event_log(sys.stdin)
        else:
            evs = parse_event_log_path(path)
    except FileNotFoundError:
        _fail(f"event log not found: {path}")
        return
    except EventLogError as exc:
        _fail(f"invalid event log: {exc}")
        return
    kinds: dict[str, int] = {}
    for ev in evs:
        kinds[ev.kind] = kinds.get(ev.kind, 0) + 1
    click.echo(json.dumps({"events": len(evs), "kinds": dict(sorted(kinds.items()))},
                          sort_keys=True))


if __name__ == "__main__":
    main()
