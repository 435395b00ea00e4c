"""Command line entry point: ``emojinet build | disambiguate | serve | lookup | stats``."""

from __future__ import annotations

import json
import logging
import sys

import click

from .errors import EmojiNetError, PipelineError
from .ingest import parse_lexicon
from .inventory import inventory_stats, lint_related, load_inventory
from .lesk import disambiguate_text
from .pipeline import BuildConfig, build
from .service import PORT_ENV, BadRequest, InventoryIndex, NotFound, serve

_existing = click.Path(exists=True, dir_okay=False)


def _echo_json(obj) -> None:
    click.echo(json.dumps(obj, ensure_ascii=False, indent=2))


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
def main(verbose):
    """Build and query an emoji sense inventory."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
    )


@main.command("build")
@click.option("--unicode", "unicode_list", required=True, type=_existing)
@click.option("--emojipedia", required=True, type=_existing)
@click.option("--iemoji", required=True, type=_existing)
@click.option("--emojidict", "emoji_dictionary", required=True, type=_existing)
@click.option("--lexicon", required=True, type=_existing)
@click.option("--corpus", required=True, type=_existing)
@click.option("--images-dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("-o", "--output", required=True, type=click.Path(dir_okay=False))
@click.option("--report", required=True, type=click.Path(dir_okay=False))
@click.option("--max-dissimilarity", type=float, default=None,
              help="Quarantine dictionary images whose best match is farther than this.")
@click.option("--workers", type=int, default=None, help="Threads used for image fingerprinting.")
def build_cmd(**kwargs):
    """Integrate the resource dumps into an inventory file."""
    try:
        report = build(BuildConfig(**kwargs))
    except PipelineError as exc:
        click.echo(f"build failed at stage {exc.stage}: {exc.cause}", err=True)
        sys.exit(2)
    _echo_json(report.counts["stats"])


@main.command("disambiguate")
@click.option("--inventory", required=True, type=_existing)
@click.option("--lexicon", required=True, type=_existing)
@click.option("--text", required=True)
@click.option("--window", type=int, default=None, help="Context tokens on each side (default: whole text).")
@click.option("--glosses-only", is_flag=True, help="Ignore example sentences when collecting sense words.")
def disambiguate_cmd(inventory, lexicon, text, window, glosses_only):
    """Rank the senses of every emoji in TEXT by gloss overlap."""
    try:
        index = InventoryIndex.load(inventory)
        lex = parse_lexicon(lexicon)
        result = disambiguate_text(
            text, index.by_codepoint, lex, window=window, include_examples=not glosses_only
        )
    except EmojiNetError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    _echo_json(result)


@main.command("serve")
@click.option("--inventory", required=True, type=_existing)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8080, show_default=True, envvar=PORT_ENV)
def serve_cmd(inventory, host, port):
    """Serve the read-only lookup API."""
    logging.getLogger("emojinet").setLevel(logging.INFO)
    if not logging.getLogger().handlers:
        logging.basicConfig(stream=sys.stderr)
    serve(inventory, host=host, port=port)


@main.command("lookup")
@click.option("--inventory", required=True, type=_existing)
@click.option("--codepoint", default=None)
@click.option("--shortcode", default=None)
@click.option("--sense", nargs=2, default=None, metavar="WORD POS")
def lookup_cmd(inventory, codepoint, shortcode, sense):
    """Look up entries by codepoint, shortcode or WORD POS sense."""
    chosen = [x for x in (codepoint, shortcode, sense) if x]
    if len(chosen) != 1:
        raise click.UsageError("give exactly one of --codepoint, --shortcode, --sense")
    index = InventoryIndex.load(inventory)
    try:
        if codepoint:
            _echo_json(index.get_by_codepoint(codepoint).to_record())
        elif shortcode:
            _echo_json(index.get_by_shortcode(shortcode).to_record())
        else:
            _echo_json([e.to_record() for e in index.search_by_sense(*sense)])
    except (NotFound, BadRequest) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


@main.command("stats")
@click.option("--inventory", required=True, type=_existing)
def stats_cmd(inventory):
    """Per-field counts and dangling related references."""
    entries = load_inventory(inventory)
    stats = inventory_stats(entries)
    _echo_json(
        {
            "fields": {k: {"emoji": c, "items": n} for k, (c, n) in stats.items()},
            "dangling_related": [list(p) for p in lint_related(entries)],
        }
    )


if __name__ == "__main__":
    main()
