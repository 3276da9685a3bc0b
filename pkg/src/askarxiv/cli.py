"""Command line interface: ingest, summary, ask, serve."""

import click

from .arxiv import ArxivClient
from .engine import MAX_C, MAX_K, SearchEngine, SearchRequest
from .errors import AskArxivError
from .store import DocumentStore


@click.group()
@click.option(
    "--store",
    "store_path",
    envvar="ASKARXIV_STORE",
    default="askarxiv.db",
    show_default=True,
    help="Path of the document database file.",
)
@click.option(
    "--arxiv-delay",
    envvar="ASKARXIV_ARXIV_DELAY",
    type=float,
    default=3.0,
    show_default=True,
    help="Minimum seconds between arXiv API requests.",
)
@click.option(
    "--reader",
    "reader_spec",
    envvar="ASKARXIV_READER",
    default="baseline",
    show_default=True,
    help="Reader backend: 'baseline' or 'remote:<URL>'.",
)
@click.pass_context
def main(ctx, store_path, arxiv_delay, reader_spec):
    """Question answering search engine over arXiv publications."""
    ctx.ensure_object(dict)
    ctx.obj["store_path"] = store_path
    ctx.obj["arxiv_delay"] = arxiv_delay
    ctx.obj["reader"] = reader_spec


def _engine(ctx) -> SearchEngine:
    store = DocumentStore(ctx.obj["store_path"])
    client = ArxivClient(request_delay=ctx.obj["arxiv_delay"])
    return SearchEngine(store, reader=ctx.obj["reader"], arxiv_client=client)


@main.command()
@click.argument("topic")
@click.option("--max", "max_articles", type=click.IntRange(min=1), default=50,
              show_default=True, help="Maximum number of articles to fetch.")
@click.pass_context
def ingest(ctx, topic, max_articles):
    """Fetch and index articles for TOPIC."""
    engine = _engine(ctx)
    try:
        report = engine.ingest_topic(topic, max_articles)
    except AskArxivError as exc:
        raise click.ClickException(str(exc))
    click.echo(
        f"fetched={report.fetched} ingested={report.ingested} "
        f"duplicates={report.duplicates} corrupted={report.corrupted}"
    )


@main.command()
@click.pass_context
def summary(ctx):
    """Print corpus counts."""
    s = _engine(ctx).summary()
    click.echo(f"articles: {s.article_count}")
    click.echo(f"chunks:   {s.chunk_count}")
    click.echo(f"categories ({len(s.category_counts)}):")
    for category, count in sorted(s.category_counts.items()):
        click.echo(f"  {category}: {count}")


@main.command()
@click.argument("question")
@click.option("--k", type=click.IntRange(1, MAX_K), default=10, show_default=True,
              help="Number of chunks the retriever selects.")
@click.option("--c", type=click.IntRange(1, MAX_C), default=3, show_default=True,
              help="Number of candidate answers to show.")
@click.option("--category", default=None, help="Restrict search to one category.")
@click.pass_context
def ask(ctx, question, k, c, category):
    """Answer QUESTION from the indexed corpus."""
    engine = _engine(ctx)
    try:
        response = engine.answer_question(
            SearchRequest(question=question, k=k, c=c, category=category)
        )
    except AskArxivError as exc:
        raise click.ClickException(str(exc))
    if not response.answers:
        click.echo("no answers found")
        return
    if response.degraded:
        click.echo("(remote reader unavailable; baseline reader used)")
    for rank, answer in enumerate(response.answers, start=1):
        click.echo(f"{rank}. [{answer.confidence:.3f}] {answer.text}")
        click.echo(f"   {answer.title} ({answer.published.isoformat()})")
        click.echo(f"   {answer.link}")


@main.command()
@click.option("--host", envvar="ASKARXIV_HOST", default="127.0.0.1",
              show_default=True)
@click.option("--port", envvar="ASKARXIV_PORT", type=int, default=8000,
              show_default=True)
@click.option("--store", "store_path", default=None,
              help="Override the document database path for this server.")
@click.option("--reader", "reader_spec", default=None,
              help="Override the reader backend for this server.")
@click.pass_context
def serve(ctx, host, port, store_path, reader_spec):
    """Run the HTTP API server."""
    import uvicorn

    from .api import create_app

    if store_path is not None:
        ctx.obj["store_path"] = store_path
    if reader_spec is not None:
        ctx.obj["reader"] = reader_spec
    app = create_app(_engine(ctx))
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
