"""Table builders for every analysis, and the one-shot full report.

Each CLI subcommand renders tables built here, and the full report
concatenates the very same tables, so numbers can never drift between the
two paths.
"""

from __future__ import annotations

from . import citation_profile, collaboration, content, impact, productivity
from .corpus import Corpus, total_authorships, unique_authors
from .histogram import Histogram
from .numfmt import ratio_display_truncated
from .render import Num, Table, pct


def summary_tables(corpus: Corpus) -> list[Table]:
    per_year = productivity.articles_per_year(corpus)
    authors = productivity.authorships_per_year(corpus)
    table = Table(
        title="Articles and authorships per year",
        headers=["year", "articles", "articles %", "cumulative %", "authorships"],
    )
    total = per_year.counts.total()
    cum = 0
    for year, n in per_year.counts.items_by_key():
        cum += n
        table.rows.append([year, n, pct(n, total), pct(cum, total), authors.get(year)])
    table.rows.append(["total", total, pct(total, total) if total else Num(0.0, "0.00"),
                       "", authors.total()])
    table.notes.append(f"mean articles per year: {per_year.mean:g}")
    table.notes.append(f"unique authors: {len(unique_authors(corpus))}, "
                       f"authorships: {total_authorships(corpus)}")
    return [table]


def lotka_tables(fit: productivity.LotkaFit) -> list[Table]:
    table = Table(
        title=f"Author productivity observed vs expected (c={fit.c:.3f}, {fit.method})",
        headers=["publications (n)", "authors observed", "observed %",
                 "authors expected", "expected %"],
    )
    for n, observed in fit.observed.items_by_key():
        expected = fit.expected.get(n)
        table.rows.append([
            n, observed, pct(observed, fit.total_observed),
            expected, pct(expected, fit.total_expected),
        ])
    table.rows.append(["total", fit.total_observed, "", fit.total_expected, ""])
    table.notes.append(f"max |observed-expected|: {fit.max_abs_dev}")
    table.notes.append(
        f"chi-square over bins with expected>=5: {fit.chi_square:.3f} ({fit.chi_square_bins} bins)"
    )
    if fit.method == "two-point":
        a2 = fit.observed.get(2)
        table.notes.append(
            "c with 3-decimal intermediate logs: "
            + productivity.two_point_c_display(fit.a1, a2)
        )
    return [table]


def core_author_tables(cohorts: list[productivity.AuthorCohort]) -> list[Table]:
    table = Table(
        title="Most productive authors",
        headers=["group", "cohort size", "author", "articles", "affiliation"],
    )
    for cohort in cohorts:
        for name, affiliation in cohort.members:
            table.rows.append([cohort.rank_group, len(cohort.members), name,
                               cohort.paper_count, affiliation])
    return [table]


def collaboration_tables(corpus: Corpus, home: str) -> list[Table]:
    degree = collaboration.degree_of_collaboration(corpus)
    deg = Table(
        title="Single and multi authored articles per year",
        headers=["year", "single", "multi", "total", "collaboration %"],
    )
    for year, (ns, nm, _) in degree.per_year.items():
        deg.rows.append([year, ns, nm, ns + nm, pct(nm, ns + nm)])
    deg.rows.append(["total", degree.ns, degree.nm, degree.ns + degree.nm,
                     pct(degree.nm, degree.ns + degree.nm)])
    deg.notes.append(f"degree of collaboration: {degree.c:.5f}")

    pattern = collaboration.coauthorship_histogram(corpus)
    years = sorted(pattern.per_year)
    co = Table(
        title="Co-authorship pattern per year",
        headers=["authors per article"] + [str(y) for y in years] + ["total", "%"],
    )
    grand = pattern.total.total()
    for k, n in pattern.total.items_by_key():
        co.rows.append([k] + [pattern.per_year[y].get(k) for y in years] + [n, pct(n, grand)])

    counts = collaboration.classify_counts(corpus)
    cls = Table(
        title="Pattern of collaboration",
        headers=["type", "articles", "%"],
    )
    total = sum(counts.as_tuple())
    for label, n in zip(
        ["single author", "same affiliation", "different affiliations, same country",
         "different countries"], counts.as_tuple()
    ):
        cls.rows.append([label, n, pct(n, total)])
    cls.rows.append(["total", total, pct(total, total)])

    split = collaboration.country_split(corpus, home)
    spl = Table(
        title=f"{home} and foreign contribution per year",
        headers=["year", f"{home} authorships", "foreign authorships",
                 f"purely {home}", "mixed", "purely foreign"],
    )
    for year in sorted(split.authorships_per_year):
        h, f = split.authorships_per_year[year]
        ph, mx, pf = split.articles_per_year.get(year, (0, 0, 0))
        spl.rows.append([year, h, f, ph, mx, pf])
    spl.rows.append(["total", split.home_authorships, split.foreign_authorships,
                     split.purely_home, split.mixed, split.purely_foreign])

    pairs = collaboration.country_pair_matrix(corpus)
    pair_table = Table(
        title="Collaborations between different countries",
        headers=["countries", "articles"],
    )
    for key in sorted(pairs, key=lambda k: (-pairs[k], k)):
        pair_table.rows.append([" :: ".join(key), pairs[key]])

    breakdown = collaboration.affiliation_type_distribution(corpus, home)
    aff = Table(
        title="Affiliations and authors by type",
        headers=["type", f"{home} affiliations", "foreign affiliations",
                 "unique authors", "authors %"],
    )
    author_total = breakdown.author_total()
    for atype in sorted(set(breakdown.affiliations) | set(breakdown.authors)):
        ah, af = breakdown.affiliations.get(atype, (0, 0))
        uh, uf = breakdown.authors.get(atype, (0, 0))
        aff.rows.append([atype, ah, af, uh + uf, pct(uh + uf, author_total)])
    aff.notes.append(f"unique affiliations: {breakdown.affiliation_total()}")
    return [deg, co, cls, spl, pair_table, aff]


def reference_tables(corpus: Corpus) -> list[Table]:
    volume = citation_profile.references_per_year(corpus)
    vol = Table(
        title="References per year",
        headers=["year", "articles", "references", "mean per article"],
    )
    per_year_articles = {y: len(corpus.articles_in(y)) for y in sorted(volume.per_year.bins)}
    for year, refs in volume.per_year.items_by_key():
        n_articles = per_year_articles.get(year, 0)
        mean = refs / n_articles if n_articles else 0.0
        vol.rows.append([year, n_articles, refs, Num(mean, f"{mean:.1f}")])
    vol.rows.append(["total", len(corpus.articles), volume.total,
                     Num(volume.mean_per_article, f"{volume.mean_per_article:.1f}")])

    ranges = citation_profile.refs_per_article_ranges(corpus)
    rng = Table(title="Range of references per article", headers=["range", "articles", "%"])
    total_articles = ranges.total()
    for label, n in ranges.ranked():
        rng.rows.append([label, n, pct(n, total_articles)])

    formats = citation_profile.format_distribution(corpus)
    years = sorted(formats.per_year)
    fmt = Table(
        title="Bibliographic format of references",
        headers=["format"] + [str(y) for y in years] + ["total", "%"],
    )
    grand = formats.total.total()
    for source_type, n in formats.total.ranked():
        fmt.rows.append([source_type] + [formats.per_year[y].get(source_type) for y in years]
                        + [n, pct(n, grand)])

    profile = citation_profile.age_profile(corpus)
    ages = age_tables(profile)

    selfcite = citation_profile.self_citation(corpus)
    sc = Table(
        title="Journal self-citation per year",
        headers=["year", "references", "self-citations", "self-citation %"],
    )
    for year, (self_n, total_n) in selfcite.per_year.items():
        sc.rows.append([year, total_n, self_n, pct(self_n, total_n)])
    sc.rows.append(["total", selfcite.total_references, selfcite.self_citations,
                    pct(selfcite.self_citations, selfcite.total_references)])
    sc.notes.append(f"articles with at least one self-citation: {selfcite.citing_articles}")

    languages = citation_profile.language_distribution(corpus)
    lang = Table(title="Language of references", headers=["language", "references", "%"])
    lang_total = languages.languages.total()
    for label, n in languages.languages.ranked():
        lang.rows.append([label, n, pct(n, lang_total)])
    non_english = Table(
        title="Non-English reference titles",
        headers=["journal", "language", "references"],
    )
    for title, language, n in languages.non_english:
        non_english.rows.append([title, language, n])
    return [vol, rng, fmt] + ages + [sc, lang, non_english]


def age_tables(profile: citation_profile.AgeProfile) -> list[Table]:
    table = Table(
        title="Age of citations",
        headers=["age (years)", "citations", "%", "cumulative %"],
    )
    total = profile.total
    cum = 0
    for b in profile.bins:
        cum += b.count
        table.rows.append([b.label, b.count, pct(b.count, total), pct(cum, total)])
    if profile.undated:
        table.rows.append(["undated", profile.undated, pct(profile.undated, total), ""])
    table.rows.append(["total", total, "", ""])
    table.notes.append(
        f"half-life: {profile.half_life_integer} years "
        f"(interpolated {profile.half_life_interpolated:.2f}; undated excluded)"
    )
    return [table]


def matrix_tables(corpus: Corpus) -> list[Table]:
    matrix = citation_profile.publication_year_matrix(corpus)
    citing = matrix.citing_years()
    table = Table(
        title="Publication year of references against year of citation",
        headers=["reference year"] + [str(y) for y in sorted(citing, reverse=True)] + ["total"],
    )
    rows = matrix.row_totals()
    for pub in matrix.pub_years():
        label = "undated" if pub is None else str(pub)
        cells = [matrix.cells.get((pub, y), 0) for y in sorted(citing, reverse=True)]
        table.rows.append([label] + cells + [rows[pub]])
    return [table]


def bradford_tables(partition: citation_profile.BradfordPartition,
                    freqs: Histogram | None = None) -> list[Table]:
    table = Table(
        title="Core-journal zones",
        headers=["zone", "journals", "citations", "journal ratio"],
    )
    for i, zone in enumerate(partition.zones, start=1):
        ratio = partition.ratios[i - 1]
        table.rows.append([i, zone.journal_count, zone.citation_count, Num(ratio, f"{ratio:.2f}")])
    table.notes.append(f"zone multiplier estimate: {partition.b_estimate:.3f}")
    if freqs is not None and partition.zones and partition.zones[0].titles:
        nucleus = Table(title="Zone 1 journals", headers=["rank", "journal", "citations"])
        for rank, title in enumerate(partition.zones[0].titles, start=1):
            nucleus.rows.append([rank, title, freqs.get(title)])
        return [table, nucleus]
    return [table]


def journal_rank_tables(freqs: Histogram, top: int = 50) -> list[Table]:
    table = Table(title="Journals referenced", headers=["rank", "journal", "citations"])
    for rank, (title, n) in enumerate(freqs.ranked()[:top], start=1):
        table.rows.append([rank, title, n])
    table.notes.append(f"{len(freqs.bins)} journals, {freqs.total()} citations")
    return [table]


def impact_tables(corpus: Corpus, region_map=None) -> list[Table]:
    summary = impact.received_summary(corpus)
    rec = Table(
        title="Citations received per publication year",
        headers=["publication year", "articles", "articles cited", "citations"],
    )
    for year, row in summary.per_year.items():
        rec.rows.append([year, len(corpus.articles_in(year)), row.articles_cited, row.citations])
    rec.rows.append(["total", summary.total_articles, summary.articles_cited, summary.citations])
    rec.notes.append(
        f"coverage: {summary.articles_cited}/{summary.total_articles} articles cited "
        f"({summary.coverage * 100:.1f}%)"
    )

    doc_types = impact.citing_doc_types(corpus)
    docs = Table(title="Types of documents citing the journal", headers=["type", "citations"])
    for label, n in doc_types.ranked():
        docs.rows.append([label, n])

    countries = impact.citing_countries(corpus, region_map=region_map)
    ctry = Table(title="Citing countries", headers=["country", "citations"])
    for label, n in countries.countries.ranked():
        ctry.rows.append([label, n])
    tables = [rec, docs, ctry]
    if countries.regions is not None:
        reg = Table(title="Citing regions", headers=["region", "citations"])
        for label, n in countries.regions.ranked():
            reg.rows.append([label, n])
        tables.append(reg)
    if countries.collaborations:
        collab = Table(title="Citing-country collaborations", headers=["countries", "citations"])
        for key in sorted(countries.collaborations, key=lambda k: (-countries.collaborations[k], k)):
            collab.rows.append([" :: ".join(key), countries.collaborations[key]])
        tables.append(collab)

    series = impact.impact_factor_series(corpus)
    iftab = Table(
        title="Impact factor series (two-year window)",
        headers=["year", "citations to window (A)", "items in window (B)", "impact factor"],
    )
    for year, entry in sorted(series.items()):
        iftab.rows.append([year, entry.citations_window, entry.publications_window,
                           Num(entry.value, entry.display)])
    aggregate = impact.impact_factor_aggregate(corpus, corpus.year_start, corpus.year_end)
    iftab.notes.append(
        f"aggregate {corpus.year_start}-{corpus.year_end} "
        f"(citations in {corpus.year_end + 1}): {aggregate.citations_window}/"
        f"{aggregate.publications_window} = {aggregate.display}"
    )
    tables.append(iftab)
    return tables


def content_tables(corpus: Corpus, places=None, top: int = 30) -> list[Table]:
    freqs = content.keyword_frequency(corpus, places=places)
    kw = Table(title="Keywords", headers=["keyword", "articles"])
    for label, n in freqs.ranked.ranked()[:top]:
        kw.rows.append([label, n])
    kw.notes.append(f"{len(freqs.ranked.bins)} distinct keywords, "
                    f"{freqs.ranked.total()} occurrences")
    tables = [kw]
    if freqs.places is not None:
        pl = Table(title="Place-name keywords", headers=["place", "articles"])
        for label, n in freqs.places.ranked():
            pl.rows.append([label, n])
        tables.append(pl)

    per_article = content.keywords_per_article(corpus)
    kpa = Table(title="Keywords per article", headers=["keywords", "articles", "%"])
    total = per_article.histogram.total()
    for k, n in per_article.histogram.items_by_key():
        kpa.rows.append([k, n, pct(n, total)])
    kpa.notes.append(f"mean keywords per article: {per_article.mean:.4f}")
    tables.append(kpa)

    words = content.title_word_stats(corpus)
    tw = Table(title="Words in article titles", headers=["words", "articles", "%"])
    for k, n in words.histogram.items_by_key():
        tw.rows.append([k, n, pct(n, words.histogram.total())])
    tw.notes.append(
        f"min {words.minimum}, max {words.maximum}, mean {words.mean:.3f}, "
        f"mode {words.mode} ({words.mode_count} articles)"
    )
    tables.append(tw)

    funding = content.funding_summary(corpus)
    fund = Table(
        title="Research funding per year",
        headers=["year", "original articles", "funded", "funded %"],
    )
    for year in sorted(funding.originals_per_year):
        orig = funding.originals_per_year[year]
        paid = funding.funded_per_year.get(year, 0)
        fund.rows.append([year, orig, paid, pct(paid, orig)])
    fund.rows.append(["total", funding.originals, funding.funded,
                      pct(funding.funded, funding.originals)])
    tables.append(fund)

    funders = Table(title="Funding organizations", headers=["organization", "articles"])
    for label, n in funding.funder_totals().ranked():
        funders.rows.append([label, n])
    tables.append(funders)
    return tables


def full_report(corpus: Corpus, home: str, places=None, region_map=None,
                zones: int = 3) -> list[Table]:
    """Every analysis of the indicator suite as one table list."""
    tables = summary_tables(corpus)
    observed = productivity.author_productivity_histogram(corpus)
    if observed.get(1) and observed.get(2):
        tables += lotka_tables(productivity.lotka_fit_c2(observed))
        tables += lotka_tables(productivity.lotka_fit_two_point(observed))
    tables += core_author_tables(productivity.core_authors(corpus, min_count=5))
    tables += collaboration_tables(corpus, home)
    tables += content_tables(corpus, places=places)
    tables += reference_tables(corpus)
    tables += matrix_tables(corpus)
    freqs = citation_profile.journal_frequency(corpus)
    tables += journal_rank_tables(freqs)
    if len(freqs.bins) >= zones:
        tables += bradford_tables(citation_profile.bradford_partition(freqs, k=zones), freqs)
    tables += impact_tables(corpus, region_map=region_map)
    return tables
