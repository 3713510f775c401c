"""Command-line front end.

Subcommands: validate, summary, lotka, collab, refs, bradford, halflife,
impact, content, report. Inputs are auto-detected by extension: .json is a
corpus file, .csv an aggregate histogram. Exit codes: 0 success, 1 usage
error, 2 schema/validation error, 3 analysis precondition error.

The BIBLIOLENS_CONFIG environment variable may point to a key=value file
supplying defaults for --home, --format, --zones and --places.
"""

from __future__ import annotations

import argparse
import csv
import math
import os
import sys

from . import citation_profile, impact, productivity, report, svgplot
from .corpus import Corpus, load_corpus
from .errors import AnalysisError, BiblioError, ValidationError
from .histogram import Histogram, load_histogram
from .render import render

USAGE_EXIT, VALIDATION_EXIT, ANALYSIS_EXIT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _load_config() -> dict[str, str]:
    path = os.environ.get("BIBLIOLENS_CONFIG")
    if not path or not os.path.exists(path):
        return {}
    config = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, value = line.split("=", 1)
            config[key.strip()] = value.strip()
    return config


def _read_input(path: str, key_kind: str = "text"):
    """Corpus for .json inputs, Histogram for .csv inputs."""
    if path.lower().endswith(".json"):
        return load_corpus(path)
    if path.lower().endswith(".csv"):
        return load_histogram(path, key_kind=key_kind)
    raise ValidationError(f"cannot detect input kind of {path!r} (expected .json or .csv)")


def _require_corpus(value, parser: _Parser) -> Corpus:
    if not isinstance(value, Corpus):
        parser.error("this subcommand needs a corpus (.json) input")
    return value


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_places(path: str | None):
    if not path:
        return None
    with open(path, encoding="utf-8") as fh:
        return [line.strip() for line in fh if line.strip()]


def _load_region_map(path: str | None):
    if not path:
        return None
    region_map = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header and [h.strip() for h in header] != ["country", "region"]:
            fh.seek(0)
            reader = csv.reader(fh)
        for row in reader:
            if len(row) >= 2:
                region_map[row[0].strip()] = row[1].strip()
    return region_map


def build_parser(defaults: dict[str, str]) -> _Parser:
    parser = _Parser(prog="bibliolens", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("--input", required=True, help="corpus .json or histogram .csv")
        p.add_argument("--out", default=None, help="write output here instead of stdout")
        p.add_argument("--format", default=defaults.get("format", "md"),
                       choices=["csv", "json", "md"])
        p.add_argument("--strict", dest="strict", action="store_true", default=True)
        p.add_argument("--lenient", dest="strict", action="store_false",
                       help="warn about unknown corpus keys instead of rejecting")
        return p

    p = sub.add_parser("validate", help="validate a corpus file")
    p.add_argument("path")
    p.add_argument("--lenient", dest="strict", action="store_false", default=True)

    add("summary", "articles and authorships per year")

    p = add("lotka", "author-productivity power-law fit")
    p.add_argument("--c", type=float, default=None, help="fixed exponent instead of fitting")
    p.add_argument("--method", choices=["two-point", "lsq"], default="two-point")

    p = add("collab", "collaboration metrics")
    p.add_argument("--home", default=defaults.get("home", "Malaysia"))

    p = add("refs", "reference profiles: volume, formats, ages, self-citation")
    p.add_argument("--plot", default=None, help="write cumulative-age SVG (plus .csv series)")

    p = add("bradford", "core-journal zones")
    p.add_argument("--zones", type=int, default=int(defaults.get("zones", 3)))
    p.add_argument("--plot", default=None,
                   help="write cumulative citations vs log journal rank SVG")

    p = add("halflife", "citation age profile and half-life")
    p.add_argument("--plot", default=None)

    p = add("impact", "received citations and impact factors")
    p.add_argument("--year", type=int, default=None)
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--aggregate", default=None, metavar="Y1..Y2")
    p.add_argument("--citable-only", action="store_true",
                   help="denominator counts original articles only")
    p.add_argument("--regions", default=defaults.get("regions"), help="country,region CSV")

    p = add("content", "keywords, title lengths, funding")
    p.add_argument("--places", default=defaults.get("places"), help="place-name list file")

    p = add("report", "full report reproducing the whole analysis suite")
    p.add_argument("--home", default=defaults.get("home", "Malaysia"))
    p.add_argument("--zones", type=int, default=int(defaults.get("zones", 3)))
    p.add_argument("--places", default=defaults.get("places"))
    p.add_argument("--regions", default=defaults.get("regions"))
    return parser


def _cmd_validate(args) -> int:
    corpus = load_corpus(args.path, strict=args.strict)
    print(f"{len(corpus.articles)} articles OK")
    return 0


def _cmd_lotka(args, parser) -> int:
    data = _read_input(args.input, key_kind="integer")
    if isinstance(data, Corpus):
        observed = productivity.author_productivity_histogram(data)
    else:
        observed = Histogram(data.label, {int(k): v for k, v in data.bins.items()})
    if args.c is not None:
        fit = productivity.lotka_fit_fixed(observed, args.c)
    elif args.method == "lsq":
        fit = productivity.lotka_fit_least_squares(observed)
    else:
        fit = productivity.lotka_fit_two_point(observed)
    _emit(render(report.lotka_tables(fit), args.format), args.out)
    return 0


def _cmd_bradford(args, parser) -> int:
    data = _read_input(args.input, key_kind="text")
    freqs = data if isinstance(data, Histogram) else citation_profile.journal_frequency(data)
    partition = citation_profile.bradford_partition(freqs, k=args.zones)
    _emit(render(report.bradford_tables(partition, freqs), args.format), args.out)
    if args.plot:
        points = []
        cum = 0
        for rank, (_, count) in enumerate(freqs.ranked(), start=1):
            cum += count
            points.append((math.log(rank), float(cum)))
        svgplot.write_plot(args.plot, points, "Frequency of journal citations",
                           "journals cumulative (log)", "cumulative citations")
    return 0


def _cmd_halflife(args, parser) -> int:
    data = _read_input(args.input, key_kind="text")
    if isinstance(data, Corpus):
        profile = citation_profile.age_profile(data)
    else:
        profile = citation_profile.age_profile_from_histogram(data)
    _emit(render(report.age_tables(profile), args.format), args.out)
    if args.plot:
        points = [(float(age), float(cum)) for age, cum in profile.cumulative_series()]
        svgplot.write_plot(args.plot, points, "Half-life of cited references",
                           "age of citations (years)", "cumulative citations")
    return 0


def _cmd_impact(args, parser) -> int:
    corpus = _require_corpus(_read_input(args.input), parser)
    region_map = _load_region_map(args.regions)
    if args.aggregate:
        try:
            start, end = (int(part) for part in args.aggregate.split("..", 1))
        except ValueError:
            parser.error("--aggregate expects Y1..Y2")
        entry = impact.impact_factor_aggregate(corpus, start, end,
                                               citable_only=args.citable_only)
        print(f"{entry.citations_window}/{entry.publications_window} = {entry.display}")
        return 0
    if args.year is not None:
        entry = impact.impact_factor_for_year(corpus, args.year, window=args.window,
                                              citable_only=args.citable_only)
        print(f"{entry.citations_window}/{entry.publications_window} = {entry.display}")
        return 0
    _emit(render(report.impact_tables(corpus, region_map=region_map), args.format), args.out)
    return 0


def main(argv=None) -> int:
    defaults = _load_config()
    parser = build_parser(defaults)
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else USAGE_EXIT
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "summary":
            corpus = _require_corpus(_read_input(args.input), parser)
            _emit(render(report.summary_tables(corpus), args.format), args.out)
            return 0
        if args.command == "lotka":
            return _cmd_lotka(args, parser)
        if args.command == "collab":
            corpus = _require_corpus(_read_input(args.input), parser)
            _emit(render(report.collaboration_tables(corpus, args.home), args.format), args.out)
            return 0
        if args.command == "refs":
            corpus = _require_corpus(_read_input(args.input), parser)
            _emit(render(report.reference_tables(corpus), args.format), args.out)
            if args.plot:
                profile = citation_profile.age_profile(corpus)
                points = [(float(a), float(c)) for a, c in profile.cumulative_series()]
                svgplot.write_plot(args.plot, points, "Half-life of cited references",
                                   "age of citations (years)", "cumulative citations")
            return 0
        if args.command == "bradford":
            return _cmd_bradford(args, parser)
        if args.command == "halflife":
            return _cmd_halflife(args, parser)
        if args.command == "impact":
            return _cmd_impact(args, parser)
        if args.command == "content":
            corpus = _require_corpus(_read_input(args.input), parser)
            places = _load_places(args.places)
            _emit(render(report.content_tables(corpus, places=places), args.format), args.out)
            return 0
        if args.command == "report":
            corpus = _require_corpus(_read_input(args.input), parser)
            tables = report.full_report(
                corpus, home=args.home, places=_load_places(args.places),
                region_map=_load_region_map(args.regions), zones=args.zones,
            )
            _emit(render(tables, args.format), args.out)
            return 0
        parser.error(f"unknown command {args.command!r}")
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else USAGE_EXIT
    except ValidationError as exc:
        print(f"bibliolens: validation error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except AnalysisError as exc:
        print(f"bibliolens: analysis error: {exc}", file=sys.stderr)
        return ANALYSIS_EXIT
    except BiblioError as exc:
        print(f"bibliolens: error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except ValueError as exc:
        print(f"bibliolens: error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except OSError as exc:
        print(f"bibliolens: {exc}", file=sys.stderr)
        return USAGE_EXIT
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
