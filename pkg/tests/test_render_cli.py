import json

import pytest

from bibliolens import report
from bibliolens.cli import main
from bibliolens.histogram import Histogram
from bibliolens.render import Num, Table, render, render_csv, render_json, render_markdown


def test_empty_table_renders_header_only():
    table = Table(title="Empty", headers=["key", "count"])
    out = render_csv([table])
    assert out == "# Empty\nkey,count\n"


def test_markdown_shape():
    table = Table("T", ["a", "b"], rows=[[1, Num(0.5, "0.50")]])
    md = render_markdown([table])
    assert "| a | b |" in md and "| 1 | 0.50 |" in md


def test_render_deterministic(corpus):
    tables = report.summary_tables(corpus)
    for fmt in ("csv", "json", "md"):
        assert render(tables, fmt) == render(tables, fmt)


def test_json_carries_value_and_display():
    table = Table("T", ["x"], rows=[[Num(0.37872340425531914, "0.378")]])
    payload = json.loads(render_json([table]))
    cell = payload[0]["rows"][0][0]
    assert cell["display"] == "0.378"
    assert cell["value"] == pytest.approx(0.37872340425531914)


def test_report_reuses_subcommand_numbers(corpus, places, region_map):
    full = render(report.full_report(corpus, home="Malaysia", places=places,
                                     region_map=region_map), "md")
    for piece in (report.summary_tables(corpus),
                  report.collaboration_tables(corpus, "Malaysia"),
                  report.reference_tables(corpus),
                  report.impact_tables(corpus, region_map=region_map)):
        for table in piece:
            for row in table.rows:
                line = "| " + " | ".join(
                    cell.display if isinstance(cell, Num) else repr(cell) if isinstance(cell, float) else str(cell)
                    for cell in row) + " |"
                assert line in full


# --- CLI ------------------------------------------------------------------

def test_validate_ok(corpus_path, capsys):
    assert main(["validate", str(corpus_path)]) == 0
    assert "580 articles OK" in capsys.readouterr().out


def test_validate_schema_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"journal": 1}')
    assert main(["validate", str(bad)]) == 2
    assert "validation error" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    assert main(["lotka"]) == 1          # missing --input
    assert main(["frobnicate"]) == 1     # unknown subcommand


def test_lotka_on_malformed_corpus(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["lotka", "--input", str(bad)]) == 2


def test_lotka_from_histogram_csv(capsys):
    assert main(["lotka", "--input", "fixtures/lotka_observed.csv"]) == 0
    out = capsys.readouterr().out
    assert "c=2.410" in out
    assert "| 2 | 204 |" in out


def test_lotka_fixed_exponent_flag(capsys):
    assert main(["lotka", "--input", "fixtures/lotka_observed.csv", "--c", "2"]) == 0
    out = capsys.readouterr().out
    assert "fixed-c2" in out
    assert "| 2 | 204 | 14.22 | 271 |" in out


def test_corpus_only_subcommand_rejects_histogram():
    assert main(["summary", "--input", "fixtures/lotka_observed.csv"]) == 1


def test_analysis_error_exit_code(tmp_path):
    small = tmp_path / "two.csv"
    small.write_text("key,count\nA,5\nB,3\n")
    assert main(["bradford", "--input", str(small), "--zones", "3"]) == 3


def test_report_and_subcommands_to_files(corpus_path, tmp_path):
    out = tmp_path / "report.md"
    assert main(["report", "--input", str(corpus_path), "--out", str(out),
                 "--places", "fixtures/places.txt", "--regions", "fixtures/region_map.csv"]) == 0
    text = out.read_text()
    assert "| 2004 | 139 | 23.97 | 23.97 | 478 |" in text
    assert "0.456" in text and "0.378" in text
    assert "| 1 | 43 | 1990 |" in text

    for cmd in (["summary"], ["collab"], ["refs"], ["impact"], ["content"]):
        target = tmp_path / (cmd[0] + ".csv")
        assert main(cmd + ["--input", str(corpus_path), "--format", "csv",
                           "--out", str(target)]) == 0
        assert target.exists() and target.read_text().strip()


def test_bradford_and_halflife_cli(corpus_path, tmp_path, capsys):
    assert main(["bradford", "--input", "fixtures/journal_citations.csv",
                 "--zones", "3", "--plot", str(tmp_path / "bradford.svg")]) == 0
    out = capsys.readouterr().out
    assert "| 1 | 43 | 1990 |" in out
    assert (tmp_path / "bradford.svg").exists()
    assert (tmp_path / "bradford.csv").exists()
    svg = (tmp_path / "bradford.svg").read_text()
    assert svg.startswith("<?xml") and "<polyline" in svg

    assert main(["halflife", "--input", "fixtures/citation_ages.csv",
                 "--plot", str(tmp_path / "age.svg")]) == 0
    out = capsys.readouterr().out
    assert "half-life: 9 years" in out
    assert (tmp_path / "age.svg").exists() and (tmp_path / "age.csv").exists()


def test_impact_cli_single_values(corpus_path, capsys):
    assert main(["impact", "--input", str(corpus_path), "--year", "2008"]) == 0
    assert "75/204 = 0.367" in capsys.readouterr().out
    assert main(["impact", "--input", str(corpus_path), "--aggregate", "2004..2008"]) == 0
    assert "335/580 = 0.577" in capsys.readouterr().out


def test_impact_cli_insufficient_years(corpus_path):
    assert main(["impact", "--input", str(corpus_path), "--year", "2005"]) == 3


def test_config_file_defaults(corpus_path, tmp_path, monkeypatch, capsys):
    config = tmp_path / "bibliolens.conf"
    config.write_text("format=csv\nhome=Malaysia\n")
    monkeypatch.setenv("BIBLIOLENS_CONFIG", str(config))
    assert main(["summary", "--input", str(corpus_path)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# Articles and authorships per year")


def test_cli_rendering_byte_identical(corpus_path, tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for target in (first, second):
        assert main(["collab", "--input", str(corpus_path), "--format", "json",
                     "--out", str(target)]) == 0
    assert first.read_bytes() == second.read_bytes()
