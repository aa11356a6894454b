import json
import shutil

import pytest

from riderlab import configs as cf
from riderlab import oeis
from riderlab.cli import main
from riderlab.model import PRESETS
from riderlab.quasipoly import Quasipolynomial
from riderlab.svgout import emit_svg

from conftest import FIXTURES


def test_parse_serialize_roundtrip_all_fixtures():
    for path in sorted(FIXTURES.glob("A*.txt")):
        entry = oeis.parse_bfile(path.read_text(), path.stem)
        again = oeis.parse_bfile(oeis.serialize_bfile(entry), path.stem)
        assert again == entry
        assert entry.offset == entry.values[0][0]


def test_parse_serialize_roundtrip_synthetic():
    import random
    rng = random.Random(8)
    for k in range(20):
        start = rng.randint(-3, 5)
        values = []
        n = start
        for _ in range(rng.randint(1, 40)):
            values.append((n, rng.randint(-10 ** 12, 10 ** 12)))
            n += rng.randint(1, 3)
        entry = oeis.OeisEntry(f"A{k:06d}", start, tuple(values))
        assert oeis.parse_bfile(oeis.serialize_bfile(entry), entry.ident) == entry


def test_parse_bfile_rejects_malformed():
    with pytest.raises(oeis.OeisFormatError):
        oeis.parse_bfile("1 2 3\n", "A000000")
    with pytest.raises(oeis.OeisFormatError):
        oeis.parse_bfile("2 4\n1 1\n", "A000000")
    with pytest.raises(oeis.OeisFormatError):
        oeis.parse_bfile("# only comments\n", "A000000")


def test_oeis_fetch_cache_only(oeis_fixtures):
    entry = oeis.oeis_fetch("A036464", cache_dir=oeis_fixtures, offline=True)
    assert entry.value_at(3) == 8
    entry2 = oeis.oeis_fetch("A172141", cache_dir=oeis_fixtures, offline=True)
    assert entry2.value_at(3) == 28
    with pytest.raises(FileNotFoundError):
        oeis.oeis_fetch("A999999", cache_dir=oeis_fixtures, offline=True)
    with pytest.raises(ValueError):
        oeis.oeis_fetch("badid", cache_dir=oeis_fixtures)


def test_verify_against_oeis_passes(oeis_fixtures):
    for name, q, n_max in (("queen", 2, 15), ("nightrider", 3, 10),
                           ("bishop", 3, 12), ("queen", 4, 8)):
        report = oeis.verify_against_oeis(PRESETS[name], q, n_max,
                                          cache_dir=oeis_fixtures, offline=True)
        assert report.ok, report
        assert not report.skipped


def test_verify_against_oeis_offset_shift(oeis_fixtures):
    report = oeis.verify_against_oeis(PRESETS["rook"], 2, 15,
                                      cache_dir=oeis_fixtures, offline=True)
    assert report.ident == "A163102" and report.ok


def test_verify_against_oeis_negative_control(tmp_path, oeis_fixtures):
    cache = tmp_path / "oeis"
    cache.mkdir()
    for src in oeis_fixtures.glob("*.txt"):
        shutil.copy(src, cache / src.name)
    lines = (cache / "A036464.txt").read_text().splitlines()
    n, v = lines[6].split()
    lines[6] = f"{n} {int(v) + 1}"  # inject a single off-by-one
    (cache / "A036464.txt").write_text("\n".join(lines) + "\n")
    report = oeis.verify_against_oeis(PRESETS["queen"], 2, 15,
                                      cache_dir=cache, offline=True)
    assert not report.ok
    assert len(report.mismatches) == 1 and report.mismatches[0][0] == int(n)


def test_verify_unmapped_piece_raises(oeis_fixtures):
    with pytest.raises(KeyError):
        oeis.verify_against_oeis(PRESETS["semiqueen"], 2, 5,
                                 cache_dir=oeis_fixtures, offline=True)


def test_emit_svg_extents_and_determinism():
    rect = cf.golden_rectangle(12)
    svg = emit_svg(rect)
    assert 'data-extent="13x8"' in svg
    assert svg == emit_svg(rect)
    spiral_svg = emit_svg(cf.queens_spiral(8))
    assert 'data-extent="21x13"' in spiral_svg
    assert spiral_svg.count("<circle") == 8


def test_emit_svg_single_piece_and_trajectory():
    solo = cf.GeneratedConfig(((0, 0),), 1, (), (("x", 1, 0), ("y", 1, 0)),
                              "solo", 1)
    svg = emit_svg(solo)
    assert svg.count("<circle") == 1
    traj = cf.generate_trajectory(13, 4, 8)
    tsvg = emit_svg(traj)
    assert 'data-extent="52x52"' in tsvg
    with pytest.raises(TypeError):
        emit_svg([(0, 0)])


def test_cli_count_csv_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["count", "--piece", "queen", "--q", "2", "--n-max", "8",
                 "--csv", str(out1)]) == 0
    assert main(["count", "--piece", "queen", "--q", "2", "--n-max", "8",
                 "--csv", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0] == "n,count" and lines[3] == "3,8"
    manifest = json.loads((tmp_path / "a.csv.manifest.json").read_text())
    assert manifest["command"] == "count" and manifest["n_range"] == [1, 8]


def test_cli_count_triangle_board(capsys):
    assert main(["count", "--piece", "semibishop", "--q", "2", "--n-max", "3",
                 "--board", "triangle"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "3,11"


def test_cli_fit_json(tmp_path):
    out = tmp_path / "fit.json"
    assert main(["fit", "--piece", "nightrider", "--q", "2",
                 "--period-max", "2", "--json", str(out)]) == 0
    qp = Quasipolynomial.from_json(out.read_text())
    assert qp.period == 2 and qp.evaluate(3) == 28


def test_cli_period_reports_denominator(capsys):
    assert main(["period", "--piece", "nightrider", "--q", "2",
                 "--n-max", "28"]) == 0
    out = capsys.readouterr().out
    assert "period=2" in out and "denominator=2" in out and "equal" in out


def test_cli_denom_and_vertices(tmp_path, capsys):
    assert main(["denom", "--piece", "queen", "--q", "3"]) == 0
    assert "D=2" in capsys.readouterr().out
    assert main(["denom", "--piece", "semibishop", "--q", "2"]) == 0
    assert "one-move closed form: 1" in capsys.readouterr().out
    assert main(["denom", "--piece", "(1,0);(2,1)", "--q", "2"]) == 0
    assert "conjecture-conditional" in capsys.readouterr().out
    dump = tmp_path / "v.txt"
    assert main(["vertices", "--piece", "rook", "--q", "2",
                 "--dump", str(dump)]) == 0
    assert "|delta=" in dump.read_text()


def test_cli_budget_exceeded_exit_2():
    assert main(["denom", "--piece", "nightrider", "--q", "4"]) == 2
    assert main(["denom", "--piece", "nightrider", "--q", "3",
                 "--budget", "10"]) == 2


def test_cli_usage_error_exit_2(capsys):
    assert main(["count", "--piece", "queen"]) == 2
    assert main(["count", "--piece", "wyvern", "--q", "2", "--n-max", "3"]) == 2
    assert main(["nope"]) == 2
    capsys.readouterr()


def test_cli_spiral_svg_and_png(tmp_path, capsys):
    svg = tmp_path / "rect.svg"
    png = tmp_path / "rect.png"
    code = main(["spiral", "--kind", "rectangle", "--piece", "semiqueen",
                 "--q", "12", "--svg", str(svg), "--png", str(png)])
    assert code == 0
    assert "delta=13" in capsys.readouterr().out
    assert 'data-extent="13x8"' in svg.read_text()
    assert png.stat().st_size > 0
    assert (tmp_path / "rect.svg.manifest.json").exists()
    assert main(["spiral", "--kind", "twisted", "--piece", "nightrider",
                 "--q", "5", "--variant", "1"]) == 0
    assert "delta=346" in capsys.readouterr().out
    assert main(["spiral", "--kind", "parallelogram", "--piece", "N3",
                 "--q", "13", "--variant", "5"]) == 0
    assert main(["spiral", "--kind", "rectangle", "--piece", "rook",
                 "--q", "8"]) == 2


def test_cli_count_plot(tmp_path):
    plot = tmp_path / "counts.png"
    assert main(["count", "--piece", "bishop", "--q", "2", "--n-max", "6",
                 "--csv", str(tmp_path / "c.csv"), "--plot", str(plot)]) == 0
    assert plot.stat().st_size > 0


def test_cli_verify_formula_and_oeis(oeis_fixtures, capsys):
    assert main(["verify", "--piece", "queen", "--q", "2", "--n-max", "10",
                 "--formula", "--oeis", "--cache", str(oeis_fixtures)]) == 0
    out = capsys.readouterr().out
    assert "formula check: ok" in out and "oeis check vs A036464: ok" in out
    assert main(["verify", "--piece", "queen", "--q", "2", "--n-max", "10"]) == 2


def test_cli_verify_detects_corruption(tmp_path, oeis_fixtures, capsys):
    cache = tmp_path / "oeis"
    cache.mkdir()
    for src in oeis_fixtures.glob("*.txt"):
        shutil.copy(src, cache / src.name)
    text = (cache / "A172141.txt").read_text().replace("3 28", "3 29")
    (cache / "A172141.txt").write_text(text)
    assert main(["verify", "--piece", "nightrider", "--q", "2", "--n-max", "8",
                 "--oeis", "--cache", str(cache)]) == 1
    assert "mismatch at n=3" in capsys.readouterr().out


def test_cli_oeis_subcommand(oeis_fixtures, capsys):
    assert main(["oeis", "--id", "A163102", "--cache", str(oeis_fixtures)]) == 0
    assert "offset=0" in capsys.readouterr().out
    assert main(["oeis", "--id", "A999999", "--cache", str(oeis_fixtures)]) == 2


def test_riderlab_cache_env(tmp_path, monkeypatch, oeis_fixtures):
    monkeypatch.setenv("RIDERLAB_CACHE", str(oeis_fixtures))
    entry = oeis.oeis_fetch("A036464", offline=True)
    assert entry.value_at(4) == 44
