import json

import pytest

from hypershadow import (
    compare,
    hyperstar,
    modified_octahedron,
    new_hypergraph,
    pleated_bowtie,
    random_connected_kgraph,
)
from hypershadow.cli import main
from hypershadow.errors import NonUniformEdge, ParseError
from hypershadow.textio import dumps, format_hypergraph, load_report, parse_hypergraph, render_report


class TestParse:
    def test_star(self):
        assert parse_hypergraph("1 2 3\n1 4 5\n") == hyperstar(2, 3)

    def test_comments(self):
        H = parse_hypergraph("# comment\nc r1 r2\n")
        assert H.m == 1 and set(H.labels) == {"c", "r1", "r2"}

    def test_inline_comment_and_blank(self):
        H = parse_hypergraph("\n a b c  # first\n\n b c d\n")
        assert H.m == 2

    def test_non_uniform_line_number(self):
        with pytest.raises(NonUniformEdge) as info:
            parse_hypergraph("1 2 3\n1 2\n")
        assert info.value.line == 2
        assert "line 2" in str(info.value)

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_hypergraph("# nothing\n")

    @pytest.mark.parametrize("H", [
        pleated_bowtie(8), pleated_bowtie(3, "as_printed"), modified_octahedron("blue"),
        hyperstar(4, 5), random_connected_kgraph(11, 9, 4, 17),
    ], ids=repr)
    def test_round_trip(self, H):
        assert parse_hypergraph(format_hypergraph(H, "generated")) == H


class TestReport:
    def test_single_edge(self):
        doc = load_report(render_report(compare(new_hypergraph(3, [[1, 2, 3]]))))
        assert doc["umbral_index"] == 0
        assert doc["chebyshev"] == pytest.approx(0.0, abs=1e-12)
        assert doc["opaque"] is False

    def test_octahedron_rankings(self):
        doc = load_report(render_report(compare(modified_octahedron("red"))))
        assert doc["hyper"]["ranking"] == [["p", "q"], ["t"], ["b"], ["r", "s"], ["u"]]
        assert doc["shadow"]["ranking"] == [["p", "q"], ["b", "t"], ["r", "s"], ["u"]]
        assert doc["umbral_index"] == 2

    def test_byte_identical(self):
        rep = compare(pleated_bowtie(4))
        assert render_report(rep) == render_report(rep)
        assert render_report(rep) == render_report(compare(pleated_bowtie(4)))

    def test_lossless_floats(self):
        rep = compare(modified_octahedron("red"))
        doc = load_report(render_report(rep))
        assert doc["rho"] == rep.rho
        assert doc["lambda"] == rep.lam
        assert doc["hyper"]["y"]["t"] == float(rep.hyper.y[rep.hyper.labels.index("t")])

    def test_dedup_warning(self):
        doc = load_report(render_report(compare(pleated_bowtie(2, "as_printed"))))
        assert doc["warnings"] == ["1 duplicate edge(s) removed"]

    def test_sorted_labels(self):
        doc = load_report(render_report(compare(pleated_bowtie(10))))
        keys = list(doc["hyper"]["y"])
        assert keys.index("r2") < keys.index("r10")

    def test_dumps_seventeen_digits(self):
        assert dumps(0.1) == "0.10000000000000001"
        assert dumps([1.0, 2]) == "[1.0, 2]"
        assert json.loads(dumps({"a": [0.1, True, None]})) == {"a": [0.1, True, None]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCommands:
    def test_gen_compare(self, capsys, tmp_path):
        code, text, _ = run(capsys, "gen", "octahedron", "--variant", "red")
        assert code == 0
        path = tmp_path / "or.txt"
        path.write_text(text)
        code, out, _ = run(capsys, "compare", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["umbral_index"] == 2 and doc["opaque"]

    def test_gen_families(self, capsys):
        for argv in (["gen", "bowtie", "--t", "8"], ["gen", "star", "--eta", "3", "--k", "3"],
                     ["gen", "windmill", "--eta", "3", "--k", "2"],
                     ["gen", "random", "--n", "8", "--m", "6", "--k", "3", "--seed", "4"]):
            code, text, _ = run(capsys, *argv)
            assert code == 0
            parse_hypergraph(text)

    def test_gen_windmill_reads_as_graph(self, capsys):
        _, text, _ = run(capsys, "gen", "windmill", "--eta", "3", "--k", "2")
        H = parse_hypergraph(text)
        assert (H.k, H.n, H.m) == (2, 7, 9)

    def test_eigen(self, capsys, tmp_path):
        path = tmp_path / "s.txt"
        path.write_text(format_hypergraph(hyperstar(3, 3)))
        _, out, _ = run(capsys, "eigen", str(path))
        doc = json.loads(out)
        assert doc["mass"]["1"] == pytest.approx(1 / 3, abs=1e-12)
        _, out, _ = run(capsys, "eigen", str(path), "--shadow")
        doc = json.loads(out)
        assert doc["eigenvalue"] == pytest.approx(3, abs=1e-10)

    def test_out_flag(self, capsys, tmp_path):
        src = tmp_path / "b.txt"
        src.write_text(format_hypergraph(pleated_bowtie(8)))
        dest = tmp_path / "report.json"
        code, out, _ = run(capsys, "compare", str(src), "--out", str(dest))
        assert code == 0 and out == ""
        doc = json.loads(dest.read_text())
        assert doc["hyper"]["ranking"][0] == ["r1", "r2"]
        assert doc["shadow"]["ranking"][0] == ["c"]

    def test_verify(self, capsys, tmp_path):
        path = tmp_path / "r.txt"
        path.write_text(format_hypergraph(random_connected_kgraph(9, 7, 3, 2)))
        code, out, _ = run(capsys, "verify", str(path))
        assert code == 0
        assert json.loads(out)["all_ok"]

    def test_scan_bowtie_tsv(self, capsys):
        code, out, _ = run(capsys, "scan", "bowtie", "--t-min", "8", "--t-max", "8", "--format", "tsv")
        assert code == 0
        header, row = out.strip().split("\n")
        rec = dict(zip(header.split("\t"), row.split("\t")))
        assert rec["umbral_index"] == "1" and rec["hyper_ok"] == "True"

    def test_scan_delta(self, capsys):
        code, out, _ = run(capsys, "scan", "delta", "--k", "3", "--eta", "3", "10000")
        rows = json.loads(out)
        assert rows[0]["D"] == pytest.approx(1 / 15, abs=1e-12)
        assert rows[1]["D_solver"] is None

    def test_exit_codes(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 2 3\n1 2\n")
        assert run(capsys, "compare", str(bad))[0] == 4
        empty = tmp_path / "empty.txt"
        empty.write_text("# nothing\n")
        assert run(capsys, "compare", str(empty))[0] == 3
        split = tmp_path / "split.txt"
        split.write_text("1 2 3\n4 5 6\n")
        assert run(capsys, "compare", str(split))[0] == 4
        ok = tmp_path / "ok.txt"
        ok.write_text(format_hypergraph(pleated_bowtie(8)))
        code, _, err = run(capsys, "compare", str(ok), "--max-iters", "2")
        assert code == 5 and "no convergence" in err
        assert run(capsys, "compare", str(tmp_path / "missing.txt"))[0] == 3
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2
