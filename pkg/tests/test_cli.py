import json
from pathlib import Path

import pytest

from epsilon_whitehead import __version__
from epsilon_whitehead.cli import app
from epsilon_whitehead.cli.app import create_parser, run
from epsilon_whitehead.cli.utils import EXIT_FAILURE, EXIT_OK, EXIT_UNDECIDED, EXIT_USAGE
from epsilon_whitehead.free_group.models import Word


class TestParser:
    def test_verify_requires_target(self):
        parser = create_parser()
        with pytest.raises(SystemExit):
            parser.parse_args(["verify"])

    def test_verify_targets_exclusive(self):
        parser = create_parser()
        with pytest.raises(SystemExit):
            parser.parse_args(["verify", "--k", "1", "--eps", "1/2"])

    def test_rank_guard_option(self):
        args = create_parser().parse_args(["--rank-guard", "4", "genw", "--k", "2"])
        assert args.rank_guard == 4
        assert args.k == 2


class TestRun:
    def test_version(self, capsys: pytest.CaptureFixture[str]):
        assert run(["-V"]) == EXIT_OK
        assert __version__ in capsys.readouterr().out

    def test_genw(self, capsys: pytest.CaptureFixture[str]):
        assert run(["genw", "--k", "1"]) == EXIT_OK
        assert capsys.readouterr().out == "a1 a2 a1 a2 g a1 g^-1 a2 g\n"

    def test_missing_subcommand(self):
        assert run([]) == EXIT_USAGE

    def test_bad_k(self):
        assert run(["genw", "--k", "0"]) == EXIT_USAGE

    def test_bad_word(self, capsys: pytest.CaptureFixture[str]):
        assert run(["primitive", "--word", "a1 b2", "--rank", "2"]) == EXIT_USAGE
        assert "b2" in capsys.readouterr().err

    def test_primitive(self, capsys: pytest.CaptureFixture[str]):
        assert run(["primitive", "--word", "a1 a2 a1", "--rank", "2"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "Verdict: primitive" in out
        assert "Whitehead descent" in out

    def test_primitive_json(self, capsys: pytest.CaptureFixture[str]):
        assert run(["primitive", "--word", "a1 a2 A1 A2", "--rank", "2", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["verdict"] == "non_primitive"
        assert data["graph_status"] == "two_connected"

    def test_undecided(self, capsys: pytest.CaptureFixture[str]):
        argv = ["--rank-guard", "1", "primitive", "--word", "a1 a2", "--rank", "2"]
        assert run(argv) == EXIT_UNDECIDED
        assert "Undecided" in capsys.readouterr().err

    def test_wgraph_dot_and_json(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]):
        dot = tmp_path / "out" / "w.dot"
        argv = ["wgraph", "--word", "a1 a2 a1", "--rank", "2", "--dot", str(dot), "--json"]
        assert run(argv) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["status"] == "cut_vertex"
        assert len(data["edges"]) == 3
        assert dot.read_text().startswith("graph whitehead {")

    def test_wgraph_empty_word(self):
        assert run(["wgraph", "--word", "a1 A1", "--rank", "2"]) == 1

    def test_epsilon(self, capsys: pytest.CaptureFixture[str]):
        assert run(["epsilon", "--k", "2", "--chord"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "3/8·2π" in out
        assert "chord" in out

    def test_trace(self, capsys: pytest.CaptureFixture[str]):
        assert run(["trace", "--k", "1"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("a1 a2 a1 a2 g a1 g^-1 a2 g")

    def test_trace_json(self, capsys: pytest.CaptureFixture[str]):
        assert run(["trace", "--k", "1", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["start"] == "y1"
        assert data["graph"]["edges"][0]["length"]["unit"] == "pi"

    def test_verify_eps_json(self, capsys: pytest.CaptureFixture[str]):
        assert run(["verify", "--eps", "1/2", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["k"] == 1
        assert data["primitive"] is False
        assert data["epsilon"] == {"num": 5, "den": 12, "unit": "2pi", "decimal": 5 / 12}
        assert data["surjective"] is True
        assert data["trace_matches"] is True

    def test_verify_json_is_deterministic(self, capsys: pytest.CaptureFixture[str]):
        run(["verify", "--k", "2", "--json"])
        first = capsys.readouterr().out
        run(["verify", "--k", "2", "--json"])
        assert capsys.readouterr().out == first

    def test_verify_bad_eps(self):
        assert run(["verify", "--eps", "-1"]) == EXIT_USAGE

    def test_verify_table(self, capsys: pytest.CaptureFixture[str]):
        assert run(["verify", "--k", "1"]) == EXIT_OK
        assert "Verification for k = 1" in capsys.readouterr().out

    def test_table_json(self, capsys: pytest.CaptureFixture[str]):
        assert run(["table", "--max-k", "3", "--json"]) == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert [row["k"] for row in rows] == [1, 2, 3]
        assert rows[2]["epsilon"]["num"] == 1
        assert rows[2]["epsilon"]["den"] == 4

    def test_table_chord(self, capsys: pytest.CaptureFixture[str]):
        assert run(["table", "--max-k", "2", "--chord"]) == EXIT_OK
        assert "Chord" in capsys.readouterr().out
        assert run(["table", "--max-k", "2", "--chord", "--json"]) == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert all("chord" in row for row in rows)

    def test_trace_mismatch_goes_to_stderr(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ):
        monkeypatch.setattr(app, "gen_wk", lambda k: Word())
        assert run(["trace", "--k", "1"]) == EXIT_FAILURE
        captured = capsys.readouterr()
        assert "differs" in captured.err
        assert "differs" not in captured.out
