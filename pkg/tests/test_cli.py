"""End-to-end tests of the command-line interface via main(argv)."""

import sys
from fractions import Fraction

import pytest

from gamedep.cli import build_parser, entry, main
from gamedep.parser import parse_formula, parse_game
from gamedep.semantics import holds

COORDINATION_DOC = """\
players a b
edge a b
strategies a a1 a2
strategies b b1 b2
payoff a a=a1 b=b1 1
payoff a a=a1 b=b2 0
payoff a a=a2 b=b1 0
payoff a a=a2 b=b2 1
payoff b a=a1 b=b1 1
payoff b a=a1 b=b2 0
payoff b a=a2 b=b1 0
payoff b a=a2 b=b2 1
"""

PATH_DOC = """\
players a b c d
edge a b
edge b c
edge c d
"""

SHORT_PATH_DOC = """\
players a b c
edge a b
edge b c
"""

SQUARE_DOC = """\
players a b c d
edge a b
edge a c
edge b c
edge b d
edge c d
"""

PROOF_DOC = """\
1. a |> d [Hypothesis]
2. b,c |> d [Contiguity 1 cut={a,b}|{c,d} A={a}]
"""


@pytest.fixture
def game_file(tmp_path):
    path = tmp_path / "game.txt"
    path.write_text(COORDINATION_DOC)
    return str(path)


@pytest.fixture
def path_file(tmp_path):
    path = tmp_path / "path.txt"
    path.write_text(PATH_DOC)
    return str(path)


class TestNe:
    def test_lists_equilibria_and_total(self, game_file, capsys):
        assert main(["ne", game_file]) == 0
        out = capsys.readouterr().out
        assert out == "a=a1 b=b1\na=a2 b=b2\ntotal: 2\n"

    def test_missing_file(self, tmp_path, capsys):
        assert main(["ne", str(tmp_path / "absent.txt")]) == 2
        assert capsys.readouterr().err.startswith("error: cannot read")

    def test_bad_document_reports_the_line(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("players a b\nedge a z\n")
        assert main(["ne", str(path)]) == 2
        err = capsys.readouterr().err
        assert err.startswith("error: line 2:")


class TestCheck:
    def test_holding_formula(self, game_file, capsys):
        assert main(["check", game_file, "a |> b"]) == 0
        assert capsys.readouterr().out == "holds\n"

    def test_failing_formula(self, game_file, capsys):
        assert main(["check", game_file, "{} |> a"]) == 1
        assert capsys.readouterr().out == "fails\n"

    def test_falsum(self, game_file, capsys):
        assert main(["check", game_file, "false"]) == 1
        assert capsys.readouterr().out == "fails\n"

    def test_implication(self, game_file, capsys):
        assert main(["check", game_file, "a |> b -> b |> a"]) == 0

    def test_malformed_formula(self, game_file, capsys):
        assert main(["check", game_file, "a |>"]) == 2
        assert capsys.readouterr().err.startswith("error: line 1")

    def test_out_of_scope_player(self, game_file, capsys):
        assert main(["check", game_file, "a |> z"]) == 2
        assert "player 'z' is not in the graph" in capsys.readouterr().err


class TestProve:
    def test_derivable_goal_prints_the_proof(self, path_file, capsys):
        assert main(["prove", path_file, "b,c |> d", "--assume", "a |> d"]) == 0
        out = capsys.readouterr().out
        assert out == PROOF_DOC

    def test_reflexive_goal_needs_no_assumptions(self, path_file, capsys):
        assert main(["prove", path_file, "a,b |> a"]) == 0
        assert "[Reflexivity]" in capsys.readouterr().out

    def test_multiple_assumptions(self, path_file, capsys):
        code = main(["prove", path_file, "b,c |> a,d",
                     "--assume", "a,c |> d", "--assume", "d,b |> a"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.splitlines()[-1].startswith("7. b,c |> a,d")

    def test_non_derivable_goal(self, tmp_path, capsys):
        path = tmp_path / "short.txt"
        path.write_text(SHORT_PATH_DOC)
        assert main(["prove", str(path), "b |> c", "--assume", "a |> c"]) == 1
        assert capsys.readouterr().out == "not derivable\n"

    def test_oversized_graph_is_refused(self, tmp_path, capsys):
        names = [f"p{i}" for i in range(13)]
        doc = "players " + " ".join(names) + "\n" + "".join(
            f"edge {names[i]} {names[i + 1]}\n" for i in range(12))
        path = tmp_path / "big.txt"
        path.write_text(doc)
        assert main(["prove", str(path), "p0 |> p1"]) == 2
        assert "capped" in capsys.readouterr().err


class TestProveCheck:
    def test_valid_proof(self, path_file, tmp_path, capsys):
        proof = tmp_path / "proof.txt"
        proof.write_text(PROOF_DOC)
        code = main(["prove-check", path_file, str(proof), "--assume", "a |> d"])
        assert code == 0
        assert capsys.readouterr().out == "verified\n"

    def test_unassumed_hypothesis(self, path_file, tmp_path, capsys):
        proof = tmp_path / "proof.txt"
        proof.write_text(PROOF_DOC)
        assert main(["prove-check", path_file, str(proof)]) == 1
        out = capsys.readouterr().out
        assert "step 1: atom is not among the hypotheses" in out

    def test_tampered_conclusion(self, path_file, tmp_path, capsys):
        proof = tmp_path / "proof.txt"
        proof.write_text(PROOF_DOC.replace("b,c |> d", "b |> d"))
        code = main(["prove-check", path_file, str(proof), "--assume", "a |> d"])
        assert code == 1
        assert "step 2:" in capsys.readouterr().out

    def test_malformed_proof_file(self, path_file, tmp_path, capsys):
        proof = tmp_path / "proof.txt"
        proof.write_text("1. a |> d\n")
        code = main(["prove-check", path_file, str(proof), "--assume", "a |> d"])
        assert code == 2
        assert capsys.readouterr().err.startswith("error: line 1")


class TestRefute:
    def test_finds_a_counterexample_game(self, tmp_path, capsys):
        path = tmp_path / "square.txt"
        path.write_text(SQUARE_DOC)
        assert main(["refute", str(path), "a |> d -> b,c |> d"]) == 0
        out = capsys.readouterr().out
        game = parse_game(out)
        formula = parse_formula("a |> d -> b,c |> d", game.graph)
        assert not holds(game, formula)

    def test_reports_exhausted_bounds(self, path_file, capsys):
        code = main(["refute", path_file, "a |> a", "--samples", "5"])
        assert code == 1
        out = capsys.readouterr().out
        assert out == "no counterexample within bounds (5 games examined)\n"

    def test_systematic_mode(self, tmp_path, capsys):
        path = tmp_path / "single.txt"
        path.write_text("players a\n")
        code = main(["refute", str(path), "{} |> a",
                     "--mode", "systematic", "--max-strategies", "2"])
        assert code == 0
        game = parse_game(capsys.readouterr().out)
        assert game.strategies == {"a": ("0", "1")}

    def test_custom_values_are_parsed_as_rationals(self, tmp_path, capsys):
        path = tmp_path / "single.txt"
        path.write_text("players a\n")
        code = main(["refute", str(path), "{} |> a",
                     "--values", "0, 1/2", "--mode", "systematic",
                     "--max-strategies", "2"])
        assert code == 0
        game = parse_game(capsys.readouterr().out)
        values = {v for table in game.payoffs.values() for v in table.values()}
        assert values <= {Fraction(0), Fraction(1, 2)}

    def test_bad_values_list(self, path_file, capsys):
        assert main(["refute", path_file, "a |> a", "--values", "0,x"]) == 2
        err = capsys.readouterr().err
        assert err == "error: --values: malformed rational 'x'\n"

    def test_bad_mode_is_a_usage_error(self, path_file):
        with pytest.raises(SystemExit) as exc:
            main(["refute", path_file, "a |> a", "--mode", "guess"])
        assert exc.value.code == 2


class TestValidate:
    def test_complete_game_passes_silently(self, game_file, capsys):
        assert main(["validate", game_file]) == 0
        assert capsys.readouterr().out == ""

    def test_incomplete_tables_warn(self, tmp_path, capsys):
        doc = COORDINATION_DOC.rsplit("payoff b", 1)[0]  # drop b's last line
        path = tmp_path / "partial.txt"
        path.write_text(doc)
        assert main(["validate", str(path)]) == 0
        out = capsys.readouterr().out
        assert out.startswith("warning: payoff table for b covers 3 of 4")


class TestFuzzSoundness:
    def test_clean_report(self, path_file, capsys):
        code = main(["fuzz-soundness", path_file, "--assume", "a |> d",
                     "--samples", "50", "--seed", "42"])
        assert code == 0
        out = capsys.readouterr().out
        assert "games tested: 50" in out
        assert "violations: 0" in out

    def test_no_assumptions(self, path_file, capsys):
        assert main(["fuzz-soundness", path_file, "--samples", "5"]) == 0
        assert "violations: 0" in capsys.readouterr().out


class TestHarness:
    def test_subcommand_is_required(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_parser_program_name(self):
        assert build_parser().prog == "gamedep"

    def test_entry_exits_with_the_return_code(self, game_file, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["gamedep", "check", game_file, "false"])
        with pytest.raises(SystemExit) as exc:
            entry()
        assert exc.value.code == 1
