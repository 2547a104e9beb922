import io
import json
from pathlib import Path

import pytest

from coopkit.cli import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, run
from coopkit.cli.app import ROUTERS
from coopkit.config import settings

L3_FILE = Path(__file__).resolve().parents[1] / "corpus" / "algebras" / "L3.json"

DRASTIC = {
    "name": "drastic",
    "size": 4,
    "zero": 0,
    "one": 3,
    "plus": [[0, 1, 2, 3], [1, 3, 3, 3], [2, 3, 3, 3], [3, 3, 3, 3]],
    "imp": [[0, 1, 2, 3], [0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0]],
}


@pytest.fixture(autouse=True)
def keep_seed(monkeypatch):
    monkeypatch.setattr(settings, "SEED", settings.SEED)


def invoke(*argv):
    out = io.StringIO()
    code = run([*argv, "--format", "json"], out=out)
    text = out.getvalue()
    return code, json.loads(text) if text.strip() else None


class TestParser:
    def test_every_command_is_registered(self):
        commands = {command.name for router in ROUTERS for command in router.commands}
        assert commands == {
            "parse", "check-proof", "translate", "verify-chain", "eval", "laws", "countermodel",
            "enumerate", "analyze", "envelope", "decide",
        }

    def test_version(self, capsys):
        assert run(["--version"]) == EXIT_OK
        assert "coopkit" in capsys.readouterr().out

    def test_usage_errors(self):
        assert run([]) == EXIT_INPUT
        assert run(["no-such-command"]) == EXIT_INPUT
        assert run(["check-proof", "identity"]) == EXIT_INPUT


class TestProofCommands:
    def test_parse(self):
        code, payload = invoke("parse", "A -o B * 1")
        assert code == EXIT_OK
        assert payload["kind"] == "formula"
        assert payload["variables"] == ["A", "B"]

    def test_parse_error_is_reported_as_json(self):
        code, payload = invoke("parse", "A -o")
        assert code == EXIT_INPUT
        assert payload["error"] == "FormulaSyntaxError"

    def test_check_proof(self):
        code, payload = invoke("check-proof", "a3", "--logic", "LLc")
        assert code == EXIT_OK
        assert payload["ok"] is True

    def test_check_proof_outside_its_logic(self):
        code, payload = invoke("check-proof", "a3", "--logic", "ALu")
        assert code == EXIT_NEGATIVE
        assert payload["ok"] is False
        assert payload["failures"][0]["reason"] == "axiom not in logic"

    def test_translate_and_verify(self, tmp_path):
        path = tmp_path / "chain.json"
        code, payload = invoke("translate", "modus-ponens", "-o", str(path))
        assert code == EXIT_OK
        assert payload["verified"] is True
        assert payload["steps"] == len(payload["chain"]["steps"])
        code, payload = invoke("verify-chain", str(path))
        assert code == EXIT_OK
        assert payload["ok"] is True

    def test_tampered_chain_is_rejected(self, tmp_path):
        path = tmp_path / "chain.json"
        invoke("translate", "transitivity", "-o", str(path))
        data = json.loads(path.read_text())
        data["steps"][0]["justification"] = "Eq9"
        path.write_text(json.dumps(data))
        code, payload = invoke("verify-chain", str(path))
        assert code == EXIT_NEGATIVE
        assert payload["failed_step"] == 0

    def test_translate_refuses_other_axioms(self):
        code, payload = invoke("translate", "a4")
        assert code == EXIT_INPUT
        assert payload["error"] == "UnsupportedAxiom"


class TestAlgebraCommands:
    def test_eval_formula(self):
        code, payload = invoke("eval", "P * P", "-m", "L3", "-a", "P=1/2")
        assert code == EXIT_OK
        assert payload["value"] == "1"

    def test_eval_sequent(self):
        code, payload = invoke("eval", "P |- P * P", "-m", "L3", "-a", "P=1/2")
        assert code == EXIT_NEGATIVE
        assert payload["holds"] is False

    def test_eval_needs_every_variable(self):
        code, payload = invoke("eval", "P * Q", "-m", "L3", "-a", "P=1")
        assert code == EXIT_INPUT
        assert "Q" in payload["message"]

    def test_laws_of_a_shipped_file(self):
        code, payload = invoke("laws", str(L3_FILE), "--class", "bounded-hoop")
        assert code == EXIT_OK
        assert payload["member"] is True

    def test_laws_class_mismatch(self):
        code, payload = invoke("laws", "G3", "--class", "involutive-hoop")
        assert code == EXIT_NEGATIVE
        assert payload["member"] is False

    def test_laws_of_a_dense_model(self):
        code, payload = invoke("laws", "dyadic-capped:1", "--class", "bounded-coop", "--samples", "200", "--halving")
        assert code == EXIT_OK
        assert payload["halving"]["checks"]["strict-descent"]["ok"] is True

    def test_countermodel_found(self):
        code, payload = invoke("countermodel", "P |- P * P", "--class", "hoop", "--budget", "3")
        assert code == EXIT_NEGATIVE
        assert payload["found"] is True
        assert payload["model"].startswith("hoop-3-")

    def test_countermodel_budget_exhausted(self):
        code, payload = invoke("countermodel", "P * Q |- Q * P", "--class", "hoop", "--budget", "2")
        assert code == EXIT_OK
        assert payload["found"] is False
        assert payload["budget"] == 2

    def test_enumerate(self):
        code, payload = invoke("enumerate", "-n", "3", "--class", "hoop")
        assert code == EXIT_OK
        assert payload["count"] == 2
        assert [a["size"] for a in payload["algebras"]] == [3, 3]

    def test_unknown_model(self):
        code, payload = invoke("eval", "P", "-m", "nowhere", "-a", "P=0")
        assert code == EXIT_INPUT
        assert payload["error"] == "InvalidModelError"


class TestHoopCommands:
    def test_analyze_subdirectly_irreducible(self):
        code, payload = invoke("analyze", "G3")
        assert code == EXIT_OK
        assert payload["classification"]["subdirectly_irreducible"] is True
        assert payload["decomposition"]["monolith"] == ["0", "a"]
        assert payload["properties"]["checks"]["x"]["ok"] is True

    def test_analyze_product(self):
        code, payload = invoke("analyze", "booleanxboolean")
        assert code == EXIT_OK
        assert "decomposition" not in payload
        assert len(payload["ideals"]) == 4

    def test_analyze_rejects_non_hoops(self, tmp_path):
        path = tmp_path / "drastic.json"
        path.write_text(json.dumps(DRASTIC))
        code, payload = invoke("analyze", str(path))
        assert code == EXIT_INPUT
        assert payload["error"] == "NotAHoop"

    def test_analyze_needs_a_finite_model(self):
        code, payload = invoke("analyze", "dyadic-capped:1")
        assert code == EXIT_INPUT


class TestEnvelopeCommand:
    def test_add(self):
        code, payload = invoke("envelope", "--op", "add", "--x", "0:3/4", "--y", "0:3/4")
        assert code == EXIT_OK
        assert payload["result"] == "(2, 3/8)"
        assert payload["denotes"] == "3/2"

    def test_compare(self):
        code, payload = invoke("envelope", "--op", "compare", "--x", "1:1/4", "--y", "0:1/2")
        assert payload["result"] == "equal"

    def test_verify(self):
        code, payload = invoke("envelope", "--verify-samples", "50")
        assert code == EXIT_OK
        assert all(check["ok"] for check in payload["checks"].values())

    def test_operand_errors(self):
        assert invoke("envelope", "--op", "add")[0] == EXIT_INPUT
        assert invoke("envelope", "--op", "half", "--x", "3/4")[0] == EXIT_INPUT


class TestDecideCommand:
    def test_countermodel(self):
        code, payload = invoke("decide", "--eq", "x + x = x", "--ambient", "interval")
        assert code == EXIT_NEGATIVE
        assert payload["valid"] is False
        assert payload["assignment"] == {"x": "1/2"}

    def test_valid_sequent(self):
        code, payload = invoke("decide", "--sequent", "|- (A/2 -o A) -o A/2")
        assert code == EXIT_OK
        assert payload["valid"] is True

    def test_halving_elimination(self):
        code, payload = invoke("decide", "--eq", "x/2 = y => x = y + y", "--eliminate-halving")
        assert code == EXIT_OK
        assert payload["fresh"] == {"v1": "x"}

    @pytest.mark.parametrize("argv", [(), ("--eq", "x = x", "--sequent", "|- A")])
    def test_exactly_one_statement(self, argv):
        assert invoke("decide", *argv)[0] == EXIT_INPUT


class TestOutput:
    def test_json_is_deterministic(self):
        first = invoke("decide", "--eq", "x + y = x => y = 0")
        second = invoke("decide", "--eq", "x + y = x => y = 0")
        assert first == second
        assert first[1]["ambient"] == "interval"

    def test_text_output(self):
        out = io.StringIO()
        assert run(["parse", "A -o B", "--format", "text"], out=out) == EXIT_OK
        assert out.getvalue().startswith("A -o B")

    def test_seed_option(self):
        assert run(["laws", "dyadic-capped:1", "--law", "m1", "--samples", "10", "--seed", "5"], out=io.StringIO()) == EXIT_OK
        assert settings.SEED == 5

    def test_metrics_file(self, tmp_path):
        path = tmp_path / "coopkit.prom"
        run(["check-proof", "identity", "--logic", "ALu", "--metrics-file", str(path)], out=io.StringIO())
        assert "coopkit_proofs_checked_total" in path.read_text()
