from pathlib import Path

from loguru import logger

from coopkit.eqtrans import chain_from_path, chain_to_file, chain_to_path, chain_verdict, translate_proof
from coopkit.kernel import LogicId, check_proof, proof_size
from coopkit.syntax import Sequent, classify_language, render_formula, render_sequent, sequent_language, variables

from ..loaders import load_proof_ref, parse_statement
from ..router import Outcome, Router, arg

router = Router("proofs")


@router.command("parse", "Parse a formula or sequent and print it canonically", (
    arg("text", help="formula, or sequent written with |-"),
))
def parse(args) -> Outcome:
    statement = parse_statement(args.text)
    if isinstance(statement, Sequent):
        rendered = render_sequent(statement)
        payload = {
            "kind": "sequent",
            "rendered": rendered,
            "language": sequent_language(statement).value,
            "variables": statement.variables(),
        }
    else:
        rendered = render_formula(statement)
        payload = {
            "kind": "formula",
            "rendered": rendered,
            "language": classify_language(statement).value,
            "variables": variables(statement),
        }
    return Outcome(True, payload, f"{rendered}  [{payload['language']}]")


@router.command("check-proof", "Check a proof tree in one of the twelve logics", (
    arg("proof", help="proof JSON file or corpus proof name"),
    arg("--logic", required=True, help="ALu, ALi, ALc, LLu, ... CLc"),
))
def check(args) -> Outcome:
    proof = load_proof_ref(args.proof)
    logic = LogicId.parse(args.logic)
    report = check_proof(proof, logic)
    payload = {
        "logic": logic.value,
        "conclusion": str(proof.conclusion),
        "nodes": proof_size(proof),
        **report.to_payload(),
    }
    if report.ok:
        text = f"proof of {proof.conclusion} checks in {logic.value}"
    else:
        lines = [f"proof of {proof.conclusion} fails in {logic.value}:"]
        lines += [f"  at {f.path or 'root'}: {f.reason}" for f in report.failures]
        text = "\n".join(lines)
    return Outcome(report.ok, payload, text)


@router.command("translate", "Translate an LLu proof into an equational chain ending at 0", (
    arg("proof", help="proof JSON file or corpus proof name"),
    arg("--output", "-o", help="also write the chain file here"),
))
def translate(args) -> Outcome:
    proof = load_proof_ref(args.proof)
    chain = translate_proof(proof)
    verdict = chain_verdict(chain)
    if args.output:
        chain_to_path(chain, args.output)
        logger.info(f"chain written to {Path(args.output)}")
    payload = {
        "conclusion": chain.conclusion,
        "steps": len(chain),
        "verified": verdict.ok,
        "chain": chain_to_file(chain).to_payload(),
    }
    status = "verified" if verdict.ok else f"REJECTED at step {verdict.failed_step}: {verdict.reason}"
    return Outcome(verdict.ok, payload, f"{chain.render()}\n{len(chain)} steps, {status}")


@router.command("verify-chain", "Re-check an equational chain file step by step", (
    arg("chain", help="chain JSON file"),
))
def verify(args) -> Outcome:
    chain = chain_from_path(args.chain)
    verdict = chain_verdict(chain)
    payload = {"steps": len(chain), **verdict.to_payload()}
    if verdict.ok:
        text = f"chain of {len(chain)} steps verified"
    else:
        text = f"chain rejected at step {verdict.failed_step}: {verdict.reason}"
        if verdict.expected is not None:
            text += f"\n  expected {verdict.expected}\n  actual   {verdict.actual}"
    return Outcome(verdict.ok, payload, text)
