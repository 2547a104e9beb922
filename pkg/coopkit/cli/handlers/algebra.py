from coopkit.algebra import (
    AlgebraClass,
    Sampled,
    antecedent_value,
    check_halving_properties,
    check_laws,
    enumerate_algebras,
    enumerate_up_to,
    eval_formula,
    parse_algebra_class,
    search_countermodel,
)
from coopkit.algebra.io import algebra_to_file
from coopkit.config import settings
from coopkit.exceptions import BudgetExhausted
from coopkit.kernel import LogicId, model_class
from coopkit.syntax import Sequent, parse_sequent, variables
from coopkit.utils.formatters import format_assignment, format_table

from ..loaders import load_model, parse_assignments, parse_statement
from ..router import Outcome, Router, arg

router = Router("algebra")


@router.command("eval", "Evaluate a formula, or test a sequent, under an assignment", (
    arg("text", help="formula, or sequent written with |-"),
    arg("--model", "-m", required=True, help="algebra file or model name"),
    arg("--assign", "-a", action="append", metavar="NAME=VALUE", help="repeat once per variable"),
))
def evaluate(args) -> Outcome:
    model = load_model(args.model)
    statement = parse_statement(args.text)
    names = statement.variables() if isinstance(statement, Sequent) else variables(statement)
    assignment = parse_assignments(args.assign, model, names)
    shown = {name: model.format_element(v) for name, v in assignment.items()}
    if not isinstance(statement, Sequent):
        value = model.format_element(eval_formula(statement, assignment, model))
        payload = {"model": model.name, "assignment": shown, "value": value}
        return Outcome(True, payload, value)
    antecedent = antecedent_value(statement, assignment, model)
    succedent = eval_formula(statement.succedent, assignment, model)
    holds = model.geq(antecedent, succedent)
    payload = {
        "model": model.name,
        "assignment": shown,
        "antecedent": model.format_element(antecedent),
        "succedent": model.format_element(succedent),
        "holds": holds,
    }
    relation = ">=" if holds else "is not >="
    text = f"{payload['antecedent']} {relation} {payload['succedent']} under {format_assignment(shown)}"
    return Outcome(holds, payload, text)


@router.command("laws", "Check the pocrim, hoop and coop laws against a model", (
    arg("model", help="algebra file or model name"),
    arg("--class", dest="algebra_class", help="check exactly this class's laws"),
    arg("--law", action="append", help="check only the named law (repeatable)"),
    arg("--samples", type=int, help="sample count for dense models"),
    arg("--halving", action="store_true", help="also run the halving theory checks"),
))
def laws(args) -> Outcome:
    model = load_model(args.model)
    algebra_class = parse_algebra_class(args.algebra_class) if args.algebra_class else None
    names = args.law or (sorted(algebra_class.laws) if algebra_class else None)
    mode = None if model.is_finite else Sampled(count=args.samples or settings.SAMPLE_COUNT)
    report = check_laws(model, mode, names)
    payload = report.to_payload()
    ok = not report.failed_laws
    lines = [f"{model.name} ({report.mode}):"]
    lines += [f"  {name}: {verdict.status.value}" for name, verdict in sorted(report.verdicts.items())]
    if algebra_class is not None:
        member = report.satisfies(algebra_class)
        payload["class"] = algebra_class.value
        payload["member"] = member
        lines.append(f"{'in' if member else 'not in'} class {algebra_class.value}")
        ok = member
    if args.halving:
        halving = check_halving_properties(model, args.samples)
        payload["halving"] = halving.to_payload()
        lines += [f"  {name}: {'holds' if check.ok else 'fails'}" for name, check in halving.checks.items()]
        ok = ok and halving.ok
    return Outcome(ok, payload, "\n".join(lines))


@router.command("countermodel", "Search a class of models for one falsifying a sequent", (
    arg("sequent", help="sequent written with |-"),
    arg("--class", dest="algebra_class", help="algebra class to search"),
    arg("--logic", help="search the class of this logic's models instead"),
))
def countermodel(args) -> Outcome:
    s = parse_sequent(args.sequent)
    if args.logic:
        algebra_class = model_class(LogicId.parse(args.logic))
    else:
        algebra_class = parse_algebra_class(args.algebra_class or AlgebraClass.POCRIM.value)
    try:
        witness = search_countermodel(s, algebra_class, args.budget)
    except BudgetExhausted as e:
        payload = {"sequent": str(s), "class": algebra_class.value, "found": False, "budget": e.budget}
        return Outcome(True, payload, f"no countermodel in {algebra_class.value} within budget {e.budget}")
    payload = {"sequent": str(s), "class": algebra_class.value, "found": True, **witness.describe()}
    text = (
        f"countermodel in {witness.model.name}: {format_assignment(payload['assignment'])}\n"
        f"  antecedent {payload['antecedent']}, succedent {payload['succedent']}"
    )
    return Outcome(False, payload, text)


@router.command("enumerate", "List the finite algebras of a class up to isomorphism", (
    arg("--size", "-n", type=int, required=True),
    arg("--class", dest="algebra_class", default=AlgebraClass.HOOP.value),
    arg("--up-to", action="store_true", help="every size from 1 to --size"),
))
def enumerate_(args) -> Outcome:
    algebra_class = parse_algebra_class(args.algebra_class)
    if args.up_to:
        algebras = enumerate_up_to(args.size, algebra_class)
    else:
        algebras = enumerate_algebras(args.size, algebra_class)
    payload = {
        "class": algebra_class.value,
        "size": args.size,
        "count": len(algebras),
        "algebras": [algebra_to_file(a).to_payload() for a in algebras],
    }
    lines = [f"{len(algebras)} {algebra_class.value} algebras"]
    for algebra in algebras:
        lines.append(f"{algebra.name}:\n{format_table(algebra.plus_table)}")
    return Outcome(True, payload, "\n".join(lines))
