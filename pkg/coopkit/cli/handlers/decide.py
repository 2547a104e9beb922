from coopkit.exceptions import CoopkitError
from coopkit.pldecide import (
    HornClause,
    decide_sequent,
    decide_universal,
    describe_verdict,
    eliminate_halving_with_names,
    matrix_to_text,
    parse_matrix,
)
from coopkit.syntax import parse_sequent

from ..router import Outcome, Router, arg

router = Router("decide")


@router.command("decide", "Decide a universal statement over the Wajsberg ambients", (
    arg("--eq", help="matrix such as 'x + y = x => y = 0'"),
    arg("--sequent", help="sequent written with |-"),
    arg("--ambient", default="wajsberg", help="nonneg, interval or wajsberg (both)"),
    arg("--eliminate-halving", action="store_true", help="rewrite halving out of a Horn clause first"),
))
def decide(args) -> Outcome:
    if bool(args.eq) == bool(args.sequent):
        raise CoopkitError("give exactly one of --eq and --sequent")
    payload = {"ambient": args.ambient}
    if args.sequent:
        s = parse_sequent(args.sequent)
        payload["sequent"] = str(s)
        verdict = decide_sequent(s, args.ambient)
    else:
        matrix = parse_matrix(args.eq)
        if args.eliminate_halving:
            elimination = eliminate_halving_with_names(HornClause.from_matrix(matrix))
            matrix = elimination.clause.as_matrix()
            payload["fresh"] = {name: str(body) for name, body in elimination.fresh}
        payload["matrix"] = matrix_to_text(matrix)
        verdict = decide_universal(matrix, args.ambient)
    payload.update(verdict.to_payload())
    return Outcome(verdict.valid, payload, describe_verdict(verdict))
