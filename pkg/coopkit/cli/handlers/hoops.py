from coopkit.hooplab import all_ideals, check_cep, classify, monolith_and_decomposition, verify_decomposition

from ..loaders import load_finite
from ..router import Outcome, Router, arg

router = Router("hoops")


@router.command("analyze", "Classify a finite hoop and decompose it when subdirectly irreducible", (
    arg("model", help="algebra file or finite model name"),
))
def analyze(args) -> Outcome:
    h = load_finite(args.model)
    decomposition = monolith_and_decomposition(h)
    record = classify(h)
    ideals = all_ideals(h)
    cep = check_cep(h)
    payload = {
        "model": h.name,
        "size": h.size,
        "classification": record.to_payload(),
        "ideals": [ideal.labels() for ideal in ideals],
        "cep": cep.to_payload(),
    }
    lines = [
        f"{h.name}: {h.size} elements, {len(ideals)} ideals",
        f"  simple={record.simple} archimedean={record.archimedean} linear={record.linear} "
        f"subdirectly irreducible={record.subdirectly_irreducible}",
    ]
    ok = cep.ok
    if decomposition is not None:
        report = verify_decomposition(h, decomposition)
        payload["decomposition"] = decomposition.describe(h)
        payload["properties"] = report.to_payload()
        lines.append(f"  monolith {decomposition.monolith}")
        failed = report.failed
        lines.append(f"  decomposition properties: {'all hold' if not failed else 'failing ' + ', '.join(failed)}")
        ok = ok and report.ok
    return Outcome(ok, payload, "\n".join(lines))
