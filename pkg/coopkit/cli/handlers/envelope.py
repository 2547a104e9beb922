from typing import Optional

from coopkit.algebra import DenseModel
from coopkit.envelope import HatElement, HatEnvelope, HatOp, Ordering, verify_envelope
from coopkit.exceptions import CoopkitError, InvalidModelError

from ..router import Outcome, Router, arg

router = Router("envelope")


def _hat_element(envelope: HatEnvelope, text: Optional[str]) -> Optional[HatElement]:
    """EXPONENT:VALUE, e.g. 1:3/4"""
    if text is None:
        return None
    exponent, sep, value = text.partition(":")
    if not sep or not exponent.strip().isdigit():
        raise CoopkitError(f"expected EXPONENT:VALUE, got {text!r}")
    return envelope.element(int(exponent), value.strip())


@router.command("envelope", "Verify the envelope constructions, or apply one envelope operation", (
    arg("--base", default="dyadic-capped:1", help="capped dense base model"),
    arg("--verify-samples", type=int, help="sample count for the property checks"),
    arg("--op", choices=[op.value for op in HatOp], help="apply one operation instead of verifying"),
    arg("--x", help="first operand as EXPONENT:VALUE"),
    arg("--y", help="second operand as EXPONENT:VALUE"),
))
def envelope(args) -> Outcome:
    base = DenseModel.parse(args.base)
    if args.op is None:
        report = verify_envelope(base, args.verify_samples)
        payload = report.to_payload()
        lines = [f"{report.title}:"]
        lines += [f"  {name}: {'holds' if check.ok else 'fails'} ({check.checked})" for name, check in report.checks.items()]
        return Outcome(report.ok, payload, "\n".join(lines))
    hat = HatEnvelope(base)
    x = _hat_element(hat, args.x)
    if x is None:
        raise InvalidModelError("--op needs --x")
    y = _hat_element(hat, args.y)
    result = hat.hat_op(args.op, x, y)
    shown = result.value if isinstance(result, Ordering) else str(result)
    payload = {"base": base.name, "op": args.op, "x": str(x), "result": shown}
    if y is not None:
        payload["y"] = str(y)
    if not isinstance(result, Ordering):
        payload["denotes"] = hat.denote(result)
    return Outcome(True, payload, shown)
