"""Verification and JSON storage of equational chains."""
from pathlib import Path as FilePath
from typing import Union

from loguru import logger
from pydantic import ValidationError

from coopkit.exceptions import ChainFormatError, CoopkitError
from coopkit.models.chain import ChainFile, ChainStepFile
from coopkit.models.reports import ChainVerdict
from coopkit.utils.metrics import metrics, track_duration

from .equations import EQUATIONS, JUSTIFICATIONS, REARRANGE, Direction, EqChain, EqStep, apply_step
from .terms import ZeroTerm, ac_normalize, parse_term, render_term


def _failure(index: int, reason: str, expected=None, actual=None) -> ChainVerdict:
    return ChainVerdict(
        ok=False,
        failed_step=index,
        reason=reason,
        expected=None if expected is None else render_term(expected),
        actual=None if actual is None else render_term(actual),
    )


def _check_step(index: int, step: EqStep, previous) -> Union[ChainVerdict, None]:
    if step.source != previous:
        return _failure(index, "step does not start where the previous one ended", previous, step.source)
    if step.justification not in JUSTIFICATIONS:
        return _failure(index, f"unknown justification {step.justification!r}")
    if step.justification == REARRANGE:
        if ac_normalize(step.source) != ac_normalize(step.target):
            return _failure(index, "terms are not AC-equal", ac_normalize(step.source), ac_normalize(step.target))
        return None
    expected_vars = set(EQUATIONS[step.justification].variables)
    if set(step.substitution) != expected_vars:
        return _failure(index, f"substitution must bind exactly {', '.join(sorted(expected_vars))}")
    try:
        produced = apply_step(step)
    except CoopkitError as e:
        return _failure(index, str(e))
    if ac_normalize(produced) != ac_normalize(step.target):
        return _failure(index, "result does not match the stated term", ac_normalize(produced), ac_normalize(step.target))
    return None


@track_duration("verify_chain", "eqtrans")
def chain_verdict(chain: EqChain) -> ChainVerdict:
    """Replay every step; the first bad one is reported with its expected and stated terms"""
    verdict = None
    current = chain.start
    for index, step in enumerate(chain.steps):
        verdict = _check_step(index, step, current)
        if verdict is not None:
            break
        current = step.target
    if verdict is None and not isinstance(ac_normalize(current), ZeroTerm):
        verdict = _failure(len(chain.steps), "chain does not end at 0", None, current)
    verdict = verdict or ChainVerdict(ok=True)
    metrics.record_chain_verification(verdict.ok)
    if not verdict.ok:
        logger.debug(f"chain rejected at step {verdict.failed_step}: {verdict.reason}")
    return verdict


def verify_chain(chain: EqChain) -> bool:
    return chain_verdict(chain).ok


def chain_to_file(chain: EqChain) -> ChainFile:
    return ChainFile(
        start=render_term(chain.start),
        conclusion=chain.conclusion,
        steps=[
            ChainStepFile(
                term=render_term(step.target),
                justification=step.justification,
                position=list(step.position),
                direction=step.direction.value,
                substitution={name: render_term(t) for name, t in sorted(step.substitution.items())},
            )
            for step in chain.steps
        ],
    )


def chain_from_file(data: ChainFile) -> EqChain:
    current = start = parse_term(data.start)
    steps = []
    for index, entry in enumerate(data.steps):
        try:
            target = parse_term(entry.term)
            substitution = {name: parse_term(text) for name, text in entry.substitution.items()}
        except ChainFormatError as e:
            raise ChainFormatError(f"step {index}: {e}") from None
        steps.append(
            EqStep(current, target, entry.justification, tuple(entry.position), Direction(entry.direction), substitution)
        )
        current = target
    return EqChain(start, steps, data.conclusion)


def dump_chain(chain: EqChain) -> str:
    return chain_to_file(chain).to_json()


def load_chain(text: str) -> EqChain:
    try:
        return chain_from_file(ChainFile.model_validate_json(text))
    except ValidationError as e:
        raise ChainFormatError(f"bad chain file: {e.errors()[0]['msg']}") from None


def chain_from_path(path: Union[str, FilePath]) -> EqChain:
    try:
        text = FilePath(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ChainFormatError(f"cannot read {path}: {e.strerror}") from None
    return load_chain(text)


def chain_to_path(chain: EqChain, path: Union[str, FilePath]):
    FilePath(path).write_text(dump_chain(chain) + "\n", encoding="utf-8")
