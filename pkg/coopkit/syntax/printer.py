from .formula import Conj, Formula, Half, Imp, One, Sequent, Var, Zero

# binding strength: -o < * < /2 < atoms
_PRECEDENCE = {Imp: 1, Conj: 2, Half: 3}
_ATOM = 4


def _precedence(f: Formula) -> int:
    return _PRECEDENCE.get(type(f), _ATOM)


def _render(f: Formula, minimum: int) -> str:
    if isinstance(f, Zero):
        text = "0"
    elif isinstance(f, One):
        text = "1"
    elif isinstance(f, Var):
        text = f.name
    elif isinstance(f, Imp):
        text = f"{_render(f.left, 2)} -o {_render(f.right, 1)}"
    elif isinstance(f, Conj):
        text = f"{_render(f.left, 2)} * {_render(f.right, 3)}"
    elif isinstance(f, Half):
        text = f"{_render(f.body, 3)}/2"
    else:
        raise TypeError(f"not a formula: {f!r}")
    if _precedence(f) < minimum:
        return f"({text})"
    return text


def render_formula(f: Formula) -> str:
    """Print with the fewest parentheses the grammar allows"""
    return _render(f, 1)


def render_sequent(s: Sequent) -> str:
    left = ", ".join(render_formula(f) for f in s.antecedent)
    right = render_formula(s.succedent)
    return f"{left} |- {right}" if left else f"|- {right}"
