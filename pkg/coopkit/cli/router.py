"""Command routing for the coopkit command line.

Handler modules each own a ``Router``; commands are registered with the
``command`` decorator and the application mounts every router onto one
argparse parser.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


@dataclass
class Outcome:
    """What a handler hands back: a verdict, a JSON payload and its text form"""

    ok: bool
    payload: Dict[str, Any]
    text: str

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.ok else EXIT_NEGATIVE


@dataclass(frozen=True)
class Argument:
    flags: Tuple[str, ...]
    options: Dict[str, Any] = field(default_factory=dict)


def arg(*flags: str, **options: Any) -> Argument:
    return Argument(flags, options)


@dataclass(frozen=True)
class Command:
    name: str
    handler: Callable[..., Outcome]
    help: str
    arguments: Tuple[Argument, ...]


class Router:
    def __init__(self, name: str):
        self.name = name
        self.commands: List[Command] = []

    def command(self, name: str, help: str = "", arguments: Tuple[Argument, ...] = ()):
        """Register the decorated function as the handler of ``name``"""
        def decorator(func: Callable[..., Outcome]) -> Callable[..., Outcome]:
            self.commands.append(Command(name, func, help or (func.__doc__ or "").strip(), tuple(arguments)))
            return func
        return decorator
