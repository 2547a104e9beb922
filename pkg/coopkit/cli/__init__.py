from .app import build_parser, main, run
from .router import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, Outcome, Router

__all__ = ['build_parser', 'main', 'run', 'EXIT_INPUT', 'EXIT_NEGATIVE', 'EXIT_OK', 'Outcome', 'Router']
