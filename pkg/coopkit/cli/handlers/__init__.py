from .proofs import router as proofs_router
from .algebra import router as algebra_router
from .hoops import router as hoops_router
from .envelope import router as envelope_router
from .decide import router as decide_router

__all__ = ['proofs_router', 'algebra_router', 'hoops_router', 'envelope_router', 'decide_router']
