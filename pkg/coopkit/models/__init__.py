from .algebra import AlgebraFile
from .base import CoopkitModel
from .chain import ChainFile, ChainStepFile
from .proof import NodeKind, ProofFile
from .reports import (
    ChainVerdict,
    CheckReport,
    ClassifyRecord,
    Failure,
    LawReport,
    LawStatus,
    LawVerdict,
    PropertyCheck,
    PropertyReport,
    Verdict,
)

__all__ = [
    'AlgebraFile', 'CoopkitModel', 'ChainFile', 'ChainStepFile', 'NodeKind', 'ProofFile',
    'ChainVerdict', 'CheckReport', 'ClassifyRecord', 'Failure', 'LawReport', 'LawStatus', 'LawVerdict',
    'PropertyCheck', 'PropertyReport', 'Verdict',
]
