from .diff import DiffElement, DiffGroup, DiffOp, Sign, diff_op
from .hat import ADD_BUMP, HatElement, HatEnvelope, HatOp, hat_embed, hat_op
from .ordering import Ordering, compare_in
from .verify import verify_envelope

__all__ = [
    'DiffElement', 'DiffGroup', 'DiffOp', 'Sign', 'diff_op',
    'ADD_BUMP', 'HatElement', 'HatEnvelope', 'HatOp', 'hat_embed', 'hat_op',
    'Ordering', 'compare_in', 'verify_envelope',
]
