import os

from maxinv import exceptions

DEFAULT_ORDER_CAP = 360
ORDER_CAP_ENV = 'MAXINV_ORDER_CAP'
DEBUG_CHECKS_ENV = 'MAXINV_DEBUG_CHECKS'

# Cubic and quadratic law checks run exhaustively up to this order, sampled above.
EXHAUSTIVE_CHECK_LIMIT = 64
SAMPLE_SIZE = 10_000
SAMPLE_SEED = 20240901

AUTOMORPHISM_SEARCH_LIMIT = 24
ACTION_CLOSURE_FACTOR = 10


def order_cap() -> int:
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_ORDER_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise exceptions.GroupError(f'{ORDER_CAP_ENV} must be an integer, got {raw!r}') from None
    if cap < 1:
        raise exceptions.GroupError(f'{ORDER_CAP_ENV} must be positive, got {cap}')
    return cap


def resolve_cap(cap=None) -> int:
    return order_cap() if cap is None else cap


def debug_checks() -> bool:
    return os.environ.get(DEBUG_CHECKS_ENV, '').lower() in ('1', 'true', 'yes', 'on')
