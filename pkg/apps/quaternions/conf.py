"""
Access to the GINVERSE settings block.

Values come from `settings.GINVERSE`; `limits()` overrides them for the
current context, which is how the management command applies --max-dim and
--threads without touching global settings.
"""

from contextlib import contextmanager
from contextvars import ContextVar

from django.conf import settings

DEFAULTS = {
    'MAX_DIM': 7,
    'THREADS': 1,
    'ORACLE_SELF_CHECK': True,
}

_overrides = ContextVar('ginverse_overrides', default={})


def get(name):
    """Return a GINVERSE value, honouring active overrides."""
    active = _overrides.get()
    if name in active:
        return active[name]
    return getattr(settings, 'GINVERSE', {}).get(name, DEFAULTS[name])


def max_dim():
    return get('MAX_DIM')


def threads():
    return max(1, get('THREADS'))


def oracle_self_check():
    return get('ORACLE_SELF_CHECK')


@contextmanager
def limits(max_dim=None, threads=None):
    """
    Override the dimension cap and thread count inside a `with` block.

    Example:
        with limits(max_dim=8):
            wdmp(pair)
    """
    active = dict(_overrides.get())
    if max_dim is not None:
        active['MAX_DIM'] = max_dim
    if threads is not None:
        active['THREADS'] = threads
    token = _overrides.set(active)
    try:
        yield
    finally:
        _overrides.reset(token)
