"""
Exact checks of the equation systems that characterize each inverse.
"""

import logging
from dataclasses import dataclass

from apps.inverses.pairs import WeightedPair
from apps.quaternions.exceptions import DimensionMismatch
from apps.quaternions.scalars import ZERO

from .exceptions import UnknownSystem
from .oracles import mp_oracle, oracle_index, wdrazin_oracle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EquationCheck:
    label: str
    holds: bool
    residual: object


@dataclass(frozen=True)
class VerificationVerdict:
    """Per-equation outcome of one characterizing system."""

    system: str
    equations: tuple

    @property
    def holds(self):
        return all(check.holds for check in self.equations)

    @property
    def failed(self):
        return [check.label for check in self.equations if not check.holds]


def residual(lhs, rhs):
    """The entry of lhs − rhs with the largest norm, ZERO when they agree."""
    difference = lhs - rhs
    return max((q for row in difference.data for q in row), key=lambda q: q.norm_squared(), default=ZERO)


def _check(label, lhs, rhs):
    value = residual(lhs, rhs)
    return EquationCheck(label, not value, value)


def _weighted_index(A, W):
    return max(oracle_index(W @ A), oracle_index(A @ W))


def _require_weight(name, A, W):
    if W is None:
        raise DimensionMismatch(f"system {name!r} needs a weight W")
    if W.shape != (A.cols, A.rows):
        raise DimensionMismatch(f"weight must be {A.cols}x{A.rows}, got {W.rows}x{W.cols}")


def _penrose(A, W, X):
    AX, XA = A @ X, X @ A
    return [
        ('AXA = A', AX @ A, A),
        ('XAX = X', XA @ X, X),
        ('(AX)* = AX', AX.H, AX),
        ('(XA)* = XA', XA.H, XA),
    ]


def _drazin(A, W, X):
    Ak = A.power(oracle_index(A))
    return [
        ('A^{k+1}X = A^k', Ak @ A @ X, Ak),
        ('XAX = X', X @ A @ X, X),
        ('AX = XA', A @ X, X @ A),
    ]


def _wdrazin(A, W, X):
    Vk = (A @ W).power(_weighted_index(A, W))
    AW = A @ W
    return [
        ('(AW)^{k+1}XW = (AW)^k', Vk @ AW @ X @ W, Vk),
        ('XWAWX = X', X @ W @ AW @ X, X),
        ('AWX = XWA', AW @ X, X @ W @ A),
    ]


def _core_ep_right(A, W, X):
    Ak = A.power(oracle_index(A))
    AX = A @ X
    return [
        ('XA^{k+1} = A^k', X @ Ak @ A, Ak),
        ('AX^2 = X', AX @ X, X),
        ('(AX)* = AX', AX.H, AX),
    ]


def _core_ep_left(A, W, X):
    Ak = A.power(oracle_index(A))
    XA = X @ A
    return [
        ('A^{k+1}X = A^k', A @ Ak @ X, Ak),
        ('X^2A = X', X @ XA, X),
        ('(XA)* = XA', XA.H, XA),
    ]


def _wcep_right(A, W, X):
    AW = A @ W
    Vk = AW.power(_weighted_index(A, W))
    WAWX = W @ AW @ X
    return [
        ('XW(AW)^{k+1} = (AW)^k', X @ W @ Vk @ AW, Vk),
        ('AWXWX = X', AW @ X @ W @ X, X),
        ('(WAWX)* = WAWX', WAWX.H, WAWX),
    ]


def _wcep_left(A, W, X):
    WA = W @ A
    Uk = WA.power(_weighted_index(A, W))
    XWAW = X @ WA @ W
    return [
        ('(WA)^{k+1}WX = (WA)^k', Uk @ WA @ W @ X, Uk),
        ('XWXWA = X', X @ W @ X @ WA, X),
        ('(XWAW)* = XWAW', XWAW.H, XWAW),
    ]


def _wdmp(A, W, X):
    WA = W @ A
    Uk1 = WA.power(_weighted_index(A, W) + 1)
    drazin = wdrazin_oracle(WeightedPair(A, W))
    return [
        ('XAX = X', X @ A @ X, X),
        ('XA = WA_{d,W}WA', X @ A, W @ drazin @ WA),
        ('(WA)^{k+1}X = (WA)^{k+1}A†', Uk1 @ X, Uk1 @ mp_oracle(A)),
    ]


def _wmpd(A, W, X):
    AW = A @ W
    Vk1 = AW.power(_weighted_index(A, W) + 1)
    drazin = wdrazin_oracle(WeightedPair(A, W))
    return [
        ('XAX = X', X @ A @ X, X),
        ('AX = AWA_{d,W}W', A @ X, AW @ drazin @ W),
        ('X(AW)^{k+1} = A†(AW)^{k+1}', X @ Vk1, mp_oracle(A) @ Vk1),
    ]


def _wcmp(A, W, X):
    A_dagger = mp_oracle(A)
    drazin = wdrazin_oracle(WeightedPair(A, W))
    middle = A @ W @ drazin @ W @ A
    return [
        ('XAX = X', X @ A @ X, X),
        ('AX = AWA_{d,W}WAA†', A @ X, middle @ A_dagger),
        ('XA = A†AWA_{d,W}WA', X @ A, A_dagger @ middle),
    ]


def _projector_p(A, W, X):
    return [
        ('X^2 = X', X @ X, X),
        ('X* = X', X.H, X),
        ('XA = A', X @ A, A),
        ('XAA† = X', X @ A @ mp_oracle(A), X),
    ]


def _projector_q(A, W, X):
    return [
        ('X^2 = X', X @ X, X),
        ('X* = X', X.H, X),
        ('AX = A', A @ X, A),
        ('A†AX = X', mp_oracle(A) @ A @ X, X),
    ]


# name: (equations, weighted, shape of X from (m, n))
SYSTEMS = {
    'penrose': (_penrose, False, lambda m, n: (n, m)),
    'drazin': (_drazin, False, lambda m, n: (n, n)),
    'wdrazin': (_wdrazin, True, lambda m, n: (m, n)),
    'core_ep_right': (_core_ep_right, False, lambda m, n: (n, n)),
    'core_ep_left': (_core_ep_left, False, lambda m, n: (n, n)),
    'wcep_right': (_wcep_right, True, lambda m, n: (m, n)),
    'wcep_left': (_wcep_left, True, lambda m, n: (m, n)),
    'wdmp': (_wdmp, True, lambda m, n: (n, m)),
    'wmpd': (_wmpd, True, lambda m, n: (n, m)),
    'wcmp': (_wcmp, True, lambda m, n: (n, m)),
    'projector_p': (_projector_p, False, lambda m, n: (m, m)),
    'projector_q': (_projector_q, False, lambda m, n: (n, n)),
}

SQUARE_SYSTEMS = {'drazin', 'core_ep_right', 'core_ep_left'}


def verify_system(name, A, W, X):
    """
    Evaluate every equation of the named system on (A, W, X).

    Args:
        name (str): one of SYSTEMS
        A (QMatrix): the m×n input
        W (QMatrix or None): the n×m weight, required by weighted systems
        X (QMatrix): the candidate inverse

    Returns:
        VerificationVerdict

    Raises:
        UnknownSystem: for a name outside SYSTEMS
        DimensionMismatch: when A, W or X have shapes the system cannot use
    """
    if name not in SYSTEMS:
        raise UnknownSystem(name)
    equations, weighted, expected_shape = SYSTEMS[name]
    if weighted:
        _require_weight(name, A, W)
    if name in SQUARE_SYSTEMS and not A.is_square():
        raise DimensionMismatch(f"system {name!r} needs a square A")
    expected = expected_shape(A.rows, A.cols)
    if X.shape != expected:
        raise DimensionMismatch(
            f"system {name!r} expects X of shape {expected[0]}x{expected[1]}, got {X.rows}x{X.cols}"
        )
    verdict = VerificationVerdict(
        name, tuple(_check(label, lhs, rhs) for label, lhs, rhs in equations(A, W, X))
    )
    logger.debug("verify %s: %s", name, 'holds' if verdict.holds else f'fails {verdict.failed}')
    return verdict
