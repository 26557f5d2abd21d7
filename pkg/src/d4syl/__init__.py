"""Exact construction and verification of the Sylow p-subgroup of order q^12
attached to the twisted D4 family: group arithmetic, class census, and the
full complex character table over cyclotomic integers."""

from .errors import (
    D4SylError,
    EvenCharacteristic,
    NoEta,
    NotInSubgroup,
    ReduciblePolynomial,
    TooLarge,
    UnknownClass,
    ZeroModulus,
    ZeroTwist,
)
from .fields import (
    FieldTowerCtx,
    Fq3Element,
    FqElement,
    build_tower,
    decompose,
    frobenius_q,
    phi0,
    pi_q,
    transversal,
    zeta,
    zeta_inv,
)
from .cyclotomic import CycInt, theta, theta_pi

__version__ = "0.1.0"
