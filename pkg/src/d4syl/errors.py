"""Exception types shared across the package."""


class D4SylError(Exception):
    """Base class for all errors raised by d4syl."""


class EvenCharacteristic(D4SylError):
    """The characteristic must be an odd prime."""


class ReduciblePolynomial(D4SylError):
    """A defining polynomial factors over its coefficient field."""


class NoEta(D4SylError):
    """No valid torsion element found (cannot happen for odd prime powers)."""


class ZeroTwist(D4SylError):
    """The twisting element of a semilinear map must be nonzero."""


class ZeroModulus(D4SylError):
    """Coset decomposition requires a nonzero line generator."""


class TooLarge(D4SylError):
    """The requested exhaustive computation exceeds the configured cap."""


class UnknownClass(D4SylError):
    """A class representative does not belong to the canonical census."""


class NotInSubgroup(D4SylError):
    """The element lies outside the subgroup a character is defined on."""
