"""Exception types raised across the package."""


class MixedCayleyError(Exception):
    """Base class for all errors raised by :mod:`mixedcayley`."""


class SingularLattice(MixedCayleyError, ValueError):
    """A square matrix used as a lattice basis has determinant zero."""


class RankDeficient(MixedCayleyError, ValueError):
    """A set of rows does not span a full-rank lattice."""


class Unsupported(MixedCayleyError, ValueError):
    """An operation was called outside its supported parameter range."""


class InvalidGenerators(MixedCayleyError, ValueError):
    """A generator set contains the identity or repeated elements."""


class NotStronglyConnected(MixedCayleyError):
    """Some vertex cannot be reached from the identity."""


class NotAnLTile(MixedCayleyError, ValueError):
    """A 2x2 matrix does not encode an L-shaped tile."""
