"""Exception types shared across the package."""


class SkewfanoError(Exception):
    """Base class for all package errors."""


class FieldMismatchError(SkewfanoError):
    """Arithmetic attempted between scalars with different field tags."""


class BadReduction(SkewfanoError):
    """Reduction mod p failed (denominator divisible by p, or a prime
    where the tensor degenerates)."""


class NotGeneric(SkewfanoError):
    """A tensor failed a genericity requirement (rank-2 locus not five
    reduced points, etc.)."""


class Inconsistent(SkewfanoError):
    """An internally-computed quantity contradicts another route to the
    same quantity.  This is a hard failure, never a paper discrepancy."""


class Degenerate(SkewfanoError):
    """A configuration intersection that should be a point is not."""


class DegenerateSample(SkewfanoError):
    """An interpolation sample set was too special; resampling applies."""


class AmbiguousFiber(SkewfanoError):
    """Requested the unique isotropic 3-space of a pencil whose fiber is
    positive-dimensional."""


class NotACharacter(SkewfanoError):
    """A class function with non-integer or negative multiplicities."""


class ConfigError(SkewfanoError):
    """Bad CLI / run configuration (rejected before any check runs)."""
