"""Exception hierarchy shared across the package."""


class Error(Exception):
    """Base class for all errors raised by this package."""


class InvalidParams(Error, ValueError):
    """Model or sweep parameters violate a documented constraint."""


class UnstableSystem(Error):
    """The quadratic Hamiltonian has no complete set of positive-frequency
    bosonic eigenmodes (complex eigenvalues, zero modes, or an indefinite
    quadratic form)."""


class DegenerateSpectrum(Error):
    """The two polariton frequencies coincide; branch coefficients are not
    uniquely defined."""


class ZeroPhotonWeight(Error):
    """Both branches carry zero photon weight; the normalized RWA rate is
    undefined."""


class DomainError(Error, ValueError):
    """A rate formula was evaluated outside its domain of validity."""


class NoConvergence(Error):
    """The independent root finder or null-space extraction failed to reach
    its tolerance."""


class NoStablePoints(Error):
    """Every grid point of a sweep was rejected as unstable or degenerate."""


class UsageError(Error):
    """Bad command-line flag or configuration-file entry."""


class WriteError(Error):
    """An output file could not be written; the message names the path."""
