"""Exception types raised by gauss_bs."""


class GaussBSError(ValueError):
    """Base class for all gauss_bs errors."""


class UnphysicalState(GaussBSError):
    """A covariance violates the uncertainty relation."""


class InvalidCovariance(GaussBSError):
    """A matrix does not have the structure of a Gaussian covariance."""


class DegenerateEigenvalue(GaussBSError):
    """A minimum eigenvalue is non-positive, so a logarithm is undefined."""


class DegenerateCase(GaussBSError):
    """The two minimum eigenvalues coincide and the C constant is undefined."""
