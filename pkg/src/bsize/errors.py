"""Exception types shared across the package."""


class BsizeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(BsizeError, ValueError):
    pass


class NoBaseError(BsizeError, ValueError):
    """Raised for k = 0 or k = n: every permutation fixes the only k-subset."""


class ResourceLimitError(BsizeError, RuntimeError):
    """A brute-force enumeration would exceed its configured work budget."""


class CheckpointError(BsizeError, ValueError):
    """A checkpoint file is corrupt, of the wrong version, or for other inputs."""
