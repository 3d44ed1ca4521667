"""Error types raised across the package."""


class DaugError(Exception):
    """Base class for package errors."""


class ShapeError(DaugError, ValueError):
    """A tensor dimension does not satisfy an operation's contract."""


class RegistryError(DaugError, ValueError):
    """Domain registry lookup or mutation failed."""


class NonFiniteLossError(DaugError, RuntimeError):
    """A loss term became NaN or infinite; message names the term."""


class OptimizerError(DaugError, RuntimeError):
    """An optimizer step was rejected (for example on non-finite gradients)."""


class CheckpointError(DaugError, RuntimeError):
    """Base class for checkpoint container problems."""


class CheckpointFormatError(CheckpointError):
    """Bad magic bytes, truncated file, or malformed record."""


class CheckpointVersionError(CheckpointError):
    """Container version not supported by this build."""


class UnknownTensorError(CheckpointError):
    """A tensor name in the file or manifest is not recognized."""


class DataError(DaugError, ValueError):
    """Invalid image, mask, or dataset layout."""
