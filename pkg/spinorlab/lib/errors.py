# lib/errors.py

EXIT_OK = 0
EXIT_IO = 1
EXIT_INCONSISTENT = 2


class SpinorlabError(Exception):
    """Base class for errors raised by spinorlab."""
    exit_code = EXIT_INCONSISTENT


class DocumentError(SpinorlabError, ValueError):
    """A spinor document could not be read or parsed."""
    exit_code = EXIT_IO


class RepresentationError(SpinorlabError, ValueError):
    """Unknown gamma representation, or an operation called in the wrong one."""


class NullSpinorError(SpinorlabError, ValueError):
    pass


class ClassInconsistencyError(SpinorlabError):
    """Bilinears whose zero pattern no nonzero spinor can produce."""


class DegenerateProbeError(SpinorlabError, ValueError):
    """The probe spinor has no overlap with the aggregate; retry with another probe."""


class FrameError(SpinorlabError, ValueError):
    """Flag-dipole frame or direction element violating its invariants."""


class NonUnitError(SpinorlabError, ValueError):
    """Hopf map input off the unit sphere."""


class HelicityError(SpinorlabError, ValueError):
    """An operation needs helicity metadata the spinor does not carry."""


class SingularSpinorError(SpinorlabError, ValueError):
    """A regular (class 1-3) spinor was required."""
