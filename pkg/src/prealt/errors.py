"""Exception taxonomy shared by the whole package.

Every precondition failure raises a distinct class so callers (and the
command-line driver) can tell usage errors from mathematical gate
failures.
"""


class PrealtError(Exception):
    """Base class for all package-specific errors."""


# -- usage / data errors ------------------------------------------------

class ParseError(PrealtError):
    """Malformed input file, scalar literal or field description."""


class UnknownName(ParseError):
    """Catalog lookup for a name that does not exist."""


class MissingSection(ParseError):
    """An input file lacks a section required by the requested command."""


class DimensionMismatch(PrealtError):
    """Operands live in spaces of incompatible dimensions."""


class SlotError(PrealtError):
    """Inconsistent tensor-slot assignment in a pair product."""


class BadCharacteristic(PrealtError):
    """Field characteristic is 2, or a required inverse does not exist."""


class SearchSpaceTooLarge(PrealtError):
    """Brute-force enumeration would exceed the configured candidate cap."""


# -- mathematical gate failures ----------------------------------------

class SingularMap(PrealtError):
    """A linear map that must be invertible is not."""


class NotAlternative(PrealtError):
    """Algebra fails the alternative-algebra axioms."""


class NotPreAlternative(PrealtError):
    """Structure fails the pre-alternative axioms."""


class BadBimodule(PrealtError):
    """Action families fail the relevant bimodule identities."""


class NotSkew(PrealtError):
    """A bilinear form that must be skew-symmetric is not."""


class WrongSymmetry(PrealtError):
    """A tensor does not have the symmetry required by the operation."""


class NotAlOperator(PrealtError):
    """Linear map fails the Al-operator identity."""


class NotGraded(PrealtError):
    """Structure constants are incompatible with the supplied grading."""


class NotSymplectic(PrealtError):
    """Bilinear form is not a symplectic form for the given algebra."""


class NotSolution(PrealtError):
    """Tensor is not a solution of the required equation system."""


class Degenerate(PrealtError):
    """A tensor or form that must be nondegenerate is degenerate."""


class NotCoalgebra(PrealtError):
    """Comultiplications fail the coalgebra axioms."""


class NotBialgebra(PrealtError):
    """Algebra/comultiplication pair fails the bialgebra compatibility suite."""
