"""
indexlab
========

indexlab computes the index of finite-dimensional representations of matrix
Lie algebras in exact arithmetic, and checks the good (nilpotent) index
behaviour of isotropy representations of classical symmetric pairs orbit by
orbit.
"""

from .__about__ import (
    __author__, __commit__, __copyright__, __email__, __license__, __summary__,
    __title__, __uri__, __version__,
)
version = __version__


class IndexLabException(Exception):
    pass


class ClosureError(IndexLabException):
    pass


class RepresentationError(IndexLabException):
    pass


class SizeGuardError(IndexLabException):
    pass


class PreconditionError(IndexLabException):
    pass


class SelfCheckError(IndexLabException):
    pass


class UnsupportedFamilyError(IndexLabException):
    pass


class OrbitValidationError(IndexLabException):
    def __init__(self, message, violations=()):
        super(OrbitValidationError, self).__init__(message)
        self.violations = list(violations)


class UnknownExampleError(IndexLabException):
    pass


class ConfigError(IndexLabException):
    pass


class MalformedInputError(IndexLabException):
    pass


from .exactlinalg import RationalMatrix, PolyMatrix, generic_rank
from .liealg import MatrixLieAlgebra, Representation, index, index_of_algebra
from .pairs import inner_pair, make_pair, outer_pair, SymmetricPair
from .gnib import gnib_at, gnib_check

import logging
logger = logging.getLogger(__name__)
try:
    # Prevent output if no handler set
    logger.addHandler(logging.NullHandler())
except AttributeError:
    pass
