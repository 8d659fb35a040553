"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 1 for invalid input,
2 for a violated mathematical constraint, 3 for an internal inconsistency.
"""


class K3FibError(Exception):
    exit_code = 1


class InvalidInput(K3FibError, ValueError):
    exit_code = 1


class UnsupportedN(InvalidInput):
    pass


class InvalidSpan(InvalidInput):
    pass


class InvalidDiscriminant(InvalidInput):
    pass


class DegreeTooLarge(InvalidInput):
    pass


class DegenerateLattice(InvalidInput):
    pass


class NotUnimodular(InvalidInput):
    pass


class EmptySystem(InvalidInput):
    pass


class ConstraintViolation(K3FibError):
    exit_code = 2


class OutOfTable(ConstraintViolation, KeyError):
    pass


class NotAllowedPartition(ConstraintViolation):
    pass


class NonZeroDefect(ConstraintViolation):
    pass


class DomainMismatch(ConstraintViolation):
    pass


class NotAdmissible(ConstraintViolation):
    pass


class NotSmooth(ConstraintViolation):
    pass


class InternalInconsistency(K3FibError, AssertionError):
    exit_code = 3


class NegativeRank(InternalInconsistency):
    pass
