"""Exception types shared across the library.

Every error carries a short machine-readable ``name`` that the CLI and the
HTTP service use when reporting failures.
"""


class FrameKitError(Exception):
    """Base class for all framekit errors."""

    name = "error"


class InvalidArgumentError(FrameKitError):
    """An argument lies outside its documented domain."""

    name = "invalid-argument"


class SchemaError(FrameKitError):
    """An input document does not match the expected JSON schema."""

    name = "invalid-schema"


class ModelValidationError(FrameKitError):
    """A frame model failed validation; ``violations`` lists every reason."""

    name = "invalid-model"

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DegenerateElementError(FrameKitError):
    """Element geometry has collapsed (zero or negative length)."""

    name = "degenerate-element"


class DegenerateGeometryError(FrameKitError):
    """The element mapping Jacobian is singular at an evaluation point."""

    name = "degenerate-geometry"


class ConfigurationError(FrameKitError):
    """The problem definition is inconsistent (e.g. uncovered elements)."""

    name = "configuration"


class SingularSystemError(FrameKitError):
    """No constraints remove rigid-body motion; the system cannot be solved."""

    name = "singular-system"


class IllConditionedError(FrameKitError):
    """The reduced stiffness matrix exceeds the condition-number limit."""

    name = "ill-conditioned"


class NoBucklingModeError(FrameKitError):
    """No positive buckling eigenvalue exists for the given load state."""

    name = "no-buckling-mode"


class ComplexSpectrumError(FrameKitError):
    """Every candidate eigenvalue was rejected as numerically complex."""

    name = "numerically-complex-spectrum"
