"""Exception hierarchy shared across the package."""


class CotripleError(Exception):
    """Base class for all errors raised by this package."""


class ContractViolation(CotripleError):
    """An operation was called with arguments violating its precondition."""


class AssociativityViolation(CotripleError):
    def __init__(self, i, j, k, l):
        self.indices = (i, j, k, l)
        super().__init__(
            f"structure constants are not associative at (e_{i}*e_{j})*e_{k} "
            f"vs e_{i}*(e_{j}*e_{k}), coefficient of e_{l}"
        )


class UnitViolation(CotripleError):
    def __init__(self, i):
        self.index = i
        super().__init__(f"unit law fails on basis element e_{i}")


class UnsupportedQuiver(CotripleError):
    """Quiver has a cycle; its path algebra is infinite-dimensional."""


class NotGorensteinWithinBound(CotripleError):
    """Self-injective dimension of the algebra exceeds the given bound."""


class ApproximationFailed(CotripleError):
    """An approximation constructor produced a sequence whose certificate fails."""

    def __init__(self, message, certificate=None):
        self.certificate = certificate
        super().__init__(message)


class BalanceViolation(CotripleError):
    def __init__(self, degree, detail=""):
        self.degree = degree
        super().__init__(f"relative Ext balance fails in degree {degree} {detail}".rstrip())


class CrossCheckViolation(CotripleError):
    """Two supposedly equivalent dimension criteria disagree on the registry."""


class PropertyViolation(CotripleError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ProperNessViolation(CotripleError):
    """A short exact sequence is not proper on the required side."""


class ExactnessViolation(CotripleError):
    def __init__(self, node, detail=""):
        self.node = node
        super().__init__(f"long exact sequence fails exactness at node {node} {detail}".rstrip())


class PreconditionViolation(CotripleError):
    pass


class CertificateViolation(CotripleError):
    """A construction the theory guarantees failed at runtime: a bug signal."""


class FormulaMismatch(CotripleError):
    """The two homotopy hom-set formulas disagree: a bug signal."""


class ConfigError(CotripleError):
    pass


class AlgebraLoadError(CotripleError):
    pass


class TripleConstructionError(CotripleError):
    pass


class UnknownModuleName(CotripleError):
    def __init__(self, name, known):
        self.name = name
        super().__init__(f"unknown module name {name!r}; known: {', '.join(sorted(known))}")
