"""Exception hierarchy. Every error carries a stable machine-readable code."""


class ConceptError(Exception):
    """Base class for all library errors."""

    code = "error"

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message


class Malformed(ConceptError):
    """Structurally invalid value (lo > hi, NaN, empty set, ...)."""

    code = "malformed"


class DomainMismatch(ConceptError):
    """Property tag or contents do not fit the feature's value domain."""

    code = "domain_mismatch"


class CapExceeded(ConceptError):
    """Interval or point set wider than the dimension's 2*epsilon cap."""

    code = "cap_exceeded"


class SchemaMismatch(ConceptError):
    """Operands belong to different schemas, or a feature is unknown."""

    code = "schema_mismatch"


class SymbolDomainInInstance(ConceptError):
    """Real-valued instances cannot embed into symbolic domains."""

    code = "symbol_domain_in_instance"


class InfiniteDomain(ConceptError):
    """Enumeration requested over a domain with infinitely many values."""

    code = "infinite_domain"


class NotInSpace(ConceptError):
    """Concept is not an element of the finite space."""

    code = "not_in_space"


class PolicyError(ConceptError):
    """Operation rejected by a space policy (e.g. discovery-context guard)."""

    code = "policy_error"


class ConfigError(ConceptError):
    """Invalid configuration value (threshold, resolution, epsilon, ...)."""

    code = "config_error"


class ParseError(ConceptError):
    """Input file or JSON document does not match the wire format."""

    code = "parse_error"


class IoError(ConceptError):
    """File could not be read."""

    code = "io_error"
