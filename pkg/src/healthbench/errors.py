"""Domain errors shared across modules; each carries a machine-readable code."""


class HealthbenchError(Exception):
    """Base for all domain errors."""

    code = "error"


class RepoAccessError(HealthbenchError):
    code = "repo_access"


class NoHistoryError(HealthbenchError):
    code = "no_history"


class NoAnalyzableFilesError(HealthbenchError):
    code = "no_analyzable_files"


class NoWeightedMassError(HealthbenchError):
    code = "no_weighted_mass"


class EmptySegmentError(HealthbenchError):
    code = "empty_segment"


class SchemaMismatchError(HealthbenchError):
    code = "schema_mismatch"
