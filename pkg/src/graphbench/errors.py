"""Exception types shared across the package.

Every error that a pipeline run treats as a per-sample failure (rather than a
fatal one) derives from GraphBenchError, so the runner can catch one base
class and log a failure record with a stable tag.
"""


class GraphBenchError(Exception):
    """Base class for all package errors."""


class ConfigError(GraphBenchError):
    """Invalid run configuration, parameter space, or manifest."""


class GraphError(GraphBenchError):
    """Malformed graph input or undefined graph statistic."""


class SplitInfeasible(GraphBenchError):
    """The sampled graph cannot support the task's split protocol."""


class DegenerateLabels(GraphBenchError):
    """A metric needs both classes present and at least one is missing."""


class DegenerateTargets(GraphBenchError):
    """Regression targets are constant; scaled error is undefined."""


class NonFiniteLoss(GraphBenchError):
    """Training loss became NaN or infinite."""


class TooFewValues(GraphBenchError):
    """Not enough values to form the requested number of quantile bins."""


class DegenerateGroups(GraphBenchError):
    """Group layout leaves no degrees of freedom for the F statistic."""


class NoRecords(GraphBenchError):
    """An aggregation was asked for a model with no finite records."""


class AllRoundsFailed(GraphBenchError):
    """Every tuning round raised; no configuration can be selected."""


class NoComparableLocations(GraphBenchError):
    """No sample has two or more finite model metrics to rank."""


def error_tag(exc: Exception) -> str:
    """Stable snake_case tag for a failure record, e.g. 'split_infeasible'."""
    name = type(exc).__name__
    out = [name[0].lower()]
    for ch in name[1:]:
        if ch.isupper():
            out.append("_")
            out.append(ch.lower())
        else:
            out.append(ch)
    return "".join(out)
