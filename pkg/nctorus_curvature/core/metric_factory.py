"""
Lookup of metrics by name or alias

Each metric module registers its class once at import. The factory keeps one
shared instance per metric, so the cached symbols and densities of a metric are
computed only once per process.
"""

from typing import Dict, Optional, Sequence, Type

from .base_metric import BaseMetric


class MetricFactory:
    """Shared metric instances, keyed by canonical name, with their aliases"""

    def __init__(self) -> None:
        self._instances: Dict[str, BaseMetric] = {}
        self._lookup: Dict[str, str] = {}

    def register(
        self, metric_class: Type[BaseMetric], aliases: Optional[Sequence[str]] = None
    ) -> None:
        """
        Instantiate a metric and make it reachable by its name and aliases.

        Raises:
            ValueError: If the name or an alias already points to another metric
        """
        metric = metric_class()
        name = metric.metric_name
        for key in [name, *(aliases or ())]:
            key = key.lower().strip()
            owner = self._lookup.get(key)
            if owner is not None and owner != name:
                raise ValueError(f"Metric name '{key}' is already taken by '{owner}'")
            self._lookup[key] = name
        self._instances[name] = metric

    def get_metric(self, name: str) -> BaseMetric:
        """
        Resolve a metric name or alias, ignoring case and surrounding spaces.

        Raises:
            ValueError: If nothing is registered under the name
        """
        key = name.lower().strip()
        if key not in self._lookup:
            raise ValueError(
                f"Unknown metric '{key}'. Valid options: {', '.join(self.get_available_metrics())}"
            )
        return self._instances[self._lookup[key]]

    def get_available_metrics(self) -> list[str]:
        """Every accepted spelling, names and aliases alike"""
        return sorted(self._lookup)

    def get_metric_names(self) -> list[str]:
        return sorted(self._instances)


_factory = MetricFactory()


def register_metric(
    metric_class: Type[BaseMetric], aliases: Optional[Sequence[str]] = None
) -> None:
    _factory.register(metric_class, aliases)


def get_metric(name: str) -> BaseMetric:
    return _factory.get_metric(name)


def get_available_metrics() -> list[str]:
    return _factory.get_available_metrics()


def get_metric_names() -> list[str]:
    return _factory.get_metric_names()
