"""Streaming, mergeable aggregation of per-replication estimates.

Only event counts and sums are kept, so memory stays constant in the number
of replications. Sums are exact (error-free partials, rounded once when the
summary is built), which makes every aggregate independent of how the
replications were split across workers and in what order partial results
were merged.
"""

import math
from dataclasses import dataclass, field

from odds_ratio_mc.errors import EmptyAccumulator
from odds_ratio_mc.models import EstimateWithCI, Method, MethodSummary


class ExactSum:
    """Running float sum held as non-overlapping partials.

    ``value()`` is the correctly rounded total of everything added, whatever
    the order of ``add`` and ``merge`` calls.
    """

    __slots__ = ("_partials",)

    def __init__(self) -> None:
        self._partials: list[float] = []

    def add(self, x: float) -> None:
        partials = self._partials
        i = 0
        for y in partials:
            if abs(x) < abs(y):
                x, y = y, x
            hi = x + y
            lo = y - (hi - x)
            if lo:
                partials[i] = lo
                i += 1
            x = hi
        partials[i:] = [x]

    def merge(self, other: "ExactSum") -> None:
        for p in other._partials:
            self.add(p)

    def value(self) -> float:
        return math.fsum(self._partials)


@dataclass
class MethodAccumulator:
    """Counts and sums for one method.

    Attributes:
        method: Method whose estimates are recorded
        count: Replications recorded
        miss_high_count: Intervals entirely below OR_true
        miss_low_count: Intervals entirely above OR_true
        power_count: Intervals excluding 1
    """

    method: Method
    count: int = 0
    miss_high_count: int = 0
    miss_low_count: int = 0
    power_count: int = 0
    point_sum: ExactSum = field(default_factory=ExactSum)
    point_sq_sum: ExactSum = field(default_factory=ExactSum)
    lower_sum: ExactSum = field(default_factory=ExactSum)
    upper_sum: ExactSum = field(default_factory=ExactSum)
    width_sum: ExactSum = field(default_factory=ExactSum)

    def record(self, estimate: EstimateWithCI, or_true: float) -> "MethodAccumulator":
        """Add one replication's estimate and its verdicts against ``or_true``."""
        if estimate.method is not self.method:
            raise ValueError(
                f"accumulator for {self.method.value} got a {estimate.method.value} estimate"
            )
        self.count += 1
        if estimate.misses_high(or_true):
            self.miss_high_count += 1
        elif estimate.misses_low(or_true):
            self.miss_low_count += 1
        if estimate.rejects_null():
            self.power_count += 1
        self.point_sum.add(estimate.point)
        self.point_sq_sum.add(estimate.point * estimate.point)
        self.lower_sum.add(estimate.lower)
        self.upper_sum.add(estimate.upper)
        self.width_sum.add(estimate.width)
        return self

    def merge(self, other: "MethodAccumulator") -> "MethodAccumulator":
        if other.method is not self.method:
            raise ValueError(f"cannot merge {other.method.value} into {self.method.value}")
        self.count += other.count
        self.miss_high_count += other.miss_high_count
        self.miss_low_count += other.miss_low_count
        self.power_count += other.power_count
        self.point_sum.merge(other.point_sum)
        self.point_sq_sum.merge(other.point_sq_sum)
        self.lower_sum.merge(other.lower_sum)
        self.upper_sum.merge(other.upper_sum)
        self.width_sum.merge(other.width_sum)
        return self

    def finalize(self, or_true: float) -> MethodSummary:
        """Turn sums into means and counts into proportions.

        Raises:
            EmptyAccumulator: nothing was recorded
        """
        n = self.count
        if n == 0:
            raise EmptyAccumulator(f"no replications recorded for {self.method.value}")
        point_total = self.point_sum.value()
        mean_point = point_total / n
        if n > 1:
            variance = (self.point_sq_sum.value() - point_total * mean_point) / (n - 1)
            point_mc_se = math.sqrt(max(variance, 0.0) / n)
        else:
            point_mc_se = 0.0
        misses = self.miss_high_count + self.miss_low_count
        one_minus_coverage = misses / n
        return MethodSummary(
            method=self.method,
            replication_count=n,
            mean_point=mean_point,
            one_minus_coverage=one_minus_coverage,
            miss_high=self.miss_high_count / n,
            miss_low=self.miss_low_count / n,
            mean_lower=self.lower_sum.value() / n,
            mean_upper=self.upper_sum.value() / n,
            mean_width=self.width_sum.value() / n,
            empirical_power=self.power_count / n,
            miss_high_count=self.miss_high_count,
            miss_low_count=self.miss_low_count,
            power_count=self.power_count,
            bias=mean_point - or_true,
            point_mc_se=point_mc_se,
            coverage_mc_se=math.sqrt(one_minus_coverage * (1.0 - one_minus_coverage) / n),
        )


class ReportAccumulator:
    """One :class:`MethodAccumulator` per requested method."""

    def __init__(self, methods: tuple[Method, ...]):
        self.methods = methods
        self._by_method = {m: MethodAccumulator(method=m) for m in methods}

    def __getitem__(self, method: Method) -> MethodAccumulator:
        return self._by_method[method]

    def record_all(self, estimates: list[EstimateWithCI], or_true: float) -> None:
        for estimate in estimates:
            self._by_method[estimate.method].record(estimate, or_true)

    def merge(self, other: "ReportAccumulator") -> "ReportAccumulator":
        for method in self.methods:
            self._by_method[method].merge(other[method])
        return self

    def finalize(self, or_true: float) -> tuple[MethodSummary, ...]:
        return tuple(self._by_method[m].finalize(or_true) for m in self.methods)


@dataclass(frozen=True)
class ReplicationRecord:
    """One method's verdicts for one replication (the dump row)."""

    replication: int
    method: Method
    point: float
    lower: float
    upper: float
    covered: bool
    miss_high: bool
    miss_low: bool
    rejects_null: bool

    @classmethod
    def from_estimate(
        cls, replication: int, estimate: EstimateWithCI, or_true: float
    ) -> "ReplicationRecord":
        return cls(
            replication=replication,
            method=estimate.method,
            point=estimate.point,
            lower=estimate.lower,
            upper=estimate.upper,
            covered=estimate.covers(or_true),
            miss_high=estimate.misses_high(or_true),
            miss_low=estimate.misses_low(or_true),
            rejects_null=estimate.rejects_null(),
        )
