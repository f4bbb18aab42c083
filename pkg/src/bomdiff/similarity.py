"""String similarity metrics and multi-attribute node scoring.

All metrics map a pair of strings to [0, 1], are symmetric, and return 1
for equal strings. EXACT is 0/1. JARO counts matches inside a window of
floor(max(|a|,|b|)/2) - 1 and halves transpositions; JARO_WINKLER adds
prefix_scale * L * (1 - jaro) where L is the common prefix length capped
at 4. LEVENSHTEIN_NORM is 1 - editdistance / max(|a|,|b|).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import AttrMap


class MetricKind(str, Enum):
    EXACT = "exact"
    JARO = "jaro"
    JARO_WINKLER = "jaro-winkler"
    LEVENSHTEIN_NORM = "levenshtein"


class MissingAttrPolicy(str, Enum):
    SCORE_ZERO = "score-zero"
    SKIP_KEY = "skip-key"


@dataclass
class MatchConfig:
    """User-selected matching parameters shared by the mapper and merger.

    attr_keys: attribute keys compared per node pair (order kept, deduped).
    metric: metric for the main matching pass; EXACT forces accept_threshold 1.
    suggest_metric: fuzzy metric for the second suggestion pass.
    missing_attr_policy: SCORE_ZERO counts an absent key as 0, SKIP_KEY drops it.
    normalize: lowercase and trim values before scoring.
    """

    attr_keys: list[str]
    metric: MetricKind = MetricKind.EXACT
    accept_threshold: float = 1.0
    suggest_threshold: float = 0.85
    suggest_metric: MetricKind = MetricKind.JARO_WINKLER
    missing_attr_policy: MissingAttrPolicy = MissingAttrPolicy.SCORE_ZERO
    seed_override: tuple[str, str] | None = None
    normalize: bool = False
    prefix_scale: float = 0.1

    def __post_init__(self) -> None:
        deduped = list(dict.fromkeys(self.attr_keys))
        if not deduped or any(not k for k in deduped):
            raise ValueError("attr_keys must be a non-empty list of non-empty strings")
        self.attr_keys = deduped
        for name in ("accept_threshold", "suggest_threshold"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                raise ValueError(f"{name} must be in (0, 1], got {value}")
        if not 0.0 < self.prefix_scale <= 0.25:
            raise ValueError(f"prefix_scale must be in (0, 0.25], got {self.prefix_scale}")
        if self.metric is MetricKind.EXACT:
            self.accept_threshold = 1.0

    def to_dict(self) -> dict:
        return {
            "attr_keys": list(self.attr_keys),
            "metric": self.metric.value,
            "accept_threshold": self.accept_threshold,
            "suggest_threshold": self.suggest_threshold,
            "suggest_metric": self.suggest_metric.value,
            "missing_attr_policy": self.missing_attr_policy.value,
            "seed_override": list(self.seed_override) if self.seed_override else None,
            "normalize": self.normalize,
            "prefix_scale": self.prefix_scale,
        }


def _jaro(a: str, b: str) -> float:
    if a == b:
        return 1.0
    if not a or not b:
        return 0.0
    window = max(len(a), len(b)) // 2 - 1
    if window < 0:
        window = 0
    a_flags = [False] * len(a)
    b_flags = [False] * len(b)
    matches = 0
    for i, ch in enumerate(a):
        lo = max(0, i - window)
        hi = min(len(b), i + window + 1)
        for j in range(lo, hi):
            if not b_flags[j] and b[j] == ch:
                a_flags[i] = b_flags[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    a_matched = [ch for ch, f in zip(a, a_flags) if f]
    b_matched = [ch for ch, f in zip(b, b_flags) if f]
    half_transpositions = sum(1 for x, y in zip(a_matched, b_matched) if x != y)
    transpositions = half_transpositions / 2
    m = float(matches)
    return (m / len(a) + m / len(b) + (m - transpositions) / m) / 3


def _jaro_winkler(a: str, b: str, prefix_scale: float) -> float:
    jaro = _jaro(a, b)
    prefix = 0
    for x, y in zip(a[:4], b[:4]):
        if x != y:
            break
        prefix += 1
    return jaro + prefix_scale * prefix * (1.0 - jaro)


def _levenshtein_norm(a: str, b: str) -> float:
    if a == b:
        return 1.0
    if not a or not b:
        return 0.0
    previous = list(range(len(b) + 1))
    for i, ch_a in enumerate(a, start=1):
        current = [i] + [0] * len(b)
        for j, ch_b in enumerate(b, start=1):
            current[j] = min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ch_a != ch_b),
            )
        previous = current
    return 1.0 - previous[-1] / max(len(a), len(b))


def string_score(metric: MetricKind, a: str, b: str, prefix_scale: float = 0.1) -> float:
    """Similarity of two strings in [0, 1] under the given metric."""
    if metric is MetricKind.EXACT:
        return 1.0 if a == b else 0.0
    if metric is MetricKind.JARO:
        return _jaro(a, b)
    if metric is MetricKind.JARO_WINKLER:
        return _jaro_winkler(a, b, prefix_scale)
    if metric is MetricKind.LEVENSHTEIN_NORM:
        return _levenshtein_norm(a, b)
    raise ValueError(f"unknown metric {metric!r}")


def normalize_value(value: str) -> str:
    return value.strip().lower()


def node_score(
    a_attrs: AttrMap,
    b_attrs: AttrMap,
    config: MatchConfig,
    metric: MetricKind | None = None,
) -> float:
    """Mean string similarity over the configured attribute keys.

    A key absent from either node contributes 0 under SCORE_ZERO or is
    excluded from the mean under SKIP_KEY; if every key is excluded the
    score is 0. `metric` overrides config.metric (used by the fuzzy
    suggestion pass).
    """
    chosen = metric if metric is not None else config.metric
    scores: list[float] = []
    for key in config.attr_keys:
        value_a = a_attrs.get(key)
        value_b = b_attrs.get(key)
        if value_a is None or value_b is None:
            if config.missing_attr_policy is MissingAttrPolicy.SCORE_ZERO:
                scores.append(0.0)
            continue
        if config.normalize:
            value_a = normalize_value(value_a)
            value_b = normalize_value(value_b)
        scores.append(string_score(chosen, value_a, value_b, config.prefix_scale))
    if not scores:
        return 0.0
    return sum(scores) / len(scores)
