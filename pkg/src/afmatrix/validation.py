"""Random frameworks and differential campaigns: matrix route vs. oracle.

Four block predicates are certified against the oracle on every subset of
each framework. The literal two-condition c-block completeness test is
surveyed separately; its disagreements are recorded as findings, not
failures.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import oracle
from .argsets import ArgSet, SemanticsId
from .errors import OracleLimitExceeded
from .framework import ArgumentationFramework, parse_apx, serialize_apx
from .matrix import build_matrix
from .prng import MASK64, SplitMix64
from .semantics import (
    CorrespondenceReading,
    is_admissible,
    is_complete,
    is_conflict_free,
    is_stable,
    theorem20_literal,
)

CHECK_LIMIT = 12
REPORT_SCHEMA_VERSION = 1

CERTIFIED = {
    "conflict_free": (is_conflict_free, SemanticsId.CF),
    "stable": (is_stable, SemanticsId.ST),
    "admissible": (is_admissible, SemanticsId.AD),
    "complete": (is_complete, SemanticsId.CO),
}
LITERAL = "theorem20_literal"


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    attack_probability: float
    allow_self_attacks: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.attack_probability <= 1.0:
            raise ValueError("attack_probability must lie in [0, 1]")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")


def random_af(cfg: GeneratorConfig) -> ArgumentationFramework:
    """Directed Erdos-Renyi framework with labels ``"1".."n"``.

    Pairs are visited row-major; each visited pair consumes one SplitMix64
    double ``u`` and is an attack iff ``u < p``. Diagonal pairs are skipped
    without a draw unless self-attacks are allowed.
    """
    rng = SplitMix64(cfg.seed)
    attacks = set()
    for i in range(cfg.n):
        for j in range(cfg.n):
            if i == j and not cfg.allow_self_attacks:
                continue
            if rng.next_float() < cfg.attack_probability:
                attacks.add((i, j))
    labels = tuple(str(k + 1) for k in range(cfg.n))
    return ArgumentationFramework(labels, frozenset(attacks))


@dataclass(frozen=True)
class Discrepancy:
    framework: str
    predicate: str
    reading: str | None
    subset: tuple[str, ...]
    block_verdict: bool
    oracle_verdict: bool

    def to_dict(self) -> dict:
        return {
            "framework": self.framework,
            "predicate": self.predicate,
            "reading": self.reading,
            "subset": list(self.subset),
            "block_verdict": self.block_verdict,
            "oracle_verdict": self.oracle_verdict,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Discrepancy:
        return cls(
            d["framework"], d["predicate"], d["reading"], tuple(d["subset"]),
            d["block_verdict"], d["oracle_verdict"],
        )

    def sort_key(self):
        return (self.framework, self.predicate, self.reading or "", len(self.subset), self.subset)


@dataclass
class Tally:
    tested: int = 0
    agreements: int = 0
    discrepancies: int = 0

    def add(self, agree: bool) -> None:
        self.tested += 1
        if agree:
            self.agreements += 1
        else:
            self.discrepancies += 1


def _tally_key(predicate: str, reading: str | None = None) -> str:
    return f"{predicate}[{reading}]" if reading else predicate


@dataclass
class ValidationReport:
    frameworks_tested: int = 0
    subsets_tested: int = 0
    tallies: dict[str, Tally] = field(default_factory=dict)
    discrepancies: list[Discrepancy] = field(default_factory=list)

    def record(self, af_text: str, labels: Sequence[str], predicate: str,
               reading: str | None, block: bool, truth: bool) -> None:
        self.tallies.setdefault(_tally_key(predicate, reading), Tally()).add(block == truth)
        if block != truth:
            self.discrepancies.append(
                Discrepancy(af_text, predicate, reading, tuple(labels), block, truth)
            )

    def certified_discrepancies(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.predicate in CERTIFIED]

    def literal_discrepancies(self) -> list[Discrepancy]:
        return [d for d in self.discrepancies if d.predicate == LITERAL]

    @classmethod
    def merge(cls, reports: Iterable[ValidationReport]) -> ValidationReport:
        out = cls()
        for r in reports:
            out.frameworks_tested += r.frameworks_tested
            out.subsets_tested += r.subsets_tested
            for key, t in r.tallies.items():
                acc = out.tallies.setdefault(key, Tally())
                acc.tested += t.tested
                acc.agreements += t.agreements
                acc.discrepancies += t.discrepancies
            out.discrepancies.extend(r.discrepancies)
        out.discrepancies.sort(key=Discrepancy.sort_key)
        return out

    def to_dict(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "frameworks_tested": self.frameworks_tested,
            "subsets_tested": self.subsets_tested,
            "predicates": {
                k: {"tested": t.tested, "agreements": t.agreements, "discrepancies": t.discrepancies}
                for k, t in sorted(self.tallies.items())
            },
            "discrepancies": [
                d.to_dict() for d in sorted(self.discrepancies, key=Discrepancy.sort_key)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> ValidationReport:
        return cls(
            d["frameworks_tested"],
            d["subsets_tested"],
            {k: Tally(**v) for k, v in d["predicates"].items()},
            [Discrepancy.from_dict(x) for x in d["discrepancies"]],
        )

    def summary(self) -> str:
        lines = [
            f"frameworks tested: {self.frameworks_tested}",
            f"subsets tested:    {self.subsets_tested}",
        ]
        for key, t in sorted(self.tallies.items()):
            lines.append(
                f"{key:<36} tested={t.tested:<8} agree={t.agreements:<8} disagree={t.discrepancies}"
            )
        cert = len(self.certified_discrepancies())
        lit = len(self.literal_discrepancies())
        lines.append(f"certified predicates: {'OK' if cert == 0 else f'{cert} DISCREPANCIES'}")
        lines.append(f"literal c-block test: {lit} discrepancies recorded")
        return "\n".join(lines)


def _check_size(af: ArgumentationFramework) -> None:
    if af.n > CHECK_LIMIT:
        raise OracleLimitExceeded(
            f"differential checks handle at most {CHECK_LIMIT} arguments, got {af.n}"
        )


def differential_check(af: ArgumentationFramework) -> ValidationReport:
    """Compare the four block predicates with the oracle on all ``2**n`` subsets."""
    _check_size(af)
    m = build_matrix(af)
    text = serialize_apx(af)
    report = ValidationReport(frameworks_tested=1)
    for s in oracle.all_subsets(af.n):
        report.subsets_tested += 1
        labels = af.labels(s.indices)
        for name, (pred, sem) in CERTIFIED.items():
            report.record(text, labels, name, None, pred(m, s), oracle.oracle_is(af, s, sem))
    return report


def theorem20_survey(af: ArgumentationFramework) -> ValidationReport:
    """Literal c-block completeness test under both readings, on every
    admissible set, against oracle completeness."""
    _check_size(af)
    m = build_matrix(af)
    text = serialize_apx(af)
    report = ValidationReport(frameworks_tested=1)
    for s in oracle.all_subsets(af.n):
        if not is_admissible(m, s):
            continue
        truth = oracle.complete(af, s)
        labels = af.labels(s.indices)
        for reading in CorrespondenceReading:
            verdict = theorem20_literal(m, s, reading)
            report.record(text, labels, LITERAL, reading.value, verdict, truth)
    return report


def replay(d: Discrepancy) -> tuple[bool, bool]:
    """Recompute ``(block_verdict, oracle_verdict)`` for a recorded discrepancy."""
    af = parse_apx(d.framework, allow_empty=True)
    m = build_matrix(af)
    s = ArgSet.from_indices(af.n, (af.index_of[x] for x in d.subset))
    if d.predicate == LITERAL:
        return theorem20_literal(m, s, d.reading), oracle.complete(af, s)
    pred, sem = CERTIFIED[d.predicate]
    return pred(m, s), oracle.oracle_is(af, s, sem)


def trial_config(
    trial: int,
    n_range: tuple[int, int],
    p_list: Sequence[float],
    base_seed: int,
    allow_self_attacks: bool,
) -> GeneratorConfig:
    """Trial ``t`` cycles ``n`` through ``n_range`` fastest, then steps ``p``
    through ``p_list``; its seed is ``base_seed + t`` mod 2**64."""
    lo, hi = n_range
    span = hi - lo + 1
    return GeneratorConfig(
        n=lo + trial % span,
        attack_probability=p_list[(trial // span) % len(p_list)],
        allow_self_attacks=allow_self_attacks,
        seed=(base_seed + trial) & MASK64,
    )


def run_campaign(
    trials: int,
    n_range: tuple[int, int] = (1, 8),
    p_list: Sequence[float] = (0.1, 0.25, 0.5),
    base_seed: int = 42,
    *,
    allow_self_attacks: bool = True,
    generator: Callable[[GeneratorConfig], ArgumentationFramework] = random_af,
) -> ValidationReport:
    """Differential check plus literal survey over ``trials`` frameworks."""
    lo, hi = n_range
    if not 0 <= lo <= hi <= CHECK_LIMIT:
        raise OracleLimitExceeded(f"n range {n_range} outside 0..{CHECK_LIMIT}")
    if trials and not p_list:
        raise ValueError("p_list must be non-empty")
    parts = []
    for t in range(trials):
        af = generator(trial_config(t, n_range, p_list, base_seed, allow_self_attacks))
        diff = differential_check(af)
        survey = theorem20_survey(af)
        survey.frameworks_tested = 0
        parts += [diff, survey]
    return ValidationReport.merge(parts)
