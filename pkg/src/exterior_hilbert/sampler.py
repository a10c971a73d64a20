"""Random forms over GF(p) and probabilistic certification of the lower bound.

A trial whose series mod p equals the lower bound certifies that the bound is
the generic series over QQ: ranks of an integer lift over QQ are at least the
ranks mod p, so the series over QQ is at most the observed one, and the bound
holds over every field of odd characteristic.
"""

from __future__ import annotations

import enum
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Iterable

import numpy as np

from .bounds import lower_bound
from .combinatorics import subsets
from .fields import DEFAULT_PRIME, PrimeField
from .records import make_record
from .forms import ExteriorForm
from .series import hilbert_series_quotient

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 3
DESK_CEILING = {3: 13, 5: 11, 7: 9}


class BoundViolation(AssertionError):
    """A computed series fell lexicographically below the lower bound."""


class Outcome(str, enum.Enum):
    CERTIFIED_EQUAL = "CERTIFIED_EQUAL"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class TrialConfig:
    n: int
    d: int
    prime: int = DEFAULT_PRIME
    trials: int = DEFAULT_TRIALS
    seed: int = 0

    def __post_init__(self):
        PrimeField(self.prime)
        if self.trials < 1:
            raise ValueError("at least one trial is required")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a non-negative 64-bit integer")


@dataclass
class VerifyOutcome:
    n: int
    d: int
    verdict: Outcome
    best_series: list[int]
    bound: list[int]
    first_gap_degree: int | None
    trials_run: int
    prime: int
    seed: int
    series: list[list[int]] = field(default_factory=list)
    ranks: dict[int, int] = field(default_factory=dict)
    runtime_ms: int = 0


def random_form(n: int, d: int, p: int = DEFAULT_PRIME, seed: int = 0, trial: int = 0) -> ExteriorForm:
    """Uniform coefficients in 1..p-1 on all C(n, d) monomials.

    The generator is keyed by (seed, trial) so each trial is reproducible on
    its own.
    """
    F = PrimeField(p)
    rng = np.random.default_rng([seed, trial])
    coeffs = rng.integers(1, p, size=comb(n, d), dtype=np.int64)
    return ExteriorForm(n, d, dict(zip(subsets(n, d), coeffs.tolist())), F)


def verify_minimal(cfg: TrialConfig) -> VerifyOutcome:
    """Sample forms until one attains the lower bound, or trials run out."""
    n, d = cfg.n, cfg.d
    if d % 2 == 0:
        raise ValueError("verify_minimal is for odd d; even d has a closed form")
    start = time.perf_counter()
    bound = lower_bound(n, d).a
    best: list[int] | None = None
    observed = []
    ranks: dict[int, int] = {}
    for trial in range(cfg.trials):
        f = random_form(n, d, cfg.prime, cfg.seed, trial)
        result = hilbert_series_quotient(f)
        h = result.series
        if h < bound:
            raise BoundViolation(f"series {h} below bound {bound} for n={n}, d={d}, trial {trial}")
        observed.append(h)
        best = h if best is None else [min(x, y) for x, y in zip(best, h)]
        ranks = result.ranks
        log.info("n=%d d=%d trial=%d series=%s", n, d, trial, h)
        if h == bound:
            break
    verdict = Outcome.CERTIFIED_EQUAL if best == bound else Outcome.UNDETERMINED
    gap = next((i for i, (x, y) in enumerate(zip(best, bound)) if x != y), None)
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerifyOutcome(n, d, verdict, best, bound, gap, len(observed), cfg.prime, cfg.seed,
                         observed, ranks, elapsed)


def scan_range(d: int, n_min: int, n_max: int, long_running: bool = False) -> range:
    if d % 2 == 0:
        raise ValueError("scan is for odd d")
    n_min = max(n_min, d)
    ceiling = DESK_CEILING.get(d, d + 2)
    if n_max > ceiling and not long_running:
        raise ValueError(f"n={n_max} exceeds the desk ceiling {ceiling} for d={d}; "
                         "pass long_running=True to go further")
    return range(n_min, n_max + 1)


def scan(d: int, n_min: int, n_max: int, prime: int = DEFAULT_PRIME, trials: int = DEFAULT_TRIALS,
         seed: int = 0, out: str | Path | None = None, jobs: int = 1,
         long_running: bool = False) -> list[VerifyOutcome]:
    """One :func:`verify_minimal` per n in [n_min, n_max], appended to ``out`` as JSONL."""
    configs = [TrialConfig(n, d, prime, trials, seed) for n in scan_range(d, n_min, n_max, long_running)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(verify_minimal, configs))
    else:
        outcomes = [verify_minimal(c) for c in configs]
    if out is not None:
        append_records(out, (outcome_record("scan", o) for o in outcomes))
    return outcomes


def outcome_record(command: str, o: VerifyOutcome) -> dict:
    return make_record(command, o.n, o.d, o.prime, o.seed, o.best_series, o.bound,
                       o.verdict.value, o.runtime_ms)


def append_records(path: str | Path, records: Iterable[dict]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
