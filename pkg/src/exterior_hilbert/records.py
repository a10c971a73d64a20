"""JSONL result records shared by the sampler and the command line."""

from __future__ import annotations

from datetime import datetime, timezone

RECORD_KEYS = ("timestamp", "command", "n", "d", "prime", "seed", "series", "bound", "verdict",
               "runtime_ms")


def make_record(command: str, n: int, d: int, prime: int | None, seed: int | None,
                series: list[int], bound: list[int], verdict: str, runtime_ms: int) -> dict:
    for name, arr in (("series", series), ("bound", bound)):
        if len(arr) != n + 1:
            raise ValueError(f"{name} must have length n+1 = {n + 1}, got {len(arr)}")
    return {
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "command": command,
        "n": n,
        "d": d,
        "prime": prime,
        "seed": seed,
        "series": list(series),
        "bound": list(bound),
        "verdict": verdict,
        "runtime_ms": int(runtime_ms),
    }
