"""Prime sweeps, flat record output (CSV / JSON) and log-log exponent fits."""

from __future__ import annotations

import csv
import io
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path

import numpy as np

from .charsum import build_table, shao_statistic, tiling_family, weil_moment
from .hyperbola import HyperbolaInstance, min_box_fast
from .modarith import primes_between
from .nqr import dichotomy_check, least_nonresidue

log = logging.getLogger(__name__)

MODES = ("minbox", "dichotomy", "shao", "moment", "nqr")

SCHEMAS = {
    "minbox": ("p", "c", "h_star", "x1", "y1", "x2", "y2", "a", "b_sign", "b"),
    "dichotomy": ("p", "n_p", "epsilon", "C", "threshold_A", "branch_A",
                  "max_h_star", "threshold_B", "branch_B"),
    "shao": ("p", "H", "r", "J", "value", "bound", "ratio"),
    "moment": ("p", "c", "U", "r", "value", "bound", "ratio"),
    "nqr": ("p", "n_p"),
}

# smallest prime each mode accepts
_MIN_PRIME = {"minbox": 5, "dichotomy": 5, "shao": 3, "moment": 3, "nqr": 3}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    p_min: int
    p_max: int
    mode: str = "minbox"
    c: str = "all"
    seed: int = 0
    H: int | None = None
    r: int = 1
    epsilon: float = 0.1
    C: float = 2.0
    threads: int = 1
    format: str = "csv"
    out: str | None = None

    def validate(self):
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; expected one of {', '.join(MODES)}")
        if self.p_min > self.p_max:
            raise ConfigError(f"p_min={self.p_min} exceeds p_max={self.p_max}")
        if self.p_min < 0 or self.p_max >= 1 << 62:
            raise ConfigError("prime range must lie in [0, 2^62)")
        if self.threads < 1:
            raise ConfigError("threads must be positive")
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format {self.format!r}")
        if self.r < 1:
            raise ConfigError("r must be positive")
        if self.H is not None and self.H < 1:
            raise ConfigError("H must be positive")
        if self.epsilon <= 0 or self.C <= 0:
            raise ConfigError("epsilon and C must be positive")
        parse_c_mode(self.c)


@dataclass(frozen=True)
class FitResult:
    alpha: float
    beta: float
    n_points: int
    reference_exponents: tuple[float, float] = field(default=(0.25, 1 / 6))


def parse_c_mode(spec: str):
    """'all', 'sample:K' or a comma list like '1,2,5'."""
    spec = spec.strip()
    if spec == "all":
        return ("all",)
    if spec.startswith("sample:"):
        try:
            k = int(spec[len("sample:"):])
        except ValueError:
            raise ConfigError(f"bad sample size in {spec!r}") from None
        if k < 1:
            raise ConfigError("sample size must be positive")
        return ("sample", k)
    try:
        values = sorted({int(t) for t in spec.split(",") if t.strip()})
    except ValueError:
        raise ConfigError(f"bad c list {spec!r}") from None
    if not values or values[0] < 1:
        raise ConfigError("c values must be positive")
    return ("list", values)


def c_values(c_mode, p: int, seed: int) -> list[int]:
    if c_mode[0] == "all":
        return list(range(1, p))
    if c_mode[0] == "sample":
        rng = random.Random(f"{seed}:{p}")
        return sorted(rng.sample(range(1, p), min(c_mode[1], p - 1)))
    return [c for c in c_mode[1] if c < p]


def ceil_root(n: int, k: int) -> int:
    """Smallest u >= 1 with u^k >= n."""
    u = max(1, int(round(n ** (1 / k))))
    while u ** k < n:
        u += 1
    while u > 1 and (u - 1) ** k >= n:
        u -= 1
    return u


def minbox_record(p: int, c: int) -> dict:
    res = min_box_fast(HyperbolaInstance(p, c))
    P, Q = res.witness
    off = res.offset
    return {"p": p, "c": c, "h_star": res.h_star, "x1": P.x, "y1": P.y,
            "x2": Q.x, "y2": Q.y, "a": off.a, "b_sign": off.b_sign, "b": off.b_magnitude}


def dichotomy_record(p: int, epsilon: float, C: float) -> dict:
    return vars(dichotomy_check(p, epsilon, C)).copy()


def shao_record(p: int, H: int, r: int, family=None) -> dict:
    table = build_table(p)
    family = family if family is not None else tiling_family(p, H)
    rep = shao_statistic(table, family, H, r)
    return {"p": p, "H": H, "r": r, "J": family.J, "value": rep.value,
            "bound": rep.bound, "ratio": rep.ratio}


def moment_record(p: int, c: int, U: int, r: int) -> dict:
    rep = weil_moment(p, c, U, r)
    return {"p": p, "c": c, "U": U, "r": r, "value": rep.value,
            "bound": rep.bound, "ratio": rep.ratio}


def records_for_prime(config: SweepConfig, p: int) -> list[dict]:
    mode = config.mode
    if mode == "nqr":
        return [{"p": p, "n_p": least_nonresidue(p).n_p}]
    if mode == "dichotomy":
        return [dichotomy_record(p, config.epsilon, config.C)]
    window = config.H if config.H is not None else ceil_root(p, 2 * config.r)
    if mode == "shao":
        if window >= p:
            raise ValueError(f"H={window} leaves no window below p={p}")
        return [shao_record(p, window, config.r)]
    cs = c_values(parse_c_mode(config.c), p, config.seed)
    if mode == "minbox":
        return [minbox_record(p, c) for c in cs]
    return [moment_record(p, c, window, config.r) for c in cs]


def run_sweep(config: SweepConfig) -> list[dict]:
    """One record per (p, c) or per p, in ascending (p, c) order whatever the worker count."""
    config.validate()
    lo = max(config.p_min, _MIN_PRIME[config.mode])
    primes = primes_between(lo, config.p_max)
    if not primes:
        log.warning("no primes in [%d, %d] for mode %s", config.p_min, config.p_max, config.mode)
        return []
    work = partial(records_for_prime, config)
    if config.threads == 1:
        chunks = map(work, primes)
        return [rec for chunk in chunks for rec in chunk]
    with ProcessPoolExecutor(max_workers=config.threads) as pool:
        chunks = pool.map(work, primes, chunksize=max(1, len(primes) // (4 * config.threads)))
        return [rec for chunk in chunks for rec in chunk]


def _render(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def render(records: list[dict], fmt: str, columns=None) -> str:
    if fmt == "json":
        return json.dumps(records) + "\n"
    if columns is None:
        columns = list(records[0]) if records else []
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for rec in records:
        w.writerow([_render(rec[k]) for k in columns])
    return buf.getvalue()


def emit(records: list[dict], fmt: str, path: str | Path | None = None, mode: str | None = None):
    """Write records as CSV (fixed header per mode) or a JSON array; None or '-' means stdout."""
    columns = SCHEMAS.get(mode) if mode else None
    text = render(records, fmt, columns)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _parse_scalar(s: str):
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        pass
    return float(s)


def read_records(path: str | Path) -> list[dict]:
    text = Path(path).read_text()
    if text.lstrip().startswith("["):
        return json.loads(text)
    rows = csv.DictReader(io.StringIO(text))
    return [{k: _parse_scalar(v) for k, v in row.items()} for row in rows]


def fit_exponent(records: list[dict], field: str) -> FitResult:
    """Least-squares fit of log(field) = alpha log p + beta.

    Records sharing a prime are reduced to their maximum, the worst case over c.
    """
    by_p: dict[int, float] = {}
    for rec in records:
        p, v = rec["p"], rec[field]
        by_p[p] = max(by_p.get(p, v), v)
    if len(by_p) < 3:
        raise ValueError(f"need at least 3 distinct primes to fit, got {len(by_p)}")
    ps = sorted(by_p)
    vals = [by_p[p] for p in ps]
    if min(vals) < 1:
        raise ValueError(f"field {field!r} must be >= 1 for a log fit")
    lp = np.log(np.array(ps, dtype=float))
    lv = np.log(np.array(vals, dtype=float))
    alpha, beta = np.polyfit(lp, lv, 1)
    return FitResult(float(alpha), float(beta), len(ps))


def fit_summary(fit: FitResult) -> dict:
    t1, t2 = fit.reference_exponents
    return {"alpha": fit.alpha, "beta": fit.beta, "n_points": fit.n_points,
            "ref_theorem1": t1, "ref_theorem2": t2,
            "below_theorem1": fit.alpha < t1, "below_theorem2": fit.alpha < t2}
