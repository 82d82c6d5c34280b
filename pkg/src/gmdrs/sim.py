"""Monte-Carlo drivers: frame simulation and decoder work scaling.

Channels
--------
genie     fixed number t of symbol errors; erroneous positions get
          reliabilities drawn from U[0, 0.5), clean ones from U[0.5, 1], so
          the erasure order always ranks true errors first.
random    fixed t errors, reliabilities U[0, 1] for every position.
qsym      q-ary symmetric: each position flips with probability eps to a
          uniformly random other symbol; reliabilities as in `random`,
          except flipped positions are biased low with probability 0.8.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field as dc_field
from random import Random

from .eea import eea_run, extract_basis
from .fia import build_matrix, fia_run
from .gf import GF
from .gmd import ReliabilityOrder, gmd_decode
from .oracles import oracle_exhaustive_decode, oracle_naive_fia
from .rs import CodeParams, encode, syndrome


@dataclass
class SimConfig:
    q: int
    n: int
    k: int
    t: int = 0
    channel: str = "genie"
    frames: int = 100
    seed: int = 1
    tau_max: int | None = None
    eps: float = 0.1
    verify: bool = False


@dataclass
class FrameRecord:
    index: int
    info: list[int]
    error_positions: list[int]
    error_values: list[int]
    decoded_ok: bool
    in_list: bool
    n_candidates: int
    fia_ops: int
    stop_reason: str


@dataclass
class SimSummary:
    config: SimConfig
    frames: list[FrameRecord] = dc_field(default_factory=list)
    n_ok: int = 0
    n_in_list: int = 0
    oracle_mismatches: int = 0

    def lines(self):
        c = self.config
        yield (f"summary q={c.q} n={c.n} k={c.k} t={c.t} channel={c.channel} "
               f"frames={c.frames} seed={c.seed}")
        yield f"decoded_ok={self.n_ok}/{len(self.frames)}"
        yield f"transmitted_in_list={self.n_in_list}/{len(self.frames)}"
        if c.verify:
            yield f"oracle_mismatches={self.oracle_mismatches}"


def draw_error(rng: Random, code: CodeParams, t: int):
    """Uniform weight-t error pattern."""
    positions = sorted(rng.sample(range(code.n), t))
    values = [rng.randrange(1, code.field.q) for _ in positions]
    word = [0] * code.n
    for p, v in zip(positions, values):
        word[p] = v
    return word, positions, values


def channel_apply(rng: Random, code: CodeParams, codeword, cfg: SimConfig):
    """Return (received, reliabilities, error_positions)."""
    f = code.field
    if cfg.channel in ("genie", "random"):
        err, positions, _ = draw_error(rng, code, cfg.t)
        received = [f.add(c, e) for c, e in zip(codeword, err)]
        if cfg.channel == "genie":
            rel = [rng.uniform(0.0, 0.5) if i in set(positions) else rng.uniform(0.5, 1.0)
                   for i in range(code.n)]
        else:
            rel = [rng.random() for _ in range(code.n)]
        return received, rel, positions
    if cfg.channel == "qsym":
        received = list(codeword)
        positions = []
        rel = []
        for i in range(code.n):
            if rng.random() < cfg.eps:
                received[i] = f.add(codeword[i], rng.randrange(1, f.q))
                positions.append(i)
                low = rng.random() < 0.8
            else:
                low = rng.random() < 0.2
            rel.append(rng.uniform(0.0, 0.5) if low else rng.uniform(0.5, 1.0))
        return received, rel, positions
    raise ValueError(f"unknown channel {cfg.channel!r}")


def simulate(cfg: SimConfig, progress=None) -> SimSummary:
    field = GF(cfg.q)
    code = CodeParams(field, cfg.n, cfg.k)
    rng = Random(cfg.seed)
    summary = SimSummary(config=cfg)
    for idx in range(cfg.frames):
        info = [rng.randrange(field.q) for _ in range(cfg.k)]
        codeword = encode(code, info)
        received, rel_vals, positions = channel_apply(rng, code, codeword, cfg)
        rel = ReliabilityOrder.from_values(rel_vals)
        out = gmd_decode(code, received, rel, tau_max=cfg.tau_max)
        in_list = any(list(c.error_word) == _diff(field, received, codeword)
                      for c in out.candidates + ([out.classical] if out.classical else []))
        ok = out.selected == codeword
        rec = FrameRecord(
            index=idx, info=info,
            error_positions=positions,
            error_values=[_diff(field, received, codeword)[p] for p in positions],
            decoded_ok=ok, in_list=in_list,
            n_candidates=len(out.candidates),
            fia_ops=out.diagnostics.get("fia_ops", 0),
            stop_reason=out.diagnostics.get("stop_reason", ""),
        )
        summary.frames.append(rec)
        summary.n_ok += ok
        summary.n_in_list += in_list
        if cfg.verify:
            dist, winners = oracle_exhaustive_decode(code, received)
            if out.selected is not None and out.selected not in winners:
                sel_dist = sum(a != b for a, b in zip(out.selected, received))
                if sel_dist > dist:
                    summary.oracle_mismatches += 1
        if progress is not None:
            progress(rec)
    return summary


def _diff(field, received, codeword):
    return [field.sub(r, c) for r, c in zip(received, codeword)]


@dataclass
class ScalingPoint:
    d: int
    frames: int
    fast_ops_mean: float
    naive_ops_mean: float
    wall_seconds: float


@dataclass
class ScalingReport:
    points: list[ScalingPoint]
    fast_slope: float
    naive_slope: float

    def lines(self):
        yield "d frames fast_ops_mean naive_ops_mean wall_s"
        for p in self.points:
            yield (f"{p.d} {p.frames} {p.fast_ops_mean:.1f} "
                   f"{p.naive_ops_mean:.1f} {p.wall_seconds:.2f}")
        yield f"fast_slope={self.fast_slope:.3f}"
        yield f"naive_slope={self.naive_slope:.3f}"


def run_scaling(q: int = 64, n: int = 63, d_list=(5, 9, 17, 33),
                frames: int = 1000, seed: int = 7) -> ScalingReport:
    """Measure FIA work (field multiplications in discrepancy sums) for the
    fast column-resumed scan against the naive fresh-start scan on identical
    matrices, across codes of increasing minimum distance."""
    field = GF(q)
    points = []
    for d in d_list:
        k = n - d + 1
        code = CodeParams(field, n, k)
        rng = Random(seed + d)
        half = (d - 1) // 2
        tau_max = d - 3
        tau_max -= tau_max % 2
        fast_tot = 0
        naive_tot = 0
        t0 = time.monotonic()
        done = 0
        while done < frames:
            t = rng.randrange(half + 1, d)  # past half distance: GMD territory
            err, positions, _ = draw_error(rng, code, t)
            synd = syndrome(code, err)
            trace = eea_run(synd, d)
            basis = extract_basis(trace, past_classical=True)
            rel = [rng.uniform(0.0, 0.5) if i in set(positions) else rng.uniform(0.5, 1.0)
                   for i in range(n)]
            order = sorted(range(n), key=lambda i: (rel[i], i))
            locators = [code.locator_of_position(i) for i in order[:tau_max]]
            matrix = build_matrix(basis, locators)
            fast_tot += fia_run(matrix).ops
            naive_tot += oracle_naive_fia(matrix).ops
            done += 1
        points.append(ScalingPoint(
            d=d, frames=frames,
            fast_ops_mean=fast_tot / frames,
            naive_ops_mean=naive_tot / frames,
            wall_seconds=time.monotonic() - t0,
        ))
    xs = [math.log(p.d) for p in points]
    fast_slope = statistics.linear_regression(xs, [math.log(p.fast_ops_mean) for p in points]).slope
    naive_slope = statistics.linear_regression(xs, [math.log(p.naive_ops_mean) for p in points]).slope
    return ScalingReport(points=points, fast_slope=fast_slope, naive_slope=naive_slope)
