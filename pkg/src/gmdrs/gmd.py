"""End-to-end generalized-minimum-distance decoding.

One syndrome, one EEA trace, and one FIA pass produce the complete list of
trial candidates; each is validated as a proper locator, completed to an
error word, and scored by the reliability mass of the positions it corrects.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .eea import CLASSICAL_SOLVED, classical_decode, eea_run, extract_basis
from .fia import assemble_locator, build_matrix, fia_run
from .poly import Poly
from .rs import CodeParams, reconstruct_error, syndrome


@dataclass(frozen=True)
class ReliabilityOrder:
    """Per-position reliabilities in [0, 1] and the induced erasure order,
    least reliable first; ties break by ascending position."""

    values: tuple[float, ...]
    order: tuple[int, ...]

    @classmethod
    def from_values(cls, values) -> "ReliabilityOrder":
        vals = tuple(float(v) for v in values)
        if any(not 0.0 <= v <= 1.0 for v in vals):
            raise ValueError("reliabilities must lie in [0, 1]")
        order = tuple(sorted(range(len(vals)), key=lambda i: (vals[i], i)))
        return cls(vals, order)


@dataclass(frozen=True)
class Candidate:
    """A validated decoding hypothesis."""

    locator: Poly
    error_word: tuple[int, ...]
    corrected: tuple[int, ...]
    erasures_used: int
    column: int          # FIA emission column; 0 for the classical solution
    metric: float


@dataclass
class DecoderOutput:
    classical: Candidate | None
    candidates: list[Candidate]
    selected: list[int] | None
    diagnostics: dict = dc_field(default_factory=dict)


def validate_candidate(code: CodeParams, locator: Poly) -> tuple[bool, list[int]]:
    """Chien-style sweep: valid iff the number of distinct roots among the
    n position locators equals the locator degree."""
    if locator.is_zero:
        raise ValueError("zero polynomial is not a locator")
    roots = [i for i in range(code.n)
             if locator.evaluate(code.locator_of_position(i)) == 0]
    return len(roots) == locator.degree, roots


def _score(rel: ReliabilityOrder, corrected) -> float:
    return sum(rel.values[i] for i in corrected)


def _make_candidate(code, synd, locator, rel, erasures_used, column):
    ok, roots = validate_candidate(code, locator)
    if not ok:
        return None
    err = reconstruct_error(code, locator, synd)
    if err is None:
        return None
    corrected = tuple(i for i, v in enumerate(err) if v)
    return Candidate(
        locator=locator,
        error_word=tuple(err),
        corrected=corrected,
        erasures_used=erasures_used,
        column=column,
        metric=_score(rel, corrected),
    )


def select_solution(candidates, classical) -> Candidate | None:
    """Deterministic pick: least reliability mass over corrected positions,
    then fewer corrections, then lower emission column."""
    pool = list(candidates)
    if classical is not None:
        pool.append(classical)
    if not pool:
        return None
    return min(pool, key=lambda c: (c.metric, len(c.corrected), c.column))


def gmd_decode(code: CodeParams, received, rel: ReliabilityOrder,
               tau_max: int | None = None, record_visits: bool = False) -> DecoderOutput:
    """Full GMD pipeline for one received word.

    tau_max defaults to d-3 rounded down to even; erasures only ever help in
    pairs, so odd values are rounded down.
    """
    f = code.field
    d = code.d
    if tau_max is None:
        tau_max = max(d - 3, 0)
    if tau_max > code.n:
        raise ValueError("tau_max exceeds the code length")
    tau_max -= tau_max % 2
    if len(rel.values) != code.n:
        raise ValueError("reliability vector length mismatch")

    synd = syndrome(code, received)
    if synd.is_zero:
        # Already a codeword; nothing to locate.
        cand = Candidate(Poly.one(f), (0,) * code.n, (), 0, 0, 0.0)
        return DecoderOutput(classical=cand, candidates=[], selected=list(received),
                             diagnostics={"stop_reason": "zero-syndrome", "fia_ops": 0})

    trace = eea_run(synd, d)
    classical = None
    if trace.stop_reason == CLASSICAL_SOLVED:
        lam, _omega = classical_decode(trace)
        classical = _make_candidate(code, synd, lam, rel, 0, 0)

    basis = extract_basis(trace, past_classical=True)
    erased_positions = list(rel.order[:tau_max])
    erased_locators = [code.locator_of_position(i) for i in erased_positions]
    matrix = build_matrix(basis, erased_locators)
    result = fia_run(matrix, record_visits=record_visits)

    candidates: list[Candidate] = []
    dropped = 0
    seen = set()
    for raw in result.candidates:
        try:
            lam = assemble_locator(raw.vector, matrix)
        except ValueError:
            dropped += 1
            continue
        cand = _make_candidate(code, synd, lam, rel, raw.erasures_used, raw.column)
        if cand is None:
            dropped += 1
            continue
        if cand.locator.coeffs in seen:
            continue
        seen.add(cand.locator.coeffs)
        candidates.append(cand)

    selected_cand = select_solution(candidates, classical)
    selected = None
    if selected_cand is not None:
        selected = [f.sub(r, e) for r, e in zip(received, selected_cand.error_word)]

    return DecoderOutput(
        classical=classical,
        candidates=candidates,
        selected=selected,
        diagnostics={
            "stop_reason": trace.stop_reason,
            "fia_ops": result.ops,
            "emitted": len(result.candidates),
            "dropped": dropped,
            "t1": basis.t1,
            "g": basis.g,
            "n_cols": matrix.n_cols,
            "erased_positions": erased_positions,
            "fia_visits": result.visits,
        },
    )
