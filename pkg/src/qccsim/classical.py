"""Classical side of the game: the 3/4 baseline and an exhaustive search
over all deterministic two-bit protocols.

A deterministic protocol is four lookup tables: each party's message as a
function of its input, and each party's output as a function of its input
and the bit it received.  Two message orderings are covered:

* ``simultaneous`` -- both messages depend only on the sender's input;
* ``sequential``   -- Alice sends first and Bob's message may also depend
  on the bit he received from her.

Shared randomness is a convex mixture of deterministic protocols, so the
deterministic maximum found by the search bounds randomized protocols too.
Success counts are exact integers out of the 16 equiprobable input pairs
and probabilities are exposed as Fractions, so the headline 12/16 = 3/4
never passes through floating point.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

MODE_SIMULTANEOUS = "simultaneous"
MODE_SEQUENTIAL = "sequential"
WORKERS_ENV_VAR = "QCCSIM_WORKERS"

N_INPUT_PAIRS = 16

# Input pairs enumerated x-major: index k = 4*x + y.
_XS = np.arange(16) >> 2
_YS = np.arange(16) & 3
_F = ((_XS >> 1) ^ (_YS >> 1) ^ ((_XS & 1) & (_YS & 1))).astype(np.uint32)

# Popcount over 16-bit success masks.
_POPCOUNT = (
    np.unpackbits(np.arange(1 << 16, dtype=">u2").view(np.uint8))
    .reshape(-1, 16)
    .sum(axis=1)
    .astype(np.uint8)
)


@dataclass(frozen=True)
class DeterministicProtocol:
    """Lookup tables of one deterministic protocol.

    ``msg_alice[x]`` is Alice's message bit.  In simultaneous mode
    ``msg_bob[y]`` is Bob's; in sequential mode ``msg_bob[2*y + received]``
    lets his message depend on Alice's bit.  ``out_alice[2*x + received]``
    and ``out_bob[2*y + received]`` are the output bits.
    """

    mode: str
    msg_alice: tuple[int, ...]
    msg_bob: tuple[int, ...]
    out_alice: tuple[int, ...]
    out_bob: tuple[int, ...]


@dataclass(frozen=True)
class EnumerationResult:
    best_success_count: int
    best_probability: Fraction
    witness: DeterministicProtocol
    mode: str
    protocols_examined: int


class ProtocolRun(NamedTuple):
    """Messages and outputs of one protocol evaluation on inputs (x, y)."""

    msg_alice: int
    msg_bob: int
    out_alice: int
    out_bob: int


def _target(x: int, y: int) -> int:
    return (x >> 1) ^ (y >> 1) ^ ((x & 1) & (y & 1))


def baseline_protocol() -> DeterministicProtocol:
    """The 3/4-achieving strategy: exchange high bits, output their XOR.

    Both parties effectively guess x0 AND y0 = 0, which holds on 12 of the
    16 input pairs.
    """
    high = (0, 0, 1, 1)  # x -> x1
    # cell 2*x + received  ->  high bit of x XOR received bit
    out = tuple(((i >> 1) >> 1) ^ (i & 1) for i in range(8))
    return DeterministicProtocol(
        mode=MODE_SIMULTANEOUS, msg_alice=high, msg_bob=high, out_alice=out, out_bob=out
    )


def run_protocol(p: DeterministicProtocol, x: int, y: int) -> ProtocolRun:
    """Evaluate a protocol on one input pair."""
    msg_a = p.msg_alice[x]
    if p.mode == MODE_SIMULTANEOUS:
        msg_b = p.msg_bob[y]
    elif p.mode == MODE_SEQUENTIAL:
        msg_b = p.msg_bob[2 * y + msg_a]
    else:
        raise ValueError(f"unknown mode {p.mode!r}")
    return ProtocolRun(
        msg_alice=msg_a,
        msg_bob=msg_b,
        out_alice=p.out_alice[2 * x + msg_b],
        out_bob=p.out_bob[2 * y + msg_a],
    )


def evaluate_protocol(p: DeterministicProtocol) -> int:
    """Number of the 16 input pairs on which BOTH outputs equal the target."""
    count = 0
    for x in range(4):
        for y in range(4):
            run = run_protocol(p, x, y)
            want = _target(x, y)
            count += run.out_alice == want and run.out_bob == want
    return count


# ---------------------------------------------------------------------------
# Exhaustive enumeration.  Message tables are encoded as integers (bit x of
# ``ma`` is Alice's message on input x, and so on); output tables as 8-bit
# integers with bit (2*input + received).  For fixed message tables, each
# 8-bit output table yields a 16-bit mask of inputs where that party is
# correct, and the joint success count is the popcount of the AND of the two
# masks -- evaluated for all 256 x 256 output-table pairs at once.


def _masks_for_cells(cells: np.ndarray) -> np.ndarray:
    """16-bit correctness mask for each of the 256 output tables.

    ``cells[k]`` is the table cell consulted at input pair k; bit k of the
    mask is set when the table's bit there equals the target value.
    """
    tables = np.arange(256, dtype=np.uint32)[:, None]
    ok = ((tables >> cells[None, :]) & 1) == _F[None, :]
    return (ok.astype(np.uint32) << np.arange(16, dtype=np.uint32)[None, :]).sum(axis=1)


def _bob_out_masks(ma: int) -> np.ndarray:
    return _masks_for_cells(2 * _YS + ((ma >> _XS) & 1))


def _best_for_alice_msg(args: tuple[str, int]) -> tuple[int, int, int, int, int]:
    """Best (count, ma, mb, out_a, out_b) over all tables with Alice message ``ma``."""
    mode, ma = args
    mask_bob = _bob_out_masks(ma)
    mb_range = range(16) if mode == MODE_SIMULTANEOUS else range(256)
    best = (-1, ma, -1, -1, -1)
    for mb in mb_range:
        if mode == MODE_SIMULTANEOUS:
            received_by_alice = (mb >> _YS) & 1
        else:
            received_by_alice = (mb >> (2 * _YS + ((ma >> _XS) & 1))) & 1
        mask_alice = _masks_for_cells(2 * _XS + received_by_alice)
        counts = _POPCOUNT[np.bitwise_and.outer(mask_alice, mask_bob).astype(np.uint16)]
        top = int(counts.max())
        if top > best[0]:
            flat = int(counts.argmax())  # first maximum: smallest (out_a, out_b)
            best = (top, ma, mb, flat >> 8, flat & 0xFF)
    return best


def _decode_witness(mode: str, ma: int, mb: int, oa: int, ob: int) -> DeterministicProtocol:
    mb_len = 4 if mode == MODE_SIMULTANEOUS else 8
    return DeterministicProtocol(
        mode=mode,
        msg_alice=tuple((ma >> x) & 1 for x in range(4)),
        msg_bob=tuple((mb >> i) & 1 for i in range(mb_len)),
        out_alice=tuple((oa >> i) & 1 for i in range(8)),
        out_bob=tuple((ob >> i) & 1 for i in range(8)),
    )


def enumerate_best(mode: str, workers: int | None = None) -> EnumerationResult:
    """Scan every deterministic protocol in the given mode for the maximum.

    Ties resolve to the lexicographically smallest encoding
    (msg_alice, msg_bob, out_alice, out_bob), so the witness is
    deterministic.  ``workers`` > 1 partitions the scan by Alice's message
    table across processes with the same tie-break; defaults to the
    QCCSIM_WORKERS environment variable, else sequential.
    """
    if mode not in (MODE_SIMULTANEOUS, MODE_SEQUENTIAL):
        raise ValueError(f"unknown mode {mode!r}")
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV_VAR, "1"))

    jobs = [(mode, ma) for ma in range(16)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            candidates = list(pool.map(_best_for_alice_msg, jobs))
    else:
        candidates = [_best_for_alice_msg(job) for job in jobs]

    best = min(candidates, key=lambda c: (-c[0], c[1], c[2], c[3], c[4]))
    count = best[0]
    n_mb = 16 if mode == MODE_SIMULTANEOUS else 256
    return EnumerationResult(
        best_success_count=count,
        best_probability=Fraction(count, N_INPUT_PAIRS),
        witness=_decode_witness(mode, *best[1:]),
        mode=mode,
        protocols_examined=16 * n_mb * 256 * 256,
    )
