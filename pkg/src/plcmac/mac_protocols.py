"""Per-networking-cycle simulators for the three association mechanisms.

Each simulator runs one networking cycle for one coordinator session:
slotted contention in the PTE window, then the protocol's framing for
whoever got through. Durations come from the slot schedule, never from
frame air times.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import RunConfig


@dataclass(frozen=True)
class PendingSet:
    """STAs still waiting to join one session, all at the same tree depth (>= 1)."""

    stas: tuple[int, ...]
    depth: int = 1

    def __post_init__(self) -> None:
        stas = tuple(sorted(self.stas))
        if not stas:
            raise ValueError("a pending set is never empty")
        if len(set(stas)) != len(stas):
            raise ValueError("pending ids must be unique")
        if self.depth < 1:
            raise ValueError("depth starts at 1")
        object.__setattr__(self, "stas", stas)


@dataclass(frozen=True)
class NcOutcome:
    """One networking cycle's result for one session."""

    joined: tuple[int, ...]
    elapsed_us: int
    data_frames: int
    preambles: int
    slots_used: int


def contend(pending_count: int, n_slot: int, rng: np.random.Generator) -> tuple[int, np.ndarray]:
    """Uniform slotted contention: each STA draws one slot, alone-in-slot wins.

    Returns (successes, per-STA success flags in input order).
    """
    if pending_count < 1:
        raise ValueError("need at least one contender")
    if n_slot < 1:
        raise ValueError("need at least one slot")
    if pending_count == 1:
        return 1, np.ones(1, dtype=bool)
    slots = np.asarray(rng.integers(0, n_slot, size=pending_count))
    counts = np.bincount(slots, minlength=n_slot)
    flags = counts[slots] == 1
    return int(flags.sum()), flags


def _joined(pending: PendingSet, flags: np.ndarray) -> tuple[int, ...]:
    return tuple(sta for sta, ok in zip(pending.stas, flags) if ok)


def simulate_nc_epmac(
    pending: PendingSet,
    n_slot: int,
    first_nc: bool,
    cfg: RunConfig,
    rng: np.random.Generator,
) -> NcOutcome:
    """One batched networking cycle.

    Announcement (a slot-count data frame on the first cycle, a NET
    preamble afterwards), a PTE of n_slot preamble slots, then for the
    s winners: ceil(s/tdf_capacity) TDFs, s MAC-address frames,
    ceil(s/sdf_capacity) SDFs, and one ACK preamble each.
    """
    t = cfg.timing
    s, flags = contend(len(pending.stas), n_slot, rng)
    if first_nc:
        data, preambles = 1, 0
        elapsed = t.data_frame_slot_us
    else:
        data, preambles = 0, 1
        elapsed = t.preamble_slot_us
    elapsed += n_slot * t.preamble_slot_us  # every PTE slot is paid for, landed or not
    preambles += n_slot
    if s:
        tdf = -(-s // cfg.tdf_capacity)
        sdf = -(-s // cfg.sdf_capacity)
        data += tdf + s + sdf
        preambles += s
        elapsed += (tdf + s + sdf) * t.data_frame_slot_us + s * t.preamble_slot_us
    return NcOutcome(_joined(pending, flags), elapsed, data, preambles, n_slot)


def simulate_nc_pmac(
    pending: PendingSet,
    n_slot: int,
    cfg: RunConfig,
    rng: np.random.Generator,
) -> NcOutcome:
    """One unbatched networking cycle at depth k.

    NET preamble, the PTE window, then three data frames per winner
    (time difference, MAC address, SID) each crossing k hops, and one
    ACK preamble per winner.
    """
    t = cfg.timing
    s, flags = contend(len(pending.stas), n_slot, rng)
    data = 3 * pending.depth * s
    preambles = 1 + n_slot + s
    elapsed = preambles * t.preamble_slot_us + data * t.data_frame_slot_us
    return NcOutcome(_joined(pending, flags), elapsed, data, preambles, n_slot)


def simulate_nc_csma(
    pending: PendingSet,
    n_slot: int,
    cfg: RunConfig,
    rng: np.random.Generator,
) -> NcOutcome:
    """One beacon-plus-association cycle at depth k.

    A central (k = 1) or proxy (k > 1) beacon opens the cycle, then
    n_slot association-request slots. Each pending STA picks a slot and
    transmits with probability csma_p; alone-in-slot transmitters get an
    association indication, plus one request/indication pair per extra
    hop. Non-transmitters and collided STAs wait for the next cycle.
    """
    t = cfg.timing
    k = pending.depth
    m = len(pending.stas)
    if n_slot < 1:
        raise ValueError("need at least one slot")
    slots = np.asarray(rng.integers(0, n_slot, size=m))
    transmit = np.asarray(rng.random(m)) < cfg.csma_p
    if m == 1:
        flags = transmit.copy()
    else:
        counts = np.bincount(slots[transmit], minlength=n_slot)
        flags = transmit & (counts[slots] == 1)
    s = int(flags.sum())
    beacon = t.central_beacon_slot_us if k == 1 else t.proxy_beacon_slot_us
    elapsed = beacon + n_slot * t.assoc_req_slot_us + s * t.assoc_ind_slot_us
    data = 1 + int(transmit.sum()) + s
    if k > 1:
        elapsed += s * (k - 1) * (t.assoc_req_slot_us + t.assoc_ind_slot_us)
        data += 2 * s * (k - 1)
    return NcOutcome(_joined(pending, flags), elapsed, data, 0, n_slot)
