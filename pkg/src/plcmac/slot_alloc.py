"""Adaptive PTE slot-count controller used by E-PMAC networking cycles."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache


class ZeroSlots(ValueError):
    """Raised when asked for a follow-up slot count after a zero-slot PTE."""


@lru_cache(maxsize=None)
def _as_fraction(factor: float) -> Fraction:
    # str() round-trips the decimal literal the user typed, so 1.1 stays 11/10
    return Fraction(str(factor))


def ceil_scale(factor: float, n: int) -> int:
    """Ceiling of factor * n, exact for decimal-literal factors.

    Plain float multiplication can overshoot an integer product
    (1.1 * 10 == 11.000000000000002) and inflate the ceiling by one slot.
    """
    return math.ceil(_as_fraction(factor) * n)


@dataclass(frozen=True)
class AllocParams:
    """Controller constants.

    n0 is the first-PTE slot count, normally chosen by the experiment as
    ceil(slot_ratio * pending). k1 stretches the window when the success
    ratio is positive but thin, k2 doubles down after a fully collided PTE.
    """

    n0: int = 1
    t_f_max: int = 3
    eta_min: float = 0.35
    k1: float = 1.3
    k2: float = 2.0

    def __post_init__(self) -> None:
        if self.n0 < 0:
            raise ValueError("n0 must be non-negative")
        if self.t_f_max < 0:
            raise ValueError("t_f_max must be non-negative")
        if not 0.0 < self.eta_min < 1.0:
            raise ValueError("eta_min must lie strictly inside (0, 1)")
        if not 1.0 < self.k1 < self.k2:
            raise ValueError("growth factors must satisfy 1 < k1 < k2")


@dataclass(frozen=True)
class SlotAllocState:
    """What the controller remembers after t_pte completed PTE rounds."""

    params: AllocParams
    n_slot: int = 0  # slots used in the previous PTE
    n_sta: int = 0   # joins observed in the previous PTE
    t_f: int = 0     # consecutive PTEs with zero joins
    t_pte: int = 0   # completed PTEs this session


def fresh_state(params: AllocParams) -> SlotAllocState:
    """State before any PTE has run."""
    return SlotAllocState(params=params)


def next_slot_count(state: SlotAllocState) -> int:
    """Slot count for the next PTE round.

    The first round uses n0. Afterwards the previous round's success
    ratio eta = n_sta / n_slot picks the branch: a thin ratio
    (0 < eta <= eta_min) stretches the window by k1, a healthy one keeps
    it, and a fully collided or idle round doubles it by k2 until
    t_f_max idle rounds have passed, at which point 0 signals that the
    session should stop probing.
    """
    p = state.params
    if state.t_pte == 0:
        return p.n0
    if state.n_slot <= 0:
        raise ZeroSlots("previous PTE ran with no slots; cannot derive a follow-up count")
    if state.n_sta > 0:
        eta = state.n_sta / state.n_slot
        if eta <= p.eta_min:
            return ceil_scale(p.k1, state.n_slot)
        return state.n_slot
    if state.t_f <= p.t_f_max:
        return ceil_scale(p.k2, state.n_slot)
    return 0


def record_pte(state: SlotAllocState, n_slot_used: int, n_joined: int) -> SlotAllocState:
    """Fold one finished PTE round into the state.

    Any success resets the idle counter; an idle round increments it.
    """
    if n_slot_used < 1:
        raise ValueError("a PTE round uses at least one slot")
    if not 0 <= n_joined <= n_slot_used:
        raise ValueError("joins must lie in [0, n_slot_used]")
    return replace(
        state,
        n_slot=n_slot_used,
        n_sta=n_joined,
        t_f=0 if n_joined > 0 else state.t_f + 1,
        t_pte=state.t_pte + 1,
    )
