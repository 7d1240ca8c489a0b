"""OFDM frame air-time arithmetic for broadband and FD-PLC narrowband frames.

Air times here are physical transmission lengths. The slot schedule in
core.TimingTable is a separate scheduling quantity and stays authoritative
for the simulator; see the NOMINAL_* constants below for the one known gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class TooFewSymbols(ValueError):
    """Payload must span at least two OFDM symbols."""


@dataclass(frozen=True)
class Ieee1901PhyParams:
    """Broadband OFDM constants for the most robust modulation.

    n_b payload bits spread over symbols carrying n_c bits each;
    13 symbols of preamble-equivalent overhead, two frame-control
    blocks, and a guard interval on every payload symbol after the
    second.
    """

    n_b: int = 21760
    n_c: int = 94
    symbol_us: float = 40.96
    overhead_symbols: int = 13
    frame_ctrl_us: float = 18.32
    frame_ctrl_count: int = 2
    guard_us: float = 10.8

    def __post_init__(self) -> None:
        if self.n_b < 1 or self.n_c < 1:
            raise ValueError("bit counts must be positive")


def ieee1901_frame_time(params: Ieee1901PhyParams = Ieee1901PhyParams()) -> float:
    """Frame air time in microseconds.

    symbol_us * (overhead + N_s) + frame_ctrl + guard * (N_s - 2)
    with N_s = ceil(n_b / n_c) payload symbols.
    """
    n_s = -(-params.n_b // params.n_c)
    if n_s < 2:
        raise TooFewSymbols(f"{params.n_b} bits at {params.n_c} per symbol fill only {n_s} symbol(s)")
    return (
        params.symbol_us * (params.overhead_symbols + n_s)
        + params.frame_ctrl_us * params.frame_ctrl_count
        + (n_s - 2) * params.guard_us
    )


@dataclass(frozen=True)
class FdplcPhyParams:
    """FD-PLC narrowband constants: short preamble symbols, long data symbols."""

    bits: int = 8768
    carriers: int = 720
    data_symbol_us: float = 819.2
    preamble_symbols: int = 5
    preamble_symbol_us: float = 51.2

    def __post_init__(self) -> None:
        if self.bits < 1 or self.carriers < 1:
            raise ValueError("bit and carrier counts must be positive")
        if self.preamble_symbols < 1:
            raise ValueError("preamble needs at least one symbol")


def fdplc_preamble_time(params: FdplcPhyParams = FdplcPhyParams()) -> float:
    """Preamble air time in microseconds."""
    return params.preamble_symbols * params.preamble_symbol_us


def fdplc_data_frame_time(
    params: FdplcPhyParams = FdplcPhyParams(), integer_symbols: bool = False
) -> float:
    """Data frame air time in microseconds.

    The fractional mode carries bits/carriers symbols, matching the
    published arithmetic; integer_symbols=True rounds the symbol count
    up to whole symbols as a transmitter must.
    """
    symbols = params.bits / params.carriers
    if integer_symbols:
        symbols = math.ceil(params.bits / params.carriers)
    return fdplc_preamble_time(params) + symbols * params.data_symbol_us


# Nominal air times often quoted when planning broadband slots. The symbol
# arithmetic above yields larger values at the default parameters; the slot
# schedule in core.TimingTable is what the simulator trusts.
NOMINAL_IEEE1901_BEACON_US = 9102
NOMINAL_IEEE1901_MME_US = 17488
