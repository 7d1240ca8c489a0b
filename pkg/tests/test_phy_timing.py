"""Frame air-time arithmetic for the broadband and narrowband parameter sets."""

import pytest

from plcmac import (
    FdplcPhyParams,
    Ieee1901PhyParams,
    TooFewSymbols,
    fdplc_data_frame_time,
    fdplc_preamble_time,
    ieee1901_frame_time,
)
from plcmac.phy_timing import NOMINAL_IEEE1901_BEACON_US, NOMINAL_IEEE1901_MME_US


def test_broadband_default_payload_air_time():
    # 21760 bits at 94 per symbol: 232 payload symbols
    assert ieee1901_frame_time(Ieee1901PhyParams()) == pytest.approx(12555.84, abs=0.01)


def test_broadband_double_payload_air_time():
    params = Ieee1901PhyParams(n_b=43520)
    assert ieee1901_frame_time(params) == pytest.approx(24512.40, abs=0.01)


def test_broadband_minimal_two_symbol_frame():
    # exactly two symbols: the guard term vanishes
    params = Ieee1901PhyParams(n_b=188)
    assert ieee1901_frame_time(params) == pytest.approx(651.04, abs=0.01)
    assert ieee1901_frame_time(Ieee1901PhyParams(n_b=95)) == pytest.approx(651.04, abs=0.01)


def test_broadband_payload_below_two_symbols_is_rejected():
    with pytest.raises(TooFewSymbols):
        ieee1901_frame_time(Ieee1901PhyParams(n_b=94))


def test_broadband_params_validation():
    with pytest.raises(ValueError):
        Ieee1901PhyParams(n_b=0)
    with pytest.raises(ValueError):
        Ieee1901PhyParams(n_c=0)


def test_narrowband_preamble_is_five_short_symbols():
    assert fdplc_preamble_time(FdplcPhyParams()) == pytest.approx(256.0)


def test_narrowband_data_frame_fractional_symbols():
    # 8768 bits over 720 carriers rides 12.1777... long symbols
    assert fdplc_data_frame_time(FdplcPhyParams()) == pytest.approx(10232.0356, abs=1e-3)


def test_narrowband_data_frame_whole_symbols():
    t = fdplc_data_frame_time(FdplcPhyParams(), integer_symbols=True)
    assert t == pytest.approx(10905.6, abs=1e-6)


def test_narrowband_params_validation():
    with pytest.raises(ValueError):
        FdplcPhyParams(bits=0)
    with pytest.raises(ValueError):
        FdplcPhyParams(preamble_symbols=0)


def test_symbol_arithmetic_exceeds_the_nominal_plan_values():
    """The computed air times and the quoted planning values disagree.

    This gap is deliberate and documented: the simulator charges the slot
    schedule, never these air times.
    """
    assert ieee1901_frame_time(Ieee1901PhyParams()) > NOMINAL_IEEE1901_BEACON_US
    assert ieee1901_frame_time(Ieee1901PhyParams(n_b=43520)) > NOMINAL_IEEE1901_MME_US
    assert (NOMINAL_IEEE1901_BEACON_US, NOMINAL_IEEE1901_MME_US) == (9102, 17488)
