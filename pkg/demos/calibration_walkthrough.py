"""Walk one delay calibration from ground truth to a corrected measurement.

A coordinator and a joining station each time the same exchange, but
both clocks include device-specific processing delays. Three observable
round-trip differences are enough to solve for every delay exactly, and
the recovered offset turns the coordinator's reading into the station's.
"""

from plcmac import (
    CalibrationMeasurement,
    DelayProfile,
    calibrate_time_difference,
    measurement_residuals,
    simulate_pte_measurement,
    solve_calibration,
    synthesize_measurements,
)


def main() -> None:
    profile = DelayProfile(t_p=1850, r_p=930, r_m=412)
    print("ground truth (us):")
    print(f"  transmit processing {profile.t_p}, receive processing {profile.r_p}, "
          f"medium {profile.r_m}, offset {profile.tau}")

    meas = synthesize_measurements(profile)
    print("\nwhat the devices can actually observe:")
    print(f"  round trip with echo      {meas.tau_cco1} us")
    print(f"  round trip without echo   {meas.tau_cco2} us")
    print(f"  station-side send path    {meas.tau_sta} us")

    result = solve_calibration(meas)
    print("\nsolved back from the three observations:")
    print(f"  t_p={result.t_p}  r_m={result.r_m}  r_p={result.r_p}  tau={result.tau}")
    print(f"  residuals of the defining relations: {measurement_residuals(result, meas)}")

    backoff = 5200
    delta_sta, delta_cco = simulate_pte_measurement(profile, backoff)
    corrected = calibrate_time_difference(delta_cco, result.tau)
    print(f"\none join request with a {backoff} us backoff:")
    print(f"  station measured  {delta_sta} us")
    print(f"  coordinator saw   {delta_cco} us (offset applied twice)")
    print(f"  corrected         {corrected} us -> {'matches' if corrected == delta_sta else 'DOES NOT match'}")

    # an odd round-trip reading makes the offset half-integral; nothing rounds
    odd = solve_calibration(CalibrationMeasurement(tau_cco1=17, tau_cco2=10, tau_sta=10))
    print(f"\nhalf-integral case: tau = {odd.tau} (kept exact, never rounded)")


if __name__ == "__main__":
    main()
