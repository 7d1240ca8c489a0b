"""A small in-process sweep: how the slot ratio moves each protocol's mean time.

The full-size sweeps live behind the command line (sweep-single,
sweep-multi); this is the same machinery at a size that runs in a
couple of seconds.
"""

from statistics import fmean

from plcmac import ExperimentPlan, Protocol, run_experiment, summarize


def main() -> None:
    plan = ExperimentPlan(
        protocols=(Protocol.EPMAC, Protocol.PMAC, Protocol.IEEE1901),
        n_values=(100, 300),
        ratio_grid=(0.5, 1.0, 1.5, 2.0),
        trials=25,
        seed=7,
    )
    rows = run_experiment(plan)

    print("mean networking time (ms) by slot ratio:")
    for n in plan.n_values:
        print(f"\n  n = {n}")
        header = "  ".join(f"r={r:<4}" for r in plan.ratio_grid)
        print(f"    {'protocol':10s} {header}   best")
        for proto in plan.protocols:
            means = []
            for ratio in plan.ratio_grid:
                cell = [x.elapsed_us for x in rows if x.protocol == proto.value and x.n_node == n and x.ratio == ratio]
                means.append(fmean(cell) / 1000)
            cells = "  ".join(f"{m:6.0f}" for m in means)
            print(f"    {proto.value:10s} {cells}  {min(means):6.0f}")

    pooled = [x.elapsed_us for x in rows if x.protocol == "epmac" and x.n_node == 300]
    stats = summarize(pooled)
    print(f"\npooled batched-protocol sample at n=300: median {stats.median / 1000:.0f} ms, "
          f"iqr {stats.iqr / 1000:.0f} ms over {stats.n} runs")
    print("for the publication-scale grids, use: plcmac sweep-single / sweep-multi")


if __name__ == "__main__":
    main()
