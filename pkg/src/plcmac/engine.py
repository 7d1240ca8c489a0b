"""Formation engine: coordinator sessions over a topology, cycle by cycle.

A formation run walks the tree in BFS order. The CCO runs a session
over its direct children; every node that ends up with children runs a
proxy session over its own, in discovery order, one session at a time.
Each session loops networking cycles until its pending set drains.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .core import Protocol, RunConfig, SidAllocator, TimingTable
from .mac_protocols import PendingSet, simulate_nc_csma, simulate_nc_epmac, simulate_nc_pmac
from .slot_alloc import AllocParams, ceil_scale, fresh_state, next_slot_count, record_pte
from .topology import CCO_ID, NetworkTree, generate_tree, single_layer


class NonTermination(RuntimeError):
    """A formation run exceeded its networking-cycle budget."""


class EmptySample(ValueError):
    """summarize needs at least one sample."""


@dataclass(frozen=True)
class FormationResult:
    total_us: int
    nc_count: int
    data_frames: int
    preambles: int
    joined: int


def run_formation(
    protocol: Protocol,
    tree: NetworkTree,
    cfg: RunConfig,
    rng: np.random.Generator,
) -> FormationResult:
    """Simulate one complete network formation and account for every slot.

    Proxy sessions at depth k >= 2 are charged a relay overhead of
    2*(k-1) data-frame slots up front (beacon chain down, report chain
    up); the per-cycle costs come from the protocol simulators.
    """
    if cfg.protocol is not protocol:
        raise ValueError("cfg.protocol disagrees with the requested protocol")
    t = cfg.timing
    total_us = 0
    nc_count = 0
    data_frames = 0
    preambles = 0
    joined_total = 0
    sids = SidAllocator()

    sessions: list[tuple[int, tuple[int, ...]]] = []
    queue = deque([CCO_ID])
    while queue:
        node = queue.popleft()
        kids = tree.children.get(node)
        if kids:
            sessions.append((node, kids))
            queue.extend(kids)

    for coordinator, kids in sessions:
        depth_k = tree.depth[coordinator] + 1
        if depth_k >= 2 and protocol is not Protocol.IEEE1901:
            overhead = 2 * (depth_k - 1)
            data_frames += overhead
            total_us += overhead * t.data_frame_slot_us
        pending = kids
        if protocol is Protocol.EPMAC:
            params = replace(cfg.alloc, n0=ceil_scale(cfg.slot_ratio, len(pending)))
            state = fresh_state(params)
        while pending:
            if nc_count >= cfg.max_nc:
                raise NonTermination(
                    f"{protocol.value} run exceeded max_nc={cfg.max_nc} with "
                    f"{len(pending)} STA(s) still pending at depth {depth_k}"
                )
            batch = PendingSet(pending, depth_k)
            if protocol is Protocol.EPMAC:
                n_slot = next_slot_count(state)
                if n_slot == 0:
                    # probe budget exhausted with STAs left: forced restart, fresh first PTE
                    state = fresh_state(params)
                    n_slot = next_slot_count(state)
                out = simulate_nc_epmac(batch, n_slot, state.t_pte == 0, cfg, rng)
                state = record_pte(state, n_slot, len(out.joined))
            elif protocol is Protocol.PMAC:
                # two contenders in one slot collide forever; floor the window at 2
                n_slot = ceil_scale(cfg.slot_ratio, len(pending))
                if len(pending) >= 2:
                    n_slot = max(n_slot, 2)
                out = simulate_nc_pmac(batch, n_slot, cfg, rng)
            else:
                n_slot = ceil_scale(cfg.slot_ratio, len(pending))
                out = simulate_nc_csma(batch, n_slot, cfg, rng)
            nc_count += 1
            total_us += out.elapsed_us
            data_frames += out.data_frames
            preambles += out.preambles
            if out.joined:
                joined_total += len(out.joined)
                for _ in out.joined:
                    sids.allocate()
                drained = set(out.joined)
                pending = tuple(x for x in pending if x not in drained)

    if joined_total != tree.n_sta:
        raise RuntimeError("formation ended with unjoined STAs despite empty sessions")
    return FormationResult(total_us, nc_count, data_frames, preambles, joined_total)


@dataclass(frozen=True)
class ResultRow:
    protocol: str
    n_node: int
    ratio: float
    trial: int
    elapsed_us: int
    nc_count: int
    data_frames: int
    preambles: int
    layers: int


CSV_HEADER: tuple[str, ...] = (
    "protocol",
    "n_node",
    "ratio",
    "trial",
    "elapsed_us",
    "nc_count",
    "data_frames",
    "preambles",
    "layers",
)


@dataclass(frozen=True)
class ExperimentPlan:
    """A full sweep: protocols x sizes x ratio cells x trials.

    Exactly one of ratio_grid / ratio_random is set. In random mode the
    ratio is each cell's first rng draw, so every cell stays a pure
    function of (seed, protocol, n, ratio cell, trial) and results are
    identical no matter how the work is scheduled.
    """

    protocols: tuple[Protocol, ...]
    n_values: tuple[int, ...]
    ratio_grid: tuple[float, ...] | None = None
    ratio_random: tuple[float, float] | None = None
    trials: int = 100
    seed: int = 1
    multi_layer: bool = False
    max_layers: int = 6
    timing: TimingTable = field(default_factory=TimingTable)
    alloc: AllocParams = field(default_factory=AllocParams)
    csma_p: float = 0.75
    tdf_capacity: int = 20
    sdf_capacity: int = 10
    max_nc: int = 100_000

    def __post_init__(self) -> None:
        if not self.protocols or not self.n_values:
            raise ValueError("need at least one protocol and one network size")
        if (self.ratio_grid is None) == (self.ratio_random is None):
            raise ValueError("set exactly one of ratio_grid / ratio_random")
        if self.ratio_grid is not None and not self.ratio_grid:
            raise ValueError("ratio_grid must not be empty")
        if self.ratio_random is not None:
            lo, hi = self.ratio_random
            if not 0 < lo <= hi:
                raise ValueError("ratio_random bounds must satisfy 0 < lo <= hi")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


def _run_cell(plan: ExperimentPlan, proto_idx: int, n: int, ratio_idx: int, trial: int) -> ResultRow:
    protocol = plan.protocols[proto_idx]
    rng = np.random.default_rng(
        np.random.SeedSequence((plan.seed, proto_idx, n, ratio_idx, trial))
    )
    if plan.ratio_random is not None:
        lo, hi = plan.ratio_random
        ratio = float(lo + (hi - lo) * rng.random())
    else:
        ratio = plan.ratio_grid[ratio_idx]
    if plan.multi_layer:
        tree = generate_tree(n, plan.max_layers, rng)
    else:
        tree = single_layer(n)
    cfg = RunConfig(
        protocol=protocol,
        n_node=n,
        slot_ratio=ratio,
        timing=plan.timing,
        alloc=plan.alloc,
        csma_p=plan.csma_p,
        tdf_capacity=plan.tdf_capacity,
        sdf_capacity=plan.sdf_capacity,
        multi_layer=plan.multi_layer,
        max_layers=plan.max_layers,
        max_nc=plan.max_nc,
        seed=plan.seed,
    )
    try:
        result = run_formation(protocol, tree, cfg, rng)
    except NonTermination as exc:
        raise NonTermination(
            f"{exc} [cell protocol={protocol.value} n={n} ratio_index={ratio_idx} trial={trial}]"
        ) from exc
    return ResultRow(
        protocol=protocol.value,
        n_node=n,
        ratio=ratio,
        trial=trial,
        elapsed_us=result.total_us,
        nc_count=result.nc_count,
        data_frames=result.data_frames,
        preambles=result.preambles,
        layers=tree.max_depth,
    )


def _run_cell_args(args: tuple) -> ResultRow:
    return _run_cell(*args)


def run_experiment(plan: ExperimentPlan, jobs: int = 1) -> list[ResultRow]:
    """Run every cell of the plan; rows come back ordered by cell coordinates.

    jobs > 1 fans cells out to worker processes; because each cell seeds
    itself from its coordinates, the rows are identical either way.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    ratio_indices = range(len(plan.ratio_grid)) if plan.ratio_grid is not None else range(1)
    cells = [
        (plan, pi, n, ri, trial)
        for pi in range(len(plan.protocols))
        for n in plan.n_values
        for ri in ratio_indices
        for trial in range(plan.trials)
    ]
    if jobs == 1 or len(cells) < 2:
        return [_run_cell(*cell) for cell in cells]
    chunk = max(1, len(cells) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_cell_args, cells, chunksize=chunk))


@dataclass(frozen=True)
class SummaryStats:
    """Five-number summary plus mean; quartiles use inclusive linear interpolation."""

    n: int
    mean: float
    min: float
    q1: float
    median: float
    q3: float
    max: float

    @property
    def iqr(self) -> float:
        return self.q3 - self.q1


def summarize(samples: Iterable[float] | Sequence[float]) -> SummaryStats:
    arr = np.asarray(list(samples), dtype=float)
    if arr.size == 0:
        raise EmptySample("cannot summarize an empty sample")
    q1, median, q3 = np.percentile(arr, [25.0, 50.0, 75.0])
    return SummaryStats(
        n=int(arr.size),
        mean=float(arr.mean()),
        min=float(arr.min()),
        q1=float(q1),
        median=float(median),
        q3=float(q3),
        max=float(arr.max()),
    )
