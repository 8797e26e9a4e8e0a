"""Seeded N-k multi-contingency scenario generation and application.

Damage targets are node-connecting components only: gas arcs and power
branches. Buses and junctions are never removed. The RNG is numpy's PCG64;
scenario ``i`` of a batch draws from ``Generator(PCG64(SeedSequence((base_seed,
i))))`` and samples without replacement via a partial Fisher-Yates shuffle over
the document-ordered component pool, so scenario sets are reproducible across
platforms and schedulers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

import numpy as np

from .netmodel import GasNetwork, JointNetwork, PowerNetwork


class ScenarioError(ValueError):
    """Bad sampling parameters or a scenario that does not match the network."""


@dataclass(frozen=True)
class ContingencyScenario:
    index: int
    damaged_ids: frozenset[str]
    k: int
    base_seed: int


def component_pool(net: JointNetwork) -> list[str]:
    """Damageable component ids: gas arcs then power branches, document order."""
    return [a.id for a in net.gas.arcs()] + [b.id for b in net.power.branches]


def nk_size(ratio: float, pool_size: int) -> int:
    """Half-up rounding with a floor of one: k = max(1, floor(ratio*N + 0.5))."""
    return max(1, int(ratio * pool_size + 0.5))


def _draw_without_replacement(rng: np.random.Generator, pool: list[str],
                              k: int) -> frozenset[str]:
    # Partial Fisher-Yates; explicit so the draw order is pinned down by this
    # module rather than by numpy's choice() internals.
    items = list(pool)
    n = len(items)
    for i in range(k):
        j = i + int(rng.integers(n - i))
        items[i], items[j] = items[j], items[i]
    return frozenset(items[:k])


def sample_nk(net: JointNetwork, ratio: float, base_seed: int, count: int,
              pooling: str = "pooled") -> list[ContingencyScenario]:
    """Generate ``count`` seeded N-k scenarios.

    ``pooling="pooled"`` (default) computes k over the combined gas+power
    component set; ``"per-network"`` applies the same rounding rule to each
    subsystem separately (skipping an empty subsystem) and damages the union.
    """
    if not 0 < ratio < 1:
        raise ScenarioError(f"ratio must lie in (0, 1), got {ratio!r}")
    if count < 1:
        raise ScenarioError(f"count must be positive, got {count!r}")
    if pooling not in ("pooled", "per-network"):
        raise ScenarioError(f"unknown pooling mode {pooling!r}")
    gas_pool = [a.id for a in net.gas.arcs()]
    power_pool = [b.id for b in net.power.branches]
    pool = gas_pool + power_pool
    if not pool:
        raise ScenarioError("network has no node-connecting components to damage")

    scenarios = []
    for i in range(count):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((base_seed, i))))
        if pooling == "pooled":
            k = nk_size(ratio, len(pool))
            damaged = _draw_without_replacement(rng, pool, k)
        else:
            damaged = frozenset()
            for sub in (gas_pool, power_pool):
                if sub:
                    damaged |= _draw_without_replacement(rng, sub, nk_size(ratio, len(sub)))
            k = len(damaged)
        scenarios.append(ContingencyScenario(index=i, damaged_ids=damaged, k=k,
                                             base_seed=base_seed))
    return scenarios


def apply_scenario(net: JointNetwork, scenario: ContingencyScenario) -> JointNetwork:
    """Remove the scenario's damaged components; pure, input left unchanged."""
    known = set(component_pool(net))
    missing = sorted(scenario.damaged_ids - known)
    if missing:
        raise ScenarioError(
            f"scenario {scenario.index} damages unknown components: {missing}")

    dead = scenario.damaged_ids
    gas = net.gas
    gas = replace(
        gas,
        pipes=tuple(p for p in gas.pipes if p.id not in dead),
        short_pipes=tuple(p for p in gas.short_pipes if p.id not in dead),
        resistors=tuple(r for r in gas.resistors if r.id not in dead),
        valves=tuple(a for a in gas.valves if a.id not in dead),
        regulators=tuple(a for a in gas.regulators if a.id not in dead),
        compressors=tuple(c for c in gas.compressors if c.id not in dead),
    )
    power = replace(net.power,
                    branches=tuple(b for b in net.power.branches if b.id not in dead))
    return replace(net, gas=gas, power=power)


def scenarios_to_jsonl(scenarios: list[ContingencyScenario]) -> str:
    """One JSON object per line: {index, k, damaged_ids, base_seed}."""
    lines = []
    for s in scenarios:
        lines.append(json.dumps({"index": s.index, "k": s.k,
                                 "damaged_ids": sorted(s.damaged_ids),
                                 "base_seed": s.base_seed}))
    return "\n".join(lines) + ("\n" if lines else "")


def scenarios_from_jsonl(text: str) -> list[ContingencyScenario]:
    scenarios = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"line {lineno}: invalid JSON: {exc.msg}") from exc
        try:
            scenarios.append(ContingencyScenario(
                index=int(obj["index"]), k=int(obj["k"]),
                damaged_ids=frozenset(str(x) for x in obj["damaged_ids"]),
                base_seed=int(obj["base_seed"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise ScenarioError(f"line {lineno}: bad scenario record: {exc}") from exc
    return scenarios
