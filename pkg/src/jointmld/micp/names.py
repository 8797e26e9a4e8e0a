"""Variable and constraint naming shared by the builders, the exact-point
lifter, and the tests. One place so the instance column space is unambiguous."""

from __future__ import annotations


# power side
def vsq(bus: str) -> str:          # squared voltage magnitude
    return f"vsq[{bus}]"


def wr(branch: str) -> str:        # Re of lifted voltage product, from*conj(to)
    return f"wr[{branch}]"


def wi(branch: str) -> str:        # Im of lifted voltage product
    return f"wi[{branch}]"


def pf(branch: str) -> str:        # real power, forward orientation
    return f"pf[{branch}]"


def qf(branch: str) -> str:        # reactive power, forward orientation
    return f"qf[{branch}]"


def pt(branch: str) -> str:        # real power, reverse orientation
    return f"pt[{branch}]"


def qt(branch: str) -> str:        # reactive power, reverse orientation
    return f"qt[{branch}]"


def pg(gen: str) -> str:
    return f"pg[{gen}]"


def qg(gen: str) -> str:
    return f"qg[{gen}]"


def z_bus(bus: str) -> str:        # bus energization status
    return f"z_bus[{bus}]"


def z_gen(gen: str) -> str:        # generator dispatch status
    return f"z_gen[{gen}]"


def z_load(load: str) -> str:      # served fraction of a load
    return f"z_load[{load}]"


def z_shunt(shunt: str) -> str:    # served fraction of a fixed shunt
    return f"z_shunt[{shunt}]"


def vsq_shunt(shunt: str) -> str:  # McCormick product z_shunt * vsq
    return f"vsq_shunt[{shunt}]"


# gas side
def pr(junction: str) -> str:      # pressure
    return f"p[{junction}]"


def psq(junction: str) -> str:     # squared pressure
    return f"psq[{junction}]"


def fl(arc: str) -> str:           # mass flow
    return f"fl[{arc}]"


def dsq(pipe: str) -> str:         # squared-pressure drop magnitude across a pipe
    return f"dsq[{pipe}]"


def dp(resistor: str) -> str:      # pressure drop magnitude across a resistor
    return f"dp[{resistor}]"


def y_dir(arc: str) -> str:        # flow direction (1 = forward)
    return f"y[{arc}]"


def z_arc(arc: str) -> str:        # valve/regulator open-active status
    return f"z_arc[{arc}]"


def sup(receipt: str) -> str:
    return f"sup[{receipt}]"


def dem(delivery: str) -> str:
    return f"dem[{delivery}]"
