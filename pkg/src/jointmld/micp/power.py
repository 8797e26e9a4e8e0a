"""Second-order-cone relaxation of the damaged AC power network.

Voltage products are lifted: vsq[i] stands for |V_i|^2 and (wr, wi) for the
complex product V_i conj(V_j) of each stored branch, re-coupled through the
rotated cone |W_ij|^2 <= vsq_i vsq_j. Ohm's law becomes linear in the lifted
variables with the transformer folded into constant coefficients. Buses carry
on/off energization binaries, generators dispatch binaries, loads and shunts
continuous shedding fractions (shunt-voltage products via McCormick).
"""

from __future__ import annotations

import math

from ..netmodel import PowerNetwork
from . import names as nm
from .instance import GREATER_EQUAL, LESS_EQUAL, EQUAL, InstanceBuilder, UnsupportedModelError

_HALF_PI = math.pi / 2


def build_power_soc(power: PowerNetwork, builder: InstanceBuilder) -> InstanceBuilder:
    """Emit the power-side variables and relaxed constraints into ``builder``."""
    buses = power.bus_map()
    for br in power.branches:
        if not (-_HALF_PI < br.angle_diff_min <= br.angle_diff_max < _HALF_PI):
            raise UnsupportedModelError(
                f"branch '{br.id}': angle difference bounds must lie strictly "
                f"inside (-pi/2, pi/2) for the linear angle cuts to be valid, "
                f"got [{br.angle_diff_min!r}, {br.angle_diff_max!r}]")

    for bus in power.buses:
        builder.add_var(nm.vsq(bus.id), 0.0, bus.v_max ** 2)
        builder.add_binary(nm.z_bus(bus.id))
        # on/off voltage window: z*vmin^2 <= vsq <= z*vmax^2
        builder.add_linear(f"voltage_on_ub[{bus.id}]",
                           {nm.vsq(bus.id): 1.0, nm.z_bus(bus.id): -bus.v_max ** 2},
                           LESS_EQUAL, 0.0)
        builder.add_linear(f"voltage_on_lb[{bus.id}]",
                           {nm.vsq(bus.id): 1.0, nm.z_bus(bus.id): -bus.v_min ** 2},
                           GREATER_EQUAL, 0.0)

    for g in power.generators:
        builder.add_var(nm.pg(g.id), min(0.0, g.s_min.real), max(0.0, g.s_max.real))
        builder.add_var(nm.qg(g.id), min(0.0, g.s_min.imag), max(0.0, g.s_max.imag))
        builder.add_binary(nm.z_gen(g.id))
        builder.add_linear(f"gen_on_p_ub[{g.id}]",
                           {nm.pg(g.id): 1.0, nm.z_gen(g.id): -g.s_max.real},
                           LESS_EQUAL, 0.0)
        builder.add_linear(f"gen_on_p_lb[{g.id}]",
                           {nm.pg(g.id): 1.0, nm.z_gen(g.id): -g.s_min.real},
                           GREATER_EQUAL, 0.0)
        builder.add_linear(f"gen_on_q_ub[{g.id}]",
                           {nm.qg(g.id): 1.0, nm.z_gen(g.id): -g.s_max.imag},
                           LESS_EQUAL, 0.0)
        builder.add_linear(f"gen_on_q_lb[{g.id}]",
                           {nm.qg(g.id): 1.0, nm.z_gen(g.id): -g.s_min.imag},
                           GREATER_EQUAL, 0.0)

    for load in power.loads:
        builder.add_var(nm.z_load(load.id), 0.0, 1.0)

    for sh in power.shunts:
        vmax_sq = buses[sh.bus].v_max ** 2
        builder.add_var(nm.z_shunt(sh.id), 0.0, 1.0)
        builder.add_var(nm.vsq_shunt(sh.id), 0.0, vmax_sq)
        # McCormick envelope of z_shunt * vsq over [0,1] x [0, vmax^2]
        builder.add_linear(f"shunt_mc_lb[{sh.id}]",
                           {nm.vsq_shunt(sh.id): 1.0,
                            nm.z_shunt(sh.id): -vmax_sq,
                            nm.vsq(sh.bus): -1.0},
                           GREATER_EQUAL, -vmax_sq)
        builder.add_linear(f"shunt_mc_ub1[{sh.id}]",
                           {nm.vsq_shunt(sh.id): 1.0, nm.z_shunt(sh.id): -vmax_sq},
                           LESS_EQUAL, 0.0)
        builder.add_linear(f"shunt_mc_ub2[{sh.id}]",
                           {nm.vsq_shunt(sh.id): 1.0, nm.vsq(sh.bus): -1.0},
                           LESS_EQUAL, 0.0)

    for br in power.branches:
        i, j = br.from_bus, br.to_bus
        big_m = buses[i].v_max * buses[j].v_max
        builder.add_var(nm.wr(br.id), 0.0, big_m)  # Re >= 0 under the angle cuts
        builder.add_var(nm.wi(br.id), -big_m, big_m)
        for orient in (nm.pf, nm.qf, nm.pt, nm.qt):
            builder.add_var(orient(br.id), -br.rating, br.rating)

        # Ohm's law, forward:  S_ij = A*vsq_i - B*W_ij
        a = (br.admittance + br.charging_from).conjugate() / abs(br.tap) ** 2
        b = br.admittance.conjugate() / br.tap
        builder.add_linear(f"ohm_from_p[{br.id}]",
                           {nm.pf(br.id): 1.0, nm.vsq(i): -a.real,
                            nm.wr(br.id): b.real, nm.wi(br.id): -b.imag},
                           EQUAL, 0.0)
        builder.add_linear(f"ohm_from_q[{br.id}]",
                           {nm.qf(br.id): 1.0, nm.vsq(i): -a.imag,
                            nm.wr(br.id): b.imag, nm.wi(br.id): b.real},
                           EQUAL, 0.0)
        # Ohm's law, reverse:  S_ji = C*vsq_j - D*conj(W_ij)
        c = (br.admittance + br.charging_to).conjugate()
        d = br.admittance.conjugate() / br.tap.conjugate()
        builder.add_linear(f"ohm_to_p[{br.id}]",
                           {nm.pt(br.id): 1.0, nm.vsq(j): -c.real,
                            nm.wr(br.id): d.real, nm.wi(br.id): d.imag},
                           EQUAL, 0.0)
        builder.add_linear(f"ohm_to_q[{br.id}]",
                           {nm.qt(br.id): 1.0, nm.vsq(j): -c.imag,
                            nm.wr(br.id): d.imag, nm.wi(br.id): -d.real},
                           EQUAL, 0.0)

        # phase-angle difference cuts (valid since Re(W) >= 0)
        builder.add_linear(f"angle_ub[{br.id}]",
                           {nm.wi(br.id): 1.0,
                            nm.wr(br.id): -math.tan(br.angle_diff_max)},
                           LESS_EQUAL, 0.0)
        builder.add_linear(f"angle_lb[{br.id}]",
                           {nm.wi(br.id): 1.0,
                            nm.wr(br.id): -math.tan(br.angle_diff_min)},
                           GREATER_EQUAL, 0.0)

        # de-energized endpoints force the lifted product to zero
        for tag, zvar in (("from", nm.z_bus(i)), ("to", nm.z_bus(j))):
            builder.add_linear(f"w_off_re_{tag}[{br.id}]",
                               {nm.wr(br.id): 1.0, zvar: -big_m}, LESS_EQUAL, 0.0)
            builder.add_linear(f"w_off_im_ub_{tag}[{br.id}]",
                               {nm.wi(br.id): 1.0, zvar: -big_m}, LESS_EQUAL, 0.0)
            builder.add_linear(f"w_off_im_lb_{tag}[{br.id}]",
                               {nm.wi(br.id): -1.0, zvar: -big_m}, LESS_EQUAL, 0.0)

        # rotated cone |W_ij|^2 <= vsq_i vsq_j as a standard cone
        builder.add_soc(f"cone[{br.id}]", "voltage_product",
                        arg_rows=[{nm.wr(br.id): 2.0}, {nm.wi(br.id): 2.0},
                                  {nm.vsq(i): 1.0, nm.vsq(j): -1.0}],
                        arg_offset=[0.0, 0.0, 0.0],
                        rhs={nm.vsq(i): 1.0, nm.vsq(j): 1.0})

        # thermal limits per orientation
        builder.add_soc(f"thermal_from[{br.id}]", "thermal",
                        arg_rows=[{nm.pf(br.id): 1.0}, {nm.qf(br.id): 1.0}],
                        arg_offset=[0.0, 0.0], rhs={}, rhs_offset=br.rating)
        builder.add_soc(f"thermal_to[{br.id}]", "thermal",
                        arg_rows=[{nm.pt(br.id): 1.0}, {nm.qt(br.id): 1.0}],
                        arg_offset=[0.0, 0.0], rhs={}, rhs_offset=br.rating)

    # Kirchhoff balance per bus, real and reactive
    gens_at = power.generators_at()
    loads_at = power.loads_at()
    shunts_at = power.shunts_at()
    branches_from = power.branches_from()
    branches_to = power.branches_to()
    for bus in power.buses:
        for part, tag in ((lambda z: z.real, "p"), (lambda z: z.imag, "q")):
            coeffs: dict[str, float] = {}
            gvar = nm.pg if tag == "p" else nm.qg
            for g in gens_at[bus.id]:
                coeffs[gvar(g.id)] = 1.0
            for load in loads_at[bus.id]:
                coeffs[nm.z_load(load.id)] = -part(load.demand)
            for sh in shunts_at[bus.id]:
                coeffs[nm.vsq_shunt(sh.id)] = -part(sh.admittance)
            flow = nm.pf if tag == "p" else nm.qf
            for br in branches_from[bus.id]:
                coeffs[flow(br.id)] = coeffs.get(flow(br.id), 0.0) - 1.0
            flow = nm.pt if tag == "p" else nm.qt
            for br in branches_to[bus.id]:
                coeffs[flow(br.id)] = coeffs.get(flow(br.id), 0.0) - 1.0
            builder.add_linear(f"balance_{tag}[{bus.id}]", coeffs, EQUAL, 0.0)

    return builder
