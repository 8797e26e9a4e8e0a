"""Joint gas-power transmission network data model.

Immutable dataclasses for the power grid, the gas pipeline system, and the
generator-to-delivery fuel links, plus the JSON document format (parse/emit),
validation, and derived adjacency. Power quantities are per-unit on
``base_mva``; gas quantities are SI (Pa, kg/s). Link coefficients map
per-unit real power to kg/s of gas demand.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields, replace
from typing import Iterable


class NetworkDataError(Exception):
    """Base class for network document problems."""


class DocumentSyntaxError(NetworkDataError):
    """Malformed JSON or missing/ill-typed fields (position-reported when possible)."""


class UnknownReferenceError(NetworkDataError):
    """A component references a bus/junction/generator/delivery that does not exist."""


class DuplicateIdError(NetworkDataError):
    """Two components of the same system share an identifier."""


class BoundViolationError(NetworkDataError):
    """A numeric field violates its documented bound."""


@dataclass(frozen=True)
class Violation:
    """One invariant violation: which entity, which rule, what was observed."""

    entity: str
    rule: str
    observed: str
    kind: str  # "duplicate_id" | "unknown_reference" | "bound"

    def __str__(self) -> str:
        return f"{self.entity}: {self.rule} (observed {self.observed})"


_VIOLATION_ERRORS = {
    "duplicate_id": DuplicateIdError,
    "unknown_reference": UnknownReferenceError,
    "bound": BoundViolationError,
}


# --------------------------------------------------------------------------
# Power system types (per-unit)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Bus:
    id: str
    v_min: float
    v_max: float


@dataclass(frozen=True)
class Branch:
    """A transmission line or transformer, stored in its forward orientation.

    The reverse orientation is always derived, never stored; ``charging_from``
    applies at the from side and ``charging_to`` at the to side.
    """

    id: str
    from_bus: str
    to_bus: str
    admittance: complex
    rating: float
    angle_diff_min: float
    angle_diff_max: float
    charging_from: complex = 0j
    charging_to: complex = 0j
    tap: complex = 1 + 0j


@dataclass(frozen=True)
class Generator:
    id: str
    bus: str
    s_min: complex
    s_max: complex


@dataclass(frozen=True)
class PowerLoad:
    id: str
    bus: str
    demand: complex
    priority: float = 1.0


@dataclass(frozen=True)
class Shunt:
    id: str
    bus: str
    admittance: complex


@dataclass(frozen=True)
class PowerNetwork:
    buses: tuple[Bus, ...] = ()
    branches: tuple[Branch, ...] = ()
    generators: tuple[Generator, ...] = ()
    loads: tuple[PowerLoad, ...] = ()
    shunts: tuple[Shunt, ...] = ()
    base_mva: float = 100.0

    def bus_map(self) -> dict[str, Bus]:
        return {b.id: b for b in self.buses}

    def generators_at(self) -> dict[str, list[Generator]]:
        out: dict[str, list[Generator]] = {b.id: [] for b in self.buses}
        for g in self.generators:
            out.setdefault(g.bus, []).append(g)
        return out

    def loads_at(self) -> dict[str, list[PowerLoad]]:
        out: dict[str, list[PowerLoad]] = {b.id: [] for b in self.buses}
        for l in self.loads:
            out.setdefault(l.bus, []).append(l)
        return out

    def shunts_at(self) -> dict[str, list[Shunt]]:
        out: dict[str, list[Shunt]] = {b.id: [] for b in self.buses}
        for s in self.shunts:
            out.setdefault(s.bus, []).append(s)
        return out

    def branches_from(self) -> dict[str, list[Branch]]:
        """Forward-orientation incidence: branches whose from side is the bus."""
        out: dict[str, list[Branch]] = {b.id: [] for b in self.buses}
        for br in self.branches:
            out.setdefault(br.from_bus, []).append(br)
        return out

    def branches_to(self) -> dict[str, list[Branch]]:
        """Reverse-orientation incidence: branches whose to side is the bus."""
        out: dict[str, list[Branch]] = {b.id: [] for b in self.buses}
        for br in self.branches:
            out.setdefault(br.to_bus, []).append(br)
        return out


# --------------------------------------------------------------------------
# Gas system types (SI)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Junction:
    id: str
    p_min: float
    p_max: float


@dataclass(frozen=True)
class Receipt:
    id: str
    junction: str
    s_max: float


@dataclass(frozen=True)
class Delivery:
    id: str
    junction: str
    d_max: float
    priority: float = 1.0


@dataclass(frozen=True)
class Pipe:
    id: str
    from_junction: str
    to_junction: str
    resistance: float  # Pa^2 s^2 / kg^2, squared-pressure drop per squared flow
    f_min: float | None = None
    f_max: float | None = None

    kind = "pipe"


@dataclass(frozen=True)
class ShortPipe:
    id: str
    from_junction: str
    to_junction: str
    f_min: float | None = None
    f_max: float | None = None

    kind = "short_pipe"


@dataclass(frozen=True)
class Resistor:
    id: str
    from_junction: str
    to_junction: str
    resistance: float  # Pa s^2 / kg^2, pressure drop per squared flow
    f_min: float | None = None
    f_max: float | None = None

    kind = "resistor"


@dataclass(frozen=True)
class Valve:
    id: str
    from_junction: str
    to_junction: str
    f_min: float | None = None
    f_max: float | None = None

    kind = "valve"


@dataclass(frozen=True)
class Regulator:
    """Pressure-reducing valve. Ratio bounds are fixed at [0, 1] and documents
    may not override them."""

    id: str
    from_junction: str
    to_junction: str
    f_min: float | None = None
    f_max: float | None = None

    kind = "regulator"
    ratio_min = 0.0
    ratio_max = 1.0


@dataclass(frozen=True)
class Compressor:
    id: str
    from_junction: str
    to_junction: str
    ratio_min: float
    ratio_max: float
    f_min: float | None = None
    f_max: float | None = None

    kind = "compressor"


GasArc = Pipe | ShortPipe | Resistor | Valve | Regulator | Compressor


@dataclass(frozen=True)
class GasNetwork:
    junctions: tuple[Junction, ...] = ()
    receipts: tuple[Receipt, ...] = ()
    deliveries: tuple[Delivery, ...] = ()
    pipes: tuple[Pipe, ...] = ()
    short_pipes: tuple[ShortPipe, ...] = ()
    resistors: tuple[Resistor, ...] = ()
    valves: tuple[Valve, ...] = ()
    regulators: tuple[Regulator, ...] = ()
    compressors: tuple[Compressor, ...] = ()

    def junction_map(self) -> dict[str, Junction]:
        return {j.id: j for j in self.junctions}

    def arcs(self) -> tuple[GasArc, ...]:
        """All junction-connecting components, in document order."""
        return (self.pipes + self.short_pipes + self.resistors
                + self.valves + self.regulators + self.compressors)

    def receipts_at(self) -> dict[str, list[Receipt]]:
        out: dict[str, list[Receipt]] = {j.id: [] for j in self.junctions}
        for r in self.receipts:
            out.setdefault(r.junction, []).append(r)
        return out

    def deliveries_at(self) -> dict[str, list[Delivery]]:
        out: dict[str, list[Delivery]] = {j.id: [] for j in self.junctions}
        for d in self.deliveries:
            out.setdefault(d.junction, []).append(d)
        return out

    def arcs_from(self) -> dict[str, list[GasArc]]:
        """Arcs directed out of each junction (tail incidence)."""
        out: dict[str, list[GasArc]] = {j.id: [] for j in self.junctions}
        for a in self.arcs():
            out.setdefault(a.from_junction, []).append(a)
        return out

    def arcs_to(self) -> dict[str, list[GasArc]]:
        """Arcs directed into each junction (head incidence)."""
        out: dict[str, list[GasArc]] = {j.id: [] for j in self.junctions}
        for a in self.arcs():
            out.setdefault(a.to_junction, []).append(a)
        return out

    def total_supply(self) -> float:
        return sum(r.s_max for r in self.receipts)


# --------------------------------------------------------------------------
# Joint network
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Link:
    """Fuel link from a gas delivery to a gas-fired generator.

    ``h1``/``h2``/``h3`` are the quadratic/linear/commitment coefficients of
    the heat rate curve; ``h1 >= 0`` keeps the curve convex.
    """

    generator_id: str
    delivery_id: str
    h1: float
    h2: float
    h3: float


@dataclass(frozen=True)
class JointNetwork:
    power: PowerNetwork
    gas: GasNetwork
    links: tuple[Link, ...] = ()
    name: str = ""

    def linked_delivery_ids(self) -> set[str]:
        """Deliveries that feed gas-fired generators."""
        return {lk.delivery_id for lk in self.links}

    def nongeneration_deliveries(self) -> tuple[Delivery, ...]:
        """Deliveries contributing to the gas-delivery objective."""
        linked = self.linked_delivery_ids()
        return tuple(d for d in self.gas.deliveries if d.id not in linked)

    def links_by_delivery(self) -> dict[str, list[Link]]:
        out: dict[str, list[Link]] = {}
        for lk in self.links:
            out.setdefault(lk.delivery_id, []).append(lk)
        return out


# --------------------------------------------------------------------------
# Validation
# --------------------------------------------------------------------------

def _check_unique(items: Iterable[str], label: str, out: list[Violation]) -> None:
    seen: set[str] = set()
    for ident in items:
        if ident in seen:
            out.append(Violation(f"{label} '{ident}'", "duplicate id", ident,
                                 "duplicate_id"))
        seen.add(ident)


def validate(net: JointNetwork) -> list[Violation]:
    """Check every data-model invariant; empty list means valid.

    Total on arbitrary parsed input: violations are returned as data, never
    raised.
    """
    v: list[Violation] = []
    pw, gas = net.power, net.gas

    _check_unique((b.id for b in pw.buses), "bus", v)
    _check_unique((b.id for b in pw.branches), "branch", v)
    _check_unique((g.id for g in pw.generators), "generator", v)
    _check_unique((l.id for l in pw.loads), "load", v)
    _check_unique((s.id for s in pw.shunts), "shunt", v)
    _check_unique((j.id for j in gas.junctions), "junction", v)
    _check_unique((r.id for r in gas.receipts), "receipt", v)
    _check_unique((d.id for d in gas.deliveries), "delivery", v)
    _check_unique((a.id for a in gas.arcs()), "gas component", v)

    bus_ids = {b.id for b in pw.buses}
    for b in pw.buses:
        if b.v_min < 0:
            v.append(Violation(f"bus '{b.id}'", "v_min must be nonnegative",
                               repr(b.v_min), "bound"))
        if b.v_min > b.v_max:
            v.append(Violation(f"bus '{b.id}'", "v_min > v_max",
                               f"{b.v_min!r} > {b.v_max!r}", "bound"))
    half_pi = math.pi / 2
    for br in pw.branches:
        for side, ref in (("from_bus", br.from_bus), ("to_bus", br.to_bus)):
            if ref not in bus_ids:
                v.append(Violation(f"branch '{br.id}'",
                                   f"unknown reference: {side} '{ref}'",
                                   ref, "unknown_reference"))
        if not br.rating > 0:
            v.append(Violation(f"branch '{br.id}'", "rating must be positive",
                               repr(br.rating), "bound"))
        if not (-half_pi <= br.angle_diff_min <= br.angle_diff_max <= half_pi):
            v.append(Violation(
                f"branch '{br.id}'",
                "angle difference bounds must satisfy -pi/2 <= min <= max <= pi/2",
                f"[{br.angle_diff_min!r}, {br.angle_diff_max!r}]", "bound"))
    for g in pw.generators:
        if g.bus not in bus_ids:
            v.append(Violation(f"generator '{g.id}'",
                               f"unknown reference: bus '{g.bus}'", g.bus,
                               "unknown_reference"))
        if g.s_min.real > g.s_max.real or g.s_min.imag > g.s_max.imag:
            v.append(Violation(f"generator '{g.id}'",
                               "s_min must be componentwise <= s_max",
                               f"{g.s_min!r} vs {g.s_max!r}", "bound"))
    for l in pw.loads:
        if l.bus not in bus_ids:
            v.append(Violation(f"load '{l.id}'",
                               f"unknown reference: bus '{l.bus}'", l.bus,
                               "unknown_reference"))
        if l.priority < 0:
            v.append(Violation(f"load '{l.id}'", "priority must be nonnegative",
                               repr(l.priority), "bound"))
    for s in pw.shunts:
        if s.bus not in bus_ids:
            v.append(Violation(f"shunt '{s.id}'",
                               f"unknown reference: bus '{s.bus}'", s.bus,
                               "unknown_reference"))

    junction_ids = {j.id for j in gas.junctions}
    for j in gas.junctions:
        if not 0 <= j.p_min:
            v.append(Violation(f"junction '{j.id}'", "p_min must be nonnegative",
                               repr(j.p_min), "bound"))
        if j.p_min > j.p_max:
            v.append(Violation(f"junction '{j.id}'", "p_min > p_max",
                               f"{j.p_min!r} > {j.p_max!r}", "bound"))
    for r in gas.receipts:
        if r.junction not in junction_ids:
            v.append(Violation(f"receipt '{r.id}'",
                               f"unknown reference: junction '{r.junction}'",
                               r.junction, "unknown_reference"))
        if r.s_max < 0:
            v.append(Violation(f"receipt '{r.id}'", "s_max must be nonnegative",
                               repr(r.s_max), "bound"))
    for d in gas.deliveries:
        if d.junction not in junction_ids:
            v.append(Violation(f"delivery '{d.id}'",
                               f"unknown reference: junction '{d.junction}'",
                               d.junction, "unknown_reference"))
        if d.d_max < 0:
            v.append(Violation(f"delivery '{d.id}'", "d_max must be nonnegative",
                               repr(d.d_max), "bound"))
        if d.priority < 0:
            v.append(Violation(f"delivery '{d.id}'", "priority must be nonnegative",
                               repr(d.priority), "bound"))
    for a in gas.arcs():
        label = f"{a.kind.replace('_', ' ')} '{a.id}'"
        for side, ref in (("from_junction", a.from_junction),
                          ("to_junction", a.to_junction)):
            if ref not in junction_ids:
                v.append(Violation(label, f"unknown reference: {side} '{ref}'",
                                   ref, "unknown_reference"))
        if a.f_min is not None and a.f_max is not None and a.f_min > a.f_max:
            v.append(Violation(label, "flow bounds inverted (f_min > f_max)",
                               f"{a.f_min!r} > {a.f_max!r}", "bound"))
        if isinstance(a, Pipe) and a.resistance < 0:
            v.append(Violation(label, "resistance must be nonnegative",
                               repr(a.resistance), "bound"))
        if isinstance(a, Resistor) and a.resistance < 0:
            v.append(Violation(label, "resistance must be nonnegative",
                               repr(a.resistance), "bound"))
        if isinstance(a, Compressor):
            if not 0 <= a.ratio_min <= a.ratio_max:
                v.append(Violation(label, "ratio bounds inverted",
                                   f"[{a.ratio_min!r}, {a.ratio_max!r}]", "bound"))

    gen_ids = {g.id for g in pw.generators}
    delivery_ids = {d.id for d in gas.deliveries}
    targeted: set[str] = set()
    for lk in net.links:
        label = f"link '{lk.generator_id}->{lk.delivery_id}'"
        if lk.generator_id not in gen_ids:
            v.append(Violation(label,
                               f"unknown reference: generator '{lk.generator_id}'",
                               lk.generator_id, "unknown_reference"))
        if lk.delivery_id not in delivery_ids:
            v.append(Violation(label,
                               f"unknown reference: delivery '{lk.delivery_id}'",
                               lk.delivery_id, "unknown_reference"))
        if lk.h1 < 0:
            v.append(Violation(label, "bound violation: h1 must be nonnegative",
                               repr(lk.h1), "bound"))
        if lk.delivery_id in targeted:
            v.append(Violation(label,
                               "delivery targeted by more than one link",
                               lk.delivery_id, "duplicate_id"))
        targeted.add(lk.delivery_id)

    return v


# --------------------------------------------------------------------------
# JSON document format
# --------------------------------------------------------------------------

def _cplx(value: object, where: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2
            or not all(isinstance(c, (int, float)) for c in value)):
        raise DocumentSyntaxError(
            f"{where}: complex values must be two-element [re, im] arrays, got {value!r}")
    return complex(value[0], value[1])


def _num(value: object, where: str) -> float:
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise DocumentSyntaxError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _opt_num(obj: dict, key: str, where: str) -> float | None:
    if key not in obj or obj[key] is None:
        return None
    return _num(obj[key], f"{where}.{key}")


def _str(value: object, where: str) -> str:
    if not isinstance(value, str):
        raise DocumentSyntaxError(f"{where}: expected a string, got {value!r}")
    return value


def _req(obj: dict, key: str, where: str) -> object:
    if key not in obj:
        raise DocumentSyntaxError(f"{where}: missing required field '{key}'")
    return obj[key]


def _seq(obj: dict, key: str, where: str) -> list[dict]:
    raw = obj.get(key, [])
    if not isinstance(raw, list):
        raise DocumentSyntaxError(f"{where}.{key}: expected an array")
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise DocumentSyntaxError(f"{where}.{key}[{i}]: expected an object")
    return raw


def parse_joint_network(document: str) -> JointNetwork:
    """Parse and fully validate a joint network JSON document.

    Raises DocumentSyntaxError (position-reported), UnknownReferenceError,
    DuplicateIdError, or BoundViolationError; each names the offending entity.
    """
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(
            f"syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise DocumentSyntaxError("top level must be an object")
    net = joint_network_from_dict(doc)
    violations = validate(net)
    if violations:
        first = violations[0]
        raise _VIOLATION_ERRORS[first.kind]("; ".join(str(x) for x in violations))
    return net


def joint_network_from_dict(doc: dict) -> JointNetwork:
    """Build the (unvalidated) network from a decoded document."""
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise DocumentSyntaxError("meta: expected an object")
    name = _str(meta.get("name", ""), "meta.name")
    base_mva = _num(meta.get("base_mva", 100.0), "meta.base_mva")

    pw_doc = doc.get("power", {})
    if not isinstance(pw_doc, dict):
        raise DocumentSyntaxError("power: expected an object")
    buses = tuple(
        Bus(id=_str(_req(b, "id", w), f"{w}.id"),
            v_min=_num(_req(b, "v_min", w), f"{w}.v_min"),
            v_max=_num(_req(b, "v_max", w), f"{w}.v_max"))
        for i, b in enumerate(_seq(pw_doc, "buses", "power"))
        for w in (f"power.buses[{i}]",))
    branches = tuple(
        Branch(id=_str(_req(b, "id", w), f"{w}.id"),
               from_bus=_str(_req(b, "from_bus", w), f"{w}.from_bus"),
               to_bus=_str(_req(b, "to_bus", w), f"{w}.to_bus"),
               admittance=_cplx(_req(b, "admittance", w), f"{w}.admittance"),
               rating=_num(_req(b, "rating", w), f"{w}.rating"),
               angle_diff_min=_num(_req(b, "angle_diff_min", w), f"{w}.angle_diff_min"),
               angle_diff_max=_num(_req(b, "angle_diff_max", w), f"{w}.angle_diff_max"),
               charging_from=_cplx(b.get("charging_from", [0, 0]), f"{w}.charging_from"),
               charging_to=_cplx(b.get("charging_to", [0, 0]), f"{w}.charging_to"),
               tap=_cplx(b.get("tap", [1, 0]), f"{w}.tap"))
        for i, b in enumerate(_seq(pw_doc, "branches", "power"))
        for w in (f"power.branches[{i}]",))
    generators = tuple(
        Generator(id=_str(_req(g, "id", w), f"{w}.id"),
                  bus=_str(_req(g, "bus", w), f"{w}.bus"),
                  s_min=_cplx(_req(g, "s_min", w), f"{w}.s_min"),
                  s_max=_cplx(_req(g, "s_max", w), f"{w}.s_max"))
        for i, g in enumerate(_seq(pw_doc, "generators", "power"))
        for w in (f"power.generators[{i}]",))
    loads = tuple(
        PowerLoad(id=_str(_req(l, "id", w), f"{w}.id"),
                  bus=_str(_req(l, "bus", w), f"{w}.bus"),
                  demand=_cplx(_req(l, "demand", w), f"{w}.demand"),
                  priority=_num(l.get("priority", 1.0), f"{w}.priority"))
        for i, l in enumerate(_seq(pw_doc, "loads", "power"))
        for w in (f"power.loads[{i}]",))
    shunts = tuple(
        Shunt(id=_str(_req(s, "id", w), f"{w}.id"),
              bus=_str(_req(s, "bus", w), f"{w}.bus"),
              admittance=_cplx(_req(s, "admittance", w), f"{w}.admittance"))
        for i, s in enumerate(_seq(pw_doc, "shunts", "power"))
        for w in (f"power.shunts[{i}]",))
    power = PowerNetwork(buses=buses, branches=branches, generators=generators,
                         loads=loads, shunts=shunts, base_mva=base_mva)

    gas_doc = doc.get("gas", {})
    if not isinstance(gas_doc, dict):
        raise DocumentSyntaxError("gas: expected an object")

    def arc_common(a: dict, w: str) -> dict:
        return dict(id=_str(_req(a, "id", w), f"{w}.id"),
                    from_junction=_str(_req(a, "from_junction", w), f"{w}.from_junction"),
                    to_junction=_str(_req(a, "to_junction", w), f"{w}.to_junction"),
                    f_min=_opt_num(a, "f_min", w),
                    f_max=_opt_num(a, "f_max", w))

    junctions = tuple(
        Junction(id=_str(_req(j, "id", w), f"{w}.id"),
                 p_min=_num(_req(j, "p_min", w), f"{w}.p_min"),
                 p_max=_num(_req(j, "p_max", w), f"{w}.p_max"))
        for i, j in enumerate(_seq(gas_doc, "junctions", "gas"))
        for w in (f"gas.junctions[{i}]",))
    receipts = tuple(
        Receipt(id=_str(_req(r, "id", w), f"{w}.id"),
                junction=_str(_req(r, "junction", w), f"{w}.junction"),
                s_max=_num(_req(r, "s_max", w), f"{w}.s_max"))
        for i, r in enumerate(_seq(gas_doc, "receipts", "gas"))
        for w in (f"gas.receipts[{i}]",))
    deliveries = tuple(
        Delivery(id=_str(_req(d, "id", w), f"{w}.id"),
                 junction=_str(_req(d, "junction", w), f"{w}.junction"),
                 d_max=_num(_req(d, "d_max", w), f"{w}.d_max"),
                 priority=_num(d.get("priority", 1.0), f"{w}.priority"))
        for i, d in enumerate(_seq(gas_doc, "deliveries", "gas"))
        for w in (f"gas.deliveries[{i}]",))
    pipes = tuple(
        Pipe(resistance=_num(_req(p, "resistance", w), f"{w}.resistance"),
             **arc_common(p, w))
        for i, p in enumerate(_seq(gas_doc, "pipes", "gas"))
        for w in (f"gas.pipes[{i}]",))
    short_pipes = tuple(
        ShortPipe(**arc_common(p, w))
        for i, p in enumerate(_seq(gas_doc, "short_pipes", "gas"))
        for w in (f"gas.short_pipes[{i}]",))
    resistors = tuple(
        Resistor(resistance=_num(_req(r, "resistance", w), f"{w}.resistance"),
                 **arc_common(r, w))
        for i, r in enumerate(_seq(gas_doc, "resistors", "gas"))
        for w in (f"gas.resistors[{i}]",))
    valves = tuple(
        Valve(**arc_common(a, w))
        for i, a in enumerate(_seq(gas_doc, "valves", "gas"))
        for w in (f"gas.valves[{i}]",))
    regulators = tuple(
        Regulator(**arc_common(a, w))
        for i, a in enumerate(_seq(gas_doc, "regulators", "gas"))
        for w in (f"gas.regulators[{i}]",))
    compressors = tuple(
        Compressor(ratio_min=_num(_req(c, "ratio_min", w), f"{w}.ratio_min"),
                   ratio_max=_num(_req(c, "ratio_max", w), f"{w}.ratio_max"),
                   **arc_common(c, w))
        for i, c in enumerate(_seq(gas_doc, "compressors", "gas"))
        for w in (f"gas.compressors[{i}]",))
    gas = GasNetwork(junctions=junctions, receipts=receipts, deliveries=deliveries,
                     pipes=pipes, short_pipes=short_pipes, resistors=resistors,
                     valves=valves, regulators=regulators, compressors=compressors)

    links_doc = doc.get("links", [])
    if not isinstance(links_doc, list):
        raise DocumentSyntaxError("links: expected an array")
    links = tuple(
        Link(generator_id=_str(_req(lk, "generator_id", w), f"{w}.generator_id"),
             delivery_id=_str(_req(lk, "delivery_id", w), f"{w}.delivery_id"),
             h1=_num(lk.get("h1", 0.0), f"{w}.h1"),
             h2=_num(lk.get("h2", 0.0), f"{w}.h2"),
             h3=_num(lk.get("h3", 0.0), f"{w}.h3"))
        for i, lk in enumerate(links_doc)
        for w in (f"links[{i}]",)
        if isinstance(lk, dict) or _bad_link(i))

    return JointNetwork(power=power, gas=gas, links=links, name=name)


def _bad_link(i: int) -> bool:
    raise DocumentSyntaxError(f"links[{i}]: expected an object")


def _c2(z: complex) -> list[float]:
    return [z.real, z.imag]


def joint_network_to_dict(net: JointNetwork) -> dict:
    """Document form of a network; inverse of joint_network_from_dict."""
    pw, gas = net.power, net.gas
    return {
        "meta": {"name": net.name, "base_mva": pw.base_mva},
        "power": {
            "buses": [{"id": b.id, "v_min": b.v_min, "v_max": b.v_max}
                      for b in pw.buses],
            "branches": [{"id": b.id, "from_bus": b.from_bus, "to_bus": b.to_bus,
                          "admittance": _c2(b.admittance), "rating": b.rating,
                          "angle_diff_min": b.angle_diff_min,
                          "angle_diff_max": b.angle_diff_max,
                          "charging_from": _c2(b.charging_from),
                          "charging_to": _c2(b.charging_to),
                          "tap": _c2(b.tap)}
                         for b in pw.branches],
            "generators": [{"id": g.id, "bus": g.bus, "s_min": _c2(g.s_min),
                            "s_max": _c2(g.s_max)} for g in pw.generators],
            "loads": [{"id": l.id, "bus": l.bus, "demand": _c2(l.demand),
                       "priority": l.priority} for l in pw.loads],
            "shunts": [{"id": s.id, "bus": s.bus, "admittance": _c2(s.admittance)}
                       for s in pw.shunts],
        },
        "gas": {
            "junctions": [{"id": j.id, "p_min": j.p_min, "p_max": j.p_max}
                          for j in gas.junctions],
            "receipts": [{"id": r.id, "junction": r.junction, "s_max": r.s_max}
                         for r in gas.receipts],
            "deliveries": [{"id": d.id, "junction": d.junction, "d_max": d.d_max,
                            "priority": d.priority} for d in gas.deliveries],
            "pipes": [{"id": p.id, "from_junction": p.from_junction,
                       "to_junction": p.to_junction, "resistance": p.resistance,
                       "f_min": p.f_min, "f_max": p.f_max} for p in gas.pipes],
            "short_pipes": [{"id": p.id, "from_junction": p.from_junction,
                             "to_junction": p.to_junction,
                             "f_min": p.f_min, "f_max": p.f_max}
                            for p in gas.short_pipes],
            "resistors": [{"id": r.id, "from_junction": r.from_junction,
                           "to_junction": r.to_junction, "resistance": r.resistance,
                           "f_min": r.f_min, "f_max": r.f_max}
                          for r in gas.resistors],
            "valves": [{"id": a.id, "from_junction": a.from_junction,
                        "to_junction": a.to_junction,
                        "f_min": a.f_min, "f_max": a.f_max} for a in gas.valves],
            "regulators": [{"id": a.id, "from_junction": a.from_junction,
                            "to_junction": a.to_junction,
                            "f_min": a.f_min, "f_max": a.f_max}
                           for a in gas.regulators],
            "compressors": [{"id": c.id, "from_junction": c.from_junction,
                             "to_junction": c.to_junction,
                             "ratio_min": c.ratio_min, "ratio_max": c.ratio_max,
                             "f_min": c.f_min, "f_max": c.f_max}
                            for c in gas.compressors],
        },
        "links": [{"generator_id": lk.generator_id, "delivery_id": lk.delivery_id,
                   "h1": lk.h1, "h2": lk.h2, "h3": lk.h3} for lk in net.links],
    }


def emit_joint_network(net: JointNetwork) -> str:
    """JSON text for a network; parse_joint_network round-trips it exactly."""
    return json.dumps(joint_network_to_dict(net), indent=2)
