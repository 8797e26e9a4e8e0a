"""Solver-form representation of the relaxed maximal-load-delivery problem.

An instance is a box-bounded mixed-binary linear program augmented with smooth
convex inequalities g(x) <= 0 that expose value and subgradient evaluation so
an outer-approximation loop can cut them. Two convex classes cover everything
the relaxation emits: separable convex quadratics and second-order cones in
norm form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

CONTINUOUS = "continuous"
BINARY = "binary"

LESS_EQUAL = "<="
EQUAL = "="
GREATER_EQUAL = ">="


class InstanceError(ValueError):
    """Inconsistent instance construction (duplicate names, bad bounds...)."""


class UnsupportedModelError(ValueError):
    """Network data outside what the relaxation supports."""


class DegenerateObjectiveError(ValueError):
    """Both objective normalizers vanish; the MLD objective is constant."""


@dataclass(frozen=True)
class Var:
    name: str
    kind: str = CONTINUOUS
    lower: float = -math.inf
    upper: float = math.inf


@dataclass(frozen=True)
class LinearConstraint:
    name: str
    coeffs: tuple[tuple[str, float], ...]  # (variable, coefficient) pairs
    sense: str
    rhs: float

    def coeff_map(self) -> dict[str, float]:
        return dict(self.coeffs)


@dataclass(frozen=True)
class LinearForm:
    """c.x + constant, used for objectives and the delivery fractions."""

    coeffs: tuple[tuple[str, float], ...]
    constant: float = 0.0

    def value(self, assignment: dict[str, float]) -> float:
        return self.constant + sum(c * assignment[n] for n, c in self.coeffs)

    def scaled(self, factor: float) -> "LinearForm":
        return LinearForm(tuple((n, c * factor) for n, c in self.coeffs),
                          self.constant * factor)


def combine_forms(*parts: tuple[float, LinearForm]) -> LinearForm:
    acc: dict[str, float] = {}
    constant = 0.0
    for weight, form in parts:
        constant += weight * form.constant
        for name, coef in form.coeffs:
            acc[name] = acc.get(name, 0.0) + weight * coef
    return LinearForm(tuple(acc.items()), constant)


@dataclass(frozen=True)
class ConvexQuadratic:
    """g(x) = sum_i quad_i x_i^2 + sum_i lin_i x_i + constant <= 0, quad >= 0."""

    name: str
    label: str
    var_names: tuple[str, ...]
    quad: tuple[float, ...]
    lin: tuple[float, ...]
    constant: float = 0.0

    def value(self, x: np.ndarray) -> float:
        q = np.asarray(self.quad)
        l = np.asarray(self.lin)
        return float(np.dot(q, x * x) + np.dot(l, x) + self.constant)

    def grad(self, x: np.ndarray) -> np.ndarray:
        return 2.0 * np.asarray(self.quad) * x + np.asarray(self.lin)

    def manifest(self) -> dict:
        return {"name": self.name, "kind": "quadratic", "label": self.label,
                "vars": list(self.var_names), "quad": list(self.quad),
                "lin": list(self.lin), "constant": self.constant}


# Below this norm the cone argument is treated as being at the kink and the
# w=0 subgradient (the negated right-hand side) is used; violated points there
# have a negative right-hand side, so the resulting cut is still supporting.
_CONE_KINK = 1e-10


@dataclass(frozen=True)
class SecondOrderCone:
    """g(x) = ||A x + b|| - (c.x + d) <= 0 in norm form."""

    name: str
    label: str
    var_names: tuple[str, ...]
    arg_rows: tuple[tuple[float, ...], ...]
    arg_offset: tuple[float, ...]
    rhs_coeffs: tuple[float, ...]
    rhs_offset: float = 0.0

    def _arg(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(self.arg_rows) @ x + np.asarray(self.arg_offset)

    def value(self, x: np.ndarray) -> float:
        rhs = float(np.dot(self.rhs_coeffs, x)) + self.rhs_offset
        return float(np.linalg.norm(self._arg(x))) - rhs

    def grad(self, x: np.ndarray) -> np.ndarray:
        u = self._arg(x)
        norm = float(np.linalg.norm(u))
        c = np.asarray(self.rhs_coeffs, dtype=float)
        if norm < _CONE_KINK:
            return -c
        return np.asarray(self.arg_rows).T @ (u / norm) - c

    def manifest(self) -> dict:
        return {"name": self.name, "kind": "second_order_cone", "label": self.label,
                "vars": list(self.var_names),
                "arg_rows": [list(r) for r in self.arg_rows],
                "arg_offset": list(self.arg_offset),
                "rhs_coeffs": list(self.rhs_coeffs),
                "rhs_offset": self.rhs_offset}


ConvexIneq = ConvexQuadratic | SecondOrderCone


@dataclass(frozen=True)
class MicpInstance:
    variables: tuple[Var, ...]
    linear_constraints: tuple[LinearConstraint, ...]
    convex_constraints: tuple[ConvexIneq, ...]
    objective: LinearForm  # sense: maximize
    eta_gas: LinearForm = LinearForm((), 1.0)
    eta_power: LinearForm = LinearForm((), 1.0)
    gas_degenerate: bool = False
    power_degenerate: bool = False
    var_index: dict[str, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.var_index:
            object.__setattr__(self, "var_index",
                               {v.name: i for i, v in enumerate(self.variables)})
        if len(self.var_index) != len(self.variables):
            raise InstanceError("duplicate variable names")
        for v in self.variables:
            if v.kind == BINARY and (v.lower, v.upper) != (0.0, 1.0):
                raise InstanceError(f"binary variable {v.name} must have bounds {{0,1}}")
            if not (math.isfinite(v.lower) and math.isfinite(v.upper)):
                raise InstanceError(f"variable {v.name} has non-finite bounds")
            if v.lower > v.upper:
                raise InstanceError(f"variable {v.name} has inverted bounds")

    def binaries(self) -> tuple[Var, ...]:
        return tuple(v for v in self.variables if v.kind == BINARY)

    def columns(self, names: tuple[str, ...]) -> np.ndarray:
        return np.array([self.var_index[n] for n in names], dtype=int)

    def with_objective(self, objective: LinearForm) -> "MicpInstance":
        return replace(self, objective=objective, var_index=self.var_index)

    def with_extra_linear(self, extra: tuple[LinearConstraint, ...]) -> "MicpInstance":
        return replace(self, linear_constraints=self.linear_constraints + tuple(extra),
                       var_index=self.var_index)

    # -- diagnostics -------------------------------------------------------

    def check_gradients(self, rng: np.random.Generator, samples: int = 5,
                        tol: float = 1e-5, step: float = 1e-7) -> float:
        """Max |finite-difference - analytic| gradient error over random
        interior points; raises InstanceError above ``tol``."""
        worst = 0.0
        for con in self.convex_constraints:
            bounds = [(self.variables[self.var_index[n]].lower,
                       self.variables[self.var_index[n]].upper)
                      for n in con.var_names]
            for _ in range(samples):
                x = np.array([lo + (hi - lo) * rng.uniform(0.25, 0.75)
                              for lo, hi in bounds])
                g = con.grad(x)
                for j in range(len(x)):
                    xp = x.copy(); xp[j] += step
                    xm = x.copy(); xm[j] -= step
                    fd = (con.value(xp) - con.value(xm)) / (2 * step)
                    worst = max(worst, abs(fd - g[j]))
        if worst > tol:
            raise InstanceError(f"subgradient mismatch {worst:.3e} exceeds {tol:g}")
        return worst

    def linear_violation(self, assignment: dict[str, float]) -> float:
        """Max violation of linear constraints and variable bounds."""
        worst = 0.0
        for v in self.variables:
            val = assignment[v.name]
            worst = max(worst, v.lower - val, val - v.upper)
        for con in self.linear_constraints:
            lhs = sum(c * assignment[n] for n, c in con.coeffs)
            if con.sense == LESS_EQUAL:
                worst = max(worst, lhs - con.rhs)
            elif con.sense == GREATER_EQUAL:
                worst = max(worst, con.rhs - lhs)
            else:
                worst = max(worst, abs(lhs - con.rhs))
        return worst

    def convex_violation(self, assignment: dict[str, float]) -> float:
        worst = 0.0
        for con in self.convex_constraints:
            x = np.array([assignment[n] for n in con.var_names])
            worst = max(worst, con.value(x))
        return worst

    def max_violation(self, assignment: dict[str, float]) -> float:
        return max(self.linear_violation(assignment),
                   self.convex_violation(assignment))


class InstanceBuilder:
    """Accumulates variables and constraints from the relaxation builders."""

    def __init__(self):
        self.variables: list[Var] = []
        self.linear: list[LinearConstraint] = []
        self.convex: list[ConvexIneq] = []
        self._names: set[str] = set()
        self._con_names: set[str] = set()

    def add_var(self, name: str, lower: float, upper: float,
                kind: str = CONTINUOUS) -> str:
        if name in self._names:
            raise InstanceError(f"duplicate variable name {name!r}")
        if lower > upper:
            raise InstanceError(f"variable {name!r} has inverted bounds "
                                f"[{lower!r}, {upper!r}]")
        self._names.add(name)
        self.variables.append(Var(name, kind, float(lower), float(upper)))
        return name

    def add_binary(self, name: str) -> str:
        return self.add_var(name, 0.0, 1.0, BINARY)

    def has_var(self, name: str) -> bool:
        return name in self._names

    def _register(self, name: str) -> None:
        if name in self._con_names:
            raise InstanceError(f"duplicate constraint name {name!r}")
        self._con_names.add(name)

    def add_linear(self, name: str, coeffs: dict[str, float], sense: str,
                   rhs: float) -> None:
        self._register(name)
        for var in coeffs:
            if var not in self._names:
                raise InstanceError(f"constraint {name!r} uses unknown variable {var!r}")
        pairs = tuple((n, float(c)) for n, c in coeffs.items() if c != 0.0)
        self.linear.append(LinearConstraint(name, pairs, sense, float(rhs)))

    def add_quadratic(self, name: str, label: str, quad: dict[str, float],
                      lin: dict[str, float], constant: float = 0.0) -> None:
        self._register(name)
        names = tuple(sorted(set(quad) | set(lin)))
        for var in names:
            if var not in self._names:
                raise InstanceError(f"constraint {name!r} uses unknown variable {var!r}")
        qv = tuple(float(quad.get(n, 0.0)) for n in names)
        if any(q < 0 for q in qv):
            raise InstanceError(f"constraint {name!r} has a negative quadratic "
                                "coefficient; not convex")
        self.convex.append(ConvexQuadratic(
            name, label, names, qv,
            tuple(float(lin.get(n, 0.0)) for n in names), float(constant)))

    def add_soc(self, name: str, label: str, arg_rows: list[dict[str, float]],
                arg_offset: list[float], rhs: dict[str, float],
                rhs_offset: float = 0.0) -> None:
        self._register(name)
        names_set: set[str] = set(rhs)
        for row in arg_rows:
            names_set |= set(row)
        names = tuple(sorted(names_set))
        for var in names:
            if var not in self._names:
                raise InstanceError(f"constraint {name!r} uses unknown variable {var!r}")
        rows = tuple(tuple(float(row.get(n, 0.0)) for n in names) for row in arg_rows)
        self.convex.append(SecondOrderCone(
            name, label, names, rows, tuple(float(v) for v in arg_offset),
            tuple(float(rhs.get(n, 0.0)) for n in names), float(rhs_offset)))

    def finalize(self, objective: LinearForm, eta_gas: LinearForm,
                 eta_power: LinearForm, gas_degenerate: bool = False,
                 power_degenerate: bool = False) -> MicpInstance:
        return MicpInstance(variables=tuple(self.variables),
                            linear_constraints=tuple(self.linear),
                            convex_constraints=tuple(self.convex),
                            objective=objective, eta_gas=eta_gas,
                            eta_power=eta_power, gas_degenerate=gas_degenerate,
                            power_degenerate=power_degenerate)


# --------------------------------------------------------------------------
# Debug dumps: LP-style text for the linear part, JSON manifest for the rest
# --------------------------------------------------------------------------

def _lp_terms(pairs) -> str:
    parts = []
    for name, coef in pairs:
        sign = "-" if coef < 0 else "+"
        parts.append(f"{sign} {abs(coef):.17g} {name}")
    text = " ".join(parts) if parts else "0"
    return text[2:] if text.startswith("+ ") else text


def write_lp(instance: MicpInstance) -> str:
    """CPLEX-LP-style text of the linear part (objective, rows, bounds)."""
    lines = ["Maximize", f" obj: {_lp_terms(instance.objective.coeffs)}",
             "Subject To"]
    sense_txt = {LESS_EQUAL: "<=", EQUAL: "=", GREATER_EQUAL: ">="}
    for con in instance.linear_constraints:
        lines.append(f" {con.name}: {_lp_terms(con.coeffs)} "
                     f"{sense_txt[con.sense]} {con.rhs:.17g}")
    lines.append("Bounds")
    for v in instance.variables:
        lines.append(f" {v.lower:.17g} <= {v.name} <= {v.upper:.17g}")
    binaries = [v.name for v in instance.binaries()]
    if binaries:
        lines.append("Binaries")
        lines.append(" " + " ".join(binaries))
    lines.append("End")
    return "\n".join(lines) + "\n"


def convex_manifest(instance: MicpInstance) -> dict:
    """Sidecar manifest enumerating convex constraints by kind and coefficients."""
    return {"objective_constant": instance.objective.constant,
            "convex_constraints": [c.manifest() for c in instance.convex_constraints]}
