"""Stratification scenario files and the Euler-integral zeta pipeline.

A scenario lists the strata of a fibre together with their Euler
characteristics and a description of the local zeta function on each one.
The geometry (resolutions, blow-ups) is input, not computed here.

Schema (version 1)::

    {
      "schema": 1,
      "name": "example-4i",
      "description": "...",            # optional
      "ambient_dimension": 2,
      "parameters": ["alpha"],
      "strata": [
        {"name": "...", "chi": -1,
         "local": {"type": "monomial_local_system", "m": 1, "eigen_exponents": ["-3*alpha"]}},
        {"name": "...", "chi": 5, "local": {"type": "trivial"}},
        {"name": "...", "chi": 1, "local": {"type": "multi_monomial", "positive_count": 2}},
        {"name": "...", "chi": 1, "local": {"type": "explicit", "zeta": "(1 - e(-alpha)*t)^-1"}}
      ]
    }

Exponents are strings in the exponent grammar, rationals written ``p/q``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .parser import ParseError, parse_exponent, parse_zeta
from .scalars import ClassMultiset, ExpClass, Parameter
from .zeta import (
    Stratum,
    ZetaFunction,
    euler_integral,
    local_system_zeta,
    multi_monomial_zeta,
    multiplicities_mt2,
    mt3_strata,
)

SCHEMA_VERSION = 1
LOCAL_TYPES = ("trivial", "monomial_local_system", "multi_monomial", "explicit")


class ScenarioError(ValueError):
    pass


@dataclass(frozen=True)
class LocalDescriptor:
    type: str
    m: int | None = None
    eigen_exponents: tuple = ()
    positive_count: int | None = None
    zeta: str | None = None

    def to_dict(self) -> dict:
        if self.type == "trivial":
            return {"type": "trivial"}
        if self.type == "monomial_local_system":
            return {"type": self.type, "m": self.m, "eigen_exponents": list(self.eigen_exponents)}
        if self.type == "multi_monomial":
            return {"type": self.type, "positive_count": self.positive_count}
        return {"type": self.type, "zeta": self.zeta}


@dataclass(frozen=True)
class StratumSpec:
    name: str
    chi: int
    local: LocalDescriptor

    def to_dict(self) -> dict:
        return {"name": self.name, "chi": self.chi, "local": self.local.to_dict()}


@dataclass(frozen=True)
class ScenarioFile:
    name: str
    ambient_dimension: int
    parameters: tuple
    strata: tuple
    description: str | None = None

    def to_dict(self) -> dict:
        out = {"schema": SCHEMA_VERSION, "name": self.name}
        if self.description is not None:
            out["description"] = self.description
        out["ambient_dimension"] = self.ambient_dimension
        out["parameters"] = list(self.parameters)
        out["strata"] = [s.to_dict() for s in self.strata]
        return out


@dataclass(frozen=True)
class ScenarioResult:
    zeta: ZetaFunction
    mu: ClassMultiset


# ---------------------------------------------------------------- reading


def _require(cond: bool, message: str):
    if not cond:
        raise ScenarioError(message)


def _int(value, what: str) -> int:
    _require(isinstance(value, int) and not isinstance(value, bool), f"{what} must be an integer")
    return value


def _local_from_dict(d, where: str) -> LocalDescriptor:
    _require(isinstance(d, dict), f"{where}: 'local' must be an object")
    kind = d.get("type")
    _require(kind in LOCAL_TYPES, f"{where}: local type must be one of {LOCAL_TYPES}, got {kind!r}")
    if kind == "trivial":
        return LocalDescriptor("trivial")
    if kind == "monomial_local_system":
        m = _int(d.get("m"), f"{where}: m")
        _require(m >= 1, f"{where}: m must be positive")
        exps = d.get("eigen_exponents")
        _require(isinstance(exps, list) and exps and all(isinstance(e, str) for e in exps),
                 f"{where}: eigen_exponents must be a nonempty list of strings")
        return LocalDescriptor(kind, m=m, eigen_exponents=tuple(exps))
    if kind == "multi_monomial":
        count = _int(d.get("positive_count"), f"{where}: positive_count")
        _require(count >= 2, f"{where}: positive_count must be at least 2")
        return LocalDescriptor(kind, positive_count=count)
    zeta = d.get("zeta")
    _require(isinstance(zeta, str), f"{where}: explicit zeta must be a string")
    return LocalDescriptor(kind, zeta=zeta)


def scenario_from_dict(data) -> ScenarioFile:
    _require(isinstance(data, dict), "scenario must be a JSON object")
    _require(data.get("schema") == SCHEMA_VERSION, f"unsupported schema {data.get('schema')!r}")
    name = data.get("name")
    _require(isinstance(name, str) and name, "name must be a nonempty string")
    N = _int(data.get("ambient_dimension"), "ambient_dimension")
    _require(N >= 1, "ambient_dimension must be at least 1")
    params = data.get("parameters", [])
    _require(isinstance(params, list) and all(isinstance(p, str) for p in params),
             "parameters must be a list of names")
    for p in params:
        try:
            Parameter(p)
        except ValueError as exc:
            raise ScenarioError(str(exc)) from None
    raw = data.get("strata")
    _require(isinstance(raw, list), "strata must be a list")
    strata = []
    for i, s in enumerate(raw):
        where = f"stratum {i}"
        _require(isinstance(s, dict), f"{where} must be an object")
        sname = s.get("name", f"stratum {i}")
        _require(isinstance(sname, str), f"{where}: name must be a string")
        chi = _int(s.get("chi"), f"{where}: chi")
        strata.append(StratumSpec(sname, chi, _local_from_dict(s.get("local"), where)))
    description = data.get("description")
    _require(description is None or isinstance(description, str), "description must be a string")
    scenario = ScenarioFile(name, N, tuple(params), tuple(strata), description)
    build_strata(scenario)  # undeclared parameters and bad literals fail here
    return scenario


def read_scenario(path) -> ScenarioFile:
    text = Path(path).read_text(encoding="utf-8")
    return scenario_from_dict(json.loads(text))


def dumps_scenario(scenario: ScenarioFile) -> str:
    return json.dumps(scenario.to_dict(), indent=2, ensure_ascii=False) + "\n"


def write_scenario(scenario: ScenarioFile, path) -> None:
    Path(path).write_text(dumps_scenario(scenario), encoding="utf-8")


# ---------------------------------------------------------------- running


def _check_declared(values, declared: set, where: str):
    for v in values:
        extra = {p.name for p in v.parameters()} - declared
        if extra:
            raise ScenarioError(f"{where}: undeclared parameter(s) {', '.join(sorted(extra))}")


def local_zeta(local: LocalDescriptor, declared: set, where: str = "stratum") -> ZetaFunction:
    try:
        if local.type == "trivial":
            return ZetaFunction.one()
        if local.type == "monomial_local_system":
            exps = [parse_exponent(e) for e in local.eigen_exponents]
            _check_declared(exps, declared, where)
            return local_system_zeta(1, local.m, [ExpClass(x) for x in exps])
        if local.type == "multi_monomial":
            return multi_monomial_zeta(local.positive_count)
        z = parse_zeta(local.zeta)
        _check_declared([z], declared, where)
        return z
    except ParseError as exc:
        raise ScenarioError(f"{where}: {exc}") from None


def build_strata(scenario: ScenarioFile) -> list:
    declared = set(scenario.parameters)
    return [
        Stratum(s.name, s.chi, local_zeta(s.local, declared, f"stratum {s.name!r}"))
        for s in scenario.strata
    ]


def run_scenario(scenario: ScenarioFile) -> ScenarioResult:
    zeta = euler_integral(build_strata(scenario))
    return ScenarioResult(zeta, multiplicities_mt2(zeta, scenario.ambient_dimension))


# ---------------------------------------------------------------- fixtures


def fixture_names() -> list:
    root = resources.files("fourier_monodromy") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_path(name: str):
    return resources.files("fourier_monodromy") / "fixtures" / f"{name}.json"


def load_fixture(name: str) -> ScenarioFile:
    path = fixture_path(name)
    if not path.is_file():
        raise ScenarioError(f"no fixture named {name!r}; available: {', '.join(fixture_names())}")
    return scenario_from_dict(json.loads(path.read_text(encoding="utf-8")))


def mt3_scenario(N: int, d: int, alpha: str = "alpha") -> ScenarioFile:
    """Scenario file for the smooth-at-infinity ``f^alpha`` family."""
    info = mt3_strata(N, d, alpha)
    strata = []
    for s in info.strata:
        if s.local_zeta.is_one():
            local = LocalDescriptor("trivial")
        else:
            local = LocalDescriptor("monomial_local_system", m=1, eigen_exponents=(f"{-d}*{alpha}",))
        strata.append(StratumSpec(s.name, s.chi, local))
    return ScenarioFile(
        f"mt3-N{N}-d{d}", N, (alpha,), tuple(strata),
        f"Proper transform of the hyperplane at infinity, N={N}, d={d}; "
        "D1 = degree-d hypersurface, D2 = exceptional hyperplane.",
    )
