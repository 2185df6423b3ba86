"""Line-based sectioned key=value configuration for the harness.

The format is deliberately minimal so that configs diff cleanly:

    [field]
    spec = 2,1,[0,1]

    [run]
    seed = 42
    table_cap = 4096

    [model K]
    c1 = full

    [model O]
    c1 = below 0

    [model K2]
    c2 = box * * * *

    [triple T]
    mid = K
    sub = O

    [suite poisson1]
    run = poisson1
    triple = T
    mu1 = 1
    mu2 = 1/2

Unknown keys, unresolved names and cap violations are reported with line
numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from fqharmonic.c1 import C1Model, laurent_model, lattice_model, colattice_model, segment_model
from fqharmonic.c1_triples import interval_triple
from fqharmonic.c2 import C2Model, box_model, k2_model
from fqharmonic.c2_triples import GradedC2Triple, inner_cut_triple, outer_cut_triple
from fqharmonic.exactnum import DomainError, FqField, parse_field_spec


class ConfigError(ValueError):
    def __init__(self, errors):
        self.errors = list(errors)
        msg = "; ".join(f"line {ln}: {m}" for ln, m in self.errors)
        super().__init__(msg or "invalid configuration")


@dataclass
class SuiteSpec:
    name: str
    kind: str
    params: dict
    corrupt: Optional[str] = None
    line: int = 0


@dataclass
class SuiteConfig:
    field: FqField
    models: dict
    triples: dict
    suites: list
    seed: int = 1
    table_cap: int = 4096
    out: Optional[str] = None


_RUN_KEYS = {"seed", "table_cap", "out"}
_MODEL_KEYS = {"c1", "c2"}
_TRIPLE_KEYS = {"mid", "sub", "quot", "outer_cut", "inner_cut"}
_SUITE_KEYS = {
    "run", "corrupt", "triple", "mu1", "mu2", "mu", "nu", "cut_lo", "cut_hi",
    "deep_cut", "max_points", "cases", "rep_cases", "qs", "max_dim", "i_lo",
    "i_hi", "basepoint",
}


def _parse_sections(text: str, errors):
    sections = []
    current = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            head = line[1:-1].strip()
            current = {"head": head, "line": ln, "items": []}
            sections.append(current)
            continue
        if "=" not in line:
            errors.append((ln, f"expected key = value, got {line!r}"))
            continue
        if current is None:
            errors.append((ln, "key outside of any section"))
            continue
        key, _, val = line.partition("=")
        current["items"].append((ln, key.strip(), val.strip()))
    return sections


def _fraction(val: str) -> Fraction:
    if "/" in val:
        num, den = val.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(val))


def _c1_model(field: FqField, spec: str, name: str) -> C1Model:
    parts = spec.split()
    kind = parts[0]
    if kind == "full":
        return laurent_model(field, name)
    if kind == "below":
        return lattice_model(field, int(parts[1]), name)
    if kind == "atleast":
        return colattice_model(field, int(parts[1]), name)
    if kind == "segment":
        return segment_model(field, int(parts[1]), int(parts[2]), name)
    raise DomainError(f"unknown c1 model kind {kind!r}")


def _bound(tok: str) -> Optional[int]:
    return None if tok == "*" else int(tok)


def _c2_model(field: FqField, spec: str, name: str) -> C2Model:
    parts = spec.split()
    if parts[0] == "box" and len(parts) == 5:
        return box_model(field, *(_bound(t) for t in parts[1:]), label=name)
    if parts[0] == "full":
        return k2_model(field, name)
    raise DomainError(f"unknown c2 model kind {spec!r}")


def parse_config(text: str) -> SuiteConfig:
    errors: list = []
    sections = _parse_sections(text, errors)
    field_obj: Optional[FqField] = None
    run_items = {}
    models: dict = {}
    triples: dict = {}
    suites: list = []

    for sec in sections:
        head, ln0, items = sec["head"], sec["line"], sec["items"]
        if head == "field":
            for ln, key, val in items:
                if key != "spec":
                    errors.append((ln, f"unknown field key {key!r}"))
                    continue
                try:
                    field_obj = parse_field_spec(val)
                except (DomainError, ValueError) as exc:
                    errors.append((ln, str(exc)))
        elif head == "run":
            for ln, key, val in items:
                if key not in _RUN_KEYS:
                    errors.append((ln, f"unknown run key {key!r}"))
                else:
                    run_items[key] = (ln, val)
        elif head.startswith("model "):
            name = head.split(None, 1)[1]
            if field_obj is None:
                errors.append((ln0, "the [field] section must come first"))
                continue
            for ln, key, val in items:
                if key not in _MODEL_KEYS:
                    errors.append((ln, f"unknown model key {key!r}"))
                    continue
                try:
                    if key == "c1":
                        models[name] = _c1_model(field_obj, val, name)
                    else:
                        models[name] = _c2_model(field_obj, val, name)
                except (DomainError, ValueError, IndexError) as exc:
                    errors.append((ln, f"bad model {name!r}: {exc}"))
        elif head.startswith("triple "):
            name = head.split(None, 1)[1]
            data = {}
            for ln, key, val in items:
                if key not in _TRIPLE_KEYS:
                    errors.append((ln, f"unknown triple key {key!r}"))
                else:
                    data[key] = (ln, val)
            if "mid" not in data:
                errors.append((ln0, f"triple {name!r} needs a mid model"))
                continue
            ln_mid, mid_name = data["mid"]
            if mid_name not in models:
                errors.append((ln_mid, f"undeclared model {mid_name!r}"))
                continue
            mid = models[mid_name]
            try:
                if isinstance(mid, C1Model):
                    ln_s, sub_name = data.get("sub", (ln0, ""))
                    if sub_name not in models:
                        errors.append((ln_s, f"undeclared model {sub_name!r}"))
                        continue
                    triples[name] = interval_triple(mid, models[sub_name], name)
                elif "outer_cut" in data:
                    triples[name] = outer_cut_triple(mid, int(data["outer_cut"][1]), name)
                elif "inner_cut" in data:
                    triples[name] = inner_cut_triple(mid, int(data["inner_cut"][1]), name)
                else:
                    ln_s, sub_name = data.get("sub", (ln0, ""))
                    ln_q, quot_name = data.get("quot", (ln0, ""))
                    if sub_name not in models or quot_name not in models:
                        errors.append((ln0, f"triple {name!r} needs declared sub and quot"))
                        continue
                    triples[name] = GradedC2Triple(mid, models[sub_name], models[quot_name], name)
            except (DomainError, ValueError) as exc:
                errors.append((ln0, f"bad triple {name!r}: {exc}"))
        elif head.startswith("suite "):
            name = head.split(None, 1)[1]
            params: dict = {}
            kind = name
            corrupt = None
            for ln, key, val in items:
                if key not in _SUITE_KEYS:
                    errors.append((ln, f"unknown suite key {key!r}"))
                elif key == "run":
                    kind = val
                elif key == "corrupt":
                    corrupt = val
                else:
                    params[key] = (ln, val)
            suites.append(SuiteSpec(name, kind, params, corrupt, ln0))
        else:
            errors.append((ln0, f"unknown section {head!r}"))

    if field_obj is None:
        errors.append((0, "missing [field] section"))
    seed = 1
    table_cap = 4096
    out = None
    if "seed" in run_items:
        seed = int(run_items["seed"][1])
    if "table_cap" in run_items:
        table_cap = int(run_items["table_cap"][1])
    if "out" in run_items:
        out = run_items["out"][1]

    # resolve names and caps inside suite parameters
    for spec in suites:
        resolved = {}
        for key, (ln, val) in spec.params.items():
            if key == "triple":
                if val not in triples:
                    errors.append((ln, f"undeclared triple {val!r}"))
                    continue
                resolved[key] = triples[val]
            elif key in ("mu1", "mu2", "mu", "nu"):
                try:
                    resolved[key] = _fraction(val)
                except ValueError:
                    errors.append((ln, f"bad rational {val!r}"))
            else:
                try:
                    resolved[key] = int(val)
                except ValueError:
                    errors.append((ln, f"bad integer {val!r}"))
        if "max_points" in resolved and resolved["max_points"] > table_cap:
            ln = spec.params["max_points"][0]
            errors.append(
                (ln, f"max_points {resolved['max_points']} exceeds table cap {table_cap}")
            )
        spec.params = resolved

    if errors:
        raise ConfigError(sorted(errors))
    return SuiteConfig(field_obj, models, triples, suites, seed, table_cap, out)
