"""Tiling configuration files (YAML) and the bundled presets.

Schema::

    name: danzer
    lattice_type: F            # P, F or custom; metadata only
    planes: 5-fold             # metadata only
    chart: [[...], ...]        # optional: columns = lattice basis in hypercubic coordinates
    group_order_bound: 1024
    symmetry_generators:       # 6x6 integer matrices, row-major, in chart coordinates
      - [[1, 0, 0, 0, 0, 0], ...]
    seed_tori:
      - stabilizer: [[...], [...], [...], [...]]   # four integer 6-vectors
        offset: ["0", "1/2", "0", "0", "0", "0"]   # exact rationals
    verify:
      primes: [2]
      oracle_samples: 8
      oracle_max_denominator: 12

Integers may be written bare or as decimal strings; rationals are "p/q".
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

import yaml

from .arrangement import Subtorus
from .exactlin import IntMatrix, Sublattice, det, rank

PRESET_NAMES = ("danzer", "ammann-kramer", "dual-canonical-d6", "canonical-d6")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SeedTorus:
    stabilizer: tuple[tuple[int, ...], ...]
    offset: tuple[Fraction, ...]

    def subtorus(self) -> Subtorus:
        return Subtorus.make(self.stabilizer, self.offset)


@dataclass(frozen=True)
class VerifyOptions:
    primes: tuple[int, ...] = ()
    oracle_samples: int = 8
    oracle_max_denominator: int = 12


@dataclass(frozen=True)
class TilingConfig:
    name: str
    lattice_type: str
    symmetry_generators: tuple[tuple[tuple[int, ...], ...], ...]
    seed_tori: tuple[SeedTorus, ...]
    group_order_bound: int = 1024
    planes: str = ""
    description: str = ""
    chart: tuple[tuple[int, ...], ...] | None = None
    verify: VerifyOptions = field(default_factory=VerifyOptions)

    def generator_matrices(self) -> list[IntMatrix]:
        return [IntMatrix.from_rows(g) for g in self.symmetry_generators]

    def seed_subtori(self) -> list[Subtorus]:
        return [s.subtorus() for s in self.seed_tori]

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "description": self.description,
            "lattice_type": self.lattice_type,
            "planes": self.planes,
            "group_order_bound": self.group_order_bound,
            "symmetry_generators": [[list(r) for r in g] for g in self.symmetry_generators],
            "seed_tori": [
                {"stabilizer": [list(v) for v in s.stabilizer],
                 "offset": [str(x) for x in s.offset]}
                for s in self.seed_tori
            ],
            "verify": {
                "primes": list(self.verify.primes),
                "oracle_samples": self.verify.oracle_samples,
                "oracle_max_denominator": self.verify.oracle_max_denominator,
            },
        }
        if self.chart is not None:
            d["chart"] = [list(r) for r in self.chart]
        return d

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


def _int(x, where: str) -> int:
    if isinstance(x, bool):
        raise ConfigError(f"{where}: expected an integer, got {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x.strip())
        except ValueError:
            pass
    raise ConfigError(f"{where}: expected an integer, got {x!r}")


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ConfigError(f"{where}: write rationals as exact 'p/q' strings, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ConfigError(f"{where}: expected a rational 'p/q', got {x!r}")


def _matrix(m, where: str, nrows: int = 6, ncols: int = 6) -> tuple[tuple[int, ...], ...]:
    if not isinstance(m, list) or len(m) != nrows:
        raise ConfigError(f"{where}: expected {nrows} rows")
    out = []
    for i, r in enumerate(m):
        if not isinstance(r, list) or len(r) != ncols:
            raise ConfigError(f"{where}[{i}]: expected {ncols} entries")
        out.append(tuple(_int(x, f"{where}[{i}][{j}]") for j, x in enumerate(r)))
    return tuple(out)


def parse_config(data: dict, source: str = "<config>") -> TilingConfig:
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: top level must be a mapping")
    for key in ("name", "symmetry_generators", "seed_tori"):
        if key not in data:
            raise ConfigError(f"{source}: missing field '{key}'")
    gens = data["symmetry_generators"]
    if not isinstance(gens, list) or not gens:
        raise ConfigError(f"{source}: symmetry_generators must be a non-empty list")
    generators = tuple(_matrix(g, f"{source}: symmetry_generators[{k}]") for k, g in enumerate(gens))
    for k, g in enumerate(generators):
        if abs(det(IntMatrix.from_rows(g))) != 1:
            raise ConfigError(f"{source}: symmetry_generators[{k}] is not unimodular")

    seeds_raw = data["seed_tori"]
    if not isinstance(seeds_raw, list) or not seeds_raw:
        raise ConfigError(f"{source}: at least one seed torus is required")
    seeds = []
    for k, s in enumerate(seeds_raw):
        where = f"{source}: seed_tori[{k}]"
        if not isinstance(s, dict) or "stabilizer" not in s:
            raise ConfigError(f"{where}: needs a 'stabilizer' field")
        stab = _matrix(s["stabilizer"], f"{where}.stabilizer", nrows=4, ncols=6)
        r = rank(IntMatrix.from_rows(stab))
        if r != 4:
            raise ConfigError(f"{where}.stabilizer has rank {r}, expected 4")
        off_raw = s.get("offset", ["0"] * 6)
        if not isinstance(off_raw, list) or len(off_raw) != 6:
            raise ConfigError(f"{where}.offset: expected 6 entries")
        off = tuple(_rational(x, f"{where}.offset[{i}]") for i, x in enumerate(off_raw))
        seeds.append(SeedTorus(stab, off))

    v = data.get("verify") or {}
    verify = VerifyOptions(
        primes=tuple(_int(p, f"{source}: verify.primes") for p in v.get("primes", [])),
        oracle_samples=_int(v.get("oracle_samples", 8), f"{source}: verify.oracle_samples"),
        oracle_max_denominator=_int(v.get("oracle_max_denominator", 12),
                                    f"{source}: verify.oracle_max_denominator"),
    )
    chart = data.get("chart")
    if chart is not None:
        chart = _matrix(chart, f"{source}: chart")
    lattice_type = str(data.get("lattice_type", "custom"))
    if lattice_type not in ("P", "F", "custom"):
        raise ConfigError(f"{source}: lattice_type must be P, F or custom")
    return TilingConfig(
        name=str(data["name"]),
        lattice_type=lattice_type,
        symmetry_generators=generators,
        seed_tori=tuple(seeds),
        group_order_bound=_int(data.get("group_order_bound", 1024), f"{source}: group_order_bound"),
        planes=str(data.get("planes", "")),
        description=str(data.get("description", "")),
        chart=chart,
        verify=verify,
    )


def load_config(path) -> TilingConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    return loads_config(text, str(path))


def loads_config(text: str, source: str = "<config>") -> TilingConfig:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        raise ConfigError(f"{source}: YAML parse error{where}: {exc}") from exc
    return parse_config(data, source)


def dump_config(cfg: TilingConfig) -> str:
    return yaml.safe_dump(cfg.to_dict(), sort_keys=False, default_flow_style=None, width=100)


def _preset_file(name: str):
    return resources.files("projcoh") / "presets" / f"{name}.yaml"


def load_preset(name: str) -> TilingConfig:
    if name not in PRESET_NAMES:
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}")
    f = _preset_file(name)
    return loads_config(f.read_text(), f"preset:{name}")


def preset_text(name: str) -> str:
    if name not in PRESET_NAMES:
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}")
    return _preset_file(name).read_text()


def list_presets() -> list[dict]:
    out = []
    for name in PRESET_NAMES:
        cfg = load_preset(name)
        out.append({"name": name, "lattice_type": cfg.lattice_type, "planes": cfg.planes,
                    "description": cfg.description})
    return out
