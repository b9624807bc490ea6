"""Run configuration: JSON load/save and construction of trap objects.

A run configuration names the trap kind, the unit mode, the geometry record
for that trap, and (for magnetic traps) the particle record.  All geometry
fields carry SI-unit suffixes so a config file is self-describing.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import ConfigError
from .exports import write_text_atomic
from .fields import DipoleParticle, IoffePritchardGeometry, TopGeometry
from .planar import PaulParams, PenningParams

TRAP_KINDS = ("ioffe_pritchard", "top", "paul", "penning")
UNIT_MODES = ("si", "natural")

# Required geometry fields per trap kind, in canonical output order.
GEOMETRY_FIELDS = {
    "ioffe_pritchard": (
        "coil_radius_m",
        "coil_halfspacing_m",
        "coil_current_A",
        "bar_distance_m",
        "bar_current_A",
    ),
    "top": (
        "quad_radius_m",
        "quad_halfspacing_m",
        "quad_current_A",
        "bias_radius_m",
        "bias_halfspacing_m",
        "bias_current_A",
        "bias_frequency_rad_per_s",
    ),
    "paul": (
        "voltage_V",
        "size_m",
        "drive_rad_per_s",
        "charge_C",
        "mass_kg",
    ),
    "penning": (
        "voltage_V",
        "size_m",
        "axial_field_T",
        "charge_C",
        "mass_kg",
    ),
}

PARTICLE_FIELDS = ("magnetic_moment_J_per_T", "mass_kg")

# Magnetic traps need a dipole particle record; the planar traps carry the
# charge and mass inside the geometry record instead.
MAGNETIC_TRAPS = ("ioffe_pritchard", "top")


@dataclass(frozen=True)
class RunConfig:
    """Validated description of one trap run."""

    trap: str
    units: str = "si"
    geometry: dict = field(default_factory=dict)
    particle: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.trap not in TRAP_KINDS:
            raise ConfigError(
                f"unknown trap kind {self.trap!r}; expected one of {', '.join(TRAP_KINDS)}"
            )
        if self.units not in UNIT_MODES:
            raise ConfigError(
                f"unknown unit mode {self.units!r}; expected one of {', '.join(UNIT_MODES)}"
            )
        _check_record(self.geometry, GEOMETRY_FIELDS[self.trap], "geometry", self.trap)
        if self.trap in MAGNETIC_TRAPS:
            _check_record(self.particle, PARTICLE_FIELDS, "particle", self.trap)
        elif self.particle:
            raise ConfigError(
                f"trap '{self.trap}' takes charge_C/mass_kg in the geometry record; "
                "the separate particle record is only for magnetic traps"
            )

    def build_geometry(self):
        """Construct the geometry object for the magnetic traps."""
        g = self.geometry
        if self.trap == "ioffe_pritchard":
            return IoffePritchardGeometry(
                coil_radius=g["coil_radius_m"],
                coil_halfspacing=g["coil_halfspacing_m"],
                coil_current=g["coil_current_A"],
                bar_distance=g["bar_distance_m"],
                bar_current=g["bar_current_A"],
            )
        if self.trap == "top":
            return TopGeometry(
                quad_radius=g["quad_radius_m"],
                quad_halfspacing=g["quad_halfspacing_m"],
                quad_current=g["quad_current_A"],
                bias_radius=g["bias_radius_m"],
                bias_halfspacing=g["bias_halfspacing_m"],
                bias_current=g["bias_current_A"],
                bias_frequency=g["bias_frequency_rad_per_s"],
            )
        if self.trap == "paul":
            return PaulParams(
                voltage=g["voltage_V"],
                size=g["size_m"],
                drive=g["drive_rad_per_s"],
                charge=g["charge_C"],
                mass=g["mass_kg"],
            )
        return PenningParams(
            voltage=g["voltage_V"],
            size=g["size_m"],
            axial_field=g["axial_field_T"],
            charge=g["charge_C"],
            mass=g["mass_kg"],
        )

    def build_particle(self) -> DipoleParticle:
        if self.trap not in MAGNETIC_TRAPS:
            raise ConfigError(f"trap '{self.trap}' has no dipole particle record")
        return DipoleParticle(
            magnetic_moment=self.particle["magnetic_moment_J_per_T"],
            mass=self.particle["mass_kg"],
        )

    def to_dict(self) -> dict:
        doc = {
            "trap": self.trap,
            "units": self.units,
            "geometry": {k: float(self.geometry[k]) for k in GEOMETRY_FIELDS[self.trap]},
        }
        if self.trap in MAGNETIC_TRAPS:
            doc["particle"] = {k: float(self.particle[k]) for k in PARTICLE_FIELDS}
        return doc


def _check_record(record, required, record_name, trap):
    if not isinstance(record, dict):
        raise ConfigError(f"{record_name} record for trap '{trap}' must be a JSON object")
    for name in required:
        if name not in record:
            raise ConfigError(
                f"missing required field '{name}' in {record_name} record for trap '{trap}'"
            )
        value = record[name]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(
                f"field '{name}' in {record_name} record must be a number, got {value!r}"
            )
        if not math.isfinite(value):
            raise ConfigError(f"field '{name}' in {record_name} record must be finite")
    extra = sorted(set(record) - set(required))
    if extra:
        raise ConfigError(
            f"unknown field(s) {', '.join(repr(e) for e in extra)} in {record_name} "
            f"record for trap '{trap}'"
        )


def load_config(path: str) -> RunConfig:
    """Read a JSON run configuration; errors name the offending field."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path!r} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"config file {path!r} must hold a JSON object at top level")
    allowed = {"trap", "units", "geometry", "particle"}
    extra = sorted(set(doc) - allowed)
    if extra:
        raise ConfigError(f"unknown top-level key(s): {', '.join(repr(e) for e in extra)}")
    if "trap" not in doc:
        raise ConfigError("missing required top-level field 'trap'")
    return RunConfig(
        trap=doc["trap"],
        units=doc.get("units", "si"),
        geometry=doc.get("geometry", {}),
        particle=doc.get("particle", {}),
    )


def save_config(config: RunConfig, path: str) -> None:
    """Write a config as canonical JSON; load_config(save_config(c)) == c."""
    write_text_atomic(path, json.dumps(config.to_dict(), indent=2, sort_keys=True) + "\n")
