"""Built-in fixture registry and JSON loaders.

Manifold files declare an oriented frame of E via the expression grammar
(see expressions.py for the exact grammar); surface files declare an
immersion in patch parameters plus domain, periodicity, orientation,
excluded caps, the Euler characteristic, and an optional boundary block.
User files with the same schema can be passed by path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .contact import ContactFrame, ContactStructure, build_contact, build_euclidean
from .errors import ConfigError
from .jets import ExpressionVectorField
from .surface import Cap, SurfaceMap, SurfacePatch

__all__ = [
    "BoundaryPiece",
    "manifold_names",
    "surface_names",
    "load_manifold",
    "load_surface",
    "build_manifold",
    "build_surface",
]


@dataclass(frozen=True)
class BoundaryPiece:
    u: str
    v: str
    t0: float
    t1: float


def _fixture_dir():
    return resources.files("contactgeo") / "fixtures"


def _read(kind: str, name: str) -> dict:
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        return json.loads(p.read_text())
    res = _fixture_dir() / f"{kind}_{name}.json"
    try:
        return json.loads(res.read_text())
    except FileNotFoundError:
        raise ConfigError(f"unknown {kind} fixture {name!r}") from None


def _names(prefix: str) -> list[str]:
    out = []
    for entry in _fixture_dir().iterdir():
        if entry.name.startswith(prefix) and entry.name.endswith(".json"):
            out.append(entry.name[len(prefix) : -len(".json")])
    return sorted(out)


def manifold_names() -> list[str]:
    return _names("manifold_")


def surface_names() -> list[str]:
    return _names("surface_")


def load_manifold(name: str) -> dict:
    return _read("manifold", name)


def load_surface(name: str) -> dict:
    return _read("surface", name)


def build_manifold(name: str, probes: int = 200, seed: int = 12345) -> ContactStructure:
    data = load_manifold(name)
    try:
        frame = ContactFrame(
            A=ExpressionVectorField(data["frame"]["A"]),
            B=ExpressionVectorField(data["frame"]["B"]),
            chart_box=tuple(tuple(b) for b in data["chart_box"]),
            name=data.get("name", name),
        )
        kind = data.get("kind", "contact")
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"malformed manifold fixture {name!r}: {exc}") from None
    if kind == "euclidean":
        return build_euclidean(frame)
    return build_contact(frame, probes=probes, seed=seed)


def build_surface(name: str) -> SurfacePatch:
    data = load_surface(name)
    try:
        caps = tuple(Cap(c["axis"], c["side"], float(c["width"])) for c in data.get("caps", []))
        boundary = None
        if data.get("boundary"):
            boundary = tuple(
                BoundaryPiece(p["u"], p["v"], float(p["t0"]), float(p["t1"]))
                for p in data["boundary"]["pieces"]
            )
        return SurfacePatch(
            chart_map=SurfaceMap(data["immersion"]),
            domain=tuple(tuple(d) for d in data["domain"]),
            periodic=tuple(bool(b) for b in data.get("periodic", (False, False))),
            orientation=int(data.get("orientation", 1)),
            caps=caps,
            chi=data.get("euler_characteristic"),
            name=data.get("name", name),
            boundary=boundary,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"malformed surface fixture {name!r}: {exc}") from None
