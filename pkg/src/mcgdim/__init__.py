"""Exact computations for dimensions of surface mapping class groups."""

from .criterion import Mode, check_criterion, conclude
from .orbifolds import BoundaryComponent, OrbifoldSignature, orbifold_euler, rh_order, vcd_weyl
from .sigio import ingest_actions, parse_signature, render_signature
from .surfaces import Kind, N, S, Surface, euler_characteristic, vcd_mcg

__version__ = "0.1.0"

__all__ = [
    "BoundaryComponent",
    "Kind",
    "Mode",
    "N",
    "OrbifoldSignature",
    "S",
    "Surface",
    "check_criterion",
    "conclude",
    "euler_characteristic",
    "ingest_actions",
    "orbifold_euler",
    "parse_signature",
    "render_signature",
    "rh_order",
    "vcd_mcg",
    "vcd_weyl",
]
