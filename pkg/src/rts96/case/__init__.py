from .build import build_system
from .io import SchemaError, export_case, import_case
from .model import AcBranch, Bus, GenSpec, HvdcLink, LoadSpec, SystemCase, WindFarm, area_of
from .validate import ValidationReport, validate

__all__ = [
    "AcBranch",
    "Bus",
    "GenSpec",
    "HvdcLink",
    "LoadSpec",
    "SchemaError",
    "SystemCase",
    "ValidationReport",
    "WindFarm",
    "area_of",
    "build_system",
    "export_case",
    "import_case",
    "validate",
]
