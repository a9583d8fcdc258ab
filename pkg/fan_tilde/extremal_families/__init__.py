from fan_tilde.extremal_families.families import FAMILIES
from fan_tilde.extremal_families.families import FamilyClaim
from fan_tilde.extremal_families.families import FamilyReport
from fan_tilde.extremal_families.families import FamilySpec
from fan_tilde.extremal_families.families import build_family
from fan_tilde.extremal_families.families import verify_family_claims

__all__ = [
    "FAMILIES",
    "FamilyClaim",
    "FamilyReport",
    "FamilySpec",
    "build_family",
    "verify_family_claims",
]
