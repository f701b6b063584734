"""
Radford biproducts from Yetter-Drinfeld data, Radford projections and the
catalog of tame examples.
"""

from .groups import (
    FiniteGroup,
    abelian_group,
    cyclic_group,
    dihedral_group,
    dual_group_algebra,
    group_algebra,
    h8_algebra,
    h8_index,
    quaternion_group,
    two_dim_representation,
)
from .yd import YDData, braided_antipode, build_yd, verify_yd
from .radford import (
    RadfordSplitting,
    braided_coproduct,
    braided_coproduct_report,
    radford_projection,
    radford_report,
    verify_splitting,
)
from .biproduct import bosonize, canonical_splitting, embed_hp, embed_r, smash_label
from .catalog import NAMES, CatalogEntry, example, taft_data, trivial_data, yd_data

__all__ = [
    "FiniteGroup",
    "abelian_group",
    "cyclic_group",
    "dihedral_group",
    "dual_group_algebra",
    "group_algebra",
    "h8_algebra",
    "h8_index",
    "quaternion_group",
    "two_dim_representation",
    "YDData",
    "braided_antipode",
    "build_yd",
    "verify_yd",
    "RadfordSplitting",
    "braided_coproduct",
    "braided_coproduct_report",
    "radford_projection",
    "radford_report",
    "verify_splitting",
    "bosonize",
    "canonical_splitting",
    "embed_hp",
    "embed_r",
    "smash_label",
    "NAMES",
    "CatalogEntry",
    "example",
    "taft_data",
    "trivial_data",
    "yd_data",
]
