"""Discrete normal surfaces in simplicial posets."""

from ._core import (
    DnsurfError,
    FacePoset,
    average_closed3,
    average_formula,
    bredon_wood_chis,
    certify_lens,
    class_spectrum,
    cycle,
    cyclic_polytope_boundary,
    disjoint_union,
    four_simplex_boundary,
    h1,
    join,
    lens_standard,
    pseudomanifold_average,
    read_poset,
    single_tet,
    surface,
    two_tet_sphere,
    validate,
    verify_average,
    write_poset,
    __version__,
)

__all__ = [
    "DnsurfError",
    "FacePoset",
    "average_closed3",
    "average_formula",
    "bredon_wood_chis",
    "certify_lens",
    "class_spectrum",
    "cycle",
    "cyclic_polytope_boundary",
    "disjoint_union",
    "four_simplex_boundary",
    "h1",
    "join",
    "lens_standard",
    "pseudomanifold_average",
    "read_poset",
    "single_tet",
    "surface",
    "two_tet_sphere",
    "validate",
    "verify_average",
    "write_poset",
    "__version__",
]
