"""picalg: exact computer algebra for symmetric categorical groups.

The layers, bottom up: exact integer linear algebra (intmat), finitely
generated abelian groups (abgroup), the homotopy classification category
(ty), skeletal symmetric categorical groups with morphisms and tracks (scg),
2-chain complexes with secondary homology (complexes), projective resolutions
and secondary Ext (derived), and cohomology of finite group actions (gcohom).
"""

from .abgroup import FgAbGroup, AbHom, DivisibleGroup, Z, TRIVIAL, cyclic
from .abgroup import hom_group, ext_group, two_functors, sub_quotient, divisible_hull
from .intmat import snf, kernel_basis, solve
from .ty import TyObject, TyMorphism, build_special, ty_hom_group, classify
from .scg import (
    SkeletalSCG,
    SCGMorphism,
    SCGTrack,
    phi_scg,
    discrete,
    codiscrete,
    realize,
    type_of,
    hom_scg,
    kernel,
    cokernel,
    relative_kernel,
    relative_cokernel,
    omega_sigma,
    classify_morphism,
    is_extension,
)
from .complexes import (
    TwoComplex,
    ChainMap,
    validate,
    tu_homology,
    secondary_homology,
    mapping_cone,
    hom_complex,
    is_weak_equivalence,
)
from .derived import (
    Resolution,
    SecondaryExt,
    build_resolution,
    present_by_generators,
    ext_secondary,
    ext_les,
    injective_embed,
)
from .gcohom import FiniteGroup, GModule, bar_complex, ulbrich_cohomology, m_of

__version__ = "0.1.0"
