from toric_contact.config import SettingsHandler, init_settings, render_context
from toric_contact.decorator.command import command
from toric_contact.domains import (
    ClassificationResult,
    Direction,
    ExactAngle,
    IntersectionForm,
    InvariantsReport,
    LensLabel,
    MomentCone,
    Plumbing,
    RenderOptions,
    UnimodularMap,
)
from toric_contact.enums import ContactTag, LutzKind
from toric_contact.exceptions import ToricError
from toric_contact.geometry.cone import full_lutz, half_lutz, lutz, normalize, toric_equivalent
from toric_contact.plumbing.chain import blow_up, cone_of_plumbing, decompose, plumbing_of_cone
from toric_contact.plumbing.continued_fraction import continued_fraction_eval, continued_fraction_expand
from toric_contact.render.svg import render_cone_svg, render_plumbing_svg
from toric_contact.topology.classify import classify, contactomorphic, first_homology, lens_representatives
from toric_contact.topology.fourmanifold import d3_difference, invariants_report, signature, theta

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "command",
    "init_settings",
    "render_context",
    "SettingsHandler",
    "ClassificationResult",
    "ContactTag",
    "Direction",
    "ExactAngle",
    "IntersectionForm",
    "InvariantsReport",
    "LensLabel",
    "LutzKind",
    "MomentCone",
    "Plumbing",
    "RenderOptions",
    "ToricError",
    "UnimodularMap",
    "classify",
    "contactomorphic",
    "first_homology",
    "lens_representatives",
    "normalize",
    "toric_equivalent",
    "half_lutz",
    "full_lutz",
    "lutz",
    "decompose",
    "cone_of_plumbing",
    "plumbing_of_cone",
    "blow_up",
    "continued_fraction_expand",
    "continued_fraction_eval",
    "signature",
    "theta",
    "d3_difference",
    "invariants_report",
    "render_cone_svg",
    "render_plumbing_svg",
]
