"""Aspect-ratio-universal rectangular layouts.

Classify layouts (sliceable, one-sided, ARU class), realize aspect ratio
assignments on sliceable layouts, find witnesses against universality,
and recognize duals of one-sided sliceable layouts.
"""

from .classify import ARUClass, aru_class, find_windmill, is_one_sided, is_sliceable, slicing_tree
from .dualgraph import PlaneGraph, dual
from .enumeration import census, dual_catalog, enumerate_slicing_trees, tree_to_layout
from .errors import CapError, InternalVerificationError, InvalidInputError, LayoutError
from .geometry import Contact, Layout, MaximalSegment, Rect, contacts, make_layout, maximal_segments
from .realize import brick_witness, realize_sliceable, strong_realizability, windmill_witness, witness
from .recognize import recognize_dual, verify_realization
from .render import RenderOptions, render_svg

__all__ = [
    "ARUClass",
    "CapError",
    "Contact",
    "InternalVerificationError",
    "InvalidInputError",
    "Layout",
    "LayoutError",
    "MaximalSegment",
    "PlaneGraph",
    "Rect",
    "RenderOptions",
    "aru_class",
    "brick_witness",
    "census",
    "contacts",
    "dual",
    "dual_catalog",
    "enumerate_slicing_trees",
    "find_windmill",
    "is_one_sided",
    "is_sliceable",
    "make_layout",
    "maximal_segments",
    "realize_sliceable",
    "recognize_dual",
    "render_svg",
    "slicing_tree",
    "strong_realizability",
    "tree_to_layout",
    "verify_realization",
    "windmill_witness",
    "witness",
]
