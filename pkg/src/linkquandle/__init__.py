"""Link diagrams, quandle colorings and parabolic representations."""

from .diagram import LinkDiagram, builtin, parse_pd, serialize_pd
from .polysolve import enumerate_parabolic_colorings
from .presentations import fundamental_quandle_presentation, wirtinger_presentation

__all__ = [
    "LinkDiagram",
    "builtin",
    "parse_pd",
    "serialize_pd",
    "enumerate_parabolic_colorings",
    "fundamental_quandle_presentation",
    "wirtinger_presentation",
]
