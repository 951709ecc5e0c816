"""Representations of link groups into SL(2, C) from parabolic colorings.

Images are ``P(f(g))`` for each generator.  Group words are multiplied left
to right, so with the coloring convention of ``polysolve`` a Wirtinger
relator ``u1 o u^-1 o^-1`` maps to ``±I``.  All comparisons are up to the
global sign of each matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import sl2
from .errors import MissingGenerator
from .gaussian import GaussQ, I, is_exact
from .parabolic import ParabolicElement, complex_pair, to_matrix
from .polysolve import default_words, fingerprints_close, trace_fingerprint, word_matrix
from .presentations import GroupPresentation, GroupWord, parse_group_word


@dataclass(frozen=True)
class MoebiusRepresentation:
    generator_names: tuple
    images: tuple                # 2x2 matrices aligned with generator_names
    relators: tuple              # GroupWord over generator indices
    relator_residuals: tuple
    meridian_traces: tuple
    fingerprint: tuple
    label: str = ""

    def image(self, name):
        try:
            return self.images[self.generator_names.index(name)]
        except ValueError:
            raise MissingGenerator(name) from None

    @property
    def max_residual(self) -> float:
        return max(self.relator_residuals, default=0.0)


def _residual(m) -> float:
    if all(is_exact(v) for v in sl2.entries(m)):
        return 0.0 if sl2.exact_equal_up_to_sign(m, sl2.IDENTITY) else \
            sl2.distance_up_to_sign(m, sl2.IDENTITY)
    return sl2.distance_up_to_sign(m, sl2.IDENTITY)


def build_rep(names, images, relators=(), label: str = "") -> MoebiusRepresentation:
    names = tuple(names)
    images = tuple(images)
    relators = tuple(relators)
    residuals = tuple(_residual(word_matrix(r, images)) for r in relators)
    traces = tuple(complex(sl2.trace(m)) for m in images)
    fp = trace_fingerprint(list(images), default_words(len(names), relators))
    return MoebiusRepresentation(names, images, relators, residuals, traces, fp, label)


def coloring_to_rep(coloring, g: GroupPresentation, label: str = "") -> MoebiusRepresentation:
    """Send each generator of ``g`` to ``P`` of its color.

    ``coloring`` maps generator names to ``ParabolicElement`` (or pairs).
    """
    images = []
    for name in g.generator_names:
        if name not in coloring:
            raise MissingGenerator(name)
        v = coloring[name]
        if not isinstance(v, ParabolicElement):
            v = ParabolicElement(*v)
        images.append(to_matrix(v))
    return build_rep(g.generator_names, images, g.relators, label)


def class_coloring(solutions, k: int) -> dict:
    """Arc-name -> element map for class ``k`` of a ``SolutionSet``."""
    cls = solutions.classes[k]
    return dict(zip(solutions.arc_names, cls.arcs))


# ---------------------------------------------------------------------------
# the reference Borromean representation

REFERENCE_TRIPLE = (
    ((2 + I, 2 * I), (GaussQ(-1), -I)),
    ((GaussQ(1), 2 * I), (GaussQ(0), GaussQ(1))),
    ((GaussQ(1), GaussQ(0)), (GaussQ(-1), GaussQ(1))),
)

# Generator receiving each matrix of REFERENCE_TRIPLE.  With this matching the
# triple satisfies the Wirtinger-derived relators of the built-in Borromean
# diagram; its cyclic relabelings do too.
REFERENCE_MATCHING = ("b", "a", "c")


def borromean_group_relators() -> tuple:
    """The three triple-commutator relators on ``a, b, c``."""
    from .presentations import commutator

    a, b, c = (GroupWord(((k, 1),)) for k in range(3))
    return (
        commutator(commutator(c.inverse(), b), a),
        commutator(commutator(a.inverse(), c), b),
        commutator(commutator(b.inverse(), a), c),
    )


def reference_borromean_reps(matching=REFERENCE_MATCHING) -> tuple:
    """The integral reference triple and its complex conjugate.

    ``matching[k]`` names the generator that receives matrix ``k``.
    """
    names = ("a", "b", "c")
    order = [list(matching).index(n) for n in names]
    images = [REFERENCE_TRIPLE[k] for k in order]
    rels = borromean_group_relators()
    first = build_rep(names, images, rels, "reference")
    return first, conjugate_rep(first, "reference-conjugate")


# ---------------------------------------------------------------------------
# operations on representations

def conjugate_rep(r: MoebiusRepresentation, label: str | None = None) -> MoebiusRepresentation:
    return build_rep(r.generator_names, [sl2.conjugate(m) for m in r.images], r.relators,
                     r.label + "-conj" if label is None else label)


def conjugate_by(r: MoebiusRepresentation, m) -> MoebiusRepresentation:
    """``g -> m rho(g) m^-1``."""
    minv = sl2.inv_general(m)
    return build_rep(r.generator_names, [sl2.mul(sl2.mul(m, x), minv) for x in r.images],
                     r.relators, r.label)


def invert_meridians(r: MoebiusRepresentation) -> MoebiusRepresentation:
    """Replace every generator image by its inverse (opposite meridian orientation)."""
    return build_rep(r.generator_names, [sl2.inv(m) for m in r.images], r.relators, r.label)


def same_rep_up_to_conjugacy(r1: MoebiusRepresentation, r2: MoebiusRepresentation,
                             eps: float = 1e-9) -> bool:
    if r1.generator_names != r2.generator_names:
        return False
    return fingerprints_close(r1.fingerprint, r2.fingerprint, eps)


def gaussian_integer_evidence(r: MoebiusRepresentation, eps: float = 1e-9) -> dict:
    """Distance of every entry to the nearest Gaussian integer.

    This is evidence for discreteness of the image, not a proof of it.
    """
    distances = {}
    for name, m in zip(r.generator_names, r.images):
        row = []
        for v in sl2.entries(m):
            z = complex(v)
            row.append(abs(z - complex(round(z.real), round(z.imag))))
        distances[name] = row
    worst = max((d for row in distances.values() for d in row), default=0.0)
    return {
        "kind": "evidence for discreteness (not a proof)",
        "distances": distances,
        "max_distance": worst,
        "all_gaussian_integers": worst <= eps,
    }


def parabolic_traces_ok(r: MoebiusRepresentation, eps: float = 1e-9) -> bool:
    return all(min(abs(t - 2), abs(t + 2)) <= eps for t in r.meridian_traces)


# ---------------------------------------------------------------------------
# JSON

def _entry(v, digits):
    if isinstance(v, GaussQ) and v.is_gaussian_integer():
        return [int(v.re), int(v.im)]
    if isinstance(v, int):
        return [v, 0]
    return complex_pair(v, digits)


def rep_to_dict(r: MoebiusRepresentation, digits: int = 12) -> dict:
    return {
        "label": r.label,
        "generators": list(r.generator_names),
        "matrices": {n: [[_entry(v, digits) for v in row] for row in m]
                     for n, m in zip(r.generator_names, r.images)},
        "relators": [w.to_str(r.generator_names) for w in r.relators],
        "relator_residuals": [round(x, digits) for x in r.relator_residuals],
        "meridian_traces": [complex_pair(t, digits) for t in r.meridian_traces],
        "fingerprint": [complex_pair(t, digits) for t in r.fingerprint],
    }


def _load_entry(pair):
    re, im = pair
    if isinstance(re, int) and isinstance(im, int):
        return GaussQ(re, im)
    return complex(re, im)


def rep_from_dict(data: dict, relators=None) -> MoebiusRepresentation:
    names = tuple(data["generators"])
    mats = data["matrices"]
    images = []
    for n in names:
        if n not in mats:
            raise MissingGenerator(n)
        m = mats[n]
        images.append(tuple(tuple(_load_entry(v) for v in row) for row in m))
    if relators is None:
        relators = [parse_group_word(s, names) for s in data.get("relators", [])]
    return build_rep(names, images, relators, data.get("label", ""))


def rep_to_json(r: MoebiusRepresentation) -> str:
    return json.dumps(rep_to_dict(r), sort_keys=True)
