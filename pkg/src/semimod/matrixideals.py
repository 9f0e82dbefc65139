"""Left ideals of M_n(R) handled through their row modules.

A left ideal corresponds one-to-one with the submodule of R^n holding all
rows of all its elements, and a matrix lies in the ideal iff every one of
its rows lies in that submodule.  All decisions below reduce to the module
engine through that correspondence; matrices are never divided directly.
Only commutative polynomial base rings are supported.

Operations are pure; the per-row checks of one query are independent and
could run concurrently, with the verdict their deterministic conjunction.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .closure import find_vanishing_witness, semiprime_member
from .errors import (
    DimensionMismatchError,
    MismatchedRingError,
    ZeroCovectorError,
)
from .groebner import (
    DEFAULT_LIMITS,
    GroebnerLimits,
    SubmodulePresentation,
    submodule_member,
)
from .poly import DEFAULT_ORDER, OrderSpec, PolyMatrix, PolyRing
from .verdicts import EXTENSION_STABLE, SOUND_ONLY, Verdict, Witness


@dataclass
class LeftIdealPresentation:
    """Finite generator list for a left ideal of M_n(R)."""

    ring: PolyRing
    size: int
    generators: list
    _row_module: SubmodulePresentation | None = dataclass_field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self):
        for g in self.generators:
            if not isinstance(g, PolyMatrix):
                raise TypeError("left ideal generators must be matrices")
            if g.ring != self.ring:
                raise MismatchedRingError("generator from a different ring")
            if g.size != self.size:
                raise DimensionMismatchError("generator of a different size")

    def row_module(self) -> SubmodulePresentation:
        if self._row_module is None:
            self._row_module = row_module(self)
        return self._row_module


def row_module(ideal: LeftIdealPresentation) -> SubmodulePresentation:
    """The submodule of R^n generated by every row of every generator."""
    rows = []
    for g in ideal.generators:
        rows.extend(g.row_vectors())
    return SubmodulePresentation(ideal.ring, ideal.size, rows)


def ideal_with_rows_in(submodule: SubmodulePresentation) -> LeftIdealPresentation:
    """The left ideal of all matrices whose rows all lie in the submodule,
    presented by placing each generator in each row position."""
    ring, n = submodule.ring, submodule.rank
    gens = []
    for g in submodule.generators:
        for i in range(n):
            rows = [
                list(g.entries) if i == j else [ring.zero()] * n for j in range(n)
            ]
            gens.append(PolyMatrix(ring, rows))
    return LeftIdealPresentation(ring, n, gens)


def matrix_member(
    x: PolyMatrix,
    ideal: LeftIdealPresentation,
    order: OrderSpec = DEFAULT_ORDER,
    limits: GroebnerLimits = DEFAULT_LIMITS,
) -> Verdict:
    """Left-ideal membership: every row must lie in the row module.  On
    membership the certificate holds one cofactor list per row."""
    if x.ring != ideal.ring or x.size != ideal.size:
        raise MismatchedRingError("matrix does not match the ideal's ring/size")
    module = ideal.row_module()
    row_certificates = []
    for row in x.row_vectors():
        verdict = submodule_member(row, module, order, limits)
        if not verdict.member:
            return Verdict(member=False)
        row_certificates.append(verdict.certificate)
    return Verdict(member=True, certificate=row_certificates)


def matrix_semiprime_member(
    f: PolyMatrix,
    generators,
    order: OrderSpec = DEFAULT_ORDER,
    limits: GroebnerLimits = DEFAULT_LIMITS,
    search_witness: bool = True,
    witness_radius: int = 2,
) -> Verdict:
    """Decide whether F lies in the smallest semiprime left ideal containing
    the generators: every row of F must lie in the semiprime closure of the
    generators' row module.  A witness, when found, is a point a and
    direction v with G(a)v = 0 for every generator while F(a)v != 0."""
    generators = list(generators)
    ideal = LeftIdealPresentation(f.ring, f.size, generators)
    module = ideal.row_module()
    guarantee = EXTENSION_STABLE if f.ring.field.char == 0 else SOUND_ONLY
    gen_rows = module.generators
    for row in f.row_vectors():
        verdict = semiprime_member(
            row, module, order, limits, search_witness=False
        )
        if not verdict.member:
            witness = None
            if search_witness:
                witness = find_vanishing_witness(row, gen_rows, witness_radius)
                if witness is not None:
                    _verify_matrix_witness(f, generators, witness)
            return Verdict(
                member=False, witness=witness, guarantee=guarantee, method="radical"
            )
    return Verdict(member=True, guarantee=guarantee, method="radical")


def _verify_matrix_witness(f: PolyMatrix, generators, witness: Witness):
    field = f.ring.field
    point = [w.value for w in witness.point]
    vec = [w.value for w in witness.vector]

    def image(matrix):
        values = matrix.evaluate_raw(point)
        return [
            _dot_raw(field, row, vec) for row in values
        ]

    assert all(all(field.is_zero(s) for s in image(g)) for g in generators)
    assert any(not field.is_zero(s) for s in image(f))


def _dot_raw(field, xs, ys):
    s = field.zero_raw
    for a, b in zip(xs, ys):
        s = field.add(s, field.mul(a, b))
    return s


def max_left_ideal_member(x: PolyMatrix, point, covector) -> bool:
    """Membership in the maximal left ideal of matrices annihilating the
    covector at the point: true iff X(a) u = 0."""
    field = x.ring.field
    raw_point = [field.coerce(p) for p in point]
    raw_u = [field.coerce(u) for u in covector]
    if len(raw_u) != x.size:
        raise DimensionMismatchError("covector length does not match matrix size")
    if all(field.is_zero(u) for u in raw_u):
        raise ZeroCovectorError("covector must be nonzero")
    if len(raw_point) != x.ring.nx:
        raise DimensionMismatchError("point does not match the ring's x-block")
    values = x.evaluate_raw(raw_point)
    return all(field.is_zero(_dot_raw(field, row, raw_u)) for row in values)
