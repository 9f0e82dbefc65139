"""Brute-force verifier over small finite fields.

For every point a of the field's d-fold product it stacks the evaluated
generators, computes a basis of the joint kernel, and checks that the
query annihilates every kernel basis vector (linearity makes basis vectors
sufficient).  The first violation, in enumeration order, is returned as a
counterexample and re-verified before emission, so reports are fully
deterministic; a parallel implementation would have to reconcile to the
same minimal index.

Finite-field points are not points of the characteristic-0 variety, so
over Q-based problems the oracle is advisory only; agreement tests run the
whole pipeline over one finite field instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EnumerationCapExceededError, InfiniteFieldError
from .fields import Field, FieldElement, PrimeField, QuadraticField
from .linalg import kernel_basis as _kernel_basis
from .poly import PolyMatrix

DEFAULT_CAP = 1_000_000


def kernel_basis(rows, ncols: int, field: Field):
    """Canonical basis of the right null space of a scalar matrix."""
    return _kernel_basis(rows, ncols, field)


@dataclass
class OracleReport:
    field: Field
    points: int
    evaluations: int
    nontrivial_kernels: int
    counterexample: tuple | None  # (point, vector) of FieldElement tuples

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    @property
    def vacuous(self) -> bool:
        """A pass with every kernel trivial checked nothing of substance."""
        return self.passed and self.nontrivial_kernels == 0

    def as_json(self):
        out = {
            "field": repr(self.field),
            "points": self.points,
            "evaluations": self.evaluations,
            "nontrivial_kernels": self.nontrivial_kernels,
            "result": "pass" if self.passed else "counterexample",
        }
        if self.counterexample is not None:
            a, v = self.counterexample
            out["counterexample"] = {
                "point": [str(x) for x in a],
                "vector": [str(x) for x in v],
            }
        return out


def _stack_rows(obj, point):
    if isinstance(obj, PolyMatrix):
        return obj.evaluate_raw(point)
    return [list(obj.evaluate_raw(point))]


def _query_values(obj, point, vec, field):
    """Pairings of the evaluated query with a kernel vector; one scalar per
    stacked row."""
    out = []
    for row in _stack_rows(obj, point):
        s = field.zero_raw
        for a, b in zip(row, vec):
            s = field.add(s, field.mul(a, b))
        out.append(s)
    return out


def oracle_check(query, generators, field: Field, cap: int = DEFAULT_CAP) -> OracleReport:
    """Enumerate every point of field^d in odometer order and test the
    vanishing implication on kernel basis vectors.  The query and the
    generators may be vectors or matrices; coefficients are transported
    into ``field`` when needed."""
    if field.size is None:
        raise InfiniteFieldError("the oracle enumerates finite fields only")
    query = query.map_coefficients(field)
    generators = [g.map_coefficients(field) for g in generators]
    ring = query.ring
    d = ring.nx
    n = query.size if isinstance(query, PolyMatrix) else len(query)
    if field.size**d > cap:
        raise EnumerationCapExceededError(
            f"{field.size}^{d} points exceed the cap of {cap}"
        )
    elements = [e.value for e in field.elements()]
    points = 0
    evaluations = 0
    nontrivial = 0
    for point in itertools.product(elements, repeat=d):
        points += 1
        rows = []
        for g in generators:
            rows.extend(_stack_rows(g, point))
        kernel = _kernel_basis(rows, n, field)
        if not kernel:
            continue
        nontrivial += 1
        for v in kernel:
            evaluations += 1
            if evaluations > cap:
                raise EnumerationCapExceededError(
                    f"evaluation cap of {cap} crossed"
                )
            values = _query_values(query, point, v, field)
            if any(not field.is_zero(s) for s in values):
                counterexample = (
                    tuple(FieldElement(field, x) for x in point),
                    tuple(FieldElement(field, x) for x in v),
                )
                _verify_counterexample(query, generators, field, point, v)
                return OracleReport(field, points, evaluations, nontrivial, counterexample)
    return OracleReport(field, points, evaluations, nontrivial, None)


def _verify_counterexample(query, generators, field, point, vec):
    for g in generators:
        assert all(field.is_zero(s) for s in _query_values(g, point, vec, field))
    assert any(not field.is_zero(s) for s in _query_values(query, point, vec, field))


def quadratic_extension_of(field: Field) -> QuadraticField:
    if isinstance(field, PrimeField):
        return QuadraticField(field.p)
    raise ValueError("quadratic escalation starts from a prime field")


def _next_prime(p: int) -> int:
    from .fields import is_prime

    q = p + 1
    while not is_prime(q):
        q += 1
    return q


def oracle_check_escalating(
    query, generators, field: Field | None = None, cap: int = DEFAULT_CAP
):
    """Run the oracle, escalating to the next prime field and then to the
    quadratic extension while the pass stays vacuous (every kernel
    trivial).  Returns the list of reports in the order they were run."""
    if field is None:
        field = PrimeField(3)
    reports = [oracle_check(query, generators, field, cap)]
    if isinstance(field, PrimeField):
        ladder = [PrimeField(_next_prime(field.p)), QuadraticField(field.p)]
        for bigger in ladder:
            if not reports[-1].vacuous:
                break
            reports.append(oracle_check(query, generators, bigger, cap))
    return reports


def agreement_check(query, generators, field: Field, cap: int = DEFAULT_CAP) -> bool:
    """Run the full algebraic pipeline and the oracle over the same finite
    base field (and its quadratic extension) and check the implication: a
    positive algebraic verdict forces an oracle pass.  Equivalently, any
    base-field counterexample forces a negative verdict."""
    from .closure import semiprime_member
    from .groebner import SubmodulePresentation
    from .matrixideals import matrix_semiprime_member

    if field.size is None:
        raise InfiniteFieldError("agreement checks need a finite base field")
    query = query.map_coefficients(field)
    generators = [g.map_coefficients(field) for g in generators]
    if isinstance(query, PolyMatrix):
        verdict = matrix_semiprime_member(
            query, generators, search_witness=False
        )
    else:
        presentation = SubmodulePresentation(query.ring, len(query), generators)
        verdict = semiprime_member(query, presentation, search_witness=False)
    if not verdict.member:
        return True
    fields = [field]
    if isinstance(field, PrimeField):
        fields.append(QuadraticField(field.p))
    return all(oracle_check(query, generators, k, cap).passed for k in fields)
