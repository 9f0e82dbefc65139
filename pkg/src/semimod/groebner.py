"""Division algorithm and Buchberger's algorithm for submodules of R^n.

Ideals are the rank-1 case.  The engine works on a flattened term map
{(component, exponents): coefficient} per module element and converts back
to VectorPoly at the boundary.  Every basis element carries an explicit
combination of the input generators, so membership certificates can always
be expressed over the original presentation.

Pair selection is the normal strategy (smallest lcm degree first) with a
deterministic insertion-order tie-break, so repeated runs produce identical
bases.  The coprimality criterion is applied only when both elements of a
pair live entirely in one common component; for genuinely mixed module
elements the classical proof does not carry over and skipping such pairs
can produce an incomplete basis.  Each invocation owns its working state;
separate invocations may run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappush, heappop

from .errors import (
    DimensionMismatchError,
    MismatchedRingError,
    ResourceLimitExceededError,
)
from .poly import (
    DEFAULT_ORDER,
    OrderSpec,
    Polynomial,
    PolyRing,
    VectorPoly,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)
from .verdicts import Verdict


@dataclass(frozen=True)
class GroebnerLimits:
    """Resource caps; crossing one raises ResourceLimitExceeded."""

    max_pairs: int = 10_000
    max_degree: int = 40


DEFAULT_LIMITS = GroebnerLimits()


# ---------------------------------------------------------------------------
# flattened term maps
# ---------------------------------------------------------------------------

def _vec_to_map(v: VectorPoly):
    out = {}
    for comp, entry in enumerate(v.entries):
        for exps, c in entry.terms.items():
            out[(comp, exps)] = c
    return out


def _map_to_vec(ring: PolyRing, rank: int, m) -> VectorPoly:
    entries = [dict() for _ in range(rank)]
    for (comp, exps), c in m.items():
        entries[comp][exps] = c
    return VectorPoly(ring, [Polynomial(ring, e) for e in entries])


def _acc(d, key, val, add, is_zero):
    cur = d.get(key)
    if cur is None:
        d[key] = val
    else:
        s = add(cur, val)
        if is_zero(s):
            del d[key]
        else:
            d[key] = s


def _pmul(a, b, field):
    """Product of two scalar polynomial maps {exps: coeff}."""
    if not a or not b:
        return {}
    add, mul, is_zero = field.add, field.mul, field.is_zero
    out = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            _acc(out, mono_mul(m1, m2), mul(c1, c2), add, is_zero)
    return out


def _psub_into(dst, src, field):
    add, neg, is_zero = field.add, field.neg, field.is_zero
    for m, c in src.items():
        _acc(dst, m, neg(c), add, is_zero)


def _pscale(a, c, field):
    mul = field.mul
    return {m: mul(c, v) for m, v in a.items()}


def _map_degree(m) -> int:
    return max((sum(exps) for (_, exps) in m), default=-1)


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def _reduce(fmap, infos, order: OrderSpec, field):
    """Full reduction of a flattened map against basis ``infos``.

    infos is a list of (lead_modmono, lead_coeff, map).  Returns
    (remainder_map, cofactor_maps); the identity
    input = sum(cofactor_k * basis_k) + remainder holds exactly.
    """
    mkey = order.module_key
    add, mul, neg, div = field.add, field.mul, field.neg, field.div
    is_zero = field.is_zero
    p = dict(fmap)
    rem = {}
    cofs = [dict() for _ in infos]
    while p:
        cm = max(p, key=mkey)
        c = p[cm]
        comp, exps = cm
        for k, (bmm, blc, bmap) in enumerate(infos):
            if bmm[0] == comp and mono_divides(bmm[1], exps):
                t = mono_div(exps, bmm[1])
                q = div(c, blc)
                _acc(cofs[k], t, q, add, is_zero)
                qn = neg(q)
                for (bc, be), bco in bmap.items():
                    _acc(p, (bc, mono_mul(t, be)), mul(qn, bco), add, is_zero)
                break
        else:
            rem[cm] = c
            del p[cm]
    return rem, cofs


@dataclass
class NormalFormResult:
    """Remainder plus one cofactor per basis element; the division identity
    input = sum(cofactor_i * basis_i) + remainder holds exactly."""

    remainder: VectorPoly
    cofactors: list


def _basis_infos(maps, order: OrderSpec):
    mkey = order.module_key
    infos = []
    for m in maps:
        lead = max(m, key=mkey)
        infos.append((lead, m[lead], m))
    return infos


def normal_form(f: VectorPoly, basis, order: OrderSpec = DEFAULT_ORDER) -> NormalFormResult:
    """Divide f by a list of module elements; no remainder term is divisible
    by any basis leading module-monomial."""
    ring, rank = f.ring, len(f)
    maps = []
    for g in basis:
        if g.ring != ring:
            raise MismatchedRingError("basis element from a different ring")
        if len(g) != rank:
            raise DimensionMismatchError("basis element of a different rank")
        if g.is_zero():
            raise ValueError("basis elements must be nonzero")
        maps.append(_vec_to_map(g))
    rem, cofs = _reduce(_vec_to_map(f), _basis_infos(maps, order), order, ring.field)
    return NormalFormResult(
        remainder=_map_to_vec(ring, rank, rem),
        cofactors=[Polynomial(ring, c) for c in cofs],
    )


def s_vector(g1: VectorPoly, g2: VectorPoly, order: OrderSpec = DEFAULT_ORDER):
    """The S-vector of two module elements, or None when their leading
    components differ (no cancellation is possible)."""
    if g1.ring != g2.ring or len(g1) != len(g2):
        raise MismatchedRingError("S-vector over mismatched rings or ranks")
    if g1.is_zero() or g2.is_zero():
        raise ValueError("S-vector of a zero vector")
    field = g1.ring.field
    m1, m2 = _vec_to_map(g1), _vec_to_map(g2)
    mkey = order.module_key
    l1, l2 = max(m1, key=mkey), max(m2, key=mkey)
    if l1[0] != l2[0]:
        return None
    lcm = mono_lcm(l1[1], l2[1])
    t1, t2 = mono_div(lcm, l1[1]), mono_div(lcm, l2[1])
    c1, c2 = field.inv(m1[l1]), field.inv(m2[l2])
    out = {}
    add, mul, is_zero = field.add, field.mul, field.is_zero
    for (comp, exps), c in m1.items():
        _acc(out, (comp, mono_mul(t1, exps)), mul(c1, c), add, is_zero)
    neg = field.neg
    for (comp, exps), c in m2.items():
        _acc(out, (comp, mono_mul(t2, exps)), neg(mul(c2, c)), add, is_zero)
    return _map_to_vec(g1.ring, len(g1), out)


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

class GroebnerBasis:
    """Reduced, monic basis together with the order it was computed under
    and, for each element, its combination of the kept input generators."""

    def __init__(self, ring, rank, order, elements, input_reps, inputs, stats):
        self.ring = ring
        self.rank = rank
        self.order = order
        self.elements = elements  # list[VectorPoly], monic, sorted by lead
        self.input_reps = input_reps  # per element: list of Polynomial per input
        self.inputs = inputs  # the nonzero generators the basis was built from
        self.reduced = True
        self.stats = stats

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def as_json(self):
        return {
            "basis": [str(g) for g in self.elements],
            "order": {"scalar": self.order.scalar, "module": self.order.module},
            "rank": self.rank,
        }


def _single_component(m):
    comps = {comp for (comp, _) in m}
    return comps.pop() if len(comps) == 1 else None


def buchberger(
    gens,
    order: OrderSpec = DEFAULT_ORDER,
    limits: GroebnerLimits = DEFAULT_LIMITS,
) -> GroebnerBasis:
    """Compute the reduced Groebner basis of the submodule generated by
    ``gens`` (a nonempty list of vectors; zero vectors are dropped, and if
    all are zero the empty basis of the zero submodule is returned)."""
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one vector to fix ring and rank")
    ring, rank = gens[0].ring, len(gens[0])
    kept = []
    for g in gens:
        if g.ring != ring or len(g) != rank:
            raise MismatchedRingError("generators share neither ring nor rank")
        if not g.is_zero():
            kept.append(g)
    stats = {"pairs_processed": 0, "zero_reductions": 0}
    if not kept:
        return GroebnerBasis(ring, rank, order, [], [], [], stats)

    field = ring.field
    mkey = order.module_key
    nin = len(kept)
    zero_exps = ring._zero_exps

    basis = []  # flattened maps, always monic
    leads = []  # (modmono) per element
    singles = []  # single component index or None
    reps = []  # per element: list of nin scalar maps
    heap = []
    counter = 0

    def push_pairs(new_idx):
        nonlocal counter
        for old_idx in range(new_idx):
            if leads[old_idx][0] != leads[new_idx][0]:
                continue
            deg = sum(mono_lcm(leads[old_idx][1], leads[new_idx][1]))
            heappush(heap, (deg, counter, old_idx, new_idx))
            counter += 1

    def add_element(emap, rep):
        lead = max(emap, key=mkey)
        lc = emap[lead]
        if lc != field.one_raw:
            inv = field.inv(lc)
            emap = {k: field.mul(inv, v) for k, v in emap.items()}
            rep = [_pscale(r, inv, field) for r in rep]
        idx = len(basis)
        basis.append(emap)
        leads.append(lead)
        singles.append(_single_component(emap))
        reps.append(rep)
        push_pairs(idx)

    for j, g in enumerate(kept):
        rep = [dict() for _ in range(nin)]
        rep[j][zero_exps] = field.one_raw
        add_element(_vec_to_map(g), rep)

    add, neg, is_zero = field.add, field.neg, field.is_zero
    while heap:
        if stats["pairs_processed"] >= limits.max_pairs:
            raise ResourceLimitExceededError(
                f"pair cap {limits.max_pairs} crossed; instance is beyond desk scale"
            )
        _, _, i, j = heappop(heap)
        stats["pairs_processed"] += 1
        li, lj = leads[i], leads[j]
        # coprimality criterion, valid only inside a single shared component
        if (
            singles[i] is not None
            and singles[i] == singles[j]
            and all(min(a, b) == 0 for a, b in zip(li[1], lj[1]))
        ):
            continue
        lcm = mono_lcm(li[1], lj[1])
        ti, tj = mono_div(lcm, li[1]), mono_div(lcm, lj[1])
        s = {}
        for (comp, exps), c in basis[i].items():
            _acc(s, (comp, mono_mul(ti, exps)), c, add, is_zero)
        for (comp, exps), c in basis[j].items():
            _acc(s, (comp, mono_mul(tj, exps)), neg(c), add, is_zero)
        if not s:
            stats["zero_reductions"] += 1
            continue
        infos = [(leads[k], field.one_raw, basis[k]) for k in range(len(basis))]
        rem, cofs = _reduce(s, infos, order, field)
        if not rem:
            stats["zero_reductions"] += 1
            continue
        if _map_degree(rem) > limits.max_degree:
            raise ResourceLimitExceededError(
                f"degree cap {limits.max_degree} crossed; instance is beyond desk scale"
            )
        rep = [dict() for _ in range(nin)]
        for jj in range(nin):
            r = {}
            for m, c in reps[i][jj].items():
                _acc(r, mono_mul(ti, m), c, add, is_zero)
            for m, c in reps[j][jj].items():
                _acc(r, mono_mul(tj, m), neg(c), add, is_zero)
            for k, cof in enumerate(cofs):
                if cof:
                    _psub_into(r, _pmul(cof, reps[k][jj], field), field)
            rep[jj] = r
        add_element(rem, rep)

    # -- minimal basis: drop elements whose lead is divisible by another's --
    order_idx = sorted(range(len(basis)), key=lambda k: mkey(leads[k]))
    kept_idx = []
    for k in order_idx:
        ck, ek = leads[k]
        dominated = any(
            leads[k2][0] == ck and mono_divides(leads[k2][1], ek) for k2 in kept_idx
        )
        if not dominated:
            kept_idx.append(k)

    # -- tail reduction: ascending leads, so smaller elements are final --
    final_maps = [basis[k] for k in kept_idx]
    final_reps = [reps[k] for k in kept_idx]
    final_leads = [leads[k] for k in kept_idx]
    for pos in range(len(final_maps)):
        others = [q for q in range(len(final_maps)) if q != pos]
        infos = [(final_leads[q], field.one_raw, final_maps[q]) for q in others]
        rem, cofs = _reduce(final_maps[pos], infos, order, field)
        if rem != final_maps[pos]:
            rep = [dict(r) for r in final_reps[pos]]
            for qi, cof in enumerate(cofs):
                if not cof:
                    continue
                other_rep = final_reps[others[qi]]
                for jj in range(nin):
                    _psub_into(rep[jj], _pmul(cof, other_rep[jj], field), field)
            final_maps[pos] = rem
            final_reps[pos] = rep

    elements = [_map_to_vec(ring, rank, m) for m in final_maps]
    input_reps = [
        [Polynomial(ring, r) for r in rep] for rep in final_reps
    ]
    stats["basis_size"] = len(elements)
    return GroebnerBasis(ring, rank, order, elements, input_reps, kept, stats)


# ---------------------------------------------------------------------------
# presentations and membership
# ---------------------------------------------------------------------------

class SubmodulePresentation:
    """Finite generator list for a submodule of R^n with cached bases.

    Zero generators are dropped on construction; the empty list presents
    the zero submodule.  The basis cache is populated once per order; until
    then readers simply recompute, so concurrent use is safe.
    """

    def __init__(self, ring: PolyRing, rank: int, generators=()):
        self.ring = ring
        self.rank = rank
        gens = []
        for g in generators:
            if g.ring != ring:
                raise MismatchedRingError("generator from a different ring")
            if len(g) != rank:
                raise DimensionMismatchError("generator of a different rank")
            if not g.is_zero():
                gens.append(g)
        self.generators = gens
        self._bases = {}

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, rank, [])

    @classmethod
    def unit(cls, ring, rank):
        from .poly import unit_vector

        return cls(ring, rank, [unit_vector(ring, rank, i) for i in range(rank)])

    def with_extra(self, extra) -> "SubmodulePresentation":
        return SubmodulePresentation(self.ring, self.rank, self.generators + list(extra))

    def groebner(self, order: OrderSpec = DEFAULT_ORDER, limits=DEFAULT_LIMITS) -> GroebnerBasis:
        gb = self._bases.get(order)
        if gb is None:
            if not self.generators:
                gb = GroebnerBasis(self.ring, self.rank, order, [], [], [], {})
            else:
                gb = buchberger(self.generators, order, limits)
            self._bases[order] = gb
        return gb

    def __repr__(self):
        return (
            f"<submodule of rank {self.rank} with {len(self.generators)} generators>"
        )


def submodule_member(
    f: VectorPoly,
    submodule: SubmodulePresentation,
    order: OrderSpec = DEFAULT_ORDER,
    limits: GroebnerLimits = DEFAULT_LIMITS,
) -> Verdict:
    """Decide f in N; on membership the certificate cofactors satisfy
    sum(cofactor_j * generator_j) == f exactly."""
    if f.ring != submodule.ring or len(f) != submodule.rank:
        raise MismatchedRingError("query does not match the submodule's ring/rank")
    gb = submodule.groebner(order, limits)
    if not gb.elements:
        zero_cofs = [f.ring.zero() for _ in submodule.generators]
        return Verdict(member=f.is_zero(), certificate=zero_cofs if f.is_zero() else None)
    nf = normal_form(f, gb.elements, order)
    if not nf.remainder.is_zero():
        return Verdict(member=False, stats=dict(gb.stats))
    cofactors = []
    for j in range(len(submodule.generators)):
        total = f.ring.zero()
        for k, q in enumerate(nf.cofactors):
            if not q.is_zero():
                total = total + q * gb.input_reps[k][j]
        cofactors.append(total)
    return Verdict(member=True, certificate=cofactors, stats=dict(gb.stats))


def ideal_presentation(ring: PolyRing, polys) -> SubmodulePresentation:
    """Rank-1 presentation of the ideal generated by ``polys``."""
    return SubmodulePresentation(ring, 1, [VectorPoly(ring, [p]) for p in polys])


def ideal_member(
    f: Polynomial,
    gens,
    order: OrderSpec = DEFAULT_ORDER,
    limits: GroebnerLimits = DEFAULT_LIMITS,
) -> Verdict:
    """Ideal membership is submodule membership at rank 1; certificate
    cofactors come back as scalar polynomials."""
    verdict = submodule_member(
        VectorPoly(f.ring, [f]), ideal_presentation(f.ring, gens), order, limits
    )
    return verdict
