"""Division with quotient tracking, Buchberger's algorithm, reduced bases.

The pair queue is processed degree by degree with the Gebauer-Moeller
product/chain criteria.  Over QQ all intermediate polynomials are kept
primitive (integer coefficients, content stripped) so coefficients stay small;
the finished reduced basis is monic and canonically sorted, hence a unique
representative of (ideal, order).
"""

from __future__ import annotations

import heapq
from math import gcd

from .ring import QQ, Poly, PolyRing, mono_div, mono_divides, mono_lcm, mono_mul


class GroebnerBasis:
    """Reduced Groebner basis; canonical for (ideal, order).

    transformation[i][j] expresses elements[i] as sum_j transformation[i][j] *
    original_generator[j]; it is present only when the basis was computed with
    tracking enabled.
    """

    __slots__ = ("ring", "elements", "reduced", "transformation")

    def __init__(self, ring, elements, transformation=None):
        self.ring = ring
        self.elements = tuple(elements)
        self.reduced = True
        self.transformation = transformation

    def lead_monomials(self):
        return tuple(g.lm() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and other.ring == self.ring
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return f"GroebnerBasis({list(self.elements)!r})"


def normal_form(f: Poly, G, divisor_order=None):
    """Divide f by the basis, returning (remainder, quotients).

    f == sum(q_i * g_i) + remainder, no remainder term divisible by any lead
    term of G.  Deterministic: the leading reducible term is always reduced by
    the first divisor in basis order (or in `divisor_order` when given).
    """
    elements = G.elements if isinstance(G, GroebnerBasis) else tuple(G)
    ring = f.ring
    field = ring.field
    order = divisor_order if divisor_order is not None else range(len(elements))
    leads = [(g.lm(), g.lc()) for g in elements]
    quotients = [ring.zero] * len(elements)
    out = []
    work = list(f.terms)
    wi = 0
    while wi < len(work):
        e, c = work[wi]
        hit = None
        for k in order:
            if mono_divides(leads[k][0], e):
                hit = k
                break
        if hit is None:
            out.append((e, c))
            wi += 1
            continue
        g = elements[hit]
        m = mono_div(e, leads[hit][0])
        coeff = field.div(c, leads[hit][1])
        quotients[hit] = quotients[hit] + ring.term(coeff, m)
        # f <- f - coeff * x^m * g ; the lead term cancels exactly
        sub = g.mul_term(m, coeff)
        merged = _sub_terms(ring, work[wi + 1 :], sub.terms[1:])
        work = work[: wi + 1] + merged
        wi += 1
        work.pop(wi - 1)
        wi -= 1
    rem = Poly(ring, tuple(out))
    return rem, quotients


def _sub_terms(ring, t1, t2):
    """t1 - t2 for descending term lists; returns a list."""
    field = ring.field
    key = ring.order.key
    zero = field.zero
    neg = field.neg
    add = field.add
    out = []
    i = j = 0
    n1, n2 = len(t1), len(t2)
    while i < n1 and j < n2:
        e1, c1 = t1[i]
        e2, c2 = t2[j]
        if e1 == e2:
            c = add(c1, neg(c2))
            if c != zero:
                out.append((e1, c))
            i += 1
            j += 1
        elif key(e1) > key(e2):
            out.append((e1, c1))
            i += 1
        else:
            out.append((e2, neg(c2)))
            j += 1
    out.extend(t1[i:])
    out.extend((e, neg(c)) for e, c in t2[j:])
    return out


def _scaled_sub(ring, t1, s1, t2, s2):
    """s1*t1 - s2*t2 for descending term lists (s1, s2 field scalars)."""
    field = ring.field
    key = ring.order.key
    zero = field.zero
    mul = field.mul
    one = field.one
    out = []
    i = j = 0
    n1, n2 = len(t1), len(t2)
    while i < n1 and j < n2:
        e1, c1 = t1[i]
        e2, c2 = t2[j]
        if e1 == e2:
            c = field.sub(mul(s1, c1), mul(s2, c2))
            if c != zero:
                out.append((e1, c))
            i += 1
            j += 1
        elif key(e1) > key(e2):
            out.append((e1, c1 if s1 == one else mul(s1, c1)))
            i += 1
        else:
            out.append((e2, field.neg(mul(s2, c2))))
            j += 1
    for e, c in t1[i:]:
        out.append((e, c if s1 == one else mul(s1, c)))
    for e, c in t2[j:]:
        out.append((e, field.neg(mul(s2, c))))
    return out


class _WorkElement:
    __slots__ = ("poly", "lm", "lc", "expr")

    def __init__(self, poly, expr=None):
        self.poly = poly
        self.lm = poly.lm()
        self.lc = poly.lc()
        self.expr = expr  # list of Poly cofactors over the original generators


def _full_reduce(ring, terms, basis, track_exprs=None, ngens=0):
    """Fully reduce a descending term list by the work basis.

    Returns (reduced terms, expr) where expr (when tracking) collects the
    subtracted cofactors: input = result + sum expr_k-contributions.
    Over QQ the reduction is fraction-free: the result may be a scalar
    multiple of the mathematical remainder, recorded in expr scaling.
    """
    field = ring.field
    rational = field is QQ
    expr = [ring.zero] * ngens if track_exprs is not None else None
    out = []
    work = list(terms)
    while work:
        e, c = work[0]
        hit = None
        for g in basis:
            if mono_divides(g.lm, e):
                hit = g
                break
        if hit is None:
            out.append(work.pop(0))
            continue
        m = mono_div(e, hit.lm)
        if rational:
            a, b = c, hit.lc
            g0 = _fgcd(a, b)
            s_work, s_sub = b / g0, a / g0
            if s_work < 0:
                s_work, s_sub = -s_work, -s_sub
            if s_work != 1:
                out = [(ee, cc * s_work) for ee, cc in out]
                if expr is not None:
                    expr = [p.scale(s_work) for p in expr]
                    track_exprs[0] = track_exprs[0] * s_work
            sub = tuple((mono_mul(ee, m), cc) for ee, cc in hit.poly.terms[1:])
            work = _scaled_sub(ring, work[1:], s_work, sub, s_sub)
            if expr is not None:
                q = ring.term(s_sub, m)
                for k in range(ngens):
                    if hit.expr[k].terms:
                        expr[k] = expr[k] + q * hit.expr[k]
        else:
            coeff = field.div(c, hit.lc)
            sub = tuple((mono_mul(ee, m), field.mul(cc, coeff)) for ee, cc in hit.poly.terms[1:])
            work = _sub_terms(ring, work[1:], sub)
            if expr is not None:
                q = ring.term(coeff, m)
                for k in range(ngens):
                    if hit.expr[k].terms:
                        expr[k] = expr[k] + q * hit.expr[k]
    return out, expr


def _fgcd(a, b):
    # gcd of two Fractions with integer values (primitive polys keep them so)
    na, nb = abs(a.numerator), abs(b.numerator)
    da, db = a.denominator, b.denominator
    if da == 1 and db == 1:
        return type(a)(gcd(na, nb))
    return type(a)(gcd(na * db, nb * da), da * db)


def buchberger(gens, ring=None, *, track=False, allow_inhomogeneous=False):
    """Reduced Groebner basis of the homogeneous ideal generated by gens.

    Idempotent: running it on its own output returns the same basis.  With
    track=True the result carries a transformation matrix over the input.
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring for the empty generator list")
        ring = gens[0].ring
    field = ring.field
    if not allow_inhomogeneous:
        for g in gens:
            if not g.is_homogeneous():
                raise ValueError(f"non-homogeneous generator: {g}")

    ngens = len(gens)
    basis: list[_WorkElement] = []
    for idx, g in enumerate(gens):
        if g.is_zero():
            continue
        gp = g.primitive() if field is QQ else g.monic()
        expr = None
        if track:
            expr = [ring.zero] * ngens
            scale = _ratio(gp, g)
            expr[idx] = ring.const(scale)
        basis.append(_WorkElement(gp, expr))

    if not basis:
        return GroebnerBasis(ring, (), transformation=(() if track else None))

    # Gebauer-Moeller pair bookkeeping: pairs stored as (deg, j, i) heap keys
    pairs = []
    pair_set = set()

    def lcm_of(i, j):
        return mono_lcm(basis[i].lm, basis[j].lm)

    def push_pair(i, j):
        lcm = lcm_of(i, j)
        key = (ring.mono_degree(lcm), j, i)
        heapq.heappush(pairs, (key, i, j))
        pair_set.add((i, j))

    def gm_update(new_index):
        lk = basis[new_index].lm
        # rule B: discard old pairs strictly dominated by the new element
        survivors = set()
        for (i, j) in pair_set:
            lij = lcm_of(i, j)
            if (
                mono_divides(lk, lij)
                and lcm_of(i, new_index) != lij
                and lcm_of(j, new_index) != lij
            ):
                continue
            survivors.add((i, j))
        # rules M/F: filter candidate pairs with the new element
        cands = list(range(new_index))
        lcms = {i: mono_lcm(basis[i].lm, lk) for i in cands}
        kept = []
        for i in cands:
            li = lcms[i]
            dominated = False
            for j in cands:
                if j == i:
                    continue
                lj = lcms[j]
                if lj != li and mono_divides(lj, li):
                    dominated = True
                    break
                if lj == li and j < i:
                    dominated = True  # keep only the first of equal lcms
                    break
            if not dominated:
                kept.append(i)
        # product criterion last
        kept = [
            i
            for i in kept
            if mono_mul(basis[i].lm, lk) != lcms[i]
        ]
        pair_set.clear()
        pair_set.update(survivors)
        pairs.clear()
        for (i, j) in survivors:
            lcm = lcm_of(i, j)
            heapq.heappush(pairs, ((ring.mono_degree(lcm), j, i), i, j))
        for i in kept:
            lcm = lcms[i]
            key = (ring.mono_degree(lcm), new_index, i)
            heapq.heappush(pairs, (key, i, new_index))
            pair_set.add((i, new_index))

    for k in range(1, len(basis)):
        gm_update(k)

    while pairs:
        (_, i, j) = heapq.heappop(pairs)
        if (i, j) not in pair_set:
            continue
        pair_set.discard((i, j))
        fi, fj = basis[i], basis[j]
        lcm = mono_lcm(fi.lm, fj.lm)
        mi, mj = mono_div(lcm, fi.lm), mono_div(lcm, fj.lm)
        if field is QQ:
            g0 = _fgcd(fi.lc, fj.lc)
            si, sj = fj.lc / g0, fi.lc / g0
        else:
            si, sj = field.one, field.mul(fi.lc, field.inv(fj.lc))
        ti = tuple((mono_mul(e, mi), c) for e, c in fi.poly.terms)
        tj = tuple((mono_mul(e, mj), c) for e, c in fj.poly.terms)
        sterms = _scaled_sub(ring, ti, si, tj, sj)
        track_scale = [field.one]
        red, expr = _full_reduce(
            ring,
            sterms,
            basis,
            track_exprs=track_scale if track else None,
            ngens=ngens,
        )
        if not red:
            continue
        p = Poly(ring, tuple(red))
        if track:
            # expr collects subtracted content: spair = p + sum expr; rebuild
            qi = Poly(ring, ((mi, si),))
            qj = Poly(ring, ((mj, sj),))
            scale = track_scale[0]
            new_expr = []
            for k in range(ngens):
                e = fi.expr[k] * qi.scale(scale) - fj.expr[k] * qj.scale(scale)
                e = e - expr[k]
                new_expr.append(e)
        else:
            new_expr = None
        if field is QQ:
            pp = p.primitive()
            if track:
                r = _ratio(pp, p)
                new_expr = [e.scale(r) for e in new_expr]
            p = pp
        else:
            if track:
                inv = field.inv(p.lc())
                new_expr = [e.scale(inv) for e in new_expr]
            p = p.monic()
        basis.append(_WorkElement(p, new_expr))
        gm_update(len(basis) - 1)

    return _reduce_basis(ring, basis, ngens if track else 0)


def _ratio(p_new, p_old):
    """Scalar r with p_new = r * p_old (both non-zero, same support)."""
    return p_new.ring.field.div(p_new.lc(), p_old.lc())


def _reduce_basis(ring, basis, ngens):
    """Interreduce a work basis into the canonical reduced GB."""
    field = ring.field
    track = ngens > 0
    # drop elements whose lead is divisible by another lead (keep minimal set)
    items = sorted(basis, key=lambda w: ring.order.key(w.lm))
    kept = []
    for w in items:
        if not any(mono_divides(k.lm, w.lm) for k in kept):
            kept.append(w)
    # tail-reduce every element against the others until stable
    changed = True
    while changed:
        changed = False
        for idx, w in enumerate(kept):
            others = kept[:idx] + kept[idx + 1 :]
            track_scale = [field.one]
            red, expr = _full_reduce(
                ring,
                w.poly.terms,
                others,
                track_exprs=track_scale if track else None,
                ngens=ngens,
            )
            p = Poly(ring, tuple(red))
            if track:
                new_expr = [
                    w.expr[k].scale(track_scale[0]) - expr[k] for k in range(ngens)
                ]
            if field is QQ:
                pp = p.primitive()
                if track:
                    r = _ratio(pp, p)
                    new_expr = [e.scale(r) for e in new_expr]
                p = pp
            if p != w.poly:
                changed = True
                kept[idx] = _WorkElement(p, new_expr if track else None)
    # monic + canonical sort
    final = []
    exprs = []
    for w in sorted(kept, key=lambda w: ring.order.key(w.lm)):
        inv = field.inv(w.lc)
        final.append(w.poly.scale(inv))
        if track:
            exprs.append(tuple(e.scale(inv) for e in w.expr))
    return GroebnerBasis(ring, final, transformation=tuple(exprs) if track else None)


def is_groebner_basis(elements) -> bool:
    """Check every S-polynomial reduces to zero by the given elements."""
    elements = [g for g in elements if not g.is_zero()]
    if not elements:
        return True
    ring = elements[0].ring
    work = [_WorkElement(g) for g in elements]
    for i in range(len(work)):
        for j in range(i + 1, len(work)):
            fi, fj = work[i], work[j]
            lcm = mono_lcm(fi.lm, fj.lm)
            mi, mj = mono_div(lcm, fi.lm), mono_div(lcm, fj.lm)
            si = ring.field.one
            sj = ring.field.div(fi.lc, fj.lc)
            ti = tuple((mono_mul(e, mi), c) for e, c in fi.poly.terms)
            tj = tuple((mono_mul(e, mj), c) for e, c in fj.poly.terms)
            sterms = _scaled_sub(ring, ti, si, tj, sj)
            red, _ = _full_reduce(ring, sterms, work)
            if red:
                return False
    return True


def initial_monomials(G: GroebnerBasis):
    """Lead monomial generators of in(I) for a reduced basis."""
    return tuple(g.lm() for g in G.elements)
