"""Graded ideal algebra: sum/product/power, elimination, intersection,
quotient, saturation, Hilbert functions and polynomials.

Equality of ideals is always decided through the canonical reduced Groebner
basis.  Saturation iterates ideal quotients to a fixed point; colons by a
single variable use the reverse-lex division shortcut (Eisenbud-style
crystallization) which the test suite cross-validates against the generic
elimination route.
"""

from __future__ import annotations

import json
import random
from math import comb

from .groebner import GroebnerBasis, buchberger, normal_form
from .ring import (
    DEGREVLEX,
    MonomialOrder,
    Poly,
    PolyRing,
    QQ,
    field_from_name,
    mono_div,
    mono_divides,
    poly_to_string,
)


class Ideal:
    """Homogeneous ideal with cached reduced Groebner basis and Hilbert data."""

    __slots__ = ("ring", "gens", "_gb", "_hilbert")

    def __init__(self, ring: PolyRing, gens, _gb=None):
        self.ring = ring
        norm = []
        seen = set()
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"non-homogeneous generator: {g}")
            g = g.primitive() if ring.field is QQ else g.monic()
            if g.terms not in seen:
                seen.add(g.terms)
                norm.append(g)
        norm.sort(key=lambda p: (p.homogeneous_degree(), ring.order.key(p.lm()), p.terms))
        self.gens = tuple(norm)
        self._gb = _gb
        self._hilbert = None

    # -- basics ----------------------------------------------------------
    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(self.gens, self.ring)
        return self._gb

    def initial_ideal(self) -> "Ideal":
        """Monomial ideal of lead terms (same Hilbert function)."""
        gb = self.groebner()
        return Ideal(self.ring, [self.ring.monomial(m) for m in gb.lead_monomials()])

    def contains(self, f: Poly) -> bool:
        if f.is_zero():
            return True
        rem, _ = normal_form(f, self.groebner())
        return rem.is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return False
        return self.groebner().elements == other.groebner().elements

    def __hash__(self):
        return hash((self.ring, self.groebner().elements))

    def is_zero(self) -> bool:
        return not self.gens

    def max_gen_degree(self) -> int:
        return max((g.homogeneous_degree() for g in self.gens), default=0)

    # -- generator-level algebra ------------------------------------------
    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("ring context mismatch")

    def __add__(self, other):
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, ())
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative ideal power")
        if k == 0:
            return Ideal(self.ring, (self.ring.one,))
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    # -- serialization -----------------------------------------------------
    def to_json(self) -> str:
        doc = {
            "vars": list(self.ring.vars),
            "field": self.ring.field.name,
            "order": repr(self.ring.order),
            "generators": [poly_to_string(g) for g in self.gens],
        }
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Ideal":
        doc = json.loads(text)
        order_name = doc.get("order", "degrevlex")
        if order_name == "degrevlex":
            order = DEGREVLEX
        elif order_name == "lex":
            order = MonomialOrder("lex")
        elif order_name.startswith("block("):
            order = MonomialOrder("block", int(order_name[6:-1]))
        else:
            raise ValueError(f"unknown order {order_name!r}")
        ring = PolyRing(doc["vars"], field_from_name(doc["field"]), order)
        return Ideal(ring, [ring.parse(s) for s in doc["generators"]])

    def __repr__(self):
        gens = ", ".join(poly_to_string(g) for g in self.gens)
        return f"Ideal({gens})"

    # -- Hilbert data ------------------------------------------------------
    def hilbert_numerator(self):
        """K-polynomial of R/I: HS_{R/I}(t) * (1-t)^nvars, as {degree: coeff}."""
        leads = self.groebner().lead_monomials()
        return _monomial_numerator(leads, self.ring.nvars)

    def hilbert_value(self, d: int) -> int:
        """dim_K (R/I)_d via standard-monomial counting on in(I)."""
        if self.ring.weights != (1,) * self.ring.nvars:
            raise ValueError("Hilbert data needs the standard grading")
        if d < 0:
            return 0
        n = self.ring.nvars - 1
        numer = self.hilbert_numerator()
        return sum(c * comb(d - k + n, n) for k, c in numer.items() if k <= d)

    def hilbert(self, degree_cap: int = 60) -> "HilbertData":
        if self._hilbert is None:
            self._hilbert = _hilbert_data(self, degree_cap)
        return self._hilbert


class HilbertData:
    """Hilbert function window plus the (linear) Hilbert polynomial."""

    __slots__ = ("values", "polynomial", "degree", "genus")

    def __init__(self, values, polynomial):
        self.values = values  # dict degree -> dim_K (R/I)_d
        self.polynomial = tuple(polynomial)  # (c0, c1): P(t) = c1*t + c0
        c0, c1 = self.polynomial
        self.degree = c1
        self.genus = 1 - c0 if c1 > 0 else None

    def poly_at(self, d: int):
        c0, c1 = self.polynomial
        return c0 + c1 * d

    def __repr__(self):
        c0, c1 = self.polynomial
        return f"HilbertData(P(t) = {c1}*t + {c0})"


def _hilbert_data(I: Ideal, degree_cap: int) -> HilbertData:
    d0 = I.max_gen_degree() + 2
    values = {}

    def val(d):
        if d not in values:
            values[d] = I.hilbert_value(d)
        return values[d]

    start = d0
    while start + 5 <= d0 + degree_cap:
        window = [val(start + k) for k in range(6)]
        slope = window[1] - window[0]
        if all(window[k + 1] - window[k] == slope for k in range(5)):
            c1 = slope
            c0 = window[0] - c1 * start
            for d in range(0, start):
                val(d)
            return HilbertData(values, (c0, c1))
        start += 1
    raise ArithmeticError(
        "Hilbert polynomial window never stabilized; "
        "input is likely not saturated or not a curve"
    )


# -- monomial numerator (exact standard-monomial counting) ------------------


def _minimalize_monomials(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(mono_divides(p, m) for p in out):
            out.append(m)
    return out


def _monomial_numerator(leads, nvars):
    """Numerator of the Hilbert series of R/<leads> over (1-t)^nvars."""

    def key_of(monos):
        return tuple(sorted(monos))

    memo = {}

    def go(monos):
        monos = _minimalize_monomials(monos)
        if not monos:
            return {0: 1}
        if any(sum(m) == 0 for m in monos):
            return {}
        k = key_of(monos)
        if k in memo:
            return memo[k]
        # coprime product shortcut
        support = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
        pairwise_coprime = all(
            not (support[i] & support[j])
            for i in range(len(monos))
            for j in range(i + 1, len(monos))
        )
        if pairwise_coprime:
            numer = {0: 1}
            for m in monos:
                d = sum(m)
                new = {}
                for k2, c in numer.items():
                    new[k2] = new.get(k2, 0) + c
                    new[k2 + d] = new.get(k2 + d, 0) - c
                numer = {k2: c for k2, c in new.items() if c}
            memo[k] = numer
            return numer
        # pivot on a variable occurring in the most non-pure generators
        counts = [0] * nvars
        for m, sup in zip(monos, support):
            if len(sup) > 1:
                for i in sup:
                    counts[i] += 1
        piv = max(range(nvars), key=lambda i: counts[i])
        pivot = tuple(1 if i == piv else 0 for i in range(nvars))
        # N(J) = N(J + <x>) + t * N(J : x)
        plus = go([m for m in monos if m[piv] == 0] + [pivot])
        colon = go([mono_div(m, pivot) if m[piv] else m for m in monos])
        numer = dict(plus)
        for k2, c in colon.items():
            numer[k2 + 1] = numer.get(k2 + 1, 0) + c
        numer = {k2: c for k2, c in numer.items() if c}
        memo[k] = numer
        return numer

    return go(list(leads))


# -- elimination, intersection, quotient, saturation -------------------------


def eliminate(I: Ideal, elim_vars) -> Ideal:
    """I ∩ K[remaining vars], returned in the smaller ring."""
    ring = I.ring
    if isinstance(elim_vars, (str, int)):
        elim_vars = [elim_vars]
    idx = sorted(
        ring.var_index(v) if isinstance(v, str) else int(v) for v in elim_vars
    )
    if len(idx) == 0:
        return I
    if len(idx) == ring.nvars:
        raise ValueError("cannot eliminate every variable")
    keep = [i for i in range(ring.nvars) if i not in idx]
    perm = idx + keep  # eliminated block first
    big = PolyRing(
        tuple(ring.vars[i] for i in perm),
        ring.field,
        MonomialOrder("block", len(idx)),
        weights=tuple(ring.weights[i] for i in perm),
    )

    # permute exponents: new position j holds exponent of old variable perm[j]
    def permute(p):
        return big.from_terms(
            (tuple(e[perm[j]] for j in range(ring.nvars)), c) for e, c in p.terms
        )

    gb = buchberger([permute(g) for g in I.gens], big, allow_inhomogeneous=True)
    small = PolyRing(
        tuple(ring.vars[i] for i in keep),
        ring.field,
        ring.order if ring.order.kind != "block" else DEGREVLEX,
        weights=tuple(ring.weights[i] for i in keep),
    )
    nel = len(idx)
    out = []
    for g in gb.elements:
        if all(all(e[j] == 0 for j in range(nel)) for e, _ in g.terms):
            out.append(
                small.from_terms(
                    (tuple(e[nel:]), c) for e, c in g.terms
                )
            )
    return Ideal(small, out)


def _restrict_to_subring(I: Ideal, target: PolyRing, keep_idx) -> Ideal:
    gens = []
    for g in I.gens:
        gens.append(
            target.from_terms((tuple(e[i] for i in keep_idx), c) for e, c in g.terms)
        )
    return Ideal(target, gens)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating the auxiliary variable from s*I + (1-s)*J."""
    if I.ring != J.ring:
        raise ValueError("ring context mismatch")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, ())
    aux = "s_"
    while aux in ring.vars:
        aux += "_"
    big = PolyRing(
        (aux,) + ring.vars,
        ring.field,
        MonomialOrder("block", 1),
        weights=(0,) + ring.weights,
    )
    s = big.gen(0)
    one = big.one

    def lift(p):
        return big.from_terms(((0,) + e, c) for e, c in p.terms)

    gens = [s * lift(f) for f in I.gens]
    gens += [(one - s) * lift(g) for g in J.gens]
    gb = buchberger(gens, big, allow_inhomogeneous=True)
    out = []
    for g in gb.elements:
        if all(e[0] == 0 for e, _ in g.terms):
            out.append(ring.from_terms((e[1:], c) for e, c in g.terms))
    return Ideal(ring, out)


def _colon_by_variable(I: Ideal, var_index: int) -> Ideal:
    """I : x_i via the reverse-lex trick with x_i permuted last.

    Valid for homogeneous I in the standard grading under degrevlex: the
    reduced GB splits into elements divisible by the last variable (divide
    them) and the rest (keep them).
    """
    ring = I.ring
    perm = [i for i in range(ring.nvars) if i != var_index] + [var_index]
    permed = PolyRing(
        tuple(ring.vars[i] for i in perm), ring.field, DEGREVLEX
    )

    def permute(p, target, pm):
        return target.from_terms(
            (tuple(e[pm[j]] for j in range(len(pm))), c) for e, c in p.terms
        )

    gb = buchberger([permute(g, permed, perm) for g in I.gens], permed)
    last = permed.nvars - 1
    out = []
    for g in gb.elements:
        k = min(e[last] for e, _ in g.terms)
        if k > 0:
            g = Poly(
                permed,
                tuple(
                    (e[:last] + (e[last] - k,), c) for e, c in g.terms
                ),
            )
        out.append(g)
    inv = [perm.index(i) for i in range(ring.nvars)]
    return Ideal(ring, [permute(g, ring, inv) for g in out])


def _colon_single(I: Ideal, g: Poly) -> Ideal:
    """I : g via intersection-and-divide (fast path for single variables)."""
    ring = I.ring
    if g.is_zero():
        raise ZeroDivisionError("colon by zero")
    if g.homogeneous_degree() == 0:
        return I
    if (
        len(g.terms) == 1
        and sum(g.lm()) == 1
        and ring.order == DEGREVLEX
        and ring.weights == (1,) * ring.nvars
    ):
        return _colon_by_variable(I, g.lm().index(1))
    meet = intersect(I, Ideal(ring, (g,)))
    out = []
    for f in meet.gens:
        q, r = _exact_divide(f, g)
        if r is not None:
            raise ArithmeticError("intersection element not divisible in colon")
        out.append(q)
    return Ideal(ring, out)


def _exact_divide(f: Poly, g: Poly):
    """(f/g, None) when g divides f, else (None, remainder)."""
    rem, quots = normal_form(f, [g])
    if rem.is_zero():
        return quots[0], None
    return None, rem


def quotient(I: Ideal, J: Ideal) -> Ideal:
    """I : J = {f : f*J ⊆ I} = ∩_g (I : g) over the generators of J."""
    if I.ring != J.ring:
        raise ValueError("ring context mismatch")
    if J.is_zero():
        raise ZeroDivisionError("quotient by the zero ideal")
    colons = []
    for g in J.gens:
        c = _colon_single(I, g)
        if c == I:
            # every colon contains I, so the intersection collapses to I
            return I
        colons.append(c)
    # drop colon ideals containing another one; they are redundant in the meet
    minimal = []
    for i, c in enumerate(colons):
        redundant = False
        for j, other in enumerate(colons):
            if i == j:
                continue
            if c.contains_ideal(other):
                if other.contains_ideal(c):
                    if j < i:  # equal ideals: keep the first occurrence
                        redundant = True
                        break
                else:
                    redundant = True
                    break
        if not redundant:
            minimal.append(c)
    result = minimal[0]
    for c in minimal[1:]:
        result = intersect(result, c)
    return result


def maximal_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, ring.gens())


def saturate(I: Ideal, J: Ideal | None = None, max_iter: int = 60) -> Ideal:
    """I : J^∞ by iterating K <- (K : J) to the canonical fixed point."""
    if J is None:
        J = maximal_ideal(I.ring)
    K = I
    for _ in range(max_iter):
        K2 = quotient(K, J)
        if K2 == K:
            return K
        K = K2
    raise ArithmeticError("saturation did not stabilize")


def is_saturated(I: Ideal) -> bool:
    return quotient(I, maximal_ideal(I.ring)) == I


# -- Artinian reduction / h-vector -------------------------------------------


def h_vector(I: Ideal, seed: int = 0):
    """Hilbert function of R/(I + two seeded random linear forms).

    For a curve with sufficiently general forms this is the second difference
    of the Hilbert function.  Retries with fresh seeds when the reduction is
    not Artinian.
    """
    ring = I.ring
    for attempt in range(5):
        rng = random.Random(f"h-vector:{seed}:{attempt}")
        forms = []
        while len(forms) < 2:
            coeffs = [rng.randint(-3, 3) for _ in range(ring.nvars)]
            if any(coeffs):
                e = [0] * ring.nvars
                p = ring.zero
                for i, c in enumerate(coeffs):
                    if c:
                        ev = [0] * ring.nvars
                        ev[i] = 1
                        p = p + ring.term(c, ev)
                forms.append(p)
        K = I + Ideal(ring, forms)
        leads = K.groebner().lead_monomials()
        # Artinian <=> in(K) contains a pure power of every variable
        artinian = all(
            any(all(e == 0 for j, e in enumerate(m) if j != i) and m[i] > 0 for m in leads)
            for i in range(ring.nvars)
        )
        if not artinian:
            continue
        vals = []
        d = 0
        while True:
            v = K.hilbert_value(d)
            if v == 0:
                break
            vals.append(v)
            d += 1
            if d > 200:
                raise ArithmeticError("Artinian reduction did not terminate")
        return tuple(vals)
    raise ArithmeticError("no seeded linear forms produced an Artinian reduction")
