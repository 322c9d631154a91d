"""Exact graded polynomial arithmetic: fields, monomial orders, Poly, binary forms.

Everything is immutable after construction and safe to share between
computations.  Coefficients are either `fractions.Fraction` (field "QQ") or
plain ints reduced mod p (field "Fp:p").  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, comb
import re


class RationalField:
    """Exact rationals; the default coefficient field."""

    name = "QQ"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, c):
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        if isinstance(c, str):
            return Fraction(c)
        raise TypeError(f"cannot coerce {c!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def to_string(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """Integers mod p, p prime; values normalized into [0, p)."""

    characteristic = None  # set per instance

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def coerce(self, c):
        if isinstance(c, int):
            return c % self.p
        if isinstance(c, Fraction):
            den = c.denominator % self.p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            return c.numerator * pow(den, self.p - 2, self.p) % self.p
        if isinstance(c, str):
            return self.coerce(Fraction(c))
        raise TypeError(f"cannot coerce {c!r} into {self.name}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def to_string(self, a):
        return str(a % self.p)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.name)


QQ = RationalField()


def field_from_name(name: str):
    if name == "QQ":
        return QQ
    if name.startswith("Fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r}")


class MonomialOrder:
    """Total, multiplicative monomial order.

    kind is one of "degrevlex", "lex", or "block"; a block order compares the
    first `elim` exponents degrevlex-first and eliminates those variables.
    Variable precedence is always x_0 > x_1 > ... > x_n.
    """

    __slots__ = ("kind", "elim")

    def __init__(self, kind: str = "degrevlex", elim: int = 0):
        if kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "block" and elim <= 0:
            raise ValueError("block order needs elim >= 1")
        self.kind = kind
        self.elim = elim if kind == "block" else 0

    def key(self, exps):
        """Sort key; greater key means greater monomial."""
        k = self.kind
        if k == "degrevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if k == "lex":
            return exps
        head, tail = exps[: self.elim], exps[self.elim :]
        return (
            sum(head),
            tuple(-e for e in reversed(head)),
            sum(tail),
            tuple(-e for e in reversed(tail)),
        )

    def cmp(self, u, v):
        ku, kv = self.key(u), self.key(v)
        if ku > kv:
            return 1
        if ku < kv:
            return -1
        return 0

    def __repr__(self):
        if self.kind == "block":
            return f"block({self.elim})"
        return self.kind

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.elim == self.elim
        )

    def __hash__(self):
        return hash((self.kind, self.elim))


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")

_ALIASES = {"x": 0, "y": 1, "z": 2, "w": 3}


class PolyRing:
    """Graded ring K[x_0..x_n] with a fixed monomial order.

    `weights` gives the degree of each variable; the default is the standard
    grading.  A weight-0 variable is used for family parameters.
    """

    __slots__ = ("vars", "field", "order", "weights", "nvars", "zero", "one", "_gens")

    def __init__(self, varnames, field=QQ, order=DEGREVLEX, weights=None):
        self.vars = tuple(varnames)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")
        self.field = field
        self.order = order
        self.nvars = len(self.vars)
        self.weights = tuple(weights) if weights is not None else (1,) * self.nvars
        if len(self.weights) != self.nvars:
            raise ValueError("weights length mismatch")
        self.zero = Poly(self, ())
        self.one = Poly(self, (((0,) * self.nvars, field.one),))
        self._gens = None

    def gens(self):
        if self._gens is None:
            gens = []
            for i in range(self.nvars):
                e = [0] * self.nvars
                e[i] = 1
                gens.append(Poly(self, ((tuple(e), self.field.one),)))
            self._gens = tuple(gens)
        return self._gens

    def gen(self, i):
        return self.gens()[i]

    def var_index(self, name: str) -> int:
        if name in self.vars:
            return self.vars.index(name)
        if name in _ALIASES and self.vars[0] == "x0":
            i = _ALIASES[name]
            if i < self.nvars:
                return i
        if name in ("t", "u") and self.vars == ("t", "u"):
            return ("t", "u").index(name)
        raise KeyError(f"unknown variable {name!r} in ring {self.vars}")

    def mono_degree(self, exps) -> int:
        if self.weights == (1,) * self.nvars:
            return sum(exps)
        return sum(e * w for e, w in zip(exps, self.weights))

    def term(self, coeff, exps):
        c = self.field.coerce(coeff)
        if c == self.field.zero:
            return self.zero
        return Poly(self, ((tuple(exps), c),))

    def const(self, coeff):
        return self.term(coeff, (0,) * self.nvars)

    def monomial(self, exps):
        return self.term(self.field.one, exps)

    def from_terms(self, pairs):
        """Build a Poly from unsorted (exps, coeff) pairs, combining duplicates."""
        acc = {}
        zero = self.field.zero
        add = self.field.add
        for exps, c in pairs:
            exps = tuple(exps)
            c = self.field.coerce(c)
            if exps in acc:
                s = add(acc[exps], c)
                if s == zero:
                    del acc[exps]
                else:
                    acc[exps] = s
            elif c != zero:
                acc[exps] = c
        key = self.order.key
        terms = tuple(sorted(acc.items(), key=lambda kv: key(kv[0]), reverse=True))
        return Poly(self, terms)

    def parse(self, text: str) -> "Poly":
        return _parse_poly(self, text)

    def dim_degree(self, d: int) -> int:
        """dim_K R_d for the standard grading."""
        if self.weights != (1,) * self.nvars:
            raise ValueError("dimension only defined for the standard grading")
        if d < 0:
            return 0
        return comb(d + self.nvars - 1, self.nvars - 1)

    def monomials_of_degree(self, d: int):
        """All exponent tuples of total degree d (standard grading)."""
        n = self.nvars
        out = []

        def rec(i, rem, cur):
            if i == n - 1:
                out.append(tuple(cur + [rem]))
                return
            for e in range(rem + 1):
                rec(i + 1, rem - e, cur + [e])

        rec(0, d, [])
        return out

    def __repr__(self):
        return f"{self.field}[{','.join(self.vars)}]/{self.order!r}"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.vars == self.vars
            and other.field == self.field
            and other.order == self.order
            and other.weights == self.weights
        )

    def __hash__(self):
        return hash((self.vars, self.field, self.order, self.weights))


def ring_xn(n: int, field=QQ, order=DEGREVLEX) -> PolyRing:
    """K[x0..xn], the ambient ring of P^n."""
    return PolyRing(tuple(f"x{i}" for i in range(n + 1)), field, order)


def ring_tu(field=QQ) -> PolyRing:
    """K[t,u], the homogeneous coordinate ring of P^1."""
    return PolyRing(("t", "u"), field, DEGREVLEX)


def mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def mono_divides(u, v):
    """True when u | v."""
    return all(a <= b for a, b in zip(u, v))


def mono_div(v, u):
    """v / u, assuming u | v."""
    return tuple(b - a for a, b in zip(u, v))


def mono_lcm(u, v):
    return tuple(max(a, b) for a, b in zip(u, v))


class Poly:
    """Immutable multivariate polynomial.

    terms: tuple of (exponent tuple, coefficient), strictly descending in the
    ring's monomial order, no zero coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def lt(self):
        """(exps, coeff) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    def lm(self):
        return self.lt()[0]

    def lc(self):
        return self.lt()[1]

    def degree(self) -> int:
        """Total (weighted) degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        md = self.ring.mono_degree
        return max(md(e) for e, _ in self.terms)

    def homogeneous_degree(self):
        """The common degree of all terms, or None if not homogeneous/zero."""
        if not self.terms:
            return None
        md = self.ring.mono_degree
        degs = {md(e) for e, _ in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return not self.terms or self.homogeneous_degree() is not None

    # -- arithmetic ------------------------------------------------------
    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("ring context mismatch")

    def __add__(self, other):
        self._check(other)
        return _merge(self.ring, self.terms, other.terms, False)

    def __sub__(self, other):
        self._check(other)
        return _merge(self.ring, self.terms, other.terms, True)

    def __neg__(self):
        neg = self.ring.field.neg
        return Poly(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        f = self.ring.field
        mul = f.mul
        zero = f.zero
        acc = {}
        short, long_ = (self.terms, other.terms)
        if len(short) > len(long_):
            short, long_ = long_, short
        for e1, c1 in short:
            for e2, c2 in long_:
                e = tuple(a + b for a, b in zip(e1, e2))
                p = mul(c1, c2)
                if e in acc:
                    s = f.add(acc[e], p)
                    if s == zero:
                        del acc[e]
                    else:
                        acc[e] = s
                else:
                    acc[e] = p
        key = self.ring.order.key
        terms = tuple(sorted(acc.items(), key=lambda kv: key(kv[0]), reverse=True))
        return Poly(self.ring, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        f = self.ring.field
        c = f.coerce(c)
        if c == f.zero:
            return self.ring.zero
        mul = f.mul
        return Poly(self.ring, tuple((e, mul(cc, c)) for e, cc in self.terms))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def mul_term(self, exps, coeff):
        """self * coeff*x^exps without dict churn (order is multiplicative)."""
        f = self.ring.field
        coeff = f.coerce(coeff)
        if coeff == f.zero or not self.terms:
            return self.ring.zero
        mul = f.mul
        return Poly(
            self.ring,
            tuple(
                (tuple(a + b for a, b in zip(e, exps)), mul(c, coeff))
                for e, c in self.terms
            ),
        )

    def monic(self):
        if not self.terms:
            return self
        lc = self.lc()
        if lc == self.ring.field.one:
            return self
        inv = self.ring.field.inv(lc)
        return self.scale(inv)

    def primitive(self):
        """Remove rational content; integer coefficients with gcd 1, lc > 0."""
        if not self.terms or self.ring.field is not QQ:
            return self
        num_gcd = 0
        den_lcm = 1
        for _, c in self.terms:
            num_gcd = gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
        factor = Fraction(den_lcm, num_gcd)
        if self.terms[0][1] < 0:
            factor = -factor
        if factor == 1:
            return self
        return self.scale(factor)

    # -- substitution ----------------------------------------------------
    def substitute(self, images, target: PolyRing):
        """Ring map sending variable i to images[i] (a Poly of target)."""
        if len(images) != self.ring.nvars:
            raise ValueError("one image per variable required")
        result = target.zero
        pow_cache = [{} for _ in range(self.ring.nvars)]

        def power(i, e):
            cache = pow_cache[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        for exps, c in self.terms:
            term = target.const(c if target.field == self.ring.field else c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, point):
        """Evaluate at a tuple of field elements."""
        f = self.ring.field
        point = [f.coerce(p) for p in point]
        total = f.zero
        for exps, c in self.terms:
            v = c
            for p, e in zip(point, exps):
                for _ in range(e):
                    v = f.mul(v, p)
            total = f.add(total, v)
        return total

    # -- misc ------------------------------------------------------------
    def coeff_of(self, exps):
        exps = tuple(exps)
        for e, c in self.terms:
            if e == exps:
                return c
        return self.ring.field.zero

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return poly_to_string(self)

    __str__ = __repr__


def _merge(ring, t1, t2, subtract):
    """Merge two descending term lists; core of add/sub."""
    f = ring.field
    key = ring.order.key
    zero = f.zero
    neg = f.neg
    add = f.add
    out = []
    i = j = 0
    n1, n2 = len(t1), len(t2)
    while i < n1 and j < n2:
        e1, c1 = t1[i]
        e2, c2 = t2[j]
        if e1 == e2:
            c = add(c1, neg(c2)) if subtract else add(c1, c2)
            if c != zero:
                out.append((e1, c))
            i += 1
            j += 1
        elif key(e1) > key(e2):
            out.append((e1, c1))
            i += 1
        else:
            out.append((e2, neg(c2) if subtract else c2))
            j += 1
    out.extend(t1[i:])
    if subtract:
        out.extend((e, neg(c)) for e, c in t2[j:])
    else:
        out.extend(t2[j:])
    return Poly(ring, tuple(out))


# -- text grammar ---------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\^|\*\*|[*+\-()]))"
)


def _parse_poly(ring: PolyRing, text: str) -> Poly:
    """Parse the polynomial grammar: terms joined by +/-, '^' or '**' powers."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"bad token at {text[pos:]!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", m.group("num")))
        elif m.group("var"):
            tokens.append(("var", m.group("var")))
        else:
            op = m.group("op")
            tokens.append(("op", "^" if op == "**" else op))
    tokens.append(("end", ""))

    idx = [0]

    def peek():
        return tokens[idx[0]]

    def advance():
        t = tokens[idx[0]]
        idx[0] += 1
        return t

    def parse_atom():
        kind, val = peek()
        if kind == "num":
            advance()
            return ring.const(Fraction(val))
        if kind == "var":
            advance()
            i = ring.var_index(val)
            e = [0] * ring.nvars
            e[i] = 1
            base = ring.monomial(e)
            return base
        if kind == "op" and val == "(":
            advance()
            p = parse_expr()
            k2, v2 = advance()
            if v2 != ")":
                raise ValueError("unbalanced parenthesis")
            return p
        raise ValueError(f"unexpected token {val!r}")

    def parse_power():
        base = parse_atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            advance()
            k2, v2 = advance()
            if k2 != "num" or "/" in v2:
                raise ValueError("exponent must be a non-negative integer")
            return base ** int(v2)
        return base

    def parse_factor_chain():
        p = parse_power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                advance()
                p = p * parse_power()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                # implicit multiplication, e.g. "2x0" or "3(x+y)"
                p = p * parse_power()
            else:
                return p

    def parse_expr():
        kind, val = peek()
        sign = 1
        while kind == "op" and val in "+-":
            advance()
            if val == "-":
                sign = -sign
            kind, val = peek()
        p = parse_factor_chain().scale(sign)
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                advance()
                s = -1 if val == "-" else 1
                kind2, val2 = peek()
                while kind2 == "op" and val2 in "+-":
                    advance()
                    if val2 == "-":
                        s = -s
                    kind2, val2 = peek()
                p = p + parse_factor_chain().scale(s)
            else:
                return p

    result = parse_expr()
    kind, val = peek()
    if kind != "end":
        raise ValueError(f"trailing tokens at {val!r}")
    return result


def poly_to_string(p: Poly) -> str:
    if not p.terms:
        return "0"
    f = p.ring.field
    parts = []
    for i, (exps, c) in enumerate(p.terms):
        mono_parts = []
        for name, e in zip(p.ring.vars, exps):
            if e == 1:
                mono_parts.append(name)
            elif e > 1:
                mono_parts.append(f"{name}^{e}")
        mono = "*".join(mono_parts)
        if f is QQ:
            neg = c < 0
            mag = -c if neg else c
        else:
            neg = False
            mag = c
        cstr = f.to_string(mag)
        if mono and cstr == "1":
            body = mono
        elif mono:
            body = f"{cstr}*{mono}"
        else:
            body = cstr
        if i == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


# -- binary forms in K[t,u] ------------------------------------------------


class BinaryForm:
    """Homogeneous element of K[t,u] (or the zero form)."""

    __slots__ = ("poly", "degree")

    def __init__(self, poly: Poly):
        if poly.ring.nvars != 2:
            raise ValueError("binary forms live in a 2-variable ring")
        d = poly.homogeneous_degree()
        if poly.terms and d is None:
            raise ValueError("binary form must be homogeneous")
        self.poly = poly
        self.degree = -1 if not poly.terms else d

    def is_zero(self):
        return not self.poly.terms

    def coeff_vector(self):
        """Coefficients (c_0..c_d) of sum c_j t^j u^(d-j); [] for zero."""
        if self.is_zero():
            return []
        d = self.degree
        vec = [self.poly.ring.field.zero] * (d + 1)
        for (a, b), c in self.poly.terms:
            vec[a] = c
        return vec

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return BinaryForm(self.poly * other.poly)
        return BinaryForm(self.poly * other)

    def __add__(self, other):
        return BinaryForm(self.poly + other.poly)

    def __sub__(self, other):
        return BinaryForm(self.poly - other.poly)

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and other.poly == self.poly

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return poly_to_string(self.poly)


def binary_form(text_or_poly, ring=None) -> BinaryForm:
    if isinstance(text_or_poly, BinaryForm):
        return text_or_poly
    if isinstance(text_or_poly, Poly):
        return BinaryForm(text_or_poly)
    if ring is None:
        ring = ring_tu()
    return BinaryForm(ring.parse(str(text_or_poly)))


def gcd_binary(forms) -> BinaryForm:
    """Monic gcd in K[t,u] via dehomogenization plus t/u-power bookkeeping."""
    forms = [binary_form(f) for f in forms]
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("gcd of all-zero forms")
    ringtu = nonzero[0].poly.ring
    f = ringtu.field

    min_t = min(min(a for (a, b), _ in g.poly.terms) for g in nonzero)
    min_u = min(min(b for (a, b), _ in g.poly.terms) for g in nonzero)

    # strip common t^a u^b, dehomogenize at u=1 -> univariate in t
    univariates = []
    for g in nonzero:
        coeffs = {}
        for (a, b), c in g.poly.terms:
            coeffs[a - min_t] = c
        deg = max(coeffs)
        univariates.append([coeffs.get(i, f.zero) for i in range(deg + 1)])

    def poly_mod(a, b):
        # univariate remainder, b non-zero
        a = a[:]
        db, lb = len(b) - 1, b[-1]
        inv_lb = f.inv(lb)
        while len(a) - 1 >= db and any(c != f.zero for c in a):
            while a and a[-1] == f.zero:
                a.pop()
            if len(a) - 1 < db:
                break
            factor = f.mul(a[-1], inv_lb)
            shift = len(a) - 1 - db
            for i, bc in enumerate(b):
                a[shift + i] = f.sub(a[shift + i], f.mul(factor, bc))
            while a and a[-1] == f.zero:
                a.pop()
        return a

    g = univariates[0]
    for h in univariates[1:]:
        a, b = g, h
        while b and any(c != f.zero for c in b):
            a, b = b, poly_mod(a, b)
        g = a
        while g and g[-1] == f.zero:
            g.pop()
        if len(g) == 1:
            break

    # re-homogenize g to degree len(g)-1 and restore t^min_t u^min_u
    d = len(g) - 1
    terms = []
    for j, c in enumerate(g):
        if c != f.zero:
            terms.append(((j + min_t, d - j + min_u), c))
    p = ringtu.from_terms(terms)
    return BinaryForm(p.monic())
