"""Polynomials over prime fields F_p and residue fields F_p[x]/(phi).

Representation conventions:

* FpPolynomial stores ascending coefficients, each reduced to [0, p).
* A ResidueField is F_p[x]/(modulus) for a monic irreducible modulus;
  irreducibility is checked eagerly at construction.  F_p itself is the
  degree-one case (modulus x), so one factorization engine serves both
  prime fields and their extensions.
* ResidueFieldElem is printed in terms of the generator j = image of x.
* ExtPolynomial is a polynomial in y over a ResidueField.

Factor lists are always sorted by (degree, coefficient order) so every
run of the engine produces identical output.
"""

from __future__ import annotations

import itertools
import random

from .errors import NonMonicModulus, NonPrime, ReducibleModulus, ZeroModP
from .intpoly import IntPolynomial, is_prime


class FpPolynomial:
    """Dense polynomial over F_p, coefficients in [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        self.p = p
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def from_int_poly(f: IntPolynomial, p: int) -> FpPolynomial:
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        return FpPolynomial(p, f.coeffs)

    @staticmethod
    def x(p: int) -> FpPolynomial:
        return FpPolynomial(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FpPolynomial)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __add__(self, other: FpPolynomial) -> FpPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.p
        return FpPolynomial(self.p, out)

    def __neg__(self) -> FpPolynomial:
        return FpPolynomial(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: FpPolynomial) -> FpPolynomial:
        return self + (-other)

    def __mul__(self, other) -> FpPolynomial:
        if isinstance(other, int):
            return FpPolynomial(self.p, [c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPolynomial(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: FpPolynomial):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv_lead = pow(other.leading(), -1, p)
        rem = list(self.coeffs)
        d = other.degree
        if len(rem) <= d:
            return FpPolynomial(p, ()), self
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - d - 1, -1, -1):
            q = rem[k + d] * inv_lead % p
            quot[k] = q
            if q:
                for j in range(d + 1):
                    rem[k + j] = (rem[k + j] - q * other.coeffs[j]) % p
        return FpPolynomial(p, quot), FpPolynomial(p, rem[:d])

    def __floordiv__(self, other: FpPolynomial) -> FpPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: FpPolynomial) -> FpPolynomial:
        return divmod(self, other)[1]

    def monic(self) -> FpPolynomial:
        if self.is_zero() or self.is_monic():
            return self
        return self * pow(self.leading(), -1, self.p)

    def gcd(self, other: FpPolynomial) -> FpPolynomial:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> FpPolynomial:
        return FpPolynomial(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def pow_mod(self, e: int, modulus: FpPolynomial) -> FpPolynomial:
        result = FpPolynomial(self.p, (1,))
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def is_irreducible(self) -> bool:
        """Rabin's test: deterministic for any p and degree."""
        n = self.degree
        if n < 1:
            return False
        if n == 1:
            return True
        p = self.p
        g = self.monic()
        x = FpPolynomial.x(p)
        w = x
        for _ in range(n):
            w = w.pow_mod(p, g)
        if w != x % g:
            return False
        for r in _prime_divisors(n):
            w = x
            for _ in range(n // r):
                w = w.pow_mod(p, g)
            if g.gcd(w - x).degree != 0:
                return False
        return True

    def lift(self) -> IntPolynomial:
        """Canonical lift to Z[x] with coefficients in [0, p)."""
        return IntPolynomial(self.coeffs)

    def __str__(self) -> str:
        return _format_poly(self.coeffs, "x", str)

    def __repr__(self) -> str:
        return f"FpPolynomial(p={self.p}, '{self}')"


def _prime_divisors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _format_poly(coeffs, var: str, coeff_str) -> str:
    """Shared ascending-coefficients pretty printer."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if _is_zero_coeff(c):
            continue
        cs = coeff_str(c)
        if i == 0:
            body = cs
        else:
            xpart = var if i == 1 else f"{var}^{i}"
            if cs == "1":
                body = xpart
            elif any(ch in cs for ch in "+- ") and not cs.lstrip("-").isdigit():
                body = f"({cs})*{xpart}"
            else:
                body = f"{cs}*{xpart}"
        terms.append(body)
    return " + ".join(terms) if terms else "0"


def _is_zero_coeff(c) -> bool:
    return c == 0 if isinstance(c, int) else c.is_zero()


class ResidueField:
    """F_p[x]/(modulus) with monic irreducible modulus, validated eagerly."""

    _cache: dict = {}

    def __init__(self, p: int, modulus: FpPolynomial):
        if not is_prime(p):
            raise NonPrime(f"{p} is not prime")
        if modulus.p != p:
            raise ValueError("modulus characteristic differs from p")
        if not modulus.is_monic():
            raise NonMonicModulus("residue-field modulus must be monic")
        if not modulus.is_irreducible():
            raise ReducibleModulus(f"{modulus} is reducible over F_{p}")
        self.p = p
        self.modulus = modulus
        self.degree = modulus.degree
        self.order = p**modulus.degree

    @classmethod
    def get(cls, p: int, modulus: FpPolynomial) -> ResidueField:
        key = (p, modulus.coeffs)
        field = cls._cache.get(key)
        if field is None:
            field = cls(p, modulus)
            cls._cache[key] = field
        return field

    @classmethod
    def prime_field(cls, p: int) -> ResidueField:
        """F_p itself, realized with modulus x."""
        return cls.get(p, FpPolynomial.x(p))

    def element(self, rep: FpPolynomial) -> ResidueFieldElem:
        return ResidueFieldElem(self, rep % self.modulus)

    def from_int(self, c: int) -> ResidueFieldElem:
        return self.element(FpPolynomial(self.p, (c,)))

    def from_int_poly(self, f: IntPolynomial) -> ResidueFieldElem:
        return self.element(FpPolynomial(self.p, f.coeffs))

    def zero(self) -> ResidueFieldElem:
        return self.from_int(0)

    def one(self) -> ResidueFieldElem:
        return self.from_int(1)

    def gen(self) -> ResidueFieldElem:
        """The image j of x in the residue field."""
        return self.element(FpPolynomial.x(self.p))

    def elements(self):
        """All q elements, in deterministic order."""
        for tup in itertools.product(range(self.p), repeat=self.degree):
            yield self.element(FpPolynomial(self.p, tup))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResidueField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"ResidueField(F_{self.p}[x]/({self.modulus}))"


class ResidueFieldElem:
    """Element of a ResidueField; rep is fully reduced."""

    __slots__ = ("field", "rep")

    def __init__(self, field: ResidueField, rep: FpPolynomial):
        self.field = field
        self.rep = rep

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ResidueFieldElem)
            and self.field == other.field
            and self.rep == other.rep
        )

    def __hash__(self):
        return hash((self.field.p, self.field.modulus.coeffs, self.rep.coeffs))

    def sort_key(self) -> int:
        """Rank by rep value c0 + c1*p + ... so that 0 < 1 < ... < j < j+1."""
        value = 0
        for c in reversed(self.rep.coeffs):
            value = value * self.field.p + c
        return value

    def __add__(self, other: ResidueFieldElem) -> ResidueFieldElem:
        return ResidueFieldElem(self.field, self.rep + other.rep)

    def __neg__(self) -> ResidueFieldElem:
        return ResidueFieldElem(self.field, -self.rep)

    def __sub__(self, other: ResidueFieldElem) -> ResidueFieldElem:
        return ResidueFieldElem(self.field, self.rep - other.rep)

    def __mul__(self, other: ResidueFieldElem) -> ResidueFieldElem:
        return ResidueFieldElem(self.field, self.rep * other.rep % self.field.modulus)

    def inverse(self) -> ResidueFieldElem:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero residue-field element")
        # extended euclid on (rep, modulus)
        p = self.field.p
        a, b = self.rep, self.field.modulus
        s0, s1 = FpPolynomial(p, (1,)), FpPolynomial(p, ())
        while not b.is_zero():
            q, r = divmod(a, b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
        inv_lead = pow(a.leading(), -1, p)
        return self.field.element(s0 * inv_lead)

    def __truediv__(self, other: ResidueFieldElem) -> ResidueFieldElem:
        return self * other.inverse()

    def __pow__(self, e: int) -> ResidueFieldElem:
        if e < 0:
            return self.inverse() ** (-e)
        return ResidueFieldElem(
            self.field, self.rep.pow_mod(e, self.field.modulus)
        )

    def __str__(self) -> str:
        if self.rep.is_zero():
            return "0"
        return _format_poly(self.rep.coeffs, "j", str)

    def __repr__(self) -> str:
        return f"<{self} in {self.field!r}>"


class ExtPolynomial:
    """Polynomial in y over a ResidueField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ResidueField, coeffs):
        self.field = field
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def from_ints(field: ResidueField, ints) -> ExtPolynomial:
        return ExtPolynomial(field, [field.from_int(c) for c in ints])

    @staticmethod
    def y(field: ResidueField) -> ExtPolynomial:
        return ExtPolynomial(field, (field.zero(), field.one()))

    @staticmethod
    def one(field: ResidueField) -> ExtPolynomial:
        return ExtPolynomial(field, (field.one(),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> ResidueFieldElem:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtPolynomial)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.modulus.coeffs) + tuple(c.rep.coeffs for c in self.coeffs))

    def sort_key(self):
        return (self.degree, tuple(c.sort_key() for c in self.coeffs))

    def __add__(self, other: ExtPolynomial) -> ExtPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return ExtPolynomial(self.field, out)

    def __neg__(self) -> ExtPolynomial:
        return ExtPolynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: ExtPolynomial) -> ExtPolynomial:
        return self + (-other)

    def __mul__(self, other) -> ExtPolynomial:
        if isinstance(other, ResidueFieldElem):
            return ExtPolynomial(self.field, [c * other for c in self.coeffs])
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return ExtPolynomial(self.field, out)

    def __divmod__(self, other: ExtPolynomial):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        inv_lead = other.leading().inverse()
        d = other.degree
        rem = list(self.coeffs)
        if len(rem) <= d:
            return ExtPolynomial(self.field, ()), self
        quot = [self.field.zero()] * (len(rem) - d)
        for k in range(len(rem) - d - 1, -1, -1):
            q = rem[k + d] * inv_lead
            quot[k] = q
            if not q.is_zero():
                for j in range(d + 1):
                    rem[k + j] = rem[k + j] - q * other.coeffs[j]
        return ExtPolynomial(self.field, quot), ExtPolynomial(self.field, rem[:d])

    def __floordiv__(self, other: ExtPolynomial) -> ExtPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: ExtPolynomial) -> ExtPolynomial:
        return divmod(self, other)[1]

    def monic(self) -> ExtPolynomial:
        if self.is_zero() or self.is_monic():
            return self
        return self * self.leading().inverse()

    def gcd(self, other: ExtPolynomial) -> ExtPolynomial:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> ExtPolynomial:
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(self.field.from_int(i) * self.coeffs[i])
        return ExtPolynomial(self.field, out)

    def pow_mod(self, e: int, modulus: ExtPolynomial) -> ExtPolynomial:
        result = ExtPolynomial.one(self.field)
        base = self % modulus
        while e:
            if e & 1:
                result = result * base % modulus
            base = base * base % modulus
            e >>= 1
        return result

    def evaluate(self, x: ResidueFieldElem) -> ResidueFieldElem:
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return _format_poly(self.coeffs, "y", str)

    def __repr__(self) -> str:
        return f"ExtPolynomial('{self}' over {self.field!r})"


# ---------------------------------------------------------------------------
# factorization engine (squarefree split + distinct degree + equal degree)

_EDF_FALLBACK_SEED = 0x0E0F


def is_squarefree_ext(g: ExtPolynomial) -> bool:
    """True iff gcd(g, g') is constant.  A zero derivative means a p-th power."""
    if g.is_zero():
        raise ValueError("squarefree test of the zero polynomial")
    if g.degree == 0:
        return True
    return g.gcd(g.derivative()).degree == 0


def _p_th_root(g: ExtPolynomial) -> ExtPolynomial:
    """Inverse Frobenius on a polynomial of the form h(y^p)."""
    field = g.field
    p = field.p
    root_exp = field.order // p  # c -> c^(q/p) is the p-th root in F_q
    out = []
    for i in range(0, len(g.coeffs), p):
        out.append(g.coeffs[i] ** root_exp)
    return ExtPolynomial(field, out)


def _squarefree_split(g: ExtPolynomial):
    """Monic g -> list of (monic squarefree part, multiplicity)."""
    out = []
    if g.degree < 1:
        return out
    d = g.derivative()
    if d.is_zero():
        return [(h, mult * g.field.p) for h, mult in _squarefree_split(_p_th_root(g))]
    c = g.gcd(d)
    w = g // c
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if c.degree > 0:
        out.extend((h, mult * g.field.p) for h, mult in _squarefree_split(_p_th_root(c)))
    return out


def _distinct_degree_split(g: ExtPolynomial):
    """Monic squarefree g -> list of (product of irreducibles of degree d, d)."""
    field = g.field
    q = field.order
    y = ExtPolynomial.y(field)
    out = []
    w = y % g
    rest = g
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        w = w.pow_mod(q, rest)
        h = rest.gcd(w - y)
        if h.degree > 0:
            out.append((h, d))
            rest = rest // h
            w = w % rest
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def _edf_trials(field: ResidueField, max_det_degree: int):
    """Deterministic low-degree trial polynomials, then seeded random ones."""
    for deg in range(1, max_det_degree + 1):
        lower = list(itertools.product(field.elements(), repeat=deg))
        for lead in field.elements():
            if lead.is_zero():
                continue
            for tail in lower:
                yield ExtPolynomial(field, list(tail) + [lead])
    rng = random.Random(_EDF_FALLBACK_SEED)
    p = field.p
    while True:
        deg = max_det_degree + 1
        coeffs = [field.element(FpPolynomial(p, [rng.randrange(p) for _ in range(field.degree)])) for _ in range(deg + 1)]
        yield ExtPolynomial(field, coeffs)


def _split_equal_degree(g: ExtPolynomial, d: int):
    """Monic product of distinct degree-d irreducibles -> sorted factor list."""
    field = g.field
    if g.degree == d:
        return [g]
    q = field.order
    one = ExtPolynomial.one(field)
    half = (q**d - 1) // 2
    trace_len = d * _log_int(q, 2) if q % 2 == 0 else 0
    for trial in _edf_trials(field, max_det_degree=2):
        if q % 2:
            w = trial.pow_mod(half, g) - one
        else:
            acc = trial % g
            term = trial % g
            for _ in range(trace_len - 1):
                term = term * term % g
                acc = acc + term
            w = acc
        h = g.gcd(w)
        if 0 < h.degree < g.degree:
            return _split_equal_degree(h, d) + _split_equal_degree(g // h, d)
    raise RuntimeError("equal-degree splitting failed")  # pragma: no cover


def _log_int(q: int, base: int) -> int:
    k = 0
    while q > 1:
        q //= base
        k += 1
    return k


def factor_ext(g: ExtPolynomial):
    """Complete factorization over the residue field.

    Returns [(monic irreducible, multiplicity), ...] sorted by
    (degree, coefficient order); the unit g.leading() is implicit.
    """
    if g.is_zero():
        raise ValueError("factorization of the zero polynomial")
    if g.degree < 1:
        raise ValueError("factorization requires degree >= 1")
    out = []
    for part, mult in _squarefree_split(g.monic()):
        for prod, d in _distinct_degree_split(part):
            for irr in _split_equal_degree(prod, d):
                out.append((irr, mult))
    out.sort(key=lambda fm: fm[0].sort_key())
    return out


def factor_mod_p(f: IntPolynomial, p: int):
    """Factor f mod p into monic irreducibles over F_p.

    Returns [(FpPolynomial, multiplicity), ...] sorted by (degree,
    coefficient order).  Results are cached on the reduced polynomial.
    """
    fp = FpPolynomial.from_int_poly(f, p)
    if fp.is_zero():
        raise ZeroModP(f"polynomial vanishes identically mod {p}")
    return _factor_fp_cached(fp)


_FACTOR_CACHE: dict = {}


def _factor_fp_cached(fp: FpPolynomial):
    key = (fp.p, fp.coeffs)
    hit = _FACTOR_CACHE.get(key)
    if hit is not None:
        return hit
    if fp.degree < 1:
        result = []
    else:
        field = ResidueField.prime_field(fp.p)
        ext = ExtPolynomial.from_ints(field, fp.coeffs)
        result = [
            (FpPolynomial(fp.p, [c.rep[0] for c in irr.coeffs]), mult)
            for irr, mult in factor_ext(ext)
        ]
    _FACTOR_CACHE[key] = result
    return result


def _mobius(n: int) -> int:
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def count_monic_irreducibles(p: int, d: int) -> int:
    """Number of monic irreducible degree-d polynomials over F_p.

    Standard necklace count: (1/d) * sum over e | d of mu(e) * p^(d/e).

    >>> count_monic_irreducibles(2, 2)
    1
    >>> count_monic_irreducibles(3, 2)
    3
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if d < 1:
        raise ValueError("degree must be positive")
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _mobius(e) * p ** (d // e)
    return total // d
