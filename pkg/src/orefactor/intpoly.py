"""Exact integer polynomials, p-adic valuations and base-phi expansions.

A polynomial is a dense, immutable sequence of arbitrary-precision integer
coefficients in ascending order: IntPolynomial([1, 0, 3]) is 3x^2 + 1.
Everything here is pure integer arithmetic; nothing ever touches floats.

Valuations are plain nonnegative ints, except the valuation of zero which
is the module-level INFINITY singleton (it compares above every int).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonMonicModulus, NonPrime


class _PInfinity:
    """Valuation of zero: a single object larger than every integer."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is INFINITY

    def __gt__(self, other):
        return other is not INFINITY

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return INFINITY

    __radd__ = __add__

    def __repr__(self):
        return "INFINITY"


INFINITY = _PInfinity()

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division by small primes, then Miller-Rabin with the fixed
    witness set {2,...,37}, which is deterministic for n < 3.3e24 (in
    particular for everything below 2^64).  Larger n reuse the same
    witnesses; at desk scale such inputs do not occur.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")


class IntPolynomial:
    """Dense monic-friendly polynomial over Z.

    >>> f = IntPolynomial([-33] + [0] * 11 + [1])   # x^12 - 33
    >>> f.degree
    12
    >>> str(IntPolynomial([1, 1, 1]))
    'x^2 + x + 1'
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def constant(c: int) -> IntPolynomial:
        return IntPolynomial([c])

    @staticmethod
    def pure(n: int, m: int) -> IntPolynomial:
        """x^n - m, the defining polynomial of a pure field."""
        return IntPolynomial([-m] + [0] * (n - 1) + [1])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
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
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: IntPolynomial):
        """Euclidean division by a monic divisor (exact over Z)."""
        if not other.is_monic():
            raise NonMonicModulus("division requires a monic divisor")
        rem = list(self.coeffs)
        d = other.degree
        if len(rem) <= d:
            return IntPolynomial([]), self
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - d - 1, -1, -1):
            q = rem[k + d]
            quot[k] = q
            if q:
                for j in range(d + 1):
                    rem[k + j] -= q * other.coeffs[j]
        return IntPolynomial(quot), IntPolynomial(rem[:d])

    def __floordiv__(self, other: IntPolynomial) -> IntPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: IntPolynomial) -> IntPolynomial:
        return divmod(self, other)[1]

    def derivative(self) -> IntPolynomial:
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{i}" if mag == 1 else f"{mag}*x^{i}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial('{self}')"


def vp_int(n: int, p: int):
    """Largest k with p^k | n; INFINITY for n = 0.

    >>> vp_int(12, 2)
    2
    >>> vp_int(0, 3)
    INFINITY
    """
    _require_prime(p)
    if n == 0:
        return INFINITY
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def vp_poly(P: IntPolynomial, p: int):
    """Gauss extension: minimum of vp_int over the coefficients."""
    _require_prime(p)
    if P.is_zero():
        return INFINITY
    best = INFINITY
    for c in P.coeffs:
        if c == 0:
            continue
        v = 0
        while c % p == 0:
            c //= p
            v += 1
        if v < best:
            best = v
            if best == 0:
                break
    return best


@dataclass(frozen=True)
class PhiExpansion:
    """f written in base phi: f = sum terms[i] * phi^i, deg(terms[i]) < deg(phi)."""

    phi: IntPolynomial
    terms: tuple

    def recompose(self) -> IntPolynomial:
        acc = IntPolynomial([])
        for a in reversed(self.terms):
            acc = acc * self.phi + a
        return acc

    def __len__(self) -> int:
        return len(self.terms)


def phi_expand(f: IntPolynomial, phi: IntPolynomial) -> PhiExpansion:
    """Expand f in base phi by repeated euclidean division.

    Quotient-chain form: each pass splits off one digit, so no power of
    phi is ever formed explicitly.
    """
    if not phi.is_monic():
        raise NonMonicModulus("expansion base must be monic")
    if phi.degree < 1:
        raise NonMonicModulus("expansion base must have degree >= 1")
    terms = []
    rest = f
    while not rest.is_zero():
        rest, digit = divmod(rest, phi)
        terms.append(digit)
    if not terms:
        terms.append(IntPolynomial([]))
    return PhiExpansion(phi=phi, terms=tuple(terms))


def _pseudo_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder: the remainder of lc(b)^(deg a - deg b + 1) * a by b."""
    db = b.degree
    lb = b.leading()
    e = a.degree - db + 1
    rem = a
    while not rem.is_zero() and rem.degree >= db:
        k = rem.degree - db
        rem = rem * lb - b.shift(k) * rem.leading()
        e -= 1
    if e > 0:
        rem = rem * (lb**e)
    return rem


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant over Z via the subresultant polynomial remainder sequence.

    Fraction-free: every intermediate value is an exact integer.
    """
    if f.is_zero() or g.is_zero():
        return 0
    if f.degree < g.degree:
        sign = -1 if (f.degree * g.degree) % 2 else 1
        return sign * resultant(g, f)
    if g.degree == 0:
        return g.leading() ** f.degree
    a, b = f, g
    s = 1
    gpart, h = 1, 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if (da % 2) and (db % 2):
            s = -s
        r = _pseudo_rem(a, b)
        a = b
        denom = gpart * h**delta
        b = IntPolynomial([c // denom for c in r.coeffs])
        gpart = a.leading()
        if delta > 0:
            h = gpart**delta // h ** (delta - 1)
        if b.is_zero():
            return 0
        if b.degree == 0:
            da = a.degree
            final = b.leading() ** da
            if da > 1:
                final //= h ** (da - 1)
            return s * final


def discriminant(f: IntPolynomial) -> int:
    """Discriminant of a monic polynomial: (-1)^(n(n-1)/2) * Res(f, f')."""
    if not f.is_monic():
        raise NonMonicModulus("discriminant requires a monic polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("discriminant requires degree >= 1")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative())
