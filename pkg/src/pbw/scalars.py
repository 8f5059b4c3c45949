"""Exact scalar arithmetic: cyclotomic fields Q(zeta_m), prime fields F_p,
roots of unity, and the q-number / Gaussian-binomial calculus."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# dense integer/rational polynomial helpers (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_divmod_exact(num, den):
    # den monic with integer coefficients; division stays in Z[x]
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c:
            q[i] = c
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return q, _trim(num)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, constant term first.

    Computed by dividing x^m - 1 by the product of the cyclotomic
    polynomials of the proper divisors of m.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if m == 1:
        return (-1, 1)
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in range(1, m):
        if m % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    q, r = _poly_divmod_exact(num, den)
    assert not r, "cyclotomic division must be exact"
    return tuple(q)


def euler_phi(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class CycloField:
    """The cyclotomic field Q(zeta_m); elements are residues mod Phi_m with
    exact rational coefficients."""

    characteristic = 0

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("conductor must be >= 1")
        self.m = m
        self.modulus = cyclotomic_poly(m)
        self.degree = len(self.modulus) - 1
        # every root of unity in Q(zeta_m) is +/- a power of zeta_m
        self.torsion_bound = m if m % 2 == 0 else 2 * m
        self._root_cache = {}
        # fold[j] = integer coefficients of x^(degree + j) mod Phi_m
        d = self.degree
        fold = []
        row = [-c for c in self.modulus[:d]]
        fold.append(tuple(row))
        for _ in range(1, d):
            top = row[d - 1]
            row = [0] + row[: d - 1]
            if top:
                row = [r + top * f for r, f in zip(row, fold[0])]
            fold.append(tuple(row))
        self._fold = tuple(fold)

    # unit_order: order of the canonical distinguished root zeta_m
    @property
    def unit_order(self):
        return self.m

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.m == self.m

    def __hash__(self):
        return hash(("cyclo", self.m))

    def __repr__(self):
        return f"CycloField({self.m})"

    def element(self, coeffs) -> Cyclo:
        coeffs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) for c in coeffs]
        if len(num) > self.degree:
            num = self._reduce_int(num)
        num += [0] * (self.degree - len(num))
        return _make_cyclo(self, num, den)

    def _reduce_int(self, num):
        # modulus is monic over Z, so reduction stays in Z
        num = list(num)
        mod = self.modulus
        for i in range(len(num) - 1, self.degree - 1, -1):
            c = num[i]
            if c:
                for j in range(len(mod) - 1):
                    num[i - self.degree + j] -= c * mod[j]
            num.pop()
        return num

    def zero(self) -> Cyclo:
        return Cyclo(self, (0,) * self.degree, 1)

    def one(self) -> Cyclo:
        return Cyclo(self, (1,) + (0,) * (self.degree - 1), 1)

    def from_rational(self, r) -> Cyclo:
        r = Fraction(r)
        num = [r.numerator] + [0] * (self.degree - 1)
        return Cyclo(self, tuple(num), r.denominator)

    def root(self, k: int) -> Cyclo:
        """zeta_m^k as a field element."""
        k %= self.m
        if k not in self._root_cache:
            num = [0] * k + [1]
            if len(num) > self.degree:
                num = self._reduce_int(num)
            num += [0] * (self.degree - len(num))
            self._root_cache[k] = _make_cyclo(self, num, 1)
        return self._root_cache[k]

    def order(self, x: Cyclo):
        """Multiplicative order of x, or None when infinite."""
        if x.is_zero():
            raise ZeroDivisionError("not a unit")
        p = self.one()
        for n in range(1, self.torsion_bound + 1):
            p = p * x
            if p == self.one():
                return n
        return None


def _make_cyclo(field, num, den):
    """Normalize an integer vector with a positive common denominator."""
    if den != 1:
        g = 0
        for n in num:
            if n:
                g = math.gcd(g, n)
                if g == 1:
                    break
        if g == 0:
            return Cyclo(field, (0,) * field.degree, 1)
        g = math.gcd(g, den)
        if g > 1:
            den //= g
            num = [n // g for n in num]
    return Cyclo(field, tuple(num), den)


class Cyclo:
    """Element of a CycloField: integer coefficient vector over a positive
    common denominator, fully reduced, so equality is componentwise."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den

    @property
    def coeffs(self):
        return tuple(Fraction(n, self.den) for n in self.num)

    def is_zero(self):
        return not any(self.num)

    def is_one(self):
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self):
        return not any(self.num[1:])

    def __eq__(self, other):
        return (
            isinstance(other, Cyclo)
            and other.field == self.field
            and other.den == self.den
            and other.num == self.num
        )

    def __hash__(self):
        return hash((self.field.m, self.num, self.den))

    def _check(self, other):
        if not isinstance(other, Cyclo) or (
            other.field is not self.field and other.field != self.field
        ):
            raise TypeError("scalars from different fields")

    def __add__(self, other):
        self._check(other)
        da, db = self.den, other.den
        if da == db:
            num = [a + b for a, b in zip(self.num, other.num)]
            if da == 1:
                return Cyclo(self.field, tuple(num), 1)
            return _make_cyclo(self.field, num, da)
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        return _make_cyclo(
            self.field, [a * ma + b * mb for a, b in zip(self.num, other.num)], da * ma
        )

    def __sub__(self, other):
        self._check(other)
        da, db = self.den, other.den
        if da == db:
            num = [a - b for a, b in zip(self.num, other.num)]
            if da == 1:
                return Cyclo(self.field, tuple(num), 1)
            return _make_cyclo(self.field, num, da)
        g = math.gcd(da, db)
        ma, mb = db // g, da // g
        return _make_cyclo(
            self.field, [a * ma - b * mb for a, b in zip(self.num, other.num)], da * ma
        )

    def __neg__(self):
        return Cyclo(self.field, tuple(-a for a in self.num), self.den)

    def __mul__(self, other):
        self._check(other)
        a, b = self.num, other.num
        den = self.den * other.den
        # fast paths: rational factors are by far the most common case
        if not any(a[1:]):
            r = a[0]
            if not r:
                return self.field.zero()
            num = [r * c for c in b]
            return _make_cyclo(self.field, num, den) if den != 1 else Cyclo(self.field, tuple(num), 1)
        if not any(b[1:]):
            r = b[0]
            if not r:
                return self.field.zero()
            num = [r * c for c in a]
            return _make_cyclo(self.field, num, den) if den != 1 else Cyclo(self.field, tuple(num), 1)
        d = self.field.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        fold = self.field._fold
        low = prod[:d]
        for j in range(d - 1):
            c = prod[d + j]
            if c:
                frow = fold[j]
                for k in range(d):
                    if frow[k]:
                        low[k] += c * frow[k]
        if den == 1:
            return Cyclo(self.field, tuple(low), 1)
        return _make_cyclo(self.field, low, den)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        """Inverse via the extended Euclidean algorithm against Phi_m."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field.from_rational(Fraction(self.den, self.num[0]))
        # work in Q[x]: gcd(self, Phi_m) = 1 since Phi_m is irreducible
        r0 = [Fraction(c) for c in self.field.modulus]
        r1 = list(self.coeffs)
        _trim(r1)
        s0, s1 = [], [_ONE]
        while r1:
            q, r = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 = gcd (a nonzero constant), s0 * self = r0 (mod Phi_m)
        assert len(r0) == 1
        inv = [c / r0[0] for c in s0]
        return self.field.element(inv)

    def __repr__(self):
        return f"Cyclo({self.field.m}, {format_scalar(self)})"


def _poly_divmod_frac(num, den):
    num = [Fraction(c) for c in num]
    q = [_ZERO] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / lead
        if c:
            q[i] = c
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    return _trim(q), _trim(num)


def _poly_sub(a, b):
    out = [_ZERO] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _trim(out)


class PrimeField:
    """The prime field F_p.  The distinguished root of unity is the smallest
    primitive root mod p, so integer root-exponents make sense in char p too."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(math.isqrt(p)) + 1)):
            raise ValueError("p must be prime")
        self.p = p
        self.characteristic = p
        self.unit_order = p - 1 if p > 2 else 1
        self.generator = self._primitive_root()
        self.torsion_bound = max(self.unit_order, 1)

    def _primitive_root(self):
        if self.p == 2:
            return 1
        target = self.p - 1
        for g in range(2, self.p):
            if all(pow(g, target // q, self.p) != 1 for q in _prime_factors(target)):
                return g
        raise RuntimeError("no primitive root found")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def element(self, v: int) -> Fp:
        return Fp(self, v % self.p)

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def from_rational(self, r) -> Fp:
        r = Fraction(r)
        if r.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return self.element(r.numerator * pow(r.denominator, -1, self.p))

    def root(self, k: int) -> Fp:
        return self.element(pow(self.generator, k % max(self.unit_order, 1), self.p))

    def order(self, x: Fp):
        if x.value == 0:
            raise ZeroDivisionError("not a unit")
        acc, n = x.value, 1
        while acc != 1:
            acc = acc * x.value % self.p
            n += 1
        return n


def _prime_factors(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


class Fp:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def is_zero(self):
        return self.value == 0

    def is_one(self):
        return self.value == 1

    def __eq__(self, other):
        return isinstance(other, Fp) and other.field == self.field and other.value == self.value

    def __hash__(self):
        return hash((self.field.p, self.value))

    def _check(self, other):
        if not isinstance(other, Fp) or other.field != self.field:
            raise TypeError("scalars from different fields")

    def __add__(self, other):
        self._check(other)
        return Fp(self.field, (self.value + other.value) % self.field.p)

    def __sub__(self, other):
        self._check(other)
        return Fp(self.field, (self.value - other.value) % self.field.p)

    def __neg__(self):
        return Fp(self.field, -self.value % self.field.p)

    def __mul__(self, other):
        self._check(other)
        return Fp(self.field, self.value * other.value % self.field.p)

    def __pow__(self, n):
        return Fp(self.field, pow(self.value, n, self.field.p))

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fp(self.field, pow(self.value, -1, self.field.p))

    def __repr__(self):
        return f"Fp({self.value} mod {self.field.p})"


# ---------------------------------------------------------------------------
# roots of unity as exponent data
# ---------------------------------------------------------------------------

class RootOfUnity:
    """zeta^k where zeta is the field's distinguished root (order m)."""

    __slots__ = ("k", "m")

    def __init__(self, k: int, m: int):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.m = m
        self.k = k % m

    def order(self) -> int:
        return self.m // math.gcd(self.m, self.k)

    def embed(self, field):
        return field.root(self.k)

    def __eq__(self, other):
        return isinstance(other, RootOfUnity) and (self.k, self.m) == (other.k, other.m)

    def __hash__(self):
        return hash((self.k, self.m))

    def __repr__(self):
        return f"RootOfUnity({self.k}, {self.m})"


def ord_of(q):
    """Least n >= 1 with q^n = 1; None when no such n exists."""
    if isinstance(q, RootOfUnity):
        return q.order()
    if q.is_zero():
        raise ZeroDivisionError("not a unit")
    return q.field.order(q)


# ---------------------------------------------------------------------------
# q-numbers and Gaussian binomials
# ---------------------------------------------------------------------------

def q_number(n: int, q):
    """(n)_q = 1 + q + ... + q^(n-1)."""
    field = q.field
    acc, p = field.zero(), field.one()
    for _ in range(n):
        acc = acc + p
        p = p * q
    return acc


def q_factorial(n: int, q):
    field = q.field
    acc = field.one()
    for i in range(1, n + 1):
        acc = acc * q_number(i, q)
    return acc


@lru_cache(maxsize=None)
def gauss_binomial_poly(n: int, i: int) -> tuple[int, ...]:
    """The Gaussian binomial as an integer polynomial in q (q-Pascal recurrence)."""
    if i < 0 or i > n:
        raise ValueError("need 0 <= i <= n")
    if i == 0 or i == n:
        return (1,)
    # binom(n,i) = q^i binom(n-1,i) + binom(n-1,i-1)
    a = list(gauss_binomial_poly(n - 1, i))
    b = gauss_binomial_poly(n - 1, i - 1)
    out = [0] * i + a
    for j, c in enumerate(b):
        if j < len(out):
            out[j] += c
        else:
            out.append(c)
    return tuple(out)


def q_binomial(n: int, i: int, q):
    """Gaussian binomial evaluated at q; defined even where q-factorials vanish."""
    if i < 0 or i > n:
        raise ValueError("need 0 <= i <= n")
    field = q.field
    poly = gauss_binomial_poly(n, i)
    acc, p = field.zero(), field.one()
    for c in poly:
        if c:
            acc = acc + field.from_rational(c) * p
        p = p * q
    return acc


def binom_vanishes(n: int, q) -> bool:
    """True iff all Gaussian binomials binom(n,i)_q vanish for 0 < i < n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if q.is_zero():
        raise ZeroDivisionError("not a unit")
    return all(q_binomial(n, i, q).is_zero() for i in range(1, n))


def binom_vanishes_closed_form(n: int, q) -> bool:
    """The order-theoretic side of the vanishing criterion, for cross-checks:
    ord q = n in characteristic 0; p^k ord q = n for some k >= 0 in char p."""
    r = ord_of(q)
    if r is None:
        return False
    p = q.field.characteristic
    if p == 0:
        return r == n
    if n % r:
        return False
    k = n // r
    while k % p == 0:
        k //= p
    return k == 1


# ---------------------------------------------------------------------------
# literal syntax (datum file format)
# ---------------------------------------------------------------------------

def parse_scalar_literal(lit, field):
    """int -> root exponent; "a/b" -> rational; list of "a/b" -> coefficient vector."""
    if isinstance(lit, bool):
        raise ValueError(f"bad scalar literal: {lit!r}")
    if isinstance(lit, int):
        return field.root(lit)
    if isinstance(lit, str):
        return field.from_rational(Fraction(lit))
    if isinstance(lit, list):
        if not isinstance(field, CycloField):
            raise ValueError("coefficient vectors only make sense over a cyclotomic field")
        if len(lit) != field.degree:
            raise ValueError(f"coefficient vector must have length {field.degree}")
        return field.element([Fraction(str(c)) for c in lit])
    raise ValueError(f"bad scalar literal: {lit!r}")


def scalar_literal(x):
    """Inverse of parse_scalar_literal, preferring the most compact form."""
    if isinstance(x, Fp):
        f = x.field
        if x.value != 0:
            acc, k = f.generator % f.p, 1
            if x.value == 1:
                return 0
            while k <= f.unit_order:
                if acc == x.value:
                    return k
                acc = acc * f.generator % f.p
                k += 1
        return str(x.value)
    f = x.field
    for k in range(f.m):
        if x == f.root(k):
            return k
    if x.is_rational():
        return str(x.coeffs[0])
    return [str(c) for c in x.coeffs]


def format_scalar(x) -> str:
    """Human-readable form; z denotes the distinguished root of unity."""
    if isinstance(x, Fp):
        return str(x.value)
    parts = []
    for i, c in enumerate(x.coeffs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            z = "z" if i == 1 else f"z^{i}"
            if c == 1:
                parts.append(z)
            elif c == -1:
                parts.append(f"-{z}")
            else:
                parts.append(f"{c}*{z}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
