"""Arithmetic in GF(p^e).

Elements are plain ints in ``[0, q)``. The integer ``sum(a_i * p**i)`` stands
for the polynomial ``sum(a_i * x**i)`` reduced modulo the field's monic
irreducible modulus (constant term first). For ``e == 1`` this is ordinary
arithmetic mod ``p``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

# Monic irreducible moduli, constant term first.
BUILTIN_MODULI = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    16: (1, 1, 0, 0, 1),  # x^4 + x + 1
    32: (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    9: (1, 0, 1),  # x^2 + 1
    27: (1, 2, 0, 1),  # x^3 + 2x + 1
    25: (2, 0, 1),  # x^2 + 2
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# --- polynomials over F_p as coefficient lists, constant term first ---


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, m, p):
    a = _trim(list(a))
    m = _trim(list(m))
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _poly_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _poly_divmod(a, b, p):
    a = _trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return _trim(quot), a


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    m = _trim(list(modulus))
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(m, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...] = ()

    @property
    def q(self) -> int:
        return self.p**self.e

    def __str__(self):
        return f"GF({self.q})"

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, coeffs) -> int:
        code = 0
        for c in reversed(list(coeffs)):
            code = code * self.p + c
        return code

    # Lookup tables used by the linear algebra hot loops.
    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        q = self.q
        return tuple(tuple(f_add(self, a, b) for b in range(q)) for a in range(q))

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        q = self.q
        return tuple(tuple(f_mul(self, a, b) for b in range(q)) for a in range(q))

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(f_neg(self, a) for a in range(self.q))

    @cached_property
    def inv_table(self) -> tuple[int | None, ...]:
        return (None,) + tuple(f_inv(self, a) for a in range(1, self.q))


def make_field(p: int, e: int = 1, modulus=None) -> FieldSpec:
    if not is_prime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError(f"extension degree must be >= 1, got {e}")
    if e == 1:
        return FieldSpec(p, 1, (0, 1))
    q = p**e
    if modulus is None:
        if q not in BUILTIN_MODULI:
            raise ValueError(f"no built-in modulus for q={q}; supply one")
        modulus = BUILTIN_MODULI[q]
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != e + 1 or modulus[-1] != 1:
        raise ValueError(f"modulus {modulus} is not monic of degree {e}")
    if any(not 0 <= c < p for c in modulus):
        raise ValueError(f"modulus coefficients must lie in [0, {p})")
    if not is_irreducible(modulus, p):
        raise ValueError(f"modulus {modulus} is reducible over GF({p})")
    return FieldSpec(p, e, modulus)


def field_of_order(q: int, modulus=None) -> FieldSpec:
    p, e = prime_power(q)
    return make_field(p, e, modulus)


def _check(spec: FieldSpec, *elems: int) -> None:
    for a in elems:
        if not 0 <= a < spec.q:
            raise ValueError(f"element {a} out of range for {spec}")


def f_add(spec: FieldSpec, a: int, b: int) -> int:
    _check(spec, a, b)
    if spec.e == 1:
        return (a + b) % spec.p
    return spec.from_digits((x + y) % spec.p for x, y in zip(spec.digits(a), spec.digits(b)))


def f_neg(spec: FieldSpec, a: int) -> int:
    _check(spec, a)
    if spec.e == 1:
        return -a % spec.p
    return spec.from_digits(-x % spec.p for x in spec.digits(a))


def f_sub(spec: FieldSpec, a: int, b: int) -> int:
    return f_add(spec, a, f_neg(spec, b))


def f_mul(spec: FieldSpec, a: int, b: int) -> int:
    _check(spec, a, b)
    if spec.e == 1:
        return a * b % spec.p
    prod = _poly_mul(_trim(spec.digits(a)), _trim(spec.digits(b)), spec.p)
    return spec.from_digits(_poly_mod(prod, spec.modulus, spec.p))


def f_inv(spec: FieldSpec, a: int) -> int:
    _check(spec, a)
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse in {spec}")
    p = spec.p
    if spec.e == 1:
        return pow(a, p - 2, p)
    # extended Euclid on (modulus, a): track s with s*a == r (mod modulus)
    r0, r1 = list(spec.modulus), _trim(spec.digits(a))
    s0, s1 = [], [1]
    while r1:
        quot, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(quot, s1, p), p)
    # r0 is a nonzero constant
    c = pow(r0[0], p - 2, p)
    inv = [x * c % p for x in s0]
    return spec.from_digits(inv + [0] * (spec.e - len(inv)))
