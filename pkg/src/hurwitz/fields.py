"""Finite fields F_{p^f} with elements encoded as integers 0 .. p^f - 1.

An element encodes the coefficient vector (base p, little-endian) of its
polynomial residue modulo a fixed irreducible modulus.  The modulus is the
first irreducible monic polynomial in an ascending scan over coefficient
codes, so field construction is reproducible.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict:
    """Prime factorization as {prime: exponent}."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int):
    """Return (p, f) with q = p^f, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    (p, f), = fac.items()
    return p, f


# -- polynomial arithmetic over F_p (coefficient tuples, little-endian) ------

def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def poly_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) > dm:
        coef = (a[-1] * inv_lead) % p
        if coef:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - coef * mi) % p
        a.pop()
    return _trim(a)


def poly_gcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_mod(a, b, p)
    return a


def poly_powmod(base, e, m, p):
    result = (1,)
    base = poly_mod(base, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _has_root(coeffs, p):
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible(coeffs, p) -> bool:
    coeffs = _trim(coeffs)
    f = len(coeffs) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    if f <= 3:
        return not _has_root(coeffs, p)
    # Rabin: x^(p^f) == x mod m, and gcd(x^(p^(f/t)) - x, m) = 1 for primes t | f
    x = (0, 1)
    if poly_powmod(x, p ** f, coeffs, p) != poly_mod(x, coeffs, p):
        return False
    for t in factorize(f):
        g = poly_gcd(poly_add(poly_powmod(x, p ** (f // t), coeffs, p),
                              poly_mul((p - 1,), x, p), p),
                     coeffs, p)
        if len(g) > 1:
            return False
    return True


def find_irreducible(p: int, f: int):
    """First irreducible monic polynomial of degree f, scanning coefficient codes."""
    for code in range(p ** f):
        coeffs = _decode(code, p, f) + (1,)
        if is_irreducible(coeffs, p):
            return coeffs
    raise RuntimeError(f"no irreducible modulus of degree {f} over F_{p}")  # unreachable


def _decode(code, p, f):
    digits = []
    for _ in range(f):
        digits.append(code % p)
        code //= p
    return tuple(digits)


def _encode(coeffs, p, f):
    code = 0
    for c in reversed(coeffs[:f] + (0,) * (f - len(coeffs))):
        code = code * p + c
    return code


class Fq:
    """The field with p^f elements."""

    def __init__(self, p: int, f: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if f < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.f = f
        self.q = p ** f
        self.modulus = find_irreducible(p, f) if f > 1 else (0, 1)

    def __repr__(self):
        return f"Fq({self.p}, {self.f})"

    def elements(self):
        return range(self.q)

    def coeffs(self, a: int):
        return _decode(a, self.p, self.f)

    def from_coeffs(self, coeffs) -> int:
        return _encode(_trim(coeffs), self.p, self.f)

    def add(self, a: int, b: int) -> int:
        return self.from_coeffs(poly_add(self.coeffs(a), self.coeffs(b), self.p))

    def neg(self, a: int) -> int:
        return self.from_coeffs(tuple((-c) % self.p for c in self.coeffs(a)))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        prod = poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        if self.f > 1:
            prod = poly_mod(prod, self.modulus, self.p)
        else:
            prod = _trim((prod[0] % self.p,)) if prod else ()
        return self.from_coeffs(prod)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.q - 2)

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        o = 1
        x = a
        while x != 1:
            x = self.mul(x, a)
            o += 1
        return o

    def generator(self) -> int:
        """Least element generating the multiplicative group."""
        for a in range(1, self.q):
            if self.element_order(a) == self.q - 1:
                return a
        raise RuntimeError("no multiplicative generator found")  # unreachable

    def is_square(self, a: int) -> bool:
        if a == 0:
            return True
        if self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1


def fq_make(p: int, f: int) -> Fq:
    """Construct F_{p^f}; artifact contract allows 1 <= f <= 6."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= f <= 6:
        raise ValueError(f"extension degree {f} outside supported range 1..6")
    return Fq(p, f)
