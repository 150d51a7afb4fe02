"""Exact arithmetic in GF(p^e).

Field elements are plain integers in ``[0, p^e)``.  The base-p digits of an
element, least significant first, are the coefficients of its polynomial
representative modulo a fixed monic irreducible polynomial of degree ``e``.
For prime fields (``e == 1``) this is ordinary arithmetic mod ``p``.

The default modulus for each ``(p, e)`` is the monic irreducible polynomial
whose coefficient vector encodes to the smallest integer (constant term
least significant), so field construction is deterministic.  Callers may
override the modulus; irreducibility is always re-checked by exhaustive
divisor search, which is fine for the extension degrees used here (``e`` up
to 8).

Multiplication and inverse tables are cached lazily for ``q <= 256``.
Values are immutable after construction and all operations are pure, so a
field object is safe to share across threads.
"""

from __future__ import annotations

from typing import Sequence

_TABLE_CACHE_MAX_Q = 256
_MAX_EXTENSION_DEGREE = 8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    del a[dm:]
    while len(a) < dm:
        a.append(0)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_divmod(num: Sequence[int], den: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    num = _poly_trim(list(num))
    den = _poly_trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(den[-1], p - 2, p)
    quo = [0] * max(0, len(num) - len(den) + 1)
    rem = list(num)
    while len(rem) >= len(den) and _poly_trim(rem):
        shift = len(rem) - len(den)
        c = (rem[-1] * inv_lead) % p
        quo[shift] = c
        for j, dj in enumerate(den):
            rem[shift + j] = (rem[shift + j] - c * dj) % p
        _poly_trim(rem)
    return quo, rem


def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive divisor search over monic polynomials of degree <= e // 2."""
    e = len(modulus) - 1
    if e < 1:
        return False
    for deg in range(1, e // 2 + 1):
        for enc in range(p**deg):
            div = [0] * (deg + 1)
            x = enc
            for i in range(deg):
                div[i] = x % p
                x //= p
            div[deg] = 1
            _, rem = _poly_divmod(modulus, div, p)
            if not _poly_trim(rem):
                return False
    return True


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e over GF(p), by integer encoding."""
    if e == 1:
        return (0, 1)
    for enc in range(p**e):
        coeffs = [0] * (e + 1)
        x = enc
        for i in range(e):
            coeffs[i] = x % p
            x //= p
        coeffs[e] = 1
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class GF:
    """The field GF(p^e) with an explicit modulus polynomial.

    Elements are integers in ``[0, q)``; use :meth:`coeffs` and
    :meth:`from_coeffs` to convert between the integer encoding and the
    coefficient vector (length ``e``, low degree first).
    """

    __slots__ = ("p", "e", "q", "modulus", "_mul_table", "_inv_table")

    def __init__(self, p: int, e: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree {e} must be >= 1")
        if e > _MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree {e} exceeds supported maximum {_MAX_EXTENSION_DEGREE}")
        if modulus is None:
            modulus = default_modulus(p, e)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e + 1:
            raise ValueError(f"modulus must have degree {e} (got {len(modulus) - 1} coefficients above constant)")
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if e > 1 and not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = modulus
        self._mul_table: list[list[int]] | None = None
        self._inv_table: list[int] | None = None

    # -- element encoding --------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of an element, low degree first, length e."""
        self._check_element(a)
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(coeffs)}")
        a = 0
        for c in reversed(coeffs):
            c = int(c)
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} out of range [0, {self.p})")
            a = a * self.p + c
        return a

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def _check_element(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of GF({self.q})")

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        prod = _poly_mul(self.coeffs(a), self.coeffs(b), self.p)
        red = _poly_mod(prod, self.modulus, self.p)
        return self.from_coeffs(red)

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if self.q <= _TABLE_CACHE_MAX_Q:
            if self._mul_table is None:
                self._build_tables()
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        if self.q <= _TABLE_CACHE_MAX_Q:
            if self._inv_table is None:
                self._build_tables()
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def _build_tables(self) -> None:
        q = self.q
        table = [[0] * q for _ in range(q)]
        inv = [0] * q
        for a in range(q):
            row = table[a]
            for b in range(a, q):
                v = self._mul_raw(a, b)
                row[b] = v
                table[b][a] = v
                if v == 1:
                    inv[a] = b
                    inv[b] = a
        self._mul_table = table
        self._inv_table = inv

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.e == other.e
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"


def field_from_order(q: int, modulus: Sequence[int] | None = None) -> GF:
    """Build GF(q) from a prime power q, factoring q as p^e."""
    if q < 2:
        raise ValueError(f"field order {q} must be at least 2")
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"field order {q} is not a prime power")
    return GF(p, e, modulus)


def check_same_field(a: GF, b: GF) -> None:
    if a != b:
        raise ValueError(f"mismatched fields: {a} vs {b}")
