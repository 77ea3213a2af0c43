"""Exact arithmetic: rationals, cyclotomic fields Q(zeta_m), prime fields F_p.

Rationals are plain :class:`fractions.Fraction` values.  Cyclotomic numbers are
stored in the power basis 1, zeta, ..., zeta^(phi(m)-1) of Q[t]/Phi_m(t).
Prime-field elements carry their modulus so that mixing fields is caught.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Sequence

from .errors import FieldMismatchError


def is_prime(n: int) -> bool:
    """Deterministic trial division; inputs are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, s) with n == p**s, s >= 1, or None."""
    if n < 2:
        return None
    factors = factorize(n)
    if len(factors) != 1:
        return None
    ((p, s),) = factors.items()
    return p, s


def euler_phi(m: int) -> int:
    result = m
    for p in factorize(m):
        result -= result // p
    return result


# ---------------------------------------------------------------------------
# integer polynomials, coefficient lists low degree first


def _poly_trim(c: list) -> list:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod_monic(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Divide by a monic polynomial; exact over any coefficient ring."""
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [0], _poly_trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    rem = a[:db] if db > 0 else [0]
    return _poly_trim(q), _poly_trim(rem)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Phi_m as integer coefficients, low degree first."""
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for e in range(1, m):
        if m % e == 0:
            num, rem = _poly_divmod_monic(num, cyclotomic_polynomial(e))
            assert rem == [0]
    return tuple(num)


def cyclo_reduce(poly: Sequence, m: int) -> "CycloElement":
    """Reduce a polynomial in zeta (low degree first) modulo Phi_m."""
    phi = cyclotomic_polynomial(m)
    _, rem = _poly_divmod_monic([Fraction(c) for c in poly] or [Fraction(0)], phi)
    n = len(phi) - 1
    coeffs = [Fraction(0)] * n
    for i, c in enumerate(rem):
        coeffs[i] = Fraction(c)
    return CycloElement(m, coeffs)


class CycloElement:
    """Element of Q(zeta_m) in the power basis modulo Phi_m."""

    __slots__ = ("m", "coeffs", "_hash")

    def __init__(self, m: int, coeffs: Sequence):
        n = euler_phi(m)
        if len(coeffs) != n:
            raise FieldMismatchError(
                f"Q(zeta_{m}) needs {n} power-basis coefficients, got {len(coeffs)}"
            )
        self.m = m
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        self._hash = None

    @classmethod
    def from_rational(cls, m: int, value) -> "CycloElement":
        n = euler_phi(m)
        return cls(m, [Fraction(value)] + [Fraction(0)] * (n - 1))

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "CycloElement":
        power %= m
        return cyclo_reduce([0] * power + [1], m)

    def _coerce(self, other) -> "CycloElement":
        if isinstance(other, CycloElement):
            if other.m != self.m:
                raise FieldMismatchError(
                    f"cannot combine Q(zeta_{self.m}) and Q(zeta_{other.m})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElement.from_rational(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return cyclo_reduce(_poly_mul(self.coeffs, other.coeffs), self.m)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        # Solve (multiplication-by-self matrix) x = e_0.
        n = len(self.coeffs)
        columns = []
        for i in range(n):
            basis = CycloElement(self.m, [Fraction(int(i == j)) for j in range(n)])
            columns.append((self * basis).coeffs)
        augmented = [
            [columns[j][r] for j in range(n)] + [Fraction(int(r == 0))] for r in range(n)
        ]
        reduced, rank, pivots = rref(augmented)
        assert rank == n and pivots == list(range(n))
        return CycloElement(self.m, [reduced[r][n] for r in range(n)])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElement.from_rational(self.m, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            if all(c == 0 for c in self.coeffs[1:]):
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.m, self.coeffs))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def sort_key(self) -> tuple:
        return self.coeffs

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                power = "z" if i == 1 else f"z^{i}"
                terms.append(power if c == 1 else f"{c}*{power}")
        return f"Cyclo{self.m}({' + '.join(terms) or '0'})"


class GF:
    """Element of the prime field F_p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = int(value) % p

    @classmethod
    def checked(cls, value: int, p: int) -> "GF":
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(value, p)

    def _coerce(self, other) -> "GF":
        if isinstance(other, GF):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return GF(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GF(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GF(self.value - other.value, self.p)

    def __rsub__(self, other):
        return GF(other - self.value, self.p)

    def __neg__(self):
        return GF(-self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GF(self.value * other.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "GF":
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return GF(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.p
        if not isinstance(other, GF):
            return NotImplemented
        return self.p == other.p and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.value}, {self.p})"


def field_of(x) -> tuple:
    """Field descriptor: ('Q',), ('GF', p) or ('cyclo', m)."""
    if isinstance(x, GF):
        return ("GF", x.p)
    if isinstance(x, CycloElement):
        return ("cyclo", x.m)
    if isinstance(x, Rational):
        return ("Q",)
    raise FieldMismatchError(f"unsupported field element {x!r}")


def common_field(rows: Sequence[Sequence]) -> tuple | None:
    field = None
    for row in rows:
        for x in row:
            f = field_of(x)
            if field is None:
                field = f
            elif f != field:
                raise FieldMismatchError(f"mixed-field matrix: {field} and {f}")
    return field


def _rref_mod_p(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(matrix: Sequence[Sequence]) -> tuple[list[list], int, list[int]]:
    """Reduced row echelon form over Q, Q(zeta_m) or F_p.

    Pivots are the first nonzero entries in column order.  Returns the
    reduced matrix, the rank and the pivot columns.  Integer entries are read
    as rationals; mixing fields raises :class:`FieldMismatchError`.
    """
    field = common_field(matrix)
    if field is not None and field[0] == "GF":
        p = field[1]
        rows = [[x.value for x in row] for row in matrix]
        rows, pivots = _rref_mod_p(rows, p)
        return [[GF(x, p) for x in row] for row in rows], len(pivots), pivots

    if field is not None and field[0] == "Q":
        rows = [[Fraction(x) for x in row] for row in matrix]
    else:
        rows = [list(row) for row in matrix]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return rows, len(pivots), pivots


def _rank_integer(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) elimination; every division is exact."""
    ncols = len(rows[0]) if rows else 0
    r, prev = 0, 1
    for c in range(ncols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        lead = pr[c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            rows[i] = [(lead * x - f * y) // prev for x, y in zip(rows[i], pr)]
        prev = lead
        r += 1
    return r


def rank(matrix: Sequence[Sequence]) -> int:
    field = common_field(matrix)
    if field is not None and field[0] == "Q":
        rows = [[Fraction(x) for x in row] for row in matrix]
        if all(x.denominator == 1 for row in rows for x in row):
            return _rank_integer([[x.numerator for x in row] for row in rows])
    return rref(matrix)[1]


def to_ring(value, p: int | None):
    """Map an integer or rational into Q (p is None) or F_p."""
    if p is None:
        return Fraction(value)
    value = Fraction(value)
    if value.denominator % p == 0:
        raise ValueError(f"{value} has no image in F_{p}")
    return GF(value.numerator * pow(value.denominator, -1, p), p)


def rational_str(q: Fraction) -> str | int:
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def primitive_integer(values: Sequence[Fraction]) -> list[Fraction]:
    """Scale a nonzero rational vector to a primitive integer vector."""
    den = 1
    for v in values:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [Fraction(x // g) for x in ints]
