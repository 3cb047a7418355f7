"""Arithmetic in GF(p^n): construction, Frobenius maps, subfields, root sets.

Field elements are plain ints in [0, q).  The base-p digits of a code,
least significant first, are the coordinates [c0, .., c_{n-1}] of the
element in the power basis {1, t, .., t^{n-1}} of GF(p)[X]/(f), where f is
the defining polynomial and t = X mod f.  Multiplication, inversion and
powers go through exp/log tables over a fixed primitive element, built once
per field, so every code-level operation is O(n) or better.

The public wrapper type is FieldElement; the hot paths in the rest of the
package work on raw codes through the FieldSpec methods.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    BadParametersError,
    FieldMismatchError,
    NotADivisorError,
    NotIrreducibleError,
    NotPrimeError,
    TooLargeError,
)

# Fields beyond this size are a stated non-goal; everything here is exact
# table-backed arithmetic at desk scale.
Q_HARD_CAP = 1 << 20

# Full digit tables are kept for fields small enough that the memory is
# negligible; larger fields decode codes on the fly.
_DIGIT_CACHE_MAX = 1 << 16


def is_prime(m: int) -> bool:
    """Trial-division primality test (fine for the sizes allowed here)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    for d in range(3, math.isqrt(m) + 1, 2):
        if m % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Dense univariate polynomials over GF(p): coefficient lists, constant first.
# Only what the irreducibility test needs.
# ---------------------------------------------------------------------------


def _trim(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f or [0]


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c == 0:
            continue
        scale = (c * inv_lead) % p
        for j, fj in enumerate(f):
            a[i - df + j] = (a[i - df + j] - scale * fj) % p
    return _trim(a[:df] if len(a) > df else a)


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, f, p)


def _poly_powmod(base: list[int], k: int, f: list[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_mod(list(base), f, p)
    while k:
        if k & 1:
            result = _poly_mulmod(result, acc, f, p)
        acc = _poly_mulmod(acc, acc, f, p)
        k >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b != [0]:
        a = _poly_mod(a, b, p)
        a, b = b, a
    if a[-1] != 1:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def is_irreducible(poly: list[int] | tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    A reducible polynomial of degree n has an irreducible factor of degree
    i <= n/2, and X^(p^i) - X is the product of all irreducibles of degree
    dividing i, so it suffices to check gcd(f, X^(p^i) - X) = 1 for each
    i up to n/2.
    """
    f = list(poly)
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    for i in range(1, n // 2 + 1):
        xq = _poly_powmod([0, 1], p**i, f, p)
        # X^(p^i) - X mod f
        probe = list(xq) + [0] * max(0, 2 - len(xq))
        probe[1] = (probe[1] - 1) % p
        g = _poly_gcd(f, _trim(probe), p)
        if len(g) > 1:
            return False
    return True


def _default_poly(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over GF(p).

    Candidates are scanned with the constant term varying fastest, i.e. in
    increasing order of the integer c0 + c1*p + .. + c_{n-1}*p^{n-1}.
    """
    for k in range(p**n):
        digits, m = [], k
        for _ in range(n):
            m, r = divmod(m, p)
            digits.append(r)
        f = digits + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise NotIrreducibleError(f"no irreducible of degree {n} over GF({p})")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^n) with code-level arithmetic.

    Do not instantiate directly; use field_create, which validates inputs
    and caches instances so equal specs are usually identical objects.
    """

    __slots__ = (
        "p",
        "n",
        "q",
        "poly",
        "_exp",
        "_log",
        "_digit_cache",
        "_pow_basis",
        "generator",
    )

    def __init__(self, p: int, n: int, poly: tuple[int, ...]):
        self.p = p
        self.n = n
        self.q = p**n
        self.poly = poly
        self._pow_basis = tuple(p**i for i in range(n))
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Polynomial product of two codes, reduced mod (poly, p)."""
        p, n = self.p, self.n
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce: X^n == -poly[:-1]
        for i in range(2 * n - 2, n - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j in range(n):
                prod[i - n + j] = (prod[i - n + j] - c * self.poly[j]) % p
        return sum(prod[i] * self._pow_basis[i] for i in range(n))

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        order = self.q - 1
        prime_factors = []
        m = order
        d = 2
        while d * d <= m:
            if m % d == 0:
                prime_factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            prime_factors.append(m)

        def raw_pow(base: int, k: int) -> int:
            acc, cur = 1, base
            while k:
                if k & 1:
                    acc = self._raw_mul(acc, cur)
                cur = self._raw_mul(cur, cur)
                k >>= 1
            return acc

        for g in range(2, self.q):
            if all(raw_pow(g, order // r) != 1 for r in prime_factors):
                return g
        raise AssertionError("no primitive element found")  # pragma: no cover

    def _build_tables(self) -> None:
        if self.q <= _DIGIT_CACHE_MAX:
            self._digit_cache = [self._decode(c) for c in range(self.q)]
        else:
            self._digit_cache = None
        g = self._find_generator()
        self.generator = g
        exp = [1] * (self.q - 1)
        cur = 1
        for i in range(1, self.q - 1):
            cur = self._raw_mul(cur, g)
            exp[i] = cur
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _decode(self, code: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.n):
            code, r = divmod(code, self.p)
            digits.append(r)
        return tuple(digits)

    # -- code-level arithmetic ---------------------------------------------

    def digits(self, code: int) -> tuple[int, ...]:
        """Coefficient vector [c0, .., c_{n-1}] of a code."""
        if self._digit_cache is not None:
            return self._digit_cache[code]
        return self._decode(code)

    def encode(self, coeffs) -> int:
        """Code of a coefficient vector (entries reduced mod p, zero-padded)."""
        if len(coeffs) > self.n:
            raise BadParametersError(
                f"coefficient vector of length {len(coeffs)} in GF({self.p}^{self.n})"
            )
        return sum((c % self.p) * self._pow_basis[i] for i, c in enumerate(coeffs))

    def add(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        p = self.p
        return sum(((x + y) % p) * w for x, y, w in zip(da, db, self._pow_basis))

    def sub(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        p = self.p
        return sum(((x - y) % p) * w for x, y, w in zip(da, db, self._pow_basis))

    def neg(self, a: int) -> int:
        da = self.digits(a)
        p = self.p
        return sum(((-x) % p) * w for x, w in zip(da, self._pow_basis))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        i = self._log[a] + self._log[b]
        if i >= self.q - 1:
            i -= self.q - 1
        return self._exp[i]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * k) % (self.q - 1)]

    def frob(self, a: int, e: int = 1) -> int:
        """The p^e-power map on codes."""
        return self.pow(a, self.p**e)

    def smul(self, c: int, a: int) -> int:
        """Scale by an integer (image of c under Z -> GF(p))."""
        return self.mul(c % self.p, a)

    # -- elements ------------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.n, self.poly)

    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, self.encode(coeffs))

    def from_code(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise BadParametersError(f"code {code} outside [0, {self.q})")
        return FieldElement(self, code)

    def from_int(self, k: int) -> "FieldElement":
        """Image of the integer k under Z -> GF(p) -> GF(q)."""
        return FieldElement(self, k % self.p)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        """The residue t = X mod poly (zero in a prime field)."""
        return FieldElement(self, self._pow_basis[1] if self.n > 1 else 0)

    def elements(self):
        for code in range(self.q):
            yield FieldElement(self, code)

    def in_subfield(self, code: int, e: int) -> bool:
        """Membership in the subfield of order p^e (fixed points of x -> x^(p^e))."""
        return self.frob(code, e) == code

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, n={self.n}, poly={list(self.poly)})"


_FIELD_CACHE: dict[tuple, FieldSpec] = {}


def field_create(p: int, n: int, defining_poly=None) -> FieldSpec:
    """Build (or fetch) GF(p^n).

    When defining_poly is omitted, the lexicographically smallest monic
    irreducible of degree n over GF(p) is selected, so certificates are
    reproducible across runs and machines.  A supplied polynomial is given
    as a coefficient list, constant term first, and must be monic of degree
    n and irreducible.
    """
    if not is_prime(p):
        raise NotPrimeError(f"p = {p} is not prime")
    if n < 1:
        raise BadParametersError(f"extension degree n = {n} must be >= 1")
    if p**n > Q_HARD_CAP:
        raise TooLargeError(f"q = {p}^{n} exceeds the supported cap 2^20")
    if defining_poly is not None:
        poly = tuple(c % p for c in defining_poly)
        if len(poly) != n + 1 or poly[-1] != 1:
            raise BadParametersError("defining polynomial must be monic of degree n")
        if not is_irreducible(list(poly), p):
            raise NotIrreducibleError(f"{list(poly)} factors over GF({p})")
    else:
        poly = None
    cache_key = (p, n, poly)
    if cache_key not in _FIELD_CACHE:
        actual = poly if poly is not None else _default_poly(p, n)
        _FIELD_CACHE[cache_key] = FieldSpec(p, n, actual)
    return _FIELD_CACHE[cache_key]


class FieldElement:
    """An element of a FieldSpec; immutable, hashable, operator-overloaded."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> list[int]:
        return list(self.field.digits(self.code))

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.code, c))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(c, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.pow(self.code, k))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.key, self.code))

    def __repr__(self) -> str:
        return f"GF({self.field.q}){self.coeffs}"


def frobenius(x: FieldElement, e: int = 1) -> FieldElement:
    """x -> x^(p^e).  An automorphism; the identity when e = n."""
    if e < 0:
        raise BadParametersError("Frobenius exponent must be >= 0")
    return FieldElement(x.field, x.field.frob(x.code, e))


@dataclass(frozen=True)
class SubfieldEmbedding:
    """The subfield of order p^e inside GF(p^n), e | n.

    Members are represented as elements of the big field; the set is exactly
    the fixed points of x -> x^(p^e).
    """

    field: FieldSpec
    e: int
    order: int
    member_codes: tuple[int, ...]
    generator_code: int

    def __contains__(self, x) -> bool:
        code = x.code if isinstance(x, FieldElement) else x
        return self.field.in_subfield(code, self.e)

    def members(self) -> list[FieldElement]:
        return [FieldElement(self.field, c) for c in self.member_codes]

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self.field, self.generator_code)


def subfield(field: FieldSpec, e: int) -> SubfieldEmbedding:
    """The embedded copy of GF(p^e) in GF(p^n); requires e | n."""
    if e < 1 or field.n % e != 0:
        raise NotADivisorError(f"e = {e} does not divide n = {field.n}")
    members = tuple(c for c in range(field.q) if field.in_subfield(c, e))
    order = field.p**e
    if len(members) != order:
        raise AssertionError("subfield fixed-point count is off")  # pragma: no cover
    if order == 2:
        gen = 1
    else:
        # power of the field generator with exact multiplicative order p^e - 1
        gen = field.pow(field.generator, (field.q - 1) // (order - 1))
    return SubfieldEmbedding(field, e, order, members, gen)


def dth_roots(A: FieldElement, B: FieldElement, d: int) -> list[FieldElement]:
    """All x in GF(q) with A*x^d + B = 0, for A, B in the subfield of index d.

    Requires d = (q-1)/(q'-1) for a proper subfield order q', A and B
    nonzero members of that subfield, and p not dividing d.  Under those
    hypotheses the equation always has exactly d roots, all in GF(q); the
    count is asserted.
    """
    field = A.field
    if B.field != field:
        raise FieldMismatchError("A and B from different fields")
    q, p = field.q, field.p
    if d < 1 or (q - 1) % d != 0:
        raise BadParametersError(f"d = {d} does not divide q - 1 = {q - 1}")
    sub_order = (q - 1) // d + 1
    e = round(math.log(sub_order, p))
    if p**e != sub_order or field.n % e != 0 or e == field.n:
        raise BadParametersError(
            f"d = {d} does not correspond to a proper subfield of GF({q})"
        )
    if d % p == 0:
        raise BadParametersError("characteristic divides d")
    if A.code == 0 or B.code == 0:
        raise BadParametersError("A and B must be nonzero")
    if not field.in_subfield(A.code, e) or not field.in_subfield(B.code, e):
        raise BadParametersError(f"A and B must lie in the subfield of order {sub_order}")
    roots = [
        FieldElement(field, x)
        for x in range(q)
        if field.add(field.mul(A.code, field.pow(x, d)), B.code) == 0
    ]
    if len(roots) != d:
        raise AssertionError(
            f"expected {d} roots, found {len(roots)}"
        )  # pragma: no cover
    return roots
