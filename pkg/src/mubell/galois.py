"""Finite fields GF(p^n) in the power basis of a fixed modulus.

Elements are stored as coefficient tuples over Z_p (constant term first).
Multiplication goes through discrete log/antilog tables built from the
primitive element, so every field supported here (p^n <= 4096) is cheap to
construct.  Alternative coordinate systems (polynomial, normal, dual,
self-dual bases) are views computed by :func:`expand` and never a second
storage layout.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, Sequence

from .cyclotomic import CycInt, root_power

MAX_FIELD_ORDER = 4096


class FieldError(ValueError):
    """Invalid field parameters or an operation outside a field's domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over Z_p as coefficient lists, constant term first
# ---------------------------------------------------------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    m = _trim([c % p for c in m])
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        factor = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, m, p)


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    """Monic polynomials of a degree, lexicographic from the constant term up."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if not _poly_mod(poly, g, p):
                return False
    return True


def _x_has_full_order(poly: Sequence[int], p: int) -> bool:
    deg = len(poly) - 1
    order = p**deg - 1
    x = [0, 1]

    def power(e: int) -> list[int]:
        result, base = [1], x
        while e:
            if e & 1:
                result = _poly_mulmod(result, base, poly, p)
            base = _poly_mulmod(base, base, poly, p)
            e >>= 1
        return result

    if power(order) != [1]:
        return False
    return all(power(order // r) != [1] for r in _prime_factors(order))


def find_irreducible(p: int, n: int, primitive: bool = True) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree ``n`` over Z_p.

    Candidates are compared lexicographically from the constant term upward.
    With ``primitive=True`` (the default used to build fields) only
    polynomials whose root generates the multiplicative group qualify; this
    is what makes the class of x the primitive element.  For ``n == 1`` the
    degenerate modulus ``x`` is returned and the field is Z_p.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if n < 1:
        raise FieldError("extension degree must be >= 1")
    if n == 1:
        return (0, 1)
    for poly in _monic_polys(p, n):
        if poly[0] == 0 or not is_irreducible(poly, p):
            continue
        if primitive and not _x_has_full_order(poly, p):
            continue
        return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {n} over Z_{p}")


# ---------------------------------------------------------------------------
# field and elements
# ---------------------------------------------------------------------------


class FieldElement:
    """An element of GF(p^n); immutable, hashable, ordered by coefficients."""

    __slots__ = ("field", "coeffs", "code")

    def __init__(self, field: GaloisField, coeffs: tuple[int, ...], code: int):
        self.field = field
        self.coeffs = coeffs
        self.code = code

    def _other(self, other) -> FieldElement:
        if isinstance(other, int):
            return self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field is not self.field and other.field != self.field:
            raise FieldError("elements belong to different fields")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.field._add(self, other)

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return self.field._neg(self)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.field._add(self, self.field._neg(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        return self.field._inv(self)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __pow__(self, k: int) -> FieldElement:
        return self.field._pow(self, k)

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.code == self.field.from_int(other).code
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.code == other.code and (self.field is other.field or self.field == other.field)

    def __hash__(self) -> int:
        return hash(self.code)

    def __lt__(self, other: FieldElement) -> bool:
        return self.coeffs < other.coeffs

    def trace(self) -> int:
        return self.field.trace(self)

    def log(self) -> int:
        """Exponent k with ``primitive**k == self``."""
        return self.field.log(self)

    def __repr__(self) -> str:
        return f"{self.field.short_name}{list(self.coeffs)}"

    def __str__(self) -> str:
        return self.field.format(self)


class GaloisField:
    """GF(p^n) built on a monic irreducible modulus (default: smallest primitive one)."""

    def __init__(self, p: int, n: int = 1, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if n < 1:
            raise FieldError("extension degree must be >= 1")
        if p**n > MAX_FIELD_ORDER:
            raise FieldError(f"field order {p}^{n} exceeds the supported bound {MAX_FIELD_ORDER}")
        self.p = p
        self.n = n
        self.q = p**n
        if modulus is None:
            modulus = find_irreducible(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {n}")
        if n > 1 and not is_irreducible(modulus, p):
            raise FieldError(f"modulus {list(modulus)} is reducible over Z_{p}")
        self.modulus = modulus

        self._elements = [
            FieldElement(self, coeffs, self._code(coeffs))
            for coeffs in (tuple(reversed(c)) for c in itertools.product(range(p), repeat=n))
        ]
        self._elements.sort(key=lambda e: e.code)
        self.primitive = self._find_primitive()
        self._exp: list[int] = []
        self._log: list[int] = [-1] * self.q
        code = self.one.code
        for k in range(self.q - 1):
            self._exp.append(code)
            self._log[code] = k
            code = self._raw_mul(self._elements[code], self.primitive).code

    # -- identity -----------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, GaloisField):
            return NotImplemented
        return (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    @property
    def short_name(self) -> str:
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"

    def __repr__(self) -> str:
        return f"GaloisField({self.p}, {self.n}, modulus={list(self.modulus)})"

    def describe(self) -> str:
        """Canonical text form of the field description."""
        mod = ",".join(str(c) for c in self.modulus)
        prim = ",".join(str(c) for c in self.primitive.coeffs)
        return f"GF({self.p}^{self.n}; modulus=[{mod}]; primitive=[{prim}])"

    # -- element access ----------------------------------------------
    def _code(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def element(self, coeffs: Sequence[int]) -> FieldElement:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.n:
            raise FieldError(f"at most {self.n} coefficients expected")
        coeffs += [0] * (self.n - len(coeffs))
        return self._elements[self._code(coeffs)]

    def from_int(self, k: int) -> FieldElement:
        """Image of the integer k in the prime subfield."""
        return self._elements[k % self.p]

    def from_code(self, code: int) -> FieldElement:
        return self._elements[code]

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, int):
            return self.from_int(value)
        return self.element(value)

    @property
    def zero(self) -> FieldElement:
        return self._elements[0]

    @property
    def one(self) -> FieldElement:
        return self._elements[1]

    def power(self, k: int) -> FieldElement:
        """primitive**k."""
        return self._elements[self._exp[k % (self.q - 1)]]

    def log(self, a: FieldElement) -> int:
        if not a:
            raise FieldError("zero has no discrete logarithm")
        return self._log[a.code]

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.enumeration)

    def __len__(self) -> int:
        return self.q

    @cached_property
    def enumeration(self) -> tuple[FieldElement, ...]:
        """Field enumeration order: 0, then 1, s, s^2, ... for the primitive s."""
        return (self.zero,) + tuple(self.power(k) for k in range(self.q - 1))

    @cached_property
    def position(self) -> dict[FieldElement, int]:
        return {e: i for i, e in enumerate(self.enumeration)}

    def index(self, a: FieldElement) -> int:
        return self.position[a]

    def nonzero(self) -> tuple[FieldElement, ...]:
        return self.enumeration[1:]

    def format(self, a: FieldElement) -> str:
        if self.n == 1:
            return str(a.coeffs[0])
        if not a:
            return "0"
        k = self.log(a)
        return "1" if k == 0 else ("s" if k == 1 else f"s^{k}")

    # -- arithmetic ---------------------------------------------------
    def _add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return self._elements[self._code([(x + y) % p for x, y in zip(a.coeffs, b.coeffs)])]

    def _neg(self, a: FieldElement) -> FieldElement:
        p = self.p
        return self._elements[self._code([(-x) % p for x in a.coeffs])]

    def _raw_mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if self.n == 1:
            return self._elements[(a.coeffs[0] * b.coeffs[0]) % self.p]
        prod = _poly_mulmod(list(a.coeffs), list(b.coeffs), self.modulus, self.p)
        return self.element(prod)

    def _mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        if not a or not b:
            return self.zero
        return self._elements[self._exp[(self._log[a.code] + self._log[b.code]) % (self.q - 1)]]

    def _inv(self, a: FieldElement) -> FieldElement:
        if not a:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._elements[self._exp[(-self._log[a.code]) % (self.q - 1)]]

    def _pow(self, a: FieldElement, k: int) -> FieldElement:
        if not a:
            if k < 0:
                raise ZeroDivisionError("zero has no multiplicative inverse")
            return self.one if k == 0 else self.zero
        return self._elements[self._exp[(self._log[a.code] * k) % (self.q - 1)]]

    def _raw_order(self, a: FieldElement) -> int:
        order, x = 1, a
        while x != self.one:
            x = self._raw_mul(x, a)
            order += 1
        return order

    def _find_primitive(self) -> FieldElement:
        target = self.q - 1
        for a in sorted(self._elements[1:], key=lambda e: e.coeffs):
            if self._raw_order(a) == target:
                return a
        raise AssertionError("finite field without a primitive element")

    def order(self, a: FieldElement) -> int:
        """Multiplicative order of a nonzero element."""
        k = self.log(a)
        m = self.q - 1
        from math import gcd

        return m // gcd(m, k)

    # -- trace and characters ----------------------------------------
    @cached_property
    def _trace_table(self) -> list[int]:
        table = []
        for a in self._elements:
            total, x = self.zero, a
            for _ in range(self.n):
                total = total + x
                x = x ** self.p
            if any(total.coeffs[1:]):
                raise AssertionError("trace left the prime subfield")
            table.append(total.coeffs[0])
        return table

    def trace(self, a: FieldElement) -> int:
        """Absolute trace a + a^p + ... + a^(p^(n-1)), as a residue mod p."""
        return self._trace_table[a.code]

    def character_exponent(self, a: FieldElement, conductor: int | None = None) -> int:
        """Exponent k with chi(a) = w_M^k for the given conductor (default p)."""
        conductor = self.p if conductor is None else conductor
        if conductor % self.p:
            raise FieldError(f"conductor {conductor} does not contain the p-th roots of unity")
        return self.trace(a) * (conductor // self.p) % conductor

    def additive_character(self, a: FieldElement) -> CycInt:
        """chi(a) = w_p^tr(a) as an exact cyclotomic integer of conductor p."""
        return root_power(self.p, self.trace(a))

    @cached_property
    def half(self) -> FieldElement:
        """The inverse of 2 (odd characteristic only)."""
        if self.p == 2:
            raise FieldError("2 is not invertible in characteristic 2")
        return self.from_int((self.p + 1) // 2)


def trace(a: FieldElement) -> int:
    return a.field.trace(a)


def additive_character(a: FieldElement) -> CycInt:
    return a.field.additive_character(a)


def find_primitive(field: GaloisField) -> FieldElement:
    return field.primitive


@functools.lru_cache(maxsize=None)
def galois_field(p: int, n: int = 1) -> GaloisField:
    """Shared instance of the canonical GF(p^n)."""
    return GaloisField(p, n)


# ---------------------------------------------------------------------------
# bases of GF(p^n) over Z_p
# ---------------------------------------------------------------------------


def _mat_inv_mod(m: list[list[int]], p: int) -> list[list[int]]:
    size = len(m)
    aug = [list(row) + [int(i == j) for j in range(size)] for i, row in enumerate(m)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] % p), None)
        if pivot is None:
            raise FieldError("matrix is singular mod p")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], -1, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] % p:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def _rank_mod(rows: list[list[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] % p), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % p:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class BasisSpec:
    """An ordered basis of GF(p^n) over Z_p.

    ``kind`` is one of ``polynomial``, ``normal``, ``dual``, ``selfdual``,
    ``almost-selfdual`` or ``custom``.  For an almost-selfdual basis,
    ``exception`` is the (0-based) position whose self-trace is not 1.
    """

    elements: tuple[FieldElement, ...]
    kind: str = "custom"
    exception: int | None = None
    _dual_of: "BasisSpec | None" = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.elements:
            raise FieldError("a basis needs at least one element")
        f = self.field
        if len(self.elements) != f.n:
            raise FieldError(f"a basis of {f.short_name} has {f.n} elements")
        if _rank_mod([list(e.coeffs) for e in self.elements], f.p) != f.n:
            raise FieldError("basis elements are linearly dependent over Z_p")

    @property
    def field(self) -> GaloisField:
        return self.elements[0].field

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> FieldElement:
        return self.elements[i]

    def gram(self) -> list[list[int]]:
        """tr(theta_i theta_j) mod p."""
        return [[(a * b).trace() for b in self.elements] for a in self.elements]

    def is_selfdual(self) -> bool:
        n = len(self.elements)
        return self.gram() == [[int(i == j) for j in range(n)] for i in range(n)]

    def is_almost_selfdual(self) -> bool:
        g = self.gram()
        n = len(g)
        if any(g[i][j] for i in range(n) for j in range(n) if i != j):
            return False
        return sum(1 for i in range(n) if g[i][i] != 1) <= 1

    def self_traces(self) -> list[int]:
        return [(a * a).trace() for a in self.elements]

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


def polynomial_basis(field: GaloisField) -> BasisSpec:
    """{1, s, ..., s^(n-1)} for the primitive element s."""
    return BasisSpec(tuple(field.power(k) for k in range(field.n)), "polynomial")


def normal_basis(field: GaloisField, generator: FieldElement | None = None) -> BasisSpec:
    """{a, a^p, ..., a^(p^(n-1))}; defaults to the first generator in field enumeration order."""
    candidates = [generator] if generator is not None else list(field.enumeration[1:])
    for a in candidates:
        conj = tuple(a ** (field.p**k) for k in range(field.n))
        if _rank_mod([list(e.coeffs) for e in conj], field.p) == field.n:
            return BasisSpec(conj, "normal")
    raise FieldError(f"{generator} does not generate a normal basis")


def dual_basis(basis: BasisSpec) -> BasisSpec:
    """The unique basis B' with tr(theta_k theta'_l) = delta_kl."""
    f = basis.field
    if basis._dual_of is not None:
        return basis._dual_of
    inv = _mat_inv_mod(basis.gram(), f.p)
    n = f.n
    elements = []
    for l in range(n):
        e = f.zero
        for j in range(n):
            if inv[j][l]:
                e = e + basis.elements[j] * inv[j][l]
        elements.append(e)
    return BasisSpec(tuple(elements), "dual", _dual_of=basis)


def _selfdual_search(field: GaloisField, allow_exception: bool) -> BasisSpec | None:
    """Depth-first search over tuples ascending in field enumeration order."""
    order = field.nonzero()
    self_tr = [(a * a).trace() for a in order]
    n = field.n

    def extend(chosen: list[int]) -> list[int] | None:
        if len(chosen) == n:
            return chosen
        for idx in range((chosen[-1] + 1) if chosen else 0, len(order)):
            t = self_tr[idx]
            if t == 0:
                continue
            # the single permitted exception sits in the last slot
            if t != 1 and not (allow_exception and len(chosen) == n - 1):
                continue
            cand = order[idx]
            if any((cand * order[c]).trace() for c in chosen):
                continue
            found = extend(chosen + [idx])
            if found:
                return found
        return None

    found = extend([])
    if found is None:
        return None
    basis = tuple(order[i] for i in found)
    traces = [(a * a).trace() for a in basis]
    odd = [i for i, t in enumerate(traces) if t != 1]
    if not odd:
        return BasisSpec(basis, "selfdual")
    return BasisSpec(basis, "almost-selfdual", exception=odd[0])


def selfdual_exists(p: int, n: int) -> bool:
    """A self-dual basis of GF(p^n) exists iff p is even or n and p are both odd."""
    return p == 2 or n % 2 == 1


def find_selfdual(field: GaloisField) -> BasisSpec:
    """First self-dual basis in canonical search order, else an almost-self-dual one.

    Candidates are tuples of nonzero elements ascending in field enumeration
    order (increasing power of the primitive element); in the
    almost-self-dual fallback the exceptional element is always the last one.
    """
    if selfdual_exists(field.p, field.n):
        found = _selfdual_search(field, allow_exception=False)
        if found is None:
            raise AssertionError(f"self-dual basis search failed for {field.short_name}")
        return found
    found = _selfdual_search(field, allow_exception=True)
    if found is None:
        raise AssertionError(f"almost-self-dual basis search failed for {field.short_name}")
    return found


def expand(a: FieldElement, basis: BasisSpec) -> tuple[int, ...]:
    """Coordinates l_j in Z_p with a = sum_j l_j theta_j (l_j = tr(a theta'_j))."""
    dual = dual_basis(basis)
    return tuple((a * t).trace() for t in dual.elements)


def compose(coords: Sequence[int], basis: BasisSpec) -> FieldElement:
    """Inverse of :func:`expand`."""
    f = basis.field
    if len(coords) != len(basis):
        raise FieldError("coordinate count does not match the basis size")
    out = f.zero
    for c, t in zip(coords, basis.elements):
        if c % f.p:
            out = out + t * (c % f.p)
    return out
