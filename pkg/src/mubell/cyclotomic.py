"""Exact arithmetic in Z[w_M] and scale-tracked matrices over it.

A :class:`CycInt` is an integer combination of powers of w_M = exp(2 pi i/M).
Supported conductors are primes and 4; in both cases the powers
1, w, ..., w^(phi(M)-1) form an integral basis, so the canonical coefficient
vector is unique and divisibility by an integer can be read coefficientwise.

A :class:`ScaledMatrix` stores an array of such entries together with a
nonnegative exponent ``scale``; the represented complex matrix is
``entries / sqrt(base)**scale``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "CycInt",
    "ScaledValue",
    "ScaledMatrix",
    "ScaledVector",
    "root_power",
    "abs_squared",
    "unify_conductors",
]

_INT64_HEADROOM = 2**62


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _check_conductor(m: int) -> None:
    if not (m == 4 or _is_prime(m)):
        raise ValueError(f"unsupported conductor {m}; expected a prime or 4")


def _canonical(coeffs: list[int], m: int) -> tuple[int, ...]:
    if m == 4:
        return (coeffs[0] - coeffs[2], coeffs[1] - coeffs[3], 0, 0)
    top = coeffs[-1]
    if top:
        return tuple(c - top for c in coeffs)
    return tuple(coeffs)


def _canonical_array(data: np.ndarray, m: int) -> np.ndarray:
    """Canonicalize an array whose last axis holds coefficient vectors."""
    out = data.copy()
    if m == 4:
        out[..., 0] -= out[..., 2]
        out[..., 1] -= out[..., 3]
        out[..., 2:] = 0
    else:
        out -= out[..., -1:]
    return out


class CycInt:
    """An element of Z[w_M] in canonical form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[int]):
        _check_conductor(conductor)
        cs = [int(c) for c in coeffs]
        if len(cs) > conductor:
            raise ValueError("more coefficients than the conductor allows")
        cs.extend([0] * (conductor - len(cs)))
        self.conductor = conductor
        self.coeffs = _canonical(cs, conductor)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def from_int(cls, conductor: int, value: int) -> CycInt:
        return cls(conductor, [value])

    @classmethod
    def from_text(cls, text: str) -> CycInt:
        """Parse the ``cyc(M)[c0,c1,...]`` form produced by ``str``."""
        match = re.fullmatch(r"\s*cyc\((\d+)\)\[([-\d,\s]*)\]\s*", text)
        if match is None:
            raise ValueError(f"not a cyclotomic literal: {text!r}")
        body = match.group(2).strip()
        coeffs = [int(c) for c in body.split(",")] if body else []
        return cls(int(match.group(1)), coeffs)

    # -- predicates / views -------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_integer(self) -> int | None:
        """The value as a Python int when it lies in Z, else ``None``."""
        return self.coeffs[0] if self.is_rational() else None

    def divisible_by(self, k: int) -> bool:
        return all(c % k == 0 for c in self.coeffs)

    def exact_div(self, k: int) -> CycInt:
        if not self.divisible_by(k):
            raise ArithmeticError(f"{self} is not divisible by {k}")
        return CycInt(self.conductor, [c // k for c in self.coeffs])

    def embed(self, conductor: int) -> CycInt:
        """The same ring element viewed in a larger conductor."""
        if conductor == self.conductor:
            return self
        if self.is_rational():
            return CycInt(conductor, [self.coeffs[0]])
        if conductor % self.conductor:
            raise ValueError(f"cannot embed conductor {self.conductor} into {conductor}")
        step = conductor // self.conductor
        cs = [0] * conductor
        for k, c in enumerate(self.coeffs):
            cs[k * step] += c
        return CycInt(conductor, cs)

    def __complex__(self) -> complex:
        w = np.exp(2j * np.pi / self.conductor)
        return complex(sum(c * w**k for k, c in enumerate(self.coeffs)))

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> tuple[CycInt, CycInt] | None:
        if isinstance(other, (int, np.integer)):
            return self, CycInt(self.conductor, [int(other)])
        if isinstance(other, CycInt):
            return unify_conductors(self, other)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycInt(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycInt(a.conductor, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        m = a.conductor
        out = [0] * m
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[(i + j) % m] += x * y
        return CycInt(m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycInt:
        if k < 0:
            raise ValueError("negative powers are not ring operations")
        result = CycInt(self.conductor, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> CycInt:
        m = self.conductor
        cs = [0] * m
        for k, c in enumerate(self.coeffs):
            cs[(-k) % m] += c
        return CycInt(m, cs)

    def abs_squared(self) -> CycInt:
        return self * self.conj()

    # -- comparison / text --------------------------------------------
    def __eq__(self, other) -> bool:
        try:
            pair = self._coerce(other)
        except ValueError:
            return False
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            # rational values hash alike across conductors, matching __eq__
            if self.is_rational():
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    def __str__(self) -> str:
        return f"cyc({self.conductor})[{','.join(str(c) for c in self.coeffs)}]"

    def __repr__(self) -> str:
        return f"CycInt({self.conductor}, {list(self.coeffs)})"


def unify_conductors(a: CycInt, b: CycInt) -> tuple[CycInt, CycInt]:
    """Bring two values into one conductor (2 embeds into 4; integers embed anywhere)."""
    if a.conductor == b.conductor:
        return a, b
    if b.is_rational():
        return a, b.embed(a.conductor)
    if a.is_rational():
        return a.embed(b.conductor), b
    big = max(a.conductor, b.conductor)
    return a.embed(big), b.embed(big)


def root_power(conductor: int, k: int) -> CycInt:
    """w_M^(k mod M)."""
    cs = [0] * conductor
    cs[k % conductor] = 1
    return CycInt(conductor, cs)


def abs_squared(z: CycInt) -> CycInt:
    return z.abs_squared()


def units(conductor: int) -> list[CycInt]:
    """All roots of unity in Z[w_M]: +-w^k for odd primes, i^k for M = 4."""
    roots = [root_power(conductor, k) for k in range(conductor)]
    if conductor % 2:
        roots += [-r for r in roots]
    return roots


def gauss_sum(p: int) -> CycInt:
    """sum_l w_p^(l^2); equals +sqrt(p) when p = 1 (mod 4)."""
    return sum((root_power(p, l * l) for l in range(p)), CycInt(p, []))


# ---------------------------------------------------------------------------
# scale-tracked values and matrices
# ---------------------------------------------------------------------------


class ScaledValue:
    """A scalar ``value / sqrt(base)**scale``."""

    __slots__ = ("base", "value", "scale")

    def __init__(self, base: int, value: CycInt, scale: int = 0):
        self.base = base
        self.value = value
        self.scale = scale
        self._reduce()

    def _reduce(self) -> None:
        if self.value.is_zero():
            self.scale = 0
            return
        while self.scale >= 2 and self.value.divisible_by(self.base):
            self.value = self.value.exact_div(self.base)
            self.scale -= 2

    def conj(self) -> ScaledValue:
        return ScaledValue(self.base, self.value.conj(), self.scale)

    def abs_squared(self) -> ScaledValue:
        return ScaledValue(self.base, self.value.abs_squared(), 2 * self.scale)

    def __mul__(self, other: ScaledValue) -> ScaledValue:
        if self.base != other.base:
            raise ValueError("base mismatch")
        return ScaledValue(self.base, self.value * other.value, self.scale + other.scale)

    def rational(self) -> Fraction | None:
        """The exact rational value, or ``None`` if the value is not rational."""
        n = self.value.as_integer()
        if n is None:
            return None
        if self.scale % 2:
            return Fraction(0) if n == 0 else None
        return Fraction(n, self.base ** (self.scale // 2))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.rational() == other
        if isinstance(other, ScaledValue):
            return ScaledMatrix.from_value(self) == ScaledMatrix.from_value(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.base, self.value, self.scale))

    def __complex__(self) -> complex:
        return complex(self.value) / self.base ** (self.scale / 2)

    def __repr__(self) -> str:
        return f"ScaledValue({self.value} / sqrt({self.base})^{self.scale})"


def _check_fits(a: np.ndarray, b: np.ndarray, inner: int, m: int) -> bool:
    if a.dtype == object or b.dtype == object:
        return False
    bound = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * max(inner, 1) * m
    return bound < _INT64_HEADROOM


def _conv_matmul(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """Matrix product of coefficient arrays (R,K,M) x (K,C,M) -> (R,C,M)."""
    if not _check_fits(a, b, a.shape[1], m):
        a, b = a.astype(object), b.astype(object)
    out = np.zeros((a.shape[0], b.shape[1], m), dtype=a.dtype)
    nz_a = [k for k in range(m) if a[..., k].any()]
    nz_b = [k for k in range(m) if b[..., k].any()]
    for i in nz_a:
        for j in nz_b:
            out[..., (i + j) % m] += a[..., i] @ b[..., j]
    return out


def _conv_kron(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    if not _check_fits(a, b, 1, m):
        a, b = a.astype(object), b.astype(object)
    rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    out = np.zeros((rows, cols, m), dtype=a.dtype)
    for i in range(m):
        if not a[..., i].any():
            continue
        for j in range(m):
            if b[..., j].any():
                out[..., (i + j) % m] += np.kron(a[..., i], b[..., j])
    return out


def _conv_scalar(data: np.ndarray, z: CycInt) -> np.ndarray:
    m = data.shape[-1]
    out = np.zeros_like(data)
    for j, c in enumerate(z.coeffs):
        if c:
            out += c * np.roll(data, j, axis=-1)
    return out


class ScaledMatrix:
    """Exact complex matrix ``entries / sqrt(base)**scale`` with entries in Z[w_M].

    ``data`` has shape (rows, cols, conductor); the last axis holds the
    canonical coefficient vector of each entry.  Instances are immutable by
    convention and always stored in canonical (fully reduced) form.
    """

    def __init__(self, base: int, conductor: int, data: np.ndarray, scale: int = 0):
        _check_conductor(conductor)
        if scale < 0:
            raise ValueError("scale must be nonnegative")
        data = np.asarray(data)
        if data.ndim != 3 or data.shape[2] != conductor:
            raise ValueError(f"data must have shape (rows, cols, {conductor})")
        self.base = base
        self.conductor = conductor
        data = _canonical_array(data, conductor)
        if not data.any():
            scale = 0
        else:
            while scale >= 2 and not (data % base).any():
                data = data // base
                scale -= 2
        if data.dtype == object and int(np.abs(data).max(initial=0)) < _INT64_HEADROOM:
            data = data.astype(np.int64)
        data.setflags(write=False)
        self.data = data
        self.scale = scale

    # -- construction helpers -----------------------------------------
    @classmethod
    def zeros(cls, base: int, conductor: int, rows: int, cols: int) -> ScaledMatrix:
        return cls(base, conductor, np.zeros((rows, cols, conductor), dtype=np.int64))

    @classmethod
    def identity(cls, base: int, conductor: int, dim: int) -> ScaledMatrix:
        data = np.zeros((dim, dim, conductor), dtype=np.int64)
        data[np.arange(dim), np.arange(dim), 0] = 1
        return cls(base, conductor, data)

    @classmethod
    def from_entries(
        cls, base: int, conductor: int, rows: Sequence[Sequence[CycInt | int]], scale: int = 0
    ) -> ScaledMatrix:
        r = len(rows)
        c = len(rows[0]) if r else 0
        data = np.zeros((r, c, conductor), dtype=np.int64)
        for i, row in enumerate(rows):
            for j, z in enumerate(row):
                if isinstance(z, int):
                    z = CycInt(conductor, [z])
                data[i, j] = z.embed(conductor).coeffs
        return cls(base, conductor, data, scale)

    @classmethod
    def from_value(cls, v: ScaledValue) -> ScaledMatrix:
        return cls.from_entries(v.base, v.value.conductor, [[v.value]], v.scale)

    # -- basic views --------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[0], self.data.shape[1]

    def __getitem__(self, index: tuple[int, int]) -> CycInt:
        i, j = index
        return CycInt(self.conductor, self.data[i, j])

    def value_at(self, i: int, j: int) -> ScaledValue:
        return ScaledValue(self.base, self[i, j], self.scale)

    def column(self, j: int) -> ScaledVector:
        return ScaledVector(self.base, self.conductor, self.data[:, j : j + 1, :], self.scale)

    def columns(self) -> list[ScaledVector]:
        return [self.column(j) for j in range(self.shape[1])]

    def to_complex(self) -> np.ndarray:
        """Floating-point view, for display and debugging only."""
        w = np.exp(2j * np.pi * np.arange(self.conductor) / self.conductor)
        return (self.data.astype(float) @ w) / self.base ** (self.scale / 2)

    def is_zero(self) -> bool:
        return not self.data.any()

    # -- algebra ------------------------------------------------------
    def _compatible(self, other: ScaledMatrix) -> tuple[ScaledMatrix, ScaledMatrix]:
        if not isinstance(other, ScaledMatrix):
            raise TypeError(f"expected ScaledMatrix, got {type(other).__name__}")
        if self.base != other.base:
            raise ValueError(f"base mismatch: {self.base} vs {other.base}")
        if self.conductor == other.conductor:
            return self, other
        big = max(self.conductor, other.conductor)
        return self.with_conductor(big), other.with_conductor(big)

    def with_conductor(self, conductor: int) -> ScaledMatrix:
        if conductor == self.conductor:
            return self
        if conductor % self.conductor and self.data[..., 1:].any():
            raise ValueError(f"cannot embed conductor {self.conductor} into {conductor}")
        data = np.zeros(self.data.shape[:2] + (conductor,), dtype=self.data.dtype)
        if conductor % self.conductor:
            data[..., 0] = self.data[..., 0]
        else:
            step = conductor // self.conductor
            for k in range(self.conductor):
                data[..., k * step] += self.data[..., k]
        return type(self)._raw(self.base, conductor, data, self.scale)

    @classmethod
    def _raw(cls, base, conductor, data, scale):
        if cls is ScaledVector:
            return ScaledVector(base, conductor, data, scale)
        return ScaledMatrix(base, conductor, data, scale)

    def __matmul__(self, other: ScaledMatrix) -> ScaledMatrix:
        a, b = self._compatible(other)
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
        data = _conv_matmul(a.data, b.data, a.conductor)
        if data.shape[1] == 1 and isinstance(other, ScaledVector):
            return ScaledVector(a.base, a.conductor, data, a.scale + b.scale)
        return ScaledMatrix(a.base, a.conductor, data, a.scale + b.scale)

    def adjoint(self) -> ScaledMatrix:
        data = np.transpose(self.data, (1, 0, 2))
        m = self.conductor
        conj = np.zeros_like(data)
        for k in range(m):
            conj[..., (-k) % m] += data[..., k]
        return ScaledMatrix(self.base, m, conj, self.scale)

    def transpose(self) -> ScaledMatrix:
        return ScaledMatrix(self.base, self.conductor, np.transpose(self.data, (1, 0, 2)), self.scale)

    def trace(self) -> ScaledValue:
        if self.shape[0] != self.shape[1]:
            raise ValueError("trace of a non-square matrix")
        coeffs = np.trace(self.data, axis1=0, axis2=1)
        return ScaledValue(self.base, CycInt(self.conductor, coeffs), self.scale)

    def tensor(self, other: ScaledMatrix) -> ScaledMatrix:
        a, b = self._compatible(other)
        data = _conv_kron(a.data, b.data, a.conductor)
        return ScaledMatrix(a.base, a.conductor, data, a.scale + b.scale)

    def times(self, z: CycInt) -> ScaledMatrix:
        """Multiply every entry by the ring element ``z``."""
        mat = self
        if z.conductor != self.conductor and not z.is_rational():
            mat = self.with_conductor(max(z.conductor, self.conductor))
        z = z.embed(mat.conductor)
        return type(self)._raw(mat.base, mat.conductor, _conv_scalar(mat.data, z), mat.scale)

    def divide_by_sqrt_base(self, k: int = 1) -> ScaledMatrix:
        """Divide the represented value by sqrt(base)**k."""
        return type(self)._raw(self.base, self.conductor, self.data, self.scale + k)

    def _lifted(self, scale: int) -> np.ndarray:
        """Entries rewritten at a larger scale of the same parity."""
        diff = scale - self.scale
        assert diff >= 0 and diff % 2 == 0
        factor = self.base ** (diff // 2)
        data = self.data
        if not _check_fits(data, np.array([factor]), 1, 1):
            data = data.astype(object)
        return data * factor

    def _same_parity(self, other: ScaledMatrix) -> tuple[ScaledMatrix, ScaledMatrix] | None:
        """Rewrite two matrices so their scales share parity, if the ring allows it."""
        if (self.scale - other.scale) % 2 == 0 or self.is_zero() or other.is_zero():
            return self, other
        p = self.base
        if p % 4 != 1:
            # sqrt(p) is not in Q(w_p) (or Q(i) for p = 2): values cannot coincide
            return None
        g = gauss_sum(p)

        def bump(m: ScaledMatrix) -> ScaledMatrix:
            return ScaledMatrix(p, m.conductor, _conv_scalar(m.with_conductor(p).data, g), m.scale + 1)

        if self.scale % 2:
            return bump(self), other
        return self, bump(other)

    def __add__(self, other: ScaledMatrix) -> ScaledMatrix:
        a, b = self._compatible(other)
        if a.shape != b.shape:
            raise ValueError(f"dimension mismatch: {a.shape} + {b.shape}")
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        pair = a._same_parity(b)
        if pair is None:
            raise ValueError("sum not representable: scales of different parity")
        a, b = pair
        scale = max(a.scale, b.scale)
        return type(self)._raw(a.base, a.conductor, a._lifted(scale) + b._lifted(scale), scale)

    def __neg__(self) -> ScaledMatrix:
        return type(self)._raw(self.base, self.conductor, -self.data, self.scale)

    def __sub__(self, other: ScaledMatrix) -> ScaledMatrix:
        return self + (-other)

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, ScaledMatrix):
            return NotImplemented
        if self.base != other.base or self.shape != other.shape:
            return False
        try:
            a, b = self._compatible(other)
        except ValueError:
            return False
        if a.is_zero() or b.is_zero():
            return a.is_zero() and b.is_zero()
        pair = a._same_parity(b)
        if pair is None:
            return False
        a, b = pair
        scale = max(a.scale, b.scale)
        return bool(np.array_equal(a._lifted(scale), b._lifted(scale)))

    __hash__ = None  # type: ignore[assignment]

    def equals(self, other: ScaledMatrix) -> bool:
        return self == other

    def equals_up_to_phase(self, other: ScaledMatrix) -> CycInt | None:
        """Return a root of unity ``phi`` with ``self == phi * other``, or ``None``."""
        if self.base != other.base or self.shape != other.shape:
            return None
        m = max(self.conductor, other.conductor)
        for phi in units(m):
            if self == other.times(phi):
                return phi
        return None

    def is_unitary(self) -> bool:
        rows, cols = self.shape
        return rows == cols and self @ self.adjoint() == ScaledMatrix.identity(self.base, self.conductor, rows)

    # -- serialization ------------------------------------------------
    def entry_strings(self) -> list[list[str]]:
        rows, cols = self.shape
        return [[str(self[i, j]) for j in range(cols)] for i in range(rows)]

    def to_json(self) -> dict:
        rows, cols = self.shape
        return {
            "base": self.base,
            "conductor": self.conductor,
            "scale": self.scale,
            "rows": rows,
            "cols": cols,
            "entries": self.entry_strings(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> ScaledMatrix:
        rows = [[CycInt.from_text(s) for s in row] for row in obj["entries"]]
        return cls.from_entries(obj["base"], obj["conductor"], rows, obj["scale"])

    def __repr__(self) -> str:
        return f"{type(self).__name__}(base={self.base}, conductor={self.conductor}, shape={self.shape}, scale={self.scale})"


class ScaledVector(ScaledMatrix):
    """A column ``ScaledMatrix`` with vector conveniences."""

    def __init__(self, base: int, conductor: int, data: np.ndarray, scale: int = 0):
        data = np.asarray(data)
        if data.ndim == 2:
            data = data[:, None, :]
        if data.ndim != 3 or data.shape[1] != 1:
            raise ValueError("a vector has exactly one column")
        super().__init__(base, conductor, data, scale)

    @classmethod
    def from_entries(  # type: ignore[override]
        cls, base: int, conductor: int, entries: Sequence[CycInt | int], scale: int = 0
    ) -> ScaledVector:
        mat = ScaledMatrix.from_entries(base, conductor, [[z] for z in entries], scale)
        return cls(base, conductor, mat.data, mat.scale)

    @classmethod
    def basis_vector(cls, base: int, conductor: int, dim: int, index: int) -> ScaledVector:
        data = np.zeros((dim, 1, conductor), dtype=np.int64)
        data[index, 0, 0] = 1
        return cls(base, conductor, data)

    @property
    def dim(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, i):  # type: ignore[override]
        if isinstance(i, tuple):
            return super().__getitem__(i)
        return CycInt(self.conductor, self.data[i, 0])

    def __len__(self) -> int:
        return self.dim

    def inner(self, other: ScaledVector) -> ScaledValue:
        """<self|other>."""
        return (self.adjoint() @ other).value_at(0, 0)

    def outer(self, other: ScaledVector | None = None) -> ScaledMatrix:
        """|self><other| (``other`` defaults to ``self``)."""
        other = self if other is None else other
        return ScaledMatrix(self.base, self.conductor, self.data, self.scale) @ other.adjoint()

    def entries(self) -> list[CycInt]:
        return [self[i] for i in range(self.dim)]

    def permuted(self, perm: Sequence[int]) -> ScaledVector:
        """Vector whose entry ``perm[i]`` is this vector's entry ``i``."""
        data = np.zeros_like(self.data)
        data[list(perm)] = self.data
        return ScaledVector(self.base, self.conductor, data, self.scale)

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "conductor": self.conductor,
            "scale": self.scale,
            "dim": self.dim,
            "entries": [str(z) for z in self.entries()],
        }
