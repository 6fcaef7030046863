"""The symplectic space (F2^2g, <.,.>) and its quadratic forms.

Vectors carry two g-bit blocks (e-coordinates, then f-coordinates); the
pairing is the standard split-basis one, <u, v> = sum u_e.v_f + u_f.v_e.
A quadratic form with this polarity is determined by its 2g basis values,
and evaluation anywhere follows from q(x+y) = q(x) + q(y) + <x, y>.  The
Arf invariant sum q(e_i) q(f_i) splits the 2^2g forms into 2^(g-1)(2^g+1)
even and 2^(g-1)(2^g-1) odd ones, the two orbits of Sp(F2^2g).

Bit packing: coordinate i of a block sits at bit g-1-i of the block int,
so bit strings read left to right and the hex serialization below is
most-significant-first within each block.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .gf2 import gf2_inv, gf2_mul, parity as bit_parity

__all__ = [
    "F2Vector",
    "QForm",
    "SpMatrix",
    "weil_pairing",
    "eval_form",
    "arf",
    "translate_form",
    "form_difference",
    "sp_apply",
    "enumerate_forms",
    "transvection",
    "identity_matrix",
    "mat_mul",
    "random_symplectic",
]

EXHAUSTIVE_GENUS_CAP = 8


def _check_block(value: int, g: int, what: str) -> None:
    if not 0 <= value < (1 << g):
        raise ValueError(f"{what} must be a {g}-bit value, got {value}")


def _hex_width(g: int) -> int:
    return (g + 3) // 4


@dataclass(frozen=True)
class F2Vector:
    """Element of F2^2g: e-block and f-block of g bits each."""

    g: int
    e: int
    f: int

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError(f"genus must be positive, got {self.g}")
        _check_block(self.e, self.g, "e block")
        _check_block(self.f, self.g, "f block")

    @classmethod
    def from_bits(cls, bits: str) -> "F2Vector":
        """Parse a 2g-bit string, e-coordinates first."""
        if len(bits) % 2 or not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"need an even-length bit string, got {bits!r}")
        g = len(bits) // 2
        return cls(g, int(bits[:g], 2), int(bits[g:], 2))

    @classmethod
    def from_hex(cls, g: int, text: str) -> "F2Vector":
        e_part, _, f_part = text.partition(":")
        if not _:
            raise ValueError(f"expected 'ehex:fhex', got {text!r}")
        return cls(g, int(e_part, 16), int(f_part, 16))

    @classmethod
    def from_packed(cls, g: int, packed: int) -> "F2Vector":
        return cls(g, packed >> g, packed & ((1 << g) - 1))

    @property
    def bits(self) -> str:
        return format(self.e, f"0{self.g}b") + format(self.f, f"0{self.g}b")

    @property
    def packed(self) -> int:
        return (self.e << self.g) | self.f

    @property
    def is_zero(self) -> bool:
        return self.e == 0 and self.f == 0

    def to_hex(self) -> str:
        w = _hex_width(self.g)
        return f"{self.e:0{w}x}:{self.f:0{w}x}"

    def __add__(self, other: "F2Vector") -> "F2Vector":
        if self.g != other.g:
            raise ValueError(f"genus mismatch: {self.g} vs {other.g}")
        return F2Vector(self.g, self.e ^ other.e, self.f ^ other.f)


@dataclass(frozen=True)
class QForm:
    """Quadratic form with the symplectic polarity, stored by basis values.

    qe holds (q(e_1), ..., q(e_g)) and qf holds (q(f_1), ..., q(f_g)) in
    the same bit packing as F2Vector blocks.
    """

    g: int
    qe: int
    qf: int

    def __post_init__(self) -> None:
        if self.g < 1:
            raise ValueError(f"genus must be positive, got {self.g}")
        _check_block(self.qe, self.g, "e basis values")
        _check_block(self.qf, self.g, "f basis values")

    @classmethod
    def from_basis_values(cls, bits: str) -> "QForm":
        v = F2Vector.from_bits(bits)
        return cls(v.g, v.e, v.f)

    @classmethod
    def from_hex(cls, g: int, text: str) -> "QForm":
        v = F2Vector.from_hex(g, text)
        return cls(g, v.e, v.f)

    @property
    def basis_values(self) -> str:
        return format(self.qe, f"0{self.g}b") + format(self.qf, f"0{self.g}b")

    def to_hex(self) -> str:
        w = _hex_width(self.g)
        return f"{self.qe:0{w}x}:{self.qf:0{w}x}"


@dataclass(frozen=True)
class SpMatrix:
    """2g x 2g bit matrix preserving the pairing; checked at construction.

    rows[i] is the i-th row in the F2Vector packed order (e-block high).
    """

    g: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = 2 * self.g
        if len(self.rows) != n:
            raise ValueError(f"need {n} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < (1 << n):
                raise ValueError(f"row out of range: {r}")
        cols = self._columns()
        for j in range(n):
            for k in range(j + 1, n):
                expected = 1 if k == j + self.g else 0
                if _packed_pairing(cols[j], cols[k], self.g) != expected:
                    raise ValueError("matrix does not preserve the symplectic pairing")

    def _columns(self) -> list[int]:
        n = 2 * self.g
        cols = [0] * n
        for i, row in enumerate(self.rows):
            for j in range(n):
                if row >> (n - 1 - j) & 1:
                    cols[j] |= 1 << (n - 1 - i)
        return cols

    def apply_packed(self, packed: int) -> int:
        n = 2 * self.g
        out = 0
        for i, row in enumerate(self.rows):
            if bit_parity(row & packed):
                out |= 1 << (n - 1 - i)
        return out


def _packed_pairing(u: int, v: int, g: int) -> int:
    mask = (1 << g) - 1
    return bit_parity(((u >> g) & (v & mask)) ^ ((u & mask) & (v >> g)))


def weil_pairing(u: F2Vector, v: F2Vector) -> int:
    """<u, v> = sum_i u_ei v_fi + u_fi v_ei mod 2."""
    if u.g != v.g:
        raise ValueError(f"genus mismatch: {u.g} vs {v.g}")
    return bit_parity(u.e & v.f) ^ bit_parity(u.f & v.e)


def eval_form(q: QForm, x: F2Vector) -> int:
    """q(x), by the closed form q(x) = x_e.x_f + qe.x_e + qf.x_f.

    This is what the polarity expansion collapses to in the split basis;
    the test suite checks it against a naive recursive expansion.
    """
    if q.g != x.g:
        raise ValueError(f"genus mismatch: {q.g} vs {x.g}")
    return bit_parity(x.e & x.f) ^ bit_parity(q.qe & x.e) ^ bit_parity(q.qf & x.f)


def arf(q: QForm) -> int:
    """Arf invariant sum q(e_i) q(f_i) mod 2."""
    return bit_parity(q.qe & q.qf)


def translate_form(q: QForm, v: F2Vector) -> QForm:
    """(q + v)(x) = q(x) + <v, x>; note the block swap in basis values."""
    if q.g != v.g:
        raise ValueError(f"genus mismatch: {q.g} vs {v.g}")
    return QForm(q.g, q.qe ^ v.f, q.qf ^ v.e)


def form_difference(q1: QForm, q2: QForm) -> F2Vector:
    """The unique v with q1 + v == q2."""
    if q1.g != q2.g:
        raise ValueError(f"genus mismatch: {q1.g} vs {q2.g}")
    return F2Vector(q1.g, q1.qf ^ q2.qf, q1.qe ^ q2.qe)


def enumerate_forms(g: int, parity: str = "all") -> list[QForm]:
    """All quadratic forms of genus g, optionally filtered by Arf parity.

    parity is "even", "odd" or "all".  Output is in ascending
    (qe, qf) order, which is the canonical order used everywhere.
    """
    if g < 1:
        raise ValueError(f"genus must be positive, got {g}")
    if g > EXHAUSTIVE_GENUS_CAP:
        raise ValueError(
            f"exhaustive enumeration capped at genus {EXHAUSTIVE_GENUS_CAP} "
            f"(2^{2 * g} forms requested)"
        )
    if parity not in ("even", "odd", "all"):
        raise ValueError(f"parity must be even|odd|all, got {parity!r}")
    want = {"even": (0,), "odd": (1,), "all": (0, 1)}[parity]
    return [
        QForm(g, qe, qf)
        for qe in range(1 << g)
        for qf in range(1 << g)
        if bit_parity(qe & qf) in want
    ]


def identity_matrix(g: int) -> SpMatrix:
    n = 2 * g
    return SpMatrix(g, tuple(1 << (n - 1 - i) for i in range(n)))


def transvection(v: F2Vector) -> SpMatrix:
    """t_v(x) = x + <x, v> v; an involution, and a generator of Sp."""
    if v.is_zero:
        raise ValueError("transvection direction must be nonzero")
    n = 2 * v.g
    functional = (v.f << v.g) | v.e  # row vector of x -> <x, v>
    packed = v.packed
    rows = []
    for i in range(n):
        row = 1 << (n - 1 - i)
        if packed >> (n - 1 - i) & 1:
            row ^= functional
        rows.append(row)
    return SpMatrix(v.g, tuple(rows))


def mat_mul(a: SpMatrix, b: SpMatrix) -> SpMatrix:
    if a.g != b.g:
        raise ValueError(f"genus mismatch: {a.g} vs {b.g}")
    return SpMatrix(a.g, tuple(gf2_mul(a.rows, b.rows)))


@lru_cache(maxsize=512)
def _inverse_rows(m: SpMatrix) -> tuple[int, ...]:
    return tuple(gf2_inv(m.rows))


def sp_apply(m: SpMatrix, t: F2Vector | QForm) -> F2Vector | QForm:
    """Apply the symplectic action: vectors linearly, forms by q(M^-1 x)."""
    if m.g != t.g:
        raise ValueError(f"genus mismatch: {m.g} vs {t.g}")
    if isinstance(t, F2Vector):
        return F2Vector.from_packed(t.g, m.apply_packed(t.packed))
    inv = _inverse_rows(m)
    n = 2 * m.g
    qe = qf = 0
    for k in range(n):
        col = 0
        for i in range(n):
            if inv[i] >> (n - 1 - k) & 1:
                col |= 1 << (n - 1 - i)
        val = eval_form(t, F2Vector.from_packed(m.g, col))
        if k < m.g:
            qe |= val << (m.g - 1 - k)
        else:
            qf |= val << (n - 1 - k)
    return QForm(m.g, qe, qf)


def random_symplectic(g: int, rng: random.Random, n_factors: int | None = None) -> SpMatrix:
    """Product of random transvections; n_factors defaults to 2g..4g."""
    if n_factors is None:
        n_factors = rng.randint(2 * g, 4 * g)
    m = identity_matrix(g)
    for _ in range(n_factors):
        packed = rng.randrange(1, 1 << (2 * g))
        m = mat_mul(m, transvection(F2Vector.from_packed(g, packed)))
    return m
