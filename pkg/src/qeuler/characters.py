"""Dirichlet characters modulo an odd integer and their composition sums.

The unit group modulo an odd d is a direct product of cyclic groups, one per
odd prime power in d.  Fixing a primitive root g_i for each factor p_i^e_i,
every character is determined by an exponent tuple (k_1, ..., k_t) with
0 <= k_i < phi(p_i^e_i):

    chi(m) = prod_i zeta^(k_i * dlog_i(m) * L / s_i),   zeta = exp(2 pi i / L),

where s_i = phi(p_i^e_i), L = lcm(s_i) is the group exponent, and dlog_i is
the discrete logarithm base g_i.  Values are taken from a single table of
L-th roots of unity, so equal angles give bit-identical complex values.

The module also computes the order-r composition sums

    c_m = sum_{m_1 + ... + m_r = m} chi(m_1) ... chi(m_r)

that collapse the r-fold series of the q-Euler evaluators into a single sum.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, NegativeArgument, NotOdd, Overflow

DEFAULT_MODULUS_BOUND = 10 ** 6


def _factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as (prime, exponent) pairs."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return factors


def _primitive_root(p: int, e: int) -> int:
    """Smallest primitive root modulo the odd prime power p^e.

    A generator g of (Z/pZ)* also generates (Z/p^eZ)* unless
    g^(p-1) = 1 mod p^2, in which case g + p works.
    """
    order = p - 1
    prime_factors = [f for f, _ in _factorize(order)]
    g = 2
    while True:
        if all(pow(g, order // f, p) != 1 for f in prime_factors):
            break
        g += 1
    if e == 1:
        return g
    if pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(eq=False)
class DirichletCharacter:
    """A d-periodic completely multiplicative map, zero off units mod d.

    values[m] holds chi(m) for residues 0 <= m < d.  The unique character mod
    1 is identically one, including at 0, so that series starting at index 0
    keep their constant term in the unramified case.  label is the position
    of the character's exponent tuple in lexicographic order; label 0 is the
    principal character.
    """

    modulus_d: int
    label: int
    values: np.ndarray

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=complex)
        self.values.setflags(write=False)

    def __call__(self, m: int) -> complex:
        """chi(m) via periodic extension; rejects negative arguments."""
        if m < 0:
            raise NegativeArgument(f"character argument must be nonnegative, got {m}")
        return complex(self.values[m % self.modulus_d])

    def is_real(self) -> bool:
        return bool(np.all(self.values.imag == 0.0))

    def is_principal(self) -> bool:
        return self.label == 0

    def periodic_values(self, length: int) -> np.ndarray:
        """chi(0), chi(1), ..., chi(length-1) as a complex array."""
        if length < 0:
            raise DomainError(f"length must be nonnegative, got {length}")
        reps = -(-length // self.modulus_d)
        return np.tile(self.values, reps)[:length]

    def to_json_dict(self) -> dict:
        return {
            "d": self.modulus_d,
            "label": self.label,
            "values": [[float(v.real), float(v.imag)] for v in self.values],
        }


def eval_char(chi: DirichletCharacter, m: int) -> complex:
    """Evaluate chi at any nonnegative integer (periodic extension mod d)."""
    return chi(m)


@dataclass(eq=False)
class CharacterGroup:
    """All phi(d) characters modulo an odd d, principal first.

    structure lists one (prime_power, generator, order) triple per odd prime
    power factor of d; the characters appear in lexicographic order of their
    exponent tuples with respect to that factor order.
    """

    modulus_d: int
    characters: list[DirichletCharacter]
    structure: list[tuple[int, int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.characters)

    def __getitem__(self, label: int) -> DirichletCharacter:
        return self.characters[label]

    def __iter__(self):
        return iter(self.characters)

    @property
    def principal(self) -> DirichletCharacter:
        return self.characters[0]


def build_character_group(d: int, max_modulus: int = DEFAULT_MODULUS_BOUND) -> CharacterGroup:
    """Construct the full character group modulo an odd positive integer d."""
    if d < 1:
        raise DomainError(f"modulus must be positive, got {d}")
    if d % 2 == 0:
        raise NotOdd(f"modulus must be odd, got {d}")
    if d > max_modulus:
        raise Overflow(f"modulus {d} exceeds the construction bound {max_modulus}")
    if d == 1:
        trivial = DirichletCharacter(1, 0, np.array([1.0 + 0.0j]))
        return CharacterGroup(1, [trivial], [])

    structure = []
    components = []  # (prime_power, order, dlog table indexed by residue mod prime_power)
    for p, e in _factorize(d):
        pp = p ** e
        s = pp // p * (p - 1)  # phi(p^e)
        g = _primitive_root(p, e)
        dlog = np.full(pp, -1, dtype=np.int64)
        v = 1
        for j in range(s):
            dlog[v] = j
            v = v * g % pp
        structure.append((pp, g, s))
        components.append((pp, s, dlog))

    group_exponent = math.lcm(*(s for _, s, _ in components))
    roots = np.exp(2j * np.pi * np.arange(group_exponent) / group_exponent)
    for numerator, exact in ((0, 1.0), (1, 1.0j), (2, -1.0), (3, -1.0j)):
        if numerator * group_exponent % 4 == 0:
            roots[numerator * group_exponent // 4] = exact  # exact cardinal values

    # discrete logs of every unit residue, one row per residue class mod d
    units = [m for m in range(d) if math.gcd(m, d) == 1]
    unit_logs = [
        tuple(int(dlog[m % pp]) for pp, _, dlog in components)
        for m in units
    ]

    characters = []
    orders = [s for _, s, _ in components]
    for label, ks in enumerate(itertools.product(*(range(s) for s in orders))):
        values = np.zeros(d, dtype=complex)
        for m, logs in zip(units, unit_logs):
            angle = sum(
                k * alpha * (group_exponent // s)
                for k, alpha, s in zip(ks, logs, orders)
            ) % group_exponent
            values[m] = roots[angle]
        characters.append(DirichletCharacter(d, label, values))
    return CharacterGroup(d, characters, structure)


@dataclass(eq=False)
class CharConvSeq:
    """Truncated composition-sum coefficients of a character at order r.

    coeffs[m] = sum over (m_1, ..., m_r) with m_1 + ... + m_r = m of
    chi(m_1) ... chi(m_r); exact for every m < cutoff_M because each part of
    such a composition is itself below cutoff_M.
    """

    r: int
    cutoff_M: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        self.coeffs.setflags(write=False)


def conv_power(chi: DirichletCharacter, r: int, M: int) -> CharConvSeq:
    """Order-r composition sums c_0, ..., c_{M-1} of chi.

    Computed as r-1 successive direct linear convolutions of the periodic
    value sequence chi(0..M-1), truncated back to length M after each fold.
    """
    if r < 1:
        raise DomainError(f"order r must be a positive integer, got {r}")
    if M < 1:
        raise DomainError(f"series length M must be positive, got {M}")
    base = chi.periodic_values(M)
    coeffs = base.copy()
    for _ in range(r - 1):
        coeffs = np.convolve(coeffs, base)[:M]
    return CharConvSeq(r, M, coeffs)


def bounded_composition_sums(chi: DirichletCharacter, r: int, upper: int) -> np.ndarray:
    """Composition sums with every part restricted below upper.

    Returns the full coefficient vector of (sum_{j < upper} chi(j) z^j)^r,
    length r*(upper-1) + 1; entry t aggregates chi(j_1)...chi(j_r) over all
    r-tuples with j_1 + ... + j_r = t and 0 <= j_l < upper.
    """
    if r < 1:
        raise DomainError(f"order r must be a positive integer, got {r}")
    if upper < 1:
        raise DomainError(f"upper limit must be positive, got {upper}")
    base = chi.periodic_values(upper)
    out = base.copy()
    for _ in range(r - 1):
        out = np.convolve(out, base)
    return out
