"""Generating functions and enumeration for skew-symmetric partition families.

A partition is z-asymmetric when its Frobenius legs exceed its arms by a
fixed offset z; z = 1, -1, 0 give the symplectic, orthogonal, and
self-conjugate families.  This module counts them three independent ways:
brute force over partitions, truncated Pochhammer/theta products, and a
lattice bijection for the t-core members of each family.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .partitions import (
    Partition,
    as_partition,
    beta_set,
    conjugate,
    from_beta_set,
    is_z_asymmetric,
    partitions_of,
    residue_counts,
    size,
    t_core,
)

LatticeVec = tuple[int, ...]


@dataclass(frozen=True)
class SeriesZ:
    """Integer power series in q truncated at a fixed order."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> int:
        return self.coeffs[m]

    @classmethod
    def zero(cls, order: int) -> "SeriesZ":
        return cls((0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "SeriesZ":
        return cls((1,) + (0,) * order)

    @classmethod
    def from_counts(cls, counts: dict[int, int], order: int) -> "SeriesZ":
        row = [0] * (order + 1)
        for m, c in counts.items():
            if 0 <= m <= order:
                row[m] += c
        return cls(tuple(row))

    def __add__(self, other: "SeriesZ") -> "SeriesZ":
        order = min(self.order, other.order)
        return SeriesZ(
            tuple(a + b for a, b in zip(self.coeffs[: order + 1], other.coeffs[: order + 1]))
        )

    def __mul__(self, other: "SeriesZ") -> "SeriesZ":
        order = min(self.order, other.order)
        row = [0] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: order + 1 - i]):
                if b:
                    row[i + j] += a * b
        return SeriesZ(tuple(row))

    def times_one_plus_power(self, e: int) -> "SeriesZ":
        """Multiply by (1 + q^e), truncated at the current order."""
        if e <= 0:
            raise ValueError(f"exponent must be positive, got {e}")
        row = list(self.coeffs)
        for m in range(self.order, e - 1, -1):
            row[m] += row[m - e]
        return SeriesZ(tuple(row))


def enum_z_asymmetric(z: int, order: int) -> SeriesZ:
    """Count z-asymmetric partitions of each size by direct enumeration."""
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    row = [0] * (order + 1)
    for m in range(order + 1):
        for la in partitions_of(m):
            if is_z_asymmetric(la, z):
                row[m] += 1
    return SeriesZ(tuple(row))


def gf_z_asymmetric(z: int, order: int) -> SeriesZ:
    """Product form: distinct parts congruent to z+1 mod 2, parts >= 1.

    The formal product starts at part z+1; nonpositive leading parts are
    dropped, which for z = -1 removes a spurious (1 + q^0) factor.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    out = SeriesZ.one(order)
    e = z + 1
    if e < 1:
        e += 2 * ((1 - e + 1) // 2)
    while e <= order:
        out = out.times_one_plus_power(e)
        e += 2
    return out


def theta_f(a_exp: int, b_exp: int, order: int) -> SeriesZ:
    """Two-variable theta sum with a = q^a_exp, b = q^b_exp.

    Terms are q^(a_exp*n(n+1)/2 + b_exp*n(n-1)/2) over all integers n;
    a_exp + b_exp > 0 makes only finitely many land under the truncation.
    """
    if a_exp + b_exp <= 0:
        raise ValueError(f"need a_exp + b_exp > 0, got {a_exp} + {b_exp}")
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    row = [0] * (order + 1)
    reach = 2 * (isqrt(2 * order // max(1, a_exp + b_exp)) + 2)
    for n in range(-reach, reach + 1):
        m = a_exp * (n * (n + 1) // 2) + b_exp * (n * (n - 1) // 2)
        if 0 <= m <= order:
            row[m] += 1
    return SeriesZ(tuple(row))


def gf_z_cores(z: int, t: int, order: int) -> SeriesZ:
    """Theta-product generating function for z-asymmetric t-cores."""
    if not 0 <= z <= t - 2:
        raise ValueError(f"need 0 <= z <= t-2, got z={z}, t={t}")
    out = SeriesZ.one(order)
    for i in range((t - z - 2) // 2 + 1):
        out = out * theta_f(2 * i + z + 1, 2 * t - 2 * i - z - 1, order)
    return out


def _lattice_dim(z: int, t: int) -> int:
    return (t - z) // 2


def phi(la: Partition, z: int, t: int) -> LatticeVec:
    """Residue-count coordinates of a z-asymmetric t-core.

    The i-th coordinate is n_i - n where n_i counts beta elements in class
    i mod t at padding tn; the value does not depend on the choice of n.
    """
    if not 0 <= z <= t - 2:
        raise ValueError(f"need 0 <= z <= t-2, got z={z}, t={t}")
    la = as_partition(la)
    if not is_z_asymmetric(la, z) or t_core(la, t) != la:
        raise ValueError(f"{la} is not a {z}-asymmetric {t}-core")
    n = max(1, -(-len(la) // t))
    counts = residue_counts(la, t, t * n).counts
    return tuple(counts[i] - n for i in range(_lattice_dim(z, t)))


def phi_inverse(v: LatticeVec, z: int, t: int) -> Partition:
    """Rebuild the unique z-asymmetric t-core with the given coordinates."""
    if not 0 <= z <= t - 2:
        raise ValueError(f"need 0 <= z <= t-2, got z={z}, t={t}")
    d = _lattice_dim(z, t)
    if len(v) != d:
        raise ValueError(f"expected a vector of length {d}, got {len(v)}")
    n = max((abs(x) for x in v), default=0)
    counts = [n] * t
    for i in range(d):
        counts[i] = n + v[i]
    for i in range((t - z + 1) // 2, t - z):
        counts[i] = n - v[t - z - 1 - i]
    b = sorted((t * j + i for i in range(t) for j in range(counts[i])), reverse=True)
    return from_beta_set(tuple(b))


def _coordinate_budget(z: int, t: int, i: int, bound: int) -> list[tuple[int, int]]:
    # Cost of setting coordinate i to v is t*v^2 - b_i*v, which is 0 only
    # at v = 0 and at least |v| otherwise, so the scan below terminates.
    b_i = t - z - 1 - 2 * i
    out = []
    for direction in (1, -1):
        v = 0 if direction == 1 else -1
        while True:
            cost = t * v * v - b_i * v
            if cost > bound:
                break
            out.append((v, cost))
            v += direction
    return sorted(out)


def enum_z_cores(z: int, t: int, bound: int) -> list[Partition]:
    """All z-asymmetric t-cores of size at most `bound`, sorted by size.

    For 0 <= z <= t-2 this walks the lattice ball of the coordinate map;
    z = -1 is handled by conjugating the z = 1 family, and t = 2 (where
    only staircases are 2-cores) by scanning staircases directly.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    if t == 2 and z in (1, -1):
        out = []
        k = 0
        while k * (k + 1) // 2 <= bound:
            stair = tuple(range(k, 0, -1))
            if is_z_asymmetric(stair, z):
                out.append(stair)
            k += 1
        return sorted(out, key=lambda la: (size(la), la))
    if z == -1:
        return sorted(
            (conjugate(la) for la in enum_z_cores(1, t, bound)),
            key=lambda la: (size(la), la),
        )
    if not 0 <= z <= t - 2:
        raise ValueError(f"no enumeration route for z={z}, t={t}")

    d = _lattice_dim(z, t)
    budgets = [_coordinate_budget(z, t, i, bound) for i in range(d)]
    out = []
    stack = [((), 0)]
    while stack:
        prefix, cost = stack.pop()
        i = len(prefix)
        if i == d:
            out.append(phi_inverse(prefix, z, t))
            continue
        for v, c in budgets[i]:
            if cost + c <= bound:
                stack.append((prefix + (v,), cost + c))
    return sorted(out, key=lambda la: (size(la), la))
