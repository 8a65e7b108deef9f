"""Number rings presented as structure-constant algebras.

Three families:

* cyclotomic ring of an odd prime p, power basis {1, z, ..., z^(p-2)} where
  z is a primitive p-th root of unity and z^(p-1) = -(1 + z + ... + z^(p-2));
* quadratic ring of a square-free d: Z[sqrt(d)] when d != 1 (mod 4), and
  Z[theta] with theta = (1 + sqrt(d))/2, theta^2 = (d-1)/4 + theta, when
  d == 1 (mod 4); the conjugation sends theta to 1 - theta;
* biquadratic ring Z[sqrt(m), sqrt(n)], basis {1, sqrt(m), sqrt(n), sqrt(mn)}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import AlgebraSpec, Coords, Endomorphism
from .intlinalg import is_prime


def _is_square_free(d: int) -> bool:
    d = abs(d)
    if d == 0:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True, slots=True)
class CyclotomicRing:
    p: int
    spec: AlgebraSpec


@dataclass(frozen=True, slots=True)
class QuadraticRing:
    d: int
    one_mod4: bool
    spec: AlgebraSpec


@dataclass(frozen=True, slots=True)
class BiquadraticRing:
    m: int
    n: int
    spec: AlgebraSpec

    @property
    def gcd_split(self) -> tuple[int, int, int]:
        """(k, r, s) with k = gcd(m, n), m = k r, n = k s."""
        k = math.gcd(self.m, self.n)
        return k, self.m // k, self.n // k


def make_cyclotomic(p: int) -> CyclotomicRing:
    """Ring of integers Z[z] of the p-th cyclotomic field, p an odd prime."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    n = p - 1
    dense = tuple([-1] * n)

    def power(e: int) -> Coords:
        e %= p
        if e < n:
            return tuple(1 if t == e else 0 for t in range(n))
        return dense

    table = [[power(i + j) for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"z^{i}" if i > 1 else "z" for i in range(1, n)]
    spec = AlgebraSpec(table, power(0), labels)
    return CyclotomicRing(p, spec)


def zeta_power(ring: CyclotomicRing, e: int) -> Coords:
    """Coordinates of z^e, for any integer exponent e."""
    n = ring.p - 1
    e %= ring.p
    if e < n:
        return ring.spec.basis(e)
    return tuple([-1] * n)


def make_quadratic(d: int) -> QuadraticRing:
    """Quadratic ring of integers for a square-free d not in {0, 1}."""
    if d in (0, 1):
        raise ValueError("d must differ from 0 and 1")
    if not _is_square_free(d):
        raise ValueError(f"d must be square-free, got {d}")
    if d % 4 == 1:
        table = [
            [(1, 0), (0, 1)],
            [(0, 1), ((d - 1) // 4, 1)],
        ]
        spec = AlgebraSpec(table, (1, 0), ["1", "theta"])
        return QuadraticRing(d, True, spec)
    table = [
        [(1, 0), (0, 1)],
        [(0, 1), (d, 0)],
    ]
    spec = AlgebraSpec(table, (1, 0), ["1", f"sqrt({d})"])
    return QuadraticRing(d, False, spec)


def make_biquadratic(m: int, n: int) -> BiquadraticRing:
    """Z[sqrt(m), sqrt(n)] for distinct square-free m, n outside {0, 1}."""
    if m in (0, 1) or n in (0, 1):
        raise ValueError("m and n must differ from 0 and 1")
    if m == n:
        raise ValueError("m and n must be distinct")
    if not _is_square_free(m) or not _is_square_free(n):
        raise ValueError("m and n must be square-free")
    # basis 1, sqrt(m), sqrt(n), sqrt(mn)
    table = [
        [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
        [(0, 1, 0, 0), (m, 0, 0, 0), (0, 0, 0, 1), (0, 0, m, 0)],
        [(0, 0, 1, 0), (0, 0, 0, 1), (n, 0, 0, 0), (0, n, 0, 0)],
        [(0, 0, 0, 1), (0, 0, m, 0), (0, n, 0, 0), (m * n, 0, 0, 0)],
    ]
    labels = ["1", f"sqrt({m})", f"sqrt({n})", f"sqrt({m * n})"]
    spec = AlgebraSpec(table, (1, 0, 0, 0), labels)
    return BiquadraticRing(m, n, spec)


def endomorphisms(ring) -> list[Endomorphism]:
    """All unital ring endomorphisms fixing the base ring, in canonical order.

    Cyclotomic: p-1 maps z -> z^u, u = 1..p-1, named by the exponent.
    Quadratic: identity and conjugation, named "id" and "conj".
    Biquadratic: the four sign patterns phi1..phi4 on (sqrt(m), sqrt(n)),
    with sqrt(mn) sent to the product of the two signs times sqrt(mn).
    """
    spec = ring.spec
    if isinstance(ring, CyclotomicRing):
        out = []
        for u in range(1, ring.p):
            images = [zeta_power(ring, u * i) for i in range(ring.p - 1)]
            out.append(Endomorphism(spec, images, name=str(u)))
        return out
    if isinstance(ring, QuadraticRing):
        ident = Endomorphism(spec, [spec.basis(0), spec.basis(1)], name="id")
        if ring.one_mod4:
            conj = Endomorphism(spec, [(1, 0), (1, -1)], name="conj")
        else:
            conj = Endomorphism(spec, [(1, 0), (0, -1)], name="conj")
        return [ident, conj]
    if isinstance(ring, BiquadraticRing):
        out = []
        for idx, (sm, sn) in enumerate([(1, 1), (1, -1), (-1, 1), (-1, -1)], start=1):
            images = [
                (1, 0, 0, 0),
                (0, sm, 0, 0),
                (0, 0, sn, 0),
                (0, 0, 0, sm * sn),
            ]
            out.append(Endomorphism(spec, images, name=f"phi{idx}"))
        return out
    raise TypeError(f"unsupported ring {ring!r}")


def endomorphism_by_name(ring, key) -> Endomorphism:
    """Look up an endomorphism by its canonical name (or exponent)."""
    maps = endomorphisms(ring)
    key = str(key)
    for e in maps:
        if e.name == key:
            return e
    names = ", ".join(e.name or "?" for e in maps)
    raise ValueError(f"no endomorphism named {key!r}; choose from: {names}")


def ring_to_json(ring) -> dict:
    if isinstance(ring, CyclotomicRing):
        return {"family": "cyclotomic", "p": ring.p}
    if isinstance(ring, QuadraticRing):
        return {"family": "quadratic", "d": ring.d}
    if isinstance(ring, BiquadraticRing):
        return {"family": "biquadratic", "m": ring.m, "n": ring.n}
    raise TypeError(f"unsupported ring {ring!r}")


def ring_from_json(data: dict):
    family = data.get("family")
    if family == "cyclotomic":
        return make_cyclotomic(data["p"])
    if family == "quadratic":
        return make_quadratic(data["d"])
    if family == "biquadratic":
        return make_biquadratic(data["m"], data["n"])
    raise ValueError(f"unknown ring family {family!r}")
