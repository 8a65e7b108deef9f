"""Builders and innerness deciders for twisted derivations of number rings.

A (sigma, tau)-derivation satisfies D(xy) = D(x)tau(y) + sigma(x)D(y); it is
inner when some ring element beta gives D(x) = beta (tau(x) - sigma(x)) for
every x. Builders produce derivations from their free generator images; the
deciders compute beta exactly or name the divisibility that fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _backend, intlinalg
from .algebra import (
    AlgebraSpec,
    Coords,
    Endomorphism,
    LinearMap,
    _images_of,
    _power_sum_chain,
    _twist_pair,
    add,
    mul,
    mult_matrix,
    smul,
    sub,
)
from .conjecture import ConjectureViolationError, build_A
from .rings import (
    BiquadraticRing,
    CyclotomicRing,
    QuadraticRing,
    endomorphism_by_name,
    endomorphisms,
    ring_from_json,
    ring_to_json,
)


@dataclass(frozen=True, slots=True)
class InnernessVerdict:
    inner: bool
    witness: Coords | None = None
    obstruction: str | None = None


@dataclass(frozen=True, slots=True)
class DerivationSpace:
    """A module of derivations spanned by basis_maps, for one (sigma, tau)."""

    ring: object
    sigma: Endomorphism
    tau: Endomorphism
    basis_maps: tuple[LinearMap, ...]
    rank: int


def _as_endo(spec: AlgebraSpec, m) -> Endomorphism:
    if isinstance(m, Endomorphism):
        if m.spec != spec:
            raise ValueError("endomorphism belongs to a different algebra")
        return m
    images = m.images if isinstance(m, LinearMap) else m
    return Endomorphism(spec, images)


def _require_derivation(spec: AlgebraSpec, d_imgs, s_imgs, t_imgs) -> None:
    bad = _backend.derivation_failure(spec.table, d_imgs, s_imgs, t_imgs)
    if bad is not None:
        raise ValueError(f"D is not a derivation for this pair (law fails at basis pair {bad})")


def inner_derivation(spec: AlgebraSpec, sigma, tau, beta) -> LinearMap:
    """The derivation x -> beta (tau(x) - sigma(x))."""
    s_imgs, t_imgs = _twist_pair(spec, sigma, tau)
    beta = spec.element(beta)
    images = [mul(spec, beta, sub(t, s)) for s, t in zip(s_imgs, t_imgs)]
    return LinearMap(spec, images)


def _assert_witness(spec: AlgebraSpec, s_imgs, t_imgs, d_imgs, beta) -> None:
    induced = tuple(mul(spec, beta, sub(t, s)) for s, t in zip(s_imgs, t_imgs))
    if induced != tuple(d_imgs):
        raise AssertionError("inner witness does not reproduce D")


def _make_space(ring, sigma, tau, maps, generators) -> DerivationSpace:
    spec = ring.spec
    sigma = _as_endo(spec, sigma)
    tau = _as_endo(spec, tau)
    for mp in maps:
        _require_derivation(spec, mp.images, sigma.images, tau.images)
    rows = [[v for g in generators for v in mp.images[g]] for mp in maps]
    rank = intlinalg.rank_int(rows)
    return DerivationSpace(ring, sigma, tau, tuple(maps), rank)


# ---------------------------------------------------------------- cyclotomic

def build_cyclotomic_derivation(ring: CyclotomicRing, sigma, tau, d_zeta) -> LinearMap:
    """Derivation with D(1) = 0, D(z) = d_zeta, and every D(z^k) forced.

    The twisted Leibniz law determines D(z^k) as the sum over i + j = k - 1
    of sigma(z^i) tau(z^j), times D(z); any d_zeta works.
    """
    spec = ring.spec
    s_imgs, t_imgs = _twist_pair(spec, sigma, tau)
    d_zeta = spec.element(d_zeta)
    chain = _power_sum_chain(spec, s_imgs, t_imgs, spec.basis(1), ring.p - 2)
    images = [spec.zero(), d_zeta]
    for k in range(2, ring.p - 1):
        images.append(mul(spec, chain[k - 1], d_zeta))
    return LinearMap(spec, images)


def cyclotomic_basis(ring: CyclotomicRing, sigma, tau) -> DerivationSpace:
    """Module basis D_0..D_{p-2} with D_i(z) = z^i; rank p - 1."""
    spec = ring.spec
    s_imgs, t_imgs = _twist_pair(spec, sigma, tau)
    chain = _power_sum_chain(spec, s_imgs, t_imgs, spec.basis(1), ring.p - 2)
    maps = []
    for i in range(ring.p - 1):
        seed = spec.basis(i)
        images = [spec.zero(), seed]
        for k in range(2, ring.p - 1):
            images.append(mul(spec, chain[k - 1], seed))
        maps.append(LinearMap(spec, images))
    return _make_space(ring, sigma, tau, maps, generators=[1])


def _exponent_of(ring: CyclotomicRing, imgs) -> int:
    img = imgs[1]
    if all(v == -1 for v in img):
        return ring.p - 1
    nz = [t for t, v in enumerate(img) if v]
    if len(nz) == 1 and nz[0] >= 1 and img[nz[0]] == 1:
        return nz[0]
    raise ValueError("sigma and tau must send z to a power of z")


@lru_cache(maxsize=1024)
def _adjugate_det_A(p: int, u: int, w: int):
    a = build_A(p, u, w)
    adj = tuple(tuple(r) for r in intlinalg.adjugate(a))
    return adj, intlinalg.det_bareiss(a)


def cyclotomic_inner_conjectural(ring: CyclotomicRing, sigma, tau, D) -> InnernessVerdict:
    """Innerness through the adjugate of the multiplication-by-(tau-sigma)(z)
    matrix: inner iff det(A) divides every entry of adj(A) D(z).

    Rests on the determinant conjecture; det(A) outside {p, -p} raises
    ConjectureViolationError instead of answering.
    """
    spec = ring.spec
    s_imgs, t_imgs = _twist_pair(spec, sigma, tau)
    d_imgs = _images_of(D, spec)
    _require_derivation(spec, d_imgs, s_imgs, t_imgs)
    u = _exponent_of(ring, s_imgs)
    w = _exponent_of(ring, t_imgs)
    adj, det = _adjugate_det_A(ring.p, w, u)
    if abs(det) != ring.p:
        raise ConjectureViolationError(
            f"det of the innerness matrix for p={ring.p}, sigma exponent {u}, "
            f"tau exponent {w} is {det}, expected +-{ring.p}"
        )
    c = d_imgs[1]
    y = [sum(r * v for r, v in zip(row, c)) for row in adj]
    for idx, v in enumerate(y):
        if v % det:
            return InnernessVerdict(
                False, None,
                f"{ring.p} does not divide entry {idx} of adj(A) D(z) = {v}",
            )
    witness = tuple(v // det for v in y)
    return InnernessVerdict(True, witness, None)


# ----------------------------------------------------------------- quadratic

def build_quadratic_derivation(ring: QuadraticRing, images) -> LinearMap:
    """Derivation from images (D(1), D(g)) with g the non-unit basis element.

    Every choice with D(1) = 0 satisfies the law for both orderings of the
    identity and the conjugation.
    """
    spec = ring.spec
    if len(images) != 2:
        raise ValueError("two basis images required")
    if any(spec.element(images[0])):
        raise ValueError("D(1) must be zero")
    return LinearMap(spec, [spec.zero(), spec.element(images[1])])


def quadratic_inner(ring: QuadraticRing, sigma, tau, D) -> InnernessVerdict:
    """Divisibility test for innerness over the quadratic ring.

    With (c0, c1) the coordinates of the image of the generator: for
    d != 1 (mod 4), inner iff 2d | c0 and 2 | c1; for d == 1 (mod 4), inner
    iff d divides both -c0 + c1(d-1)/2 and 2c0 + c1. The witness is negated
    when (sigma, tau) = (id, conj) rather than (conj, id).
    """
    spec = ring.spec
    sigma = _as_endo(spec, sigma)
    tau = _as_endo(spec, tau)
    ident, conj = endomorphisms(ring)
    if {sigma.images, tau.images} != {ident.images, conj.images}:
        raise ValueError("sigma and tau must be the identity and the conjugation")
    d_imgs = _images_of(D, spec)
    _require_derivation(spec, d_imgs, sigma.images, tau.images)
    c0, c1 = d_imgs[1]
    eps = 1 if tau.images == ident.images else -1
    d = ring.d
    if ring.one_mod4:
        t1 = -c0 + c1 * ((d - 1) // 2)
        t2 = 2 * c0 + c1
        if t1 % d:
            return InnernessVerdict(False, None, f"{d} does not divide -c0 + c1*(d-1)/2 = {t1}")
        if t2 % d:
            return InnernessVerdict(False, None, f"{d} does not divide 2*c0 + c1 = {t2}")
        beta = (eps * (t1 // d), eps * (t2 // d))
    else:
        if c0 % (2 * d):
            return InnernessVerdict(False, None, f"2d = {2 * d} does not divide c0 = {c0}")
        if c1 % 2:
            return InnernessVerdict(False, None, f"2 does not divide c1 = {c1}")
        beta = (eps * (c1 // 2), eps * (c0 // (2 * d)))
    _assert_witness(spec, sigma.images, tau.images, d_imgs, beta)
    return InnernessVerdict(True, beta, None)


# --------------------------------------------------------------- biquadratic

_CASE_TABLE = {
    (1, 2): ("I", 1), (2, 1): ("I", 1), (3, 4): ("I", -1), (4, 3): ("I", -1),
    (1, 3): ("II", 1), (3, 1): ("II", 1), (2, 4): ("II", -1), (4, 2): ("II", -1),
    (1, 4): ("III", 1), (4, 1): ("III", 1), (2, 3): ("III", -1), (3, 2): ("III", -1),
}


def _phi_index(ring: BiquadraticRing, endo) -> int:
    endo = _as_endo(ring.spec, endo)
    for t, e in enumerate(endomorphisms(ring), start=1):
        if e.images == endo.images:
            return t
    raise ValueError("not one of the four biquadratic endomorphisms")


def classify_biquadratic(ring: BiquadraticRing, sigma, tau) -> tuple[str, int]:
    """Case tag and sign for the pair: I couples D(sqrt(mn)) to +-sqrt(m)D(sqrt(n)),
    II to +-sqrt(n)D(sqrt(m)), III forces D(sqrt(mn)) = 0 with
    sqrt(m)D(sqrt(n)) = +-sqrt(n)D(sqrt(m))."""
    i = _phi_index(ring, sigma)
    j = _phi_index(ring, tau)
    if i == j:
        raise ValueError("sigma and tau must differ")
    return _CASE_TABLE[(i, j)]


def _case3_maps(ring: BiquadraticRing, sgn: int) -> list[LinearMap]:
    spec = ring.spec
    _, r, s = ring.gcd_split
    m, n = ring.m, ring.n
    dm = [(m, 0, 0, 0), (0, 1, 0, 0), (0, 0, r, 0), (0, 0, 0, 1)]
    dn = [(0, 0, 0, 1), (0, 0, 1, 0), (0, s, 0, 0), (n, 0, 0, 0)]
    return [
        LinearMap(spec, [spec.zero(), spec.element(a), smul(sgn, b), spec.zero()])
        for a, b in zip(dm, dn)
    ]


def _case3_coefficients(ring: BiquadraticRing, dm: Coords):
    # invert D(sqrt(m)) = t1*m + t2*sqrt(m) + t3*r*sqrt(n) + t4*sqrt(mn)
    _, r, _ = ring.gcd_split
    c0, c1, c2, c3 = dm
    if c0 % ring.m or c2 % r:
        return None
    return (c0 // ring.m, c1, c2 // r, c3)


def build_biquadratic_derivation(ring: BiquadraticRing, sigma, tau, free_images) -> LinearMap:
    """Derivation from the free data of the pair's case.

    Case I takes D(sqrt(n)) (one coordinate vector), case II takes
    D(sqrt(m)); the constrained image of sqrt(mn) is completed with the
    case's sign. Case III couples D(sqrt(m)) and D(sqrt(n)): pass either
    four integer coefficients against the case-III basis maps, or a pair
    (D(sqrt(m)), D(sqrt(n))), which is rejected unless it satisfies
    sqrt(m) D(sqrt(n)) = +-sqrt(n) D(sqrt(m)) over this ring.
    """
    spec = ring.spec
    case, sgn = classify_biquadratic(ring, sigma, tau)
    if case == "I":
        c = spec.element(free_images)
        return LinearMap(spec, [spec.zero(), spec.zero(), c, smul(sgn, mul(spec, spec.basis(1), c))])
    if case == "II":
        c = spec.element(free_images)
        return LinearMap(spec, [spec.zero(), c, spec.zero(), smul(sgn, mul(spec, spec.basis(2), c))])
    maps = _case3_maps(ring, sgn)
    fi = list(free_images)
    if len(fi) == 2 and all(isinstance(v, (list, tuple)) for v in fi):
        dm = spec.element(fi[0])
        dn = spec.element(fi[1])
        coeffs = _case3_coefficients(ring, dm)
        if coeffs is not None:
            built = _combine(spec, maps, coeffs)
            if built.images[1] == dm and built.images[2] == dn:
                return built
        raise ValueError(
            "case III images must satisfy sqrt(m) D(sqrt(n)) = +-sqrt(n) D(sqrt(m))"
        )
    if len(fi) == 4:
        return _combine(spec, maps, [int(v) for v in fi])
    raise ValueError("case III expects four coefficients or a (D(sqrt(m)), D(sqrt(n))) pair")


def _combine(spec: AlgebraSpec, maps, coeffs) -> LinearMap:
    images = []
    for r in range(spec.rank):
        acc = spec.zero()
        for t, mp in zip(coeffs, maps):
            if t:
                acc = add(acc, smul(t, mp.images[r]))
        images.append(acc)
    return LinearMap(spec, images)


def biquadratic_basis(ring: BiquadraticRing, sigma, tau) -> DerivationSpace:
    """Module basis of four maps per the pair's case; rank 4."""
    spec = ring.spec
    case, sgn = classify_biquadratic(ring, sigma, tau)
    if case == "I":
        maps = [
            LinearMap(spec, [spec.zero(), spec.zero(), e, smul(sgn, mul(spec, spec.basis(1), e))])
            for e in (spec.basis(i) for i in range(4))
        ]
    elif case == "II":
        maps = [
            LinearMap(spec, [spec.zero(), e, spec.zero(), smul(sgn, mul(spec, spec.basis(2), e))])
            for e in (spec.basis(i) for i in range(4))
        ]
    else:
        maps = _case3_maps(ring, sgn)
    return _make_space(ring, sigma, tau, maps, generators=[1, 2])


def biquadratic_inner(ring: BiquadraticRing, sigma, tau, D) -> InnernessVerdict:
    """Membership test for beta = D(g)/((tau - sigma)(g)), g per the case.

    Case I divides D(sqrt(n)) by 2 sqrt(n): with image (c0, c1, c2, c3) this
    needs 2n | c0, 2n | c1, 2 | c2, 2 | c3. Cases II and III divide
    D(sqrt(m)) by 2 sqrt(m): 2m | c0, 2 | c1, 2m | c2, 2 | c3. The sign
    follows tau's sign on the dividing generator.
    """
    spec = ring.spec
    sigma = _as_endo(spec, sigma)
    tau = _as_endo(spec, tau)
    case, _sgn = classify_biquadratic(ring, sigma, tau)
    d_imgs = _images_of(D, spec)
    _require_derivation(spec, d_imgs, sigma.images, tau.images)
    ti = _phi_index(ring, tau)
    m, n = ring.m, ring.n
    if case == "I":
        c0, c1, c2, c3 = d_imgs[2]
        checks = ((2 * n, c0, "c0"), (2 * n, c1, "c1"), (2, c2, "c2"), (2, c3, "c3"))
        eps = 1 if ti in (1, 3) else -1
    else:
        c0, c1, c2, c3 = d_imgs[1]
        checks = ((2 * m, c0, "c0"), (2, c1, "c1"), (2 * m, c2, "c2"), (2, c3, "c3"))
        eps = 1 if ti in (1, 2) else -1
    for q, v, name in checks:
        if v % q:
            return InnernessVerdict(False, None, f"{q} does not divide {name} = {v}")
    if case == "I":
        base = (c2 // 2, c3 // 2, c0 // (2 * n), c1 // (2 * n))
    else:
        base = (c1 // 2, c0 // (2 * m), c3 // 2, c2 // (2 * m))
    beta = smul(eps, base)
    _assert_witness(spec, sigma.images, tau.images, d_imgs, beta)
    return InnernessVerdict(True, beta, None)


# -------------------------------------------------------------- generic path

@lru_cache(maxsize=512)
def _generic_hnf(spec: AlgebraSpec, s_imgs, t_imgs):
    stack = []
    for i in range(spec.rank):
        g = sub(t_imgs[i], s_imgs[i])
        stack.extend(mult_matrix(spec, g))
    h, u = intlinalg.hermite_normal_form(intlinalg.transpose(stack))
    return tuple(tuple(r) for r in stack), h, u


def is_inner_generic(ring, sigma, tau, D) -> InnernessVerdict:
    """Exact innerness for any ring here: solve the stacked integer system
    coords(beta (tau - sigma)(e_i)) == coords(D(e_i)) over all basis elements."""
    spec = ring.spec
    s_imgs, t_imgs = _twist_pair(spec, sigma, tau)
    d_imgs = _images_of(D, spec)
    _require_derivation(spec, d_imgs, s_imgs, t_imgs)
    stack, h, u = _generic_hnf(spec, s_imgs, t_imgs)
    rhs = [v for img in d_imgs for v in img]
    x = intlinalg._solve_with_hnf(stack, h, u, rhs)
    if x is None:
        return InnernessVerdict(
            False, None,
            "no integer beta solves D(e_i) = beta (tau - sigma)(e_i) over the basis",
        )
    return InnernessVerdict(True, tuple(x), None)


# ------------------------------------------------------------- serialization

def _endo_name(ring, endo) -> str:
    endo = _as_endo(ring.spec, endo)
    if endo.name:
        return endo.name
    for e in endomorphisms(ring):
        if e.images == endo.images:
            return e.name or ""
    raise ValueError("endomorphism is not in the ring's enumeration")


def derivation_to_json(ring, sigma, tau, D) -> dict:
    return {
        "ring": ring_to_json(ring),
        "sigma": _endo_name(ring, sigma),
        "tau": _endo_name(ring, tau),
        "images": [list(img) for img in _images_of(D, ring.spec)],
    }


def derivation_from_json(data: dict):
    """Inverse of derivation_to_json: (ring, sigma, tau, LinearMap)."""
    ring = ring_from_json(data["ring"])
    sigma = endomorphism_by_name(ring, data["sigma"])
    tau = endomorphism_by_name(ring, data["tau"])
    d = LinearMap(ring.spec, [tuple(img) for img in data["images"]])
    return ring, sigma, tau, d
