"""Characters of D_2l, the McKay quiver of V = rho_1 + tau_1, and its double cut.

Characters take values in Z[z] with ``z = exp(i pi / l)``; they are handled
exactly as integer polynomials reduced modulo the ``2l``-th cyclotomic
polynomial, so all inner products are exact integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

import flint

from .rootsystem import QuiverD

__all__ = [
    "DihedralIrrep",
    "McKayArrow",
    "McKayQuiver",
    "Reduction",
    "CutError",
    "irreps",
    "conjugacy_classes",
    "character",
    "inner_product",
    "tensor_with_V",
    "mckay_quiver",
    "mckay_quiver_from_order",
    "extract_reduction",
]

BLUE = "blue"
BLACK = "black"


class CutError(RuntimeError):
    """The cut structure of the McKay quiver failed its self-check."""


@dataclass(frozen=True, order=True)
class DihedralIrrep:
    kind: str  # "rho" or "tau"
    k: int

    @property
    def dim(self) -> int:
        return 1 if self.kind == "rho" else 2

    @property
    def label(self) -> str:
        return f"{self.kind}{self.k}"

    def __str__(self) -> str:
        return self.label


def Rho(k: int) -> DihedralIrrep:
    return DihedralIrrep("rho", k)


def Tau(k: int) -> DihedralIrrep:
    return DihedralIrrep("tau", k)


def irreps(ell: int) -> list[DihedralIrrep]:
    _check_ell(ell)
    return [Rho(0), Rho(1)] + [Tau(k) for k in range(1, ell)] + [Rho(2), Rho(3)]


def _check_ell(ell: int) -> None:
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"need l >= 1, got {ell!r}")


class _Cyclo:
    """Arithmetic in Z[z] / Phi_{2l}(z)."""

    def __init__(self, ell: int):
        self.ell = ell
        self.order = 2 * ell
        self.phi = flint.fmpz_poly.cyclotomic(self.order)

    def power(self, k: int) -> flint.fmpz_poly:
        k %= self.order
        return flint.fmpz_poly([0] * k + [1]) % self.phi

    def const(self, c: int) -> flint.fmpz_poly:
        return flint.fmpz_poly([c])

    def reduce(self, a) -> flint.fmpz_poly:
        return a % self.phi

    def conj(self, a) -> flint.fmpz_poly:
        out = flint.fmpz_poly([])
        for k, c in enumerate(a.coeffs()):
            if c:
                out += c * self.power(-k)
        return self.reduce(out)


def conjugacy_classes(ell: int) -> list[tuple[str, int, int]]:
    """``(kind, j, size)``: rotations ``d^j`` and reflections ``s d^j``."""
    _check_ell(ell)
    classes = [("rot", 0, 1), ("rot", ell, 1)]
    classes += [("rot", j, 2) for j in range(1, ell)]
    classes += [("ref", 0, ell), ("ref", 1, ell)]
    return classes


_RHO_SIGNS = {0: (1, 1), 1: (1, -1), 2: (-1, 1), 3: (-1, -1)}


def character(irrep: DihedralIrrep, ell: int, ring: _Cyclo | None = None) -> list:
    """Character values on :func:`conjugacy_classes`, as elements of Z[z]."""
    ring = ring or _Cyclo(ell)
    values = []
    for kind, j, _ in conjugacy_classes(ell):
        if irrep.kind == "rho":
            a, b = _RHO_SIGNS[irrep.k]
            v = a ** j * (b if kind == "ref" else 1)
            values.append(ring.const(v))
        elif kind == "rot":
            values.append(ring.reduce(ring.power(irrep.k * j) + ring.power(-irrep.k * j)))
        else:
            values.append(ring.const(0))
    return values


def inner_product(chi, psi, ell: int, ring: _Cyclo | None = None) -> int:
    ring = ring or _Cyclo(ell)
    total = flint.fmpz_poly([])
    for (_, _, size), a, b in zip(conjugacy_classes(ell), chi, psi):
        total += size * a * ring.conj(b)
    total = ring.reduce(total)
    if total.degree() > 0:
        raise ArithmeticError("character inner product is not rational")
    value = int(total[0]) if total.degree() == 0 else 0
    if value % (4 * ell):
        raise ArithmeticError("character inner product is not an integer")
    return value // (4 * ell)


def _decompose(values, ell: int, ring: _Cyclo) -> Counter:
    out: Counter = Counter()
    for L in irreps(ell):
        m = inner_product(values, character(L, ell, ring), ell, ring)
        if m:
            out[L] = m
    return out


def _times(a, b, ring: _Cyclo):
    return [ring.reduce(x * y) for x, y in zip(a, b)]


def _v_parts(ell: int, ring: _Cyclo):
    blue = character(Rho(1), ell, ring)
    black = [ring.reduce(ring.power(j) + ring.power(-j)) if kind == "rot" else ring.const(0)
             for kind, j, _ in conjugacy_classes(ell)]
    return blue, black


def tensor_with_V(irrep: DihedralIrrep, ell: int, *, part: str | None = None) -> Counter:
    """Decompose ``irrep (x) V`` (or only its ``blue``/``black`` summand)."""
    if irrep not in irreps(ell):
        raise ValueError(f"{irrep} is not an irreducible of D_2l with l = {ell}")
    ring = _Cyclo(ell)
    blue, black = _v_parts(ell, ring)
    if part == BLUE:
        v = blue
    elif part == BLACK:
        v = black
    else:
        v = [ring.reduce(a + b) for a, b in zip(blue, black)]
    return _decompose(_times(character(irrep, ell, ring), v, ring), ell, ring)


@dataclass(frozen=True)
class McKayArrow:
    source: DihedralIrrep
    target: DihedralIrrep
    color: str
    multiplicity: int


@dataclass(frozen=True)
class McKayQuiver:
    ell: int
    vertices: tuple[DihedralIrrep, ...]
    arrows: tuple[McKayArrow, ...]

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "vertices": [{"label": v.label, "dim": v.dim} for v in self.vertices],
            "arrows": [{"source": a.source.label, "target": a.target.label,
                        "color": a.color, "multiplicity": a.multiplicity}
                       for a in self.arrows],
        }


def mckay_quiver(ell: int) -> McKayQuiver:
    """McKay quiver of ``D_2l`` for ``V = rho_1 + tau_1`` with colored arrows.

    The number of arrows ``i -> j`` of each color is
    ``dim Hom(L_i, L_j (x) V_color)``.
    """
    _check_ell(ell)
    vertices = tuple(irreps(ell))
    arrows = []
    for color in (BLUE, BLACK):
        for src in vertices:
            dec = tensor_with_V(src, ell, part=color)
            for tgt in vertices:
                if dec[tgt]:
                    arrows.append(McKayArrow(src, tgt, color, dec[tgt]))
    return McKayQuiver(ell, vertices, tuple(arrows))


def mckay_quiver_from_order(n: int) -> McKayQuiver:
    """McKay quiver for the dihedral group with rotation subgroup of order ``n``."""
    if n % 2:
        raise ValueError(
            f"odd dihedral group (rotation order {n}): the blue cut leaves a squared "
            "loop at the last vertex, so no second cut exists and the double "
            "dimensional reduction does not apply")
    return mckay_quiver(n // 2)


@dataclass(frozen=True)
class Reduction:
    quiver: QuiverD
    vertex_map: dict
    sigma: tuple[int, ...]
    cut_I: tuple[tuple[int, int], ...]
    cut_I_prime: tuple[tuple[int, int], ...]
    triangles: int


def vertex_index(v: DihedralIrrep, ell: int) -> int:
    r = ell + 2
    if v.kind == "tau":
        return v.k + 1
    return {0: 0, 1: 1, 2: r - 1, 3: r}[v.k]


def extract_reduction(M: McKayQuiver) -> Reduction:
    """Remove both cuts from the McKay quiver and read off ``(Q'', Sigma)``.

    ``I`` is the set of black arrows pointing right-to-left (towards lower
    index), ``I'`` the set of blue arrows.  Every potential term (one blue
    and two black arrows forming an oriented triangle) must meet each cut
    exactly once; otherwise :class:`CutError` is raised.
    """
    ell = M.ell
    r = ell + 2
    vmap = {v: vertex_index(v, ell) for v in M.vertices}
    expanded = []  # (source, target, color), one entry per arrow
    for a in M.arrows:
        for _ in range(a.multiplicity):
            expanded.append((vmap[a.source], vmap[a.target], a.color))

    in_I = [c == BLACK and s > t for s, t, c in expanded]
    in_Ip = [c == BLUE for s, t, c in expanded]

    triangles = set()
    for ia, ib, ic in product(range(len(expanded)), repeat=3):
        a, b, c = expanded[ia], expanded[ib], expanded[ic]
        if a[1] != b[0] or b[1] != c[0] or c[1] != a[0]:
            continue
        colors = sorted((a[2], b[2], c[2]))
        if colors != [BLACK, BLACK, BLUE]:
            continue
        rotations = [(ia, ib, ic), (ib, ic, ia), (ic, ia, ib)]
        triangles.add(min(rotations))
    for tri in triangles:
        nI = sum(in_I[i] for i in tri)
        nIp = sum(in_Ip[i] for i in tri)
        if nI != 1 or nIp != 1:
            raise CutError(f"triangle {[expanded[i] for i in tri]} meets I {nI} times "
                           f"and I' {nIp} times")

    remaining = sorted((s, t) for (s, t, c), i1, i2 in zip(expanded, in_I, in_Ip)
                       if not i1 and not i2)
    quiver = QuiverD.standard(r)
    if remaining != sorted(quiver.arrows):
        raise CutError(f"Q'' arrows {remaining} differ from D^_{r}: {sorted(quiver.arrows)}")

    sigma = [None] * (r + 1)
    for s, t, c in expanded:
        if c == BLUE:
            if sigma[s] is not None and sigma[s] != t:
                raise CutError(f"vertex {s} has several blue targets")
            sigma[s] = t
    if any(v is None for v in sigma) or sorted(sigma) != list(range(r + 1)):
        raise CutError(f"blue arrows do not define an involution: {sigma}")
    if any(sigma[sigma[i]] != i for i in range(r + 1)):
        raise CutError(f"blue arrows do not define an involution: {sigma}")

    return Reduction(
        quiver=quiver,
        vertex_map={v.label: i for v, i in vmap.items()},
        sigma=tuple(sigma),
        cut_I=tuple(sorted((s, t) for (s, t, c), f in zip(expanded, in_I) if f)),
        cut_I_prime=tuple(sorted((s, t) for (s, t, c), f in zip(expanded, in_Ip) if f)),
        triangles=len(triangles),
    )
