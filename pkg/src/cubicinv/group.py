"""SL2(F_p), its standard subgroups, and the induced right action on F_p[a3..a0].

The 2x2 group acts on the span of the cubic-form coefficients; the 4x4
matrix of an element is derived from the symmetric-cube construction
(act linearly on X, Y, expand cubes in the basis {Y^3, 3Y^2X, 3YX^2, X^3},
dualize).  Polynomials carry a right action: act(act(f,g),h) = act(f, g*h).

Transfers are coset sums.  The specialized maps use fixed coset systems:
upper unitriangular powers for the Sylow subgroup, ascending diagonal
elements for the torus, and the lower unitriangular subgroup plus the
rotation eta for the Borel cosets in the full group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fp import check_prime
from .poly import Monomial, Poly

_DENSE_ACT_DEGREE = 8
_DENSE_ACT_TERMS = 64


@dataclass(frozen=True)
class GroupElement:
    """A determinant-1 matrix [[a, b], [c, d]] over F_p."""

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self):
        check_prime(self.p)
        for f in ("a", "b", "c", "d"):
            object.__setattr__(self, f, getattr(self, f) % self.p)
        if (self.a * self.d - self.b * self.c) % self.p != 1:
            raise ValueError("matrix does not have determinant 1")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.p != other.p:
            raise ValueError("mixed primes")
        return GroupElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.p,
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.d, -self.b, -self.c, self.a, self.p)

    def transpose(self) -> "GroupElement":
        return GroupElement(self.a, self.c, self.b, self.d, self.p)

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 0)


def identity(p: int) -> GroupElement:
    return GroupElement(1, 0, 0, 0, p)


def sigma(p: int, s: int = 1) -> GroupElement:
    """Upper unitriangular [[1, s], [0, 1]]."""
    return GroupElement(1, s, 0, 1, p)


def sigma_t(p: int, s: int = 1) -> GroupElement:
    """Lower unitriangular [[1, 0], [s, 1]]."""
    return GroupElement(1, 0, s, 1, p)


def rho(p: int, w: int) -> GroupElement:
    """Diagonal torus element [[w, 0], [0, w^-1]]."""
    if w % p == 0:
        raise ValueError("torus parameter must be nonzero")
    return GroupElement(w, 0, 0, pow(w, -1, p), p)


def eta(p: int) -> GroupElement:
    """The rotation [[0, 1], [-1, 0]]."""
    return GroupElement(0, 1, -1, 0, p)


# ---------------------------------------------------------------------------
# subgroups and coset systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupSpec:
    """A named subgroup (or coset system) with a fixed enumeration order."""

    tag: str
    elements: tuple[GroupElement, ...]


def subgroup_p(p: int) -> SubgroupSpec:
    """Upper unitriangular Sylow subgroup, enumerated by s = 0..p-1."""
    return SubgroupSpec("P", tuple(sigma(p, s) for s in range(p)))


def subgroup_q(p: int) -> SubgroupSpec:
    """Lower unitriangular Sylow subgroup, enumerated by s = 0..p-1."""
    return SubgroupSpec("Q", tuple(sigma_t(p, s) for s in range(p)))


def torus_elements(p: int) -> tuple[GroupElement, ...]:
    """Diagonal elements, parameter ascending 1..p-1; reps for P in the Borel."""
    return tuple(rho(p, w) for w in range(1, p))


def subgroup_b(p: int) -> SubgroupSpec:
    """Borel subgroup of upper triangular matrices, |B| = p(p-1)."""
    els = tuple(sigma(p, s) * rho(p, w) for w in range(1, p) for s in range(p))
    return SubgroupSpec("B", els)


def borel_coset_reps(p: int) -> tuple[GroupElement, ...]:
    """Coset representatives for the Borel in the full group: Q then eta."""
    return subgroup_q(p).elements + (eta(p),)


def group_elements(p: int) -> SubgroupSpec:
    """All of SL2(F_p) by brute enumeration (order p(p^2-1)); small p only."""
    els = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        els.append(GroupElement(a, b, c, d, p))
    return SubgroupSpec("G", tuple(els))


# ---------------------------------------------------------------------------
# induced action
# ---------------------------------------------------------------------------

def induced_matrix(g: GroupElement) -> tuple[tuple[int, ...], ...]:
    """4x4 matrix of g on the dual coordinates (a3, a2, a1, a0).

    Row i lists the coefficients of (a_i)g in the basis (a3, a2, a1, a0).
    Derived from the cube of the 2x2 action: g.Y = a*Y + c*X and
    g.X = b*Y + d*X, expanded in the basis {Y^3, 3Y^2X, 3YX^2, X^3}.
    """
    p = g.p
    binom3 = (1, 3, 3, 1)
    inv3 = pow(3, -1, p)
    cols = []
    for j in range(4):
        # (g.Y)^(3-j) (g.X)^j * binom(3,j), coefficients by X-degree
        w = [binom3[j]]
        for _ in range(3 - j):
            w = _linmul(w, g.a, g.c, p)
        for _ in range(j):
            w = _linmul(w, g.b, g.d, p)
        # rescale X-degree m by 1/binom(3,m) to land in the dual basis
        cols.append([w[m] * pow(inv3, 1 if m in (1, 2) else 0, p) % p for m in range(4)])
    return tuple(tuple(cols[j][i] for j in range(4)) for i in range(4))


def _linmul(coeffs, u, v, p):
    """Multiply an X-degree coefficient list by the linear form u*Y + v*X."""
    out = [0] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        out[k] = (out[k] + c * u) % p
        out[k + 1] = (out[k + 1] + c * v) % p
    return out


def _image_polys(g: GroupElement) -> list[Poly]:
    m4 = induced_matrix(g)
    vars4 = [Monomial(1, 0, 0, 0), Monomial(0, 1, 0, 0),
             Monomial(0, 0, 1, 0), Monomial(0, 0, 0, 1)]
    return [Poly(g.p, {vars4[j]: m4[i][j] for j in range(4) if m4[i][j]})
            for i in range(4)]


def _act_sparse(f: Poly, g: GroupElement) -> Poly:
    p = f.p
    images = _image_polys(g)
    d = f.degree()
    pows: list[list[Poly | None]] = [[None] * (d + 1) for _ in range(4)]
    one = Poly.constant(1, p)
    for i in range(4):
        pows[i][0] = one
    out = Poly(p)
    cache: dict[tuple[int, int], Poly] = {}

    def power(i, e):
        if pows[i][e] is None:
            pows[i][e] = power(i, e - 1) * images[i]
        return pows[i][e]

    for m, c in f.terms.items():
        head = cache.get((m.e3, m.e2))
        if head is None:
            head = power(0, m.e3) * power(1, m.e2)
            cache[(m.e3, m.e2)] = head
        out = out + (head * power(2, m.e1) * power(3, m.e0)).scale(c)
    return out


def act(f: Poly, g: GroupElement) -> Poly:
    """Right action of g on f by algebra automorphisms."""
    if f.p != g.p:
        raise ValueError("mixed primes")
    if g.is_identity() or f.is_zero():
        return f
    parts = f.homogeneous_parts()
    out = Poly(f.p)
    for d, part in parts.items():
        if d >= _DENSE_ACT_DEGREE or len(part) >= _DENSE_ACT_TERMS:
            from . import dense
            out = out + dense.act_poly_homogeneous(part, induced_matrix(g))
        else:
            out = out + _act_sparse(part, g)
    return out


# ---------------------------------------------------------------------------
# transfers and orbit products
# ---------------------------------------------------------------------------

def transfer(f: Poly, reps) -> Poly:
    """Sum of (f)tau over the given coset representatives."""
    reps = list(reps.elements if isinstance(reps, SubgroupSpec) else reps)
    d = f.degree()
    if f.is_homogeneous() and d >= _DENSE_ACT_DEGREE and len(f) >= 8:
        from . import dense
        cube = dense.to_cube(f, d)
        acc = None
        for tau in reps:
            img = dense.cube_act(cube, d, induced_matrix(tau), f.p)
            acc = img if acc is None else (acc + img) % f.p
        return dense.from_cube(acc, d, f.p) if acc is not None else Poly(f.p)
    out = Poly(f.p)
    for tau in reps:
        out = out + act(f, tau)
    return out


def tr_p(f: Poly) -> Poly:
    """Transfer over the upper unitriangular Sylow subgroup."""
    return transfer(f, subgroup_p(f.p))


def tr_p_to_b(f: Poly) -> Poly:
    """Relative transfer from the Sylow subgroup to the Borel (torus reps)."""
    return transfer(f, torus_elements(f.p))


def tr_b_to_g(f: Poly) -> Poly:
    """Relative transfer from the Borel to the full group (reps Q and eta)."""
    return transfer(f, borel_coset_reps(f.p))


def tr_b(f: Poly) -> Poly:
    """Full transfer over the Borel subgroup."""
    return tr_p_to_b(tr_p(f))


def tr_g(f: Poly) -> Poly:
    """Full-group transfer, computed as a composition of relative transfers."""
    return tr_b_to_g(tr_p_to_b(tr_p(f)))


def tr_g_full(f: Poly) -> Poly:
    """Full-group transfer by brute enumeration; cross-check oracle, small p."""
    return transfer(f, group_elements(f.p))


def orbit_product(f: Poly, sub: SubgroupSpec) -> Poly:
    """Product of (f)tau over the subgroup's elements."""
    out = Poly.constant(1, f.p)
    for tau in sub.elements:
        out = out * act(f, tau)
    return out
