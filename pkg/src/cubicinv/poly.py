"""Sparse polynomials in F_p[a3, a2, a1, a0] with the grevlex order.

Monomials are exponent 4-tuples (e3, e2, e1, e0) for the dual variables
a3 > a2 > a1 > a0.  The monomial order is graded reverse lexicographic:
higher total degree wins, and on equal degree m > m' iff the rightmost
nonzero entry of the exponent difference is negative.  Equivalently, on
equal degree, descending grevlex is ascending lexicographic order on the
reversed exponent tuple (e0, e1, e2).
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .fp import check_prime, inv_mod

VAR_NAMES = ("a3", "a2", "a1", "a0")
# multiplicative weights of a3, a2, a1, a0 under the diagonal torus
VAR_WEIGHTS = (3, 1, -1, -3)


class Monomial(NamedTuple):
    e3: int
    e2: int
    e1: int
    e0: int

    def degree(self) -> int:
        return self.e3 + self.e2 + self.e1 + self.e0

    def weight(self, p: int) -> int:
        """Torus weight 3*e3 + e2 - e1 - 3*e0 reduced mod p-1."""
        return (3 * self.e3 + self.e2 - self.e1 - 3 * self.e0) % (p - 1)

    def parity(self) -> tuple[int, int]:
        return (self.e2 % 2, self.e1 % 2)

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(self.e3 + other.e3, self.e2 + other.e2,
                        self.e1 + other.e1, self.e0 + other.e0)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __str__(self):
        parts = [f"{n}^{e}" if e > 1 else n
                 for n, e in zip(VAR_NAMES, self) if e]
        return "*".join(parts) if parts else "1"


ONE = Monomial(0, 0, 0, 0)
A3, A2, A1, A0 = (Monomial(*(1 if i == k else 0 for i in range(4))) for k in range(4))


def grevlex_key(m) -> tuple:
    """Sort key: ascending key order equals ascending grevlex order."""
    return (m[0] + m[1] + m[2] + m[3], -m[3], -m[2], -m[1])


def grevlex_cmp(m1, m2) -> int:
    """Return -1, 0, or 1 as m1 <, =, > m2 in grevlex."""
    k1, k2 = grevlex_key(m1), grevlex_key(m2)
    return (k1 > k2) - (k1 < k2)


def monomials_of_degree(d: int) -> list[Monomial]:
    """All degree-d monomials in descending grevlex order."""
    out = []
    for e3 in range(d + 1):
        for e2 in range(d - e3 + 1):
            for e1 in range(d - e3 - e2 + 1):
                out.append(Monomial(e3, e2, e1, d - e3 - e2 - e1))
    out.sort(key=grevlex_key, reverse=True)
    return out


def num_monomials(d: int) -> int:
    return (d + 1) * (d + 2) * (d + 3) // 6


class Poly:
    """Immutable sparse polynomial over F_p; no zero coefficients stored."""

    __slots__ = ("p", "terms", "_lead")

    def __init__(self, p: int, terms=None):
        check_prime(p)
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for m, c in items:
                c = c % p
                if c:
                    m = m if isinstance(m, Monomial) else Monomial(*m)
                    clean[m] = c
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_lead", None)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls(p)

    @classmethod
    def constant(cls, c: int, p: int) -> "Poly":
        return cls(p, {ONE: c})

    @classmethod
    def variable(cls, i: int, p: int) -> "Poly":
        """The variable a_{3-i}: index 0 -> a3, ..., 3 -> a0."""
        return cls(p, {(A3, A2, A1, A0)[i]: 1})

    @classmethod
    def from_terms(cls, p: int, *terms) -> "Poly":
        """Build from (coeff, (e3,e2,e1,e0)) pairs."""
        return cls(p, [(Monomial(*m), c) for c, m in terms])

    # -- queries --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m.degree() for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {m.degree() for m in self.terms}
        return len(degs) <= 1

    def homogeneous_parts(self) -> dict[int, "Poly"]:
        parts: dict[int, dict] = {}
        for m, c in self.terms.items():
            parts.setdefault(m.degree(), {})[m] = c
        return {d: Poly(self.p, t) for d, t in sorted(parts.items())}

    def lead(self) -> tuple[Monomial, int]:
        """Grevlex-maximal (monomial, coefficient); error on zero."""
        if not self.terms:
            raise ValueError("lead of zero polynomial")
        if self._lead is None:
            object.__setattr__(self, "_lead", max(self.terms, key=grevlex_key))
        return self._lead, self.terms[self._lead]

    def lead_monomial(self) -> Monomial:
        return self.lead()[0]

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending grevlex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def coeff(self, m) -> int:
        return self.terms.get(m if isinstance(m, Monomial) else Monomial(*m), 0)

    def weight(self) -> int | None:
        """The common torus weight mod p-1 if isobaric, else None."""
        ws = {m.weight(self.p) for m in self.terms}
        if not ws:
            return 0
        return ws.pop() if len(ws) == 1 else None

    # -- ring operations ------------------------------------------------
    def _check(self, other: "Poly"):
        if self.p != other.p:
            raise ValueError(f"mixed primes {self.p} and {other.p}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        p = self.p
        for m, c in other.terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly(p, out)

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int) -> "Poly":
        c %= self.p
        if c == 0:
            return Poly(self.p)
        if c == 1:
            return self
        p = self.p
        return Poly(p, {m: (v * c) % p for m, v in self.terms.items()})

    def shift(self, m: Monomial, c: int = 1) -> "Poly":
        """Multiply by the single term c*m."""
        c %= self.p
        if c == 0:
            return Poly(self.p)
        p = self.p
        return Poly(p, {mm.mul(m): (v * c) % p for mm, v in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.p)
        if _dense_worthwhile(self, other):
            from . import dense
            return dense.mul_poly(self, other)
        a, b = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        out: dict[Monomial, int] = {}
        p = self.p
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = m1.mul(m2)
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly(p, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Poly) and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    # -- substitution ---------------------------------------------------
    def set_var_zero(self, var) -> "Poly":
        """Substitute 0 for a variable (reduction mod the ideal it generates).

        `var` is an index 0..3 (0 = a3, ..., 3 = a0) or a name like "a0".
        """
        i = VAR_NAMES.index(var) if isinstance(var, str) else var
        return Poly(self.p, {m: c for m, c in self.terms.items() if m[i] == 0})

    # -- serialization --------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{"m": list(m), "c": c} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[dict], p: int) -> "Poly":
        return cls(p, [(Monomial(*t["m"]), t["c"]) for t in data])

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{m}" for m, c in self.sorted_terms())

    __repr__ = __str__


def _dense_worthwhile(f: Poly, g: Poly) -> bool:
    """Heuristic: route big homogeneous products through the dense cube backend."""
    if len(f.terms) * len(g.terms) < 200_000:
        return False
    return f.is_homogeneous() and g.is_homogeneous()


def poly_from_str_terms(p: int, terms: list[tuple[int, tuple[int, int, int, int]]]) -> Poly:
    return Poly(p, [(Monomial(*m), c) for c, m in terms])
