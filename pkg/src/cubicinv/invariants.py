"""Construction of the invariant generators and their predicted lead monomials.

Builds the named invariants (discriminant D, Dickson's L, the transfer
invariants K, delta, etilde, dtilde, the orbit product N and the seeds
xi, d, e), the four transfer families with their resolved parameter
ranges, and the recursive family h_i of tete-a-tetes.  Every transfer
family member is computed as tr_B^G(N^j * tr^P(seed)); the full-group
transfer of N^j * seed is the same polynomial up to a nonzero scalar.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .fp import check_prime
from .group import (orbit_product, subgroup_p, tr_b_to_g, tr_g, tr_p, act,
                    sigma, sigma_t)
from .poly import Monomial, Poly

NAMED = ("D", "L", "K", "N", "xi", "d", "e", "delta", "etilde", "dtilde")


@dataclass(frozen=True)
class GeneratorRecord:
    """A named invariant (or seed) with its construction metadata."""

    name: str
    family: str          # named | fam1 | fam2 | fam3 | fam4 | h
    params: tuple        # (j, m) for families, (i,) for h, () for named
    poly: Poly
    degree: int
    lead: Monomial

    def to_json(self, include_poly: bool = True) -> dict:
        out = {
            "name": self.name,
            "family": self.family,
            "params": list(self.params),
            "degree": self.degree,
            "lead": list(self.lead),
        }
        if include_poly:
            out["poly"] = self.poly.to_json()
        return out


def _record(name, family, params, poly) -> GeneratorRecord:
    lm, _ = poly.lead()
    return GeneratorRecord(name, family, params, poly, poly.degree(), lm)


def torus_exponent(p: int) -> int:
    """Smallest c > 0 with 3c = 0 mod p-1; equals (p-1)/3 or p-1 by class."""
    c = next(k for k in range(1, p) if 3 * k % (p - 1) == 0)
    expected = (p - 1) // 3 if p % 3 == 1 else p - 1
    assert c == expected, "torus exponent disagrees with its closed form"
    return c


# ---------------------------------------------------------------------------
# named invariants
# ---------------------------------------------------------------------------

def _vars(p):
    return (Poly.variable(0, p), Poly.variable(1, p),
            Poly.variable(2, p), Poly.variable(3, p))


@lru_cache(maxsize=None)
def discriminant(p: int) -> Poly:
    return Poly.from_terms(
        p,
        (3, (0, 2, 2, 0)), (-4, (1, 0, 3, 0)), (-4, (0, 3, 0, 1)),
        (6, (1, 1, 1, 1)), (-1, (2, 0, 0, 2)),
    )


@lru_cache(maxsize=None)
def dickson_l(p: int) -> Poly:
    return Poly.from_terms(
        p,
        (3, (0, p, 1, 0)), (-3, (0, 1, p, 0)), (-1, (p, 0, 0, 1)), (1, (1, 0, 0, p)),
    )


@lru_cache(maxsize=None)
def xi_form(p: int) -> Poly:
    return Poly.from_terms(p, (3, (0, 2, 0, 0)), (-4, (1, 0, 1, 0)))


@lru_cache(maxsize=None)
def d_seed(p: int) -> Poly:
    return Poly.from_terms(p, (1, (0, 0, 2, 0)), (-1, (0, 1, 0, 1)))


@lru_cache(maxsize=None)
def e_seed(p: int) -> Poly:
    return Poly.from_terms(p, (2, (0, 0, 3, 0)), (1, (1, 0, 0, 2)), (-3, (0, 1, 1, 1)))


@lru_cache(maxsize=None)
def norm_form(p: int) -> Poly:
    """Orbit product of a3 over the Sylow subgroup; lead monomial a3^p."""
    return orbit_product(Poly.variable(0, p), subgroup_p(p))


@lru_cache(maxsize=None)
def _norm_power(p: int, j: int) -> Poly:
    if j == 0:
        return Poly.constant(1, p)
    return _norm_power(p, j - 1) * norm_form(p)


@lru_cache(maxsize=None)
def k_invariant(p: int) -> Poly:
    a1 = Poly.variable(2, p)
    return -tr_g(a1 ** (p - 1))


@lru_cache(maxsize=None)
def delta_invariant(p: int) -> Poly:
    return tr_b_to_g(_norm_power(p, torus_exponent(p)))


@lru_cache(maxsize=None)
def e_tilde(p: int) -> Poly:
    return tr_b_to_g(norm_form(p) * e_seed(p))


@lru_cache(maxsize=None)
def d_tilde(p: int) -> Poly:
    if p % 3 != 2:
        raise ValueError("dtilde is defined only for p = -1 mod 3")
    return tr_b_to_g(_norm_power(p, (p + 1) // 3) * d_seed(p))


def build_named(name: str, p: int) -> GeneratorRecord:
    check_prime(p)
    builders = {
        "D": discriminant, "L": dickson_l, "K": k_invariant, "N": norm_form,
        "xi": xi_form, "d": d_seed, "e": e_seed, "delta": delta_invariant,
        "etilde": e_tilde, "dtilde": d_tilde,
    }
    if name not in builders:
        raise ValueError(f"unknown named invariant {name!r}; choose from {NAMED}")
    return _record(name, "named", (), builders[name](p))


def na0_invariant(p: int) -> Poly:
    return norm_form(p) * Poly.variable(3, p)


# ---------------------------------------------------------------------------
# transfer families
# ---------------------------------------------------------------------------

def family_m(j: int, p: int) -> int:
    return 2 + (3 * j) // (p - 1)


def family_ranges(p: int) -> dict[str, list[int]]:
    """Resolved j-lists for the four transfer families at this prime."""
    check_prime(p)
    if p % 3 == 1:
        return {
            "fam1": list(range(1, (p - 4) // 3 + 1)),
            "fam2": list(range(1, (p - 4) // 3 + 1)),
            "fam3": list(range(2, (p - 4) // 3 + 1)),
            "fam4": [],
        }
    excluded = {(p + 1) // 3, (2 * p - 1) // 3}
    return {
        "fam1": list(range(1, p - 1)),
        "fam2": list(range(1, (p - 2) // 3 + 1)),
        "fam3": [j for j in range(2, p - 1) if j not in excluded],
        "fam4": list(range((2 * p - 1) // 3, p - 1)),
    }


def family_seed(fam: int, j: int, p: int) -> Monomial:
    """Monomial whose Sylow transfer seeds family `fam` at parameter j."""
    ranges = family_ranges(p)
    allowed = ranges[f"fam{fam}"]
    if j not in allowed:
        raise ValueError(
            f"family {fam} at p={p} requires j in {allowed}, got j={j}")
    m = family_m(j, p)
    if fam == 1:
        return Monomial(p - 1, (m - 1) * (p - 1) - 3 * j, 0, 0)
    if fam == 2:
        return Monomial(p - 1 - j, 0, 0, 0)
    if fam == 3:
        return Monomial(p - 2, (m - 1) * (p - 1) + 3 - 3 * j, 0, 0)
    if fam == 4:
        return Monomial((5 * p - 7 - 3 * j) // 3, 2, 0, 0)
    raise ValueError(f"unknown family {fam}")


def build_transfer_family(fam: int, j: int, p: int) -> GeneratorRecord:
    seed = family_seed(fam, j, p)
    poly = tr_b_to_g(_norm_power(p, j) * tr_p(Poly(p, {seed: 1})))
    if poly.is_zero():
        raise ArithmeticError(f"family {fam} transfer vanished at j={j}, p={p}")
    return _record(f"tr{fam}[j={j}]", f"fam{fam}", (j, family_m(j, p)), poly)


def build_generating_set(p: int, verify: bool = True) -> list[GeneratorRecord]:
    """The full proposed generating set for the invariant ring at p."""
    check_prime(p)
    records = [
        build_named("D", p),
        build_named("K", p),
        build_named("L", p),
        _record("Na0", "named", (), na0_invariant(p)),
        build_named("delta", p),
        build_named("etilde", p),
    ]
    if p % 3 == 2:
        records.append(build_named("dtilde", p))
    for fam in (1, 2, 3, 4):
        for j in family_ranges(p)[f"fam{fam}"]:
            records.append(build_transfer_family(fam, j, p))
    if verify:
        for rec in records:
            if not verify_invariance(rec.poly):
                raise ArithmeticError(f"generator {rec.name} is not invariant")
    return records


# ---------------------------------------------------------------------------
# the tete-a-tete family h_i
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _sylow_trace_norm(p: int) -> Poly:
    """tr_B^G(N * tr^P(a3^(p-2))), the second ingredient of h_1."""
    a3 = Poly.variable(0, p)
    return tr_b_to_g(norm_form(p) * tr_p(a3 ** (p - 2)))


@lru_cache(maxsize=None)
def _h_poly(i: int, p: int) -> Poly:
    if i < 1:
        raise ValueError("h_i requires i >= 1")
    K = k_invariant(p)
    if i == 1:
        return K * e_tilde(p) - discriminant(p) * _sylow_trace_norm(p)
    scal = (discriminant(p).scale(3)) ** ((p - 1) // 2)
    if i == 2:
        return K * _h_poly(1, p) - scal * e_tilde(p)
    return K * _h_poly(i - 1, p) - scal * _h_poly(i - 2, p)


def build_h(i: int, p: int) -> GeneratorRecord:
    return _record(f"h[{i}]", "h", (i,), _h_poly(i, p))


def h_lead_monomial(i: int, p: int) -> Monomial:
    return Monomial(p, 0, p + 2 + (i - 1) * (p - 1), 0)


# ---------------------------------------------------------------------------
# predicted lead monomials
# ---------------------------------------------------------------------------

def predicted_lm(symbol: str, p: int, j: int | None = None, i: int | None = None) -> Monomial:
    """Closed-form lead monomials of the families and auxiliary monomials.

    Symbols: gamma, beta, Delta, phi (transfer families); alpha, epsilon,
    n (a1-towers, parameter i); lambda, mu, eta (sporadic seeds for the
    cone decomposition).
    """
    check_prime(p)
    pm1 = p - 1

    def need_j(lo, hi, extra=""):
        if j is None or not (lo <= j <= hi):
            raise ValueError(f"{symbol} requires {lo} <= j <= {hi}{extra}, got j={j}")

    if symbol == "gamma":
        if j is None or j < 1:
            raise ValueError(f"gamma requires j >= 1, got j={j}")
        m = family_m(j, p)
        return Monomial(p * j, m * pm1 - 3 * j, 0, 0)
    if symbol == "beta":
        need_j(0, pm1 // 2)
        return Monomial(p * j, pm1 - 2 * j, j, 0)
    if symbol == "Delta":
        m = family_m(j, p) if j is not None else 0
        if j is None or not (2 <= (m - 1) * pm1 + 3 - 3 * j <= pm1):
            raise ValueError(f"Delta undefined at j={j}: seed exponent outside [2, p-1]")
        return Monomial(p * j, m * pm1 + 1 - 3 * j, 1, 0)
    if symbol == "phi":
        if p % 3 != 2:
            raise ValueError("phi requires p = -1 mod 3")
        need_j((2 * p - 1) // 3, p - 2)
        return Monomial(p * j, (7 * p - 5) // 3 - 2 * j, j - (2 * p - 4) // 3, 0)
    if symbol == "n":
        if i is None or i < 0:
            raise ValueError(f"n requires i >= 0, got i={i}")
        return Monomial(p, 0, 3 + i * pm1, 0)
    if symbol == "alpha":
        if i is None or i < 0:
            raise ValueError(f"alpha requires i >= 0, got i={i}")
        if p % 3 == 1:
            need_j(1, pm1 // 3)
            return Monomial(p * j, 0, 3 * j + pm1 * i, 0)
        need_j(1, pm1)
        s = (3 * j) // pm1
        y = 3 * j + pm1 * (i - s)
        if y < 0:
            raise ValueError(f"alpha tower empty at i={i}, j={j}")
        return Monomial(p * j, 0, y, 0)
    if symbol == "epsilon":
        base = predicted_lm("alpha", p, j=j, i=i)
        return Monomial(base.e3, p, base.e1 + 1, 0)
    if symbol == "lambda":
        if p % 3 != 2:
            raise ValueError("lambda requires p = -1 mod 3")
        return Monomial(p * (2 * p - 1) // 3, p, 2, 0)
    if symbol == "mu":
        if p % 3 != 2:
            raise ValueError("mu requires p = -1 mod 3")
        return Monomial(p * (p + 1) // 3, 2 * p - 3, 1, 0)
    if symbol == "eta":
        if p % 3 != 2:
            raise ValueError("eta requires p = -1 mod 3")
        need_j((p + 4) // 3, (2 * p - 1) // 3)
        return Monomial(p * j, (5 * p - 1) // 3 - 2 * j, j - (p - 5) // 3, 0)
    raise ValueError(f"unknown symbol {symbol!r}")


def predicted_family_lm(fam: int, j: int, p: int) -> Monomial:
    return predicted_lm({1: "gamma", 2: "beta", 3: "Delta", 4: "phi"}[fam], p, j=j)


# ---------------------------------------------------------------------------
# invariance
# ---------------------------------------------------------------------------

def verify_invariance(f: Poly) -> bool:
    """True iff f is fixed by the two unitriangular generators of the group."""
    p = f.p
    return act(f, sigma(p)) == f and act(f, sigma_t(p)) == f
