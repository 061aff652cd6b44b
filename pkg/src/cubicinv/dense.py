"""Dense backend for homogeneous polynomials: exponent cubes over F_p.

A homogeneous degree-d polynomial is stored as an int64 array of shape
(d+1, d+1, d+1) indexed by (e3, e2, e1); the a0 exponent is implied by
homogeneity (e0 = d - e3 - e2 - e1) and cells outside the simplex stay
zero.  Products are 3-D convolutions (FFT with an exact-integer bound
check); linear substitutions are applied as a sequence of elementary
shear/scale/swap operations obtained from a Gaussian factorization of
the 4x4 substitution matrix.
"""

from __future__ import annotations

import numpy as np
from scipy import fft as sfft

from .poly import Monomial, Poly

_binom_cache: dict[tuple[int, int], np.ndarray] = {}


def binom_table(n: int, p: int) -> np.ndarray:
    """Pascal's triangle mod p as an (n+1, n+1) array; zero above the diagonal."""
    key = (p, n)
    cached = _binom_cache.get(key)
    if cached is not None:
        return cached
    t = np.zeros((n + 1, n + 1), dtype=np.int64)
    t[:, 0] = 1
    for i in range(1, n + 1):
        t[i, 1:i + 1] = (t[i - 1, 1:i + 1] + t[i - 1, 0:i]) % p
    _binom_cache[key] = t
    return t


def to_cube(f: Poly, degree: int | None = None):
    """Dense cube of a homogeneous polynomial."""
    if degree is None:
        degree = f.degree()
        if degree < 0:
            degree = 0
    cube = np.zeros((degree + 1,) * 3, dtype=np.int64)
    for m, c in f.terms.items():
        if m.degree() != degree:
            raise ValueError("to_cube requires a homogeneous polynomial")
        cube[m.e3, m.e2, m.e1] = c
    return cube


def from_cube(cube, degree: int, p: int) -> Poly:
    e3, e2, e1 = np.nonzero(cube)
    terms = {}
    for x, y, z in zip(e3.tolist(), e2.tolist(), e1.tolist()):
        terms[Monomial(x, y, z, degree - x - y - z)] = int(cube[x, y, z]) % p
    return Poly(p, terms)


def cube_lead(cube, degree: int):
    """Grevlex-maximal monomial and coefficient of a nonzero cube."""
    e3, e2, e1 = np.nonzero(cube)
    if e3.size == 0:
        raise ValueError("lead of zero polynomial")
    e0 = degree - e3 - e2 - e1
    # descending grevlex on fixed degree = ascending lex on (e0, e1, e2)
    order = np.lexsort((e2, e1, e0))
    k = order[0]
    m = Monomial(int(e3[k]), int(e2[k]), int(e1[k]), int(e0[k]))
    return m, int(cube[e3[k], e2[k], e1[k]])


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------

def cube_mul(a, da: int, b, db: int, p: int):
    d = da + db
    na, nb = int(np.count_nonzero(a)), int(np.count_nonzero(b))
    if na == 0 or nb == 0:
        return np.zeros((d + 1,) * 3, dtype=np.int64)
    if min(na, nb) <= 48:
        return _mul_scatter(a, da, b, db, p)
    return _mul_fft(a, b, d, p)


def _mul_scatter(a, da, b, db, p):
    if np.count_nonzero(b) < np.count_nonzero(a):
        a, da, b, db = b, db, a, da
    d = da + db
    out = np.zeros((d + 1,) * 3, dtype=np.int64)
    n1 = db + 1
    for x, y, z in zip(*np.nonzero(a)):
        c = int(a[x, y, z])
        out[x:x + n1, y:y + n1, z:z + n1] += c * b
    return np.mod(out, p)


def _mul_fft(a, b, d, p):
    # exact convolution entries are bounded well below 2^53, so float FFT
    # recovers them after rounding
    bound = min(int(a.sum()) * int(b.max()), int(b.sum()) * int(a.max()))
    if bound >= 1 << 49:
        raise OverflowError("convolution bound too large for float FFT")
    shape = (d + 1,) * 3
    fa = sfft.rfftn(a.astype(np.float64), shape)
    fb = sfft.rfftn(b.astype(np.float64), shape)
    prod = sfft.irfftn(fa * fb, shape)
    out = np.rint(prod).astype(np.int64)
    return np.mod(out, p)


def cube_pow(a, da: int, n: int, p: int):
    if n == 0:
        one = np.ones((1, 1, 1), dtype=np.int64)
        return one, 0
    result, dr = None, 0
    base, db = a, da
    while n:
        if n & 1:
            if result is None:
                result, dr = base, db
            else:
                result, dr = cube_mul(result, dr, base, db, p), dr + db
        n >>= 1
        if n:
            base, db = cube_mul(base, db, base, db, p), 2 * db
    return result, dr


# ---------------------------------------------------------------------------
# linear substitution
# ---------------------------------------------------------------------------

def factor_substitution(m4, p: int):
    """Factor an invertible 4x4 matrix into elementary substitution steps.

    Returns ops [(kind, ...), ...] such that applying them in order to a
    cube realizes the substitution a_i <- sum_j m4[i][j] a_j.
    """
    a = np.array(m4, dtype=np.int64) % p
    recorded = []  # left-multiplied elementary ops, in application order
    for col in range(4):
        piv = None
        for row in range(col, 4):
            if a[row, col]:
                piv = row
                break
        if piv is None:
            raise ValueError("singular substitution matrix")
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            recorded.append(("swap", col, piv))
        v = int(a[col, col])
        if v != 1:
            inv = pow(v, -1, p)
            a[col] = (a[col] * inv) % p
            recorded.append(("scale", col, inv))
        for row in range(4):
            if row != col and a[row, col]:
                c = int(a[row, col])
                a[row] = (a[row] - c * a[col]) % p
                recorded.append(("shear", row, col, -c % p))
    # recorded ops E1..Ek satisfy Ek...E1 M = I, so M = inv(E1)...inv(Ek)
    ops = []
    for op in recorded:
        if op[0] == "swap":
            ops.append(op)
        elif op[0] == "scale":
            ops.append(("scale", op[1], pow(op[2], -1, p)))
        else:
            ops.append(("shear", op[1], op[2], (-op[3]) % p))
    return ops


def _axis_slices(ndim, axis, sl):
    idx = [slice(None)] * ndim
    idx[axis] = sl
    return tuple(idx)


def _e0_grid(d: int):
    r = np.arange(d + 1)
    return d - (r[:, None, None] + r[None, :, None] + r[None, None, :])


def _apply_shear(cube, d, i, j, c, p):
    """Substitute a_i <- a_i + c*a_j (variable indices 0..3; 3 is implicit a0).

    Contributions are accumulated without intermediate reduction: every
    addend is < p^2 and there are at most d+1 of them, far below 2^63.
    """
    nz = np.nonzero(cube)
    if nz[0].size == 0:
        return cube.copy()
    binom = binom_table(d, p)
    cpow = [1] * (d + 1)
    for k in range(1, d + 1):
        cpow[k] = (cpow[k - 1] * c) % p
    out = cube.copy()
    if i < 3:
        kmax = int(nz[i].max())
        for k in range(1, kmax + 1):
            src = cube[_axis_slices(3, i, slice(k, d + 1))]
            mult = binom[k:d + 1, k] * cpow[k] % p
            shape = [1, 1, 1]
            shape[i] = mult.shape[0]
            contrib = src * mult.reshape(shape)
            dstidx = [slice(None)] * 3
            dstidx[i] = slice(0, d + 1 - k)
            srcsel = [slice(None)] * 3
            if j < 3:
                dstidx[j] = slice(k, d + 1)
                srcsel[j] = slice(0, d + 1 - k)
            # j == 3: the a0 exponent absorbs the shift, no second axis move
            out[tuple(dstidx)] += contrib[tuple(srcsel)]
    else:  # i == 3: a0 <- a0 + c*a_j, expand over the implicit exponent
        e0 = _e0_grid(d)
        e0c = np.clip(e0, 0, d)
        kmax = int((d - nz[0] - nz[1] - nz[2]).max())
        for k in range(1, kmax + 1):
            coeffs = binom[:, k][e0c] * cpow[k] % p  # zero where e0 < k
            contrib = cube * coeffs
            dst = _axis_slices(3, j, slice(k, d + 1))
            src = _axis_slices(3, j, slice(0, d + 1 - k))
            out[dst] += contrib[src]
    return np.mod(out, p)


def _apply_scale(cube, d, i, lam, p):
    powers = np.ones(d + 1, dtype=np.int64)
    for k in range(1, d + 1):
        powers[k] = powers[k - 1] * lam % p
    if i < 3:
        shape = [1, 1, 1]
        shape[i] = d + 1
        return cube * powers.reshape(shape) % p
    e0 = np.clip(_e0_grid(d), 0, d)
    return cube * powers[e0] % p


def _apply_swap(cube, d, i, j, p):
    if i > j:
        i, j = j, i
    if j < 3:
        return np.swapaxes(cube, i, j).copy()
    grids = np.indices(cube.shape)
    e0 = d - grids.sum(axis=0)
    valid = e0 >= 0
    src = [g.copy() for g in grids]
    src[i] = np.where(valid, e0, 0)
    out = np.zeros_like(cube)
    out[valid] = cube[src[0][valid], src[1][valid], src[2][valid]]
    return out


def _reverse_cube(cube, d):
    """Reindex by the exponent reversal (e3,e2,e1,e0) -> (e0,e1,e2,e3)."""
    r = np.arange(d + 1)
    x = r[:, None, None]
    y = r[None, :, None]
    z = r[None, None, :]
    w = d - x - y - z
    valid = w >= 0
    out = np.zeros_like(cube)
    wc = np.where(valid, w, 0)
    gathered = cube[wc, z, y]
    out[valid] = gathered[valid]
    return out


def _cube_act_direct(cube, d, m4, p):
    out = cube
    for op in factor_substitution(m4, p):
        if op[0] == "shear":
            out = _apply_shear(out, d, op[1], op[2], op[3], p)
        elif op[0] == "scale":
            out = _apply_scale(out, d, op[1], op[2], p)
        else:
            out = _apply_swap(out, d, op[1], op[2], p)
    return out


def cube_act(cube, d: int, m4, p: int):
    """Apply the substitution a_i <- sum_j m4[i][j] a_j to a degree-d cube.

    When the substitution fixes a3 but not a0, conjugating by the exponent
    reversal avoids rewriting the implicit exponent, which is the costly
    shear direction.
    """
    m = [[int(v) % p for v in row] for row in m4]
    fixes_a0 = m[3] == [0, 0, 0, 1]
    fixes_a3 = m[0] == [1, 0, 0, 0]
    if fixes_a3 and not fixes_a0:
        rev = [[m[3 - i][3 - j] for j in range(4)] for i in range(4)]
        return _reverse_cube(_cube_act_direct(_reverse_cube(cube, d), d, rev, p), d)
    return _cube_act_direct(cube, d, m, p)


# ---------------------------------------------------------------------------
# Poly-level conveniences
# ---------------------------------------------------------------------------

def mul_poly(f: Poly, g: Poly) -> Poly:
    df, dg = f.degree(), g.degree()
    cube = cube_mul(to_cube(f, df), df, to_cube(g, dg), dg, f.p)
    return from_cube(cube, df + dg, f.p)


def pow_poly(f: Poly, n: int) -> Poly:
    d = f.degree()
    cube, dr = cube_pow(to_cube(f, d), d, n, f.p)
    return from_cube(cube, dr, f.p)


def act_poly_homogeneous(f: Poly, m4) -> Poly:
    d = f.degree()
    if d <= 0:
        return f
    return from_cube(cube_act(to_cube(f, d), d, m4, f.p), d, f.p)
