"""Exact rank of integer matrices.

Two cooperating engines, both exact:

* ``bareiss_rank`` -- fraction-free (Bareiss-style) elimination on
  arbitrary-precision integers.  Entries stay integral throughout; the
  divisions are exact by Sylvester's determinant identity.  This is the
  reference engine and the fallback for every other path.

* ``rank`` -- dispatches small matrices straight to Bareiss and large
  ones to a certified multi-modular path: an elimination mod a 31-bit
  prime yields candidate pivot rows/columns.  A nonzero pivot minor mod p
  proves the rank lower bound outright (a nonzero minor mod p is nonzero
  over Z).  The matching upper bound is proved by expressing every
  non-pivot row as a rational combination of the pivot rows (coefficients
  recovered by CRT over several primes plus rational reconstruction) and
  then verifying that identity in exact integer arithmetic.  Certificates
  that fail for one prime are retried with another; if certification is
  not reached the matrix goes to Bareiss.  Every returned value is
  therefore exact regardless of which path produced it.

The modular arithmetic here is an internal certification device only;
geometric coefficients elsewhere in the package remain rational.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm

import numpy as np

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

# Verified 31-bit primes; products of prefixes serve as CRT moduli.
PRIMES = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
    2147483423, 2147483399, 2147483353, 2147483323, 2147483269,
    2147483249, 2147483237, 2147483179, 2147483171, 2147483137,
    2147483123, 2147483077, 2147483069, 2147483059, 2147483053,
    2147483033, 2147483029, 2147482951, 2147482949, 2147482943,
    2147482937, 2147482921, 2147482877, 2147482873, 2147482867,
    2147482859, 2147482819, 2147482817, 2147482811, 2147482801,
    2147482763, 2147482739, 2147482697, 2147482693, 2147482681,
    2147482663, 2147482661, 2147482621, 2147482591, 2147482583,
    2147482577, 2147482507, 2147482501, 2147482481, 2147482417,
    2147482409, 2147482367, 2147482361, 2147482349, 2147482343,
    2147482327, 2147482291, 2147482273, 2147482237, 2147482231,
    2147482223, 2147482121, 2147482093, 2147482091, 2147482081,
    2147482063, 2147482021, 2147481997, 2147481967, 2147481949,
    2147481937, 2147481907, 2147481901, 2147481899, 2147481893,
    2147481883, 2147481863, 2147481827, 2147481811, 2147481797,
    2147481793, 2147481673, 2147481629, 2147481571, 2147481563,
    2147481529, 2147481509, 2147481499, 2147481491, 2147481487,
    2147481373, 2147481367, 2147481359, 2147481353, 2147481337,
    2147481317, 2147481311, 2147481283, 2147481269, 2147481263,
    2147481247, 2147481209, 2147481199, 2147481179, 2147481173,
    2147481151, 2147481143, 2147481139, 2147481071, 2147481053,
    2147481031, 2147481019, 2147480989, 2147480971, 2147480969,
    2147480957, 2147480941, 2147480927, 2147480921, 2147480899,
    2147480897, 2147480893, 2147480849, 2147480843, 2147480837,
    2147480791, 2147480747, 2147480743, 2147480723, 2147480707,
    2147480683, 2147480677, 2147480651, 2147480641, 2147480623,
    2147480611, 2147480591, 2147480551, 2147480527, 2147480519,
    2147480507, 2147480471, 2147480459, 2147480437, 2147480429,
    2147480369, 2147480327, 2147480311, 2147480299, 2147480297,
    2147480227, 2147480219, 2147480207, 2147480197, 2147480161,
    2147480039, 2147480011, 2147480009, 2147479991, 2147479937,
    2147479907, 2147479897, 2147479891, 2147479879, 2147479823,
    2147479819, 2147479787, 2147479781, 2147479757, 2147479753,
    2147479751, 2147479681, 2147479657, 2147479643, 2147479637,
    2147479619, 2147479601, 2147479589, 2147479573, 2147479549,
    2147479547, 2147479531, 2147479517, 2147479513, 2147479507,
    2147479489, 2147479447, 2147479421, 2147479403, 2147479381,
    2147479361, 2147479349, 2147479339, 2147479307, 2147479273,
    2147479259, 2147479231, 2147479189, 2147479171, 2147479133,
    2147479129, 2147479121, 2147479097, 2147479091, 2147479079,
    2147479063, 2147479057, 2147479031, 2147479013, 2147478997,
    2147478967, 2147478961, 2147478959, 2147478937, 2147478919,
    2147478911, 2147478899, 2147478889, 2147478863,
)
# Below this cell count plain Bareiss beats the certification overhead.
_SMALL_CELLS = 4200
# Give up on span certificates beyond this many non-pivot rows.
_MAX_DEFECT = 64


def bareiss_rank(rows) -> int:
    """Exact rank by fraction-free elimination with column skipping.

    Pivots are chosen with minimal bit length to slow entry growth.  The
    update ``(pivot * a - lead * b) // prev`` is an exact division; it
    must be applied to every remaining row, including rows whose leading
    entry is zero (those still pick up the ``pivot / prev`` scaling).
    """
    M = [[mpz(v) for v in row] for row in rows]
    n = len(M)
    if n == 0 or not M[0]:
        return 0
    ncols = len(M[0])
    rank = 0
    prev = mpz(1)
    pr = 0
    for pc in range(ncols):
        piv = None
        best = None
        for r in range(pr, n):
            v = M[r][pc]
            if v:
                nb = v.bit_length()
                if best is None or nb < best:
                    best = nb
                    piv = r
                    if nb <= 8:
                        break
        if piv is None:
            continue
        if piv != pr:
            M[pr], M[piv] = M[piv], M[pr]
        pivval = M[pr][pc]
        row_p = M[pr]
        for r in range(pr + 1, n):
            row_r = M[r]
            lead = row_r[pc]
            if lead:
                M[r] = [(pivval * a - lead * b) // prev for a, b in zip(row_r, row_p)]
                M[r][pc] = mpz(0)
            elif prev != 1:
                M[r] = [(pivval * a) // prev for a in row_r]
            else:
                M[r] = [pivval * a for a in row_r]
        prev = pivval
        pr += 1
        rank += 1
        if pr == n:
            break
    return rank


def fraction_rank(rows) -> int:
    """Plain Gaussian elimination over Fraction; slow independent oracle."""
    M = [[Fraction(v) for v in row] for row in rows]
    n = len(M)
    if n == 0 or not M[0]:
        return 0
    ncols = len(M[0])
    rank = 0
    pr = 0
    for pc in range(ncols):
        piv = next((r for r in range(pr, n) if M[r][pc]), None)
        if piv is None:
            continue
        M[pr], M[piv] = M[piv], M[pr]
        pv = M[pr][pc]
        for r in range(pr + 1, n):
            f = M[r][pc] / pv
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[pr])]
        pr += 1
        rank += 1
        if pr == n:
            break
    return rank


def _strip_rows(rows):
    """Drop zero rows and divide each row by its content; rank-preserving."""
    out = []
    for row in rows:
        g = 0
        for v in row:
            g = gcd(g, v if v >= 0 else -v)
            if g == 1:
                break
        if g == 0:
            continue
        out.append([v // g for v in row] if g > 1 else list(row))
    return out


def _modp_matrix(rows, p: int) -> np.ndarray:
    return np.array([[v % p for v in row] for row in rows], dtype=np.int64)


def _modp_eliminate(A: np.ndarray, p: int):
    """Row echelon mod p.  Returns (rank, pivot_row_idx, pivot_col_idx).

    Row indices refer to the caller's original row order.  int64 is safe:
    a single product of residues stays below 2**62.
    """
    M = A % p
    n, m = M.shape
    perm = list(range(n))
    pr = 0
    piv_rows: list[int] = []
    piv_cols: list[int] = []
    for pc in range(m):
        col = M[pr:, pc]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        r = pr + int(nz[0])
        if r != pr:
            M[[pr, r]] = M[[r, pr]]
            perm[pr], perm[r] = perm[r], perm[pr]
        inv = pow(int(M[pr, pc]), p - 2, p)
        below = M[pr + 1 :, pc]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            factors = (below[nzb] * inv) % p
            M[pr + 1 + nzb, pc:] = (
                M[pr + 1 + nzb, pc:] - factors[:, None] * M[pr, pc:]
            ) % p
        piv_rows.append(perm[pr])
        piv_cols.append(pc)
        pr += 1
        if pr == n:
            break
    return pr, piv_rows, piv_cols


def _modp_solve_many(A: np.ndarray, B: np.ndarray, p: int):
    """Solve x A = b mod p for each row b of B; A square invertible mod p.

    Returns the k x r solution array, or None if A is singular mod p.
    """
    r = A.shape[0]
    aug = np.concatenate([A.T % p, B.T % p], axis=1)  # r x (r + k)
    for i in range(r):
        col = aug[i:, i]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return None
        j = i + int(nz[0])
        if j != i:
            aug[[i, j]] = aug[[j, i]]
        inv = pow(int(aug[i, i]), p - 2, p)
        aug[i, i:] = (aug[i, i:] * inv) % p
        below = aug[i + 1 :, i]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            aug[i + 1 + nzb, i:] = (
                aug[i + 1 + nzb, i:] - below[nzb][:, None] * aug[i, i:]
            ) % p
    for i in range(r - 1, -1, -1):
        above = aug[:i, i]
        nza = np.nonzero(above)[0]
        if nza.size:
            aug[nza, i:] = (aug[nza, i:] - above[nza][:, None] * aug[i, i:]) % p
    return aug[:, r:].T % p


def _rational_reconstruct(x: int, modulus: int):
    """Wang's rational reconstruction of x mod modulus, or None."""
    bound = isqrt((modulus - 1) // 2)
    r0, r1 = modulus, x % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r1 > bound or s1 == 0 or abs(s1) > bound:
        return None
    num, den = (r1, s1) if s1 > 0 else (-r1, -s1)
    if gcd(abs(num), den) != 1:
        return None
    return Fraction(num, den)


def _span_certificate(rows, piv_rows, nonpiv_rows, piv_cols, lead_prime_idx) -> bool:
    """Prove every non-pivot row lies in the rational span of pivot rows.

    The combination coefficients are recovered modulo a growing product
    of primes (incremental CRT) and rationally reconstructed row by row;
    a row counts as done only after the combination identity is checked
    in exact integer arithmetic.  An unlucky prime can therefore cost a
    retry but never produce a wrong answer.
    """
    r = len(piv_rows)
    k = len(nonpiv_rows)
    piv_mat = [rows[i] for i in piv_rows]
    ncols = len(rows[0])

    combined = [[0] * r for _ in range(k)]  # residues mod `modulus`
    modulus = 1
    remaining = set(range(k))
    retry_bits = {}  # row -> modulus bits before re-verifying a reconstruction
    since_attempt = 0
    for prime_idx, p in enumerate(PRIMES):
        if prime_idx == lead_prime_idx:
            continue
        A = np.array([[rows[i][c] % p for c in piv_cols] for i in piv_rows],
                     dtype=np.int64)
        B = np.array([[rows[i][c] % p for c in piv_cols] for i in nonpiv_rows],
                     dtype=np.int64)
        sol = _modp_solve_many(A, B, p)
        if sol is None:  # pivot block singular mod this prime: skip it
            continue
        if modulus == 1:
            modulus = p
            combined = [[int(sol[i, j]) for j in range(r)] for i in range(k)]
        else:
            inv = pow(modulus % p, p - 2, p)
            new_modulus = modulus * p
            for i in range(k):
                row = combined[i]
                for j in range(r):
                    x = row[j]
                    delta = ((int(sol[i, j]) - x) * inv) % p
                    row[j] = (x + modulus * delta) % new_modulus
            modulus = new_modulus
        since_attempt += 1
        if since_attempt < 6:
            continue
        since_attempt = 0
        for i in sorted(remaining):
            if retry_bits.get(i, 0) > modulus.bit_length():
                continue
            coeffs = []
            for j in range(r):
                frac = _rational_reconstruct(combined[i][j], modulus)
                if frac is None:
                    coeffs = None
                    break
                coeffs.append(frac)
            if coeffs is None:
                continue
            if _verify_combination(rows[nonpiv_rows[i]], piv_mat, coeffs, ncols):
                remaining.discard(i)
            else:
                # spurious reconstruction: wait for 64 more modulus bits
                retry_bits[i] = modulus.bit_length() + 64
        if not remaining:
            return True
    return False


def _verify_combination(target, piv_mat, coeffs, ncols) -> bool:
    """Exact check that target == sum(coeffs[j] * piv_mat[j])."""
    scale = lcm(*(f.denominator for f in coeffs)) if coeffs else 1
    acc = [mpz(0)] * ncols
    for f, row in zip(coeffs, piv_mat):
        g = mpz(f.numerator * (scale // f.denominator))
        if g:
            acc = [a + g * v for a, v in zip(acc, row)]
    s = mpz(scale)
    return all(a == s * v for a, v in zip(acc, target))


def rank(rows) -> int:
    """Exact rank of an integer matrix; certified fast paths, Bareiss fallback."""
    rows = _strip_rows(rows)
    n = len(rows)
    if n == 0:
        return 0
    m = len(rows[0])
    if n * m <= _SMALL_CELLS:
        return bareiss_rank(rows)

    bound = min(n, m)
    for idx in range(3):
        p = PRIMES[idx]
        rp, piv_rows, piv_cols = _modp_eliminate(_modp_matrix(rows, p), p)
        if rp == bound:
            # A full-size nonzero minor mod p: the rank is pinned exactly.
            return rp
        nonpiv = sorted(set(range(n)) - set(piv_rows))
        if len(nonpiv) <= _MAX_DEFECT and _span_certificate(
            rows, sorted(piv_rows), nonpiv, piv_cols, idx
        ):
            return rp
    return bareiss_rank(rows)


def has_full_row_rank(rows, tries: int = 2) -> bool:
    """True is a certificate (nonzero maximal minor mod p); False is only
    an absence of one and may rarely understate the rank."""
    n = len(rows)
    stripped = _strip_rows(rows)
    if len(stripped) < n:
        return False  # a zero row
    if n == 0:
        return True
    if len(stripped[0]) < n:
        return False
    for p in PRIMES[:tries]:
        rp, _, _ = _modp_eliminate(_modp_matrix(stripped, p), p)
        if rp == n:
            return True
    return False
