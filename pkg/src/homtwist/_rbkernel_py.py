"""Pure-Python twin of the compiled Rota-Baxter enumeration kernel.

Works on pre-scaled integer data (see homtwist.search for the scaling) so the
two kernels run the identical algorithm; this one uses Python's unbounded
ints and is therefore also the refuge for problems whose intermediate values
would overflow 64 bits.
"""

from __future__ import annotations

__all__ = ["enumerate_rb"]


def _rb_holds(d: int, r: list[int], c: list[int], t: int, de: int, dt: int) -> bool:
    """Scaled Rota-Baxter identity on every basis pair, early exit on failure.

    r is the candidate matrix flattened row-major (r[p*d + i] = R[p][i]); c is
    the structure tensor flattened as c[(p*d + q)*d + k].
    """
    for i in range(d):
        for j in range(d):
            u = [0] * d
            v = [0] * d
            for m in range(d):
                su = 0
                sv = 0
                for p in range(d):
                    su += r[p * d + i] * c[(p * d + j) * d + m]
                    sv += r[p * d + j] * c[(i * d + p) * d + m]
                u[m] = su
                v[m] = sv
            w_base = (i * d + j) * d
            for k in range(d):
                lhs = 0
                for p in range(d):
                    rpi = r[p * d + i]
                    if rpi:
                        base = p * d
                        for q in range(d):
                            lhs += rpi * r[q * d + j] * c[(base + q) * d + k]
                rhs_main = 0
                rhs_theta = 0
                for m in range(d):
                    rkm = r[k * d + m]
                    if rkm:
                        rhs_main += rkm * (u[m] + v[m])
                        rhs_theta += rkm * c[w_base + m]
                if dt * (lhs - rhs_main) != de * t * rhs_theta:
                    return False
    return True


def enumerate_rb(dim: int, entries: list[int], c_flat: list[int], theta_scaled: int,
                 de: int, dt: int, limit: int = -1) -> list[tuple[int, ...]]:
    """All candidate matrices over the entry grid satisfying the identity.

    Candidates are visited in lexicographic order of their flattened entries
    (entries must be sorted); each hit is reported as the tuple of entry
    indices.  A nonnegative limit stops the scan after that many hits.
    """
    n2 = dim * dim
    n_entries = len(entries)
    results: list[tuple[int, ...]] = []
    digits = [0] * n2
    r = [entries[0]] * n2
    while True:
        if _rb_holds(dim, r, c_flat, theta_scaled, de, dt):
            results.append(tuple(digits))
            if 0 <= limit == len(results):
                break
        pos = n2 - 1
        while pos >= 0 and digits[pos] == n_entries - 1:
            digits[pos] = 0
            r[pos] = entries[0]
            pos -= 1
        if pos < 0:
            break
        digits[pos] += 1
        r[pos] = entries[digits[pos]]
    return results
