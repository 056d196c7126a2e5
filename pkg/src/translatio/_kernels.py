"""Integer kernels for Weyl orbits and weight multiplicities.

Every kernel exists twice: a loop version compiled with ``numba.njit`` and a
vectorised pure-numpy version.  ``TRANSLATIO_JIT=0`` (or a missing numba)
selects the numpy path for the public names at the bottom of this module.
Both paths are exact: all arithmetic is in int64 and callers guarantee the
coordinate bound used for hashing.

Conventions: weights are int64 rows of fundamental-weight coordinates and
``cartan[:, i]`` holds the simple root ``alpha_i`` in those coordinates, so the
simple reflection is ``s_i(x) = x - x[i] * cartan[:, i]``.
"""

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _jit_requested():
    flag = os.environ.get("TRANSLATIO_JIT", "1").strip().lower()
    return flag not in ("0", "false", "no", "off")


USE_NUMBA = numba is not None and _jit_requested()


def radix_ok(bound, rank):
    """Whether mixed-radix keys with digits in [-bound, bound] fit in int64."""
    return (2 * bound + 1) ** rank < 2**62


# --------------------------------------------------------------------------
# loop versions (numba-compatible subset)


def _to_dominant_loop(vecs, cartan):
    out = vecs.copy()
    k, r = out.shape
    for row in range(k):
        while True:
            i = -1
            for j in range(r):
                if out[row, j] < 0:
                    i = j
                    break
            if i < 0:
                break
            c = out[row, i]
            for j in range(r):
                out[row, j] -= c * cartan[j, i]
    return out


def _keys_loop(vecs, bound):
    k, r = vecs.shape
    base = 2 * bound + 1
    keys = np.empty(k, dtype=np.int64)
    for row in range(k):
        acc = 0
        for j in range(r - 1, -1, -1):
            acc = acc * base + (vecs[row, j] + bound)
        keys[row] = acc
    return keys


def _orbit_loop(start, cartan, bound, capacity):
    r = start.shape[0]
    points = np.zeros((capacity, r), dtype=np.int64)
    parent = np.full(capacity, -1, dtype=np.int64)
    gen = np.full(capacity, -1, dtype=np.int64)
    points[0] = start
    n = 1
    lo, hi = 0, 1
    base = 2 * bound + 1
    while lo < hi:
        m = 0
        cand = np.zeros(((hi - lo) * r, r), dtype=np.int64)
        cpar = np.zeros((hi - lo) * r, dtype=np.int64)
        cgen = np.zeros((hi - lo) * r, dtype=np.int64)
        for p in range(lo, hi):
            for i in range(r):
                c = points[p, i]
                if c > 0:
                    for j in range(r):
                        cand[m, j] = points[p, j] - c * cartan[j, i]
                    cpar[m] = p
                    cgen[m] = i
                    m += 1
        if m == 0:
            break
        keys = np.empty(m, dtype=np.int64)
        for q in range(m):
            acc = 0
            for j in range(r - 1, -1, -1):
                acc = acc * base + (cand[q, j] + bound)
            keys[q] = acc
        order = np.argsort(keys, kind="mergesort")
        lo = n
        last = -1
        for q in range(m):
            idx = order[q]
            if q > 0 and keys[idx] == last:
                continue
            last = keys[idx]
            if n >= capacity:
                return points[:0], parent[:0], gen[:0]
            points[n] = cand[idx]
            parent[n] = cpar[idx]
            gen[n] = cgen[idx]
            n += 1
        hi = n
    return points[:n], parent[:n], gen[:n]


def _freudenthal_loop(dom, depth_c, keys_sorted, key_pos, lam, rho, pos_w, pos_c,
                      dsym, cartan, bound):
    n, r = dom.shape
    p = pos_w.shape[0]
    base = 2 * bound + 1
    mult = np.zeros(n, dtype=np.int64)
    nu = np.zeros(r, dtype=np.int64)
    d = np.zeros(r, dtype=np.int64)
    for q in range(n):
        if q == 0:
            mult[0] = 1
            continue
        denom = 0
        for j in range(r):
            denom += depth_c[q, j] * (lam[j] + dom[q, j] + 2 * rho[j]) * dsym[j]
        total = 0
        for a in range(p):
            k = 1
            while True:
                for j in range(r):
                    nu[j] = dom[q, j] + k * pos_w[a, j]
                    d[j] = nu[j]
                # dominant representative of nu
                while True:
                    i = -1
                    for j in range(r):
                        if d[j] < 0:
                            i = j
                            break
                    if i < 0:
                        break
                    c = d[i]
                    for j in range(r):
                        d[j] -= c * cartan[j, i]
                inside = True
                for j in range(r):
                    if d[j] > bound:
                        inside = False
                if not inside:
                    break
                key = 0
                for j in range(r - 1, -1, -1):
                    key = key * base + (d[j] + bound)
                pos = np.searchsorted(keys_sorted, key)
                if pos >= keys_sorted.shape[0] or keys_sorted[pos] != key:
                    break
                m = mult[key_pos[pos]]
                ip = 0
                for j in range(r):
                    ip += pos_c[a, j] * nu[j] * dsym[j]
                total += m * ip
                k += 1
        num = 2 * total
        if denom <= 0 or num % denom != 0:
            mult[q] = -1
        else:
            mult[q] = num // denom
    return mult


def _box_dominant_loop(lam, cartan, limits):
    r = lam.shape[0]
    total = 1
    for j in range(r):
        total *= limits[j] + 1
    out_w = np.zeros((total, r), dtype=np.int64)
    out_c = np.zeros((total, r), dtype=np.int64)
    c = np.zeros(r, dtype=np.int64)
    n = 0
    for _ in range(total):
        ok = True
        for i in range(r):
            v = lam[i]
            for j in range(r):
                v -= cartan[i, j] * c[j]
            if v < 0:
                ok = False
                break
        if ok:
            for i in range(r):
                v = lam[i]
                for j in range(r):
                    v -= cartan[i, j] * c[j]
                out_w[n, i] = v
                out_c[n, i] = c[i]
            n += 1
        # odometer increment
        for j in range(r):
            c[j] += 1
            if c[j] <= limits[j]:
                break
            c[j] = 0
    return out_w[:n], out_c[:n]


# --------------------------------------------------------------------------
# pure numpy versions


def _to_dominant_np(vecs, cartan):
    out = np.array(vecs, dtype=np.int64, copy=True)
    while True:
        neg = out < 0
        rows = np.flatnonzero(neg.any(axis=1))
        if rows.size == 0:
            return out
        i = neg[rows].argmax(axis=1)
        c = out[rows, i]
        out[rows] -= c[:, None] * cartan[:, i].T


def _keys_np(vecs, bound):
    base = 2 * bound + 1
    r = vecs.shape[1]
    weights = base ** np.arange(r, dtype=np.int64)
    return (vecs + bound) @ weights


def _orbit_np(start, cartan, bound, capacity):
    r = start.shape[0]
    layers = [start[None, :].astype(np.int64)]
    parents = [np.array([-1], dtype=np.int64)]
    gens = [np.array([-1], dtype=np.int64)]
    offset = 0
    total = 1
    while True:
        layer = layers[-1]
        pidx, gidx = np.nonzero(layer > 0)
        if pidx.size == 0:
            break
        c = layer[pidx, gidx]
        cand = layer[pidx] - c[:, None] * cartan[:, gidx].T
        keys = _keys_np(cand, bound)
        # first occurrences in key order, the same ordering as the loop version
        _, first = np.unique(keys, return_index=True)
        layers.append(cand[first])
        parents.append(pidx[first] + offset)
        gens.append(gidx[first])
        offset += layer.shape[0]
        total += first.size
        if total > capacity:
            empty = np.zeros((0, r), dtype=np.int64)
            return empty, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.vstack(layers), np.concatenate(parents), np.concatenate(gens)


def _freudenthal_np(dom, depth_c, keys_sorted, key_pos, lam, rho, pos_w, pos_c,
                    dsym, cartan, bound):
    n, r = dom.shape
    kmax = int(max(1, 2 * bound + 1))
    ks = np.arange(1, kmax + 1, dtype=np.int64)
    mult = np.zeros(n, dtype=np.int64)
    if n:
        mult[0] = 1
    # inner products (nu, alpha) use the symmetrised form (omega_i, alpha_j) = delta_ij d_j
    weighted_c = pos_c * dsym[None, :]
    for q in range(1, n):
        mu = dom[q]
        denom = int(np.sum(depth_c[q] * (lam + mu + 2 * rho) * dsym))
        nus = mu[None, None, :] + ks[None, :, None] * pos_w[:, None, :]
        flat = nus.reshape(-1, r)
        d = _to_dominant_np(flat, cartan)
        inside = (d <= bound).all(axis=1)
        keys = _keys_np(np.where(inside[:, None], d, 0), bound)
        pos = np.searchsorted(keys_sorted, keys)
        pos_c_ = np.minimum(pos, keys_sorted.size - 1)
        found = inside & (keys_sorted[pos_c_] == keys)
        found = found.reshape(pos_w.shape[0], kmax)
        # alpha-strings are unbroken: stop at the first miss
        alive = np.cumprod(found, axis=1).astype(bool)
        m = np.where(alive.ravel(), mult[key_pos[pos_c_]], 0).reshape(alive.shape)
        ip = np.einsum("akj,aj->ak", nus, weighted_c)
        num = 2 * int(np.sum(m * ip))
        if denom <= 0 or num % denom:
            mult[q] = -1
        else:
            mult[q] = num // denom
    return mult


def _box_dominant_np(lam, cartan, limits):
    r = lam.shape[0]
    grids = np.meshgrid(*[np.arange(l + 1, dtype=np.int64) for l in limits], indexing="ij")
    # odometer order of the loop version: first coordinate varies fastest
    c = np.stack([g.transpose(tuple(range(r))[::-1]).ravel() for g in grids], axis=1)
    w = lam[None, :] - c @ cartan.T
    keep = (w >= 0).all(axis=1)
    return w[keep], c[keep]


# --------------------------------------------------------------------------
# dispatch

if numba is not None:
    _njit = numba.njit(cache=True)
    to_dominant_nb = _njit(_to_dominant_loop)
    keys_nb = _njit(_keys_loop)
    orbit_nb = _njit(_orbit_loop)
    freudenthal_nb = _njit(_freudenthal_loop)
    box_dominant_nb = _njit(_box_dominant_loop)
else:  # pragma: no cover
    to_dominant_nb = _to_dominant_loop
    keys_nb = _keys_loop
    orbit_nb = _orbit_loop
    freudenthal_nb = _freudenthal_loop
    box_dominant_nb = _box_dominant_loop

to_dominant_np = _to_dominant_np
keys_np = _keys_np
orbit_np = _orbit_np
freudenthal_np = _freudenthal_np
box_dominant_np = _box_dominant_np

if USE_NUMBA:
    to_dominant, keys, orbit, freudenthal, box_dominant = (
        to_dominant_nb, keys_nb, orbit_nb, freudenthal_nb, box_dominant_nb)
else:
    to_dominant, keys, orbit, freudenthal, box_dominant = (
        to_dominant_np, keys_np, orbit_np, freudenthal_np, box_dominant_np)
