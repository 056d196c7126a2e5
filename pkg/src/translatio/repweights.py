"""Weights of finite-dimensional irreducible representations.

Multiplicities of dominant weights come from Freudenthal's recursion run in
pure integer arithmetic (one of the kernels in ``_kernels``); the full
multiset is the union of Weyl orbits of the dominant weights.
"""

import os
from fractions import Fraction

import numpy as np

from . import _kernels
from .errors import DomainError, ResourceError
from .rootsys import Weight

DEFAULT_DIMENSION_BOUND = 10**6


def dimension_bound():
    raw = os.environ.get("TRANSLATIO_DIMENSION_BOUND")
    return int(raw) if raw and raw.strip() else DEFAULT_DIMENSION_BOUND


class WeightMultiset:
    """Map from weights to positive multiplicities; iteration is in lexicographic order."""

    def __init__(self, system, entries, highest):
        self.system = system
        self.highest = Weight(highest)
        self.entries = {Weight(k): int(v) for k, v in sorted(entries.items()) if v}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, weight):
        return Weight(weight) in self.entries

    def __getitem__(self, weight):
        return self.entries.get(Weight(weight), 0)

    def items(self):
        return self.entries.items()

    def dimension(self):
        return sum(self.entries.values())

    def support(self):
        return list(self.entries)

    def restrict(self, predicate):
        return WeightMultiset(self.system, {k: v for k, v in self.entries.items() if predicate(k)},
                              self.highest)

    def __eq__(self, other):
        return isinstance(other, WeightMultiset) and self.entries == other.entries

    def __repr__(self):
        return f"WeightMultiset({self.system.label}, highest={self.highest}, dim={self.dimension()})"

    def to_json(self):
        return [{"coords": k.to_json(), "mult": v} for k, v in self.entries.items()]


def dominant_representative(system, nu):
    """``(lam_plus, w)`` with ``w`` acting linearly, ``w nu = lam_plus`` dominant."""
    nu = Weight(nu)
    if not nu.is_integral():
        raise DomainError(f"weight {nu} is not integral")
    return system.dominant_representative(nu)


def weyl_dimension(system, nu):
    """Weyl's dimension formula for the irreducible module with extremal weight ``nu``."""
    lam, _ = dominant_representative(system, nu)
    rho = system.rho()
    num, den = Fraction(1), Fraction(1)
    for a in system.positive_roots:
        num *= system.pairing(lam + rho, a)
        den *= system.pairing(rho, a)
    value = num / den
    assert value.denominator == 1
    return int(value)


def _box_limits(system, lam):
    # lam - mu = sum c_j alpha_j with mu dominant forces c_j <= (A^-1 lam)_j
    return np.array([int(c) for c in system.to_root_coords(lam)], dtype=np.int64)


def dominant_weights(system, lam):
    """Dominant weights of the module with highest weight ``lam`` and their depths.

    Returns ``(weights, depth)`` as int64 arrays sorted by height of ``lam - mu``.
    Every dominant weight below ``lam`` in the root-lattice order occurs in the module.
    """
    cartan = system._cartan_np
    lam_np = np.array(lam, dtype=np.int64)
    w, c = _kernels.box_dominant(lam_np, cartan, _box_limits(system, lam))
    order = np.lexsort(tuple(c.T[::-1]) + (c.sum(axis=1),))
    return w[order], c[order]


def dominant_multiplicities(system, lam):
    """``{dominant weight: multiplicity}`` via Freudenthal's recursion."""
    lam = Weight(lam)
    ints = lam.as_ints()
    if any(x < 0 for x in ints):
        raise DomainError(f"{lam} is not dominant")
    dom, depth = dominant_weights(system, ints)
    bound = int(max([0] + [system.pairing(lam, a) for a in system.positive_roots]))
    if not _kernels.radix_ok(bound, system.rank):
        raise ResourceError("weight coordinates too large for the integer kernels")
    keys = _kernels.keys(dom, bound)
    order = np.argsort(keys, kind="mergesort")
    pos_w = np.array([a.weight for a in system.positive_roots], dtype=np.int64)
    pos_c = np.array([a.root_coords for a in system.positive_roots], dtype=np.int64)
    dsym = np.array(system.symmetrizer, dtype=np.int64)
    rho = np.ones(system.rank, dtype=np.int64)
    mult = _kernels.freudenthal(dom, depth, keys[order], order.astype(np.int64),
                                np.array(ints, dtype=np.int64), rho, pos_w, pos_c, dsym,
                                system._cartan_np, bound)
    if (mult < 0).any():
        raise AssertionError("Freudenthal recursion produced a non-integral multiplicity")
    return {Weight(row): int(m) for row, m in zip(dom.tolist(), mult.tolist()) if m > 0}


def orbit(system, weight):
    """Weyl orbit of an integral weight (linear action)."""
    lam, _ = dominant_representative(system, weight)
    ints = np.array(lam.as_ints(), dtype=np.int64)
    bound = int(max([0] + [abs(system.pairing(lam, a)) for a in system.positive_roots]))
    points, _, _ = _kernels.orbit(ints, system._cartan_np, bound, system.group_order())
    return [Weight(p) for p in points.tolist()]


def weight_multiset(system, nu):
    """Weights of the irreducible module ``E(nu)`` whose extremal weight is ``nu``."""
    lam, _ = dominant_representative(system, nu)
    dim = weyl_dimension(system, lam)
    if dim > dimension_bound():
        raise ResourceError(f"dim E({lam}) = {dim} exceeds the dimension bound {dimension_bound()}")
    entries = {}
    for mu, m in dominant_multiplicities(system, lam).items():
        for w in orbit(system, mu):
            entries[w] = m
    return WeightMultiset(system, entries, lam)


def is_extremal(system, nu, multiset=None):
    lam, _ = dominant_representative(system, nu)
    ms = multiset if multiset is not None else weight_multiset(system, lam)
    return ms.highest == lam


def weights_above(system, nu, multiset=None):
    """Weights ``mu`` of ``E(nu)`` with ``mu > nu`` strictly in the dominance order."""
    nu = Weight(nu)
    lam, _ = dominant_representative(system, nu)
    ms = multiset if multiset is not None else weight_multiset(system, lam)
    if ms.highest != lam:
        raise DomainError(f"{nu} is not an extremal weight of E({ms.highest})")
    return ms.restrict(lambda mu: mu != nu and system.dominance_leq(nu, mu))


def alpha_string(system, nu, root, multiset):
    """Maximal progression ``nu + k alpha`` inside the support of ``multiset``."""
    nu = Weight(nu)
    if nu not in multiset:
        raise DomainError(f"{nu} is not a weight of {multiset!r}")
    step = root.weight
    lo = nu
    while lo - step in multiset:
        lo = lo - step
    out = [lo]
    while out[-1] + step in multiset:
        out.append(out[-1] + step)
    return out
