"""Pole and singular-locus data for the projected tensor vector map.

For an integral weight ``nu`` the vector ``pr(e_nu (x) v_tau)`` is a rational
function of ``tau``.  Its possible poles lie on finitely many hyperplanes
``<tau + rho, alpha^vee> = n``; this module enumerates them, forms their
product, and solves the affine systems that cut out the exceptional loci.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import repweights
from .errors import DomainError
from .ratfield import FactoredRational, LinearForm
from .rootsys import Weight


@dataclass(frozen=True)
class HyperplaneDatum:
    """The hyperplane ``<tau, alpha^vee> = m`` for a positive root ``alpha``."""

    alpha: object
    m: int

    def form(self):
        return LinearForm.coroot(self.alpha, self.m)

    def to_json(self):
        return {"alpha": self.alpha.name(), "m": self.m}


@dataclass(frozen=True)
class AffineSubspace:
    """Common zero set of ``equations``; ``witness`` is None when empty."""

    equations: tuple
    codim: int
    witness: object

    @property
    def is_empty(self):
        return self.witness is None

    def contains(self, point):
        return all(eq(point) == 0 for eq in self.equations)

    def to_json(self):
        return {
            "equations": [{"coeffs": list(e.coeffs), "shift": str(e.shift)} for e in self.equations],
            "codim": self.codim,
            "witness": None if self.witness is None else Weight(self.witness).to_json(),
        }


def solve_affine(rows, rhs):
    """Exact Gaussian elimination for ``rows @ x = rhs``.

    Returns ``(rank, witness)``; ``witness`` has free variables set to zero and is
    None when the system is inconsistent.
    """
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in m):
        return r, None
    x = [Fraction(0)] * ncols
    for i, col in enumerate(pivots):
        x[col] = m[i][-1]
    return r, x


def _subspace(forms):
    """AffineSubspace cut out by the canonical forms (each ``= 0``)."""
    rows = [f.coeffs for f in forms]
    rank, witness = solve_affine(rows, [-f.shift for f in forms])
    return AffineSubspace(tuple(forms), rank, witness)


def n_nu(system, nu):
    """``{(alpha, m) : -<rho, alpha^vee> <= m < -<nu + rho, alpha^vee>}`` over positive roots."""
    nu = Weight(nu)
    if not nu.is_integral():
        raise DomainError(f"{nu} is not integral")
    out = []
    rho = system.rho()
    for a in system.positive_roots:
        lo = -int(system.pairing(rho, a))
        hi = -int(system.pairing(nu + rho, a))
        out.extend(HyperplaneDatum(a, m) for m in range(lo, hi))
    return out


def delta_nu(system, nu):
    """Product of the hyperplane equations ``<tau, alpha^vee> - m`` over ``n_nu``."""
    factors = {}
    for d in n_nu(system, nu):
        f = d.form()
        factors[f] = factors.get(f, 0) + 1
    return FactoredRational(1, factors)


def hyperplane_family(system, nu):
    return [d.form() for d in n_nu(system, nu)]


def singular_set_S(system, nu, multiset=None):
    """Solution sets of ``w . (tau + nu) = tau + mu`` for ``w`` neither ``e`` nor a reflection.

    ``mu`` runs over the weights of ``E(nu)`` strictly above ``nu``.  Only
    nonempty solution sets are returned, without duplicates.
    """
    nu = Weight(nu)
    above = repweights.weights_above(system, nu, multiset)
    rho = system.rho()
    r = system.rank
    seen = {}
    for w in system.weyl_group():
        if w.is_identity() or system.is_reflection(w):
            continue
        mat = w.matrix
        lhs = [[mat[i][j] - int(i == j) for j in range(r)] for i in range(r)]
        base = w.act(nu + rho)
        for mu in above:
            # (w - 1) tau = mu + rho - w(nu + rho)
            rhs = [mu[i] + rho[i] - base[i] for i in range(r)]
            rank, witness = solve_affine(lhs, rhs)
            if witness is None:
                continue
            forms = _row_forms(lhs, rhs)
            key = _space_key(forms)
            if key not in seen:
                seen[key] = _subspace(forms)
    return list(seen.values())


def _row_forms(lhs, rhs):
    forms = []
    for row, b in zip(lhs, rhs):
        scale, f = LinearForm.make(row, -Fraction(b))
        if f is not None:
            forms.append(f)
    return forms


def _space_key(forms):
    """Reduced row echelon form of the augmented system, as a hashable key."""
    if not forms:
        return ()
    n = len(forms[0].coeffs)
    m = [[Fraction(c) for c in f.coeffs] + [Fraction(f.shift)] for f in forms]
    r = 0
    for col in range(n + 1):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return tuple(tuple(row) for row in m[:r])


def _pairwise(pairs):
    seen = {}
    for f, g in pairs:
        if f == g:
            continue
        space = _subspace([f, g])
        if space.is_empty:
            continue
        key = _space_key([f, g])
        seen.setdefault(key, space)
    return list(seen.values())


def s1(system, nu):
    """Nonempty pairwise intersections of distinct hyperplanes of ``n_nu``."""
    forms = hyperplane_family(system, nu)
    return _pairwise(combinations(forms, 2))


def default_bound(system, nu):
    return max(abs(int(system.pairing(Weight(nu), a))) for a in system.positive_roots) + 2


def s2(system, nu, bound_m=None):
    """``s1`` plus intersections of the ``n_nu`` hyperplanes with other integral hyperplanes.

    The second hyperplane ``<tau, beta^vee> = m`` ranges over ``|m| <= bound_m``.
    """
    if bound_m is None:
        bound_m = default_bound(system, nu)
    data = n_nu(system, nu)
    inside = {(d.alpha, d.m) for d in data}
    others = [LinearForm.coroot(b, m) for b in system.positive_roots
              for m in range(-bound_m, bound_m + 1) if (b, m) not in inside]
    pairs = [(d.form(), g) for d in data for g in others]
    found = {(_space_key([s.equations[0], s.equations[1]])): s for s in s1(system, nu)}
    for s in _pairwise(pairs):
        found.setdefault(_space_key(list(s.equations)), s)
    return list(found.values())


def hyperplanes_meeting_S(system, nu, multiset=None):
    """Pairs (hyperplane datum, subspace of S) with nonempty intersection."""
    hits = []
    for space in singular_set_S(system, nu, multiset):
        for d in n_nu(system, nu):
            sub = _subspace(list(space.equations) + [d.form()])
            if not sub.is_empty:
                hits.append((d, sub))
    return hits


# --------------------------------------------------------------------------
# numerical criteria for Verma modules


def is_verma_simple(system, lam):
    """``<lam + rho, beta^vee> <= 0`` for every positive root with integral pairing."""
    lam = Weight(lam)
    shifted = lam + system.rho()
    return all(system.pairing(shifted, b) <= 0 for b in system.positive_roots
               if system.pairing(lam, b).denominator == 1)


def is_verma_projective(system, lam):
    """No ``<lam + rho, alpha^vee>`` is a negative integer."""
    shifted = Weight(lam) + system.rho()
    for a in system.positive_roots:
        v = system.pairing(shifted, a)
        if v.denominator == 1 and v < 0:
            return False
    return True


def central_char_equal(system, lam, mu):
    """Whether ``mu`` lies in the dot orbit of ``lam``.

    Compares dominant representatives of ``lam + rho`` and ``mu + rho``; every
    Weyl orbit meets the closed dominant chamber in exactly one point.
    """
    rho = system.rho()
    a, _ = system.dominant_representative(Weight(lam) + rho)
    b, _ = system.dominant_representative(Weight(mu) + rho)
    return a == b


def mu_zero(system, tau0, alpha, nu):
    """``nu - <tau0 + nu + rho, alpha^vee> alpha``."""
    tau0, nu = Weight(tau0), Weight(nu)
    if system.pairing(tau0, alpha).denominator != 1:
        raise DomainError(f"<{tau0}, {alpha.name()}^vee> is not an integer")
    k = system.pairing(tau0 + nu + system.rho(), alpha)
    return nu - alpha.weight * k
