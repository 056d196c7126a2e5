"""Brute-force rank-one oracle.

Works inside ``E(N_1) (x) ... (x) E(N_k) (x) M(lam)`` one weight space at a
time, with coefficients in the rational function field ``Q(t)``.  Central
character projections are Casimir spectral projectors; nothing here uses the
closed formulas it is meant to check.

Basis conventions: ``E(N)`` has basis ``u_0, ..., u_N`` with ``u_i`` of
weight ``N - 2i``, ``f u_i = (i + 1) u_{i+1}`` and ``e u_i = (N - i + 1) u_{i-1}``
(divided powers of ``f`` applied to the highest weight vector).  The Verma
module ``M(lam)`` has basis ``v_j = f^j v_lam``.
"""

import math
from fractions import Fraction

from sympy import QQ
from sympy.polys.fields import field

FIELD, T = field("t", QQ)


def ratfunc(value):
    """Coerce an int, Fraction or field element into ``Q(t)``."""
    if isinstance(value, Fraction):
        return FIELD(QQ(value.numerator, value.denominator))
    return FIELD(value)


def _as_int(value):
    """Integer value of a constant field element, else None."""
    value = ratfunc(value)
    if value == 0:
        return 0
    if value.denom != 1 or not value.numer.is_ground:
        return None
    q = value.numer.LC
    return int(q) if q == int(q) else None


def casimir_eigenvalue(lam):
    """Eigenvalue of ``ef + fe + h^2/2`` on a highest weight vector of weight ``lam``."""
    lam = ratfunc(lam)
    return lam * lam / 2 + lam


class Sl2Rep:
    """The irreducible representation ``E(N)`` with integer matrices for ``e, f, h``."""

    def __init__(self, N):
        if N < 0:
            raise ValueError("N must be non-negative")
        self.N = N
        size = N + 1
        self.weights = [N - 2 * i for i in range(size)]
        self.e = [[0] * size for _ in range(size)]
        self.f = [[0] * size for _ in range(size)]
        self.h = [[0] * size for _ in range(size)]
        for i in range(size):
            self.h[i][i] = N - 2 * i
            if i + 1 < size:
                self.f[i + 1][i] = i + 1
            if i > 0:
                self.e[i - 1][i] = N - i + 1

    def index_of_weight(self, weight):
        i, r = divmod(self.N - weight, 2)
        if r or not 0 <= i <= self.N:
            raise ValueError(f"{weight} is not a weight of E({self.N})")
        return i


def _mat_exp_nilpotent(m):
    size = len(m)
    result = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    term = [row[:] for row in result]
    for k in range(1, size + 1):
        term = [[sum(term[i][p] * m[p][j] for p in range(size)) / k for j in range(size)]
                for i in range(size)]
        result = [[result[i][j] + term[i][j] for j in range(size)] for i in range(size)]
    return result


def _mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][p] * b[p][j] for p in range(n)) for j in range(n)] for i in range(n)]


def sl2_weyl_rep(N):
    """Matrix of ``exp(e) exp(-f) exp(e)`` on ``E(N)``; columns are images of ``u_i``."""
    rep = Sl2Rep(N)
    ee = _mat_exp_nilpotent(rep.e)
    ef = _mat_exp_nilpotent([[-x for x in row] for row in rep.f])
    m = _mat_mul(_mat_mul(ee, ef), ee)
    assert all(x.denominator == 1 for row in m for x in row)
    return [[int(x) for x in row] for row in m]


class TensorModel:
    """``E(N_1) (x) ... (x) E(N_k)``, optionally tensored with ``M(lam)`` on the right.

    Vectors are dicts ``{basis index tuple: coefficient}``; the last index is
    the Verma degree ``j`` when a Verma factor is present.
    """

    def __init__(self, dims, lam=None):
        self.reps = [Sl2Rep(n) for n in dims]
        self.lam = None if lam is None else ratfunc(lam)

    @property
    def has_verma(self):
        return self.lam is not None

    def top_weight(self):
        top = sum(r.N for r in self.reps)
        return top + self.lam if self.has_verma else FIELD(top)

    def weight(self, idx):
        w = sum(r.weights[i] for r, i in zip(self.reps, idx))
        if self.has_verma:
            return self.lam + w - 2 * idx[-1]
        return FIELD(w)

    # ---- operators (coproduct action)

    def _apply(self, vec, op):
        out = {}
        k = len(self.reps)
        for idx, c in vec.items():
            for a, rep in enumerate(self.reps):
                i = idx[a]
                if op == "e" and i > 0:
                    new, coef = idx[:a] + (i - 1,) + idx[a + 1:], rep.e[i - 1][i]
                elif op == "f" and i < rep.N:
                    new, coef = idx[:a] + (i + 1,) + idx[a + 1:], rep.f[i + 1][i]
                else:
                    continue
                out[new] = out.get(new, 0) + c * coef
            if self.has_verma:
                j = idx[k]
                if op == "f":
                    new = idx[:k] + (j + 1,)
                    out[new] = out.get(new, 0) + c
                elif j > 0:
                    coef = j * (self.lam - j + 1)
                    new = idx[:k] + (j - 1,)
                    out[new] = out.get(new, 0) + c * coef
        return {i: c for i, c in out.items() if c != 0}

    def e(self, vec):
        return self._apply(vec, "e")

    def f(self, vec):
        return self._apply(vec, "f")

    def casimir(self, vec):
        """``2 f e + h + h^2 / 2``."""
        out = {i: 2 * c for i, c in self.f(self.e(vec)).items()}
        for idx, c in vec.items():
            w = self.weight(idx)
            out[idx] = out.get(idx, 0) + c * (w + w * w / 2)
        return {i: c for i, c in out.items() if c != 0}

    def weight_space(self, weight):
        """Basis of the weight space of the given weight (a field element)."""
        weight = ratfunc(weight)
        basis = []

        def rec(prefix, acc):
            a = len(prefix)
            if a == len(self.reps):
                if self.has_verma:
                    d = _as_int(self.lam + acc - weight)
                    if d is not None and d >= 0 and d % 2 == 0:
                        basis.append(prefix + (d // 2,))
                elif FIELD(acc) == weight:
                    basis.append(prefix)
                return
            for i in range(self.reps[a].N + 1):
                rec(prefix + (i,), acc + self.reps[a].weights[i])

        rec((), 0)
        return basis

    def candidate_highest_weights(self, weight):
        """Highest weights of Verma subquotients that can meet the given weight space."""
        weight = ratfunc(weight)
        d = _as_int(self.top_weight() - weight)
        assert d is not None and d >= 0
        ks = [weight + 2 * k for k in range(d // 2 + 1)]
        if self.has_verma:
            return ks
        # finite tensor products only contain irreducibles with non-negative highest weight
        return [k for k in ks if _as_int(k) >= 0]

    def project(self, vec, target_hw):
        """Component of ``vec`` (a weight vector) with Casimir eigenvalue ``c(target_hw)``."""
        if not vec:
            return {}
        weight = self.weight(next(iter(vec)))
        target = casimir_eigenvalue(target_hw)
        others = []
        present = False
        for k in self.candidate_highest_weights(weight):
            c = casimir_eigenvalue(k)
            if c == target:
                present = True
            elif c not in others:
                others.append(c)
        if not present:
            return {}
        out = dict(vec)
        for c in others:
            denom = target - c
            if denom == 0:
                raise AssertionError("coincident Casimir eigenvalues")
            omega = self.casimir(out)
            out = {i: (omega.get(i, 0) - c * out.get(i, 0)) / denom
                   for i in set(omega) | set(out)}
            out = {i: v for i, v in out.items() if v != 0}
        return out

    def projector_matrix(self, weight, target_hw):
        """Matrix of :meth:`project` on the weight space, columns indexed like ``weight_space``."""
        basis = self.weight_space(weight)
        cols = [self.project({b: FIELD(1)}, target_hw) for b in basis]
        return basis, [[col.get(b, FIELD(0)) for col in cols] for b in basis]

    def casimir_matrix(self, weight):
        basis = self.weight_space(weight)
        cols = [self.casimir({b: FIELD(1)}) for b in basis]
        return basis, [[col.get(b, FIELD(0)) for col in cols] for b in basis]


def _tensor(left_index, coeff, vec):
    """``u_left (x) vec`` with the new factor on the left."""
    return {(left_index,) + idx: coeff * c for idx, c in vec.items()}


def _weyl_image(N, i, y_is_s):
    """``{index: coefficient}`` for ``y u_i`` in ``E(N)``."""
    if not y_is_s:
        return {i: 1}
    m = sl2_weyl_rep(N)
    return {p: m[p][i] for p in range(N + 1) if m[p][i]}


def _translate(model_dims, lam, vec_factor, inner, target_hw):
    """``pr(vec_factor (x) inner)`` with ``vec_factor`` in the leftmost new factor."""
    model = TensorModel(model_dims, lam)
    vec = {}
    for i, c in vec_factor.items():
        for idx, v in _tensor(i, ratfunc(c), inner).items():
            vec[idx] = vec.get(idx, 0) + v
    vec = {i: c for i, c in vec.items() if c != 0}
    return model.project(vec, target_hw)


def f_nu_vector(N, sign):
    """``pr(e_nu (x) v_tau)`` for ``nu = sign * N``, as coordinates indexed by ``j``.

    Coordinate ``j`` multiplies ``e_{nu + 2j} (x) f^j v_tau``.
    """
    nu = N if sign > 0 else -N
    rep = Sl2Rep(N)
    start = rep.index_of_weight(nu)
    proj = _translate([N], T, {start: 1}, {(0,): FIELD(1)}, T + nu)
    coords = []
    for j in range((N - nu) // 2 + 1):
        coords.append(proj.get((start - j, j), FIELD(0)))
    return coords


def _poly_gcd(polys):
    g = None
    for p in polys:
        if p.is_zero:
            continue
        g = p if g is None else g.gcd(p)
    return g


def verify_pole_theorem(N):
    """``delta_nu * f_nu`` for ``nu = -N`` is polynomial with constant gcd."""
    coords = f_nu_vector(N, -1)
    delta = FIELD(1)
    for n in range(N):
        delta *= T + 1 - n
    scaled = [delta * c for c in coords]
    if any(c.denom != 1 and not c.denom.is_ground for c in scaled):
        return False
    numers = [c.numer for c in scaled]
    g = _poly_gcd(numers)
    return g is not None and g.is_ground


def _phi(dims, target):
    """Equivariant projection ``E(a) (x) E(b) -> E(target)`` as a function on weight vectors."""
    model = TensorModel(dims)
    a, b = dims
    hw_basis = model.weight_space(target)
    # highest weight vector: Casimir projection of any vector in the top slice
    hw = {}
    for idx in hw_basis:
        hw = model.project({idx: FIELD(1)}, target)
        if hw:
            break
    assert hw, "no highest weight vector of the requested weight"
    descendants = [hw]

    def apply(vec):
        if not vec:
            return {}
        weight = model.weight(next(iter(vec)))
        k = _as_int(FIELD(target) - weight) // 2
        if not 0 <= k <= target:
            return {}
        while len(descendants) <= k:
            descendants.append(model.f(descendants[-1]))
        iso = model.project(vec, target)
        if not iso:
            return {}
        ref = descendants[k]
        key = next(iter(ref))
        beta = iso.get(key, FIELD(0)) / ref[key]
        assert all(iso.get(i, 0) == beta * ref.get(i, 0) for i in set(iso) | set(ref))
        return {k: beta * math.factorial(k)}

    return apply


def delta_direct(m, n, scales=None):
    """Triangle function for the extremal weights ``m`` (second step) and ``n`` (first step).

    ``scales`` optionally rescales ``(e_mu, e_nu, e_{nu+mu}, phi)`` by nonzero rationals.
    Returns ``c_s / c_e`` in ``Q(t)``.
    """
    a, b, c = abs(m), abs(n), abs(m + n)
    s_mu, s_nu, s_sum, s_phi = [ratfunc(Fraction(x)) for x in (scales or (1, 1, 1, 1))]
    phi = _phi((a, b), c)
    ratios = {}
    for y_is_s in (False, True):
        lam = -T - 2 if y_is_s else T
        v_lam = {(0,): FIELD(1)}
        e_nu = {i: s_nu * v for i, v in _weyl_image(b, Sl2Rep(b).index_of_weight(n), y_is_s).items()}
        e_mu = {i: s_mu * v for i, v in _weyl_image(a, Sl2Rep(a).index_of_weight(m), y_is_s).items()}
        e_sum = {i: s_sum * v for i, v in
                 _weyl_image(c, Sl2Rep(c).index_of_weight(m + n), y_is_s).items()}
        sign = -1 if y_is_s else 1
        # highest weights of the targets: y . (tau + n), y . (tau + n + m)
        hw1 = lam + sign * n
        hw2 = lam + sign * (n + m)
        inner = _translate([b], lam, e_nu, v_lam, hw1)
        v2 = _translate([a, b], lam, e_mu, inner, hw2)
        v1 = _translate([c], lam, e_sum, v_lam, hw2)
        # (phi (x) id) v2, grouped by Verma degree
        by_j = {}
        for (i1, i2, j), coeff in v2.items():
            by_j.setdefault(j, {})[(i1, i2)] = coeff
        image = {}
        for j, vec in by_j.items():
            for k, val in phi(vec).items():
                image[(k, j)] = image.get((k, j), 0) + s_phi * val
        image = {i: v for i, v in image.items() if v != 0}
        if not v1:
            raise AssertionError("reference vector vanished")
        key = next(iter(v1))
        ratio = image.get(key, FIELD(0)) / v1[key]
        assert all(image.get(i, 0) == ratio * v1.get(i, 0) for i in set(image) | set(v1)), \
            "image not proportional to the reference vector"
        ratios[y_is_s] = ratio
    if ratios[False] == 0:
        raise AssertionError("identity coefficient vanished")
    return ratios[True] / ratios[False]


def trace_direct(N, at_w0):
    """Scalar by which ``sum_i pr(u_i (x) v_lam)`` acts on ``v_lam`` (its ``u_i (x) v_0`` parts)."""
    lam = -T - 2 if at_w0 else T
    total = FIELD(0)
    hw = (lam - N) if at_w0 else (lam + N)  # y . (tau + N)
    model = TensorModel([N], lam)
    for i in range(N + 1):
        proj = model.project({(i, 0): FIELD(1)}, hw)
        total += proj.get((i, 0), FIELD(0))
    return total


def to_field(fr):
    """Convert a rank-one :class:`FactoredRational` into ``Q(t)``."""
    value = ratfunc(fr.constant)
    for form, e in fr.factors.items():
        (coef,) = form.coeffs
        value *= (coef * T + ratfunc(form.shift)) ** e
    return value
