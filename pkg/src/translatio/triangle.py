"""Closed-form triangle functions and the identities they satisfy.

Every function of ``tau`` is returned as a :class:`FactoredRational` in the
variables ``t_i = <tau, alpha_i^vee>``.  ``delta_closed`` is the triangle
function itself, i.e. the root product evaluated at ``tau + rho``.
"""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import finestructure, repweights
from .errors import DomainError
from .ratfield import FactoredRational, SparsePoly, convolve, is_dot_invariant
from .rootsys import Weight


@dataclass(frozen=True)
class TriangleSpec:
    mu: Weight
    nu: Weight
    x: object

    def __post_init__(self):
        for w in (self.mu, self.nu):
            if not Weight(w).is_integral():
                raise DomainError(f"{w} is not integral")


def alpha_bar(system, lam, root):
    """1 if ``<lam, root^vee> < 0`` else 0."""
    return 1 if system.pairing(lam, root) < 0 else 0


def _coroot_factor(root, shift_weight, system, exponent):
    """``<u + shift_weight, root^vee> ** exponent`` as a function of ``u``."""
    if exponent == 0:
        return FactoredRational.one()
    shift = system.pairing(shift_weight, root)
    return FactoredRational.affine(root.coroot_coords, shift, exponent)


def pi_product(system, mu, nu, x):
    """The root product as a function of its own argument ``u``.

    Over positive roots ``alpha`` inverted by ``x``, the factors
    ``<u>``, ``<u + nu>``, ``<u + nu + mu>`` (pairings with ``alpha^vee``) carry
    exponents ``a(nu) - a(nu+mu)``, ``a(mu) - a(nu)``, ``a(nu+mu) - a(mu)``.
    """
    mu, nu = Weight(mu), Weight(nu)
    total = nu + mu
    zero = system.zero()
    out = FactoredRational.one()
    for a in system.inversion_set(x):
        an, am, at = alpha_bar(system, nu, a), alpha_bar(system, mu, a), alpha_bar(system, total, a)
        out = (out * _coroot_factor(a, zero, system, an - at)
               * _coroot_factor(a, nu, system, am - an)
               * _coroot_factor(a, total, system, at - am))
    return out


def delta_closed(system, mu, nu, x):
    """Triangle function ``Delta(mu, nu; x)`` as a function of ``tau`` (constant 1)."""
    mu, nu = Weight(mu), Weight(nu)
    if not (mu.is_integral() and nu.is_integral()):
        raise DomainError("triangle functions need integral weights")
    if not any(mu) or not any(nu):
        return FactoredRational.one()
    return pi_product(system, mu, nu, x).shift(system.rho())


def epsilon_sign(system, mu, nu, x):
    mu, nu = Weight(mu), Weight(nu)
    total = nu + mu
    parity = 0
    for a in system.inversion_set(x):
        parity += (alpha_bar(system, nu, a) * system.pairing(nu, a)
                   + alpha_bar(system, mu, a) * system.pairing(mu, a)
                   - alpha_bar(system, total, a) * system.pairing(total, a))
    return -1 if int(parity) % 2 else 1


def delta_quotient_form(system, mu, nu, x):
    """Quotient of six pole polynomials that equals ``epsilon * delta_closed``."""
    mu, nu = Weight(mu), Weight(nu)
    dn = finestructure.delta_nu
    num = (dn(system, nu)
           * dn(system, mu).shift(nu)
           * dn(system, x.act(nu + mu)).dot_substitute(x))
    den = (dn(system, x.act(nu)).dot_substitute(x)
           * dn(system, x.act(mu)).dot_substitute(x).shift(nu)
           * dn(system, nu + mu))
    return num / den


def d_x(system, nus, x):
    """``prod_k delta_{x nu_k}(x . (tau + nu_1 + ... + nu_{k-1}))``."""
    out = FactoredRational.one()
    partial = system.zero()
    for nu in nus:
        nu = Weight(nu)
        out = out * finestructure.delta_nu(system, x.act(nu)).dot_substitute(x).shift(partial)
        partial = partial + nu
    return out


def D_x(system, mu, nu, x):
    mu, nu = Weight(mu), Weight(nu)
    dn = finestructure.delta_nu
    return (dn(system, x.act(nu + mu)).dot_substitute(x)
            / (dn(system, x.act(nu)).dot_substitute(x)
               * dn(system, x.act(mu)).dot_substitute(x).shift(nu)))


def lambda_poly(system):
    """``prod over positive roots of <lam + rho, alpha^vee>`` expanded."""
    out = SparsePoly.constant(system.rank, 1)
    rho = system.rho()
    for a in system.positive_roots:
        terms = {tuple(int(i == j) for j in range(system.rank)): c
                 for i, c in enumerate(a.coroot_coords) if c}
        terms[(0,) * system.rank] = system.pairing(rho, a)
        out = out * SparsePoly(system.rank, terms)
    return out


def relative_trace(system, multiset, poly):
    """``Lambda^-1 (P(E) * (Lambda f))`` for a dot-invariant polynomial ``f``."""
    if not is_dot_invariant(system, poly):
        raise DomainError("relative trace needs a dot-invariant polynomial")
    lam = lambda_poly(system)
    quotient = convolve(multiset, lam * poly).divide_exact(lam)
    if quotient is None:
        raise AssertionError("Lambda does not divide the convolution of a dot-invariant polynomial")
    return quotient


def bernstein_delta(system, nu):
    """``prod over positive roots of <tau + nu + rho, alpha^vee> / <tau + rho, alpha^vee>``."""
    nu = Weight(nu)
    if not (nu.is_integral() and nu.is_dominant()):
        raise DomainError(f"{nu} is not dominant integral")
    rho = system.rho()
    out = FactoredRational.one()
    for a in system.positive_roots:
        out = (out * _coroot_factor(a, nu + rho, system, 1)
               * _coroot_factor(a, rho, system, -1))
    return out


def generalized_delta(system, mu, nu, y, x):
    """``Delta(mu, nu; y)^-1 * Delta(mu, nu; x)``."""
    return delta_closed(system, mu, nu, x) / delta_closed(system, mu, nu, y)


def chain_delta(system, steps, x):
    """``prod_{k >= 2} Delta(step_k, step_1 + ... + step_{k-1}; x)``."""
    out = FactoredRational.one()
    partial = Weight(steps[0])
    for step in steps[1:]:
        step = Weight(step)
        out = out * delta_closed(system, step, partial, x)
        partial = partial + step
    return out


def chain_delta_shifted(system, steps, x):
    """Second expansion: ``prod_k Delta(step_{k+1} + ... + step_m, step_k; x)(tau + step_1 + ... + step_{k-1})``."""
    steps = [Weight(s) for s in steps]
    out = FactoredRational.one()
    prefix = system.zero()
    for k in range(len(steps) - 1):
        rest = sum(steps[k + 1:], system.zero())
        out = out * delta_closed(system, rest, steps[k], x).shift(prefix)
        prefix = prefix + steps[k]
    return out


def bar_delta(system, mus, nus, x):
    """Compare two translation chains with the same total.

    ``mus`` and ``nus`` list the steps in the order they are applied (first
    step first).  Each chain is reduced to the one-step translation by its
    product of triangle functions; the result is the ratio.
    """
    mus, nus = [Weight(m) for m in mus], [Weight(n) for n in nus]
    if not mus or not nus:
        raise DomainError("empty translation chain")
    if sum(mus, system.zero()) != sum(nus, system.zero()):
        raise DomainError("the two chains must have the same total weight")
    return chain_delta(system, mus, x) / chain_delta(system, nus, x)


# --------------------------------------------------------------------------
# identity checkers


@dataclass
class IdentityReport:
    name: str
    system: str
    instances: int = 0
    failures: list = field(default_factory=list)
    seed: object = None

    @property
    def passed(self):
        return not self.failures

    def record(self, spec, lhs, rhs):
        self.instances += 1
        if lhs != rhs:
            self.failures.append((spec, lhs, rhs))

    def to_json(self):
        return {
            "identity": self.name,
            "system": self.system,
            "instances": self.instances,
            "seed": self.seed,
            "failures": [{"spec": s, "lhs": l.pretty(), "rhs": r.pretty()} for s, l, r in self.failures],
        }


class _Sampler:
    """Weights in ``[-bound, bound]^r`` and Weyl elements; exhaustive in rank 1."""

    def __init__(self, system, bound, trials, seed):
        self.system = system
        self.bound = bound
        self.trials = trials
        self.rng = random.Random(seed)
        self.group = system.weyl_group()
        self.exhaustive = system.rank == 1

    def weight(self):
        return Weight([self.rng.randint(-self.bound, self.bound) for _ in range(self.system.rank)])

    def element(self):
        return self.rng.choice(self.group)

    def instances(self, n_weights, n_elements):
        if self.exhaustive:
            box = [Weight([c]) for c in range(-self.bound, self.bound + 1)]
            yield from itertools.product(*([box] * n_weights + [self.group] * n_elements))
        else:
            for _ in range(self.trials):
                yield tuple([self.weight() for _ in range(n_weights)]
                            + [self.element() for _ in range(n_elements)])


def _spec(*items):
    out = []
    for it in items:
        if isinstance(it, Weight):
            out.append(it.to_json())
        elif isinstance(it, (list, tuple)):
            out.append([w.to_json() for w in it])
        else:
            out.append(it.word_string())
    return out


def _check_bound(bound):
    if bound < 1:
        raise DomainError("coord_bound must be at least 1")


def check_normalization(system, coord_bound=3, trials=100, rng_seed=0):
    _check_bound(coord_bound)
    rep = IdentityReport("normalization", system.label, seed=rng_seed)
    one = FactoredRational.one()
    zero = system.zero()
    for mu, nu, x in _Sampler(system, coord_bound, trials, rng_seed).instances(2, 1):
        rep.record(_spec(mu, nu, system.identity()), delta_closed(system, mu, nu, system.identity()), one)
        rep.record(_spec(zero, nu, x), delta_closed(system, zero, nu, x), one)
        rep.record(_spec(nu, zero, x), delta_closed(system, nu, zero, x), one)
        rep.record(_spec(zero, nu, x), pi_product(system, zero, nu, x), one)
        rep.record(_spec(nu, zero, x), pi_product(system, nu, zero, x), one)
    return rep


def check_decomposition(system, coord_bound=3, trials=100, rng_seed=0):
    _check_bound(coord_bound)
    rep = IdentityReport("decomposition", system.label, seed=rng_seed)
    for eta, mu, nu, x in _Sampler(system, coord_bound, trials, rng_seed).instances(3, 1):
        lhs = delta_closed(system, eta + mu, nu, x) * delta_closed(system, eta, mu, x).shift(nu)
        rhs = delta_closed(system, eta, mu + nu, x) * delta_closed(system, mu, nu, x)
        rep.record(_spec(eta, mu, nu, x), lhs, rhs)
    return rep


def check_rotation(system, coord_bound=3, trials=100, rng_seed=0):
    _check_bound(coord_bound)
    rep = IdentityReport("rotation", system.label, seed=rng_seed)
    for mu, nu, x, y in _Sampler(system, coord_bound, trials, rng_seed).instances(2, 2):
        lhs = delta_closed(system, y.act(mu), y.act(nu), x).dot_substitute(y)
        rhs = delta_closed(system, mu, nu, x * y) / delta_closed(system, mu, nu, y)
        rep.record(_spec(mu, nu, x, y), lhs, rhs)
    return rep


def check_flatness(system, coord_bound=3, trials=100, rng_seed=0):
    """Weights sharing a closed Weyl chamber have trivial triangle functions."""
    _check_bound(coord_bound)
    rep = IdentityReport("flatness", system.label, seed=rng_seed)
    one = FactoredRational.one()
    sampler = _Sampler(system, coord_bound, trials, rng_seed)
    if sampler.exhaustive:
        cases = ((mu, nu, x) for mu, nu, x in sampler.instances(2, 1) if mu[0] * nu[0] >= 0)
    else:
        def draw():
            rng = sampler.rng
            for _ in range(trials):
                w = sampler.element()
                mu = w.act(Weight([rng.randint(0, coord_bound) for _ in range(system.rank)]))
                nu = w.act(Weight([rng.randint(0, coord_bound) for _ in range(system.rank)]))
                yield mu, nu, sampler.element()
        cases = draw()
    for mu, nu, x in cases:
        rep.record(_spec(mu, nu, x), delta_closed(system, mu, nu, x), one)
    return rep


def check_I1_to_I4(system, coord_bound=3, trials=100, rng_seed=0):
    _check_bound(coord_bound)
    rep = IdentityReport("I1-I4", system.label, seed=rng_seed)
    e = system.identity()
    for mu, nu, x, y, z in _Sampler(system, coord_bound, trials, rng_seed).instances(2, 3):
        g = generalized_delta
        spec = _spec(mu, nu, x, y, z)
        rep.record(spec + ["I0"], g(system, mu, nu, e, x), delta_closed(system, mu, nu, x))
        rep.record(spec + ["I1"], g(system, mu, nu, y, x),
                   delta_closed(system, mu, nu, y).inverse() * delta_closed(system, mu, nu, x))
        rep.record(spec + ["I2"], g(system, mu, nu, y, x), g(system, mu, nu, x, y).inverse())
        rep.record(spec + ["I3"], g(system, mu, nu, y, x) * g(system, mu, nu, x, z), g(system, mu, nu, y, z))
        rep.record(spec + ["I4"], g(system, mu, nu, y, x),
                   delta_closed(system, y.act(mu), y.act(nu), x * y.inverse()).dot_substitute(y))
    return rep


def check_splitting(system, coord_bound=3, trials=100, rng_seed=0):
    _check_bound(coord_bound)
    rep = IdentityReport("splitting", system.label, seed=rng_seed)
    for n1, n2, n3, x in _Sampler(system, coord_bound, trials, rng_seed).instances(3, 1):
        total = n1 + n2 + n3
        three = bar_delta(system, [n1, n2, n3], [total], x)
        spec = _spec(n1, n2, n3, x)
        rep.record(spec + ["first"], three,
                   delta_closed(system, n2, n1, x) * delta_closed(system, n3, n1 + n2, x))
        rep.record(spec + ["second"], three,
                   delta_closed(system, n2 + n3, n1, x) * delta_closed(system, n3, n2, x).shift(n1))
        # two two-step chains with a common end point
        m1, m2 = n1, n2 + n3
        v1, v2 = n1 + n2, n3
        rep.record(spec + ["square"], bar_delta(system, [m1, m2], [v1, v2], x),
                   delta_closed(system, m2, m1, x) / delta_closed(system, v2, v1, x))
        rep.record(spec + ["inverse"], bar_delta(system, [m1, m2], [v1, v2], x),
                   bar_delta(system, [v1, v2], [m1, m2], x).inverse())
        rep.record(spec + ["triangle"], bar_delta(system, [n1, n2], [n1 + n2], x),
                   delta_closed(system, n2, n1, x))
    return rep


def check_proposition(system, coord_bound=3, trials=100, rng_seed=0, max_chain=4):
    """Both expansions of a chain of up to ``max_chain`` steps agree, and agree with splitting."""
    _check_bound(coord_bound)
    rep = IdentityReport("proposition", system.label, seed=rng_seed)
    rng = random.Random(rng_seed)
    group = system.weyl_group()

    def weight():
        return Weight([rng.randint(-coord_bound, coord_bound) for _ in range(system.rank)])

    if system.rank == 1:
        box = [Weight([c]) for c in range(-coord_bound, coord_bound + 1)]
        cases = [(list(steps), x) for m in range(2, 4) for steps in itertools.product(box, repeat=m)
                 for x in group]
        cases += [([weight() for _ in range(max_chain)], rng.choice(group)) for _ in range(trials)]
    else:
        cases = [([weight() for _ in range(rng.randint(2, max_chain))], rng.choice(group))
                 for _ in range(trials)]
    for steps, x in cases:
        first = chain_delta(system, steps, x)
        second = chain_delta_shifted(system, steps, x)
        rep.record(_spec(steps, x), first, second)
        # peeling off the last step is a triangle
        if len(steps) >= 3:
            head = chain_delta(system, steps[:-1], x)
            tail = delta_closed(system, steps[-1], sum(steps[:-1], system.zero()), x)
            rep.record(_spec(steps, x) + ["peel"], first, head * tail)
    return rep


CHECKERS = {
    "normalization": check_normalization,
    "decomposition": check_decomposition,
    "rotation": check_rotation,
    "flatness": check_flatness,
    "I1-I4": check_I1_to_I4,
    "splitting": check_splitting,
    "proposition": check_proposition,
}


def run_identity(name, system, coord_bound=3, trials=100, rng_seed=0):
    try:
        checker = CHECKERS[name]
    except KeyError:
        raise DomainError(f"unknown identity {name!r}; choose from {sorted(CHECKERS)}") from None
    return checker(system, coord_bound, trials, rng_seed)
