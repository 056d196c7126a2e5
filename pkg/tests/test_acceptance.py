"""Acceptance criteria, one test per criterion.

Each test also enforces its wall-clock budget.  Run this file alone to get
the summary block:

    pytest tests/test_acceptance.py

which ends with one ``[PASS]``/``[FAIL]`` line per criterion.
"""

import itertools
import random
import time

import pytest

from translatio import Weight, build_root_system
from translatio import finestructure as fs
from translatio import repweights as rw
from translatio import sl2oracle as so
from translatio import triangle as tr
from translatio.ratfield import SparsePoly, sym
from translatio.sl2oracle import T


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def dominant_box(R, hi):
    return [Weight(c) for c in itertools.product(range(hi + 1), repeat=R.rank)]


@pytest.mark.acceptance(1)
def test_oracle_matches_closed_formula():
    """Rank-one oracle equals the closed triangle function on 81 instances"""
    A1 = build_root_system("A1")
    s = A1.simple_reflection(0)
    mismatches = []
    with Budget(120):
        for m, n in itertools.product(range(-4, 5), repeat=2):
            direct = so.delta_direct(m, n)
            closed = so.to_field(tr.delta_closed(A1, [m], [n], s))
            if direct != closed:
                mismatches.append((m, n, direct, closed))
    assert mismatches == []


@pytest.mark.acceptance(2)
def test_longest_element_consistency():
    """Bernstein product equals the closed triangle function at w0"""
    with Budget(30):
        for label in ("A1", "A2", "B2"):
            R = build_root_system(label)
            w0 = R.longest_element()
            for nu in dominant_box(R, 2):
                assert tr.bernstein_delta(R, nu) == tr.delta_closed(R, -nu, nu, w0), (label, nu)


@pytest.mark.acceptance(3)
def test_direct_traces():
    """Direct rank-one traces equal (t+N+1)/(t+1) for N <= 5"""
    with Budget(60):
        for N in range(6):
            expected = (T + N + 1) / (T + 1)
            assert so.trace_direct(N, True) == expected, N
            assert so.trace_direct(N, False) == expected, N


@pytest.mark.acceptance(4)
def test_relative_trace_well_defined():
    """Lambda divides every convolution and the trace of 1 is the dimension"""
    rng = random.Random(0)
    pool = [(label, lam) for label in ("A1", "A2", "B2")
            for lam in dominant_box(build_root_system(label), 2) if any(lam)]
    sample = rng.sample(pool, 10)
    with Budget(60):
        for label, lam in sample:
            R = build_root_system(label)
            t1 = SparsePoly.variable(R.rank, 0)
            polys = [SparsePoly.constant(R.rank, 1), sym(R, t1)]
            if R.rank > 1:
                polys.append(sym(R, t1 * SparsePoly.variable(R.rank, 1)))
            ms = rw.weight_multiset(R, lam)
            for f in polys:
                tr.relative_trace(R, ms, f)  # raises if Lambda does not divide
            assert tr.relative_trace(R, ms, polys[0]) == SparsePoly.constant(R.rank, ms.dimension())


@pytest.mark.acceptance(5)
def test_sign_times_product_equals_pole_quotient():
    """Sign times root product equals the quotient of pole polynomials"""

    def agrees(R, mu, nu, x):
        lhs = tr.epsilon_sign(R, mu, nu, x) * tr.pi_product(R, mu, nu, x).shift(R.rho())
        return lhs == tr.delta_quotient_form(R, mu, nu, x)

    failures = []
    with Budget(120):
        A1 = build_root_system("A1")
        box = [Weight([c]) for c in range(-3, 4)]
        for mu, nu, x in itertools.product(box, box, A1.weyl_group()):
            if not agrees(A1, mu, nu, x):
                failures.append(("A1", mu, nu, x.word_string()))
        for label in ("A2", "B2"):
            R = build_root_system(label)
            rng = random.Random(2024)
            group = R.weyl_group()
            for _ in range(200):
                mu = Weight([rng.randint(-3, 3) for _ in range(R.rank)])
                nu = Weight([rng.randint(-3, 3) for _ in range(R.rank)])
                x = rng.choice(group)
                if not agrees(R, mu, nu, x):
                    failures.append((label, mu, nu, x.word_string()))
    assert failures == []


@pytest.mark.acceptance(6)
def test_identity_suite():
    """All triangle-function identities hold on A1, A2, B2 and an A3 smoke run"""
    failures = {}
    with Budget(300):
        runs = [("A1", 3, 1), ("A2", 3, 100), ("B2", 3, 100), ("A3", 2, 5)]
        for label, bound, trials in runs:
            R = build_root_system(label)
            for name in sorted(tr.CHECKERS):
                rep = tr.run_identity(name, R, bound, trials, 0)
                assert rep.instances > 0
                if not rep.passed:
                    failures[(label, name)] = rep.to_json()["failures"][:3]
    assert failures == {}


@pytest.mark.acceptance(7)
def test_rank_one_pole_theorem():
    """Pole polynomial times the projected vector is polynomial with unit gcd"""
    with Budget(30):
        assert so.f_nu_vector(1, -1) == [T / (T + 1), -1 / (T + 1)]
        for N in range(1, 7):
            assert so.verify_pole_theorem(N), N


@pytest.mark.acceptance(8)
def test_hyperplane_counts_and_codimensions():
    """Pole hyperplane counts and codimension of the exceptional loci"""
    with Budget(60):
        for label in ("A2", "B2", "G2"):
            R = build_root_system(label)
            for lam in dominant_box(R, 2):
                ms = rw.weight_multiset(R, lam)
                for nu in rw.orbit(R, lam):
                    expected = sum(max(0, -R.pairing(nu, a)) for a in R.positive_roots)
                    assert len(fs.n_nu(R, nu)) == expected
                    spaces = fs.singular_set_S(R, nu, ms) + fs.s1(R, nu) + fs.s2(R, nu)
                    assert all(s.codim >= 2 for s in spaces), (label, nu)


@pytest.mark.acceptance(9)
def test_freudenthal_totals():
    """Freudenthal multiplicities add up to the Weyl dimension"""
    with Budget(60):
        for label in ("A1", "A2", "B2", "G2"):
            R = build_root_system(label)
            for lam in dominant_box(R, 3):
                assert rw.weight_multiset(R, lam).dimension() == rw.weyl_dimension(R, lam)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
