"""Internal consistency of the rank-one oracle, plus its headline examples."""

import itertools
import random
from fractions import Fraction

import pytest

from translatio import build_root_system
from translatio import sl2oracle as so
from translatio import triangle as tr
from translatio.sl2oracle import FIELD, T


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def vec_sub(u, v):
    out = dict(u)
    for i, c in v.items():
        out[i] = out.get(i, 0) - c
    return {i: c for i, c in out.items() if c != 0}


# -- finite-dimensional pieces -------------------------------------------------


@pytest.mark.parametrize("N", range(6))
def test_commutation_relations(N):
    rep = so.Sl2Rep(N)
    e, f, h = rep.e, rep.f, rep.h
    two = lambda m: [[2 * x for x in row] for row in m]  # noqa: E731
    assert sub(matmul(h, e), matmul(e, h)) == two(e)
    assert sub(matmul(h, f), matmul(f, h)) == [[-x for x in row] for row in two(f)]
    assert sub(matmul(e, f), matmul(f, e)) == h
    assert rep.weights == list(range(N, -N - 1, -2))


@pytest.mark.parametrize("N", range(7))
def test_weyl_representative(N):
    s = so.sl2_weyl_rep(N)
    rep = so.Sl2Rep(N)
    for i in range(N + 1):
        col = [s[p][i] for p in range(N + 1)]
        assert [p for p, v in enumerate(col) if v] == [rep.index_of_weight(-rep.weights[i])]
    sign = (-1) ** N
    assert matmul(s, s) == [[sign * int(i == j) for j in range(N + 1)] for i in range(N + 1)]
    if N == 1:
        assert s == [[0, 1], [-1, 0]]
    if N == 0:
        assert s == [[1]]


def test_casimir_eigenvalue_examples():
    assert so.casimir_eigenvalue(0) == 0
    assert so.casimir_eigenvalue(-2) == 0
    assert so.casimir_eigenvalue(T) == T * T / 2 + T


# -- tensor models ---------------------------------------------------------------


@pytest.mark.parametrize("dims", [(1,), (2,), (3,), (1, 2), (2, 2)])
def test_tensor_model_relations(dims):
    model = so.TensorModel(dims, T)
    top = sum(dims)
    rng = random.Random(sum(dims))
    for drop in range(0, 2 * top + 3, 2):
        basis = model.weight_space(T + top - drop)
        vec = {b: FIELD(rng.randint(-3, 3) or 1) for b in basis}
        # [e, f] = h on the weight space
        ef, fe = model.e(model.f(vec)), model.f(model.e(vec))
        w = T + top - drop
        assert vec_sub(ef, fe) == {i: w * c for i, c in vec.items()}
        # the Casimir commutes with e and f
        assert model.casimir(model.e(vec)) == model.e(model.casimir(vec))
        assert model.casimir(model.f(vec)) == model.f(model.casimir(vec))


@pytest.mark.parametrize("N", range(5))
def test_projectors_partition_unity(N):
    model = so.TensorModel([N], T)
    for drop in range(0, 2 * N + 3, 2):
        weight = T + N - drop
        basis = model.weight_space(weight)
        zero = [[FIELD(0)] * len(basis) for _ in basis]
        # candidates are a superset; constituents are those with a nonzero projector
        cands = []
        total = zero
        for k in model.candidate_highest_weights(weight):
            _, p = model.projector_matrix(weight, k)
            if p == zero:
                continue
            cands.append(k)
            assert matmul(p, p) == p
            total = [[x + y for x, y in zip(r, s)] for r, s in zip(total, p)]
        assert len(cands) == len(basis)
        assert total == [[FIELD(int(i == j)) for j in range(len(basis))] for i in range(len(basis))]
        _, cas = model.casimir_matrix(weight)
        trace = sum(cas[i][i] for i in range(len(basis)))
        assert trace == sum(so.casimir_eigenvalue(k) for k in cands)


def test_projector_on_one_dimensional_space():
    model = so.TensorModel([2], T)
    basis, p = model.projector_matrix(T + 2, T + 2)
    assert basis == [(0, 0)] and p == [[FIELD(1)]]


def test_finite_tensor_isotypic_parts():
    # E(1) (x) E(1) = E(2) + E(0)
    model = so.TensorModel([1, 1])
    basis = model.weight_space(0)
    assert len(basis) == 2
    _, p2 = model.projector_matrix(0, 2)
    _, p0 = model.projector_matrix(0, 0)
    assert matmul(p2, p0) == [[0, 0], [0, 0]]
    assert sum(p2[i][i] for i in range(2)) == 1 and sum(p0[i][i] for i in range(2)) == 1


# -- pole vectors ----------------------------------------------------------------


def test_f_nu_examples():
    assert so.f_nu_vector(1, -1) == [T / (T + 1), -1 / (T + 1)]
    for N in range(4):
        assert so.f_nu_vector(N, 1) == [FIELD(1)]
    assert so.verify_pole_theorem(0)
    assert so.verify_pole_theorem(1)


@pytest.mark.parametrize("N", range(1, 5))
def test_poles_lie_on_pole_hyperplanes(N):
    delta = FIELD(1)
    for n in range(N):
        delta *= T + 1 - n
    for c in so.f_nu_vector(N, -1):
        assert (delta * c).denom == 1
    assert so.verify_pole_theorem(N)


# -- triangle function and trace ------------------------------------------------


def test_delta_direct_examples():
    assert so.delta_direct(-1, 1) == (T + 2) / (T + 1)
    assert so.delta_direct(1, -2) == T / (T - 1)
    assert so.delta_direct(0, 3) == 1
    assert so.delta_direct(2, 0) == 1


@pytest.mark.parametrize("m,n", [(1, -2), (-2, 1), (2, -1), (-1, -1), (3, -2)])
def test_delta_direct_independent_of_scalars(m, n):
    base = so.delta_direct(m, n)
    rng = random.Random(m * 10 + n)
    for _ in range(2):
        scales = [Fraction(rng.choice([-3, -1, 2, 5]), rng.choice([1, 2, 7])) for _ in range(4)]
        assert so.delta_direct(m, n, scales) == base


@pytest.mark.parametrize("m,n", list(itertools.product(range(-2, 3), repeat=2)))
def test_delta_direct_matches_closed_form(m, n):
    A1 = build_root_system("A1")
    closed = tr.delta_closed(A1, [m], [n], A1.simple_reflection(0))
    assert so.delta_direct(m, n) == so.to_field(closed)


def test_trace_examples():
    assert so.trace_direct(0, True) == 1
    assert so.trace_direct(1, True) == (T + 2) / (T + 1)
    for N in range(4):
        assert so.trace_direct(N, False) == (T + N + 1) / (T + 1)


def test_to_field():
    A1 = build_root_system("A1")
    assert so.to_field(tr.bernstein_delta(A1, [2])) == (T + 3) / (T + 1)
    assert so.ratfunc(Fraction(1, 2)) * 2 == 1
