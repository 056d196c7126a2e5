"""Root systems of types A to G built from Cartan data, with their Weyl groups.

Weights are kept in fundamental-weight coordinates, i.e. ``coords[i]`` is the
pairing with the i-th simple coroot.  In these coordinates the simple root
``alpha_j`` is column ``j`` of the Cartan matrix and every Weyl group element
acts by an integer matrix.
"""

import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import _kernels
from .errors import ConfigurationError, DomainError, ResourceError

DEFAULT_GROUP_BOUND = math.factorial(10)


def group_bound():
    """Largest Weyl group the enumerating operations will build."""
    raw = os.environ.get("TRANSLATIO_GROUP_BOUND")
    if raw is None or not raw.strip():
        return DEFAULT_GROUP_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"TRANSLATIO_GROUP_BOUND must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigurationError("TRANSLATIO_GROUP_BOUND must be positive")
    return value


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise ConfigurationError(f"not a rational number: {x!r}") from None
    if isinstance(x, float):
        raise DomainError("floating point coordinates are not accepted; use Fraction or str")
    return Fraction(x)


class Weight(tuple):
    """Rational coordinate vector with ``coords[i] = <lambda, alpha_i^vee>``.

    Behaves like a tuple of ``Fraction`` but ``+``, ``-`` and scalar ``*`` are
    vector operations.
    """

    __slots__ = ()

    def __new__(cls, coords):
        return super().__new__(cls, (_frac(c) for c in coords))

    @classmethod
    def zero(cls, rank):
        return cls([0] * rank)

    @property
    def coords(self):
        return tuple(self)

    @property
    def rank(self):
        return len(self)

    def is_integral(self):
        return all(c.denominator == 1 for c in self)

    def is_dominant(self):
        return all(c >= 0 for c in self)

    def as_ints(self):
        if not self.is_integral():
            raise DomainError(f"weight {self} is not integral")
        return tuple(int(c) for c in self)

    def _check(self, other):
        if len(other) != len(self):
            raise DomainError(f"rank mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other):
        self._check(other)
        return Weight(a + _frac(b) for a, b in zip(self, other))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        self._check(other)
        return Weight(a - _frac(b) for a, b in zip(self, other))

    def __rsub__(self, other):
        return Weight(other) - self

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        if isinstance(k, (tuple, list)):
            return NotImplemented
        k = _frac(k)
        return Weight(a * k for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Weight({self})"

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self) + ")"

    def to_json(self):
        return [int(c) if c.denominator == 1 else str(c) for c in self]


@dataclass(frozen=True)
class Root:
    """A root, with simple-root coefficients and simple-coroot coefficients of its coroot."""

    root_coords: tuple
    coroot_coords: tuple
    weight: Weight = field(compare=False)

    @property
    def is_positive(self):
        return any(c > 0 for c in self.root_coords)

    @property
    def height(self):
        return sum(self.root_coords)

    def __neg__(self):
        return Root(tuple(-c for c in self.root_coords),
                    tuple(-c for c in self.coroot_coords), -self.weight)

    def name(self):
        """``a1``, ``a1+a2``, ``-a1-2a2`` style label (ASCII)."""
        parts = []
        for i, c in enumerate(self.root_coords):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}a{i + 1}")
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def pretty(self):
        """Unicode label of the coroot, e.g. ``α₁∨`` or ``(α₁+α₂)∨``."""
        sub = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
        label = self.name().replace("a", "α").translate(sub)
        if re.fullmatch(r"-?α[₀-₉]+", label):
            return label + "∨"
        return f"({label})∨"


def _matmul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)) for i in range(n))


class WeylElement:
    """Weyl group element identified by its integer action on weight coordinates."""

    __slots__ = ("system", "matrix", "_word")

    def __init__(self, system, matrix, word=None):
        self.system = system
        self.matrix = tuple(tuple(int(v) for v in row) for row in matrix)
        self._word = tuple(word) if word is not None else None

    @property
    def word(self):
        """Canonical reduced word ``(i1, ..., ik)`` with ``w = s_i1 ... s_ik`` (0-based)."""
        if self._word is None:
            self._word = self.system._reduced_word(self.matrix)
        return self._word

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        r = len(self.matrix)
        return all(self.matrix[i][j] == (i == j) for i in range(r) for j in range(r))

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        if other.system is not self.system and other.system.label != self.system.label:
            raise DomainError("Weyl elements of different root systems")
        return WeylElement(self.system, _matmul(self.matrix, other.matrix))

    def inverse(self):
        # w^-1 has the reversed word
        return self.system.element(tuple(reversed(self.word)))

    def act(self, weight):
        return Weight(sum(m * c for m, c in zip(row, weight)) for row in self.matrix)

    def dot(self, weight):
        rho = self.system.rho()
        return self.act(Weight(weight) + rho) - rho

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self.system.label == other.system.label
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.system.label, self.matrix))

    def __repr__(self):
        return f"WeylElement({self.system.label}, {self.word_string()})"

    def word_string(self):
        if not self.word:
            return "e"
        return " ".join(f"s{i + 1}" for i in self.word)

    def to_json(self):
        return [i + 1 for i in self.word]


# --------------------------------------------------------------------------
# Cartan data


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def cartan_matrix(series, n):
    """Cartan matrix with ``A[i][j] = <alpha_j, alpha_i^vee>`` in Bourbaki numbering."""
    if series == "A" and n >= 1:
        return _chain(n)
    if series == "B" and n >= 2:
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if series == "C" and n >= 3:
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if series == "D" and n >= 4:
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if series == "E" and n in (6, 7, 8):
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        for i, j in [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]:
            a[i][j] = a[j][i] = -1
        return a
    if series == "F" and n == 4:
        a = _chain(4)
        a[2][1] = -2
        return a
    if series == "G" and n == 2:
        return [[2, -3], [-1, 2]]
    raise ConfigurationError(f"no root system of type {series}{n}")


def classical_group_order(series, n):
    if series == "A":
        return math.factorial(n + 1)
    if series in "BC":
        return 2**n * math.factorial(n)
    if series == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(series, n)]


def classical_positive_count(series, n):
    if series == "A":
        return n * (n + 1) // 2
    if series in "BC":
        return n * n
    if series == "D":
        return n * (n - 1)
    return {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}[(series, n)]


def parse_label(label):
    m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", str(label))
    if not m:
        raise ConfigurationError(f"malformed root system label {label!r}")
    series, n = m.group(1).upper(), int(m.group(2))
    cartan_matrix(series, n)  # validates
    return series, n


def _symmetrizer(a):
    r = len(a)
    d = [None] * r
    for start in range(r):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(r):
                if j != i and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
    lo = min(d)
    d = [x / lo for x in d]
    den = math.lcm(*(x.denominator for x in d))
    return tuple(int(x * den) for x in d)


def _invert(a):
    r = len(a)
    m = [[Fraction(a[i][j]) for j in range(r)] + [Fraction(int(i == j)) for j in range(r)]
         for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if m[i][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for i in range(r):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return tuple(tuple(row[r:]) for row in m)


class RootSystem:
    """Reduced irreducible root system given by its type label, e.g. ``"B2"``."""

    def __init__(self, type_label):
        series, n = parse_label(type_label)
        self.series = series
        self.rank = n
        self.label = f"{series}{n}"
        self.type_label = self.label
        self.cartan_matrix = tuple(tuple(row) for row in cartan_matrix(series, n))
        self.symmetrizer = _symmetrizer(self.cartan_matrix)
        self._cartan_np = np.array(self.cartan_matrix, dtype=np.int64)
        self.positive_roots = self._build_positive_roots()
        self.roots = self.positive_roots + [-a for a in self.positive_roots]
        self.simple_roots = [a for a in self.positive_roots if a.height == 1]
        self.coroot_coords = [a.coroot_coords for a in self.positive_roots]
        self._by_weight = {a.weight: a for a in self.roots}
        self._group = None
        self._elements = None

    def __repr__(self):
        return f"RootSystem({self.label!r})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and other.label == self.label

    def __hash__(self):
        return hash(self.label)

    # ---- roots

    def _root_from_coords(self, c):
        a, d, r = self.cartan_matrix, self.symmetrizer, self.rank
        weight = Weight(sum(a[i][j] * c[j] for j in range(r)) for i in range(r))
        norm2 = sum(c[i] * c[j] * d[i] * a[i][j] for i in range(r) for j in range(r))
        half = norm2 // 2
        coroot = tuple(c[j] * d[j] // half for j in range(r))
        assert all(c[j] * d[j] % half == 0 for j in range(r))
        return Root(tuple(c), coroot, weight)

    def _build_positive_roots(self):
        r = self.rank
        a = self.cartan_matrix
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(r):
                    pair = sum(a[i][j] * c[j] for j in range(r))
                    img = tuple(c[j] - (pair if j == i else 0) for j in range(r))
                    if all(x >= 0 for x in img) and img not in seen:
                        seen.add(img)
                        nxt.append(img)
            frontier = nxt
        ordered = sorted(seen, key=lambda c: (sum(c), tuple(-x for x in c)))
        roots = [self._root_from_coords(c) for c in ordered]
        assert len(roots) == classical_positive_count(self.series, r)
        return roots

    def simple_root(self, i):
        return self.simple_roots[i]

    def root_of_weight(self, weight):
        """The root whose fundamental coordinates are ``weight``, or None."""
        return self._by_weight.get(Weight(weight))

    def highest_root(self):
        return self.positive_roots[-1]

    def pairing(self, weight, root):
        """``<weight, root^vee>``."""
        return sum((Fraction(c) * x for c, x in zip(root.coroot_coords, weight)), Fraction(0))

    def rho(self):
        return Weight([1] * self.rank)

    def zero(self):
        return Weight.zero(self.rank)

    def weight(self, coords):
        w = Weight(coords)
        if len(w) != self.rank:
            raise ConfigurationError(f"{self.label} weights have {self.rank} coordinates, got {len(w)}")
        return w

    def to_root_coords(self, weight):
        """Coefficients of ``weight`` in the basis of simple roots."""
        inv = self._cartan_inverse
        return tuple(sum(inv[i][j] * Fraction(weight[j]) for j in range(self.rank))
                     for i in range(self.rank))

    @cached_property
    def _cartan_inverse(self):
        return _invert(self.cartan_matrix)

    # ---- Weyl group

    def identity(self):
        r = self.rank
        return WeylElement(self, [[int(i == j) for j in range(r)] for i in range(r)], ())

    def simple_reflection(self, i):
        if not 0 <= i < self.rank:
            raise ConfigurationError(f"{self.label} has no simple reflection s{i + 1}")
        r, a = self.rank, self.cartan_matrix
        m = [[int(p == q) - (a[p][i] if q == i else 0) for q in range(r)] for p in range(r)]
        return WeylElement(self, m, (i,))

    def element(self, word):
        """Product ``s_{word[0]} s_{word[1]} ...`` (0-based indices)."""
        w = self.identity()
        for i in word:
            w = w * self.simple_reflection(i)
        return w

    def reflection(self, root):
        r = self.rank
        m = [[int(p == q) - int(root.weight[p]) * root.coroot_coords[q] for q in range(r)]
             for p in range(r)]
        return WeylElement(self, m)

    @cached_property
    def _reflection_matrices(self):
        return {self.reflection(a).matrix for a in self.positive_roots}

    def is_reflection(self, w):
        return w.matrix in self._reflection_matrices

    def _reduced_word(self, matrix):
        lam = [sum(row) for row in matrix]  # w(rho)
        a = self.cartan_matrix
        word = []
        while True:
            i = next((k for k, v in enumerate(lam) if v < 0), None)
            if i is None:
                return tuple(word)
            word.append(i)
            c = lam[i]
            lam = [lam[p] - c * a[p][i] for p in range(self.rank)]

    def longest_element(self):
        lam = [-1] * self.rank
        a = self.cartan_matrix
        word = []
        while True:
            i = next((k for k, v in enumerate(lam) if v < 0), None)
            if i is None:
                break
            word.append(i)
            c = lam[i]
            lam = [lam[p] - c * a[p][i] for p in range(self.rank)]
        return self.element(tuple(word))

    def group_order(self):
        return classical_group_order(self.series, self.rank)

    def _check_group_size(self):
        order, bound = self.group_order(), group_bound()
        if order > bound:
            raise ResourceError(
                f"|W({self.label})| = {order} exceeds the group bound {bound}; "
                "raise TRANSLATIO_GROUP_BOUND to allow it")

    def weyl_group_matrices(self):
        """All action matrices as an ``(|W|, r, r)`` int64 array, ordered by length."""
        if self._group is None:
            self._check_group_size()
            order = self.group_order()
            rho = np.ones(self.rank, dtype=np.int64)
            bound = int(max(self.pairing(self.rho(), a) for a in self.positive_roots))
            points, parent, gen = _kernels.orbit(rho, self._cartan_np, bound, order)
            assert points.shape[0] == order
            r = self.rank
            mats = np.empty((order, r, r), dtype=np.int64)
            mats[0] = np.eye(r, dtype=np.int64)
            depth = np.zeros(order, dtype=np.int64)
            for k in range(1, order):  # parents precede children
                depth[k] = depth[parent[k]] + 1
            cuts = np.flatnonzero(np.diff(depth)) + 1
            for lo, hi in zip(cuts, list(cuts[1:]) + [order]):
                par = mats[parent[lo:hi]]
                g = gen[lo:hi]
                # s_i M = M - A[:, i] (x) M[i, :]
                rows = par[np.arange(hi - lo), g, :]
                mats[lo:hi] = par - self._cartan_np[:, g].T[:, :, None] * rows[:, None, :]
            self._group = mats
        return self._group

    def weyl_group(self):
        if self._elements is None:
            self._elements = [WeylElement(self, m) for m in self.weyl_group_matrices()]
        return list(self._elements)

    # ---- actions and orders

    def act(self, w, weight):
        return w.act(weight)

    def dot_act(self, w, weight):
        return w.dot(weight)

    def act_root(self, w, root):
        return self._by_weight[w.act(root.weight)]

    def inversion_set(self, w):
        """Positive roots sent to negative roots by ``w``."""
        return [a for a in self.positive_roots if not self.act_root(w, a).is_positive]

    def dominance_leq(self, lam, mu):
        """True iff ``mu - lam`` is a non-negative integer combination of simple roots."""
        diff = self.to_root_coords(Weight(mu) - Weight(lam))
        return all(c.denominator == 1 and c >= 0 for c in diff)

    def integral_weyl_group(self, weight):
        """Roots with integral pairing and the group their reflections generate."""
        r_lam = [a for a in self.roots if self.pairing(weight, a).denominator == 1]
        gens = [self.reflection(a) for a in r_lam if a.is_positive]
        group = {self.identity()}
        frontier = [self.identity()]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = g * s
                    if h not in group:
                        group.add(h)
                        nxt.append(h)
            frontier = nxt
        return r_lam, sorted(group, key=lambda g: (g.length, g.word))

    def is_generic(self, weight):
        return all(self.pairing(weight, a).denominator != 1 for a in self.positive_roots)

    def dominant_representative(self, weight):
        """``(lam_plus, w)`` with ``w.act(weight) == lam_plus`` dominant (any rational weight)."""
        lam = list(Weight(weight))
        a = self.cartan_matrix
        word = []
        while True:
            i = next((k for k, v in enumerate(lam) if v < 0), None)
            if i is None:
                break
            word.append(i)
            c = lam[i]
            lam = [lam[p] - c * a[p][i] for p in range(self.rank)]
        return Weight(lam), self.element(tuple(reversed(word)))

    def parse_word(self, text):
        """Parse ``"s1 s2"``, ``"e"`` or ``"w0"`` (also ``s1s2`` and ``s1*s2``) into an element."""
        tokens = re.findall(r"s\d+|w0|e|\S", str(text).replace("*", " ").replace(",", " "))
        w = self.identity()
        if not tokens:
            raise ConfigurationError("empty Weyl word")
        for tok in tokens:
            if tok == "e":
                continue
            if tok == "w0":
                w = w * self.longest_element()
                continue
            m = re.fullmatch(r"s(\d+)", tok)
            if not m or not 1 <= int(m.group(1)) <= self.rank:
                raise ConfigurationError(f"unknown Weyl word token {tok!r} for {self.label}")
            w = w * self.simple_reflection(int(m.group(1)) - 1)
        return w


_CACHE = {}


def build_root_system(type_label):
    """Cached :class:`RootSystem` for a label like ``"A2"``, ``"E6"`` or ``"G2"``."""
    series, n = parse_label(type_label)
    key = f"{series}{n}"
    if key not in _CACHE:
        _CACHE[key] = RootSystem(key)
    return _CACHE[key]
