"""Exact symbolic carriers: factored products of affine forms, and sparse polynomials.

Variables are ``t_i = <tau, alpha_i^vee>``, so an affine form is an integer
vector of coefficients plus a rational shift.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .errors import DomainError, PoleError

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
MINUS = "−"


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LinearForm:
    """``tau -> sum(coeffs[i] * t_i) + shift`` in canonical form.

    Build with :meth:`make`, which returns the extracted scale alongside.
    """

    coeffs: tuple
    shift: Fraction

    @staticmethod
    def make(coeffs, shift=0):
        """Return ``(scale, form)`` with ``scale * form`` equal to the given affine function.

        For an all-zero coefficient vector the form is ``None`` and the scale is
        the constant value.
        """
        coeffs = [_frac(c) for c in coeffs]
        shift = _frac(shift)
        nonzero = [c for c in coeffs if c != 0]
        if not nonzero:
            return shift, None
        den = math.lcm(*(c.denominator for c in nonzero))
        ints = [int(c * den) for c in coeffs]
        g = reduce(math.gcd, (abs(c) for c in ints if c))
        if next(c for c in ints if c) < 0:
            g = -g
        scale = Fraction(g, den)
        return scale, LinearForm(tuple(c // g for c in ints), shift / scale)

    @staticmethod
    def coroot(root, m=0):
        """Canonical form of ``<tau, root^vee> - m`` (root positive)."""
        scale, form = LinearForm.make(root.coroot_coords, -_frac(m))
        assert scale == 1
        return form

    @property
    def rank(self):
        return len(self.coeffs)

    def __call__(self, point):
        return sum((c * _frac(x) for c, x in zip(self.coeffs, point)), Fraction(0)) + self.shift

    def linear_part(self, point):
        return sum((c * _frac(x) for c, x in zip(self.coeffs, point)), Fraction(0))

    def __repr__(self):
        return f"LinearForm({list(self.coeffs)}, {self.shift})"

    def to_poly(self):
        n = len(self.coeffs)
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                terms[tuple(int(j == i) for j in range(n))] = Fraction(c)
        if self.shift:
            terms[(0,) * n] = self.shift
        return SparsePoly(n, terms)

    # ---- rendering

    def _linear_text(self, system, latex):
        if system is not None:
            for a in system.positive_roots:
                if tuple(a.coroot_coords) == self.coeffs:
                    return _coroot_text(a, system, latex), True
        minus = "-" if latex else MINUS
        text = ""
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            var = f"t_{{{i + 1}}}" if latex else f"t{str(i + 1).translate(_SUB)}"
            term = ("" if abs(c) == 1 else str(abs(c))) + var
            if not text:
                text = (minus if c < 0 else "") + term
            else:
                text += f" {minus if c < 0 else '+'} {term}"
        bare = sum(1 for c in self.coeffs if c) == 1 and self.coeffs[
            next(i for i, c in enumerate(self.coeffs) if c)] == 1
        return text, bare

    def render(self, system=None, latex=False):
        """Returns ``(text, is_atomic)``."""
        lin, bare = self._linear_text(system, latex)
        if self.shift == 0:
            return lin, bare
        q = self.shift
        sign = "+" if q > 0 else ("-" if latex else MINUS)
        mag = abs(q)
        if latex and mag.denominator != 1:
            qtext = f"\\tfrac{{{mag.numerator}}}{{{mag.denominator}}}"
        else:
            qtext = str(mag)
        return f"{lin} {sign} {qtext}", False


def _coroot_text(root, system, latex):
    if system.rank == 1:
        return r"\langle\tau,\alpha^\vee\rangle" if latex else "⟨τ,α∨⟩"
    if latex:
        parts = []
        for i, c in enumerate(root.root_coords):
            if c:
                parts.append(("" if c == 1 else str(c)) + f"\\alpha_{{{i + 1}}}")
        inner = "+".join(parts)
        inner = inner + "^\\vee" if len(parts) == 1 else f"({inner})^\\vee"
        return f"\\langle\\tau,{inner}\\rangle"
    return f"⟨τ,{root.pretty()}⟩"


class FactoredRational:
    """``constant * prod(form ** exponent)`` with canonical forms and nonzero exponents."""

    __slots__ = ("constant", "factors", "_hash")

    def __init__(self, constant=1, factors=None, rank=None):
        constant = _frac(constant)
        clean = {}
        if constant != 0:
            for form, e in (factors or {}).items():
                e = int(e)
                if e:
                    clean[form] = clean.get(form, 0) + e
            clean = {f: e for f, e in clean.items() if e}
        self.constant = constant
        self.factors = dict(sorted(clean.items(), key=lambda fe: (fe[0].coeffs, fe[0].shift)))
        self._hash = None

    # ---- constructors

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def affine(cls, coeffs, shift=0, exponent=1):
        scale, form = LinearForm.make(coeffs, shift)
        if form is None:
            if scale == 0 and exponent < 0:
                raise ZeroDivisionError("constant zero form with negative exponent")
            return cls(scale**exponent)
        return cls(scale**exponent, {form: exponent})

    @classmethod
    def from_form(cls, form, exponent=1):
        return cls(1, {form: exponent})

    # ---- algebra

    def is_zero(self):
        return self.constant == 0

    def __mul__(self, other):
        if not isinstance(other, FactoredRational):
            other = FactoredRational(other)
        if self.is_zero() or other.is_zero():
            return FactoredRational(0)
        merged = dict(self.factors)
        for f, e in other.factors.items():
            merged[f] = merged.get(f, 0) + e
        return FactoredRational(self.constant * other.constant, merged)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return FactoredRational(1 / self.constant, {f: -e for f, e in self.factors.items()})

    def __truediv__(self, other):
        if not isinstance(other, FactoredRational):
            other = FactoredRational(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FactoredRational(other) * self.inverse()

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        return FactoredRational(self.constant**k, {f: e * k for f, e in self.factors.items()})

    def __neg__(self):
        return FactoredRational(-self.constant, self.factors)

    def __eq__(self, other):
        if not isinstance(other, FactoredRational):
            if isinstance(other, (int, Fraction)):
                return not self.factors and self.constant == other
            return NotImplemented
        return self.constant == other.constant and self.factors == other.factors

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.constant, tuple(self.factors.items())))
        return self._hash

    def is_constant(self):
        return not self.factors

    def is_polynomial(self):
        return all(e > 0 for e in self.factors.values())

    def degree(self):
        """Numerator degree minus denominator degree."""
        return sum(self.factors.values())

    def numerator(self):
        return FactoredRational(self.constant, {f: e for f, e in self.factors.items() if e > 0})

    def denominator(self):
        return FactoredRational(1, {f: -e for f, e in self.factors.items() if e < 0})

    # ---- substitutions

    def shift(self, sigma):
        """``tau -> tau + sigma``."""
        sigma = [_frac(s) for s in sigma]
        return FactoredRational(self.constant, {
            LinearForm(f.coeffs, f.shift + f.linear_part(sigma)): e for f, e in self.factors.items()})

    def dot_substitute(self, w):
        """``tau -> w . tau = w(tau + rho) - rho``."""
        mat = w.matrix
        r = len(mat)
        offset = [sum(row) - 1 for row in mat]  # w(rho) - rho in coordinates
        const = self.constant
        out = {}
        for f, e in self.factors.items():
            coeffs = [sum(f.coeffs[i] * mat[i][j] for i in range(r)) for j in range(r)]
            scale, form = LinearForm.make(coeffs, f.shift + f.linear_part(offset))
            if form is None:  # impossible for invertible w; kept for safety
                const *= scale**e
                continue
            const *= scale**e
            out[form] = out.get(form, 0) + e
        return FactoredRational(const, out)

    def evaluate(self, point):
        point = [_frac(x) for x in point]
        value = self.constant
        zero = False
        for f, e in self.factors.items():
            v = f(point)
            if v == 0:
                if e < 0:
                    raise PoleError(f, point)
                zero = True
                continue
            value *= v**e
        return Fraction(0) if zero else value

    def expand(self, nvars=None):
        """``(numerator, denominator)`` as :class:`SparsePoly`; the constant sits in the numerator."""
        if nvars is None:
            nvars = len(next(iter(self.factors)).coeffs) if self.factors else 0
        num = SparsePoly.constant(nvars, self.constant)
        den = SparsePoly.constant(nvars, 1)
        for f, e in self.factors.items():
            p = f.to_poly()
            if e > 0:
                num = num * p**e
            else:
                den = den * p ** (-e)
        return num, den

    # ---- output

    def __repr__(self):
        return f"FactoredRational({self.pretty()})"

    def __str__(self):
        return self.pretty()

    def pretty(self, system=None):
        return self._render(system, latex=False)

    def latex(self, system=None):
        return self._render(system, latex=True)

    def _render(self, system, latex):
        if self.is_zero():
            return "0"

        def group(items):
            texts = []
            for f, e in items:
                body, atomic = f.render(system, latex)
                if abs(e) != 1:
                    body = f"{body if atomic else '(' + body + ')'}^{{{abs(e)}}}" if latex \
                        else f"{body if atomic else '(' + body + ')'}^{abs(e)}"
                elif not atomic:
                    body = f"({body})" if not latex else f"\\left({body}\\right)"
                texts.append(body)
            return texts

        num = group((f, e) for f, e in self.factors.items() if e > 0)
        den = group((f, e) for f, e in self.factors.items() if e < 0)
        c = self.constant
        sep = " " if latex else " · "
        if latex:
            c_num, c_den = abs(c.numerator), c.denominator
            top = sep.join(([str(c_num)] if c_num != 1 or not num else []) + num)
            bottom = sep.join(([str(c_den)] if c_den != 1 else []) + den)
            body = f"\\frac{{{top}}}{{{bottom}}}" if bottom else top
            return ("-" if c < 0 else "") + body
        mag = abs(c)
        lead = "" if (mag == 1 and (num or den)) else str(mag)
        top = sep.join(([lead] if lead else []) + num) or "1"
        text = top
        if den:
            bottom = den[0] if len(den) == 1 else "(" + sep.join(den) + ")"
            text = f"{top} / {bottom}"
        return (MINUS if c < 0 else "") + text

    def to_json(self):
        return {
            "constant": str(self.constant),
            "factors": [{"coeffs": list(f.coeffs), "shift": str(f.shift), "exp": e}
                        for f, e in self.factors.items()],
        }


# --------------------------------------------------------------------------
# sparse polynomials


def _grlex(mono):
    return (sum(mono), mono)


class SparsePoly:
    """Polynomial over Q in ``nvars`` variables, stored as ``{exponent tuple: Fraction}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for mono, c in (terms or {}).items():
            c = _frac(c)
            if c:
                mono = tuple(int(x) for x in mono)
                if len(mono) != nvars:
                    raise DomainError("exponent vector of wrong length")
                self.terms[mono] = c

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars, i):
        return cls(nvars, {tuple(int(j == i) for j in range(nvars)): 1})

    def is_zero(self):
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise DomainError("polynomials in different numbers of variables")
            return other
        return SparsePoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SparsePoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return SparsePoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.nvars, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def leading_term(self):
        mono = max(self.terms, key=_grlex)
        return mono, self.terms[mono]

    def is_constant(self):
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def evaluate(self, point):
        point = [_frac(x) for x in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def compose_affine(self, matrix, offset):
        """``p(M x + b)``: variable ``i`` is replaced by ``sum_j M[i][j] x_j + b[i]``."""
        n = self.nvars
        images = []
        for i in range(n):
            terms = {tuple(int(k == j) for k in range(n)): matrix[i][j] for j in range(n)}
            terms[(0,) * n] = offset[i]
            images.append(SparsePoly(n, terms))
        powers = [{0: SparsePoly.constant(n, 1)} for _ in range(n)]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        out = SparsePoly(n)
        for m, c in self.terms.items():
            term = SparsePoly.constant(n, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def shift(self, sigma):
        n = self.nvars
        return self.compose_affine([[int(i == j) for j in range(n)] for i in range(n)], list(sigma))

    def dot_substitute(self, w):
        """``lambda -> w . lambda``."""
        offset = [sum(row) - 1 for row in w.matrix]
        return self.compose_affine(w.matrix, offset)

    def divide_exact(self, divisor):
        """Quotient if ``divisor`` divides ``self`` exactly, else ``None`` (grlex reduction)."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = divisor.leading_term()
        rem = SparsePoly(self.nvars, self.terms)
        quot = {}
        while not rem.is_zero():
            m, c = rem.leading_term()
            if any(a < b for a, b in zip(m, lm)):
                return None
            qm = tuple(a - b for a, b in zip(m, lm))
            qc = c / lc
            quot[qm] = quot.get(qm, 0) + qc
            rem = rem - SparsePoly(self.nvars, {qm: qc}) * divisor
        return SparsePoly(self.nvars, quot)

    def __repr__(self):
        return f"SparsePoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[m]
            vars_ = "*".join(f"t{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            if not vars_:
                parts.append(str(c))
            elif c == 1:
                parts.append(vars_)
            elif c == -1:
                parts.append("-" + vars_)
            else:
                parts.append(f"{c}*{vars_}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [{"exponents": list(m), "coeff": str(c)}
                for m, c in sorted(self.terms.items(), key=lambda mc: _grlex(mc[0]))]


def convolve(multiset, poly):
    """``lambda -> sum over mu of mult(mu) * p(lambda + mu)``."""
    out = SparsePoly(poly.nvars)
    for mu, m in multiset.items():
        out = out + poly.shift(mu) * m
    return out


def sym(system, poly):
    """Product of the dot-substituted copies ``p(w . lambda)`` over the Weyl group."""
    out = SparsePoly.constant(poly.nvars, 1)
    for w in system.weyl_group():
        out = out * poly.dot_substitute(w)
    return out


def is_dot_invariant(system, poly):
    """Check ``p(s_i . lambda) = p(lambda)`` for the simple reflections."""
    return all(poly.dot_substitute(system.simple_reflection(i)) == poly for i in range(system.rank))
