"""Sparse exact multivariate polynomial arithmetic in five variables.

Coefficients are exact rationals: Python ``int`` where possible,
``fractions.Fraction`` otherwise (never floats).  A polynomial is a sparse
mapping from exponent vectors (5-tuples of ints) to nonzero coefficients,
kept in canonical form so that equality of mappings is equality of
polynomials.

Three exponent modes cover every use in the package:

* ``None`` -- ordinary polynomials, all exponents >= 0;
* ``"laurent"`` -- unrestricted integer exponents (fugacity algebra);
* ``frozenset(S)`` -- the local-cohomology mode: exponents of the
  designated variables in S are always <= -1, the rest >= 0.  Products
  whose designated exponent would reach 0 are annihilated (the module
  structure of a punctured-space cohomology class); this truncation is
  applied silently during multiplication, while *constructing* an
  out-of-range exponent is an error.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

NVARS = 5

# coordinate names per context; rendering only, indices are the truth
VAR_NAMES = {
    "default": ("z1", "z2", "z3", "z4", "z5"),
    "m5": ("z1", "z2", "z3", "w1", "w2"),
    "m2": ("z", "w1", "w2", "w3", "w4"),
    "q": ("q1", "q2", "q3", "q4", "q5"),
}


def ratio(num, den=1):
    """Exact rational from integers, normalized to int when possible."""
    f = Fraction(num, den)
    return f.numerator if f.denominator == 1 else f


def check_coeff(c):
    if isinstance(c, float):
        raise TypeError("floating point coefficients are forbidden")
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if not isinstance(c, (int, Fraction)):
        raise TypeError(f"not an exact rational: {c!r}")
    return c


def _check_exp(exp, mode):
    if len(exp) != NVARS:
        raise ValueError(f"exponent {exp} must have {NVARS} entries")
    if mode is None:
        if any(e < 0 for e in exp):
            raise ValueError(f"negative exponent {exp} in ordinary mode")
    elif mode == "laurent":
        pass
    else:  # local-cohomology mode: designated entries <= -1, others >= 0
        for i, e in enumerate(exp):
            if i in mode:
                if e > -1:
                    raise ValueError(
                        f"designated exponent {e} > -1 at slot {i} in local mode")
            elif e < 0:
                raise ValueError(f"negative exponent {exp} at ordinary slot {i}")


def _join_modes(a, b):
    if a == b:
        return a
    if a is None:
        return b
    if b is None:
        return a
    raise ValueError(f"incompatible polynomial modes {a!r} and {b!r}")


class Polynomial:
    """Immutable sparse polynomial over exact rationals.

    ``terms`` maps exponent 5-tuples to nonzero coefficients.  Do not
    mutate after construction; every operation returns a new value.
    """

    __slots__ = ("terms", "mode")

    def __init__(self, terms=None, mode=None, _checked=False):
        if _checked:
            # trusted internal path: terms already canonical
            self.terms = terms if terms is not None else {}
            self.mode = mode
            return
        t = {}
        if terms:
            for exp, c in terms.items():
                c = check_coeff(c)
                if c == 0:
                    continue
                exp = tuple(exp)
                _check_exp(exp, mode)
                t[exp] = c
        self.terms = t
        self.mode = mode

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, mode=None):
        return cls({}, mode)

    @classmethod
    def const(cls, c, mode=None):
        c = check_coeff(c)
        if c == 0:
            return cls({}, mode)
        exp = (0,) * NVARS
        if mode not in (None, "laurent"):
            raise ValueError("constants do not live in local mode")
        return cls({exp: c}, mode, _checked=True)

    @classmethod
    def monomial(cls, exp, c=1, mode=None):
        return cls({tuple(exp): c}, mode)

    @classmethod
    def variable(cls, i, mode=None):
        """The coordinate z_{i+1} (0-based index i)."""
        exp = tuple(1 if j == i else 0 for j in range(NVARS))
        return cls({exp: 1}, mode)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other, self.mode)
        mode = _join_modes(self.mode, other.mode)
        t = dict(self.terms)
        for exp, c in other.terms.items():
            s = t.get(exp, 0) + c
            if s == 0:
                t.pop(exp, None)
            else:
                t[exp] = check_coeff(s)
        return Polynomial(t, mode, _checked=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()},
                          self.mode, _checked=True)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial)
                       else Polynomial.const(-other, self.mode))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        mode = _join_modes(self.mode, other.mode)
        local = mode if isinstance(mode, frozenset) else None
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                if local is not None and any(exp[i] > -1 for i in local):
                    continue  # annihilation: designated exponent reached 0
                s = t.get(exp, 0) + c1 * c2
                if s == 0:
                    t.pop(exp, None)
                else:
                    t[exp] = s
        out = Polynomial.__new__(Polynomial)
        out.terms = {e: check_coeff(c) for e, c in t.items() if c != 0}
        out.mode = mode
        return out

    __rmul__ = __mul__

    def scale(self, c):
        c = check_coeff(c)
        if c == 0:
            return Polynomial({}, self.mode)
        return Polynomial({e: check_coeff(v * c) for e, v in self.terms.items()},
                          self.mode, _checked=True)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = Polynomial.const(1, self.mode if self.mode == "laurent" else None)
        if self.mode not in (None, "laurent"):
            raise ValueError("powers not defined in local mode")
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- calculus ----------------------------------------------------------

    def partial(self, i):
        """Formal partial derivative in variable i (0-based); power rule
        applies to Laurent exponents."""
        t = {}
        for exp, c in self.terms.items():
            k = exp[i]
            if k == 0:
                continue
            e2 = exp[:i] + (k - 1,) + exp[i + 1:]
            t[e2] = t.get(e2, 0) + c * k
        return Polynomial(t, self.mode, _checked=True)

    def euler(self):
        """Sum_i z_i d/dz_i; multiplies each homogeneous piece by its degree."""
        if self.mode is not None:
            raise ValueError("euler operator requires ordinary mode")
        t = {}
        for exp, c in self.terms.items():
            d = sum(exp)
            if d:
                t[exp] = c * d
        return Polynomial(t, None, _checked=True)

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get((0,) * NVARS, 0)

    def degree(self):
        """Maximal total degree (L1 norm of exponents); -1 for zero."""
        if not self.terms:
            return -1
        return max(sum(abs(e) for e in exp) for exp in self.terms)

    def homogeneous_part(self, d):
        t = {e: c for e, c in self.terms.items()
             if sum(abs(x) for x in e) == d}
        return Polynomial(t, self.mode, _checked=True)

    def truncate_degree(self, d):
        t = {e: c for e, c in self.terms.items()
             if sum(abs(x) for x in e) <= d}
        return Polynomial(t, self.mode, _checked=True)

    def is_homogeneous(self):
        degs = {sum(abs(x) for x in e) for e in self.terms}
        return len(degs) <= 1

    def monomial_map(self, images, mode="laurent"):
        """Substitute each variable by a Laurent monomial.

        ``images`` is a list of NVARS exponent 5-tuples: variable i maps to
        the monomial with exponent vector images[i].  Used for fugacity
        specializations such as q2 -> q1^{-1}.
        """
        t = {}
        for exp, c in self.terms.items():
            out = [0] * NVARS
            for i, k in enumerate(exp):
                if k:
                    for j, m in enumerate(images[i]):
                        out[j] += k * m
            key = tuple(out)
            s = t.get(key, 0) + c
            if s == 0:
                t.pop(key, None)
            else:
                t[key] = s
        return Polynomial(t, mode, _checked=True)

    # -- comparison / rendering -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other, self.mode)
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def __repr__(self):
        return f"Polynomial({self.render()})"

    def render(self, names="default"):
        """Canonical text form: terms in lexicographic exponent order."""
        if not self.terms:
            return "0"
        nm = VAR_NAMES[names]
        parts = []
        for exp in sorted(self.terms):
            c = self.terms[exp]
            factors = [str(c)]
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(nm[i])
                elif e != 0:
                    factors.append(f"{nm[i]}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


ZERO = Polynomial.zero()
ONE = Polynomial.const(1)


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_scale(p, c):
    return p.scale(c)


def partial_derivative(p, i):
    return p.partial(i)


def euler_apply(p):
    return p.euler()


def monomials_of_degree(d, nvars=NVARS):
    """All exponent tuples of total degree d (ordinary mode), sorted."""
    out = []
    for bars in combinations_with_replacement(range(nvars), d):
        exp = [0] * nvars
        for b in bars:
            exp[b] += 1
        out.append(tuple(exp))
    return sorted(out)
