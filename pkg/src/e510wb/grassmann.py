"""Polynomial coefficients extended by odd (Grassmann) parameters.

A ``GrassCoeff`` is a finite sum of theta-monomials with Polynomial
coefficients, where the thetas are anticommuting formal parameters
independent of the geometric wedge bookkeeping.  It duck-types the小
Polynomial interface used by :mod:`e510wb.geom`, so every geometric
operator works unchanged over these coefficients.

Purpose: rigorous multilinear extraction.  Evaluating a nonlinear field
map on ``sum_i eps_i x_i`` with nilpotent parameters (a fresh theta for an
odd field, a product of two fresh thetas for an even one) isolates the
fully multilinear term as the coefficient of the full theta product, with
every Koszul sign generated mechanically by theta reordering.
"""

from __future__ import annotations

from .ratpoly import Polynomial, check_coeff


def _merge_sign(s1, s2):
    """Sorted-tuple merge of disjoint theta index tuples with sign; (None, 0)
    on a repeat."""
    if set(s1) & set(s2):
        return None, 0
    merged = s1 + s2
    out = list(merged)
    sign = 1
    for i in range(1, len(out)):
        j = i
        while j > 0 and out[j - 1] > out[j]:
            out[j - 1], out[j] = out[j], out[j - 1]
            sign = -sign
            j -= 1
    return tuple(out), sign


class GrassCoeff:
    """Map from sorted theta-index tuples to Polynomial coefficients."""

    __slots__ = ("parts", "mode")

    def __init__(self, parts=None):
        p = {}
        if parts:
            for key, poly in parts.items():
                if not poly.is_zero():
                    p[tuple(key)] = poly
        self.parts = p
        self.mode = None

    @classmethod
    def from_poly(cls, poly):
        return cls({(): poly})

    @classmethod
    def theta(cls, i, poly=None):
        return cls({(i,): poly if poly is not None else Polynomial.const(1)})

    @classmethod
    def zero(cls):
        return cls({})

    def component(self, key):
        return self.parts.get(tuple(sorted(key)), Polynomial.zero())

    # -- duck-typed Polynomial interface ------------------------------------

    def is_zero(self):
        return not self.parts

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = GrassCoeff.from_poly(other)
        if isinstance(other, (int,)) and other == 0:
            return self
        p = dict(self.parts)
        for k, v in other.parts.items():
            s = p.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                p.pop(k, None)
            else:
                p[k] = s
        out = GrassCoeff.__new__(GrassCoeff)
        out.parts, out.mode = p, None
        return out

    __radd__ = __add__

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            other = GrassCoeff.from_poly(other)
        elif not isinstance(other, GrassCoeff):
            return self.scale(other)
        p = {}
        for k1, v1 in self.parts.items():
            for k2, v2 in other.parts.items():
                key, sign = _merge_sign(k1, k2)
                if sign == 0:
                    continue
                prod = v1 * v2
                if sign < 0:
                    prod = prod.scale(-1)
                s = p.get(key)
                prod = prod if s is None else s + prod
                if prod.is_zero():
                    p.pop(key, None)
                else:
                    p[key] = prod
        out = GrassCoeff.__new__(GrassCoeff)
        out.parts, out.mode = p, None
        return out

    def __rmul__(self, other):
        # scalars and plain polynomials are even: no sign
        return self.__mul__(other)

    def scale(self, c):
        c = check_coeff(c)
        if c == 0:
            return GrassCoeff.zero()
        return GrassCoeff({k: v.scale(c) for k, v in self.parts.items()})

    def partial(self, i):
        return GrassCoeff({k: v.partial(i) for k, v in self.parts.items()})

    def degree(self):
        return max((v.degree() for v in self.parts.values()), default=-1)

    def homogeneous_part(self, d):
        return GrassCoeff({k: v.homogeneous_part(d)
                           for k, v in self.parts.items()})

    def truncate_degree(self, d):
        return GrassCoeff({k: v.truncate_degree(d)
                           for k, v in self.parts.items()})

    def constant_term(self):
        return GrassCoeff({k: Polynomial.const(v.constant_term())
                           for k, v in self.parts.items()})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            other = GrassCoeff.from_poly(other)
        return isinstance(other, GrassCoeff) and self.parts == other.parts

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def render(self, names="default"):
        if not self.parts:
            return "0"
        bits = []
        for k in sorted(self.parts):
            th = "*".join(f"th{i}" for i in k)
            body = self.parts[k].render(names)
            bits.append(f"({body})" + (f"*{th}" if th else ""))
        return " + ".join(bits)

    def __repr__(self):
        return f"GrassCoeff({self.render()})"
