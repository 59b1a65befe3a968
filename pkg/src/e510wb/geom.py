"""Polyvector fields and holomorphic forms on C^5 with polynomial coefficients.

A ``GeomField`` is a finite sum of terms (polynomial coefficient) * (wedge
monomial of basis vector fields pd1..pd5 or basis one-forms dz1..dz5), all
of one kind and one wedge degree, plus an extrinsic Z/2 parity tag.

Sign conventions (pinned; see docs/conventions.md and the anchor tests):

* wedge monomials are stored with strictly increasing indices; any input
  permutation contributes its sign, repeated indices kill the term;
* interior contraction applies the generators of the contracting factor
  lowest-index first, which makes <pd1^pd2, dz1^dz2> = +1;
* the volume form is Omega = dz1^...^dz5 with epsilon_{12345} = +1, and
  omega_dual is contraction into Omega (or its inverse polyvector), so
  Omega^{-1} v (dz1^dz2^dz3^dz4) = +pd5;
* div(f pd_{i1}^...^pd_{ip}) = sum_k (-1)^(k-1) (d_{ik} f) pd_{I minus ik};
* the Schouten bracket is the failure of div to be a derivation of wedge:
  [P,Q] = (-1)^p div(P)^Q + P^div(Q) - (-1)^p div(P^Q), which restricts to
  the Lie bracket on vector fields and to L_mu on functions.

Coefficients are bosonic polynomial data; parity tags are bookkeeping for
the field-theory layer (Koszul signs enter through argument ordering in the
bracket machinery, not through the coefficient algebra).
"""

from __future__ import annotations

from .ratpoly import NVARS, Polynomial, check_coeff

PV = "pv"
FORM = "form"


def sort_with_sign(indices):
    """Sort index tuple ascending; return (sorted tuple, sign) or (None, 0)
    when an index repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions; inputs are tiny
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return None, 0
    return tuple(idx), sign


class GeomField:
    """Homogeneous-degree polyvector field (kind 'pv') or form (kind 'form').

    ``terms`` maps sorted index tuples to Polynomial coefficients; zero
    coefficients are dropped.  Immutable by convention.
    """

    __slots__ = ("kind", "degree", "parity", "terms")

    def __init__(self, kind, degree, terms=None, parity=0):
        if kind not in (PV, FORM):
            raise ValueError(f"unknown kind {kind!r}")
        self.kind = kind
        self.degree = degree
        self.parity = parity & 1
        t = {}
        if terms:
            for idx, p in terms.items():
                idx = tuple(idx)
                if len(idx) != degree:
                    raise ValueError(f"index {idx} has wrong degree (want {degree})")
                s_idx, sign = sort_with_sign(idx)
                if sign == 0 or p.is_zero():
                    continue
                q = p if sign == 1 else p.scale(-1)
                if s_idx in t:
                    q = t[s_idx] + q
                if q.is_zero():
                    t.pop(s_idx, None)
                else:
                    t[s_idx] = q
        self.terms = t

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, kind, degree, parity=0):
        return cls(kind, degree, {}, parity)

    @classmethod
    def from_poly(cls, kind, poly, parity=0):
        """Degree-0 field (a function) of the given kind."""
        return cls(kind, 0, {(): poly}, parity)

    @classmethod
    def vector(cls, i, coeff=None, parity=0):
        """coeff * pd_{i+1} (0-based i); coeff defaults to 1."""
        c = coeff if coeff is not None else Polynomial.const(1)
        return cls(PV, 1, {(i,): c}, parity)

    @classmethod
    def one_form(cls, i, coeff=None, parity=0):
        c = coeff if coeff is not None else Polynomial.const(1)
        return cls(FORM, 1, {(i,): c}, parity)

    @classmethod
    def wedge_basis(cls, kind, indices, coeff=None, parity=0):
        c = coeff if coeff is not None else Polynomial.const(1)
        return cls(kind, len(indices), {tuple(indices): c}, parity)

    # -- linear structure ----------------------------------------------------

    def __add__(self, other):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if (self.kind, self.degree) != (other.kind, other.degree):
            raise ValueError("cannot add fields of different kind/degree")
        t = dict(self.terms)
        for idx, p in other.terms.items():
            q = t.get(idx)
            q = p if q is None else q + p
            if q.is_zero():
                t.pop(idx, None)
            else:
                t[idx] = q
        out = GeomField.__new__(GeomField)
        out.kind, out.degree, out.parity, out.terms = (
            self.kind, self.degree, self.parity, t)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = check_coeff(c)
        t = {} if c == 0 else {i: p.scale(c) for i, p in self.terms.items()}
        out = GeomField.__new__(GeomField)
        out.kind, out.degree, out.parity, out.terms = (
            self.kind, self.degree, self.parity, t)
        return out

    def mul_poly(self, poly):
        t = {}
        for idx, p in self.terms.items():
            q = p * poly
            if not q.is_zero():
                t[idx] = q
        out = GeomField.__new__(GeomField)
        out.kind, out.degree, out.parity, out.terms = (
            self.kind, self.degree, self.parity, t)
        return out

    def is_zero(self):
        return not self.terms

    def with_parity(self, parity):
        out = GeomField.__new__(GeomField)
        out.kind, out.degree, out.parity, out.terms = (
            self.kind, self.degree, parity & 1, self.terms)
        return out

    def scalar(self):
        """The Polynomial of a degree-0 field."""
        if self.degree != 0:
            raise ValueError("scalar() needs a degree-0 field")
        return self.terms.get((), Polynomial.zero())

    def coeff_degree(self):
        """Max total degree among coefficients; -1 for zero field."""
        return max((p.degree() for p in self.terms.values()), default=-1)

    def homogeneous_part(self, d):
        t = {}
        for idx, p in self.terms.items():
            q = p.homogeneous_part(d)
            if not q.is_zero():
                t[idx] = q
        return GeomField(self.kind, self.degree, t, self.parity)

    def truncate_coeff_degree(self, d):
        t = {}
        for idx, p in self.terms.items():
            q = p.truncate_degree(d)
            if not q.is_zero():
                t[idx] = q
        return GeomField(self.kind, self.degree, t, self.parity)

    def __eq__(self, other):
        if not isinstance(other, GeomField) or self.kind != other.kind:
            return NotImplemented if not isinstance(other, GeomField) else False
        if not self.terms and not other.terms:
            return True  # the zero field is degree-ambiguous
        return self.degree == other.degree and self.terms == other.terms

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    def render(self, names="default"):
        """Canonical text: `coeff * basis` terms ordered by index tuple;
        basis = pd_i wedges for polyvectors, dz_i wedges for forms."""
        if not self.terms:
            return "0"
        sym = "pd" if self.kind == PV else "dz"
        parts = []
        for idx in sorted(self.terms):
            basis = "^".join(f"{sym}{i+1}" for i in idx) or "1"
            parts.append(f"({self.terms[idx].render(names)})*{basis}")
        return " + ".join(parts)

    def __repr__(self):
        return f"GeomField<{self.kind}{self.degree}|{self.render()}>"


# -- products and contractions ---------------------------------------------

def wedge(a, b):
    """Graded product of same-kind fields; degree and parity add."""
    if a.kind != b.kind:
        raise ValueError("wedge requires same kind")
    deg = a.degree + b.degree
    out = {}
    for i1, p1 in a.terms.items():
        for i2, p2 in b.terms.items():
            idx, sign = sort_with_sign(i1 + i2)
            if sign == 0:
                continue
            q = p1 * p2
            if sign < 0:
                q = q.scale(-1)
            acc = out.get(idx)
            q = q if acc is None else acc + q
            if q.is_zero():
                out.pop(idx, None)
            else:
                out[idx] = q
    f = GeomField.__new__(GeomField)
    f.kind, f.degree, f.parity, f.terms = (
        a.kind, deg, (a.parity + b.parity) & 1, out)
    return f


def _contract_indices(small, big):
    """Pair the sorted tuple `small` into `big`, generators lowest-first.

    Returns (remaining tuple, sign) or (None, 0) if small is not a subset.
    """
    rem = list(big)
    sign = 1
    for s in small:
        try:
            pos = rem.index(s)
        except ValueError:
            return None, 0
        if pos & 1:
            sign = -sign
        del rem[pos]
    return tuple(rem), sign


def contract(pv, form):
    """Full interior contraction pairing pd_i with dz_i as 1.

    Returns a form of degree q-p when q >= p, else a polyvector of degree
    p-q.  The smaller factor contracts into the larger, generators applied
    lowest-index first (anchor: <pd1^pd2, dz1^dz2> = +1).
    """
    if pv.kind != PV or form.kind != FORM:
        raise ValueError("contract(pv, form) wants a polyvector and a form")
    p, q = pv.degree, form.degree
    if q >= p:
        kind_out, deg_out = FORM, q - p
        outer, inner = form, pv
    else:
        kind_out, deg_out = PV, p - q
        outer, inner = pv, form
    out = {}
    for i_in, p_in in inner.terms.items():
        for i_out, p_out in outer.terms.items():
            rem, sign = _contract_indices(i_in, i_out)
            if sign == 0:
                continue
            c = p_in * p_out
            if sign < 0:
                c = c.scale(-1)
            acc = out.get(rem)
            c = c if acc is None else acc + c
            if c.is_zero():
                out.pop(rem, None)
            else:
                out[rem] = c
    f = GeomField.__new__(GeomField)
    f.kind, f.degree, f.parity, f.terms = (
        kind_out, deg_out, (pv.parity + form.parity) & 1, out)
    return f


def del_(f):
    """Holomorphic de Rham differential on forms: del(f dz_I) = sum_i
    (d_i f) dz_i ^ dz_I.  Parity tag flips (odd operator)."""
    if f.kind != FORM:
        raise ValueError("del_ acts on forms")
    if f.degree >= NVARS:
        return GeomField.zero(FORM, f.degree + 1, parity=(f.parity + 1) & 1)
    out = {}
    for idx, p in f.terms.items():
        for i in range(NVARS):
            dp = p.partial(i)
            if dp.is_zero():
                continue
            s_idx, sign = sort_with_sign((i,) + idx)
            if sign == 0:
                continue
            if sign < 0:
                dp = dp.scale(-1)
            acc = out.get(s_idx)
            dp = dp if acc is None else acc + dp
            if dp.is_zero():
                out.pop(s_idx, None)
            else:
                out[s_idx] = dp
    return GeomField(FORM, f.degree + 1, out, (f.parity + 1) & 1)


def div(pv):
    """Divergence for the flat volume form: div(f pd_I) =
    sum_k (-1)^(k-1) (d_{i_k} f) pd_{I minus i_k}; div o div = 0."""
    if pv.kind != PV:
        raise ValueError("div acts on polyvectors")
    if pv.degree == 0:
        return GeomField.zero(PV, 0, parity=(pv.parity + 1) & 1)
    out = {}
    for idx, p in pv.terms.items():
        for k, i in enumerate(idx):
            dp = p.partial(i)
            if dp.is_zero():
                continue
            if k & 1:
                dp = dp.scale(-1)
            rem = idx[:k] + idx[k + 1:]
            acc = out.get(rem)
            dp = dp if acc is None else acc + dp
            if dp.is_zero():
                out.pop(rem, None)
            else:
                out[rem] = dp
    return GeomField(PV, pv.degree - 1, out, (pv.parity + 1) & 1)


def schouten(a, b):
    """Schouten--Nijenhuis bracket of polyvectors, as the defect of div
    against wedge.  Restricts to the Lie bracket on vector fields and to
    [mu, nu] = L_mu nu on functions."""
    if a.kind != PV or b.kind != PV:
        raise ValueError("schouten needs polyvectors")
    sgn = -1 if a.degree & 1 else 1
    terms = []
    da = div(a)
    if not da.is_zero():
        terms.append(wedge(da, b).scale(sgn))
    db = div(b)
    if not db.is_zero():
        terms.append(wedge(a, db))
    ab = wedge(a, b)
    if not ab.is_zero():
        terms.append(div(ab).scale(-sgn))
    deg = a.degree + b.degree - 1
    out = GeomField.zero(PV, deg, parity=(a.parity + b.parity + 1) & 1)
    for t in terms:
        out = out + t
    return out.with_parity((a.parity + b.parity + 1) & 1)


def lie_derivative(v, x):
    """Lie derivative along a degree-1 polyvector: Cartan formula
    (contract then del plus del then contract) on forms, Schouten bracket
    on polyvectors."""
    if v.kind != PV or v.degree != 1:
        raise ValueError("lie_derivative needs a vector field")
    if x.kind == PV:
        return schouten(v, x)
    b = contract(v, del_(x))
    if x.degree == 0:  # interior product vanishes on functions
        return b.with_parity((v.parity + x.parity + 1) & 1)
    a = del_(contract(v, x))
    return (a + b).with_parity((v.parity + x.parity + 1) & 1)


_TOP = tuple(range(NVARS))


def omega_dual(x):
    """The isomorphisms PV^p ~ Omega^(5-p) induced by Omega = dz1^..^dz5,
    epsilon_{12345} = +1: forms contract into the inverse-volume polyvector,
    polyvectors contract into Omega."""
    if x.kind == FORM:
        target = GeomField.wedge_basis(PV, _TOP)
        out = {}
        for idx, p in x.terms.items():
            rem, sign = _contract_indices(idx, _TOP)
            if sign == 0:
                continue
            q = p if sign > 0 else p.scale(-1)
            acc = out.get(rem)
            q = q if acc is None else acc + q
            if q.is_zero():
                out.pop(rem, None)
            else:
                out[rem] = q
        return GeomField(PV, NVARS - x.degree, out, x.parity)
    out = {}
    for idx, p in x.terms.items():
        rem, sign = _contract_indices(idx, _TOP)
        if sign == 0:
            continue
        q = p if sign > 0 else p.scale(-1)
        acc = out.get(rem)
        q = q if acc is None else acc + q
        if q.is_zero():
            out.pop(rem, None)
        else:
            out[rem] = q
    return GeomField(FORM, NVARS - x.degree, out, x.parity)


def full_pairing(pv, form):
    """Scalar pairing of equal-degree polyvector and form as a Polynomial."""
    if pv.degree != form.degree:
        raise ValueError("full_pairing needs equal degrees")
    return contract(pv, form).scalar()
