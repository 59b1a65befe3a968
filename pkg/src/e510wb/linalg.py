"""Tiny exact sparse linear algebra over the rationals.

Vectors are dicts mapping hashable, mutually comparable keys to nonzero
exact rationals.  Everything is deterministic: pivots are chosen as the
minimal key present, so reduced bases are reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction

from .ratpoly import ratio


def vec_add(a, b, ca=1, cb=1):
    out = dict()
    for k, v in a.items():
        x = v * ca
        if x:
            out[k] = x
    for k, v in b.items():
        x = out.get(k, 0) + v * cb
        if x == 0:
            out.pop(k, None)
        else:
            out[k] = x
    return out


class Eliminator:
    """Incremental Gaussian elimination with deterministic minimal-key pivots."""

    def __init__(self):
        self.pivot_rows = {}  # pivot key -> row normalized to pivot coeff 1

    def reduce(self, vec):
        """Reduce vec against the current rows; returns the residual."""
        vec = dict(vec)
        while vec:
            k = min(vec)
            row = self.pivot_rows.get(k)
            if row is None:
                return vec
            c = vec[k]
            for kk, vv in row.items():
                x = vec.get(kk, 0) - c * vv
                if x == 0:
                    vec.pop(kk, None)
                else:
                    vec[kk] = x
        return vec

    def add(self, vec):
        """Insert vec; returns the residual (empty if dependent)."""
        res = self.reduce(vec)
        if res:
            k = min(res)
            c = res[k]
            inv = Fraction(1, 1) / Fraction(c)
            self.pivot_rows[k] = {kk: ratio_mul(vv, inv) for kk, vv in res.items()}
        return res

    @property
    def rank(self):
        return len(self.pivot_rows)


def ratio_mul(a, b):
    x = Fraction(a) * Fraction(b)
    return x.numerator if x.denominator == 1 else x


def rank(vectors):
    e = Eliminator()
    for v in vectors:
        e.add(v)
    return e.rank


def kernel_basis(images):
    """Kernel of the map sending basis vector i to the sparse vector
    images[i].  Returns a list of dicts {i: coeff} spanning the kernel.

    Implemented by eliminating images augmented with tracking coordinates.
    """
    e = Eliminator()
    kernel = []
    for i, img in enumerate(images):
        aug = {("img", k): v for k, v in img.items()}
        aug[("trk", i)] = 1
        res = e.reduce(aug)
        if all(k[0] == "trk" for k in res):
            kernel.append({k[1]: v for k, v in res.items()})
        else:
            k = min(res)
            c = res[k]
            inv = Fraction(1, 1) / Fraction(c)
            e.pivot_rows[k] = {kk: ratio_mul(vv, inv) for kk, vv in res.items()}
    return kernel


def reduce_to_basis(vectors):
    """Independent subset spanning the same space (residual rows, in input
    order); returns list of (index, residual_vector)."""
    e = Eliminator()
    out = []
    for i, v in enumerate(vectors):
        res = e.add(v)
        if res:
            out.append((i, res))
    return out


class SpanSolver:
    """Membership test in the span of a fixed generating set, with
    coefficients."""

    def __init__(self, generators):
        self.elim = Eliminator()
        for i, g in enumerate(generators):
            aug = {("img", k): v for k, v in g.items()}
            aug[("trk", i)] = 1
            # augmented elimination keyed on image coords first
            res = dict(aug)
            while True:
                img_keys = [k for k in res if k[0] == "img"]
                if not img_keys:
                    break
                k = min(img_keys)
                row = self.elim.pivot_rows.get(k)
                if row is None:
                    c = res[k]
                    inv = Fraction(1, 1) / Fraction(c)
                    self.elim.pivot_rows[k] = {kk: ratio_mul(vv, inv)
                                               for kk, vv in res.items()}
                    break
                c = res[k]
                for kk, vv in row.items():
                    x = res.get(kk, 0) - c * vv
                    if x == 0:
                        res.pop(kk, None)
                    else:
                        res[kk] = x

    def solve(self, target):
        """Return {generator index: coeff} with sum coeff*gen = target,
        or None if target is outside the span."""
        res = {("img", k): v for k, v in target.items()}
        combo = {}
        while True:
            img_keys = [k for k in res if k[0] == "img"]
            if not img_keys:
                break
            k = min(img_keys)
            row = self.elim.pivot_rows.get(k)
            if row is None:
                return None
            c = res[k]
            for kk, vv in row.items():
                if kk[0] == "trk":
                    x = combo.get(kk[1], 0) + c * vv
                    if x == 0:
                        combo.pop(kk[1], None)
                    else:
                        combo[kk[1]] = x
                else:
                    x = res.get(kk, 0) - c * vv
                    if x == 0:
                        res.pop(kk, None)
                    else:
                        res[kk] = x
        return {i: ratio(Fraction(v)) for i, v in combo.items()}
