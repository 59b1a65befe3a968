"""gl(5)/sl(5) weight machinery: plethysm by enumeration, highest-weight
peeling, and the vanishing arguments behind the master-equation proof.

Weights are integer 5-tuples; irreducibles are labeled by partitions with
at most 5 parts (gl(5) polynomial highest weights).  sl(5) statements are
made by congruence modulo the determinant character (1,1,1,1,1).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .geom import FORM, GeomField, contract, omega_dual, wedge
from .ratpoly import Polynomial

RANK = 5
_RHO = tuple(range(RANK - 1, -1, -1))  # (4,3,2,1,0)
_POS_ROOTS = [tuple((1 if k == i else -1 if k == j else 0) for k in range(RANK))
              for i in range(RANK) for j in range(i + 1, RANK)]

PLETHYSM_SIZE_GUARD = 2 * 10 ** 5


class IrrepLabel(tuple):
    """A partition with at most 5 parts, padded to length 5."""

    def __new__(cls, parts):
        parts = tuple(parts) + (0,) * (RANK - len(parts))
        if len(parts) != RANK:
            raise ValueError("at most 5 parts")
        if any(a < b for a, b in zip(parts, parts[1:])) or parts[-1] < 0:
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    def size(self):
        return sum(self)


FUNDAMENTAL = IrrepLabel((1,))
WEDGE2 = IrrepLabel((1, 1))


def hook_content_dim(label):
    """Dimension of the gl(5) irrep with highest weight `label` by the
    hook content formula (the independent dimension oracle)."""
    lam = list(IrrepLabel(label))
    conj = [sum(1 for r in lam if r > j) for j in range(lam[0])] if lam[0] else []
    dim = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            content = j - i
            hook = (row - j) + (conj[j] - i) - 1
            dim *= Fraction(RANK + content, hook)
    assert dim.denominator == 1
    return dim.numerator


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def weight_system(label):
    """Weight multiplicities of the irrep via Freudenthal's recursion.

    Returns a dict weight-tuple -> positive int.
    """
    lam = tuple(IrrepLabel(label))
    # enumerate candidate weights: lam minus nonneg combos of positive roots,
    # staying inside the convex range; BFS by level
    mults = {lam: 1}
    lam_rho = tuple(a + b for a, b in zip(lam, _RHO))
    norm_top = _dot(lam_rho, lam_rho)
    level = {lam}
    seen = {lam}
    pending = []
    while level:
        nxt = set()
        for mu in level:
            for alpha in _POS_ROOTS:
                nu = tuple(a - b for a, b in zip(mu, alpha))
                if nu not in seen and _is_in_hull(nu, lam):
                    seen.add(nu)
                    nxt.add(nu)
        pending.extend(sorted(nxt, reverse=True))
        level = nxt
    # Freudenthal, highest weight downward (sorted by decreasing level)
    pending.sort(key=lambda w: (_dot(lam, _RHO) - _dot(w, _RHO)))
    for mu in pending:
        mu_rho = tuple(a + b for a, b in zip(mu, _RHO))
        denom = norm_top - _dot(mu_rho, mu_rho)
        if denom == 0:
            continue
        total = 0
        for alpha in _POS_ROOTS:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, alpha))
                m = mults.get(nu, 0)
                if m == 0 and not _is_in_hull(nu, lam):
                    break
                if m:
                    total += m * _dot(nu, alpha)
                k += 1
        if total:
            num = 2 * total
            assert num % denom == 0
            m = num // denom
            if m:
                mults[mu] = m
    return mults


def _is_in_hull(mu, lam):
    """Rough hull test: same total, partial sums of the sorted weight are
    dominated by lam's (dominance order on the Weyl-sorted weight)."""
    if sum(mu) != sum(lam):
        return False
    s = sorted(mu, reverse=True)
    acc = 0
    lacc = 0
    for a, b in zip(s, lam):
        acc += a
        lacc += b
        if acc > lacc:
            return False
    return True


class WeightMultiplicity(dict):
    """Finite mapping from Z^5 weights to integer multiplicities."""

    def add(self, w, m=1):
        n = self.get(w, 0) + m
        if n == 0:
            self.pop(w, None)
        else:
            self[w] = n

    def total(self):
        return sum(self.values())

    def is_weyl_symmetric(self):
        for w, m in self.items():
            if self.get(tuple(sorted(w, reverse=True)), 0) != m:
                return False
        return True


def plethysm_weights(outer, k, inner):
    """Weight system of Sym^k or Wedge^k of the irrep `inner`, by direct
    enumeration of multisets/subsets of the inner weight system."""
    if outer not in ("sym", "wedge"):
        raise ValueError("outer must be 'sym' or 'wedge'")
    ws = weight_system(inner)
    basis = []
    for w, m in sorted(ws.items()):
        basis.extend([w] * m)
    n = len(basis)
    if outer == "sym":
        count = 1
        for i in range(k):
            count = count * (n + i) // (i + 1)
    else:
        count = 1
        for i in range(k):
            count = count * (n - i) // (i + 1)
    if count > PLETHYSM_SIZE_GUARD:
        raise ValueError(f"plethysm size {count} exceeds guard")
    out = WeightMultiplicity()
    chooser = (combinations_with_replacement if outer == "sym" else combinations)
    for combo in chooser(range(n), k):
        w = tuple(sum(basis[i][j] for i in combo) for j in range(RANK))
        out.add(w)
    return out


def tensor_weights(a, b):
    """Weight system of a tensor product of two weight systems (dicts)."""
    out = WeightMultiplicity()
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            out.add(tuple(x + y for x, y in zip(w1, w2)), m1 * m2)
    return out


def decompose(w):
    """Highest-weight peeling of a genuine character into irreducibles.

    Repeatedly takes the lexicographically maximal weight with nonzero
    multiplicity (a dominant highest weight for genuine characters) and
    subtracts its full Freudenthal weight system.  Raises on non-character
    input (negative multiplicity or non-dominant leading weight).
    """
    rest = WeightMultiplicity(w)
    out = []
    while rest:
        top = max(rest)
        m = rest[top]
        if m < 0:
            raise ValueError(f"negative multiplicity at {top}: not a character")
        if any(a < b for a, b in zip(top, top[1:])) or top[-1] < 0:
            raise ValueError(f"leading weight {top} not dominant: not a character")
        label = IrrepLabel(top)
        ws = weight_system(label)
        for wt, mult in ws.items():
            rest.add(wt, -m * mult)
        if any(v < 0 for v in rest.values()):
            raise ValueError("peeling went negative: not a character")
        out.append((label, m))
    out.sort(key=lambda t: tuple(t[0]), reverse=True)
    return out


def restrict_sl5(label):
    """sl(5) class of a gl(5) label: subtract the determinant power so the
    last part is zero."""
    c = label[-1]
    return tuple(a - c for a in label)


# the vector-field representation is wedge^4 of the fundamental (up to
# determinant); its dual restricts to the sl(5) class of the fundamental
_FUND_SL5 = restrict_sl5(IrrepLabel((1,)))


def contains_fundamental_dual(decomposition):
    """True iff some summand, restricted to sl(5), is the irrep dual to the
    vector-field representation (the class of the fundamental)."""
    for label, mult in decomposition:
        if mult and restrict_sl5(label) == _FUND_SL5:
            return True
    return False


def _basis_two_forms():
    out = []
    for i in range(RANK):
        for j in range(i + 1, RANK):
            out.append(GeomField.wedge_basis(FORM, (i, j)))
    return out


def symmetrized_contraction_vanishes(verbose=False, corrupt=False):
    """Check that the trilinear map (a1,a2,a3) -> (Omega^{-1} v (a1^a2)) v a3
    on constant two-forms vanishes when totally symmetrized, and likewise
    when totally antisymmetrized, over all 10^3 ordered basis triples.

    `corrupt` flips one term's sign (negative control).
    """
    from itertools import permutations, product
    basis = _basis_two_forms()
    perms = list(permutations(range(3)))
    signs = {p: 1 for p in perms}
    alt = {p: _perm_sign(p) for p in perms}
    n_checked = 0
    for trip in product(range(len(basis)), repeat=3):
        args = [basis[i] for i in trip]
        sym = GeomField.zero(FORM, 1)
        asym = GeomField.zero(FORM, 1)
        for p in perms:
            v = omega_dual(wedge(args[p[0]], args[p[1]]))
            term = contract(v, args[p[2]])
            if corrupt and p == (1, 0, 2):
                term = term.scale(-1)
            sym = sym + term.scale(signs[p])
            asym = asym + term.scale(alt[p])
        if not (sym.is_zero() and asym.is_zero()):
            return False
        n_checked += 1
    if verbose:
        print(f"checked {n_checked} ordered basis triples")
    return True


def _perm_sign(p):
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def decomposition_report(decomposition):
    """JSON-ready report: partitions, multiplicities, dimensions, total."""
    rows = [{"partition": list(label), "multiplicity": m,
             "dimension": hook_content_dim(label)}
            for label, m in decomposition]
    return {"summands": rows,
            "total_dimension": sum(r["multiplicity"] * r["dimension"]
                                   for r in rows)}
