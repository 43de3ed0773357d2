"""Cocycle state sums and invariance reports over fixture diagram pairs."""

from dataclasses import dataclass
from typing import Tuple

from .diagram import associated_chain, colorings, matched_colorings
from .errors import MathError
from .homology import HomologyClassChecker, HomologyVariant


@dataclass(frozen=True)
class GroupRingElement:
    """An element of Z[Z_m], additively written: a finitely supported
    integer-coefficient map on residues mod m."""

    modulus: int
    coeffs: Tuple[Tuple[int, int], ...]  # sorted (residue, coefficient) pairs

    @classmethod
    def from_dict(cls, modulus, d):
        return cls(modulus, tuple(sorted((r, c) for r, c in d.items() if c)))

    def as_dict(self):
        return dict(self.coeffs)

    def total(self):
        return sum(c for _, c in self.coeffs)

    def render(self):
        if not self.coeffs:
            return "0"
        return " + ".join("%d*[%d]" % (c, r) for r, c in self.coeffs)

    def __str__(self):
        return self.render()


def state_sum(d, X, phi):
    """The cocycle state sum: for each coloring, accumulate the signed sum
    of cocycle values over crossings (markers contribute nothing), and
    record one group-ring unit at the resulting residue."""
    if any(t >= X.order for tup in phi.values for t in tup):
        raise MathError("cocycle refers to elements outside the algebra")
    m = phi.modulus
    acc = {}
    for col in colorings(d, X):
        s = 0
        for cr in d.crossings:
            if cr.kind == "M":
                continue
            sign = -1 if cr.kind == "N" else 1
            tri = (col[cr.corners[0]], col[cr.corners[1]], col[cr.corners[2]])
            s = (s + sign * phi(tri)) % m
        acc[s] = acc.get(s, 0) + 1
    return GroupRingElement.from_dict(m, acc)


def invariant_report(d1, d2, X, variant=None, correspondence=None, cocycles=()):
    """Compare two diagrams: coloring counts, homology classes of matched
    colorings (when a region correspondence is supplied), and state sums
    for each given cocycle.

    Returns a list of (key, value) rows ending with a 'verdict' row, either
    'consistent with invariance' or 'distinguished'.
    """
    if (d1.is_flat and d2.is_classical) or (d2.is_flat and d1.is_classical):
        raise MathError("cannot compare a flat diagram with a classical one")
    if variant is None:
        variant = HomologyVariant("D", "quotient", "full")
    rows = []
    n1 = len(colorings(d1, X))
    n2 = len(colorings(d2, X))
    rows.append(("colorings.first", str(n1)))
    rows.append(("colorings.second", str(n2)))
    counts_equal = n1 == n2
    rows.append(("colorings.equal", "yes" if counts_equal else "no"))

    classes_equal = True
    if correspondence is not None:
        checker = HomologyClassChecker(X, variant)
        checked = 0
        for c1, c2 in matched_colorings(d1, d2, X, correspondence):
            eq = checker.equal(
                associated_chain(d1, X, c1), associated_chain(d2, X, c2)
            )
            classes_equal = classes_equal and eq
            checked += 1
        rows.append(("classes.checked", str(checked)))
        rows.append(("classes.equal", "yes" if classes_equal else "no"))

    sums_equal = True
    for i, phi in enumerate(cocycles):
        s1 = state_sum(d1, X, phi)
        s2 = state_sum(d2, X, phi)
        rows.append(("statesum.%d.first" % i, s1.render()))
        rows.append(("statesum.%d.second" % i, s2.render()))
        rows.append(("statesum.%d.equal" % i, "yes" if s1 == s2 else "no"))
        sums_equal = sums_equal and s1 == s2

    verdict = (
        "consistent with invariance"
        if counts_equal and classes_equal and sums_equal
        else "distinguished"
    )
    rows.append(("verdict", verdict))
    return rows


def render_report(rows):
    return "\n".join("%s %s" % (k, v) for k, v in rows) + "\n"
