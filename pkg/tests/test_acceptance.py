"""Acceptance suite: one test per criterion, each printing a pass/fail line.

The lines are written to the real stdout so they stay visible under pytest's
capture.  Every criterion carries the time budget it must meet.
"""

import random
import sys
import time
from itertools import product

from ktq.algebra import OpTable, affine_table, classify, hat
from ktq.chains import (
    Chain,
    all_tuples,
    boundary,
    boundary_tuple,
    face_l,
    face_r,
    relator_generators,
    reverse_chain,
    reverse_tuple,
)
from ktq.chains import d1_holds, d2_holds, is_d_degenerate
from ktq.diagram import (
    associated_chain,
    brute_force_colorings,
    colorings,
    matched_colorings,
)
from ktq.homology import (
    NAMED_VARIANTS,
    HomologyClassChecker,
    chain_basis,
    chain_vector,
    homology,
    relator_columns,
    two_cocycles,
)
from ktq.intlinalg import LatticeSolver
from ktq.invariants import state_sum

from conftest import load_algebra, load_correspondence, load_diagram

SAMPLE_NAMES = [
    "order1.ktq",
    "z2sum.ktq",
    "z2sum1.ktq",
    "z3sum.ktq",
    "z3linear.ktq",
    "z5affine.ktq",
]

CLASSICAL_DIAGRAMS = [
    "unknot0.dg",
    "kink.dg",
    "trefoil.dg",
    "marker.dg",
    "r2par_before.dg",
    "r2par_after.dg",
    "r2anti_before.dg",
    "r2anti_after.dg",
    "r3_before.dg",
    "r3_after.dg",
]

FLAT_DIAGRAMS = [
    "fkink.dg",
    "fr2_before.dg",
    "fr2par_after.dg",
    "fr2anti_after.dg",
    "fr3_before.dg",
    "fr3_after.dg",
]


class criterion:
    """Times a criterion block and prints its pass/fail line.

    The line is printed with capture suspended so it reaches the terminal
    even when the criterion passes.
    """

    def __init__(self, num, label, budget, capsys=None):
        self.num = num
        self.label = label
        self.budget = budget
        self.capsys = capsys

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, etype, evalue, tb):
        elapsed = time.perf_counter() - self.start
        status = "pass" if etype is None and elapsed < self.budget else "FAIL"
        line = "criterion %2d (%s): %s  [%.2fs / %ds]" % (
            self.num, self.label, status, elapsed, self.budget,
        )
        if self.capsys is not None:
            with self.capsys.disabled():
                print(line)
                sys.stdout.flush()
        else:
            print(line)
        if etype is None:
            assert elapsed < self.budget, "criterion %d over budget" % self.num
        return False


# -- criterion 1 ------------------------------------------------------------


def brute_quasigroup(t):
    n = t.order
    for slot in range(3):
        for f0, f1 in product(range(n), repeat=2):
            seen = set()
            for x in range(n):
                args = [f0, f1]
                args.insert(slot, x)
                seen.add(t(*args))
            if len(seen) != n:
                return False
    return True


def brute_a3(t):
    a3l = a3r = True
    for a, b, c, d in product(range(t.order), repeat=4):
        abc = t(a, b, c)
        bcd = t(b, c, d)
        if t(abc, c, d) != t(t(a, b, bcd), bcd, d):
            a3l = False
        if t(a, b, bcd) != t(a, abc, t(abc, c, d)):
            a3r = False
    return a3l, a3r


def brute_involutory(t):
    if not brute_quasigroup(t):
        return False
    return all(
        t(a, t(a, b, c), c) == b for a, b, c in product(range(t.order), repeat=3)
    )


def agrees_with_brute(t):
    q = classify(t)
    a3l, a3r = brute_a3(t)
    return (
        q.is_quasigroup == brute_quasigroup(t)
        and q.satisfies_a3l == a3l
        and q.satisfies_a3r == a3r
        and q.is_involutory == brute_involutory(t)
    )


def test_criterion_01_axiom_oracle(capsys):
    with criterion(1, "axiom oracle vs brute force", 10, capsys):
        for values in product(range(2), repeat=8):
            assert agrees_with_brute(OpTable(2, values))
        rng = random.Random(2026)
        for _ in range(500):
            values = tuple(rng.randrange(3) for _ in range(27))
            assert agrees_with_brute(OpTable(3, values))
        for n in (3, 4, 5):
            for alpha, beta, gamma in product(range(n), repeat=3):
                assert agrees_with_brute(affine_table(n, alpha, beta, gamma))


# -- criterion 2 ------------------------------------------------------------


def hand_d1(T, x):
    a, b, c = x
    return Chain(0, [
        ((b, c), 1),
        ((a, T(a, b, c)), -1),
        ((T(a, b, c), c), -1),
        ((a, b), 1),
    ])


def hand_d2(T, x):
    a, b, c, d = x
    abc = T(a, b, c)
    bcd = T(b, c, d)
    return Chain(1, [
        ((b, c, d), 1),
        ((a, abc, T(abc, c, d)), -1),
        ((abc, c, d), -1),
        ((a, b, bcd), 1),
        ((T(a, b, bcd), bcd, d), 1),
        ((a, b, c), -1),
    ])


def hand_d3(T, x):
    a, b, c, d, e = x
    abc = T(a, b, c)
    bcd = T(b, c, d)
    cde = T(c, d, e)
    t1 = T(abc, c, d)
    t2 = T(b, c, cde)
    return Chain(2, [
        ((b, c, d, e), 1),
        ((a, abc, t1, T(t1, d, e)), -1),
        ((abc, c, d, e), -1),
        ((a, b, bcd, T(bcd, d, e)), 1),
        ((T(a, b, bcd), bcd, d, e), 1),
        ((a, b, c, cde), -1),
        ((T(a, b, t2), t2, cde, e), -1),
        ((a, b, c, d), 1),
    ])


def test_criterion_02_low_degree_formulas(capsys):
    with criterion(2, "hand-coded low-degree differentials", 5, capsys):
        X = load_algebra("z3linear.ktq")
        T = X.t
        for x in all_tuples(3, 1):
            assert boundary_tuple(X, x, "full") == hand_d1(T, x)
        for x in all_tuples(3, 2):
            assert boundary_tuple(X, x, "full") == hand_d2(T, x)
        for x in all_tuples(3, 3):
            assert boundary_tuple(X, x, "full") == hand_d3(T, x)


# -- criterion 3 ------------------------------------------------------------


def test_criterion_03_boundary_squares_to_zero(capsys):
    with criterion(3, "d o d = 0, kinds L/R/full, degrees 1-4", 30, capsys):
        algebras = [
            classify(OpTable(2, (0, 1, 1, 0, 1, 0, 0, 1))),
            classify(OpTable(2, (1, 0, 0, 1, 0, 1, 1, 0))),
            load_algebra("z3linear.ktq"),
        ]
        for X in algebras:
            for kind in ("L", "R", "full"):
                for n in (1, 2, 3, 4):
                    for tup in all_tuples(X.order, n):
                        assert not boundary(X, boundary_tuple(X, tup, kind), kind)


# -- criterion 4 ------------------------------------------------------------


def relator_matrix(X, n, variant):
    cols = relator_columns(X, n, variant)
    nrows = len(chain_basis(X.order, n))
    return [[col[i] for col in cols] for i in range(nrows)], len(cols)


def test_criterion_04_subcomplex_closure(capsys):
    with criterion(4, "relator boundaries stay in relator span", 60, capsys):
        cases = [
            (load_algebra("z3linear.ktq"), ("D", "I", "ID")),
            (load_algebra("z5affine.ktq"), ("D",)),
        ]
        for X, variants in cases:
            for variant in variants:
                for kind in ("L", "R", "full"):
                    for n in (1, 2, 3):
                        M, ncols = relator_matrix(X, n - 1, variant)
                        solver = LatticeSolver(M, ncols) if ncols else None
                        index = {
                            t: i for i, t in enumerate(chain_basis(X.order, n - 1))
                        }
                        for g in relator_generators(X, n, variant):
                            v = chain_vector(boundary(X, g, kind), index)
                            if solver is None:
                                assert not any(v), (X.order, variant, kind, n)
                            else:
                                assert solver.contains(v), (X.order, variant, kind, n)


# -- criterion 5 ------------------------------------------------------------


def test_criterion_05_duality_lemmas(capsys):
    with criterion(5, "face and boundary reversal lemmas", 10, capsys):
        for name in SAMPLE_NAMES:
            X = load_algebra(name)
            Xh = classify(hat(X.t))
            for n in (0, 1, 2, 3):
                for tup in all_tuples(X.order, n):
                    rev = reverse_tuple(tup)
                    for i in range(n + 1):
                        assert face_r(X, i, tup) == reverse_tuple(
                            face_l(Xh, n - i, rev)
                        )
                    assert boundary_tuple(X, tup, "R") == (-1) ** n * reverse_chain(
                        boundary_tuple(Xh, rev, "L")
                    )


# -- criterion 6 ------------------------------------------------------------


def test_criterion_06_degeneracy_equivalence(capsys):
    with criterion(6, "D1 / D2 / unified condition equivalence", 5, capsys):
        for name in SAMPLE_NAMES:
            X = load_algebra(name)
            for n in (1, 2, 3):
                for tup in all_tuples(X.order, n):
                    flag = is_d_degenerate(X, tup)[0]
                    assert flag == d1_holds(X, tup) == d2_holds(X, tup)


# -- criterion 7 ------------------------------------------------------------


def test_criterion_07_coloring_solver(capsys):
    with criterion(7, "coloring solver vs brute force", 30, capsys):
        z3 = load_algebra("z3linear.ktq")
        z5 = load_algebra("z5affine.ktq")
        for name in CLASSICAL_DIAGRAMS + FLAT_DIAGRAMS:
            d = load_diagram(name)
            algebras = [z3] if d.is_flat else [z3, z5]
            for X in algebras:
                if X.order ** d.num_regions > 10 ** 6:
                    continue
                assert colorings(d, X) == brute_force_colorings(d, X), name
        assert len(colorings(load_diagram("trefoil.dg"), z3)) == 3
        for X in (z3, z5):
            assert len(colorings(load_diagram("unknot0.dg"), X)) == X.order ** 2


# -- criterion 8 ------------------------------------------------------------


def test_criterion_08_cycle_property(capsys):
    with criterion(8, "associated chains are cycles", 10, capsys):
        samples = [load_algebra(n) for n in SAMPLE_NAMES]
        for name in CLASSICAL_DIAGRAMS + FLAT_DIAGRAMS:
            d = load_diagram(name)
            for X in samples:
                if d.is_flat and not X.is_iktq:
                    continue
                for col in colorings(d, X):
                    c = associated_chain(d, X, col)
                    assert not boundary(X, c, "full")


# -- criterion 9 ------------------------------------------------------------

# (after, before, correspondence, variant name, algebra, cocycle modulus)
MOVE_PAIRS = [
    ("kink.dg", "unknot0.dg", "kink_unknot.corr", "N", "z3linear.ktq", 3),
    ("r2par_after.dg", "r2par_before.dg", "r2par.corr", "N", "z3linear.ktq", 3),
    ("r2anti_after.dg", "r2anti_before.dg", "r2anti.corr", "N", "z3linear.ktq", 3),
    ("r3_after.dg", "r3_before.dg", "r3.corr", "N", "z3linear.ktq", 3),
    ("r3_after.dg", "r3_before.dg", "r3.corr", "N", "z5affine.ktq", 3),
    ("fkink.dg", "unknot0.dg", "kink_unknot.corr", "NID", "z3linear.ktq", 3),
    ("fr2par_after.dg", "fr2_before.dg", "fr2par.corr", "NI", "z3linear.ktq", 3),
    ("fr2anti_after.dg", "fr2_before.dg", "fr2anti.corr", "NI", "z3linear.ktq", 3),
    ("fr3_after.dg", "fr3_before.dg", "fr3.corr", "NI", "z3linear.ktq", 3),
    ("fr3_after.dg", "fr3_before.dg", "fr3.corr", "NID", "z3linear.ktq", 3),
]


def test_criterion_09_invariance_suite(capsys):
    with criterion(9, "Reidemeister move fixture pairs", 120, capsys):
        for after, before, corr, vname, alg, m in MOVE_PAIRS:
            X = load_algebra(alg)
            d1 = load_diagram(after)
            d2 = load_diagram(before)
            pairs = load_correspondence(corr)
            variant = NAMED_VARIANTS[vname]
            assert len(colorings(d1, X)) == len(colorings(d2, X)), (after, alg)
            checker = HomologyClassChecker(X, variant)
            matched = matched_colorings(d1, d2, X, pairs)
            assert matched, (after, alg)
            for c1, c2 in matched:
                assert checker.equal(
                    associated_chain(d1, X, c1), associated_chain(d2, X, c2)
                ), (after, alg, c1)
            for phi in two_cocycles(X, m, variant):
                assert state_sum(d1, X, phi) == state_sum(d2, X, phi), (after, alg)


# -- criterion 10 -----------------------------------------------------------


def modp_nullspace(rows, ncols, p):
    """Row-reduce over F_p and read off a nullspace basis (independent of
    the package's integer pipeline)."""
    A = [[x % p for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] % p), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [(x * inv) % p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        v = [0] * ncols
        v[c] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-A[i][c]) % p
        basis.append(v)
    return basis


def modp_rank(rows, ncols, p):
    return ncols - len(modp_nullspace(rows, ncols, p))


def test_criterion_10_cocycle_cross_check(capsys):
    with criterion(10, "cocycles vs independent mod-p reduction", 60, capsys):
        X = load_algebra("z3linear.ktq")
        triples = chain_basis(3, 1)
        index = {t: i for i, t in enumerate(triples)}
        for p in (2, 3, 5):
            for vname in ("N", "NID"):
                variant = NAMED_VARIANTS[vname]
                rows = [
                    chain_vector(boundary_tuple(X, tup, "full"), index)
                    for tup in chain_basis(3, 2)
                ]
                for g in relator_generators(X, 1, variant.relators):
                    rows.append(chain_vector(g, index))
                expected = modp_nullspace(rows, len(triples), p)
                got = []
                for phi in two_cocycles(X, p, variant):
                    v = [0] * len(triples)
                    for tup, val in phi.values.items():
                        v[index[tup]] = val % p
                    got.append(v)
                # equal spans over F_p: same rank each way and joined
                ra = modp_rank(expected, len(triples), p)
                rb = modp_rank(got, len(triples), p)
                rj = modp_rank(expected + got, len(triples), p)
                assert ra == rb == rj, (p, vname)


# -- criterion 11 -----------------------------------------------------------


def torsion_count(group, p):
    return sum(1 for d in group.torsion if d % p == 0)


def quotient_h1_dim_modp(X, variant, p):
    """dim over F_p of degree-1 homology of the quotient complex, from
    plain rank counts (no integer pipeline involved)."""
    n1 = len(chain_basis(X.order, 1))

    def bmat(n):
        index = {t: i for i, t in enumerate(chain_basis(X.order, n - 1))}
        return [
            chain_vector(boundary_tuple(X, tup, "full"), index)
            for tup in chain_basis(X.order, n)
        ]  # rows = columns of the true matrix; rank is transpose-invariant

    def rmat(n):
        index = {t: i for i, t in enumerate(chain_basis(X.order, n))}
        return [chain_vector(g, index) for g in relator_generators(X, n, variant)]

    d1_rows = bmat(1)
    d2_rows = bmat(2)
    r1_rows = rmat(1)
    r0_rows = []  # no relators below degree 1
    n0 = len(chain_basis(X.order, 0))
    dim_c1 = n1 - modp_rank(r1_rows, n1, p)
    rank_d1 = modp_rank(d1_rows + r0_rows, n0, p) - modp_rank(r0_rows, n0, p)
    rank_d2 = modp_rank(d2_rows + r1_rows, n1, p) - modp_rank(r1_rows, n1, p)
    return dim_c1 - rank_d1 - rank_d2


def test_criterion_11_homology_regressions(capsys):
    with criterion(11, "homology regression and mod-p cross-check", 120, capsys):
        for name in SAMPLE_NAMES:
            X = load_algebra(name)
            assert str(homology(X, -1)) == "Z"
        order1 = load_algebra("order1.ktq")
        for n in (1, 2):
            assert homology(order1, n, NAMED_VARIANTS["N"]).is_trivial
        frozen = {
            ("z2sum.ktq", "Z^2"),
            ("z2sum1.ktq", "Z"),
            ("z3linear.ktq", "Z^6"),
        }
        for name, expect in frozen:
            X = load_algebra(name)
            h1 = homology(X, 1, NAMED_VARIANTS["N"])
            h0 = homology(X, 0, NAMED_VARIANTS["N"])
            assert str(h1) == expect, name
            # universal coefficients: dim_p H_1(F_p) counts the free rank
            # plus p-torsion of H_1 and of H_0
            for p in (2, 3):
                want = (
                    h1.free_rank + torsion_count(h1, p) + torsion_count(h0, p)
                )
                assert quotient_h1_dim_modp(X, "D", p) == want, (name, p)
