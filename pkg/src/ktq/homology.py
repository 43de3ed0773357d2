"""Homology of the chain complexes attached to a finite KTQ or IKTQ.

Chain groups are materialized in the lexicographic tuple basis; relator
subgroups (degenerate tuples, involutory two-term sums, or both) enter
either as subcomplexes or as quotients.  All arithmetic is exact.
"""

from dataclasses import dataclass
from .chains import Chain, all_tuples, boundary, boundary_tuple, relator_generators
from .errors import FormatError, MathError
from .intlinalg import (
    AbelianGroup,
    LatticeSolver,
    cokernel,
    column_hnf,
    kernel_int,
    lattice_basis,
)

RELATOR_CHOICES = ("none", "D", "I", "ID")
MODE_CHOICES = ("quotient", "subcomplex")
DIFF_CHOICES = ("L", "R", "full")


@dataclass(frozen=True)
class HomologyVariant:
    relators: str = "none"
    mode: str = "quotient"
    diff_kind: str = "full"

    def __post_init__(self):
        if self.relators not in RELATOR_CHOICES:
            raise ValueError("unknown relator set %r" % (self.relators,))
        if self.mode not in MODE_CHOICES:
            raise ValueError("unknown mode %r" % (self.mode,))
        if self.diff_kind not in DIFF_CHOICES:
            raise ValueError("unknown differential kind %r" % (self.diff_kind,))


#: Shorthand names used by the command line and the invariance lemmas.
NAMED_VARIANTS = {
    "plain": HomologyVariant("none", "quotient", "full"),
    "N": HomologyVariant("D", "quotient", "full"),
    "NI": HomologyVariant("I", "quotient", "full"),
    "NID": HomologyVariant("ID", "quotient", "full"),
}


def chain_basis(order, n):
    """Lexicographic basis of the degree-n chain group; degree -2 is Z with
    the empty tuple as generator."""
    return all_tuples(order, n)


def chain_vector(c, index):
    vec = [0] * len(index)
    for tup, coeff in c.terms.items():
        vec[index[tup]] += coeff
    return vec


def boundary_matrix(X, n, kind="full"):
    """Matrix of the degree-n differential: rows indexed by the degree n-1
    basis, columns by the degree-n basis."""
    rows = chain_basis(X.order, n - 1)
    cols = chain_basis(X.order, n)
    index = {t: i for i, t in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for j, tup in enumerate(cols):
        for t2, c in boundary_tuple(X, tup, kind).terms.items():
            M[index[t2]][j] = c
    return M


def relator_columns(X, n, relators):
    """Relator generators of degree n as column vectors (list of columns)."""
    if relators == "none" or n < 1:
        return []
    index = {t: i for i, t in enumerate(chain_basis(X.order, n))}
    return [chain_vector(g, index) for g in relator_generators(X, n, relators)]


def default_degree_cap(order):
    # |X|**(n+2) generator growth; see the module notes
    return 4 if order <= 3 else 3


def _columns_to_matrix(cols, nrows):
    return [[col[i] for col in cols] for i in range(nrows)]


def _matrix_columns(M, ncols):
    return [[row[j] for row in M] for j in range(ncols)]


def _quotient_group(kernel_gens, image_cols, ambient_dim):
    """ker/im for a sublattice pair: kernel_gens generate K, image_cols
    generate M with M contained in K; returns K/M."""
    if not kernel_gens:
        for col in image_cols:
            if any(col):
                raise MathError("image does not lie in the kernel lattice")
        return AbelianGroup(0)
    G = _columns_to_matrix(kernel_gens, ambient_dim)
    basis = lattice_basis(G, len(kernel_gens))
    rank = len(basis)
    solver = LatticeSolver(_columns_to_matrix(basis, ambient_dim), rank)
    coeff_cols = []
    for col in image_cols:
        c = solver.solve(col)
        if c is None:
            raise MathError("image does not lie in the kernel lattice")
        coeff_cols.append(c)
    return cokernel(_columns_to_matrix(coeff_cols, rank), len(coeff_cols))


def _homology_quotient(X, n, v):
    kind = v.diff_kind
    dim_n = X.order ** (n + 2)
    dim_n1 = X.order ** (n + 3)
    Dn = boundary_matrix(X, n, kind)
    Dn1 = boundary_matrix(X, n + 1, kind)
    Bn = relator_columns(X, n, v.relators)
    Bn_1 = relator_columns(X, n - 1, v.relators)

    # relative kernel: x with Dn*x in the span of the lower-degree relators
    if Bn_1:
        rows = len(Dn)
        stacked = [Dn[i] + [col[i] for col in Bn_1] for i in range(rows)]
        ker = kernel_int(stacked, dim_n + len(Bn_1))
        kernel_gens = [vec[:dim_n] for vec in ker]
    else:
        kernel_gens = kernel_int(Dn, dim_n)

    image_cols = _matrix_columns(Dn1, dim_n1) + Bn
    return _quotient_group(kernel_gens, image_cols, dim_n)


def _restricted_matrix(X, n, kind, basis_n, basis_n_1, dim_n_1):
    """The differential restricted to the relator lattice, expressed in the
    Hermite bases of consecutive degrees."""
    Dn = boundary_matrix(X, n, kind)
    if basis_n_1:
        solver = LatticeSolver(_columns_to_matrix(basis_n_1, dim_n_1), len(basis_n_1))
    else:
        solver = None
    cols = []
    for p in basis_n:
        w = [sum(Dn[i][j] * p[j] for j in range(len(p))) for i in range(len(Dn))]
        if solver is None:
            if any(w):
                raise MathError("differential leaves the relator subcomplex")
            cols.append([])
        else:
            c = solver.solve(w)
            if c is None:
                raise MathError("differential leaves the relator subcomplex")
            cols.append(c)
    return _columns_to_matrix(cols, len(basis_n_1))


def _homology_subcomplex(X, n, v):
    kind = v.diff_kind
    dims = {m: X.order ** (m + 2) for m in (n - 1, n, n + 1)}
    bases = {}
    for m in (n - 1, n, n + 1):
        cols = relator_columns(X, m, v.relators)
        bases[m] = lattice_basis(_columns_to_matrix(cols, dims[m]), len(cols)) if cols else []
    if not bases[n]:
        return AbelianGroup(0)
    An = _restricted_matrix(X, n, kind, bases[n], bases[n - 1], dims[n - 1])
    An1 = _restricted_matrix(X, n + 1, kind, bases[n + 1], bases[n], dims[n])
    kernel_gens = kernel_int(An, len(bases[n])) if bases[n - 1] else [
        [1 if i == j else 0 for i in range(len(bases[n]))]
        for j in range(len(bases[n]))
    ]
    image_cols = _matrix_columns(An1, len(bases[n + 1])) if bases[n + 1] else []
    return _quotient_group(kernel_gens, image_cols, len(bases[n]))


def homology(X, n, v=HomologyVariant(), degree_cap=None):
    """The degree-n homology group of the requested variant.

    Quotient mode computes the homology of C/R, subcomplex mode of R itself;
    with relators 'none' both give the plain homology.  Degrees above the
    materialization cap are rejected unless degree_cap overrides it.
    """
    if n < -1:
        raise MathError("homology is computed for degrees >= -1")
    if v.relators in ("I", "ID") and not X.is_iktq:
        raise MathError("variant %s requires an involutory KTQ" % v.relators)
    if not X.is_quasigroup and v.relators != "none":
        raise MathError("relator subgroups require a quasigroup")
    cap = degree_cap if degree_cap is not None else default_degree_cap(X.order)
    if n + 1 > cap:
        raise MathError(
            "degree %d exceeds the materialization cap %d for order %d"
            % (n, cap, X.order)
        )
    if v.relators == "none" or v.mode == "quotient":
        return _homology_quotient(X, n, v)
    return _homology_subcomplex(X, n, v)


class Cochain:
    """A function from degree-1 tuples (triples) to residues mod m."""

    __slots__ = ("modulus", "values")

    def __init__(self, modulus, values=None):
        if modulus < 2:
            raise MathError("modulus must be >= 2")
        self.modulus = modulus
        self.values = {}
        if values:
            for tup, v in values.items():
                if len(tup) != 3:
                    raise ValueError("cochain inputs are triples, got %r" % (tup,))
                v %= modulus
                if v:
                    self.values[tup] = v

    def __call__(self, triple):
        return self.values.get(triple, 0)

    def evaluate(self, chain):
        """Pair with an integer chain of degree 1, mod m."""
        if chain.degree != 1:
            raise ValueError("cochains pair with degree-1 chains")
        return sum(c * self(t) for t, c in chain.terms.items()) % self.modulus

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.modulus == other.modulus
            and self.values == other.values
        )

    def __repr__(self):
        return "Cochain(%d, %r)" % (self.modulus, self.values)


def two_cocycles(X, modulus, v):
    """Generators of the mod-m cocycles on triples for the given variant.

    A cocycle vanishes on the full differential of every degree-2 tuple and
    on every degree-1 relator generator of the variant.
    """
    if v.mode != "quotient" or v.diff_kind != "full":
        raise MathError("cocycles are defined for the quotient/full variants")
    if v.relators in ("I", "ID") and not X.is_iktq:
        raise MathError("variant %s requires an involutory KTQ" % v.relators)
    triples = chain_basis(X.order, 1)
    index = {t: i for i, t in enumerate(triples)}
    from .intlinalg import kernel_mod

    rows = []
    for tup in chain_basis(X.order, 2):
        rows.append(chain_vector(boundary_tuple(X, tup, "full"), index))
    if v.relators != "none":
        for g in relator_generators(X, 1, v.relators):
            rows.append(chain_vector(g, index))
    gens = kernel_mod(rows, modulus, len(triples))
    out = []
    for vec in gens:
        values = {triples[i]: x for i, x in enumerate(vec) if x % modulus}
        if values:
            out.append(Cochain(modulus, values))
    return out


class HomologyClassChecker:
    """Decides equality of homology classes of degree-1 cycles.

    Two cycles are equal in the variant iff their difference lies in the
    integer span of all degree-2 differentials together with the degree-1
    relator generators.
    """

    def __init__(self, X, v=HomologyVariant("D", "quotient", "full")):
        self.X = X
        self.v = v
        triples = chain_basis(X.order, 1)
        self.index = {t: i for i, t in enumerate(triples)}
        D2 = boundary_matrix(X, 2, v.diff_kind)
        cols = _matrix_columns(D2, X.order ** 4)
        if v.relators != "none":
            cols += relator_columns(X, 1, v.relators)
        self.solver = LatticeSolver(_columns_to_matrix(cols, len(triples)), len(cols))

    def _check_cycle(self, c, name):
        if c.degree != 1:
            raise MathError("%s chain must have degree 1" % name)
        if boundary(self.X, c, self.v.diff_kind):
            raise MathError("%s chain is not a cycle" % name)

    def equal(self, c1, c2):
        self._check_cycle(c1, "first")
        self._check_cycle(c2, "second")
        return self.solver.contains(chain_vector(c1 - c2, self.index))


def class_equal(X, c1, c2, v=HomologyVariant("D", "quotient", "full")):
    """One-shot homology-class comparison of two degree-1 cycles."""
    return HomologyClassChecker(X, v).equal(c1, c2)


def parse_cocycle(text):
    """Cocycle file format: 'cocycle <m>' header, then 'a b c -> v' lines
    for the nonzero values; '#' starts a comment."""
    modulus = None
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if modulus is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "cocycle":
                raise FormatError("line %d: expected header 'cocycle <m>'" % lineno)
            try:
                modulus = int(parts[1])
            except ValueError:
                raise FormatError("line %d: bad modulus %r" % (lineno, parts[1]))
            if modulus < 2:
                raise FormatError("line %d: modulus must be >= 2" % lineno)
            continue
        parts = line.split()
        if len(parts) != 5 or parts[3] != "->":
            raise FormatError("line %d: expected 'a b c -> v'" % lineno)
        try:
            a, b, c, val = int(parts[0]), int(parts[1]), int(parts[2]), int(parts[4])
        except ValueError:
            raise FormatError("line %d: bad integer" % lineno)
        values[(a, b, c)] = val
    if modulus is None:
        raise FormatError("empty cocycle file")
    return Cochain(modulus, values)


def serialize_cocycle(phi):
    lines = ["cocycle %d" % phi.modulus]
    for tup in sorted(phi.values):
        lines.append("%d %d %d -> %d" % (tup[0], tup[1], tup[2], phi.values[tup]))
    return "\n".join(lines) + "\n"
