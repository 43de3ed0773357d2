"""Finite ternary quasigroups presented by operation tables.

Elements are the integers 0..order-1.  A ternary operation is a flat table
of order**3 entries; the quasigroup property, the division tables and the
two third-Reidemeister axioms (A3L, A3R) are all checked by finite
enumeration.
"""

from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional

from .errors import FormatError, MathError


class OpTable:
    """A ternary operation on {0, ..., order-1} stored as a flat table.

    Entry ``values[(i*order + j)*order + k]`` is the result of applying the
    operation to (i, j, k), i.e. entries are in lexicographic order of the
    argument triple.
    """

    __slots__ = ("order", "values")

    def __init__(self, order, values):
        values = tuple(values)
        if order < 1:
            raise FormatError("order must be a positive integer")
        if len(values) != order ** 3:
            raise FormatError(
                "expected %d table entries for order %d, got %d"
                % (order ** 3, order, len(values))
            )
        for v in values:
            if not isinstance(v, int) or not 0 <= v < order:
                raise FormatError(
                    "table entry %r out of range for order %d" % (v, order)
                )
        self.order = order
        self.values = values

    @classmethod
    def from_function(cls, order, fn):
        n = order
        return cls(n, (fn(i, j, k) for i, j, k in product(range(n), repeat=3)))

    def __call__(self, i, j, k):
        return self.values[(i * self.order + j) * self.order + k]

    def __eq__(self, other):
        return (
            isinstance(other, OpTable)
            and self.order == other.order
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.order, self.values))

    def __repr__(self):
        return "OpTable(order=%d)" % self.order


@dataclass(frozen=True)
class ValidationReport:
    """Result of a quasigroup check.

    When ``ok`` is false, ``slot`` names the argument slot (0, 1 or 2) whose
    induced unary map fails to be a bijection, and ``quad_a``/``quad_b`` are
    two quadruples (x1, x2, x3, x0) differing only in that slot but sharing
    the same value x0.
    """

    ok: bool
    slot: Optional[int] = None
    quad_a: Optional[tuple] = None
    quad_b: Optional[tuple] = None


@dataclass(frozen=True)
class A3Report:
    a3l: bool
    a3r: bool
    a3l_witness: Optional[tuple] = None
    a3r_witness: Optional[tuple] = None


@dataclass(frozen=True)
class TernaryQuasigroup:
    """An operation table together with its division tables and flags.

    The division tables are None when the table is not a quasigroup.
    """

    t: OpTable
    l: Optional[OpTable]
    m: Optional[OpTable]
    r: Optional[OpTable]
    is_quasigroup: bool
    satisfies_a3l: bool
    satisfies_a3r: bool
    is_involutory: bool

    @property
    def order(self):
        return self.t.order

    @property
    def is_ktq(self):
        return self.is_quasigroup and self.satisfies_a3l and self.satisfies_a3r

    @property
    def is_iktq(self):
        return self.is_ktq and self.is_involutory


def validate_quasigroup(t):
    """Check that fixing any two argument slots yields a bijection.

    Returns a ValidationReport; the first failing line (in slot, fixed-pair,
    argument order) is reported.
    """
    n = t.order
    for slot in range(3):
        for f0, f1 in product(range(n), repeat=2):
            seen = {}
            for x in range(n):
                args = [f0, f1]
                args.insert(slot, x)
                out = t(*args)
                if out in seen:
                    return ValidationReport(
                        False, slot, seen[out] + (out,), tuple(args) + (out,)
                    )
                seen[out] = tuple(args)
    return ValidationReport(True)


def derive_divisions(t):
    """Invert a quasigroup table slot-by-slot, giving (L, M, R).

    With x0 = T(x1, x2, x3): L(x0, x2, x3) = x1, M(x1, x0, x3) = x2 and
    R(x1, x2, x0) = x3.
    """
    report = validate_quasigroup(t)
    if not report.ok:
        raise MathError(
            "not a quasigroup: slot %d is not bijective (witness %r vs %r)"
            % (report.slot, report.quad_a, report.quad_b)
        )
    n = t.order
    lv = [0] * n ** 3
    mv = [0] * n ** 3
    rv = [0] * n ** 3
    for x1, x2, x3 in product(range(n), repeat=3):
        x0 = t(x1, x2, x3)
        lv[(x0 * n + x2) * n + x3] = x1
        mv[(x1 * n + x0) * n + x3] = x2
        rv[(x1 * n + x2) * n + x0] = x3
    return OpTable(n, lv), OpTable(n, mv), OpTable(n, rv)


def check_a3(t):
    """Check axioms A3L and A3R over all quadruples.

    A3L: T(T(a,b,c), c, d) = T(T(a,b,T(b,c,d)), T(b,c,d), d)
    A3R: T(a, b, T(b,c,d)) = T(a, T(a,b,c), T(T(a,b,c), c, d))

    The quasigroup property is not assumed; the axioms are equational.
    """
    wl = wr = None
    for a, b, c, d in product(range(t.order), repeat=4):
        bcd = t(b, c, d)
        abc = t(a, b, c)
        if wl is None and t(abc, c, d) != t(t(a, b, bcd), bcd, d):
            wl = (a, b, c, d)
        if wr is None and t(a, b, bcd) != t(a, abc, t(abc, c, d)):
            wr = (a, b, c, d)
        if wl is not None and wr is not None:
            break
    return A3Report(wl is None, wr is None, wl, wr)


def classify(t):
    """Build a TernaryQuasigroup with all flags set for the given table."""
    ok = validate_quasigroup(t).ok
    l = m = r = None
    if ok:
        l, m, r = derive_divisions(t)
    a3 = check_a3(t)
    involutory = ok and m.values == t.values
    return TernaryQuasigroup(t, l, m, r, ok, a3.a3l, a3.a3r, involutory)


def affine_table(n, alpha, beta, gamma):
    """The table T(x, y, z) = (alpha*x + beta*y + gamma*z) mod n.

    Not validated here; it is a quasigroup iff alpha, beta and gamma are all
    units mod n.
    """
    if n < 1:
        raise FormatError("order must be a positive integer")
    return OpTable.from_function(
        n, lambda x, y, z: (alpha * x + beta * y + gamma * z) % n
    )


def hat(t):
    """The outer-slot reversal: hat(T)(x, y, z) = T(z, y, x)."""
    return OpTable.from_function(t.order, lambda x, y, z: t(z, y, x))


def _latin_tables(n):
    """All tables whose three slot-maps are bijections, in lexicographic
    order of the flat value tuple."""
    total = n ** 3
    vals = [0] * total
    # one bitmask of used values per line in each of the three axes
    mask_jk = [0] * (n * n)  # varying i, fixed (j, k)
    mask_ik = [0] * (n * n)  # varying j
    mask_ij = [0] * (n * n)  # varying k

    def rec(pos):
        if pos == total:
            yield OpTable(n, vals)
            return
        k = pos % n
        j = (pos // n) % n
        i = pos // (n * n)
        a, b, c = j * n + k, i * n + k, i * n + j
        for v in range(n):
            bit = 1 << v
            if (mask_jk[a] | mask_ik[b] | mask_ij[c]) & bit:
                continue
            vals[pos] = v
            mask_jk[a] |= bit
            mask_ik[b] |= bit
            mask_ij[c] |= bit
            yield from rec(pos + 1)
            mask_jk[a] ^= bit
            mask_ik[b] ^= bit
            mask_ij[c] ^= bit

    yield from rec(0)


def canonical_form(t):
    """Lexicographically least value tuple over simultaneous relabelings."""
    n = t.order
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        cand = tuple(
            perm[t(inv[i], inv[j], inv[k])]
            for i, j, k in product(range(n), repeat=3)
        )
        if best is None or cand < best:
            best = cand
    return best


def enumerate_ktqs(n, filt="ktq", dedup=False, max_order=4):
    """Exhaustively enumerate order-n tables, Latin-pruned per slot.

    filt selects 'all_quasigroups', 'ktq' or 'iktq'.  With dedup=True only
    the lexicographically minimal representative of each relabeling orbit is
    emitted.  Orders above max_order are rejected; pass a larger max_order
    explicitly to override (feasible up to 5 with patience).
    """
    if filt not in ("all_quasigroups", "ktq", "iktq"):
        raise ValueError("unknown filter %r" % (filt,))
    if n < 1:
        raise FormatError("order must be a positive integer")
    if n > max_order:
        raise MathError(
            "order %d exceeds the enumeration cap %d; raise max_order to override"
            % (n, max_order)
        )
    out = []
    for t in _latin_tables(n):
        if filt != "all_quasigroups":
            a3 = check_a3(t)
            if not (a3.a3l and a3.a3r):
                continue
            if filt == "iktq":
                _, m, _ = derive_divisions(t)
                if m.values != t.values:
                    continue
        if dedup and canonical_form(t) != t.values:
            continue
        out.append(t)
    return out


def parse_algebra(text):
    """Parse the algebra file format: '#' comments, a 'ktq <n>' header, then
    n**3 whitespace-separated entries in lexicographic argument order."""
    order = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "ktq":
                raise FormatError("line %d: expected header 'ktq <n>'" % lineno)
            try:
                order = int(parts[1])
            except ValueError:
                raise FormatError("line %d: bad order %r" % (lineno, parts[1]))
            if order < 1:
                raise FormatError("line %d: order must be positive" % lineno)
        else:
            for tok in line.split():
                try:
                    entries.append(int(tok))
                except ValueError:
                    raise FormatError("line %d: bad entry %r" % (lineno, tok))
    if order is None:
        raise FormatError("empty algebra file")
    return OpTable(order, entries)


def serialize_algebra(t):
    """Render an OpTable in the algebra file format (canonical layout:
    one line of order entries per (i, j) pair)."""
    n = t.order
    lines = ["ktq %d" % n]
    for i in range(n):
        for j in range(n):
            lines.append(" ".join(str(t(i, j, k)) for k in range(n)))
    return "\n".join(lines) + "\n"
