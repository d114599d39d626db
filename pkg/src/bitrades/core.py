"""Partial latin squares, latin bitrades, and their two constructions.

A partial latin square is stored as a set of (row, column, symbol) triples
over three pairwise-disjoint label alphabets, subject to

* P1: two distinct triples agree in at most one coordinate;
* P2: every label of every alphabet occurs in some triple.

A latin bitrade is an ordered pair of partial latin squares on the same
alphabets satisfying

* R1: the triple sets are disjoint;
* R2: each primary triple agrees with exactly one mate triple in each of
  the three coordinate pairs;
* R3: symmetrically, from the mate side.

Bitrades arise here three ways: from explicit triples, from a triple of
fixed-point-free permutations whose cycles pairwise share at most one
moved point and whose product is the identity (Q1-Q3), and from a finite
group with elements a, b, c satisfying abc = 1 whose cyclic subgroups
pairwise intersect trivially (G1-G2).  In the group construction the
filled cells are (gA, gB, gC) for g in G and the mate replaces the symbol
coset by g a^-1 C.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .groups import Group, Subgroup

_COORD_NAMES = ("row", "column", "symbol")
_PAIRS = ((0, 1), (0, 2), (1, 2))


def _sort_key(label):
    # total order over the label types we produce (str) and accept (int, tuple)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, (int, float)):
        return (0, "", label)
    return (2, str(label))


def canonical_sorted(labels):
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=_sort_key)


def point_str(point):
    if isinstance(point, str):
        return point
    if isinstance(point, tuple):
        return "(" + ",".join(point_str(x) for x in point) + ")"
    return str(point)


# ---------------------------------------------------------------------------
# partial latin squares

@dataclass(frozen=True)
class PartialLatinSquare:
    rows: tuple
    cols: tuple
    syms: tuple
    triples: frozenset

    @property
    def size(self):
        return len(self.triples)

    def sorted_triples(self):
        return sorted(self.triples, key=lambda t: tuple(map(_sort_key, t)))

    def cell_map(self):
        """(row, col) -> symbol for every filled cell."""
        return {(r, c): s for (r, c, s) in self.triples}

    def __repr__(self):
        return (f"PartialLatinSquare({len(self.rows)}x{len(self.cols)}, "
                f"{len(self.syms)} symbols, size={self.size})")


def _p1_error(triples, i, j):
    """The lexicographically smallest clashing pair, for reproducible messages."""
    by_key = {}
    for t in sorted(triples, key=lambda t: tuple(map(_sort_key, t))):
        by_key.setdefault((t[i], t[j]), []).append(t)
    for key in sorted(by_key, key=lambda k: tuple(map(_sort_key, k))):
        ts = by_key[key]
        if len(ts) > 1:
            return ValidationError(
                "P1",
                f"triples {ts[0]} and {ts[1]} agree in "
                f"{_COORD_NAMES[i]} and {_COORD_NAMES[j]}",
                witness=(ts[0], ts[1]),
            )
    raise AssertionError("no clash found on the failure path")


def _pair_map(triples, i, j):
    """Index triples by the (i, j) coordinate pair; clashes violate P1."""
    out = {}
    for t in triples:
        key = (t[i], t[j])
        if key in out:
            raise _p1_error(triples, i, j)
        out[key] = t
    return out


def make_pls(triples, rows=None, cols=None, syms=None):
    """Validate triples as a partial latin square; alphabets are inferred
    (in canonical order) unless explicitly given."""
    triples = frozenset(tuple(t) for t in triples)
    if not triples:
        raise ValidationError("P2", "a partial latin square needs at least one triple")
    for t in triples:
        if len(t) != 3:
            raise ValidationError("P1", f"{t!r} is not a (row, column, symbol) triple")

    used = [set(), set(), set()]
    for t in triples:
        for i in range(3):
            used[i].add(t[i])

    alphabets = []
    for i, given in enumerate((rows, cols, syms)):
        if given is None:
            alphabets.append(tuple(canonical_sorted(used[i])))
        else:
            given = tuple(given)
            if len(set(given)) != len(given):
                raise ValidationError(
                    "P2", f"duplicate label in the declared {_COORD_NAMES[i]} alphabet")
            extra = used[i] - set(given)
            if extra:
                raise ValidationError(
                    "P2", f"{_COORD_NAMES[i]} label {min(map(str, extra))!r} missing "
                    f"from the declared alphabet")
            unused = set(given) - used[i]
            if unused:
                raise ValidationError(
                    "P2", f"declared {_COORD_NAMES[i]} label "
                    f"{min(map(str, unused))!r} occurs in no triple")
            alphabets.append(given)

    for i in range(3):
        for j in range(i + 1, 3):
            shared = set(alphabets[i]) & set(alphabets[j])
            if shared:
                raise ValidationError(
                    "P2", f"label {min(map(str, shared))!r} appears both as a "
                    f"{_COORD_NAMES[i]} and a {_COORD_NAMES[j]}; alphabets must be disjoint")

    for i, j in _PAIRS:
        _pair_map(triples, i, j)

    return PartialLatinSquare(alphabets[0], alphabets[1], alphabets[2], triples)


# ---------------------------------------------------------------------------
# bitrades

@dataclass(frozen=True)
class Bitrade:
    t_circ: PartialLatinSquare
    t_star: PartialLatinSquare
    provenance: dict = field(compare=False, default_factory=dict)

    @property
    def rows(self):
        return self.t_circ.rows

    @property
    def cols(self):
        return self.t_circ.cols

    @property
    def syms(self):
        return self.t_circ.syms

    @property
    def size(self):
        return self.t_circ.size

    def __repr__(self):
        return (f"Bitrade(size={self.size}, rows={len(self.rows)}, "
                f"cols={len(self.cols)}, syms={len(self.syms)})")


def check_bitrade_conditions(circ, star):
    """All R1-R3 violations of a candidate pair, as (condition, witness, message).

    ``circ`` and ``star`` are PartialLatinSquare values sharing alphabets.
    Projection-set comparison is equivalent to the unique-mate conditions
    because each square already has unique coordinate pairs (P1).
    """
    violations = []

    common = circ.triples & star.triples
    if common:
        t = min(common, key=lambda t: tuple(map(_sort_key, t)))
        violations.append(("R1", t, f"triple {t} appears in both squares"))

    for i, j in _PAIRS:
        keys_circ = {(t[i], t[j]) for t in circ.triples}
        keys_star = {(t[i], t[j]) for t in star.triples}
        names = f"{_COORD_NAMES[i]}/{_COORD_NAMES[j]}"
        only_circ = keys_circ - keys_star
        if only_circ:
            key = min(only_circ, key=lambda k: tuple(map(_sort_key, k)))
            violations.append(
                ("R2", key, f"no mate triple shares the {names} pair {key}"))
        only_star = keys_star - keys_circ
        if only_star:
            key = min(only_star, key=lambda k: tuple(map(_sort_key, k)))
            violations.append(
                ("R3", key, f"no primary triple shares the {names} pair {key}"))
    return violations


def make_bitrade(circ_triples, star_triples, rows=None, cols=None, syms=None,
                 provenance=None):
    """Validate a (T, T*) pair as a latin bitrade.

    Raises ValidationError carrying every violated condition with a witness;
    the shared alphabets are taken in canonical order unless given.
    """
    circ = make_pls(circ_triples, rows, cols, syms)
    star = make_pls(star_triples, rows, cols, syms)

    if (set(circ.rows) != set(star.rows) or set(circ.cols) != set(star.cols)
            or set(circ.syms) != set(star.syms)):
        # a label used on one side only is a missing-mate failure
        violations = check_bitrade_conditions(circ, star)
        first = violations[0] if violations else (
            "R2", None, "the two squares use different alphabets")
        raise ValidationError(first[0], first[2], witness=first[1],
                              violations=violations or None)

    star = PartialLatinSquare(circ.rows, circ.cols, circ.syms, star.triples)
    violations = check_bitrade_conditions(circ, star)
    if violations:
        cond, witness, message = violations[0]
        raise ValidationError(cond, message, witness=witness, violations=violations)
    assert circ.size == star.size
    return Bitrade(circ, star, dict(provenance or {}))


# ---------------------------------------------------------------------------
# the permutation structure of a bitrade

@dataclass(frozen=True, eq=False)
class PermutationTriple:
    """Three fixed-point-free permutations of a point set, one per coordinate.

    For a bitrade the points are the primary triples; the i-th permutation
    fixes coordinate i, and its cycles partition the points by their i-th
    label.  ``cycles[i]`` lists each cycle as a point tuple starting at its
    canonical minimum.
    """

    points: tuple
    perms: tuple
    cycles: tuple

    def cycle_index(self, i):
        """point -> index of its cycle within perms[i]."""
        out = {}
        for ci, cycle in enumerate(self.cycles[i]):
            for x in cycle:
                out[x] = ci
        return out


def _cycles_of(perm, points):
    seen = set()
    cycles = []
    for start in points:
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def validate_permutation_triple(p1, p2, p3, points):
    """Check Q1 (cycles of different permutations share at most one moved
    point), Q2 (no fixed points), Q3 (the product is the identity)."""
    perms = (p1, p2, p3)
    point_set = set(points)
    for idx, perm in enumerate(perms, 1):
        if set(perm.keys()) != point_set or set(perm.values()) != point_set:
            raise ValidationError(
                "input", f"permutation {idx} is not a permutation of the point set")
    for idx, perm in enumerate(perms, 1):
        for x in points:
            if perm[x] == x:
                raise ValidationError(
                    "Q2", f"permutation {idx} fixes the point {point_str(x)}",
                    witness=(idx, x))

    cycles = tuple(_cycles_of(perm, points) for perm in perms)
    index_maps = []
    for cyc in cycles:
        m = {}
        for ci, cycle in enumerate(cyc):
            for x in cycle:
                m[x] = ci
        index_maps.append(m)
    for r in range(3):
        for s in range(r + 1, 3):
            seen = {}
            for x in points:
                key = (index_maps[r][x], index_maps[s][x])
                if key in seen:
                    raise ValidationError(
                        "Q1",
                        f"cycles {cycles[r][key[0]]} and {cycles[s][key[1]]} of "
                        f"permutations {r + 1} and {s + 1} share the moved points "
                        f"{point_str(seen[key])} and {point_str(x)}",
                        witness=(cycles[r][key[0]], cycles[s][key[1]], seen[key], x))
                seen[key] = x
    for x in points:
        if p3[p2[p1[x]]] != x:
            raise ValidationError(
                "Q3", f"the product moves the point {point_str(x)}", witness=x)
    return PermutationTriple(tuple(points), perms, cycles)


def mate_bijections(bitrade):
    """The three bijections from mate triples to primary triples.

    The r-th map sends a mate triple to the unique primary triple agreeing
    with it outside coordinate r (well defined by R2/R3).
    """
    maps = []
    for r in range(3):
        i, j = [k for k in range(3) if k != r]
        index = {(t[i], t[j]): t for t in bitrade.t_circ.triples}
        out = {}
        for t in bitrade.t_star.triples:
            image = index[(t[i], t[j])]
            assert image[r] != t[r]
            out[t] = image
        assert len(set(out.values())) == len(out)
        maps.append(out)
    return tuple(maps)


def triple_permutations(bitrade):
    """The permutation structure of a bitrade.

    Composing the inverse of one mate bijection with another yields three
    permutations of the primary triples; the i-th fixes coordinate i.  The
    result always satisfies Q1-Q3 (asserted).
    """
    b1, b2, b3 = mate_bijections(bitrade)
    inv = [{v: k for k, v in m.items()} for m in (b1, b2, b3)]
    points = bitrade.t_circ.sorted_triples()
    tau1 = {x: b3[inv[1][x]] for x in points}
    tau2 = {x: b1[inv[2][x]] for x in points}
    tau3 = {x: b2[inv[0][x]] for x in points}
    return validate_permutation_triple(tau1, tau2, tau3, points)


_CYCLE_TAGS = ("R", "C", "S")


def _cycle_labels(pt):
    """Per coordinate: (point -> cycle label, labels in canonical order)."""
    label_maps = []
    ordered = []
    for i in range(3):
        per_point = {}
        labels = []
        for cycle in pt.cycles[i]:
            lab = f"{_CYCLE_TAGS[i]}:{point_str(cycle[0])}"
            labels.append(lab)
            for x in cycle:
                per_point[x] = lab
        label_maps.append(per_point)
        ordered.append(tuple(labels))
    return label_maps, ordered


def from_permutations(p1, p2, p3, points=None):
    """Build the bitrade defined by three permutations satisfying Q1-Q3.

    Rows, columns and symbols are the cycles of the three permutations,
    labelled by their minimum point; each point contributes the primary
    triple of the cycles moving it, and the mate triple traced by following
    the three permutations in order.  The result has size |X|.
    """
    if points is None:
        points = canonical_sorted(p1.keys())
    else:
        points = canonical_sorted(points)
    pt = validate_permutation_triple(dict(p1), dict(p2), dict(p3), points)
    (lab1, lab2, lab3), (rows, cols, syms) = _cycle_labels(pt)
    t_circ = set()
    t_star = set()
    q1, q2, _ = pt.perms
    for x in points:
        t_circ.add((lab1[x], lab2[x], lab3[x]))
        x1 = q1[x]
        t_star.add((lab1[x], lab2[x1], lab3[q2[x1]]))
    assert len(t_circ) == len(points) and len(t_star) == len(points)
    return make_bitrade(t_circ, t_star, rows=rows, cols=cols, syms=syms,
                        provenance={"kind": "from-perms"})


# ---------------------------------------------------------------------------
# the group construction

class GroupTriple:
    """Elements a, b, c of a finite group with abc = 1 and pairwise trivially
    intersecting cyclic subgroups (conditions G1 and G2), plus the optional
    generation condition G3."""

    def __init__(self, group: Group, a, b, c):
        self.group = group
        self.a = a
        self.b = b
        self.c = c
        for name, g in (("a", a), ("b", b), ("c", c)):
            if group.is_identity(g):
                raise ValidationError(
                    "nontrivial", f"element {name} must not be the identity")
        if not group.is_identity(group.mul(group.mul(a, b), c)):
            raise ValidationError(
                "G1", "abc != identity (a=%s, b=%s, c=%s)" % (
                    group.element_str(a), group.element_str(b), group.element_str(c)))
        self.A = Subgroup(group, a)
        self.B = Subgroup(group, b)
        self.C = Subgroup(group, c)
        for (name, X, Y) in (("|A∩B|", self.A, self.B),
                             ("|A∩C|", self.A, self.C),
                             ("|B∩C|", self.B, self.C)):
            size = len(X.members & Y.members)
            if size != 1:
                raise ValidationError("G2", f"{name}={size}")

    @property
    def orders(self):
        return (len(self.A), len(self.B), len(self.C))

    def satisfies_g3(self, max_elements=None):
        """Whether a, b, c generate the whole group."""
        return len(self.group.closure([self.a, self.b, self.c], max_elements)) \
            == self.group.order()

    def element_strs(self):
        g = self.group
        return (g.element_str(self.a), g.element_str(self.b), g.element_str(self.c))

    def __repr__(self):
        a, b, c = self.element_strs()
        return f"GroupTriple({self.group.spec}, a={a}, b={b}, c={c})"


def _coset_labels(group, subgroup, tag):
    """Label every element by its left coset's canonical representative."""
    label_of = {}
    rep_label = {}
    sub_elements = subgroup.elements
    mul = group.mul
    for g in group.elements():
        if g in label_of:
            continue
        members = [mul(g, h) for h in sub_elements]
        rep = min(members)
        lab = f"{tag}:{group.element_str(rep)}"
        rep_label[rep] = lab
        for x in members:
            label_of[x] = lab
    ordered = tuple(rep_label[rep] for rep in sorted(rep_label))
    return label_of, ordered


def from_group(group, a, b, c, *, max_elements=None, provenance=None):
    """Build the coset bitrade of a group triple satisfying G1 and G2.

    The filled cells are (gA, gB, gC) for g in G with mate symbol g a^-1 C;
    rows, columns and symbols are labelled by canonical coset
    representatives prefixed with A/B/C to keep the alphabets disjoint.
    The result has size |G| with |G:A| rows of |A| entries each, |G:B|
    columns of |B| entries, and |G:C| symbols occurring |C| times.
    """
    triple = a if isinstance(a, GroupTriple) else GroupTriple(group, a, b, c)
    group = triple.group
    n = group.check_enumerable(max_elements)
    label_a, rows = _coset_labels(group, triple.A, "A")
    label_b, cols = _coset_labels(group, triple.B, "B")
    label_c, syms = _coset_labels(group, triple.C, "C")
    a_inv = group.inverse(triple.a)
    mul = group.mul
    t_circ = set()
    t_star = set()
    for g in group.elements():
        ra = label_a[g]
        rb = label_b[g]
        t_circ.add((ra, rb, label_c[g]))
        t_star.add((ra, rb, label_c[mul(g, a_inv)]))
    assert len(t_circ) == n and len(t_star) == n

    astr, bstr, cstr = triple.element_strs()
    prov = {"kind": "from-group", "group": group.spec, "a": astr, "b": bstr, "c": cstr}
    if provenance:
        prov.update(provenance)
    bitrade = make_bitrade(t_circ, t_star, rows=rows, cols=cols, syms=syms,
                           provenance=prov)
    oa, ob, oc = triple.orders
    assert len(bitrade.rows) == n // oa
    assert len(bitrade.cols) == n // ob
    assert len(bitrade.syms) == n // oc
    return bitrade


# ---------------------------------------------------------------------------
# separation and the round trip

def separation_witness(bitrade, pt=None):
    """None if every row/column/symbol meets exactly one cycle of the
    corresponding permutation, else (coordinate, label, cycle ids)."""
    if pt is None:
        pt = triple_permutations(bitrade)
    for i in range(3):
        by_label = {}
        for ci, cycle in enumerate(pt.cycles[i]):
            by_label.setdefault(cycle[0][i], []).append(ci)
        for label in canonical_sorted(by_label):
            ids = by_label[label]
            if len(ids) > 1:
                return (_COORD_NAMES[i], label,
                        tuple(pt.cycles[i][ci] for ci in ids))
    return None


def roundtrip_check(bitrade):
    """Rebuild a separated bitrade from its permutation structure.

    Returns (ok, label_maps): relabelling each row/column/symbol by the
    unique cycle containing it must reproduce exactly the bitrade built by
    ``from_permutations`` on the derived permutations.  Raises
    ValidationError for non-separated input.
    """
    pt = triple_permutations(bitrade)
    witness = separation_witness(bitrade, pt)
    if witness is not None:
        raise ValidationError(
            "separated", f"{witness[0]} {witness[1]!r} meets {len(witness[2])} cycles",
            witness=witness)
    rebuilt = from_permutations(*pt.perms, points=pt.points)
    label_maps, _ = _cycle_labels(pt)
    f = []
    for i in range(3):
        f.append({x[i]: label_maps[i][x] for x in pt.points})
    relabel_circ = {(f[0][t[0]], f[1][t[1]], f[2][t[2]])
                    for t in bitrade.t_circ.triples}
    relabel_star = {(f[0][t[0]], f[1][t[1]], f[2][t[2]])
                    for t in bitrade.t_star.triples}
    ok = (relabel_circ == rebuilt.t_circ.triples
          and relabel_star == rebuilt.t_star.triples)
    return ok, {"rows": f[0], "cols": f[1], "syms": f[2]}
