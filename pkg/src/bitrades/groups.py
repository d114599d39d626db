"""Finite-group arithmetic: elements, subgroups, cosets, and group families.

Elements are plain hashable encodings owned by their group:

* permutation groups use 1-based image tuples, so ``g[i-1]`` is the image
  of point ``i`` and products compose left to right (``x(gh) = (xg)h``);
* cyclic groups use ints mod n;
* direct products use tuples of component elements;
* the non-abelian group of order p^3 (odd prime p, "Heisenberg" family)
  uses exponent triples (i, j, k) for a^i b^j z^k, all mod p, where the
  generators satisfy ab = ba z^-1 with z central of order p;
* the non-abelian metacyclic group of order pq uses exponent pairs (i, j)
  for b^i a^j with i mod q, j mod p and b^-1 a b = a^r.

Encodings sort naturally (ints and nested int tuples), which fixes the
canonical element order used for coset representatives and all output.
"""

from __future__ import annotations

import itertools
import math

from .errors import GroupError, ParseError, ResourceCapError

DEFAULT_MAX_ELEMENTS = 5_000_000


# ---------------------------------------------------------------------------
# permutation helpers (image-tuple encoding, left-to-right composition)

def perm_identity(n):
    return tuple(range(1, n + 1))


def perm_mul(g, h):
    """Compose image tuples left to right: the result maps x to h(g(x))."""
    return tuple(h[x - 1] for x in g)


def perm_inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x - 1] = i + 1
    return tuple(out)


def perm_is_valid(g, n):
    return isinstance(g, tuple) and len(g) == n and sorted(g) == list(range(1, n + 1))


def perm_parity(g):
    """0 for even permutations, 1 for odd (via cycle decomposition)."""
    n = len(g)
    seen = [False] * n
    parity = 0
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = g[x] - 1
            length += 1
        parity ^= (length - 1) & 1
    return parity


def perm_cycles(g):
    """Nontrivial cycles of an image tuple, each starting at its least point."""
    n = len(g)
    seen = [False] * n
    out = []
    for s in range(1, n + 1):
        if seen[s - 1] or g[s - 1] == s:
            seen[s - 1] = True
            continue
        cyc = [s]
        seen[s - 1] = True
        x = g[s - 1]
        while x != s:
            cyc.append(x)
            seen[x - 1] = True
            x = g[x - 1]
        out.append(tuple(cyc))
    return out


def perm_str(g):
    """Cycle notation, e.g. ``(1,2,3)(4,5)``; the identity prints as ``()``."""
    cycles = perm_cycles(g)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def moved_points(g):
    return {i + 1 for i, x in enumerate(g) if x != i + 1}


def fixed_points(g):
    return {i + 1 for i, x in enumerate(g) if x == i + 1}


def parse_permutation(text, degree):
    """Parse cycle notation over {1..degree} into an image tuple.

    Cycles need not be disjoint; they compose left to right.  Whitespace is
    ignored.  ``()`` denotes the identity.  Raises ParseError with the
    character position for out-of-range points, repeated points within one
    cycle, and malformed syntax.
    """
    result = perm_identity(degree)
    pos = 0
    n = len(text)
    saw_cycle = False
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", pos)
        pos += 1
        points = []
        while True:
            while pos < n and text[pos].isspace():
                pos += 1
            if pos >= n:
                raise ParseError("unterminated cycle", pos)
            if text[pos] == ")":
                pos += 1
                break
            if points and text[pos] == ",":
                pos += 1
                while pos < n and text[pos].isspace():
                    pos += 1
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos == start:
                raise ParseError(f"expected a point but found {text[start:start+1]!r}", start)
            point = int(text[start:pos])
            if not 1 <= point <= degree:
                raise ParseError(f"point {point} out of range 1..{degree}", start)
            if point in points:
                raise ParseError(f"point {point} repeated within one cycle", start)
            points.append(point)
        saw_cycle = True
        if len(points) >= 2:
            image = {points[i]: points[(i + 1) % len(points)] for i in range(len(points))}
            cycle_perm = tuple(image.get(x, x) for x in range(1, degree + 1))
            result = perm_mul(result, cycle_perm)
    if not saw_cycle:
        raise ParseError("no cycles found", 0)
    return result


# ---------------------------------------------------------------------------
# subgroups and cosets

class Subgroup:
    """Cyclic subgroup <g> of a parent group, kept as the ordered power list."""

    def __init__(self, group, generator):
        self.group = group
        self.generator = generator
        powers = [group.identity]
        x = generator
        while x != group.identity:
            powers.append(x)
            x = group.mul(x, generator)
        self.elements = tuple(powers)
        self.members = frozenset(powers)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.members

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.group is other.group \
            and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"Subgroup(<{self.group.element_str(self.generator)}>, order={self.order})"


class Coset:
    """Left coset gH, identified by its canonical (minimum) representative."""

    def __init__(self, subgroup, rep):
        self.subgroup = subgroup
        self.rep = rep

    def elements(self):
        group = self.subgroup.group
        return tuple(sorted(group.mul(self.rep, h) for h in self.subgroup.elements))

    def __contains__(self, g):
        return g in self.elements()

    def __len__(self):
        return len(self.subgroup)

    def __eq__(self, other):
        return isinstance(other, Coset) and self.subgroup == other.subgroup \
            and self.rep == other.rep

    def __hash__(self):
        return hash((self.subgroup, self.rep))

    def __repr__(self):
        return f"Coset({self.subgroup.group.element_str(self.rep)}·H, |H|={len(self.subgroup)})"


# ---------------------------------------------------------------------------
# groups

class Group:
    """Base class for finite groups with plain hashable element encodings."""

    kind = "abstract"
    spec = "?"

    # subclasses define: order(), iter_elements(), mul, inverse, identity,
    # element_str, parse_element

    def order(self):
        raise NotImplementedError

    def iter_elements(self):
        raise NotImplementedError

    def mul(self, g, h):
        raise NotImplementedError

    def inverse(self, g):
        raise NotImplementedError

    @property
    def identity(self):
        raise NotImplementedError

    def element_str(self, g):
        return str(g)

    def parse_element(self, text):
        raise NotImplementedError

    # ---- generic machinery ------------------------------------------------

    def elements(self, max_elements=None):
        """Materialize the element universe in canonical ascending order."""
        cached = getattr(self, "_elements", None)
        if cached is None:
            self.check_enumerable(max_elements)
            cached = sorted(self.iter_elements())
            self._elements = cached
        return cached

    def check_enumerable(self, max_elements=None):
        cap = DEFAULT_MAX_ELEMENTS if max_elements is None else max_elements
        n = self.order()
        if n > cap:
            raise ResourceCapError(
                f"group {self.spec} has order {n}, above the enumeration cap", cap)
        return n

    def is_identity(self, g):
        return g == self.identity

    def power(self, g, k):
        """g**k by square-and-multiply; negative k goes through the inverse."""
        if k < 0:
            g = self.inverse(g)
            k = -k
        acc = self.identity
        base = g
        while k:
            if k & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            k >>= 1
        return acc

    def element_order(self, g):
        """Least n > 0 with g**n = identity."""
        n = 1
        x = g
        while x != self.identity:
            x = self.mul(x, g)
            n += 1
        return n

    def generated_subgroup(self, g):
        return Subgroup(self, g)

    def closure(self, generators, max_elements=None):
        """Smallest multiplication-closed set containing the generators.

        BFS over right-multiplication by the generators; always contains the
        identity.  Raises ResourceCapError if the materialized set would
        exceed the cap.
        """
        if not generators:
            raise GroupError("closure requires at least one generator")
        cap = DEFAULT_MAX_ELEMENTS if max_elements is None else max_elements
        gens = list(generators)
        els = {self.identity}
        els.update(gens)
        frontier = list(els)
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in els:
                        els.add(y)
                        new.append(y)
                        if len(els) > cap:
                            raise ResourceCapError(
                                "closure exceeded the enumeration cap", cap)
            frontier = new
        return els

    def coset_of(self, g, subgroup):
        rep = min(self.mul(g, h) for h in subgroup.elements)
        return Coset(subgroup, rep)

    def left_cosets(self, subgroup, max_elements=None):
        """Partition of the group into left cosets, sorted by representative."""
        reps = []
        seen = set()
        for g in self.elements(max_elements):
            if g in seen:
                continue
            members = [self.mul(g, h) for h in subgroup.elements]
            reps.append(min(members))
            seen.update(members)
        return [Coset(subgroup, rep) for rep in sorted(reps)]

    def coset_representative_map(self, subgroup, max_elements=None):
        """Map every element g to the canonical representative of gH."""
        rep_of = {}
        for g in self.elements(max_elements):
            if g in rep_of:
                continue
            members = [self.mul(g, h) for h in subgroup.elements]
            rep = min(members)
            for x in members:
                rep_of[x] = rep
        return rep_of

    def conjugate_subgroup(self, subgroup, a):
        """The subgroup a^-1 <g> a, generated by the conjugated generator."""
        a_inv = self.inverse(a)
        conj_gen = self.mul(self.mul(a_inv, subgroup.generator), a)
        out = Subgroup(self, conj_gen)
        assert len(out) == len(subgroup)
        return out

    def center(self, max_elements=None):
        """All elements commuting with every element (brute-force scan)."""
        els = self.elements(max_elements)
        out = []
        for g in els:
            if all(self.mul(g, h) == self.mul(h, g) for h in els):
                out.append(g)
        return tuple(out)

    def __repr__(self):
        return f"{type(self).__name__}({self.spec})"


class _PermGroupBase(Group):
    """Common behaviour for groups of image-tuple permutations."""

    def __init__(self, degree):
        self.degree = degree

    @property
    def identity(self):
        return perm_identity(self.degree)

    def _check(self, g):
        if not isinstance(g, tuple) or len(g) != self.degree:
            raise GroupError(
                f"element {g!r} does not belong to {self.spec} (mixed-group operands?)")

    def mul(self, g, h):
        self._check(g)
        self._check(h)
        try:
            return tuple(h[x - 1] for x in g)
        except (IndexError, TypeError) as exc:
            raise GroupError(f"invalid permutation operand for {self.spec}: {exc}") from exc

    def inverse(self, g):
        self._check(g)
        return perm_inverse(g)

    def element_str(self, g):
        return perm_str(g)

    def parse_element(self, text):
        g = parse_permutation(text, self.degree)
        if not self.contains(g):
            raise GroupError(f"permutation {perm_str(g)} is not in {self.spec}")
        return g

    def contains(self, g):
        return perm_is_valid(g, self.degree)


class SymmetricGroup(_PermGroupBase):
    kind = "symmetric"

    def __init__(self, n):
        if n < 1:
            raise GroupError("symmetric group degree must be >= 1")
        super().__init__(n)
        self.spec = f"sym:{n}"

    def order(self):
        return math.factorial(self.degree)

    def iter_elements(self):
        return (tuple(p) for p in itertools.permutations(range(1, self.degree + 1)))


class AlternatingGroup(_PermGroupBase):
    kind = "alternating"

    def __init__(self, n):
        if n < 1:
            raise GroupError("alternating group degree must be >= 1")
        super().__init__(n)
        self.spec = f"alt:{n}"

    def order(self):
        n = self.degree
        return 1 if n < 2 else math.factorial(n) // 2

    def iter_elements(self):
        for p in itertools.permutations(range(1, self.degree + 1)):
            g = tuple(p)
            if perm_parity(g) == 0:
                yield g

    def contains(self, g):
        return perm_is_valid(g, self.degree) and perm_parity(g) == 0


class PermClosureGroup(_PermGroupBase):
    """Group generated by explicit degree-n permutations (table kind)."""

    kind = "gens"

    def __init__(self, n, generators, max_elements=None):
        super().__init__(n)
        gens = []
        for g in generators:
            if not perm_is_valid(g, n):
                raise GroupError(f"generator {g!r} is not a degree-{n} permutation")
            gens.append(g)
        if not gens:
            raise GroupError("at least one generator is required")
        self.generators = tuple(gens)
        self.spec = "gens:%d:%s" % (n, ";".join(perm_str(g) for g in gens))
        self._members = frozenset(self.closure(gens, max_elements))

    def order(self):
        return len(self._members)

    def iter_elements(self):
        return iter(self._members)

    def contains(self, g):
        return g in self._members


class CyclicGroup(Group):
    """Z_n in additive notation; elements are ints 0..n-1."""

    kind = "cyclic"

    def __init__(self, n):
        if n < 1:
            raise GroupError("cyclic group order must be >= 1")
        self.n = n
        self.spec = f"cyc:{n}"

    def order(self):
        return self.n

    def iter_elements(self):
        return iter(range(self.n))

    def mul(self, g, h):
        if not isinstance(g, int) or not isinstance(h, int):
            raise GroupError(f"elements of {self.spec} are ints (mixed-group operands?)")
        return (g + h) % self.n

    def inverse(self, g):
        return (-g) % self.n

    @property
    def identity(self):
        return 0

    def parse_element(self, text):
        try:
            value = int(text.strip())
        except ValueError as exc:
            raise ParseError(f"expected an integer element for {self.spec}: {text!r}") from exc
        if not 0 <= value < self.n:
            raise GroupError(f"element {value} out of range 0..{self.n - 1} for {self.spec}")
        return value


class DirectProductGroup(Group):
    """Direct product; elements are tuples of component elements."""

    kind = "direct-product"

    def __init__(self, components):
        components = list(components)
        if len(components) < 2:
            raise GroupError("a direct product needs at least two components")
        self.components = components
        self.spec = "prod:" + ",".join(c.spec for c in components)

    def order(self):
        n = 1
        for c in self.components:
            n *= c.order()
        return n

    def iter_elements(self):
        return (tuple(t) for t in itertools.product(
            *[c.elements() for c in self.components]))

    def mul(self, g, h):
        if not isinstance(g, tuple) or len(g) != len(self.components) \
                or not isinstance(h, tuple) or len(h) != len(self.components):
            raise GroupError(f"elements of {self.spec} are {len(self.components)}-tuples")
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, g, h))

    def inverse(self, g):
        return tuple(c.inverse(x) for c, x in zip(self.components, g))

    @property
    def identity(self):
        return tuple(c.identity for c in self.components)

    def element_str(self, g):
        return "(" + ",".join(c.element_str(x) for c, x in zip(self.components, g)) + ")"

    def parse_element(self, text):
        if not all(isinstance(c, CyclicGroup) for c in self.components):
            raise ParseError(
                f"textual elements are only supported for products of cyclic groups, not {self.spec}")
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = body.split(",")
        if len(parts) != len(self.components):
            raise ParseError(
                f"expected {len(self.components)} coordinates for {self.spec}, got {len(parts)}")
        return tuple(c.parse_element(p) for c, p in zip(self.components, parts))


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class HeisenbergGroup(Group):
    """Non-abelian group of order p^3 for an odd prime p.

    Generated by a, b, c with a^p = b^p = c^p = 1, ab = bac, ca = ac,
    cb = bc.  Elements are exponent triples (i, j, k) in the normal form
    a^i b^j z^k with z = c^-1, multiplied by

        (a^i b^j z^k)(a^r b^s z^t) = a^(i+r) b^(j+s) z^(k+t+jr).
    """

    kind = "heisenberg-p3"

    def __init__(self, p):
        if p == 2 or not _is_prime(p):
            raise GroupError("p must be an odd prime for the p^3 family")
        self.p = p
        self.spec = f"p3:{p}"

    def order(self):
        return self.p ** 3

    def iter_elements(self):
        return (t for t in itertools.product(range(self.p), repeat=3))

    def _check(self, g):
        if not isinstance(g, tuple) or len(g) != 3:
            raise GroupError(
                f"element {g!r} does not belong to {self.spec} (mixed-group operands?)")

    def mul(self, g, h):
        self._check(g)
        self._check(h)
        p = self.p
        i, j, k = g
        r, s, t = h
        return ((i + r) % p, (j + s) % p, (k + t + j * r) % p)

    def inverse(self, g):
        self._check(g)
        p = self.p
        i, j, k = g
        return ((-i) % p, (-j) % p, (i * j - k) % p)

    @property
    def identity(self):
        return (0, 0, 0)

    @property
    def gen_a(self):
        return (1, 0, 0)

    @property
    def gen_b(self):
        return (0, 1, 0)

    @property
    def gen_z(self):
        return (0, 0, 1)

    @property
    def gen_c(self):
        # c = z^-1
        return (0, 0, (-1) % self.p)

    def element_str(self, g):
        return f"({g[0]},{g[1]},{g[2]})"

    def parse_element(self, text):
        return _parse_int_tuple(text, 3, (self.p, self.p, self.p), self.spec)


class MetacyclicGroup(Group):
    """Non-abelian group of order pq: a^p = b^q = 1, b^-1 a b = a^r.

    Requires p, q prime, q > 2, q | p-1, r in {2..p-1}, r^q = 1 (mod p),
    r != 1 (mod p).  Elements are exponent pairs (i, j) in the normal form
    b^i a^j (i mod q, j mod p), multiplied via b^i a^j b^k a^l =
    b^(i+k) a^(j*r^k + l).
    """

    kind = "metacyclic-pq"

    def __init__(self, p, q, r):
        if not _is_prime(p):
            raise GroupError(f"p={p} must be prime")
        if not _is_prime(q):
            raise GroupError(f"q={q} must be prime")
        if q <= 2:
            raise GroupError(f"q={q} must be greater than 2")
        if (p - 1) % q != 0:
            raise GroupError(f"q={q} must divide p-1={p - 1}")
        if not 2 <= r <= p - 1:
            raise GroupError(f"r={r} must lie in 2..{p - 1}")
        if pow(r, q, p) != 1:
            raise GroupError(f"r={r} must satisfy r^q = 1 (mod {p})")
        if r % p == 1:
            raise GroupError(f"r={r} must not be 1 (mod {p})")
        self.p = p
        self.q = q
        self.r = r
        self.spec = f"pq:{p},{q},{r}"

    def order(self):
        return self.p * self.q

    def iter_elements(self):
        return (t for t in itertools.product(range(self.q), range(self.p)))

    def _check(self, g):
        if not isinstance(g, tuple) or len(g) != 2:
            raise GroupError(
                f"element {g!r} does not belong to {self.spec} (mixed-group operands?)")

    def mul(self, g, h):
        self._check(g)
        self._check(h)
        i, j = g
        k, l = h
        return ((i + k) % self.q, (j * pow(self.r, k, self.p) + l) % self.p)

    def inverse(self, g):
        self._check(g)
        i, j = g
        k = (-i) % self.q
        return (k, (-j * pow(self.r, k, self.p)) % self.p)

    @property
    def identity(self):
        return (0, 0)

    @property
    def gen_a(self):
        return (0, 1)

    @property
    def gen_b(self):
        return (1, 0)

    def geometric_exponent(self, k):
        """r + r^2 + ... + r^k mod p, the exponent of a in (ab)^k.

        Computed by modular summation, never by division: r - 1 need not be
        invertible-safe in edge cases.
        """
        total = 0
        power = 1
        for _ in range(k):
            power = (power * self.r) % self.p
            total = (total + power) % self.p
        return total

    def element_str(self, g):
        return f"({g[0]},{g[1]})"

    def parse_element(self, text):
        return _parse_int_tuple(text, 2, (self.q, self.p), self.spec)


def _parse_int_tuple(text, width, moduli, spec):
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split(",")
    if len(parts) != width:
        raise ParseError(f"expected {width} coordinates for {spec}, got {len(parts)}")
    try:
        values = [int(p.strip()) for p in parts]
    except ValueError as exc:
        raise ParseError(f"non-integer coordinate for {spec}: {text!r}") from exc
    return tuple(v % m for v, m in zip(values, moduli))


# ---------------------------------------------------------------------------
# group specification text format

def group_from_spec(spec, max_elements=None):
    """Build a group from its textual specification.

    Formats: ``sym:n``, ``alt:n``, ``cyc:n``, ``prod:cyc:3,cyc:3``,
    ``p3:p``, ``pq:p,q,r``, ``gens:n:(...)(...);(...)``.
    """
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    try:
        if kind == "sym":
            return SymmetricGroup(int(rest))
        if kind == "alt":
            return AlternatingGroup(int(rest))
        if kind == "cyc":
            return CyclicGroup(int(rest))
        if kind == "prod":
            parts = [p for p in rest.split(",") if p]
            return DirectProductGroup([group_from_spec(p, max_elements) for p in parts])
        if kind == "p3":
            return HeisenbergGroup(int(rest))
        if kind == "pq":
            p, q, r = (int(x) for x in rest.split(","))
            return MetacyclicGroup(p, q, r)
        if kind == "gens":
            degree_text, _, gens_text = rest.partition(":")
            n = int(degree_text)
            gens = [parse_permutation(t, n) for t in gens_text.split(";") if t.strip()]
            return PermClosureGroup(n, gens, max_elements)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"malformed group spec {spec!r}: {exc}") from exc
    raise ParseError(f"unknown group kind in spec {spec!r}")
