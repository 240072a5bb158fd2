"""Finite groups given by Cayley tables, involutory automorphisms and H x| Z2.

Elements are the indices ``0..m-1``.  Built-in families are addressed by short
name strings (``"Z:6"``, ``"Z2^:3"``, ``"D:4"``, ``"S:4"``, ``"prod:Z:3,Z:3"``).
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .perm import ResourceError

ASSOCIATIVITY_FULL_CHECK = 128
DEFAULT_RANK_CAP = 256
SYLOW_CAP = 64


class GroupError(ValueError):
    pass


class FiniteGroup:
    def __init__(self, table: Sequence[Sequence[int]], identity: int = 0, labels: Sequence[str] | None = None, name: str = "H"):
        self.table = [list(map(int, row)) for row in table]
        self.order = len(self.table)
        self.identity = int(identity)
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.order)]
        self._validate()
        self._inv = [0] * self.order
        for a in range(self.order):
            self._inv[a] = self.table[a].index(self.identity)

    def _validate(self) -> None:
        m = self.order
        if m < 1:
            raise GroupError("a group needs at least one element")
        if not 0 <= self.identity < m:
            raise GroupError("identity index out of range")
        for a, row in enumerate(self.table):
            if len(row) != m or sorted(row) != list(range(m)):
                raise GroupError(f"row {a} of the Cayley table is not a permutation of 0..{m - 1}")
        e = self.identity
        for a in range(m):
            if self.table[a][e] != a or self.table[e][a] != a:
                raise GroupError(f"identity law fails at element {a}")
        t = self.table
        if m <= ASSOCIATIVITY_FULL_CHECK:
            triples = itertools.product(range(m), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(m), rng.randrange(m), rng.randrange(m)) for _ in range(20000))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"associativity fails at ({a}, {b}, {c})")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens``."""
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def subgroup(self, elements: Iterable[int], name: str | None = None) -> tuple["FiniteGroup", list[int]]:
        """Subgroup as its own FiniteGroup, plus the embedding list (new index -> old index)."""
        emb = sorted(set(elements), key=lambda a: (a != self.identity, a))
        pos = {a: i for i, a in enumerate(emb)}
        try:
            table = [[pos[self.table[a][b]] for b in emb] for a in emb]
        except KeyError as exc:
            raise GroupError("element set is not closed under multiplication") from exc
        sub = FiniteGroup(table, 0, [self.labels[a] for a in emb], name or f"sub({self.name})")
        return sub, emb

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True)
class GroupAutomorphism:
    """Involutory automorphism ``sigma`` of ``base`` given as an index map."""

    base: FiniteGroup
    map: tuple[int, ...]
    name: str = "sigma"

    def __post_init__(self) -> None:
        h = self.base
        s = tuple(int(x) for x in self.map)
        object.__setattr__(self, "map", s)
        if len(s) != h.order or sorted(s) != list(range(h.order)):
            raise GroupError("sigma is not a bijection of the group elements")
        for a in range(h.order):
            if s[s[a]] != a:
                raise GroupError(f"sigma is not involutory: sigma(sigma({a})) != {a}")
            for b in range(h.order):
                if s[h.mul(a, b)] != h.mul(s[a], s[b]):
                    raise GroupError(f"sigma is not a homomorphism at ({a}, {b})")

    def __call__(self, a: int) -> int:
        return self.map[a]

    def fixed(self) -> list[int]:
        return [a for a in range(self.base.order) if self.map[a] == a]

    def restrict(self, sub: FiniteGroup, emb: Sequence[int]) -> "GroupAutomorphism":
        pos = {a: i for i, a in enumerate(emb)}
        try:
            return GroupAutomorphism(sub, tuple(pos[self.map[a]] for a in emb), self.name)
        except KeyError as exc:
            raise GroupError("subgroup is not sigma-invariant") from exc


def identity_automorphism(h: FiniteGroup) -> GroupAutomorphism:
    return GroupAutomorphism(h, tuple(range(h.order)), "id")


def inversion_automorphism(h: FiniteGroup) -> GroupAutomorphism:
    if not h.is_abelian():
        raise GroupError("inversion is an automorphism only of abelian groups")
    return GroupAutomorphism(h, tuple(h.inv(a) for a in range(h.order)), "inv")


def conjugation_automorphism(h: FiniteGroup, g: int) -> GroupAutomorphism:
    """a -> g a g^-1 (involutory iff g^2 is central)."""
    gi = h.inv(g)
    return GroupAutomorphism(h, tuple(h.mul(h.mul(g, a), gi) for a in range(h.order)), f"conj:{h.labels[g]}")


def parse_sigma(h: FiniteGroup, spec: str | Sequence[int] | None) -> GroupAutomorphism:
    if spec is None or spec == "id":
        return identity_automorphism(h)
    if not isinstance(spec, str):
        return GroupAutomorphism(h, tuple(spec))
    if spec == "inv":
        return inversion_automorphism(h)
    if spec.startswith("conj:"):
        key = spec[5:]
        g = h.labels.index(key) if key in h.labels else int(key)
        return conjugation_automorphism(h, g)
    raise GroupError(f"unknown sigma {spec!r}; use id, inv, conj:<element> or an explicit map")


# -- built-in families -------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], 0, [str(a) for a in range(n)], f"Z:{n}")


def elementary_abelian_2(k: int) -> FiniteGroup:
    m = 1 << k
    return FiniteGroup([[a ^ b for b in range(m)] for a in range(m)], 0, [format(a, f"0{k}b") if k else "e" for a in range(m)], f"Z2^:{k}")


def dihedral(n: int) -> FiniteGroup:
    """Order 2n; index i + n*b stands for r^i s^b."""
    def mul(x, y):
        i, b = x % n, x // n
        j, c = y % n, y // n
        k = (i + (-j if b else j)) % n
        return k + n * (b ^ c)

    labels = [f"r{i}" if b == 0 else f"r{i}s" for b in range(2) for i in range(n)]
    return FiniteGroup([[mul(x, y) for y in range(2 * n)] for x in range(2 * n)], 0, labels, f"D:{n}")


def symmetric(n: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, 0, ["".join(map(str, p)) for p in perms], f"S:{n}")


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    m = b.order
    table = [[a.mul(x // m, y // m) * m + b.mul(x % m, y % m) for y in range(a.order * m)] for x in range(a.order * m)]
    labels = [f"({a.labels[x // m]},{b.labels[x % m]})" for x in range(a.order * m)]
    ident = a.identity * m + b.identity
    return FiniteGroup(table, ident, labels, f"prod:{a.name},{b.name}")


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], 0, ["e"], "trivial")


def builtin_group(name: str) -> FiniteGroup:
    """Parse a built-in group name."""
    name = name.strip()
    if name in ("trivial", "1"):
        return trivial_group()
    if name.startswith("prod:"):
        parts = _split_product(name[5:])
        g = builtin_group(parts[0])
        for p in parts[1:]:
            g = direct_product(g, builtin_group(p))
        return g
    try:
        kind, arg = name.split(":", 1)
        k = int(arg)
    except ValueError as exc:
        raise GroupError(f"cannot parse group name {name!r}") from exc
    if kind == "Z":
        return cyclic(k)
    if kind == "Z2^":
        return elementary_abelian_2(k)
    if kind == "D":
        return dihedral(k)
    if kind == "S":
        return symmetric(k)
    raise GroupError(f"unknown group family {kind!r}")


def _split_product(s: str) -> list[str]:
    # "Z:3,Z:3" -> ["Z:3", "Z:3"]; names themselves contain no commas
    parts = [p.strip() for p in s.split(",") if p.strip()]
    if not parts:
        raise GroupError("empty product")
    return parts


def load_group_json(text: str) -> tuple[FiniteGroup, GroupAutomorphism]:
    """``{"order": m, "table": [[...]], "identity": e, "sigma": [...]}``."""
    d = json.loads(text)
    table = d["table"]
    if "order" in d and d["order"] != len(table):
        raise GroupError("order does not match the table size")
    h = FiniteGroup(table, d.get("identity", 0), d.get("labels"), d.get("name", "H"))
    sigma = GroupAutomorphism(h, tuple(d["sigma"])) if "sigma" in d else identity_automorphism(h)
    return h, sigma


def dump_group_json(h: FiniteGroup, sigma: GroupAutomorphism | None = None) -> str:
    d = {"order": h.order, "table": h.table, "identity": h.identity}
    if sigma is not None:
        d["sigma"] = list(sigma.map)
    return json.dumps(d)


# -- rank ----------------------------------------------------------------------


def rank(h: FiniteGroup, cap: int = DEFAULT_RANK_CAP) -> tuple[int, tuple[int, ...]]:
    """Minimal generating-set size and the lexicographically first witness."""
    if h.order > cap:
        raise ResourceError(f"rank search limited to |H| <= {cap}")
    if h.order == 1:
        return 0, ()
    nonid = [a for a in range(h.order) if a != h.identity]
    for k in range(1, h.order.bit_length() + 1):
        found = _first_generating_set(h, nonid, k, 0, (), frozenset({h.identity}))
        if found is not None:
            return k, found
    raise AssertionError("unreachable: every group is generated by log2|H| elements")


def _first_generating_set(h, cands, k, start, prefix, sub):
    if len(prefix) == k:
        return prefix if len(sub) == h.order else None
    for idx in range(start, len(cands)):
        a = cands[idx]
        if a in sub:
            # a redundant element would give a smaller generating set
            continue
        found = _first_generating_set(h, cands, k, idx + 1, prefix + (a,), h.generated(prefix + (a,)))
        if found is not None:
            return found
    return None


# -- H x| Z2 -------------------------------------------------------------------


class SemidirectZ2:
    """H x|_sigma Z2; element (h, b) has index h + b*|H|; x = (e, 1)."""

    def __init__(self, base: FiniteGroup, sigma: GroupAutomorphism):
        if sigma.base is not base:
            raise GroupError("sigma belongs to a different group")
        self.base = base
        self.sigma = sigma
        self.order = 2 * base.order

    def pair(self, g: int) -> tuple[int, int]:
        return g % self.base.order, g // self.base.order

    def index(self, h: int, b: int) -> int:
        return h + b * self.base.order

    @property
    def identity(self) -> int:
        return self.index(self.base.identity, 0)

    @property
    def x(self) -> int:
        return self.index(self.base.identity, 1)

    def mul(self, g1: int, g2: int) -> int:
        h1, b1 = self.pair(g1)
        h2, b2 = self.pair(g2)
        if b1:
            h2 = self.sigma(h2)
        return self.index(self.base.mul(h1, h2), b1 ^ b2)

    def inv(self, g: int) -> int:
        h, b = self.pair(g)
        hi = self.base.inv(h)
        return self.index(self.sigma(hi) if b else hi, b)

    def elements(self) -> range:
        return range(self.order)

    def label(self, g: int) -> str:
        h, b = self.pair(g)
        return f"({self.base.labels[h]},{b})"

    def as_finite_group(self) -> FiniteGroup:
        return FiniteGroup([[self.mul(a, b) for b in range(self.order)] for a in range(self.order)], self.identity, [self.label(g) for g in range(self.order)], f"{self.base.name}x|Z2")


def conjugacy_classes(g) -> list[frozenset[int]]:
    """Conjugacy classes of a FiniteGroup or SemidirectZ2, ordered by smallest member."""
    seen: set[int] = set()
    classes = []
    for a in g.elements():
        if a in seen:
            continue
        cls = frozenset(g.mul(g.mul(c, a), g.inv(c)) for c in g.elements())
        seen |= cls
        classes.append(cls)
    return classes


def s_set(h: FiniteGroup, sigma: GroupAutomorphism) -> list[int]:
    """Indices in H x| Z2 of the involutions outside H: (h, 1) with sigma(h) = h^-1."""
    sd = SemidirectZ2(h, sigma)
    return [sd.index(a, 1) for a in range(h.order) if sigma(a) == h.inv(a)]


def tf_classes(h: FiniteGroup, sigma: GroupAutomorphism) -> list[frozenset[int]]:
    """Conjugacy classes of H x| Z2 lying inside S(H, sigma)."""
    sd = SemidirectZ2(h, sigma)
    members = set(s_set(h, sigma))
    out = []
    seen: set[int] = set()
    for g in sorted(members):
        if g in seen:
            continue
        cls = frozenset(sd.mul(sd.mul(c, g), sd.inv(c)) for c in sd.elements())
        seen |= cls
        out.append(cls)
    return out


def count_tf_classes(h: FiniteGroup, sigma: GroupAutomorphism) -> int:
    return len(tf_classes(h, sigma))


def two_part(m: int) -> int:
    """Largest power of two dividing ``m``."""
    return m & -m


def reduce_to_2power_rep(sd: SemidirectZ2, s: int) -> int:
    """(h, 1) -> (h^(2l+1), 1) where ord(h) = 2^k (2l+1); stays in the class of s."""
    h, b = sd.pair(s)
    if b != 1 or sd.sigma(h) != sd.base.inv(h):
        raise GroupError("element is not in S(H, sigma)")
    o = sd.base.element_order(h)
    odd = o // two_part(o)
    return sd.index(sd.base.power(h, odd), 1)


def find_sigma_invariant_sylow2(h: FiniteGroup, sigma: GroupAutomorphism, cap: int = SYLOW_CAP) -> frozenset[int]:
    """First sigma-invariant Sylow 2-subgroup, by breadth-first growth of 2-subgroups."""
    if h.order > cap:
        raise ResourceError(f"Sylow search limited to |H| <= {cap}")
    target = two_part(h.order)
    twos = [a for a in range(h.order) if two_part(h.element_order(a)) == h.element_order(a) and a != h.identity]
    layer = {frozenset({h.identity})}
    seen = set(layer)
    while layer:
        for sub in sorted(layer, key=sorted):
            if len(sub) == target and frozenset(sigma(a) for a in sub) == sub:
                return sub
        nxt = set()
        for sub in layer:
            if len(sub) == target:
                continue
            for a in twos:
                if a in sub:
                    continue
                bigger = h.generated(list(sub) + [a])
                if two_part(len(bigger)) == len(bigger) and bigger not in seen:
                    seen.add(bigger)
                    nxt.add(bigger)
        layer = nxt
    raise RuntimeError("no sigma-invariant Sylow 2-subgroup found; this contradicts the Sylow argument")


@dataclass
class SylowReport:
    count_h: int
    count_p2: int
    bound_2k: int
    p2_order: int
    holds: bool
    p2: list[int] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"count_H": self.count_h, "count_P2": self.count_p2, "bound_2k": self.bound_2k, "P2_order": self.p2_order, "holds": self.holds}


def sylow2_invariant_bound_check(h: FiniteGroup, sigma: GroupAutomorphism) -> SylowReport:
    p2 = find_sigma_invariant_sylow2(h, sigma)
    sub, emb = h.subgroup(p2)
    sub_sigma = sigma.restrict(sub, emb)
    c_h = count_tf_classes(h, sigma)
    c_p = count_tf_classes(sub, sub_sigma)
    bound = two_part(h.order)
    return SylowReport(c_h, c_p, bound, len(p2), c_h <= c_p <= bound, sorted(p2))


def parity_holds(h: FiniteGroup, sigma: GroupAutomorphism) -> bool:
    """[H : Fix] even implies |Fix| even."""
    fix = len(sigma.fixed())
    index = h.order // fix
    return index % 2 == 1 or fix % 2 == 0


def involutory_automorphisms_sample(h: FiniteGroup) -> list[GroupAutomorphism]:
    """id, inversion (abelian case) and every involutory inner automorphism, deduplicated."""
    out = [identity_automorphism(h)]
    if h.is_abelian():
        out.append(inversion_automorphism(h))
    else:
        center = [z for z in range(h.order) if all(h.mul(z, a) == h.mul(a, z) for a in range(h.order))]
        cset = set(center)
        for g in range(h.order):
            if h.mul(g, g) in cset:
                out.append(conjugation_automorphism(h, g))
    uniq = {}
    for s in out:
        uniq.setdefault(s.map, s)
    return list(uniq.values())


def builtin_groups_up_to(max_order: int) -> list[FiniteGroup]:
    """Every built-in family member of order <= max_order (small direct products included)."""
    names = [f"Z:{n}" for n in range(1, max_order + 1)]
    names += [f"Z2^:{k}" for k in range(2, max_order.bit_length()) if (1 << k) <= max_order]
    names += [f"D:{n}" for n in range(3, max_order // 2 + 1)]
    names += [f"S:{n}" for n in range(3, 6) if math.factorial(n) <= max_order]
    small = ["Z:2", "Z:3", "Z:4", "S:3", "D:4"]
    for a, b in itertools.combinations_with_replacement(small, 2):
        names.append(f"prod:{a},{b}")
    groups = []
    for nm in names:
        g = builtin_group(nm)
        if g.order <= max_order:
            groups.append(g)
    return groups
