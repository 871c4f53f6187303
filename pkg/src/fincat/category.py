"""Finite categories with proof-relevant hom-setoids.

A :class:`FinCategory` is plain tabular data: objects, typed arrows, a
partition of the arrows into equivalence classes (the hom-setoids), a
composition table and chosen identities.  Morphism equality is always the
class relation ``equiv``; two distinct arrow indices may be equivalent and
nothing in this package ever collapses them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Callable, Hashable, Iterable, Iterator, Mapping, NamedTuple, Sequence


class StructuralError(ValueError):
    """Data is malformed (an index out of range, a wrong-length table)."""


class CompositionError(ValueError):
    """Two arrows were composed whose endpoints do not meet."""


class Arrow(NamedTuple):
    src: int
    dst: int
    label: str


class Violation(NamedTuple):
    law: str
    where: tuple
    message: str


@dataclass(frozen=True)
class LawReport:
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __add__(self, other: "LawReport") -> "LawReport":
        return LawReport(self.violations + other.violations)

    def prefixed(self, prefix: str) -> "LawReport":
        return LawReport(
            tuple(Violation(f"{prefix}:{v.law}", v.where, v.message) for v in self.violations)
        )

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "violations": [
                {"law": v.law, "where": list(v.where), "message": v.message}
                for v in self.violations
            ],
        }

    def format(self) -> str:
        if self.passed:
            return "passed"
        lines = [f"{len(self.violations)} violation(s):"]
        lines += [f"  [{v.law}] at {v.where}: {v.message}" for v in self.violations]
        return "\n".join(lines)


def canonical_classes(keys: Iterable[Hashable]) -> tuple[int, ...]:
    """Number keys by order of first occurrence."""
    seen: dict = {}
    return tuple(seen.setdefault(k, len(seen)) for k in keys)


@dataclass(frozen=True)
class FinCategory:
    """A finite category presented by tables.

    ``comp[(g, f)]`` is the index of ``g . f`` (apply ``f`` first).  The
    composition table is stored sorted by key so that two categories built
    from the same data compare equal field by field, including ordering.
    """

    objects: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    eq_class: tuple[int, ...]
    comp: Mapping[tuple[int, int], int]
    identities: tuple[int, ...]

    def __post_init__(self):
        set_ = object.__setattr__
        set_(self, "objects", tuple(self.objects))
        set_(self, "arrows", tuple(Arrow(*a) for a in self.arrows))
        set_(self, "eq_class", tuple(self.eq_class))
        set_(self, "identities", tuple(self.identities))
        set_(self, "comp", dict(sorted((tuple(k), v) for k, v in dict(self.comp).items())))
        n, m = len(self.objects), len(self.arrows)
        for i, a in enumerate(self.arrows):
            if not (0 <= a.src < n and 0 <= a.dst < n):
                raise StructuralError(f"arrow {i} ({a.label}) has endpoint out of range")
        if len(self.eq_class) != m:
            raise StructuralError(f"eq_class has length {len(self.eq_class)}, expected {m}")
        if len(self.identities) != n:
            raise StructuralError(f"identities has length {len(self.identities)}, expected {n}")
        for x, i in enumerate(self.identities):
            if not 0 <= i < m:
                raise StructuralError(f"identity of object {x} is out of range")
        for (g, f), h in self.comp.items():
            if not (0 <= g < m and 0 <= f < m and 0 <= h < m):
                raise StructuralError(f"composition entry ({g}, {f}) -> {h} out of range")

    def __hash__(self):
        return hash((self.objects, self.arrows, self.eq_class, self.identities, len(self.comp)))

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_arrows(self) -> int:
        return len(self.arrows)

    def src(self, f: int) -> int:
        return self.arrows[f].src

    def dst(self, f: int) -> int:
        return self.arrows[f].dst

    def identity(self, x: int) -> int:
        return self.identities[x]

    @cached_property
    def _homs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        homs: dict[tuple[int, int], list[int]] = {}
        for i, a in enumerate(self.arrows):
            homs.setdefault((a.src, a.dst), []).append(i)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _out(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.objects]
        for i, a in enumerate(self.arrows):
            out[a.src].append(i)
        return tuple(tuple(o) for o in out)

    @cached_property
    def _reps(self) -> tuple[int, ...]:
        first: dict[tuple[int, int, int], int] = {}
        reps = []
        for i, a in enumerate(self.arrows):
            reps.append(first.setdefault((a.src, a.dst, self.eq_class[i]), i))
        return tuple(reps)

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return self._homs.get((a, b), ())

    def out_of(self, a: int) -> tuple[int, ...]:
        return self._out[a]

    def rep(self, f: int) -> int:
        """Least arrow index in the class of ``f``."""
        return self._reps[f]

    def classes(self, a: int, b: int) -> tuple[int, ...]:
        """Canonical representatives of the classes of ``Hom(a, b)``."""
        return tuple(f for f in self.hom(a, b) if self._reps[f] == f)

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        for f, a in enumerate(self.arrows):
            for g in self._out[a.dst]:
                yield g, f

    def object_index(self, name: str) -> int:
        return self.objects.index(name)

    def arrow_index(self, label: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.label == label:
                return i
        raise KeyError(label)


def structurally_equal(c: FinCategory, d: FinCategory) -> bool:
    """Field-by-field equality, including the order of the composition table."""
    return (
        c.objects == d.objects
        and c.arrows == d.arrows
        and c.eq_class == d.eq_class
        and c.identities == d.identities
        and list(c.comp.items()) == list(d.comp.items())
    )


def equiv(c: FinCategory, f: int, g: int) -> bool:
    af, ag = c.arrows[f], c.arrows[g]
    return af.src == ag.src and af.dst == ag.dst and c.eq_class[f] == c.eq_class[g]


def compose(c: FinCategory, g: int, f: int) -> int:
    if c.arrows[f].dst != c.arrows[g].src:
        raise CompositionError(
            f"cannot compose {c.arrows[g].label} after {c.arrows[f].label}: endpoints do not meet"
        )
    try:
        return c.comp[(g, f)]
    except KeyError:
        raise CompositionError(
            f"composite {c.arrows[g].label}.{c.arrows[f].label} missing from table"
        ) from None


def compose_path(c: FinCategory, *arrows: int) -> int:
    """``compose_path(c, h, g, f)`` is ``h . g . f``."""
    result = arrows[-1]
    for g in reversed(arrows[:-1]):
        result = compose(c, g, result)
    return result


def check_category_laws(c: FinCategory) -> LawReport:
    v: list[Violation] = []
    arrows, comp, cls = c.arrows, c.comp, c.eq_class

    def same(f, g):
        return equiv(c, f, g)

    by_class: dict[int, int] = {}
    for i, a in enumerate(arrows):
        j = by_class.setdefault(cls[i], i)
        if (arrows[j].src, arrows[j].dst) != (a.src, a.dst):
            v.append(Violation("eq-typing", (j, i),
                               f"{arrows[j].label} and {a.label} share a class but are not parallel"))

    for (g, f), h in comp.items():
        if arrows[f].dst != arrows[g].src:
            v.append(Violation("typing", (g, f),
                               f"composite defined for non-composable {arrows[g].label}.{arrows[f].label}"))
        elif (arrows[h].src, arrows[h].dst) != (arrows[f].src, arrows[g].dst):
            v.append(Violation("typing", (g, f),
                               f"{arrows[g].label}.{arrows[f].label} = {arrows[h].label} has wrong endpoints"))
    for g, f in c.composable_pairs():
        if (g, f) not in comp:
            v.append(Violation("typing", (g, f),
                               f"composite {arrows[g].label}.{arrows[f].label} undefined"))

    ids_ok = True
    for x, i in enumerate(c.identities):
        if arrows[i].src != x or arrows[i].dst != x:
            ids_ok = False
            v.append(Violation("typing", (x,), f"identity {arrows[i].label} of {c.objects[x]} is not an endo-arrow"))
    if ids_ok:
        for x, i in enumerate(c.identities):
            ii = comp.get((i, i))
            if ii is not None and not same(ii, i):
                v.append(Violation("identity-squared", (x,), f"id.id != id at {c.objects[x]}"))
        for f, a in enumerate(arrows):
            left = comp.get((c.identities[a.dst], f))
            if left is not None and not same(left, f):
                v.append(Violation("identity-left", (f,), f"id.{a.label} != {a.label}"))
            right = comp.get((f, c.identities[a.src]))
            if right is not None and not same(right, f):
                v.append(Violation("identity-right", (f,), f"{a.label}.id != {a.label}"))

    out = c._out
    for f, af in enumerate(arrows):
        for g in out[af.dst]:
            gf = comp.get((g, f))
            for h in out[arrows[g].dst]:
                hg = comp.get((h, g))
                if gf is None or hg is None:
                    continue
                lhs, rhs = comp.get((hg, f)), comp.get((h, gf))
                if lhs is None or rhs is None:
                    continue
                if not same(lhs, rhs):
                    v.append(Violation("assoc", (h, g, f),
                                       f"({arrows[h].label}.{arrows[g].label}).{af.label} "
                                       f"!= {arrows[h].label}.({arrows[g].label}.{af.label})"))

    seen: dict[tuple, tuple[int, int, int]] = {}
    for g, f in c.composable_pairs():
        h = comp.get((g, f))
        if h is None:
            continue
        key = (arrows[f].src, arrows[f].dst, arrows[g].dst, cls[f], cls[g])
        if key in seen:
            g0, f0, h0 = seen[key]
            if not same(h, h0):
                v.append(Violation("resp", (g, f, g0, f0),
                                   f"{arrows[g].label}.{arrows[f].label} not equivalent to "
                                   f"{arrows[g0].label}.{arrows[f0].label} though factors are"))
        else:
            seen[key] = (g, f, h)
    return LawReport(tuple(v))


def op(c: FinCategory) -> FinCategory:
    return FinCategory(
        objects=c.objects,
        arrows=tuple(Arrow(a.dst, a.src, a.label) for a in c.arrows),
        eq_class=c.eq_class,
        comp={(f, g): h for (g, f), h in c.comp.items()},
        identities=c.identities,
    )


def product_category(c: FinCategory, d: FinCategory) -> FinCategory:
    nd, md = d.n_objects, d.n_arrows
    objects = tuple(f"({x},{y})" for x in c.objects for y in d.objects)
    arrows = tuple(
        Arrow(a.src * nd + b.src, a.dst * nd + b.dst, f"({a.label},{b.label})")
        for a in c.arrows for b in d.arrows
    )
    eq_class = canonical_classes((p, q) for p in c.eq_class for q in d.eq_class)
    comp = {
        (g1 * md + g2, f1 * md + f2): h1 * md + h2
        for (g1, f1), h1 in c.comp.items()
        for (g2, f2), h2 in d.comp.items()
    }
    identities = tuple(i * md + j for i in c.identities for j in d.identities)
    return FinCategory(objects, arrows, eq_class, comp, identities)


def product_pair(c: FinCategory, d: FinCategory, f: int, g: int) -> int:
    """Index of the arrow ``(f, g)`` in ``product_category(c, d)``."""
    return f * d.n_arrows + g


def product_object(c: FinCategory, d: FinCategory, x: int, y: int) -> int:
    return x * d.n_objects + y


@dataclass(frozen=True)
class Slice:
    """A slice category together with how it sits over the base."""

    category: FinCategory
    base: int
    objects: tuple[tuple[int, int], ...]      # (Y, f: Y -> base)
    arrows: tuple[tuple[int, int, int], ...]  # (source slice obj, target slice obj, h)


def slice_over(c: FinCategory, x: int) -> Slice:
    objs = tuple((c.src(f), f) for y in range(c.n_objects) for f in c.classes(y, x))
    arrs: list[tuple[int, int, int]] = []
    for i, (y, f) in enumerate(objs):
        for j, (z, g) in enumerate(objs):
            for h in c.hom(y, z):
                if equiv(c, compose(c, g, h), f):
                    arrs.append((i, j, h))
    index = {a: k for k, a in enumerate(arrs)}
    comp = {}
    for q, (j, k, h2) in enumerate(arrs):
        for p, (i, j2, h1) in enumerate(arrs):
            if j2 == j:
                comp[(q, p)] = index[(i, k, compose(c, h2, h1))]
    cat = FinCategory(
        objects=tuple(f"({c.objects[y]},{c.arrows[f].label})" for y, f in objs),
        arrows=tuple(Arrow(i, j, f"{c.arrows[h].label}[{i},{j}]") for i, j, h in arrs),
        eq_class=canonical_classes((i, j, c.eq_class[h]) for i, j, h in arrs),
        comp=comp,
        identities=tuple(index[(i, i, c.identity(y))] for i, (y, _) in enumerate(objs)),
    )
    return Slice(cat, x, objs, tuple(arrs))


def slice_category(c: FinCategory, x: int) -> FinCategory:
    return slice_over(c, x).category


# ---------------------------------------------------------------- fixtures

def poset_category(names: Sequence[str], leq: Callable[[int, int], bool]) -> FinCategory:
    """Thin category on ``names`` with an arrow i -> j whenever ``leq(i, j)``."""
    n = len(names)
    pairs = [(i, j) for i in range(n) for j in range(n) if leq(i, j)]
    index = {p: k for k, p in enumerate(pairs)}
    arrows = tuple(
        Arrow(i, j, f"id_{names[i]}" if i == j else f"{names[i]}_{names[j]}") for i, j in pairs
    )
    comp = {}
    for (j, k), g in index.items():
        for (i, j2), f in index.items():
            if j2 == j:
                if (i, k) not in index:
                    raise ValueError(f"order is not transitive at {names[i]} <= {names[j]} <= {names[k]}")
                comp[(g, f)] = index[(i, k)]
    if any((i, i) not in index for i in range(n)):
        raise ValueError("order is not reflexive")
    return FinCategory(tuple(names), arrows, tuple(range(len(arrows))), comp,
                       tuple(index[(i, i)] for i in range(n)))


def graph_category(objects: Sequence[str], generators: Sequence[tuple[str, int, int]],
                   extra: Mapping[tuple[str, str], str] = (), classes=None) -> FinCategory:
    """Category whose arrows are identities, the listed generators, and named
    composites ``extra[(g, f)] = label`` (which must already be listed)."""
    arrows = [Arrow(x, x, f"id_{o}") for x, o in enumerate(objects)]
    arrows += [Arrow(s, t, lab) for lab, s, t in generators]
    label = {a.label: i for i, a in enumerate(arrows)}
    comp = {}
    for f, a in enumerate(arrows):
        comp[(a.dst, f)] = f
        comp[(f, a.src)] = f
    for (g, f), h in dict(extra).items():
        comp[(label[g], label[f])] = label[h]
    eq = tuple(range(len(arrows))) if classes is None else canonical_classes(classes)
    return FinCategory(tuple(objects), tuple(arrows), eq, comp, tuple(range(len(objects))))


def monoid_category(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                    obj: str = "*") -> FinCategory:
    """One-object category; ``table[g][f]`` is ``g . f``."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise ValueError("monoid table must be square and non-empty")
    if any(not 0 <= x < n for row in table for x in row):
        raise ValueError("monoid table entry out of range")
    units = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
    if len(units) != 1:
        raise ValueError("monoid table has no two-sided identity")
    e = units[0]
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"monoid table is not associative at ({a}, {b}, {c})")
    if labels is None:
        labels = ["e" if i == e else f"m{i}" for i in range(n)]
    return FinCategory(
        objects=(obj,),
        arrows=tuple(Arrow(0, 0, labels[i]) for i in range(n)),
        eq_class=tuple(range(n)),
        comp={(g, f): table[g][f] for g in range(n) for f in range(n)},
        identities=(e,),
    )


def cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _chain(n: int) -> FinCategory:
    return poset_category([f"c{i}" for i in range(n)], lambda i, j: i <= j)


def _divisors(n: int) -> FinCategory:
    ds = [d for d in range(1, n + 1) if n % d == 0]
    return poset_category([f"d{d}" for d in ds], lambda i, j: ds[j] % ds[i] == 0)


def _build(kind: str, params: tuple) -> FinCategory:
    if kind == "one":
        return FinCategory(("*",), (Arrow(0, 0, "e"),), (0,), {(0, 0): 0}, (0,))
    if kind == "discrete":
        (n,) = params
        return graph_category([f"x{i}" for i in range(n)], [])
    if kind == "walking_arrow":
        return graph_category(["a", "b"], [("u", 0, 1)])
    if kind == "parallel_pair":
        return graph_category(["a", "b"], [("s", 0, 1), ("t", 0, 1)])
    if kind == "cospan":
        return graph_category(["a", "b", "z"], [("f", 0, 2), ("g", 1, 2)])
    if kind == "span":
        return graph_category(["o", "a", "b"], [("p", 0, 1), ("q", 0, 2)])
    if kind == "commutative_square":
        return graph_category(
            ["a", "b", "c", "d"],
            [("f", 0, 1), ("g", 0, 2), ("h", 1, 3), ("k", 2, 3), ("diag", 0, 3)],
            {("h", "f"): "diag", ("k", "g"): "diag"},
        )
    if kind == "chain":
        (n,) = params
        return _chain(n)
    if kind == "divisors":
        (n,) = params
        if n < 1:
            raise ValueError("divisors(n) needs n >= 1")
        return _divisors(n)
    if kind == "monoid":
        return monoid_category(*params)
    if kind == "z2":
        return monoid_category(cyclic_table(2), ["e", "g"])
    if kind == "iso_pair":
        return graph_category(
            ["a", "b"], [("i", 0, 1), ("j", 1, 0)],
            {("j", "i"): "id_a", ("i", "j"): "id_b"},
        )
    if kind == "two_reps":
        return graph_category(["a", "b"], [("f1", 0, 1), ("f2", 0, 1)], classes=[0, 1, 2, 2])
    raise ValueError(f"unknown standard category {kind!r}")


def standard_category(kind: str, *params) -> FinCategory:
    """Named fixture, law-checked before it is returned."""
    c = _build(kind, params)
    report = check_category_laws(c)
    if not report.passed:
        raise ValueError(f"{kind}{params} fails the category laws:\n{report.format()}")
    return c


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# ---------------------------------------------------------------- isomorphism

def find_isomorphism(c: FinCategory, d: FinCategory) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Brute-force search for an isomorphism of categories that also maps
    equivalence classes onto equivalence classes.  Small inputs only."""
    if (c.n_objects, c.n_arrows) != (d.n_objects, d.n_arrows):
        return None

    def sig(cat, x):
        return (len(cat.hom(x, x)), sorted(len(cat.hom(x, y)) for y in range(cat.n_objects)),
                sorted(len(cat.hom(y, x)) for y in range(cat.n_objects)))

    cand = [[y for y in range(d.n_objects) if sig(d, y) == sig(c, x)] for x in range(c.n_objects)]
    for omap in _injections(cand):
        if any(len(c.hom(a, b)) != len(d.hom(omap[a], omap[b]))
               for a in range(c.n_objects) for b in range(c.n_objects)):
            continue
        amap = _match_arrows(c, d, omap)
        if amap is not None:
            return tuple(omap), amap
    return None


def _injections(cand: list[list[int]]) -> Iterator[list[int]]:
    def go(i, used, acc):
        if i == len(cand):
            yield list(acc)
            return
        for y in cand[i]:
            if y not in used:
                used.add(y)
                acc.append(y)
                yield from go(i + 1, used, acc)
                acc.pop()
                used.discard(y)
    yield from go(0, set(), [])


def _match_arrows(c: FinCategory, d: FinCategory, omap: list[int]) -> tuple[int, ...] | None:
    order = sorted(range(c.n_arrows), key=lambda f: (c.identities[c.src(f)] != f, f))
    amap: dict[int, int] = {}
    used: set[int] = set()

    involving: dict[int, list[tuple[int, int, int]]] = {}
    for (x, y), z in c.comp.items():
        for a in {x, y, z}:
            involving.setdefault(a, []).append((x, y, z))

    def consistent(f, g):
        if (c.identities[c.src(f)] == f) != (d.identities[d.src(g)] == g):
            return False
        if any(equiv(c, f, f2) != equiv(d, g, g2) for f2, g2 in amap.items()):
            return False
        for x, y, z in involving.get(f, ()):
            if x in amap and y in amap and z in amap:
                if d.comp.get((amap[x], amap[y])) != amap[z]:
                    return False
        return True

    def go(k):
        if k == len(order):
            return True
        f = order[k]
        for g in d.hom(omap[c.src(f)], omap[c.dst(f)]):
            if g in used:
                continue
            amap[f] = g
            used.add(g)
            if consistent(f, g) and go(k + 1):
                return True
            del amap[f]
            used.discard(g)
        return False

    if go(0):
        return tuple(amap[f] for f in range(c.n_arrows))
    return None
