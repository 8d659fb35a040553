"""Permutation-tuple search for the Hurwitz existence problem.

Given cycle types for branch points plus ``r`` simple transpositions, find
permutations of {0..d-1} with the prescribed cycle types whose product is
the identity and which generate a transitive group.

Products are read left to right: ``compose(p, q)`` applies ``p`` first.

Only the non-simple branch points are searched.  Transpositions are handled
in closed form: for a partial product ``pi`` whose chosen permutations have
``c`` orbits, ``r`` transpositions can finish the tuple transitively iff
``r >= l(pi) + 2(c - 1)`` and ``r - l(pi)`` is even, where ``l`` is the
minimal transposition length ``d - #cycles``.  The first searched point is
fixed to a canonical representative (conjugating a solution preserves it).

The inner loop is implemented twice: a Cython kernel (``_permsearch``) and
the pure-Python ``search_py`` below.  ``BACKEND`` names the one in use;
set ``K3FIB_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegreeTooLarge

MAX_DEGREE = 8


def _env_max_degree() -> int:
    raw = os.environ.get("K3FIB_MAX_DEGREE")
    return int(raw) if raw else MAX_DEGREE


# --------------------------------------------------------------------------
# permutation helpers (tuples of images)

def identity(d: int) -> tuple:
    return tuple(range(d))


def compose(p, q) -> tuple:
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycle_type(p) -> tuple:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if not seen[i]:
            n = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                n += 1
            lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def transposition(d: int, a: int, b: int) -> tuple:
    p = list(range(d))
    p[a], p[b] = b, a
    return tuple(p)


def orbits(perms, d: int) -> list:
    parent = list(range(d))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i in range(d):
            a, b = find(i), find(p[i])
            if a != b:
                parent[a] = b
    groups = {}
    for i in range(d):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def is_transitive(perms, d: int) -> bool:
    return d <= 1 or len(orbits(perms, d)) == 1


def canonical_representative(ctype) -> tuple:
    """The permutation cycling consecutive blocks of the given lengths."""
    d = sum(ctype)
    p = list(range(d))
    start = 0
    for n in ctype:
        for i in range(n):
            p[start + i] = start + (i + 1) % n
        start += n
    return tuple(p)


@lru_cache(maxsize=None)
def _perms_by_type(d: int) -> dict:
    table = {}
    for p in itertools.permutations(range(d)):
        table.setdefault(cycle_type(p), []).append(p)
    return table


def conjugacy_class(ctype) -> list:
    ctype = tuple(sorted(ctype, reverse=True))
    return _perms_by_type(sum(ctype)).get(ctype, [])


@lru_cache(maxsize=None)
def _class_block(ctype) -> bytes:
    # the class packed as consecutive d-byte images, the kernels' input format
    return b"".join(bytes(p) for p in conjugacy_class(ctype))


def _is_simple(ctype) -> bool:
    return sum(1 for x in ctype if x > 1) == 1 and max(ctype) == 2


def _is_trivial(ctype) -> bool:
    return all(x == 1 for x in ctype)


# --------------------------------------------------------------------------
# reference kernel

def search_py(d: int, first: bytes, levels: list, r: int, last_type) -> list | None:
    """Depth-first search over ``levels``.

    ``first`` is the fixed first permutation; ``levels`` is a list of byte
    strings, each a concatenation of candidate permutations (d bytes each).
    If ``last_type`` is given (only when r == 0), one more permutation is
    forced to be the inverse of the running product and must have that
    cycle type.  Returns the chosen candidate index per level, or None.
    """
    depth = len(levels)
    first = tuple(first)
    chosen = [0] * depth

    def finish(prod, perms_so_far):
        if last_type is not None:
            last = inverse(prod)
            if cycle_type(last) != last_type:
                return False
            return is_transitive(perms_so_far + [last], d)
        ell = d - len(cycle_type(prod))
        c = len(orbits(perms_so_far, d))
        return r >= ell + 2 * (c - 1) and (r - ell) % 2 == 0

    def rec(level, prod, perms_so_far):
        if level == depth:
            return finish(prod, perms_so_far)
        block = levels[level]
        for idx in range(len(block) // d):
            p = tuple(block[idx * d:(idx + 1) * d])
            chosen[level] = idx
            if rec(level + 1, compose(prod, p), perms_so_far + [p]):
                return True
        return False

    if rec(0, first, [first]):
        return list(chosen)
    return None


try:
    if os.environ.get("K3FIB_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from ._permsearch import search as _search_ext
    BACKEND = "cython"
except ImportError:
    _search_ext = None
    BACKEND = "python"


def _kernel(backend: str | None):
    backend = backend or BACKEND
    if backend == "cython":
        if _search_ext is None:
            raise RuntimeError("compiled kernel is not available")
        return _search_ext
    return search_py


# --------------------------------------------------------------------------
# witnesses

@dataclass(frozen=True)
class PermWitness:
    """Permutations in product order; each entry is (label, perm)."""

    degree: int
    entries: tuple

    def product(self) -> tuple:
        prod = identity(self.degree)
        for _, p in self.entries:
            prod = compose(prod, p)
        return prod

    def verify(self, expected: dict | None = None) -> bool:
        """Identity product, transitivity, and (optionally) cycle types.

        ``expected`` maps labels to partitions.
        """
        d = self.degree
        if self.product() != identity(d):
            return False
        if not is_transitive([p for _, p in self.entries], d):
            return False
        if expected is not None:
            got = {label: cycle_type(p) for label, p in self.entries}
            for label, ctype in expected.items():
                if got.get(label) != tuple(sorted(ctype, reverse=True)):
                    return False
        return True

    def as_dict(self) -> dict:
        return {"degree": self.degree,
                "entries": [{"label": label, "perm": [i + 1 for i in p]}
                            for label, p in self.entries]}


def _transposition_tail(prod, perms, d: int, r: int) -> list:
    """r transpositions finishing ``prod`` to the identity transitively."""
    tail = []
    comps = orbits(perms, d)
    current = prod
    for a, b in zip(comps, comps[1:]):
        t = transposition(d, a[0], b[0])
        tail.append(t)
        current = compose(current, t)
    while current != identity(d):
        i = next(x for x in range(d) if current[x] != x)
        t = transposition(d, i, current[i])
        tail.append(t)
        current = compose(current, t)
    if len(tail) > r or (r - len(tail)) % 2:
        raise AssertionError("transposition budget mismatch")
    while len(tail) < r:
        t = transposition(d, 0, 1)
        tail.extend([t, t])
    return tail


def realizable_cycle_types(types, d: int, labels=None, backend: str | None = None):
    """Find a transitive permutation tuple with product one, or None.

    ``types`` is a sequence of partitions of d (transpositions may be listed
    as [2, 1, ..., 1]).  ``labels`` names the points in the witness.
    """
    bound = _env_max_degree()
    if d > bound:
        raise DegreeTooLarge(f"degree {d} exceeds the search bound {bound}")
    types = [tuple(sorted(t, reverse=True)) for t in types]
    for t in types:
        if sum(t) != d:
            raise ValueError(f"{list(t)} is not a partition of {d}")
    if labels is None:
        labels = [f"p{i}" for i in range(len(types))]
    labels = list(labels)

    if d == 1:
        return PermWitness(1, tuple((lab, (0,)) for lab in labels))

    # sign condition: the product of all permutations must be even
    if sum(d - len(t) for t in types) % 2:
        return None

    trivial = [i for i, t in enumerate(types) if _is_trivial(t)]
    simple = [i for i, t in enumerate(types) if _is_simple(t)]
    heavy = [i for i, t in enumerate(types) if i not in trivial and i not in simple]
    r = len(simple)

    chosen = {}
    if heavy:
        heavy.sort(key=lambda i: (-len(conjugacy_class(types[i])), i))
        first = heavy[0]
        rest = heavy[1:]
        last = None
        if r == 0 and rest:
            last = rest[0]
            rest = rest[1:]
        rest.sort(key=lambda i: (len(conjugacy_class(types[i])), i))
        first_perm = canonical_representative(types[first])
        blocks = [_class_block(types[i]) for i in rest]
        last_type = types[last] if last is not None else None
        if last is None and r == 0:
            # a single non-simple point can never close up on its own
            return None
        picked = _kernel(backend)(d, bytes(first_perm), blocks, r, last_type)
        if picked is None:
            return None
        chosen[first] = first_perm
        prod = first_perm
        for i, idx in zip(rest, picked):
            p = conjugacy_class(types[i])[idx]
            chosen[i] = p
            prod = compose(prod, p)
        if last is not None:
            chosen[last] = inverse(prod)
            prod = identity(d)
        order = [first] + rest + ([last] if last is not None else [])
    else:
        prod = identity(d)
        order = []
        if not (r >= 2 * (d - 1) and r % 2 == 0):
            return None

    perms = [chosen[i] for i in order]
    tail = _transposition_tail(prod, perms, d, r)
    entries = [(labels[i], chosen[i]) for i in order]
    entries += [(labels[i], t) for i, t in zip(simple, tail)]
    entries += [(labels[i], identity(d)) for i in trivial]
    witness = PermWitness(d, tuple(entries))
    if not witness.verify({labels[i]: types[i] for i in range(len(types))}):
        raise AssertionError("constructed witness failed verification")
    return witness
