"""Brute-force reference implementations over explicit element tables.

Nothing here touches stabiliser chains: groups are closed by breadth-first
multiplication and every derived object is computed from the full
multiplication table.  Intended for groups of order at most a few thousand.
"""

from __future__ import annotations

import numpy as np

_RNG = np.random.default_rng(12345)
_WEIGHTS = _RNG.integers(1, 2**62, size=64, dtype=np.uint64)


def _keys(rows: np.ndarray) -> np.ndarray:
    w = _WEIGHTS[: rows.shape[1]]
    return (rows.astype(np.uint64) * w).sum(axis=1, dtype=np.uint64)


class BruteGroup:
    """A permutation group held as its full element list and Cayley table."""

    def __init__(self, gens, degree: int):
        self.degree = degree
        ident = tuple(range(degree))
        gens = [tuple(g) for g in gens]
        seen = {ident}
        elems = [ident]
        i = 0
        while i < len(elems):
            e = elems[i]
            for g in gens:
                x = tuple(g[v] for v in e)
                if x not in seen:
                    seen.add(x)
                    elems.append(x)
            i += 1
        self.elems = elems
        self.rows = np.array(elems, dtype=np.int64)
        keys = _keys(self.rows)
        self._order_keys = np.argsort(keys)
        self._sorted_keys = keys[self._order_keys]
        if len(np.unique(keys)) != len(keys):
            raise RuntimeError("hash collision in oracle")
        self.gen_idx = [self.index_of(g) for g in gens]

    def __len__(self):
        return len(self.elems)

    def index_rows(self, rows: np.ndarray) -> np.ndarray:
        keys = _keys(rows)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, len(self._sorted_keys) - 1)
        idx = self._order_keys[pos]
        ok = (self._sorted_keys[pos] == keys) & (self.rows[idx] == rows).all(axis=1)
        return np.where(ok, idx, -1)

    def index_of(self, p) -> int:
        return int(self.index_rows(np.array([tuple(p)], dtype=np.int64))[0])

    @property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of elems[i] * elems[j] (apply i first)."""
        if not hasattr(self, "_table"):
            n = len(self)
            t = np.empty((n, n), dtype=np.int64)
            for i in range(n):
                t[i] = self.index_rows(self.rows[:, self.rows[i]])
            self._table = t
        return self._table

    @property
    def inverse(self) -> np.ndarray:
        if not hasattr(self, "_inverse"):
            inv = np.argsort(self.rows, axis=1)
            self._inverse = self.index_rows(inv)
        return self._inverse

    # -- subgroup machinery on index sets -----------------------------------

    def closure(self, idx) -> frozenset:
        """Subgroup generated by the given element indices."""
        group = {0}
        gens = []
        t = self.table
        for x in idx:
            x = int(x)
            if x in group:
                continue
            gens.append(x)
            frontier = list(group)
            while frontier:
                nxt = []
                for e in frontier:
                    for g in gens:
                        y = int(t[e, g])
                        if y not in group:
                            group.add(y)
                            nxt.append(y)
                frontier = nxt
        return frozenset(group)

    def conjugates(self, x: int) -> set:
        """All ``h^-1 x h`` over every element ``h``."""
        t, inv = self.table, self.inverse
        hs = np.arange(len(self))
        return set(t[t[inv[hs], x], hs].tolist())

    def classes(self) -> list:
        seen = set()
        out = []
        for x in range(len(self)):
            if x not in seen:
                c = self.conjugates(x)
                seen |= c
                out.append(sorted(c))
        return out

    def normal_closure(self, idx) -> frozenset:
        conj = set()
        for x in idx:
            conj |= self.conjugates(int(x))
        return self.closure(sorted(conj))

    def normal_subgroups(self, limit: int = 5000) -> list:
        """All normal subgroups: closures of single classes, closed under joins."""
        found = {self.normal_closure([c[0]]) for c in self.classes()}
        found.add(frozenset({0}))
        todo = list(found)
        while todo:
            a = todo.pop()
            for b in list(found):
                j = self.closure(sorted(a | b))
                if j not in found:
                    found.add(j)
                    todo.append(j)
                    if len(found) > limit:
                        raise RuntimeError("too many normal subgroups for the oracle")
        return sorted(found, key=len)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != 0:
            y = int(self.table[y, x])
            k += 1
        return k

    def p_core(self, p: int) -> frozenset:
        """Elements whose normal closure is a p-group; this set is O_p."""
        out = set()
        for c in self.classes():
            n = len(self.normal_closure([c[0]]))
            if _is_power(n, p):
                out |= set(c)
        return frozenset(out)

    def centraliser(self, gens) -> frozenset:
        t = self.table
        ks = [self.index_of(k) for k in gens]
        return frozenset(x for x in range(len(self)) if all(t[x, k] == t[k, x] for k in ks))

    def perms(self, idx) -> set:
        return {self.elems[i] for i in idx}

    # -- actions --------------------------------------------------------------

    def orbits_of(self, idx) -> list:
        parent = list(range(self.degree))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for i in idx:
            e = self.elems[i]
            for x in range(self.degree):
                a, b = find(x), find(e[x])
                if a != b:
                    parent[a] = b
        groups = {}
        for x in range(self.degree):
            groups.setdefault(find(x), []).append(x)
        return list(groups.values())

    def is_transitive(self, idx) -> bool:
        return len(self.orbits_of(idx)) == 1

    def is_semiregular(self, idx) -> bool:
        return all(all(self.elems[i][x] != x for x in range(self.degree)) for i in idx if i != 0)

    def flags(self) -> tuple:
        """(quasiprimitive, semiprimitive) by checking every normal subgroup."""
        everything = range(len(self))
        if not self.is_transitive(everything):
            return False, False
        quasi = semi = True
        for n in self.normal_subgroups():
            if len(n) == 1:
                continue
            t = self.is_transitive(n)
            if not t:
                quasi = False
                if not self.is_semiregular(n):
                    semi = False
        return quasi, semi


def _is_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
