"""Finite groups presented by Cayley tables on {0, ..., m-1}.

These are the binary (arity 2) building blocks: bases of derived and
twisted-product polyadic operations, and the result of taking a retract.
Construction validates the full group axioms, so holding a BinaryGroup
is proof of group-ness.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import NotAssociative


class BinaryGroup:
    """A finite group on elements 0..size-1 with an explicit Cayley table."""

    def __init__(self, table, labels=None):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValueError("Cayley table must be square")
        m = table.shape[0]
        if m == 0:
            raise ValueError("carrier must be nonempty")
        if table.min() < 0 or table.max() >= m:
            raise ValueError("table entries must lie in 0..m-1")
        if labels is not None and len(labels) != m:
            raise ValueError("label count must match carrier size")

        # (x*y)*z == x*(y*z) via two gathers over all m^3 triples
        left = table[table, :]          # [x,y,z] -> (x*y)*z
        right = table[:, table]         # [x,y,z] -> x*(y*z)
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)
            x, y, z = min(map(tuple, bad))
            raise NotAssociative(1, 2, (int(x), int(y), int(z)))

        identity = None
        for e in range(m):
            if np.array_equal(table[e], np.arange(m)) and np.array_equal(
                table[:, e], np.arange(m)
            ):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")

        inverse = np.full(m, -1, dtype=np.int64)
        for x in range(m):
            hits = np.flatnonzero(table[x] == identity)
            if len(hits) != 1:
                raise ValueError(f"element {x} has no unique inverse")
            inverse[x] = hits[0]

        self.size = m
        self.table = table
        self.identity = identity
        self.inverse = inverse
        self.labels = tuple(labels) if labels is not None else None

    # -- constructors -----------------------------------------------------

    @classmethod
    def cyclic(cls, m):
        """Additive group of integers mod m."""
        idx = np.arange(m)
        return cls((idx[:, None] + idx[None, :]) % m)

    @classmethod
    def symmetric(cls, k):
        """Symmetric group on k letters, elements in lex order of permutations."""
        perms = sorted(itertools.permutations(range(k)))
        index = {p: i for i, p in enumerate(perms)}
        m = len(perms)
        table = np.zeros((m, m), dtype=np.int64)
        for i, p in enumerate(perms):
            for j, q in enumerate(perms):
                # composition: apply q first, then p
                table[i, j] = index[tuple(p[q[t]] for t in range(k))]
        return cls(table)

    @classmethod
    def from_rows(cls, rows, labels=None):
        return cls(np.asarray(rows), labels=labels)

    # -- basic operations --------------------------------------------------

    def mul(self, x, y):
        return int(self.table[x, y])

    def inv(self, x):
        return int(self.inverse[x])

    def fold(self, elements):
        """Product of a sequence, identity when empty."""
        acc = self.identity
        for x in elements:
            acc = int(self.table[acc, x])
        return acc

    def power(self, x, k):
        if k < 0:
            return self.power(self.inv(x), -k)
        return self.fold([x] * k)

    def element_order(self, x):
        k, acc = 1, x
        while acc != self.identity:
            acc = int(self.table[acc, x])
            k += 1
        return k

    # -- predicates ---------------------------------------------------------

    def non_central_witness(self, b):
        """Smallest y with b*y != y*b, or None if b is central."""
        bad = np.flatnonzero(self.table[b] != self.table[:, b])
        return int(bad[0]) if len(bad) else None

    def is_abelian(self):
        return bool(np.array_equal(self.table, self.table.T))

    def automorphism_witness(self, phi):
        """None if phi is an automorphism, else the smallest offending datum.

        Returns ("bijection", v) for a value never hit, or ("product", x, y)
        for the smallest pair with phi(x*y) != phi(x)*phi(y).
        """
        phi = np.asarray(phi, dtype=np.int64)
        if phi.shape != (self.size,) or phi.min() < 0 or phi.max() >= self.size:
            raise ValueError("map must assign every element a carrier element")
        if len(set(phi.tolist())) != self.size:
            missing = sorted(set(range(self.size)) - set(phi.tolist()))[0]
            return ("bijection", missing)
        lhs = phi[self.table]
        rhs = self.table[phi[:, None], phi[None, :]]
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)
            x, y = min(map(tuple, bad))
            return ("product", int(x), int(y))
        return None

    def __eq__(self, other):
        return isinstance(other, BinaryGroup) and np.array_equal(
            self.table, other.table
        )

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"BinaryGroup(size={self.size}, identity={self.identity})"


def find_isomorphism(g, h):
    """A bijection phi with phi(x*y) = phi(x)*phi(y), or None.

    Backtracking assignment in carrier order, pruned by element order and by
    partial homomorphism constraints.  Intended for small carriers.
    """
    if g.size != h.size:
        return None
    g_orders = [g.element_order(x) for x in range(g.size)]
    h_orders = [h.element_order(x) for x in range(h.size)]
    if sorted(g_orders) != sorted(h_orders):
        return None

    m = g.size
    phi = [-1] * m
    used = [False] * m

    def extend(x):
        if x == m:
            # pruning during assignment is partial (products assigned later
            # than their factors are not re-checked), so verify in full here
            arr = np.asarray(phi)
            return bool(
                np.array_equal(arr[g.table], h.table[arr[:, None], arr[None, :]])
            )
        for y in range(m):
            if used[y] or h_orders[y] != g_orders[x]:
                continue
            ok = True
            phi[x] = y
            for z in range(x + 1):
                if phi[z] < 0:
                    continue
                if (
                    phi[g.mul(x, z)] >= 0
                    and phi[g.mul(x, z)] != h.mul(y, phi[z])
                ) or (
                    phi[g.mul(z, x)] >= 0
                    and phi[g.mul(z, x)] != h.mul(phi[z], y)
                ):
                    ok = False
                    break
            if ok:
                used[y] = True
                if extend(x + 1):
                    return True
                used[y] = False
            phi[x] = -1
        return False

    if extend(0):
        return tuple(phi)
    return None
