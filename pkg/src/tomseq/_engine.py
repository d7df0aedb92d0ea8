"""Vectorized arithmetic on the elements of one fixed ambient group.

Elements are referred to by their index in the sorted element list of the
ambient group, so index order is the canonical permutation order.  Subgroups
are sorted ``int32`` index arrays.
"""

from __future__ import annotations

import numpy as np

from .permcore import Group, Permutation, group_from_elements


class IndexedGroup:
    def __init__(self, group: Group):
        self.group = group
        self.n = group.degree
        self.size = group.order
        self.images = np.array(group.elements, dtype=np.int16).reshape(self.size, self.n)
        if self.n <= 16:
            self._weights = (16 ** np.arange(self.n - 1, -1, -1)).astype(np.int64)
            self.codes = self.images.astype(np.int64) @ self._weights
            self._lookup = None
        else:
            self.codes = None
            self._lookup = {row.tobytes(): i for i, row in enumerate(self.images)}
        self.all = np.arange(self.size, dtype=np.int32)
        self.inv = self.index_of(np.argsort(self.images, axis=1))
        ctypes = [p.cycle_type() for p in group.elements]
        labels = {t: i for i, t in enumerate(sorted(set(ctypes)))}
        self.ctype = np.array([labels[t] for t in ctypes], dtype=np.int32)
        self.n_ctypes = len(labels)
        self.elem_order = np.array([p.order() for p in group.elements], dtype=np.int64)

    def index_of(self, images: np.ndarray) -> np.ndarray:
        images = images.reshape(-1, self.n)
        if self.codes is not None:
            idx = np.searchsorted(self.codes, images.astype(np.int64) @ self._weights)
        else:
            idx = np.array([self._lookup[r.astype(np.int16).tobytes()] for r in images])
        return idx.astype(np.int32)

    def index(self, p: Permutation) -> int:
        return int(self.index_of(np.asarray(p, dtype=np.int16))[0])

    def mul(self, a, b) -> np.ndarray:
        """Indices of ``a[i] ∘ b[i]`` (broadcasting)."""
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        shape = a.shape
        ia = self.images[a.ravel()]
        ib = self.images[b.ravel()]
        prod = np.take_along_axis(ia, ib.astype(np.int64), axis=1)
        return self.index_of(prod).reshape(shape)

    def conj(self, x, k) -> np.ndarray:
        """Indices of ``x^-1 k x`` (broadcasting)."""
        x = np.asarray(x)
        return self.mul(self.mul(self.inv[x], k), x)

    def perm(self, i: int) -> Permutation:
        return Permutation._raw(int(v) for v in self.images[i])

    def to_group(self, elems: np.ndarray) -> Group:
        return group_from_elements((tuple(int(v) for v in self.images[i]) for i in elems), self.n)

    def from_group(self, h: Group) -> np.ndarray:
        idx = self.index_of(np.array(h.elements, dtype=np.int16))
        return np.sort(idx)

    def mask(self, elems: np.ndarray) -> np.ndarray:
        m = np.zeros(self.size, dtype=bool)
        m[elems] = True
        return m

    # -- subgroup construction -------------------------------------------

    def closure(self, gens, base: np.ndarray | None = None) -> np.ndarray:
        """Subgroup generated by ``gens``.

        ``base``, if given, must be a subgroup of the result; the closure then
        grows by whole cosets ``base * r`` and only coset representatives are
        multiplied by generators.
        """
        if base is None:
            base = np.zeros(1, dtype=np.int32)
        gens = np.asarray(list(gens), dtype=np.int32)
        m = self.mask(base)
        parts = [base]
        reps = np.zeros(1, dtype=np.int32)
        while reps.size and gens.size:
            cand = np.unique(self.mul(reps[:, None], gens[None, :]).ravel())
            cand = cand[~m[cand]]
            if not cand.size:
                break
            cosets = self.mul(base[None, :], cand[:, None])
            # several candidates may share a coset; keep one per coset minimum
            _, first = np.unique(cosets.min(axis=1), return_index=True)
            cosets = cosets[first]
            reps = cand[first]
            m[cosets.ravel()] = True
            parts.append(cosets.ravel())
        return np.sort(np.concatenate(parts)).astype(np.int32)

    def generators_of(self, elems: np.ndarray) -> list[int]:
        """Greedy generating set taken in ascending element order."""
        gens: list[int] = []
        cur = np.zeros(1, dtype=np.int32)
        m = self.mask(cur)
        target = elems.size
        for e in elems:
            if cur.size == target:
                break
            if m[e]:
                continue
            gens.append(int(e))
            cur = self.closure(gens, base=cur)
            m = self.mask(cur)
        return gens

    def normalizer(self, elems: np.ndarray, gens) -> np.ndarray:
        m = self.mask(elems)
        ok = np.ones(self.size, dtype=bool)
        for g in gens:
            ok &= m[self.conj(self.all, g)]
        return np.flatnonzero(ok).astype(np.int32)

    def conjugacy_witness(self, gens_h, elems_k: np.ndarray) -> int | None:
        """Smallest ``x`` with ``H^x == K`` for equal-order ``H, K``."""
        m = self.mask(elems_k)
        ok = np.ones(self.size, dtype=bool)
        for g in gens_h:
            ok &= m[self.conj(self.all, g)]
        hits = np.flatnonzero(ok)
        return int(hits[0]) if hits.size else None

    def right_transversal(self, sub: np.ndarray) -> np.ndarray:
        """Smallest element of each right coset ``sub * x``."""
        seen = np.zeros(self.size, dtype=bool)
        reps = []
        for x in range(self.size):
            if seen[x]:
                continue
            reps.append(x)
            seen[self.mul(sub, x)] = True
        return np.array(reps, dtype=np.int32)

    def conjugates(self, elems: np.ndarray, norm: np.ndarray) -> list[np.ndarray]:
        """All distinct conjugates ``H^x``, one per coset of the normalizer."""
        return [np.sort(self.conj(t, elems)) for t in self.right_transversal(norm)]

    def signature(self, elems: np.ndarray) -> tuple:
        """Conjugation invariant: order and cycle-type histogram."""
        return (int(elems.size), tuple(np.bincount(self.ctype[elems], minlength=self.n_ctypes)))
