"""Pure-Python group kernel: collection-based multiplication and orbit BFS.

Elements are 6-tuples of field indices in coordinate order
(t1, t2, t3, t4, t5, t6); internally the kernel permutes them into normal
order (t2, t1, t3, t4, t5, t6), the order in which factors appear in the
defining product.  Multiplication pushes the right operand's factors one by
one into a normal form, swapping out-of-order neighbours and emitting the
commutator factors of the five nonzero rules; every emitted factor sits
strictly later in normal order, which bounds the recursion.

The compiled twin in ``_speedups.pyx`` implements the identical algorithm;
``d4syl.backend`` picks whichever is available.
"""

from __future__ import annotations

import numpy as np

# slot s <-> coordinate: slots run in normal order, coordinates in label order
_SLOT_OF_COORD = (1, 0, 2, 3, 4, 5)
_COORD_OF_SLOT = (1, 0, 2, 3, 4, 5)  # the permutation is an involution


class GroupKernel:
    backend = "python"

    def __init__(self, ctx):
        self.q = ctx.q
        self.q3 = ctx.q3
        # plain nested lists: scalar indexing beats numpy here
        self.add3 = ctx.add3.tolist()
        self.mul3 = ctx.mul3.tolist()
        self.neg3 = ctx.neg3.tolist()
        self.addq = ctx.addq.tolist()
        self.mulq = ctx.mulq.tolist()
        self.negq = ctx.negq.tolist()
        self.frob = ctx.frob.tolist()
        self.frob2 = ctx.frob2.tolist()
        self.powq1 = ctx.powq1.tolist()
        self.powq2q = ctx.powq2q.tolist()
        self.phi0q = ctx.phi0q.tolist()
        self.norm_fq = ctx.norm_fq.tolist()
        self.embq = ctx.embq.tolist()
        self.two_q = ctx.fq_int_index(2)
        # per-slot addition tables (slots 0,4,5 hold F_q values)
        self._addt = [self.addq, self.add3, self.add3, self.add3, self.addq, self.addq]
        self._negt = [self.negq, self.neg3, self.neg3, self.neg3, self.negq, self.negq]

    # -- scalar operations ------------------------------------------------

    def mul(self, a, b):
        e = [a[1], a[0], a[2], a[3], a[4], a[5]]
        push = self._push
        push(e, 0, b[1])
        push(e, 1, b[0])
        push(e, 2, b[2])
        push(e, 3, b[3])
        push(e, 4, b[4])
        push(e, 5, b[5])
        return (e[1], e[0], e[2], e[3], e[4], e[5])

    def inv(self, a):
        e = [0, 0, 0, 0, 0, 0]
        push = self._push
        push(e, 5, self.negq[a[5]])
        push(e, 4, self.negq[a[4]])
        push(e, 3, self.neg3[a[3]])
        push(e, 2, self.neg3[a[2]])
        push(e, 1, self.neg3[a[0]])
        push(e, 0, self.negq[a[1]])
        return (e[1], e[0], e[2], e[3], e[4], e[5])

    def conj(self, u, x):
        return self.mul(self.mul(u, x), self.inv(u))

    def _push(self, e, s, v):
        # multiply the normal form e on the right by the slot-s factor v
        if v == 0:
            return
        m = -1
        for j in range(5, s, -1):
            if e[j]:
                m = j
                break
        if m < 0:
            e[s] = self._addt[s][e[s]][v]
            return
        a = e[m]
        e[m] = 0
        self._push(e, s, v)
        self._push(e, m, a)
        # commutator [x_(slot m)(a), x_(slot s)(v)]; only five pairs are nonzero
        if m == 1:
            if s == 0:
                mul3, mulq = self.mul3, self.mulq
                ev = self.embq[v]
                na = self.norm_fq[a]
                self._push(e, 2, self.neg3[mul3[ev][a]])
                self._push(e, 3, mul3[ev][self.powq1[a]])
                self._push(e, 4, self.negq[mulq[v][na]])
                self._push(e, 5, mulq[self.two_q][mulq[mulq[v][v]][na]])
        elif m == 2:
            if s == 1:
                mul3 = self.mul3
                self._push(
                    e, 3, self.neg3[self.add3[mul3[v][self.frob[a]]][mul3[self.frob[v]][a]]]
                )
                self._push(e, 4, self.phi0q[mul3[self.powq1[v]][self.frob2[a]]])
                self._push(e, 5, self.phi0q[mul3[v][self.powq2q[a]]])
        elif m == 3:
            if s == 1:
                self._push(e, 4, self.negq[self.phi0q[self.mul3[v][self.frob[a]]]])
            elif s == 2:
                self._push(e, 5, self.negq[self.phi0q[self.mul3[v][self.frob[a]]]])
        elif m == 4:
            if s == 0:
                self._push(e, 5, self.negq[self.mulq[v][a]])

    # -- ranks -------------------------------------------------------------

    def rank(self, a):
        q, q3 = self.q, self.q3
        return ((((a[0] * q + a[1]) * q3 + a[2]) * q3 + a[3]) * q + a[4]) * q + a[5]

    def unrank(self, r):
        q, q3 = self.q, self.q3
        r, t6 = divmod(r, q)
        r, t5 = divmod(r, q)
        r, t4 = divmod(r, q3)
        r, t3 = divmod(r, q3)
        t1, t2 = divmod(r, q)
        return (t1, t2, t3, t4, t5, t6)

    # -- bulk operations ------------------------------------------------------

    def mul_many(self, a_arr, b_arr):
        out = np.empty_like(np.asarray(a_arr))
        mul = self.mul
        for i, (a, b) in enumerate(zip(np.asarray(a_arr).tolist(), np.asarray(b_arr).tolist())):
            out[i] = mul(tuple(a), tuple(b))
        return out

    def inv_many(self, a_arr):
        out = np.empty_like(np.asarray(a_arr))
        inv = self.inv
        for i, a in enumerate(np.asarray(a_arr).tolist()):
            out[i] = inv(tuple(a))
        return out

    def conj_many(self, u_arr, x_arr):
        out = np.empty_like(np.asarray(x_arr))
        conj = self.conj
        for i, (u, x) in enumerate(zip(np.asarray(u_arr).tolist(), np.asarray(x_arr).tolist())):
            out[i] = conj(tuple(u), tuple(x))
        return out

    def orbit_partition(self, gens):
        """Labels[r] = rank of the minimal element of the conjugation orbit
        through the rank-r element, closing under the given generators."""
        q, q3 = self.q, self.q3
        size = q3 * q3 * q3 * q * q * q
        gens = [tuple(g) for g in np.asarray(gens).tolist()]
        pairs = [(g, self.inv(g)) for g in gens]
        labels = np.full(size, -1, dtype=np.int32)
        lab = labels  # local alias
        mul, rank, unrank = self.mul, self.rank, self.unrank
        stack = []
        for seed in range(size):
            if lab[seed] >= 0:
                continue
            lab[seed] = seed
            stack.append(seed)
            while stack:
                x = unrank(stack.pop())
                for g, gi in pairs:
                    y = mul(mul(g, x), gi)
                    ry = rank(y)
                    if lab[ry] < 0:
                        lab[ry] = seed
                        stack.append(ry)
        return labels
