# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled group kernel: identical algorithm to d4syl._kernel_py."""

import numpy as np


cdef class GroupKernel:
    cdef public int q, q3
    cdef int two_q
    cdef int[:, ::1] add3, mul3, addq, mulq
    cdef int[::1] neg3, negq, frob, frob2, powq1, powq2q, phi0q, norm_fq, embq

    backend = "c"

    def __init__(self, ctx):
        def c2(a):
            return np.ascontiguousarray(a, dtype=np.intc)

        self.q = ctx.q
        self.q3 = ctx.q3
        self.add3 = c2(ctx.add3)
        self.mul3 = c2(ctx.mul3)
        self.addq = c2(ctx.addq)
        self.mulq = c2(ctx.mulq)
        self.neg3 = c2(ctx.neg3)
        self.negq = c2(ctx.negq)
        self.frob = c2(ctx.frob)
        self.frob2 = c2(ctx.frob2)
        self.powq1 = c2(ctx.powq1)
        self.powq2q = c2(ctx.powq2q)
        self.phi0q = c2(ctx.phi0q)
        self.norm_fq = c2(ctx.norm_fq)
        self.embq = c2(ctx.embq)
        self.two_q = ctx.fq_int_index(2)

    cdef void _push(self, int* e, int s, int v) noexcept:
        cdef int m, j, a, ev, na
        if v == 0:
            return
        m = -1
        for j in range(5, s, -1):
            if e[j] != 0:
                m = j
                break
        if m < 0:
            if s == 1 or s == 2 or s == 3:
                e[s] = self.add3[e[s], v]
            else:
                e[s] = self.addq[e[s], v]
            return
        a = e[m]
        e[m] = 0
        self._push(e, s, v)
        self._push(e, m, a)
        if m == 1:
            if s == 0:
                ev = self.embq[v]
                na = self.norm_fq[a]
                self._push(e, 2, self.neg3[self.mul3[ev, a]])
                self._push(e, 3, self.mul3[ev, self.powq1[a]])
                self._push(e, 4, self.negq[self.mulq[v, na]])
                self._push(e, 5, self.mulq[self.two_q, self.mulq[self.mulq[v, v], na]])
        elif m == 2:
            if s == 1:
                self._push(e, 3, self.neg3[self.add3[self.mul3[v, self.frob[a]],
                                                     self.mul3[self.frob[v], a]]])
                self._push(e, 4, self.phi0q[self.mul3[self.powq1[v], self.frob2[a]]])
                self._push(e, 5, self.phi0q[self.mul3[v, self.powq2q[a]]])
        elif m == 3:
            if s == 1:
                self._push(e, 4, self.negq[self.phi0q[self.mul3[v, self.frob[a]]]])
            elif s == 2:
                self._push(e, 5, self.negq[self.phi0q[self.mul3[v, self.frob[a]]]])
        elif m == 4:
            if s == 0:
                self._push(e, 5, self.negq[self.mulq[v, a]])

    cdef void _mul6(self, int* a, int* b, int* out) noexcept:
        cdef int e[6]
        e[0] = a[1]; e[1] = a[0]; e[2] = a[2]
        e[3] = a[3]; e[4] = a[4]; e[5] = a[5]
        self._push(e, 0, b[1])
        self._push(e, 1, b[0])
        self._push(e, 2, b[2])
        self._push(e, 3, b[3])
        self._push(e, 4, b[4])
        self._push(e, 5, b[5])
        out[0] = e[1]; out[1] = e[0]; out[2] = e[2]
        out[3] = e[3]; out[4] = e[4]; out[5] = e[5]

    cdef void _inv6(self, int* a, int* out) noexcept:
        cdef int e[6]
        e[0] = 0; e[1] = 0; e[2] = 0; e[3] = 0; e[4] = 0; e[5] = 0
        self._push(e, 5, self.negq[a[5]])
        self._push(e, 4, self.negq[a[4]])
        self._push(e, 3, self.neg3[a[3]])
        self._push(e, 2, self.neg3[a[2]])
        self._push(e, 1, self.neg3[a[0]])
        self._push(e, 0, self.negq[a[1]])
        out[0] = e[1]; out[1] = e[0]; out[2] = e[2]
        out[3] = e[3]; out[4] = e[4]; out[5] = e[5]

    # -- scalar API ---------------------------------------------------------

    def mul(self, a, b):
        cdef int ca[6]
        cdef int cb[6]
        cdef int co[6]
        cdef int i
        for i in range(6):
            ca[i] = a[i]
            cb[i] = b[i]
        self._mul6(ca, cb, co)
        return (co[0], co[1], co[2], co[3], co[4], co[5])

    def inv(self, a):
        cdef int ca[6]
        cdef int co[6]
        cdef int i
        for i in range(6):
            ca[i] = a[i]
        self._inv6(ca, co)
        return (co[0], co[1], co[2], co[3], co[4], co[5])

    def conj(self, u, x):
        cdef int cu[6]
        cdef int cx[6]
        cdef int ci[6]
        cdef int t[6]
        cdef int co[6]
        cdef int i
        for i in range(6):
            cu[i] = u[i]
            cx[i] = x[i]
        self._inv6(cu, ci)
        self._mul6(cu, cx, t)
        self._mul6(t, ci, co)
        return (co[0], co[1], co[2], co[3], co[4], co[5])

    # -- ranks ---------------------------------------------------------------

    cdef long long _rank6(self, int* a) noexcept:
        cdef long long r = a[0]
        r = r * self.q + a[1]
        r = r * self.q3 + a[2]
        r = r * self.q3 + a[3]
        r = r * self.q + a[4]
        r = r * self.q + a[5]
        return r

    cdef void _unrank6(self, long long r, int* a) noexcept:
        a[5] = <int>(r % self.q); r //= self.q
        a[4] = <int>(r % self.q); r //= self.q
        a[3] = <int>(r % self.q3); r //= self.q3
        a[2] = <int>(r % self.q3); r //= self.q3
        a[1] = <int>(r % self.q)
        a[0] = <int>(r // self.q)

    def rank(self, a):
        cdef int ca[6]
        cdef int i
        for i in range(6):
            ca[i] = a[i]
        return self._rank6(ca)

    def unrank(self, r):
        cdef int ca[6]
        self._unrank6(r, ca)
        return (ca[0], ca[1], ca[2], ca[3], ca[4], ca[5])

    # -- bulk API ---------------------------------------------------------------

    def mul_many(self, a_arr, b_arr):
        cdef int[:, ::1] A = np.ascontiguousarray(a_arr, dtype=np.intc)
        cdef int[:, ::1] B = np.ascontiguousarray(b_arr, dtype=np.intc)
        out = np.empty((A.shape[0], 6), dtype=np.intc)
        cdef int[:, ::1] O = out
        cdef Py_ssize_t i
        for i in range(A.shape[0]):
            self._mul6(&A[i, 0], &B[i, 0], &O[i, 0])
        return out

    def inv_many(self, a_arr):
        cdef int[:, ::1] A = np.ascontiguousarray(a_arr, dtype=np.intc)
        out = np.empty((A.shape[0], 6), dtype=np.intc)
        cdef int[:, ::1] O = out
        cdef Py_ssize_t i
        for i in range(A.shape[0]):
            self._inv6(&A[i, 0], &O[i, 0])
        return out

    def conj_many(self, u_arr, x_arr):
        cdef int[:, ::1] U = np.ascontiguousarray(u_arr, dtype=np.intc)
        cdef int[:, ::1] X = np.ascontiguousarray(x_arr, dtype=np.intc)
        out = np.empty((X.shape[0], 6), dtype=np.intc)
        cdef int[:, ::1] O = out
        cdef int ui[6]
        cdef int t[6]
        cdef Py_ssize_t i
        for i in range(X.shape[0]):
            self._inv6(&U[i, 0], ui)
            self._mul6(&U[i, 0], &X[i, 0], t)
            self._mul6(t, ui, &O[i, 0])
        return out

    def orbit_partition(self, gens):
        cdef int[:, ::1] G = np.ascontiguousarray(gens, dtype=np.intc)
        cdef int ngens = G.shape[0]
        cdef long long size = (<long long>self.q3) * self.q3 * self.q3 * self.q * self.q * self.q
        ginv_arr = np.empty((ngens, 6), dtype=np.intc)
        cdef int[:, ::1] GI = ginv_arr
        cdef int gi
        for gi in range(ngens):
            self._inv6(&G[gi, 0], &GI[gi, 0])
        labels_arr = np.full(size, -1, dtype=np.int32)
        cdef int[::1] labels = labels_arr
        # orbit size is at most q^8
        cap = self.q3 * self.q3 * self.q * self.q
        stack_arr = np.empty(cap, dtype=np.int64)
        cdef long long[::1] stack = stack_arr
        cdef long long seed, ry
        cdef Py_ssize_t sp
        cdef int x[6]
        cdef int t[6]
        cdef int y[6]
        for seed in range(size):
            if labels[seed] >= 0:
                continue
            labels[seed] = <int>seed
            stack[0] = seed
            sp = 1
            while sp > 0:
                sp -= 1
                self._unrank6(stack[sp], x)
                for gi in range(ngens):
                    self._mul6(&G[gi, 0], x, t)
                    self._mul6(t, &GI[gi, 0], y)
                    ry = self._rank6(y)
                    if labels[ry] < 0:
                        labels[ry] = <int>seed
                        stack[sp] = ry
                        sp += 1
        return labels_arr
