# cython: language_level=3
"""Compiled twins of the kernels in ``_pykernels``.

Same signatures and conventions; sums use Neumaier compensation so results
agree with the ``math.fsum`` fallback to a few ulps.
"""
from libc.math cimport pow, INFINITY, fabs


cdef inline void _neumaier(double term, double* s, double* comp) noexcept nogil:
    cdef double t = s[0] + term
    if fabs(s[0]) >= fabs(term):
        comp[0] += (s[0] - t) + term
    else:
        comp[0] += (term - t) + s[0]
    s[0] = t


def step_product_integral(const double[::1] a_from, const double[::1] a_level,
                          const double[::1] b_from, const double[::1] b_level):
    cdef Py_ssize_t na = a_from.shape[0], nb = b_from.shape[0]
    cdef Py_ssize_t i = 0, j = 0
    cdef double x = 0.0, nxt, next_a, next_b
    cdef double s = 0.0, comp = 0.0
    with nogil:
        while x < 1.0:
            next_a = a_from[i + 1] if i + 1 < na else 1.0
            next_b = b_from[j + 1] if j + 1 < nb else 1.0
            nxt = next_a if next_a < next_b else next_b
            if nxt > x:
                _neumaier(a_level[i] * b_level[j] * (nxt - x), &s, &comp)
            x = nxt
            if next_a == nxt and i + 1 < na:
                i += 1
            if next_b == nxt and j + 1 < nb:
                j += 1
    return s + comp


def partial_moment(const double[::1] values, const double[::1] probs, double t, double p):
    cdef Py_ssize_t k, n = values.shape[0]
    cdef double x, term, s = 0.0, comp = 0.0
    with nogil:
        for k in range(n):
            x = values[k] - t
            if x > 0.0:
                if p == 1.0:
                    term = probs[k] * x
                elif p == 0.0:
                    term = probs[k]
                elif p == 2.0:
                    term = probs[k] * x * x
                else:
                    term = probs[k] * pow(x, p)
                _neumaier(term, &s, &comp)
    return s + comp


def riemann_midpoint(const double[::1] s_from, const double[::1] s_level,
                     const double[::1] q_from, const double[::1] q_value, Py_ssize_t n):
    cdef Py_ssize_t k, i = 0, j = 0
    cdef Py_ssize_t ns = s_from.shape[0], nq = q_from.shape[0]
    cdef double u, s = 0.0, comp = 0.0
    with nogil:
        for k in range(n):
            u = (k + 0.5) / n
            while i + 1 < ns and s_from[i + 1] <= u:
                i += 1
            while j + 1 < nq and q_from[j + 1] <= u:
                j += 1
            _neumaier(s_level[i] * q_value[j], &s, &comp)
    return (s + comp) / n


def grid_phi_min(const double[::1] values, const double[::1] probs, double c, double p,
                 double lo, double hi, Py_ssize_t n):
    cdef Py_ssize_t k, a, m = values.shape[0]
    cdef double t, x, mom, phi, best = INFINITY
    cdef double step = (hi - lo) / (n - 1) if n > 1 else 0.0
    cdef double inv_p = 1.0 / p
    with nogil:
        for k in range(n):
            t = lo + step * k
            mom = 0.0
            for a in range(m):
                x = values[a] - t
                if x > 0.0:
                    if p == 1.0:
                        mom += probs[a] * x
                    elif p == 2.0:
                        mom += probs[a] * x * x
                    elif p == 3.0:
                        mom += probs[a] * x * x * x
                    else:
                        mom += probs[a] * pow(x, p)
            if p == 1.0:
                phi = t + c * mom
            else:
                phi = t + c * pow(mom, inv_p)
            if phi < best:
                best = phi
    return best


cdef bint _near(const double[::1] targets, double v, double tol) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = targets.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if targets[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    if lo < targets.shape[0] and fabs(targets[lo] - v) <= tol:
        return True
    if lo > 0 and fabs(targets[lo - 1] - v) <= tol:
        return True
    return False


cdef bint _dfs(const double[::1] targets, const double[::1] others, Py_ssize_t start,
               double acc, double tol) noexcept nogil:
    cdef Py_ssize_t k
    cdef double s
    for k in range(start, others.shape[0]):
        s = acc + others[k]
        if _near(targets, s, tol):
            return True
        if _dfs(targets, others, k + 1, s, tol):
            return True
    return False


def subset_sum_collision(const double[::1] targets, const double[::1] others, double tol):
    if targets.shape[0] == 0 or others.shape[0] == 0:
        return False
    cdef bint hit
    with nogil:
        hit = _dfs(targets, others, 0, 0.0, tol)
    return bool(hit)
