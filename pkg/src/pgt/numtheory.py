"""Integer-exact Fibonacci, Pisano, and Chebyshev-recurrence machinery.

Everything here is plain bignum arithmetic.  Chebyshev values are never
evaluated at half-integers: the doubled recurrences

    t_0 = 2,  t_1 = tr,  t_{k+1} = tr*t_k - t_{k-1}        (= 2*T_k(tr/2))
    u_{-1} = 0,  u_0 = 1,  u_{k+1} = tr*u_k - u_{k-1}      (= U_k(tr/2))

give the same values exactly for any 2x2 matrix of determinant 1 over a
commutative ring, so an optional modulus threads through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameter

# -- Fibonacci --------------------------------------------------------------


def _fib_pair(n, mod=None):
    """(f(n), f(n+1)) by fast doubling, optionally mod m."""
    if n == 0:
        return (0, 1)
    a, b = _fib_pair(n >> 1, mod)
    c = a * (2 * b - a)
    d = a * a + b * b
    if mod is not None:
        c %= mod
        d %= mod
    if n & 1:
        return (d, (c + d) % mod if mod is not None else c + d)
    return (c, d)


def fib(n):
    """f(0)=0, f(1)=1, f(n+1)=f(n)+f(n-1)."""
    if n < 0:
        raise InvalidParameter("negative Fibonacci index")
    return _fib_pair(n)[0]


def fib_mod(n, m):
    if n < 0:
        raise InvalidParameter("negative Fibonacci index")
    if m < 2:
        raise InvalidParameter("modulus must be >= 2")
    return _fib_pair(n, m)[0]


def fib_iterative(n):
    """Reference implementation for cross-checking fast doubling."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pisano_period(m):
    """Least k > 0 with f(k) = 0 and f(k+1) = 1 mod m."""
    if m < 2:
        raise InvalidParameter("modulus must be >= 2")
    a, b = 1, 1  # f(1), f(2)
    k = 1
    while not (a == 0 and b == 1):
        a, b = b, (a + b) % m
        k += 1
    return k


# -- the open-question scan --------------------------------------------------


@dataclass(frozen=True)
class RemarkResult:
    """Residues of f(p^2) and f(p^2-1) mod p^2; holds means (1, 0)."""

    p: int
    holds: bool
    fib_p2_mod: int
    fib_p2_minus1_mod: int


def remark_condition(p):
    """Test f(p^2) = 1 and f(p^2 - 1) = 0 modulo p^2."""
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    m = p * p
    r1 = fib_mod(m, m)
    r0 = fib_mod(m - 1, m)
    return RemarkResult(p, r1 == 1 and r0 == 0, r1, r0)


def remark_scan(bound):
    """Scan primes up to ``bound``; returns the witnesses found (expected none).

    The existence of a witness prime is open; the scan reports, it asserts
    nothing.
    """
    return [r for p in primes_up_to(bound) if (r := remark_condition(p)).holds]


# -- the determinant quantity D(U) -------------------------------------------


def damettere_components(t, u):
    """(c1, d1, d2) with c1 = sum f(jU), d1 = 1 + sum f(jU+1), d2 = 1 + sum f(jU-1)."""
    if t < 2 or u < 1:
        raise InvalidParameter("need T >= 2 and U >= 1")
    c1 = sum(fib(j * u) for j in range(1, t))
    d1 = 1 + sum(fib(j * u + 1) for j in range(1, t))
    d2 = 1 + sum(fib(j * u - 1) for j in range(1, t))
    return c1, d1, d2


def damettere_D(t, u):
    """D(U) = d1*d2 - c1^2."""
    c1, d1, d2 = damettere_components(t, u)
    return d1 * d2 - c1 * c1


def damettere_witness(t, m, window=10):
    """Smallest N with m < N <= m + window and D(N) > t^2, or None."""
    for n in range(m + 1, m + window + 1):
        if damettere_D(t, n) > t * t:
            return n
    return None


# -- 2x2 integer matrices and the doubled Chebyshev recurrences ---------------

Mat2 = tuple  # (a, b, c, d) row-major


def mat2_identity():
    return (1, 0, 0, 1)


def mat2_mul(x, y, mod=None):
    a = x[0] * y[0] + x[1] * y[2]
    b = x[0] * y[1] + x[1] * y[3]
    c = x[2] * y[0] + x[3] * y[2]
    d = x[2] * y[1] + x[3] * y[3]
    if mod is not None:
        return (a % mod, b % mod, c % mod, d % mod)
    return (a, b, c, d)


def mat2_pow(x, n, mod=None):
    result = mat2_identity()
    while n:
        if n & 1:
            result = mat2_mul(result, x, mod)
        n >>= 1
        if n:
            x = mat2_mul(x, x, mod)
    return result


def mat2_det(x, mod=None):
    d = x[0] * x[3] - x[1] * x[2]
    return d % mod if mod is not None else d


def mat2_trace(x, mod=None):
    t = x[0] + x[3]
    return t % mod if mod is not None else t


def _check_unimodular(m, mod):
    want = 1 % mod if mod is not None else 1
    if mat2_det(m, mod) != want:
        raise InvalidParameter(f"matrix {m} must have determinant 1")


def trace_recurrence(trace, n, mod=None):
    """t_n with t_0 = 2, t_1 = trace, t_{k+1} = trace*t_k - t_{k-1}."""
    a, b = 2, trace
    if mod is not None:
        a, b = a % mod, b % mod
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, trace * b - a
        if mod is not None:
            b %= mod
    return b


def second_kind_recurrence(trace, n, mod=None):
    """u_n with u_{-1} = 0, u_0 = 1, u_{k+1} = trace*u_k - u_{k-1}."""
    a, b = 0, 1
    if mod is not None:
        b = 1 % mod
    if n <= -1:
        return a
    for _ in range(n):
        a, b = b, trace * b - a
        if mod is not None:
            b %= mod
    return b


def cheb_trace(m, n, mod=None):
    """trace(M^n) two ways: by matrix power and by the doubled recurrence."""
    if n < 0:
        raise InvalidParameter("n must be >= 0")
    _check_unimodular(m, mod)
    by_power = mat2_trace(mat2_pow(m, n, mod), mod)
    by_recurrence = trace_recurrence(mat2_trace(m, mod), n, mod)
    if mod is not None:
        by_recurrence %= mod
    return by_power, by_recurrence


def cheb_power(m, n, mod=None):
    """M^n two ways: by matrix power and as u_{n-1}*M - u_{n-2}*I."""
    if n < 1:
        raise InvalidParameter("n must be >= 1")
    _check_unimodular(m, mod)
    by_power = mat2_pow(m, n, mod)
    tr = mat2_trace(m, mod)
    u1 = second_kind_recurrence(tr, n - 1, mod)
    u2 = second_kind_recurrence(tr, n - 2, mod)
    combo = (
        u1 * m[0] - u2,
        u1 * m[1],
        u1 * m[2],
        u1 * m[3] - u2,
    )
    if mod is not None:
        combo = tuple(v % mod for v in combo)
    return by_power, combo


# -- primes -------------------------------------------------------------------


def is_prime(n):
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n):
    """Sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]
