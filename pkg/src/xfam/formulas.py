"""Exact closed-form bounds and values.

Integers are Python ints; the non-integral bounds are ``fractions.Fraction``.
No function in this module touches floating point.

Matching-size convention: ``e_k(n, s)`` is the largest k-uniform family with
no ``s`` pairwise disjoint members.  The conjectured extremal value
``emc_candidate(n, k, s)`` is built from families of matching number ``s``
and therefore predicts ``e_k(n, s + 1)``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import ParameterError


def _int(name: str, v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParameterError(f"{name} must be an integer, got {v!r}")
    return v


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    n, k = _int("n", n), _int("k", k)
    if n < 0:
        raise ParameterError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _tail(n: int, start: int) -> int:
    return sum(binomial(n, t) for t in range(max(start, 0), n + 1))


def _check_sml(s, m, l) -> None:
    _int("s", s), _int("m", m), _int("l", l)
    if s < 2:
        raise ParameterError(f"s must be >= 2, got {s}")
    if m < 0:
        raise ParameterError(f"m must be >= 0, got {m}")
    if not 1 <= l <= s:
        raise ParameterError(f"l must lie in [1, s={s}], got {l}")


def dependence_size(s: int, m: int, l: int) -> int:
    """The ground size ``s*m + s - l`` tied to the parameters (m, l)."""
    _check_sml(s, m, l)
    return s * m + s - l


def split_size(n: int, s: int) -> tuple[int, int]:
    """The unique (m, l) with ``n = s*(m + 1) - l``, ``m >= 0`` and ``1 <= l <= s``."""
    n, s = _int("n", n), _int("s", s)
    if s < 1 or n < 0:
        raise ParameterError(f"need n >= 0 and s >= 1, got n={n}, s={s}")
    m = n // s
    return m, s * (m + 1) - n


def theorem2_rhs(s: int, m: int, l: int) -> int:
    """Largest total size of ``s`` cross-dependent families on [s*m + s - l]:
    ``(l - 1) C(n, m) + s * sum_{t > m} C(n, t)``."""
    n = dependence_size(s, m, l)
    return (l - 1) * binomial(n, m) + s * _tail(n, m + 1)


def theorem7_rhs(n: int, s: int, m: int, l: int) -> int:
    """Largest total size of ``s`` q-dependent families on [n], ``q = s*m + s - l``."""
    q = dependence_size(s, m, l)
    _int("n", n)
    if n < q:
        raise ParameterError(f"need n >= q = {q}, got n={n}")
    return (l - 1) * binomial(n, m) + s * _tail(n, m + 1)


def q_dependent_bound(n: int, s: int, q: int) -> int:
    """:func:`theorem7_rhs` with (m, l) recovered from ``q``."""
    _int("q", q)
    if not 1 <= q <= n:
        raise ParameterError(f"q must lie in [1, n={n}], got {q}")
    m, l = split_size(q, s)
    return theorem7_rhs(n, s, m, l)


def cross_dependent_bound(n: int, s: int) -> int:
    """:func:`theorem2_rhs` with (m, l) recovered from ``n``."""
    m, l = split_size(n, s)
    return theorem2_rhs(s, m, l)


def kleitman_rhs(n: int, s: int) -> Fraction:
    """Upper bound on a family in 2^[n] with no ``s`` pairwise disjoint members.

    ``(l - 1)/s * C(n, m) + sum_{t > m} C(n, t)`` for ``n = s(m + 1) - l``;
    the chosen (m, l) is available from :func:`split_size`.
    """
    if _int("s", s) < 2:
        raise ParameterError(f"s must be >= 2, got {s}")
    m, l = split_size(n, s)
    return Fraction(l - 1, s) * binomial(n, m) + _tail(n, m + 1)


def ekr_value(n: int, k: int) -> int:
    """Largest intersecting k-uniform family on [n]: C(n - 1, k - 1) for n >= 2k > 0."""
    _int("n", n), _int("k", k)
    if k < 1 or n < 2 * k:
        raise ParameterError(f"need n >= 2k > 0, got n={n}, k={k}")
    return binomial(n - 1, k - 1)


def frankl_family_size(n: int, k: int, s: int, i: int) -> int:
    """Size of ``{A in C([n], k) : |A & [(s+1)i - 1]| >= i}`` by counting."""
    r = (s + 1) * i - 1
    return sum(binomial(r, j) * binomial(n - r, k - j) for j in range(i, k + 1))


def emc_candidate(n: int, k: int, s: int) -> int:
    """``max(|A_1|, |A_k|)`` for the families with matching number ``s``.

    The two sizes are ``C(n, k) - C(n - s, k)`` and ``C((s + 1)k - 1, k)``.
    """
    _int("n", n), _int("k", k), _int("s", s)
    if k < 1 or s < 1 or n < (s + 1) * k:
        raise ParameterError(f"need n >= (s + 1)k with k, s >= 1, got n={n}, k={k}, s={s}")
    first = binomial(n, k) - binomial(n - s, k)
    last = binomial((s + 1) * k - 1, k)
    return max(first, last)


def frankl_range_ok(n: int, k: int, s: int) -> bool:
    """``n >= (2s + 1)k - s``."""
    return n >= (2 * s + 1) * k - s


def thm4_range_ok(n: int, k: int, s: int) -> bool:
    """``k >= 3`` and ``n >= (s + max(25, 2s + 2)) k`` (the explicit stability range)."""
    return k >= 3 and n >= (s + max(25, 2 * s + 2)) * k


def hm_value(n: int, k: int, s: int) -> int:
    """``C(n, k) - C(n - s, k) + 1 - C(n - s - k, k - 1)``."""
    _int("n", n), _int("k", k), _int("s", s)
    if s < 1 or k < 1 or n < s + k:
        raise ParameterError(f"need s, k >= 1 and n >= s + k, got n={n}, k={k}, s={s}")
    return binomial(n, k) - binomial(n - s, k) + 1 - binomial(n - s - k, k - 1)


def almost_matching_value(s: int, m: int) -> int:
    """``sum_{t=m}^{sm-2} C(sm - 2, t)``, the extremal size on [sm - 2]."""
    _int("s", s), _int("m", m)
    if s < 2 or m < 1 or s * m - 2 < 1:
        raise ParameterError(f"need s >= 2, m >= 1 and sm - 2 >= 1, got s={s}, m={m}")
    n = s * m - 2
    return sum(binomial(n, t) for t in range(m, n + 1))


def ar_upper_simple(n: int, k: int, s: int, e_value: int) -> Fraction:
    """``e + (s - 1) C(n, k) / C(n - (s - 1)k, k) + 1`` for ``n > ks``.

    ``e_value`` must be ``e_k(n, s - 1)``; it is supplied by the caller.
    """
    _int("n", n), _int("k", k), _int("s", s), _int("e_value", e_value)
    if k < 1 or s < 2 or n <= k * s:
        raise ParameterError(f"need k >= 1, s >= 2, n > ks, got n={n}, k={k}, s={s}")
    if e_value < 0:
        raise ParameterError("e_value must be non-negative")
    return e_value + Fraction((s - 1) * binomial(n, k), binomial(n - (s - 1) * k, k)) + 1


def ar_refined_range_ok(n: int, k: int, s: int) -> bool:
    """Exact test for positivity of ``(n - sk)^2 - k((2s - 1)k - n)`` with ``n > sk``."""
    return n > s * k and (n - s * k) ** 2 - k * ((2 * s - 1) * k - n) > 0


def ar_upper_refined(n: int, k: int, s: int, e_value: int) -> Fraction:
    """``e + (s - 1) n (n - sk) / ((n - sk)^2 - k((2s - 1)k - n)) + 1``.

    The anti-Ramsey number is strictly below this value.
    """
    _int("n", n), _int("k", k), _int("s", s), _int("e_value", e_value)
    if k < 1 or s < 2:
        raise ParameterError(f"need k >= 1 and s >= 2, got k={k}, s={s}")
    if not ar_refined_range_ok(n, k, s):
        raise ParameterError(f"(n - sk)^2 - k((2s - 1)k - n) must be positive with n > sk; n={n}, k={k}, s={s}")
    if e_value < 0:
        raise ParameterError("e_value must be non-negative")
    den = (n - s * k) ** 2 - k * ((2 * s - 1) * k - n)
    return e_value + Fraction((s - 1) * n * (n - s * k), den) + 1


def lemma61_rhs(N: int, k: int, s: int, u) -> int:
    """``s C(N, k - 1)``, valid for ``u >= s + 1`` and ``N >= (u + s)(k - 1)``.

    ``u`` may be any rational (int or Fraction); the range is compared exactly.
    """
    _int("N", N), _int("k", k), _int("s", s)
    u = Fraction(u)
    if k < 1 or s < 1:
        raise ParameterError(f"need k, s >= 1, got k={k}, s={s}")
    if u < s + 1:
        raise ParameterError(f"u must be >= s + 1 = {s + 1}, got {u}")
    if N < (u + s) * (k - 1):
        raise ParameterError(f"N must be >= (u + s)(k - 1) = {(u + s) * (k - 1)}, got {N}")
    return s * binomial(N, k - 1)
