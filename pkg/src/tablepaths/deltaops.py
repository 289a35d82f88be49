"""Integer polynomials in the forward difference operator.

``DeltaPoly`` holds ascending integer coefficients of a polynomial in the
operator D defined by (D a)(n) = a(n+1) - a(n).  Applied to an integer
sequence, such a polynomial yields another integer sequence; D + 1 acts as
the index shift.

Three operator families drive everything else in this package.  All share
the recursion

    X(n+2) = D * X(n+1) - X(n)

and differ only in their seeds:

    odd family    2,  D        (attached to tables with an odd row count)
    even family   1,  D - 1    (attached to tables with an even row count)
    prime family  1,  D        (the auxiliary family; index -1 is 0)

``multiplier`` generates members by the recursion, ``closed_form`` by an
explicit binomial sum, and the verify_* functions check the identity suite
that relates the families to each other and to classical polynomial
families (Chebyshev, Fibonacci, Lucas).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from .errors import DomainError


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(v) for v in c)


@dataclass(frozen=True)
class DeltaPoly:
    """Canonical integer polynomial in D, ascending coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # -- construction helpers -------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "DeltaPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, power: int) -> int:
        if power < 0:
            raise DomainError(f"power must be >= 0, got {power}")
        if power >= len(self.coeffs):
            return 0
        return self.coeffs[power]

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> "DeltaPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return DeltaPoly(tuple(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "DeltaPoly":
        return DeltaPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "DeltaPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "DeltaPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "DeltaPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return DeltaPoly(tuple(out))

    __rmul__ = __mul__

    def compose(self, inner: "DeltaPoly") -> "DeltaPoly":
        """Substitute ``inner`` for D in self (Horner evaluation)."""
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def divmod_monic(self, divisor: "DeltaPoly") -> tuple["DeltaPoly", "DeltaPoly"]:
        """Exact quotient and remainder by a monic divisor over the integers."""
        if divisor.is_zero:
            raise DomainError("division by the zero polynomial")
        if not divisor.is_monic:
            raise DomainError(f"divisor must be monic, got {divisor}")
        rem = list(self.coeffs)
        dq = divisor.degree
        if dq == 0:
            return self, ZERO
        quot = [0] * max(0, len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                quot[i - dq] = c
                for j, dv in enumerate(divisor.coeffs):
                    rem[i - dq + j] -= c * dv
        return DeltaPoly(tuple(quot)), DeltaPoly(tuple(rem))

    def mod_reduce(self, divisor: "DeltaPoly") -> "DeltaPoly":
        """Remainder after division by a monic divisor."""
        return self.divmod_monic(divisor)[1]

    def apply(self, seq, n: int) -> int:
        """Evaluate (self applied to seq) at index ``n``.

        ``seq`` is read with 1-based indexing: its first element is the
        sequence value at index 1.  Requires values up to n + degree, i.e.
        len(seq) >= n + degree.
        """
        if n < 1:
            raise DomainError(f"index must be >= 1, got {n}")
        if self.is_zero:
            return 0
        d = self.degree
        if n + d > len(seq):
            raise DomainError(
                f"need sequence values up to index {n + d}, have {len(seq)}")
        window = [int(v) for v in seq[n - 1: n + d]]
        total = self.coeffs[0] * window[0]
        for i in range(1, d + 1):
            window = [window[j + 1] - window[j] for j in range(len(window) - 1)]
            total += self.coeffs[i] * window[0]
        return total

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self.coeffs, "Δ")

    @classmethod
    def parse(cls, text: str) -> "DeltaPoly":
        return cls(_parse_poly(text))


def _coerce(value):
    if isinstance(value, DeltaPoly):
        return value
    if isinstance(value, int):
        return DeltaPoly((value,))
    return NotImplemented


ZERO = DeltaPoly(())
ONE = DeltaPoly((1,))
DELTA = DeltaPoly((0, 1))


# -- pretty printing and parsing -------------------------------------------


def format_poly(coeffs, var: str = "Δ") -> str:
    """Render ascending coefficients as a descending-power string."""
    coeffs = _trim(coeffs)
    if not coeffs:
        return "0"
    parts = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            head = "" if mag == 1 else str(mag)
            body = f"{head}{var}" if power == 1 else f"{head}{var}^{power}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM_RE = re.compile(r"^(\d+)?\*?(?:(?:Δ|D)(?:\^(\d+))?)?$")


def _parse_poly(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not s:
        raise DomainError("empty polynomial string")
    if s == "0":
        return ()
    # Split into signed terms.
    chunks: list[tuple[int, str]] = []
    sign = 1
    buf = []
    for ch in s:
        if ch in "+-":
            if buf and "".join(buf).strip():
                chunks.append((sign, "".join(buf).strip()))
                sign = 1
                buf = []
            sign *= -1 if ch == "-" else 1
        else:
            buf.append(ch)
    tail = "".join(buf).strip()
    if not tail:
        raise DomainError(f"dangling sign in {text!r}")
    chunks.append((sign, tail))
    out: dict[int, int] = {}
    for sign, term in chunks:
        term = term.replace(" ", "")
        match = _TERM_RE.match(term)
        if not match or (match.group(1) is None and "Δ" not in term and "D" not in term):
            raise DomainError(f"cannot parse term {term!r} in {text!r}")
        mag = int(match.group(1)) if match.group(1) is not None else 1
        if "Δ" in term or "D" in term:
            power = int(match.group(2)) if match.group(2) is not None else 1
        else:
            power = 0
        out[power] = out.get(power, 0) + sign * mag
    size = max(out) + 1 if out else 0
    return _trim(out.get(i, 0) for i in range(size))


# -- the operator families ---------------------------------------------------


class Family(Enum):
    """Parity tag selecting one of the three operator families."""

    ODD = "odd"
    EVEN = "even"
    PRIME = "prime"


def parity_family(m: int) -> Family:
    """Family attached to a table with m rows."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return Family.ODD if m % 2 else Family.EVEN


def base_constant(family: Family) -> int:
    """The index-0 member (a constant polynomial)."""
    return 2 if family is Family.ODD else 1


# Members are built iteratively and memoised; entry i of the list holds the
# member of index i + lowest_index(family).
_SEEDS: dict[Family, list[DeltaPoly]] = {
    Family.ODD: [DeltaPoly((2,)), DELTA],
    Family.EVEN: [ONE, DeltaPoly((-1, 1))],
    Family.PRIME: [ZERO, ONE],   # indices -1 and 0
}
_members: dict[Family, list[DeltaPoly]] = {f: list(s) for f, s in _SEEDS.items()}


def _lowest_index(family: Family) -> int:
    return -1 if family is Family.PRIME else 0


def multiplier(family: Family, n: int) -> DeltaPoly:
    """Member of index n, generated by X(n+2) = D*X(n+1) - X(n)."""
    lo = _lowest_index(family)
    if n < lo:
        raise DomainError(f"{family.value} family has no index {n}")
    seq = _members[family]
    while len(seq) <= n - lo:
        seq.append(DELTA * seq[-1] - seq[-2])
    return seq[n - lo]


def closed_form(family: Family, n: int) -> DeltaPoly:
    """Member of index n from its explicit binomial coefficient sum."""
    if n < 0:
        raise DomainError(f"closed form needs n >= 0, got {n}")
    if n == 0:
        return DeltaPoly.constant(base_constant(family))
    size = n + 1
    out = [0] * size
    if family is Family.ODD:
        for i in range(n // 2 + 1):
            c = _binom(n + 1 - i, i) - _binom(n - 1 - i, i - 2)
            out[n - 2 * i] = c if i % 2 == 0 else -c
    elif family is Family.EVEN:
        for i in range(n + 1):
            c = _binom(n - (i + 1) // 2, i // 2)
            out[n - i] = c if ((i + 1) // 2) % 2 == 0 else -c
    else:
        for i in range(n // 2 + 1):
            c = _binom(n - i, i)
            out[n - 2 * i] = c if i % 2 == 0 else -c
    return DeltaPoly(tuple(out))


# -- prime functions ---------------------------------------------------------


def _is_small_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _factorize_small(n: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def _prime_image(family: Family, p: int, current: DeltaPoly,
                 base: DeltaPoly) -> DeltaPoly:
    left = multiplier(Family.PRIME, p - 1).compose(base) * current
    right = multiplier(Family.PRIME, p - 2).compose(base) * base_constant(family)
    return left - right


def prime_function(family: Family, p: int, n: int) -> DeltaPoly:
    """Image of the index-n member under the index-multiplying prime map.

    The result equals the index p*n member of the same family; iterating
    prime maps over the factorization of any index rebuilds that member
    from the index-1 seed.
    """
    if not _is_small_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if n < 1:
        raise DomainError(f"prime map needs n >= 1, got {n}")
    return _prime_image(family, p, multiplier(family, n),
                        multiplier(Family.ODD, n))


@dataclass(frozen=True)
class PrimeFunctionDiagnostic:
    """Both composition-base variants of one prime-map application.

    The odd-family composition base is the one that satisfies the defining
    identity; the even-family variant is retained for side-by-side
    comparison.
    """

    family: Family
    p: int
    n: int
    expected: DeltaPoly
    with_odd_base: DeltaPoly
    with_even_base: DeltaPoly

    @property
    def odd_base_matches(self) -> bool:
        return self.with_odd_base == self.expected

    @property
    def even_base_matches(self) -> bool:
        return self.with_even_base == self.expected


def prime_function_diagnostic(family: Family, p: int, n: int) -> PrimeFunctionDiagnostic:
    """Compute the prime map with both candidate composition bases."""
    if not _is_small_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    if n < 1:
        raise DomainError(f"prime map needs n >= 1, got {n}")
    current = multiplier(family, n)
    return PrimeFunctionDiagnostic(
        family=family,
        p=p,
        n=n,
        expected=multiplier(family, p * n),
        with_odd_base=_prime_image(family, p, current, multiplier(Family.ODD, n)),
        with_even_base=_prime_image(family, p, current, multiplier(Family.EVEN, n)),
    )


# -- identity verifiers ------------------------------------------------------
#
# Each verifier returns None on success or a short description of the first
# failure.  They are used both by the test suite and by the CLI's verify
# command.


def verify_closed_forms(n_max: int = 40) -> str | None:
    for family in Family:
        for n in range(n_max + 1):
            rec = multiplier(family, n)
            exp = closed_form(family, n)
            if rec != exp:
                return (f"{family.value} n={n}: recursion {rec} "
                        f"!= closed form {exp}")
    return None


def verify_addition_theorem(limit: int = 12) -> str | None:
    """X(a+b) = P(a)*X(b) - P(a-1)*X(b-1) with P the prime family."""
    pf = Family.PRIME
    for family in Family:
        for a in range(1, limit + 1):
            for b in range(1, limit + 1):
                lhs = multiplier(family, a + b)
                rhs = (multiplier(pf, a) * multiplier(family, b)
                       - multiplier(pf, a - 1) * multiplier(family, b - 1))
                if lhs != rhs:
                    return f"{family.value} a={a} b={b}: {lhs} != {rhs}"
    return None


def verify_action_theorem(limit: int = 12) -> str | None:
    """Odd(b) * X(a) = X(a+b) + X(a-b) for a >= b >= 0."""
    for family in Family:
        for a in range(limit + 1):
            for b in range(a + 1):
                lhs = multiplier(Family.ODD, b) * multiplier(family, a)
                rhs = multiplier(family, a + b) + multiplier(family, a - b)
                if lhs != rhs:
                    return f"{family.value} a={a} b={b}: {lhs} != {rhs}"
    return None


def verify_product_theorem(limit: int = 8) -> str | None:
    """X(a*b) from composing prime-family members with Odd(b)."""
    pf = Family.PRIME
    for family in Family:
        for a in range(1, limit + 1):
            for b in range(1, limit + 1):
                base = multiplier(Family.ODD, b)
                lhs = multiplier(family, a * b)
                rhs = (multiplier(pf, a - 1).compose(base) * multiplier(family, b)
                       - multiplier(pf, a - 2).compose(base) * base_constant(family))
                if lhs != rhs:
                    return f"{family.value} a={a} b={b}: {lhs} != {rhs}"
    return None


def verify_compose_factorization(pair_limit: int = 10, n_max: int = 64) -> str | None:
    """Odd(ab) = Odd(a) o Odd(b), and the multi-prime composition chain."""
    for a in range(1, pair_limit + 1):
        for b in range(1, pair_limit + 1):
            composed = multiplier(Family.ODD, a).compose(multiplier(Family.ODD, b))
            direct = multiplier(Family.ODD, a * b)
            if composed != direct:
                return f"a={a} b={b}: {composed} != {direct}"
    for n in range(1, n_max + 1):
        poly = multiplier(Family.ODD, 1)
        for p, e in _factorize_small(n):
            for _ in range(e):
                poly = multiplier(Family.ODD, p).compose(poly)
        if poly != multiplier(Family.ODD, n):
            return f"n={n}: prime composition chain disagrees"
    return None


def verify_uniform_factorization(n_max: int = 40) -> str | None:
    """Iterated prime maps rebuild every family member from index 1."""
    for family in Family:
        for n in range(1, n_max + 1):
            poly = multiplier(family, 1)
            j = 1
            for p, e in _factorize_small(n):
                for _ in range(e):
                    poly = _prime_image(family, p, poly, multiplier(Family.ODD, j))
                    j *= p
            if poly != multiplier(family, n):
                return f"{family.value} n={n}: prime map chain disagrees"
    return None


def verify_bridge_lemma(n_max: int = 40) -> str | None:
    """Even and odd members written as prime-family differences."""
    for n in range(1, n_max + 1):
        even = multiplier(Family.PRIME, n) - multiplier(Family.PRIME, n - 1)
        if even != multiplier(Family.EVEN, n):
            return f"even bridge fails at n={n}"
        odd = multiplier(Family.PRIME, n) - multiplier(Family.PRIME, n - 2)
        if odd != multiplier(Family.ODD, n):
            return f"odd bridge fails at n={n}"
        via_even = multiplier(Family.EVEN, n) + multiplier(Family.EVEN, n - 1)
        if via_even != multiplier(Family.ODD, n):
            return f"odd-from-even bridge fails at n={n}"
    return None


def verify_partial_sums(n_max: int = 40) -> str | None:
    """1 + X(1) + ... + X(n) collapses to two prime-family members."""
    for family in (Family.ODD, Family.EVEN):
        running = ONE
        for n in range(1, n_max + 1):
            running = running + multiplier(family, n)
            closed = (multiplier(Family.PRIME, n)
                      + (base_constant(family) - 1) * multiplier(Family.PRIME, n - 1))
            if running != closed:
                return f"{family.value} n={n}: {running} != {closed}"
    return None


def verify_congruence(k_max: int = 12) -> str | None:
    """P(a-1)*X(k-1) = X(k-a) modulo X(k), for 1 <= a <= k."""
    for family in (Family.ODD, Family.EVEN):
        for k in range(1, k_max + 1):
            modulus = multiplier(family, k)
            for a in range(1, k + 1):
                prod = multiplier(Family.PRIME, a - 1) * multiplier(family, k - 1)
                rem = prod.mod_reduce(modulus)
                if rem != multiplier(family, k - a):
                    return f"{family.value} k={k} a={a}: {rem}"
    return None


# -- classical polynomial families -------------------------------------------


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))


def _poly_shift_scale(a, c):
    """c * x * a(x), as a coefficient tuple."""
    return _trim([0] + [c * v for v in a])


def chebyshev_t(n: int) -> tuple[int, ...]:
    """Chebyshev polynomial of the first kind, ascending coefficients."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    prev, cur = (1,), (0, 1)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _poly_add(_poly_shift_scale(cur, 2),
                                   tuple(-v for v in prev))
    return cur


def fibonacci_poly(n: int) -> tuple[int, ...]:
    """Fibonacci polynomial F_n with F_1 = 1, F_2 = x."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    prev, cur = (1,), (0, 1)
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, _poly_add(_poly_shift_scale(cur, 1), prev)
    return cur


def lucas_poly(n: int) -> tuple[int, ...]:
    """Lucas polynomial L_n with L_0 = 2, L_1 = x."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    prev, cur = (2,), (0, 1)
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _poly_add(_poly_shift_scale(cur, 1), prev)
    return cur


def verify_classical(n_max: int = 20) -> str | None:
    """Match the families against Chebyshev, Fibonacci and Lucas polynomials.

    Checked coefficientwise; a mismatch reports the first differing
    coefficient.  The comparisons are:

      * half of Odd(n) evaluated at 2x equals T_n(x);
      * |coefficients of Prime(n)| equal those of F_{n+1}(x);
      * |coefficients of Odd(n)| equal those of L_n(x);
      * |coefficients of Even(n)| equal those of F_{n+1}(x) + F_n(x),
        the same Fibonacci recursion run from seeds 1 and x + 1.
    """
    for n in range(n_max + 1):
        odd = multiplier(Family.ODD, n).coeffs
        halved = [Fraction(c * 2**i, 2) for i, c in enumerate(odd)]
        cheb = [Fraction(c) for c in chebyshev_t(n)]
        msg = _first_diff("chebyshev", n, halved, cheb)
        if msg:
            return msg
        prime_abs = [abs(c) for c in multiplier(Family.PRIME, n).coeffs]
        msg = _first_diff("fibonacci", n, prime_abs, list(fibonacci_poly(n + 1)))
        if msg:
            return msg
        odd_abs = [abs(c) for c in odd]
        msg = _first_diff("lucas", n, odd_abs, list(lucas_poly(n)))
        if msg:
            return msg
        even_abs = [abs(c) for c in multiplier(Family.EVEN, n).coeffs]
        fib_pair = list(_poly_add(fibonacci_poly(n + 1),
                                  fibonacci_poly(n) if n >= 1 else ()))
        msg = _first_diff("fibonacci-pair", n, even_abs, fib_pair)
        if msg:
            return msg
    return None


def _first_diff(label: str, n: int, got, want) -> str | None:
    size = max(len(got), len(want))
    for i in range(size):
        g = got[i] if i < len(got) else 0
        w = want[i] if i < len(want) else 0
        if g != w:
            return (f"{label} n={n}: coefficient of x^{i} differs, "
                    f"got {g}, want {w}")
    return None
