"""Multiplicative orders of the transfer-matrix templates over prime fields.

The question driving this module: reduced modulo a prime q, does the n x n
template matrix generate the full cyclic group of order q**n - 1 (a Singer
cycle)?  Answering it needs the factorization of q**n - 1, so the module
carries its own exact integer factorization stack: trial division to a
fixed bound, perfect-power reduction, then Brent's variant of Pollard rho
with deterministic seeding, with primality certified by Miller-Rabin (a
base set that is provably sufficient below 3.3e24, extended by a strong
Lucas test above).

Factoring is budgeted.  When the budget runs out the factorization is
returned incomplete and order checks report UNKNOWN rather than guessing.

Matrix arithmetic is exact residue arithmetic; numpy int64 is used when the
dot-product bound n * (q-1)**2 fits, with a Python-integer fallback above.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from math import gcd, isqrt, prod

import numpy as np

from .errors import DomainError, InternalInconsistencyError
from .recurrence import even_matrix, odd_matrix

_TRIAL_BOUND = 10_000
DEFAULT_FACTOR_BUDGET = 4_000_000

# Deterministic Miller-Rabin witness set; proven sufficient below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_LIMIT = 3_317_044_064_679_887_385_961_981


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = bytearray(len(flags[p * p:: p]))
    return tuple(i for i, f in enumerate(flags) if f)


_SMALL_PRIMES = _sieve(_TRIAL_BOUND)


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True when a witnesses compositeness of n."""
    x = pow(a, d, n)
    if x in (1, n - 1):
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_prp(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge parameters."""
    r = isqrt(n)
    if r * r == n:
        return False
    d = 5
    while True:
        j = _jacobi(d % n, n)
        if j == 0:
            return abs(d) == n
        if j == -1:
            break
        d = -(d + 2) if d > 0 else -(d - 2)
    q = (1 - d) // 4
    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    # Binary ladder for the Lucas pair (U_k, V_k) mod n, P = 1.
    u, v, qk = 1, 1, q
    for bit in bin(k)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = _half(u + v, n), _half(d * u + v, n)
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def _half(x: int, n: int) -> int:
    x %= n
    if x % 2:
        x += n
    return (x // 2) % n


def is_prime(n: int) -> bool:
    """Deterministic below 3.3e24; Miller-Rabin plus strong Lucas above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        if _mr_witness(n, a, d, s):
            return False
    if n < _MR_PROVEN_LIMIT:
        return True
    return _strong_lucas_prp(n)


# -- factorization -----------------------------------------------------------


@dataclass(frozen=True)
class PrimeFactorization:
    """Sorted prime powers of ``value``; ``cofactor`` holds whatever remains
    unfactored when ``complete`` is False (1 otherwise)."""

    value: int
    factors: tuple[tuple[int, int], ...]
    complete: bool
    cofactor: int = 1

    def product(self) -> int:
        return self.cofactor * prod(p**e for p, e in self.factors)

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def to_doc(self) -> dict:
        return {
            "value": str(self.value),
            "factors": [[str(p), e] for p, e in self.factors],
            "complete": self.complete,
            "cofactor": str(self.cofactor),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "PrimeFactorization":
        return cls(
            value=int(doc["value"]),
            factors=tuple((int(p), int(e)) for p, e in doc["factors"]),
            complete=bool(doc["complete"]),
            cofactor=int(doc["cofactor"]),
        )


def _iroot(n: int, e: int) -> int:
    if n < 2 or e == 1:
        return n
    x = 1 << -(-n.bit_length() // e)
    while True:
        y = ((e - 1) * x + n // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def _perfect_power(n: int) -> tuple[int, int]:
    """Largest e with n = r**e; returns (r, e), e = 1 when n is no power."""
    for e in range(n.bit_length(), 1, -1):
        r = _iroot(n, e)
        if r > 1 and r**e == n:
            return r, e
    return n, 1


def _brent_rho(n: int, c: int, max_steps: int) -> tuple[int | None, int]:
    """One deterministic Brent rho attempt; returns (factor or None, steps)."""
    y, r, q = 2, 1, 1
    g = 1
    steps = 0
    x = ys = y
    batch = 128
    while g == 1 and steps < max_steps:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        steps += r
        k = 0
        while k < r and g == 1:
            ys = y
            chunk = min(batch, r - k)
            for _ in range(chunk):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            steps += chunk
            g = gcd(q, n)
            k += chunk
        r *= 2
    if g == n:
        g = 1
        for _ in range(max_steps - steps if max_steps > steps else batch):
            ys = (ys * ys + c) % n
            steps += 1
            g = gcd(abs(x - ys), n)
            if g > 1:
                break
    if g in (1, n):
        return None, steps
    return g, steps


def factor(n: int, budget: int | None = None) -> PrimeFactorization:
    """Factor n within a deterministic effort budget.

    ``budget`` caps the total number of Pollard-rho iterations; trial
    division and primality certification are not charged against it.  The
    default is sized for inputs around 140 bits.
    """
    if n < 1:
        raise DomainError(f"factor needs n >= 1, got {n}")
    if budget is None:
        budget = DEFAULT_FACTOR_BUDGET
    counts: dict[int, int] = {}
    rem = n
    for p in _SMALL_PRIMES:
        if p * p > rem:
            break
        while rem % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rem //= p
    stack: list[tuple[int, int]] = [(rem, 1)] if rem > 1 else []
    unfactored: list[tuple[int, int]] = []
    remaining = budget
    while stack:
        value, mult = stack.pop()
        if value == 1:
            continue
        if is_prime(value):
            counts[value] = counts.get(value, 0) + mult
            continue
        root, exp = _perfect_power(value)
        if exp > 1:
            stack.append((root, mult * exp))
            continue
        found = None
        c = 1
        while remaining > 0:
            found, used = _brent_rho(value, c, remaining)
            remaining -= used
            if found is not None:
                break
            c += 1
        if found is None:
            unfactored.append((value, mult))
            continue
        stack.append((found, mult))
        stack.append((value // found, mult))
    cofactor = prod(v**e for v, e in unfactored)
    result = PrimeFactorization(
        value=n,
        factors=tuple(sorted(counts.items())),
        complete=not unfactored,
        cofactor=cofactor,
    )
    if result.product() != n:
        raise InternalInconsistencyError(
            f"factorization of {n} does not multiply back")
    return result


# -- matrices over GF(q) -----------------------------------------------------


class GFMatrix:
    """Square matrix of residues modulo a prime q."""

    def __init__(self, n: int, q: int, data: np.ndarray):
        self.n = n
        self.q = q
        self._data = data

    @staticmethod
    def _dtype_for(n: int, q: int):
        return np.int64 if n * (q - 1) ** 2 < 2**62 else object

    @classmethod
    def from_rows(cls, rows, q: int) -> "GFMatrix":
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DomainError("matrix must be square")
        data = np.array([[int(v) % q for v in r] for r in rows],
                        dtype=cls._dtype_for(n, q))
        return cls(n, q, data)

    @classmethod
    def identity(cls, n: int, q: int) -> "GFMatrix":
        data = np.array([[1 if i == j else 0 for j in range(n)] for i in range(n)],
                        dtype=cls._dtype_for(n, q))
        return cls(n, q, data)

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(v) for v in row) for row in self._data)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GFMatrix) and self.n == other.n
                and self.q == other.q
                and bool((self._data == other._data).all()))

    def __matmul__(self, other: "GFMatrix") -> "GFMatrix":
        if self.q != other.q or self.n != other.n:
            raise DomainError("matrix shapes or moduli differ")
        return GFMatrix(self.n, self.q, (self._data @ other._data) % self.q)

    def pow(self, e: int) -> "GFMatrix":
        if e < 0:
            raise DomainError(f"exponent must be >= 0, got {e}")
        result = GFMatrix.identity(self.n, self.q)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return self == GFMatrix.identity(self.n, self.q)

    def det(self) -> int:
        """Determinant mod q by Gaussian elimination over the field."""
        a = [[int(v) for v in row] for row in self._data]
        n, q = self.n, self.q
        det = 1
        for i in range(n):
            pivot = next((r for r in range(i, n) if a[r][i] % q), None)
            if pivot is None:
                return 0
            if pivot != i:
                a[i], a[pivot] = a[pivot], a[i]
                det = -det
            det = det * a[i][i] % q
            inv = pow(a[i][i], q - 2, q)
            for r in range(i + 1, n):
                f = a[r][i] * inv % q
                if f:
                    a[r] = [(v - f * w) % q for v, w in zip(a[r], a[i])]
        return det % q


def reduce_mod(rows, q: int) -> GFMatrix:
    """Reduce an integer matrix mod q; q must be prime."""
    if not is_prime(q):
        raise DomainError(f"modulus must be prime, got {q}")
    return GFMatrix.from_rows(rows, q)


# -- order verdicts ----------------------------------------------------------


class Verdict(Enum):
    FULL_ORDER = "FULL_ORDER"
    NOT_FULL = "NOT_FULL"
    NOT_INVERTIBLE = "NOT_INVERTIBLE"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class OrderResult:
    verdict: Verdict
    order: int | None
    factorization: PrimeFactorization | None


def order_is_full(mat: GFMatrix, budget: int | None = None) -> OrderResult:
    """Decide whether mat generates a cyclic group of order q**n - 1.

    FULL_ORDER requires mat**N = I with N = q**n - 1 and mat**(N/p) != I for
    every prime p dividing N.  When mat**N != I the verdict is NOT_FULL even
    if the factorization is incomplete; UNKNOWN is returned only when an
    incomplete factorization actually blocks the decision.  The exact order
    is included whenever the factorization allows computing it.
    """
    if mat.det() == 0:
        return OrderResult(Verdict.NOT_INVERTIBLE, None, None)
    n_group = mat.q**mat.n - 1
    fact = factor(n_group, budget)
    if not mat.pow(n_group).is_identity():
        return OrderResult(Verdict.NOT_FULL, None, fact)
    if not fact.complete:
        return OrderResult(Verdict.UNKNOWN, None, fact)
    order = n_group
    for p, e in fact.factors:
        for _ in range(e):
            candidate = order // p
            if mat.pow(candidate).is_identity():
                order = candidate
            else:
                break
    verdict = Verdict.FULL_ORDER if order == n_group else Verdict.NOT_FULL
    return OrderResult(verdict, order, fact)


# -- scanning the template families -------------------------------------------


class MatrixFamily(Enum):
    EVEN = "E"
    ODD = "O"


def family_matrix(family: MatrixFamily, n: int) -> tuple[tuple[int, ...], ...]:
    """Integer n-by-n template for the chosen family (not yet reduced mod q)."""
    return even_matrix(n) if family is MatrixFamily.EVEN else odd_matrix(n)


@dataclass(frozen=True)
class ScanEntry:
    n: int
    verdict: Verdict
    order: int | None
    factorization: PrimeFactorization | None
    elapsed: float = field(compare=False, default=0.0)

    def to_doc(self) -> dict:
        return {
            "n": self.n,
            "verdict": self.verdict.value,
            "order": None if self.order is None else str(self.order),
            "factorization": (None if self.factorization is None
                              else self.factorization.to_doc()),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "ScanEntry":
        return cls(
            n=int(doc["n"]),
            verdict=Verdict(doc["verdict"]),
            order=None if doc["order"] is None else int(doc["order"]),
            factorization=(None if doc["factorization"] is None else
                           PrimeFactorization.from_doc(doc["factorization"])),
        )


@dataclass(frozen=True)
class SingerReport:
    family: MatrixFamily
    q: int
    n_lo: int
    n_hi: int
    entries: tuple[ScanEntry, ...]
    elapsed: float = field(compare=False, default=0.0)

    def full_order_ns(self) -> tuple[int, ...]:
        return tuple(e.n for e in self.entries
                     if e.verdict is Verdict.FULL_ORDER)

    def entry(self, n: int) -> ScanEntry:
        for e in self.entries:
            if e.n == n:
                return e
        raise DomainError(f"n={n} not in scan range {self.n_lo}..{self.n_hi}")

    def to_doc(self) -> dict:
        return {
            "kind": "singer_report",
            "family": self.family.value,
            "q": self.q,
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "entries": [e.to_doc() for e in self.entries],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "SingerReport":
        return cls(
            family=MatrixFamily(doc["family"]),
            q=int(doc["q"]),
            n_lo=int(doc["n_lo"]),
            n_hi=int(doc["n_hi"]),
            entries=tuple(ScanEntry.from_doc(e) for e in doc["entries"]),
        )


def singer_scan(family: MatrixFamily, q: int, n_lo: int, n_hi: int,
                budget: int | None = None) -> SingerReport:
    """Order verdicts for the family templates of sizes n_lo..n_hi mod q."""
    if not is_prime(q):
        raise DomainError(f"q must be prime, got {q}")
    if n_lo < 1 or n_hi < n_lo:
        raise DomainError(f"bad scan range {n_lo}..{n_hi}")
    start_all = time.perf_counter()
    entries = []
    for n in range(n_lo, n_hi + 1):
        start = time.perf_counter()
        mat = reduce_mod(family_matrix(family, n), q)
        result = order_is_full(mat, budget)
        entries.append(ScanEntry(
            n=n,
            verdict=result.verdict,
            order=result.order,
            factorization=result.factorization,
            elapsed=time.perf_counter() - start,
        ))
    return SingerReport(
        family=family,
        q=q,
        n_lo=n_lo,
        n_hi=n_hi,
        entries=tuple(entries),
        elapsed=time.perf_counter() - start_all,
    )


# -- polynomials over GF(q), for characteristic-polynomial checks -------------


def _gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_mulmod(a: list[int], b: list[int], f: list[int], q: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % q
    # Reduce by the monic-up-to-unit polynomial f.
    df = len(f) - 1
    inv = pow(f[-1], q - 2, q)
    for i in range(len(out) - 1, df - 1, -1):
        c = out[i] * inv % q
        if c:
            for j, cf in enumerate(f):
                out[i - df + j] = (out[i - df + j] - c * cf) % q
    return _gf_trim(out[:df])


def _gf_powmod(a: list[int], e: int, f: list[int], q: int) -> list[int]:
    result = [1]
    base = a[:]
    while e:
        if e & 1:
            result = _gf_mulmod(result, base, f, q)
        base = _gf_mulmod(base, base, f, q)
        e >>= 1
    return result


def _gf_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = _gf_trim(a[:]), _gf_trim(b[:])
    while b:
        inv = pow(b[-1], q - 2, q)
        r = a[:]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            c = r[-1] * inv % q
            shift = len(r) - 1 - db
            for j, cb in enumerate(b):
                r[shift + j] = (r[shift + j] - c * cb) % q
            r = _gf_trim(r)
        a, b = b, r
    return a


def irreducible_mod(coeffs, q: int) -> bool:
    """Rabin irreducibility test for a polynomial over GF(q).

    ``coeffs`` are ascending integer coefficients; the leading coefficient
    must be nonzero mod q.
    """
    if not is_prime(q):
        raise DomainError(f"modulus must be prime, got {q}")
    f = _gf_trim([int(c) % q for c in coeffs])
    n = len(f) - 1
    if n < 1:
        raise DomainError("polynomial must have positive degree")
    if n == 1:
        return True

    def _minus_x(poly: list[int]) -> list[int]:
        out = poly[:] + [0] * max(0, 2 - len(poly))
        out[1] = (out[1] - 1) % q
        return _gf_trim(out)

    x = [0, 1]
    # x^(q^n) must equal x mod f.
    if _minus_x(_gf_powmod(x, q**n, f, q)):
        return False
    for p in {p for p, _ in factor(n).factors}:
        diff = _minus_x(_gf_powmod(x, q ** (n // p), f, q))
        g = _gf_gcd(diff, f, q)
        if len(g) != 1:
            return False
    return True


def gl_order(n: int, q: int) -> int:
    """Order of the general linear group GL(n, q)."""
    qn = q**n
    return prod(qn - q**i for i in range(n))
