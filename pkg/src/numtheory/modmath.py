"""Modular arithmetic and number-theory primitives.

Everything here is a pure function of its arguments. Randomness (Miller-Rabin
bases above 2**64, Pollard-rho restarts, prime generation) comes from
``random.Random`` (MT19937) seeded explicitly, so results are reproducible.
"""
import hashlib
import logging
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InvalidArgument

logger = logging.getLogger(__name__)

SEED_MASK = (1 << 64) - 1

# trial division limit used by factor_integer before switching to Pollard-rho
TRIAL_DIVISION_LIMIT = 10 ** 6
FACTOR_CEILING_BITS = 80

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# deterministic for every n < 2**64
_DETERMINISTIC_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_PROBABILISTIC_ROUNDS = 40


def make_rng(seed: int) -> random.Random:
    """Return the project PRNG (MT19937) for a 64-bit seed."""
    return random.Random(seed & SEED_MASK)


def derive_seed(*parts) -> int:
    """64-bit seed hashed (BLAKE2b) from the repr of ``parts``."""
    digest = hashlib.blake2b(repr(parts).encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big")


@dataclass(frozen=True)
class Factorization:
    """Prime factorisation ``value = prod(prime ** exponent)``."""

    value: int
    factors: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        previous = 0
        product = 1
        for prime, exponent in self.factors:
            if prime <= previous or exponent < 1:
                raise InvalidArgument(f"malformed factorization of {self.value}: {self.factors}")
            previous = prime
            product *= prime ** exponent
        if product != self.value:
            raise InvalidArgument(f"factors {self.factors} do not multiply to {self.value}")

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(prime for prime, _ in self.factors)

    def prime_powers(self) -> Tuple[int, ...]:
        return tuple(prime ** exponent for prime, exponent in self.factors)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.factors)


def _check_modulus(n: int, name: str = "modulus") -> None:
    if n < 2:
        raise InvalidArgument(f"{name} must be >= 2, got {n}")


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Return ``base ** exponent mod modulus`` with ``0 ** 0 == 1``."""
    _check_modulus(modulus)
    if exponent < 0:
        raise InvalidArgument(f"exponent must be non-negative, got {exponent}")
    return pow(base, exponent, modulus)


def _egcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mod_inv(a: int, n: int) -> Optional[int]:
    """Inverse of ``a`` modulo ``n``, or None when ``gcd(a, n) != 1``."""
    _check_modulus(n, "n")
    g, x, _ = _egcd(a % n, n)
    if g != 1:
        return None
    return x % n


def crt_combine(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Unique x in [0, prod(moduli)) congruent to each residue."""
    if len(residues) != len(moduli) or not moduli:
        raise InvalidArgument("residues and moduli must be non-empty and of equal length")
    for m in moduli:
        _check_modulus(m)
    for i, a in enumerate(moduli):
        for b in moduli[i + 1:]:
            if math.gcd(a, b) != 1:
                raise InvalidArgument(f"moduli {a} and {b} are not coprime")

    x, modulus = 0, 1
    for r, m in zip(residues, moduli):
        inv = mod_inv(modulus % m, m)
        x += modulus * ((r - x) * inv % m)
        modulus *= m
    return x % modulus


def coprime_split(n: int, witness: int) -> Optional[Tuple[int, int]]:
    """Split ``n`` into coprime ``(n1, n2)`` along the primes it shares with ``witness``.

    ``n1`` gathers every prime-power component of ``n`` whose prime divides
    ``witness``. Only gcds are used, no factorisation. Returns None when
    ``witness`` shares every prime of ``n`` (no split exists).
    """
    _check_modulus(n, "n")
    d = math.gcd(witness, n)
    if d == 1 or d == n:
        raise InvalidArgument(f"gcd({witness}, {n}) = {d} is not a proper divisor")
    rest = n
    g = math.gcd(rest, d)
    while g > 1:
        rest //= g
        g = math.gcd(rest, d)
    if rest == 1:
        return None
    return n // rest, rest


def solve_linear_congruence(a: int, c: int, n: int) -> List[int]:
    """All x in [0, n) with ``a*x = c (mod n)``, ascending."""
    _check_modulus(n, "n")
    a %= n
    c %= n
    d = math.gcd(a, n)
    if c % d:
        return []
    step = n // d
    if step == 1:
        x0 = 0
    else:
        x0 = (c // d) * mod_inv(a // d, step) % step
    return [x0 + i * step for i in range(d)]


def _is_composite_witness(a: int, d: int, s: int, n: int) -> bool:
    a %= n
    if a <= 1 or a == n - 1:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 2**64, 40 seeded random rounds above."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    if n < (1 << 64):
        bases = _DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_PROBABILISTIC_ROUNDS)]
    return not any(_is_composite_witness(a, d, s, n) for a in bases)


def random_prime(bits: int, seed: int) -> int:
    """Deterministic random prime with exactly ``bits`` bits."""
    if bits < 3:
        raise InvalidArgument(f"bits must be >= 3, got {bits}")
    rng = make_rng(seed)
    top = 1 << (bits - 1)
    while True:
        candidate = rng.getrandbits(bits) | top | 1
        if is_probable_prime(candidate):
            return candidate


@lru_cache(maxsize=8)
def prime_sieve(limit: int) -> Tuple[int, ...]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i::i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(flags) if flag)


def _brent_divisor(n: int) -> int:
    """A non-trivial divisor of the odd composite ``n`` (Pollard-rho, Brent cycling)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    batch = 128
    while True:
        y, c = rng.randrange(1, n), rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += batch
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        logger.debug(f"Pollard-rho cycle degenerated on {n}, restarting")


@lru_cache(maxsize=4096)
def factor_integer(n: int) -> Factorization:
    """Complete factorisation: trial division to 10**6, then Pollard-rho (Brent)."""
    if n < 2:
        raise InvalidArgument(f"cannot factor {n}")
    if n.bit_length() > FACTOR_CEILING_BITS:
        raise InvalidArgument(f"{n} exceeds the {FACTOR_CEILING_BITS}-bit factoring ceiling")
    if is_probable_prime(n):
        return Factorization(n, ((n, 1),))

    counts: Dict[int, int] = {}
    rest = n
    for q in prime_sieve(TRIAL_DIVISION_LIMIT):
        if q * q > rest:
            break
        if rest % q == 0:
            exponent = 0
            while rest % q == 0:
                rest //= q
                exponent += 1
            counts[q] = exponent
            if rest == 1 or is_probable_prime(rest):
                break

    stack = [rest] if rest > 1 else []
    while stack:
        c = stack.pop()
        if is_probable_prime(c):
            counts[c] = counts.get(c, 0) + 1
            continue
        d = _brent_divisor(c)
        stack.extend((d, c // d))

    return Factorization(n, tuple(sorted(counts.items())))


def find_generator(p: int, fact_p_minus_1: Factorization) -> int:
    """Smallest generator of Z_p^*."""
    if p < 3:
        raise InvalidArgument(f"p must be >= 3, got {p}")
    if fact_p_minus_1.value != p - 1:
        raise InvalidArgument(f"factorization of {fact_p_minus_1.value} given for p-1 = {p - 1}")
    exponents = [(p - 1) // q for q in fact_p_minus_1.primes]
    for g in range(2, p):
        if all(pow(g, e, p) != 1 for e in exponents):
            return g
    raise InvalidArgument(f"no generator found, {p} is not prime")


def multiplicative_order(a: int, p: int, fact_p_minus_1: Factorization) -> int:
    """Order of ``a`` in Z_p^*."""
    a %= p
    if a == 0:
        raise InvalidArgument("0 has no multiplicative order")
    order = p - 1
    for q, exponent in fact_p_minus_1.factors:
        for _ in range(exponent):
            if pow(a, order // q, p) == 1:
                order //= q
            else:
                break
    return order


def _iroot(m: int, e: int) -> int:
    if e == 1:
        return m
    x = 1 << -(-m.bit_length() // e)
    while True:
        y = ((e - 1) * x + m // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def integer_root_prime_power(m: int) -> Optional[Tuple[int, int]]:
    """``(q, e)`` when ``m == q ** e`` for a prime q, else None."""
    if m < 2:
        return None
    for e in range(m.bit_length(), 0, -1):
        r = _iroot(m, e)
        if r >= 2 and r ** e == m and is_probable_prime(r):
            return r, e
    return None
