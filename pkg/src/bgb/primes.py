"""Uniform random primes from a prescribed interval."""

from __future__ import annotations

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# Deterministic Miller-Rabin witness set for n < 2^64.
_DET_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NoPrimeInIntervalError(ValueError):
    pass


def _miller_rabin_round(n, a, d, s):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = (x * x) % n
        if x == n - 1:
            return True
    return False


def is_prime(n, rng=None, rounds=40):
    """Deterministic below 2^64, Miller-Rabin with `rounds` random bases above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < (1 << 64):
        witnesses = [a for a in _DET_WITNESSES if a < n - 1] or [2]
    else:
        assert rng is not None, "probabilistic testing needs an rng"
        witnesses = [rng.randrange(2, n - 1) for _ in range(rounds)]
    return all(_miller_rabin_round(n, a, d, s) for a in witnesses)


def random_prime_in(lo, hi, rng, rounds=40):
    """Uniform prime in [lo, hi]; enumerates small intervals, otherwise
    rejection-samples with a draw budget before reporting an empty interval."""
    if hi < lo:
        raise NoPrimeInIntervalError("empty interval [%d, %d]" % (lo, hi))
    width = hi - lo + 1
    if width <= 4096:
        candidates = [n for n in range(max(lo, 2), hi + 1) if is_prime(n, rng, rounds)]
        if not candidates:
            raise NoPrimeInIntervalError("no prime in [%d, %d]" % (lo, hi))
        return candidates[rng.randrange(len(candidates))]
    # By the prime number theorem the density is ~1/log(hi); give the
    # sampler a generous multiple of that before giving up.
    budget = 64 * max(1, hi.bit_length())
    for _ in range(budget):
        n = rng.randint(lo, hi)
        if is_prime(n, rng, rounds):
            return n
    raise NoPrimeInIntervalError(
        "no prime found in [%d, %d] after %d draws" % (lo, hi, budget))
