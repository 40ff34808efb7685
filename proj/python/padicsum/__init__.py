"""Exact p-adic evaluation of factorial and hypergeometric series.

Thin wrapper over the C++ core. Integers come back as ``int`` and rationals
as ``fractions.Fraction``.
"""

from fractions import Fraction
from typing import Optional, Sequence, Union

from . import _core
from ._core import RegionError

__all__ = [
    "RegionError",
    "vp",
    "norm_exponent",
    "factorial_val",
    "embed",
    "reconstruct",
    "evaluate",
    "uv_table",
    "generalized_uv",
    "exclude_grid",
    "multi_prime",
    "run_cli",
]

RationalLike = Union[int, Fraction, str]


def _q(x: RationalLike) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _frac(s: Optional[str]) -> Optional[Fraction]:
    return None if s is None else Fraction(s)


def vp(n: int, p: int) -> int:
    return _core.vp(str(n), p)


def norm_exponent(q: RationalLike, p: int) -> Optional[Fraction]:
    """Exponent e with |q|_p = p^e, or None for q = 0."""
    return _frac(_core.norm_exponent(_q(q), p))


def factorial_val(m: int, p: int) -> int:
    return int(_core.factorial_val(str(m), p))


def embed(q: RationalLike, p: int, N: int) -> dict:
    return _core.embed(_q(q), p, N)


def reconstruct(q: RationalLike, p: int, N: int, num_bound: int, den_bound: int) -> Optional[Fraction]:
    """Embed q with N digits and reconstruct it within the given bounds."""
    return _frac(_core.reconstruct(_q(q), p, N, str(num_bound), str(den_bound)))


def evaluate(
    alphas: Sequence[int],
    betas: Sequence[int],
    x: RationalLike,
    p: int,
    N: int = 40,
    P: str = "1",
    Q: str = "1",
    num_bound: int = 10**6,
    den_bound: int = 10**3,
) -> dict:
    """Sum the series to N p-adic digits. P and Q are polynomials in n."""
    d = _core.evaluate(list(alphas), list(betas), P, Q, _q(x), p, N, str(num_bound), str(den_bound))
    d["reconstruction"] = _frac(d["reconstruction"])
    return d


def uv_table(kmax: int) -> list:
    return [(k, int(u), int(v)) for k, u, v in _core.uv_table(kmax)]


def generalized_uv(k: int) -> tuple:
    return _core.generalized_uv(k)


def exclude_grid(t: int, amax: int, bmax: int, nmax: int = 30) -> dict:
    d = _core.exclude_grid(t, amax, bmax, nmax)
    d["candidates"] = int(d["candidates"])
    d["witness_histogram"] = {n: int(c) for n, c in d["witness_histogram"].items()}
    d["survivors"] = [Fraction(s) for s in d["survivors"]]
    return d


def multi_prime(k: int, t: int = 1, primes: Sequence[int] = (2, 3, 5, 7, 11), N: int = 40,
                num_bound: int = 10**6, den_bound: int = 10**3) -> dict:
    per, common = _core.multi_prime(k, t, list(primes), N, str(num_bound), str(den_bound))
    return {"per_prime": dict(zip(primes, map(_frac, per))), "common": _frac(common)}


def run_cli(*args: str) -> tuple:
    """Run the command-line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
