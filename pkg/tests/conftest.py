"""Shared context builders, cached per dimension so the suite stays fast."""

import functools

from mublab.arithmetic import build_context, build_extension, factor_prime_power
from mublab.pauli import build_phase_system
from mublab.mub import mub_family

GALOIS_TEST_DIMS = (2, 3, 4, 5, 7, 8, 9)
MODULAR_TEST_DIMS = (3, 5, 7, 9, 15)


@functools.lru_cache(maxsize=None)
def gctx(n):
    p, m = factor_prime_power(n)
    return build_context("galois", p, m)


@functools.lru_cache(maxsize=None)
def mctx(n):
    return build_context("modular", n)


@functools.lru_cache(maxsize=None)
def gext(n):
    return build_extension(gctx(n))


@functools.lru_cache(maxsize=None)
def gphases(n):
    return build_phase_system(gctx(n))


@functools.lru_cache(maxsize=None)
def mphases(n):
    return build_phase_system(mctx(n))


@functools.lru_cache(maxsize=None)
def gfamily(n):
    return mub_family(gctx(n), gphases(n))


@functools.lru_cache(maxsize=None)
def mfamily(n):
    return mub_family(mctx(n), mphases(n))
