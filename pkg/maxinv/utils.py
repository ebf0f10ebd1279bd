from math import gcd
from typing import Iterable

import numpy as np
from sympy import divisor_count, factorint, isprime

from maxinv import exceptions


def find_line(code: str, index: int) -> str:
    start = code.rfind('\n', 0, index) + 1
    code = code[start:]
    end = code.find('\n')
    if end == -1:
        end = len(code)
    return code[:end]


# Bitsets are plain ints: bit i set <=> element id i is a member.

def mask_to_bits(mask: np.ndarray) -> int:
    packed = np.packbits(mask.astype(bool), bitorder='little')
    return int.from_bytes(packed.tobytes(), 'little')


def bits_to_mask(bits: int, size: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((size + 7) // 8, 'little'), dtype=np.uint8)
    return np.unpackbits(raw, bitorder='little')[:size].astype(bool)


def ids_to_bits(ids: Iterable[int]) -> int:
    bits = 0
    for i in ids:
        bits |= 1 << int(i)
    return bits


def bits_to_ids(bits: int) -> list[int]:
    ids = []
    while bits:
        low = bits & -bits
        ids.append(low.bit_length() - 1)
        bits ^= low
    return ids


def has_bit(bits: int, i: int) -> bool:
    return (bits >> int(i)) & 1 == 1


def require_prime(p: int) -> None:
    if not isprime(p):
        raise exceptions.GroupError(exceptions.NOT_PRIME % p)


def prime_divisors(n: int) -> list[int]:
    return sorted(factorint(n))


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorint(n)) == 1


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1


def number_of_divisors(n: int) -> int:
    return int(divisor_count(n))
