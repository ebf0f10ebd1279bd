"""Dense Cayley-table groups.

Elements are ids ``0 .. order-1`` with the identity fixed at id 0. Subgroups are
int bitsets over those ids. Permutations compose left to right: ``(p * q)(x)``
applies ``p`` first, then ``q``.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from maxinv import config, exceptions
from maxinv.utils import bits_to_ids, bits_to_mask, has_bit, mask_to_bits

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.images:
            raise exceptions.GroupError(exceptions.INVALID_PERMUTATION % 'degree must be positive')
        if sorted(self.images) != list(range(len(self.images))):
            raise exceptions.GroupError(exceptions.INVALID_PERMUTATION % (self.images,))

    @classmethod
    def identity(cls, degree: int) -> 'Permutation':
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> 'Permutation':
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree or point in seen:
                    raise exceptions.GroupError(exceptions.INVALID_PERMUTATION % (list(cycle),))
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if other.degree != self.degree:
            raise exceptions.GroupError(exceptions.DEGREE_MISMATCH % (self.degree, other.degree))
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> 'Permutation':
        images = [0] * self.degree
        for i, j in enumerate(self.images):
            images[j] = i
        return Permutation(tuple(images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        result = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            result.append(tuple(cycle))
        return result

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return '()'
        return ''.join('(' + ' '.join(map(str, cycle)) + ')' for cycle in cycles)


class GroupTable:
    order: int
    mul: np.ndarray
    inv: np.ndarray
    identity: int
    elem_labels: Optional[list[Hashable]]
    name: str

    def __init__(self, mul: np.ndarray, name: str = '',
                 labels: Optional[Sequence[Hashable]] = None, validate: bool = True) -> None:
        mul = np.array(mul, dtype=np.int64)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] < 1:
            raise exceptions.GroupError(exceptions.AXIOM_VIOLATION % 'table must be square and non-empty')
        self.order = mul.shape[0]
        self.mul = mul
        self.identity = 0
        self.name = name
        self.elem_labels = list(labels) if labels is not None else None
        if validate:
            self.check_axioms()
        self.inv = np.argmax(mul == 0, axis=1)
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    def __repr__(self) -> str:
        return f'GroupTable(name={self.name!r}, order={self.order})'

    def check_axioms(self) -> None:
        n = self.order
        mul = self.mul
        ids = np.arange(n)
        if mul.min() < 0 or mul.max() >= n:
            raise exceptions.GroupError(exceptions.AXIOM_VIOLATION % 'entry out of range')
        if not (np.array_equal(mul[0], ids) and np.array_equal(mul[:, 0], ids)):
            raise exceptions.GroupError(exceptions.AXIOM_VIOLATION % 'identity law')
        rows = np.sort(mul, axis=1)
        cols = np.sort(mul, axis=0)
        if not (np.array_equal(rows, np.broadcast_to(ids, (n, n)))
                and np.array_equal(cols, np.broadcast_to(ids[:, None], (n, n)))):
            raise exceptions.GroupError(exceptions.AXIOM_VIOLATION % 'latin square')
        if not (mul == 0).any(axis=1).all():
            raise exceptions.GroupError(exceptions.AXIOM_VIOLATION % 'inverse law')
        if n <= config.EXHAUSTIVE_CHECK_LIMIT:
            associative = np.array_equal(mul[mul], mul[:, mul])
        else:
            rng = np.random.default_rng(config.SAMPLE_SEED)
            x, y, z = rng.integers(0, n, size=(3, config.SAMPLE_SIZE))
            associative = np.array_equal(mul[mul[x, y], z], mul[x, mul[y, z]])
        if not associative:
            raise exceptions.GroupError(exceptions.AXIOM_VIOLATION % 'associativity')

    # elements

    def label(self, x: int) -> Hashable:
        if self.elem_labels is None:
            return x
        return self.elem_labels[x]

    @cached_property
    def _label_index(self) -> dict[Hashable, int]:
        if self.elem_labels is None:
            return {}
        return {label: i for i, label in enumerate(self.elem_labels)}

    def element_id(self, label: Hashable) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise exceptions.GroupError(exceptions.UNKNOWN_ELEMENT % (label,)) from None

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        ids = np.arange(self.order)
        power = ids.copy()
        k = 1
        while not orders.all():
            orders[(power == 0) & (orders == 0)] = k
            power = self.mul[power, ids]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def fingerprint(self) -> tuple[int, tuple[tuple[int, int], ...], bool]:
        counts = Counter(int(k) for k in self.element_orders)
        return self.order, tuple(sorted(counts.items())), self.is_abelian

    def conjugate_ids(self, g: int, ids: np.ndarray) -> np.ndarray:
        return self.mul[self.mul[g, ids], self.inv[g]]

    # subgroups

    def subgroup(self, bits: int) -> 'Subgroup':
        return Subgroup(self, bits, bits.bit_count())

    def subgroup_from_mask(self, mask: np.ndarray) -> 'Subgroup':
        return self.subgroup(mask_to_bits(mask))

    def full(self) -> 'Subgroup':
        return self.subgroup((1 << self.order) - 1)

    def trivial(self) -> 'Subgroup':
        return self.subgroup(1)

    def is_closed(self, bits: int) -> bool:
        mask = bits_to_mask(bits, self.order)
        if not mask[0]:
            return False
        ids = np.flatnonzero(mask)
        return bool(mask[self.mul[np.ix_(ids, ids)]].all() and mask[self.inv[ids]].all())

    def generate(self, gens: Iterable[int], seed: Optional['Subgroup'] = None) -> 'Subgroup':
        """Subgroup generated by ``gens``. A ``seed`` already inside that subgroup only speeds it up."""
        gens = np.unique(np.asarray(list(gens), dtype=np.int64))
        if seed is None:
            mask = np.zeros(self.order, dtype=bool)
            mask[0] = True
            frontier = np.array([0], dtype=np.int64)
        else:
            mask = seed.mask.copy()
            # Every word starts in the seed and leaves it at its first outside generator.
            frontier = self.mul[seed.id_array[:, None], gens[~mask[gens]][None, :]].ravel()
            frontier = np.unique(frontier[~mask[frontier]])
            mask[frontier] = True
        if gens.size == 0:
            return self.subgroup_from_mask(mask)
        while frontier.size:
            products = self.mul[frontier[:, None], gens[None, :]].ravel()
            fresh = products[~mask[products]]
            mask[fresh] = True
            frontier = np.unique(fresh)
        return self.subgroup_from_mask(mask)

    def generating_set(self, H: Optional['Subgroup'] = None) -> list[int]:
        H = self.full() if H is None else H
        current = self.trivial()
        gens: list[int] = []
        for x in H.ids:
            if x not in current:
                gens.append(x)
                current = self.generate(gens)
                if current.order == H.order:
                    break
        return gens


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: GroupTable
    members: int
    order: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return other.parent is self.parent and other.members == self.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        shown = self.ids[:8]
        more = ', ...' if self.order > 8 else ''
        return f'Subgroup(order={self.order}, ids=[{", ".join(map(str, shown))}{more}])'

    def __contains__(self, x: int) -> bool:
        return has_bit(self.members, x)

    def __len__(self) -> int:
        return self.order

    @property
    def sort_key(self) -> tuple[int, int]:
        return self.order, self.members

    @cached_property
    def ids(self) -> list[int]:
        return bits_to_ids(self.members)

    @cached_property
    def id_array(self) -> np.ndarray:
        return np.array(self.ids, dtype=np.int64)

    @cached_property
    def mask(self) -> np.ndarray:
        return bits_to_mask(self.members, self.parent.order)

    def issubset(self, other: 'Subgroup') -> bool:
        return self.members & ~other.members == 0

    def __and__(self, other: 'Subgroup') -> 'Subgroup':
        if other.parent is not self.parent:
            raise exceptions.GroupError(exceptions.NOT_A_SUBGROUP)
        return self.parent.subgroup(self.members & other.members)

    def join(self, other: 'Subgroup') -> 'Subgroup':
        if other.parent is not self.parent:
            raise exceptions.GroupError(exceptions.NOT_A_SUBGROUP)
        gens = self.parent.generating_set(self) + self.parent.generating_set(other)
        return self.parent.generate(gens, seed=self)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_full(self) -> bool:
        return self.order == self.parent.order


@dataclass(frozen=True)
class Automorphism:
    images: tuple[int, ...]

    @classmethod
    def identity(cls, order: int) -> 'Automorphism':
        return cls(tuple(range(order)))

    @classmethod
    def from_array(cls, images: np.ndarray) -> 'Automorphism':
        return cls(tuple(int(x) for x in images))

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.images, dtype=np.int64)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def compose(self, other: 'Automorphism') -> 'Automorphism':
        """``self.compose(other)(x) == self(other(x))``."""
        return Automorphism.from_array(self.array[other.array])

    def inverse(self) -> 'Automorphism':
        images = np.empty_like(self.array)
        images[self.array] = np.arange(len(self.images))
        return Automorphism.from_array(images)

    def apply(self, H: Subgroup) -> Subgroup:
        mask = np.zeros(H.parent.order, dtype=bool)
        mask[self.array[H.id_array]] = True
        return H.parent.subgroup_from_mask(mask)

    def validate(self, G: GroupTable) -> None:
        phi = self.array
        n = G.order
        if len(phi) != n:
            raise exceptions.GroupError(exceptions.INVALID_AUTOMORPHISM % 'wrong number of images')
        if not np.array_equal(np.sort(phi), np.arange(n)):
            raise exceptions.GroupError(exceptions.INVALID_AUTOMORPHISM % 'not a bijection')
        if phi[0] != 0:
            raise exceptions.GroupError(exceptions.INVALID_AUTOMORPHISM % 'identity not fixed')
        if n <= config.EXHAUSTIVE_CHECK_LIMIT:
            ok = np.array_equal(phi[G.mul], G.mul[np.ix_(phi, phi)])
        else:
            rng = np.random.default_rng(config.SAMPLE_SEED)
            x, y = rng.integers(0, n, size=(2, config.SAMPLE_SIZE))
            ok = np.array_equal(phi[G.mul[x, y]], G.mul[phi[x], phi[y]])
        if not ok:
            raise exceptions.GroupError(exceptions.INVALID_AUTOMORPHISM % 'not a homomorphism')


def _check_cap(order: int, cap: Optional[int]) -> None:
    cap = config.resolve_cap(cap)
    if order > cap:
        raise exceptions.GroupError(exceptions.GROUP_TOO_LARGE % cap)


def closure_from_generators(gens: Sequence[Permutation], degree: Optional[int] = None,
                            cap: Optional[int] = None, name: str = '') -> GroupTable:
    cap = config.resolve_cap(cap)
    if degree is None:
        degree = gens[0].degree if gens else 1
    for gen in gens:
        if gen.degree != degree:
            raise exceptions.GroupError(exceptions.DEGREE_MISMATCH % (degree, gen.degree))
    ordered = sorted(set(gens))
    identity = Permutation.identity(degree)
    elements = [identity]
    index = {identity.images: 0}
    position = 0
    while position < len(elements):
        x = elements[position]
        position += 1
        for gen in ordered:
            y = x * gen
            if y.images not in index:
                if len(elements) >= cap:
                    raise exceptions.GroupError(exceptions.GROUP_TOO_LARGE % cap)
                index[y.images] = len(elements)
                elements.append(y)
    n = len(elements)
    logger.debug('closure of %d generators on %d points: order %d', len(ordered), degree, n)
    labels = np.array([e.images for e in elements], dtype=np.int64)
    keys = {labels[i].tobytes(): i for i in range(n)}
    mul = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        products = labels[:, labels[i]]
        mul[i] = [keys[row.tobytes()] for row in products]
    return GroupTable(mul, name=name, labels=elements)


def element_order(G: GroupTable, x: int) -> int:
    return int(G.element_orders[x])


def direct_product(G: GroupTable, H: GroupTable, cap: Optional[int] = None,
                   name: Optional[str] = None) -> GroupTable:
    n, m = G.order, H.order
    _check_cap(n * m, cap)
    mul = G.mul[:, None, :, None] * m + H.mul[None, :, None, :]
    labels = [(G.label(g), H.label(h)) for g in range(n) for h in range(m)]
    if name is None:
        name = f'{G.name} x {H.name}'
    return GroupTable(mul.reshape(n * m, n * m), name=name, labels=labels)


ActionMap = Union[Sequence[Automorphism], Mapping[int, Automorphism]]


def semidirect_product(N: GroupTable, H: GroupTable, act: ActionMap,
                       cap: Optional[int] = None, name: Optional[str] = None) -> GroupTable:
    """``(n1, h1)(n2, h2) = (n1 * act(h1)(n2), h1 * h2)``; pair ``(n, h)`` gets id ``n * |H| + h``."""
    n, m = N.order, H.order
    _check_cap(n * m, cap)
    images = np.empty((m, n), dtype=np.int64)
    for h in range(m):
        phi = act[h]
        phi.validate(N)
        images[h] = phi.array
    composed = images[np.arange(m)[:, None, None], images[None, :, :]]
    if not np.array_equal(images[H.mul], composed):
        raise exceptions.GroupError(exceptions.INVALID_ACTION)
    n1 = np.arange(n)[:, None, None, None]
    h1 = np.arange(m)[None, :, None, None]
    n2 = np.arange(n)[None, None, :, None]
    h2 = np.arange(m)[None, None, None, :]
    mul = N.mul[n1, images[h1, n2]] * m + H.mul[h1, h2]
    labels = [(N.label(a), H.label(b)) for a in range(n) for b in range(m)]
    if name is None:
        name = f'{N.name} : {H.name}'
    return GroupTable(mul.reshape(n * m, n * m), name=name, labels=labels)
