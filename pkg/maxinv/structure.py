"""Subgroup lattices and structural predicates over Cayley tables.

Predicates take either a whole :class:`GroupTable` or a :class:`Subgroup`; a
subgroup is examined as a group in its own right, using its parent's table.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from maxinv import config, exceptions
from maxinv.group import GroupTable, Subgroup
from maxinv.utils import coprime, ids_to_bits, is_p_power, is_prime_power, p_part, prime_divisors, require_prime

logger = logging.getLogger(__name__)

GroupLike = Union[GroupTable, Subgroup]


class IndexKind(Enum):
    P_POWER = 'p-power'
    P_COPRIME = 'p-coprime'
    MIXED = 'mixed'


@dataclass(frozen=True)
class SubgroupLattice:
    group: GroupTable
    subgroups: tuple[Subgroup, ...]
    maximal_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.subgroups)

    def __getitem__(self, index: int) -> Subgroup:
        return self.subgroups[index]

    def __contains__(self, H: Subgroup) -> bool:
        return H.members in self._positions

    @cached_property
    def _positions(self) -> dict[int, int]:
        return {H.members: i for i, H in enumerate(self.subgroups)}

    def index(self, H: Subgroup) -> int:
        return self._positions[H.members]

    @property
    def maximal(self) -> list[Subgroup]:
        return [self.subgroups[i] for i in self.maximal_ids]

    def of_order(self, order: int) -> list[Subgroup]:
        return [H for H in self.subgroups if H.order == order]


def _as_subgroup(X: GroupLike) -> Subgroup:
    return X.full() if isinstance(X, GroupTable) else X


def _check_parent(X: Subgroup, H: Subgroup) -> None:
    if X.parent is not H.parent:
        raise exceptions.GroupError(exceptions.NOT_A_SUBGROUP)


def maximal_elements(subgroups: Iterable[Subgroup]) -> list[Subgroup]:
    """Inclusion-maximal members of a deduplicated family."""
    found: list[Subgroup] = []
    for H in sorted(subgroups, key=lambda S: S.order, reverse=True):
        if not any(H.issubset(M) for M in found):
            found.append(H)
    return sorted(found, key=lambda S: S.sort_key)


@lru_cache(maxsize=512)
def _lattice(G: GroupTable) -> SubgroupLattice:
    # Every subgroup is the join of its cyclic subgroups of prime-power order.
    orders = G.element_orders
    prime_powers = {k for k in set(orders.tolist()) if is_prime_power(k)}
    cyclic: dict[int, tuple[int, ...]] = {G.trivial().members: ()}
    for x in range(1, G.order):
        if int(orders[x]) in prime_powers:
            cyclic.setdefault(G.generate([x]).members, (x,))
    cyclic_gens = sorted((bits, gens[0]) for bits, gens in cyclic.items() if gens)

    known: dict[int, tuple[int, ...]] = dict(cyclic)
    frontier = [bits for bits, _ in cyclic_gens]
    rounds = 0
    while frontier:
        rounds += 1
        found = []
        for bits in frontier:
            S = G.subgroup(bits)
            gens = known[bits]
            for cyclic_bits, c in cyclic_gens:
                if cyclic_bits & ~bits == 0:
                    continue
                J = G.generate(gens + (c,), seed=S)
                if J.members not in known:
                    known[J.members] = gens + (c,)
                    found.append(J.members)
        frontier = found

    subgroups = tuple(sorted((G.subgroup(bits) for bits in known), key=lambda S: S.sort_key))
    proper = [H for H in subgroups if H.order < G.order]
    positions = {H.members: i for i, H in enumerate(subgroups)}
    maximal_ids = tuple(sorted(positions[H.members] for H in maximal_elements(proper)))
    logger.debug('lattice of %r: %d subgroups (%d cyclic, %d join rounds), %d maximal',
                 G, len(subgroups), len(cyclic), rounds, len(maximal_ids))
    return SubgroupLattice(G, subgroups, maximal_ids)


def all_subgroups(G: GroupTable, cap: Optional[int] = None) -> SubgroupLattice:
    cap = config.resolve_cap(cap)
    if G.order > cap:
        raise exceptions.GroupError(exceptions.GROUP_TOO_LARGE % cap)
    return _lattice(G)


def subgroups_of(X: GroupLike) -> list[Subgroup]:
    X = _as_subgroup(X)
    return [H for H in all_subgroups(X.parent) if H.issubset(X)]


def _conjugates(X: Subgroup, H: Subgroup) -> np.ndarray:
    # Row i lists the images of H's members under conjugation by the i-th member of X.
    G = H.parent
    g = X.id_array[:, None]
    return G.mul[G.mul[g, H.id_array[None, :]], G.inv[g]]


def conjugate(G: GroupTable, H: Subgroup, g: int) -> Subgroup:
    return G.subgroup(ids_to_bits(G.conjugate_ids(g, H.id_array)))


def normalizer(G: GroupLike, H: Subgroup) -> Subgroup:
    X = _as_subgroup(G)
    _check_parent(X, H)
    inside = H.mask[_conjugates(X, H)].all(axis=1)
    mask = np.zeros(X.parent.order, dtype=bool)
    mask[X.id_array[inside]] = True
    return X.parent.subgroup_from_mask(mask)


def centralizer(G: GroupLike, H: GroupLike) -> Subgroup:
    X = _as_subgroup(G)
    H = _as_subgroup(H)
    _check_parent(X, H)
    mul = X.parent.mul
    x, h = X.id_array, H.id_array
    commuting = (mul[np.ix_(x, h)] == mul[np.ix_(h, x)].T).all(axis=1)
    mask = np.zeros(X.parent.order, dtype=bool)
    mask[x[commuting]] = True
    return X.parent.subgroup_from_mask(mask)


def center(G: GroupLike) -> Subgroup:
    return centralizer(G, G)


def is_normal(G: GroupLike, H: Subgroup) -> bool:
    X = _as_subgroup(G)
    _check_parent(X, H)
    return bool(H.mask[_conjugates(X, H)].all())


@lru_cache(maxsize=64)
def normal_subgroups(G: GroupTable) -> tuple[Subgroup, ...]:
    return tuple(H for H in all_subgroups(G) if is_normal(G, H))


def sylow_subgroups(G: GroupLike, p: int) -> list[Subgroup]:
    require_prime(p)
    X = _as_subgroup(G)
    order = p_part(X.order, p)
    if order == 1:
        return [X.parent.trivial()]
    return [H for H in all_subgroups(X.parent) if H.order == order and H.issubset(X)]


def p_elements(G: GroupLike, p: int) -> np.ndarray:
    """Members of ``G`` whose order is a power of ``p`` (identity included)."""
    X = _as_subgroup(G)
    orders = X.parent.element_orders[X.id_array].copy()
    divisible = orders % p == 0
    while divisible.any():
        orders[divisible] //= p
        divisible = orders % p == 0
    return X.id_array[orders == 1]


def normal_sylow(G: GroupLike, p: int) -> Optional[Subgroup]:
    # A Sylow p-subgroup is normal iff it is unique iff the p-elements number exactly |G|_p.
    require_prime(p)
    X = _as_subgroup(G)
    elements = p_elements(X, p)
    if len(elements) != p_part(X.order, p):
        return None
    mask = np.zeros(X.parent.order, dtype=bool)
    mask[elements] = True
    return X.parent.subgroup_from_mask(mask)


def commutator_subgroup(H: Subgroup, K: Subgroup) -> Subgroup:
    _check_parent(H, K)
    G = H.parent
    h = H.id_array[:, None]
    k = K.id_array[None, :]
    commutators = G.mul[G.mul[G.inv[h], G.inv[k]], G.mul[h, k]]
    return G.generate(np.unique(commutators))


def derived_subgroup(G: GroupLike) -> Subgroup:
    X = _as_subgroup(G)
    return commutator_subgroup(X, X)


def derived_series(G: GroupLike) -> list[Subgroup]:
    series = [_as_subgroup(G)]
    while True:
        following = derived_subgroup(series[-1])
        if following == series[-1]:
            return series
        series.append(following)


def lower_central_series(G: GroupLike) -> list[Subgroup]:
    X = _as_subgroup(G)
    series = [X]
    while True:
        following = commutator_subgroup(series[-1], X)
        if following == series[-1]:
            return series
        series.append(following)


def is_nilpotent_by_central_series(G: GroupLike) -> bool:
    return lower_central_series(G)[-1].is_trivial()


def is_nilpotent(G: GroupLike) -> bool:
    X = _as_subgroup(G)
    result = all(normal_sylow(X, p) is not None for p in prime_divisors(X.order))
    if config.debug_checks():
        assert result == is_nilpotent_by_central_series(X), 'nilpotency oracles disagree'
    return result


def is_solvable(G: GroupLike) -> bool:
    return derived_series(G)[-1].is_trivial()


def is_hall(G: GroupLike, H: Subgroup) -> bool:
    X = _as_subgroup(G)
    return coprime(H.order, X.order // H.order)


def is_ti(G: GroupLike, H: Subgroup) -> bool:
    X = _as_subgroup(G)
    _check_parent(X, H)
    shared = H.mask[_conjugates(X, H)].sum(axis=1)
    return bool(((shared == 1) | (shared == H.order)).all())


def quotient_projection(G: GroupTable, N: Subgroup) -> tuple[np.ndarray, np.ndarray]:
    """Map each element to its coset id; cosets are numbered by their least member."""
    if not is_normal(G, N):
        raise exceptions.GroupError(exceptions.NOT_NORMAL)
    least = G.mul[:, N.id_array].min(axis=1)
    representatives = np.unique(least)
    index = np.empty(G.order, dtype=np.int64)
    index[representatives] = np.arange(len(representatives))
    return index[least], representatives


def quotient_table(G: GroupTable, N: Subgroup) -> GroupTable:
    projection, representatives = quotient_projection(G, N)
    mul = projection[G.mul[np.ix_(representatives, representatives)]]
    return GroupTable(mul, name=f'{G.name} / {N.order}',
                      labels=[int(r) for r in representatives])


def sylow_tower(G: GroupTable) -> Optional[tuple[int, ...]]:
    """A prime ordering along which normal Sylow subgroups peel off, if any."""
    for ordering in permutations(prime_divisors(G.order)):
        if _has_tower(G, ordering):
            return ordering
    return None


def _has_tower(G: GroupTable, ordering: Sequence[int]) -> bool:
    if not ordering:
        return G.order == 1
    P = normal_sylow(G, ordering[0])
    if P is None:
        return False
    return _has_tower(quotient_table(G, P), ordering[1:])


def has_sylow_tower(G: GroupTable) -> bool:
    return sylow_tower(G) is not None


def is_p_nilpotent(G: GroupLike, p: int) -> bool:
    require_prime(p)
    X = _as_subgroup(G)
    target = X.order // p_part(X.order, p)
    return any(H.order == target and H.issubset(X) and is_normal(X, H)
               for H in all_subgroups(X.parent))


def is_p_closed(G: GroupLike, p: int) -> bool:
    return normal_sylow(G, p) is not None


def index_kind(G: GroupLike, H: Subgroup, p: int) -> IndexKind:
    """Index 1 counts as a p-power."""
    require_prime(p)
    index = _as_subgroup(G).order // H.order
    if is_p_power(index, p):
        return IndexKind.P_POWER
    if index % p != 0:
        return IndexKind.P_COPRIME
    return IndexKind.MIXED


def p_core(G: GroupTable, p: int) -> Subgroup:
    core = G.full()
    for P in sylow_subgroups(G, p):
        core = core & P
    return core


def p_prime_core(G: GroupTable, p: int) -> Subgroup:
    candidates = [N for N in normal_subgroups(G) if N.order % p != 0]
    return max(candidates, key=lambda N: N.sort_key)


def is_p_solvable(G: GroupTable, p: int) -> bool:
    require_prime(p)
    if G.order % p != 0 or is_solvable(G):
        return True
    layer = p_core(G, p)
    if layer.is_trivial():
        layer = p_prime_core(G, p)
    if layer.is_trivial():
        return False
    return is_p_solvable(quotient_table(G, layer), p)


def product_bits(H: Subgroup, K: Subgroup) -> int:
    _check_parent(H, K)
    G = H.parent
    mask = np.zeros(G.order, dtype=bool)
    mask[G.mul[np.ix_(H.id_array, K.id_array)].ravel()] = True
    return G.subgroup_from_mask(mask).members


def conjugacy_class(G: GroupLike, H: Subgroup) -> list[Subgroup]:
    X = _as_subgroup(G)
    _check_parent(X, H)
    found: dict[int, Subgroup] = {}
    for g in X.ids:
        K = conjugate(X.parent, H, g)
        found.setdefault(K.members, K)
    return sorted(found.values(), key=lambda K: K.sort_key)
