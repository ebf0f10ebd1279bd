"""Groups acting coprimely on a :class:`GroupTable` by automorphisms.

An acting group ``A`` is stored as its image in ``Aut(G)``: which subgroups are
invariant depends only on that image, and the image order divides ``|A|``, so a
coprime ``A`` always has a coprime image. Closures are therefore required to be
coprime to ``|G|`` themselves.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Optional, Sequence

import numpy as np

from maxinv import config, exceptions
from maxinv.group import Automorphism, GroupTable, Subgroup
from maxinv.structure import (all_subgroups, maximal_elements, quotient_projection,
                              quotient_table, sylow_subgroups)
from maxinv.utils import coprime

__all__ = [
    'ActionGroup', 'Automorphism', 'action_closure', 'brute_force_automorphisms',
    'extend_to_automorphism', 'induced_action', 'invariant_subgroups', 'invariant_sylows',
    'is_invariant', 'is_invariant_under_closure', 'maximal_invariant_subgroups',
    'trivial_action',
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActionGroup:
    group: GroupTable
    elements: tuple[Automorphism, ...]
    generators: tuple[Automorphism, ...]
    name: str = 'trivial'

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    @cached_property
    def generator_images(self) -> np.ndarray:
        return _stack(self.generators, self.group.order)

    @cached_property
    def element_images(self) -> np.ndarray:
        return _stack(self.elements, self.group.order)


def _stack(automorphisms: Sequence[Automorphism], order: int) -> np.ndarray:
    if not automorphisms:
        return np.empty((0, order), dtype=np.int64)
    return np.stack([phi.array for phi in automorphisms])


def action_closure(G: GroupTable, gens: Sequence[Automorphism], cap: Optional[int] = None,
                   name: Optional[str] = None) -> ActionGroup:
    limit = config.ACTION_CLOSURE_FACTOR * config.resolve_cap(cap)
    for phi in gens:
        try:
            phi.validate(G)
        except exceptions.GroupError as e:
            raise exceptions.ActionError(str(e)) from None
    identity = Automorphism.identity(G.order)
    generators = tuple(phi for phi in dict.fromkeys(gens) if phi != identity)
    elements = [identity]
    seen = {identity}
    position = 0
    while position < len(elements):
        x = elements[position]
        position += 1
        for phi in generators:
            y = x.compose(phi)
            if y not in seen:
                if len(elements) >= limit:
                    raise exceptions.ActionError(exceptions.ACTION_TOO_LARGE % limit)
                seen.add(y)
                elements.append(y)
    if not coprime(len(elements), G.order):
        raise exceptions.ActionError(exceptions.ACTION_NOT_COPRIME % (len(elements), G.order))
    if name is None:
        name = 'trivial' if len(elements) == 1 else f'aut-{len(elements)}'
    logger.debug('action %s on %r: %d generators, order %d', name, G, len(generators), len(elements))
    return ActionGroup(G, tuple(elements), generators, name)


def trivial_action(G: GroupTable) -> ActionGroup:
    return action_closure(G, [])


def _extend(G: GroupTable, gen_ids: Sequence[int], image_ids: Sequence[int]) -> Optional[np.ndarray]:
    images = np.full(G.order, -1, dtype=np.int64)
    images[0] = 0
    visited = [0]
    position = 0
    while position < len(visited):
        x = visited[position]
        position += 1
        for g, image in zip(gen_ids, image_ids):
            y = G.mul[x, g]
            target = G.mul[images[x], image]
            if images[y] < 0:
                images[y] = target
                visited.append(y)
            elif images[y] != target:
                return None
    if (images < 0).any() or len(np.unique(images)) != G.order:
        return None
    return images


def extend_to_automorphism(G: GroupTable, gen_ids: Sequence[int],
                           image_ids: Sequence[int]) -> Automorphism:
    """The automorphism sending each generator to its image, if one exists."""
    if G.generate(gen_ids).order != G.order:
        raise exceptions.ActionError(exceptions.INVALID_AUTOMORPHISM % 'generators do not generate the group')
    images = _extend(G, gen_ids, image_ids)
    if images is None:
        raise exceptions.ActionError(exceptions.INVALID_AUTOMORPHISM % 'images do not extend to an automorphism')
    return Automorphism.from_array(images)


def brute_force_automorphisms(G: GroupTable) -> list[Automorphism]:
    limit = config.AUTOMORPHISM_SEARCH_LIMIT
    if G.order > limit:
        raise exceptions.GroupError(exceptions.GROUP_TOO_LARGE % limit)
    gens = G.generating_set()
    orders = G.element_orders
    candidates = [[y for y in range(G.order) if orders[y] == orders[g]] for g in gens]
    found = []
    for choice in product(*candidates):
        images = _extend(G, gens, choice)
        if images is not None:
            found.append(Automorphism.from_array(images))
    return sorted(found, key=lambda phi: phi.images)


def is_invariant_under_closure(H: Subgroup, A: ActionGroup) -> bool:
    images = A.element_images
    return bool(H.mask[images[:, H.id_array]].all())


def is_invariant(H: Subgroup, A: ActionGroup) -> bool:
    images = A.generator_images
    result = bool(H.mask[images[:, H.id_array]].all()) if len(images) else True
    if config.debug_checks():
        assert result == is_invariant_under_closure(H, A), 'generator and closure invariance disagree'
    return result


@lru_cache(maxsize=64)
def invariant_subgroups(G: GroupTable, A: ActionGroup) -> tuple[Subgroup, ...]:
    return tuple(H for H in all_subgroups(G) if is_invariant(H, A))


@lru_cache(maxsize=64)
def maximal_invariant_subgroups(G: GroupTable, A: ActionGroup) -> tuple[Subgroup, ...]:
    proper = [H for H in invariant_subgroups(G, A) if H.order < G.order]
    return tuple(maximal_elements(proper))


def invariant_sylows(G: GroupTable, A: ActionGroup, p: int) -> list[Subgroup]:
    return [P for P in sylow_subgroups(G, p) if is_invariant(P, A)]


def induced_action(G: GroupTable, A: ActionGroup, N: Subgroup) -> tuple[GroupTable, ActionGroup]:
    """The quotient ``G/N`` with the action ``A`` induces on it."""
    if not is_invariant(N, A):
        raise exceptions.ActionError(exceptions.NOT_INVARIANT)
    projection, representatives = quotient_projection(G, N)
    Q = quotient_table(G, N)
    gens = [Automorphism.from_array(projection[phi.array[representatives]]) for phi in A.generators]
    return Q, action_closure(Q, gens, name=A.name)
