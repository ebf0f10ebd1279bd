"""Standard group families, named fixtures and the campaign generator."""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from sympy import n_order, primitive_root, primerange

from maxinv import config, exceptions
from maxinv.action import ActionGroup, action_closure, extend_to_automorphism, trivial_action
from maxinv.group import (Automorphism, GroupTable, Permutation, closure_from_generators,
                          direct_product, semidirect_product)
from maxinv.structure import all_subgroups
from maxinv.utils import coprime, require_prime

logger = logging.getLogger(__name__)


# constructors

def cyclic(n: int, cap: Optional[int] = None) -> GroupTable:
    if n < 1:
        raise exceptions.GroupError(exceptions.CONSTRAINT_VIOLATION % f'cyclic order {n} < 1')
    if n > config.resolve_cap(cap):
        raise exceptions.GroupError(exceptions.GROUP_TOO_LARGE % config.resolve_cap(cap))
    ids = np.arange(n)
    return GroupTable((ids[:, None] + ids[None, :]) % n, name=f'Z{n}')


def trivial_group() -> GroupTable:
    G = cyclic(1)
    G.name = '1'
    return G


def _multiplication(n: int, k: int) -> Automorphism:
    return Automorphism.from_array(np.arange(n) * k % n)


def dihedral(order: int, cap: Optional[int] = None) -> GroupTable:
    """Dihedral group of the given (even) order, as ``Z_n : Z_2`` with inversion."""
    if order < 2 or order % 2:
        raise exceptions.GroupError(exceptions.CONSTRAINT_VIOLATION % f'dihedral order {order} is not even')
    n = order // 2
    act = [Automorphism.identity(n), _multiplication(n, -1)]
    return semidirect_product(cyclic(n), cyclic(2), act, cap=cap, name=f'D{order}')


def symmetric(k: int, cap: Optional[int] = None) -> GroupTable:
    if not 1 <= k <= 4:
        raise exceptions.GroupError(exceptions.CONSTRAINT_VIOLATION % f'symmetric degree {k} not in 1..4')
    gens = []
    if k >= 2:
        gens = [Permutation.from_cycles([[0, 1]], k), Permutation.from_cycles([list(range(k))], k)]
    return closure_from_generators(gens, k, cap, name=f'S{k}')


def alternating(k: int, cap: Optional[int] = None) -> GroupTable:
    if not 1 <= k <= 5:
        raise exceptions.GroupError(exceptions.CONSTRAINT_VIOLATION % f'alternating degree {k} not in 1..5')
    gens = [Permutation.from_cycles([[0, 1, i]], k) for i in range(2, k)]
    return closure_from_generators(gens, k, cap, name=f'A{k}')


def quaternion8() -> GroupTable:
    gens = [Permutation.from_cycles([[0, 1, 2, 3], [4, 5, 6, 7]], 8),
            Permutation.from_cycles([[0, 4, 2, 6], [1, 7, 3, 5]], 8)]
    return closure_from_generators(gens, 8, name='Q8')


def elementary_abelian(p: int, k: int, cap: Optional[int] = None) -> GroupTable:
    require_prime(p)
    if k < 0:
        raise exceptions.GroupError(exceptions.CONSTRAINT_VIOLATION % f'rank {k} < 0')
    G = cyclic(1)
    for _ in range(k):
        G = direct_product(G, cyclic(p), cap=cap) if G.order > 1 else cyclic(p, cap)
    G.name = f'Z{p}^{k}'
    return G


def frobenius(p: int, q: int, cap: Optional[int] = None) -> GroupTable:
    """``Z_p : Z_q`` with a faithful action; requires ``q | p - 1``."""
    require_prime(p)
    if q < 1 or (p - 1) % q:
        raise exceptions.GroupError(exceptions.CONSTRAINT_VIOLATION % f'{q} does not divide {p} - 1')
    r = pow(int(primitive_root(p)), (p - 1) // q, p)
    act = [_multiplication(p, pow(r, h, p)) for h in range(q)]
    return semidirect_product(cyclic(p), cyclic(q), act, cap=cap, name=f'F{p * q}')


def remark_group() -> GroupTable:
    """``Z_5 x (Z_3 : Z_2)``: hypothesis holds yet a maximal subgroup is non-nilpotent."""
    return direct_product(cyclic(5), dihedral(6), name='Z5 x S3')


# fixtures

@dataclass
class Fixture:
    name: str
    group: GroupTable
    actions: list[ActionGroup] = field(default_factory=list)
    # Statement name -> expected truth, for the last (curated) action.
    expected: dict[str, bool] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not any(A.is_trivial() for A in self.actions):
            self.actions.insert(0, trivial_action(self.group))

    @property
    def primary_action(self) -> ActionGroup:
        return self.actions[-1]


def _d14_action(G: GroupTable) -> ActionGroup:
    # ids are n * 2 + h: r = 2, s = 1, r^2 = 4
    return action_closure(G, [extend_to_automorphism(G, [2, 1], [4, 1])], name='r->r^2')


def _v4_action(G: GroupTable) -> ActionGroup:
    return action_closure(G, [extend_to_automorphism(G, [1, 2], [2, 3])], name='cycle-involutions')


def _f21_action(G: GroupTable) -> ActionGroup:
    # ids are n * 3 + h: a = 3, a^-1 = 18, b = 1
    return action_closure(G, [extend_to_automorphism(G, [3, 1], [18, 1])], name='invert-7')


def paper_fixtures() -> list[Fixture]:
    d14 = dihedral(14)
    v4 = elementary_abelian(2, 2)
    f21 = frobenius(7, 3)
    return [
        Fixture('remark-1.5', remark_group(), expected={
            'hypothesis': True, 'all-maximal-nilpotent': False, 'statement-normal': True}),
        Fixture('sym3', symmetric(3), expected={'hypothesis': True, 'decomposition': True}),
        Fixture('sym4', symmetric(4), expected={
            'hypothesis': False, 'statement-normal': False, 'statement-ti': False, 'decomposition': False}),
        Fixture('alt4', alternating(4), expected={'all-maximal-nilpotent': True, 'decomposition': True}),
        Fixture('d14-act3', d14, [_d14_action(d14)], expected={
            'hypothesis': True, 'statement-normal': True, 'decomposition': True}),
        Fixture('v4-act3', v4, [_v4_action(v4)], expected={'nilpotent': True}),
        Fixture('frobenius-42', frobenius(7, 6), expected={'decomposition': True}),
        Fixture('frobenius-21', f21, [_f21_action(f21)], expected={'decomposition': True}),
        Fixture('quaternion8', quaternion8(), expected={'nilpotent': True}),
        Fixture('alt5', alternating(5), expected={'hypothesis': False, 'decomposition': False}),
    ]


def fixture_by_name(name: str) -> Fixture:
    for fixture in paper_fixtures():
        if fixture.name == name:
            return fixture
    raise KeyError(name)


def _cyclic_actions(G: GroupTable) -> list[ActionGroup]:
    # The largest group of multipliers x -> kx whose order is coprime to n.
    n = G.order
    best = None
    for k in range(2, n):
        if not coprime(k, n):
            continue
        m = int(n_order(k, n))
        if coprime(m, n) and (best is None or m > best[1]):
            best = (k, m)
    if best is None:
        return []
    k, m = best
    return [action_closure(G, [_multiplication(n, k)], name=f'x->{k}x')]


def _families(max_order: int) -> list[GroupTable]:
    groups = [cyclic(n) for n in range(1, max_order + 1)]
    groups += [dihedral(order) for order in range(6, max_order + 1, 2)]
    for p in primerange(2, max_order + 1):
        k = 2
        while p ** k <= max_order:
            groups.append(elementary_abelian(p, k))
            k += 1
        for q in range(2, p):
            if (p - 1) % q == 0 and p * q <= max_order:
                groups.append(frobenius(p, q))
    if max_order >= 8:
        groups.append(quaternion8())
    groups += [G for G in (symmetric(4), alternating(4)) if G.order <= max_order]
    if max_order >= 60:
        groups.append(alternating(5))
    return groups


def _products(bases: list[GroupTable], max_order: int) -> list[GroupTable]:
    found = []
    for i, G in enumerate(bases):
        for H in bases[i:]:
            if G.order > 1 and H.order > 1 and G.order * H.order <= max_order:
                found.append(direct_product(G, H))
    return found


def standard_campaign(max_order: int) -> list[Fixture]:
    cap = config.order_cap()
    if max_order > cap:
        raise exceptions.GroupError(exceptions.GROUP_TOO_LARGE % cap)
    candidates = [F for F in paper_fixtures() if F.group.order <= max_order]
    bases = _families(max_order)
    for G in bases + _products(bases, max_order):
        actions = _cyclic_actions(G) if G.name.startswith('Z') and G.name[1:].isdigit() else []
        candidates.append(Fixture(G.name, G, actions))

    kept: list[Fixture] = []
    buckets: dict[tuple, list[Fixture]] = {}
    counts: dict[int, int] = {}

    def subgroup_count(F: Fixture) -> int:
        # Each lattice is counted once.
        if id(F) not in counts:
            counts[id(F)] = len(all_subgroups(F.group))
        return counts[id(F)]

    for fixture in candidates:
        G = fixture.group
        bucket = buckets.setdefault(G.fingerprint(), [])
        # Abelian groups are determined by their element orders.
        if bucket and (G.is_abelian or any(subgroup_count(F) == subgroup_count(fixture) for F in bucket)):
            continue
        bucket.append(fixture)
        kept.append(fixture)
    logger.info('campaign up to order %d: %d fixtures from %d candidates', max_order, len(kept), len(candidates))
    return kept


# export to the file formats

def _regular(G: GroupTable, x: int) -> Permutation:
    # Right multiplication; composes left to right like the group.
    return Permutation(tuple(int(y) for y in G.mul[:, x]))


def export_group(G: GroupTable) -> str:
    lines = [f'# {G.name or "group"} of order {G.order}', f'points: {G.order}']
    lines += [f'gen: {_regular(G, g)}' for g in G.generating_set()]
    return '\n'.join(lines) + '\n'


def export_action(G: GroupTable, A: ActionGroup) -> str:
    gens = G.generating_set()
    lines = [f'# action {A.name} of order {A.order}']
    for phi in A.generators:
        images = '; '.join(f'g{i} -> {_regular(G, phi(g))}' for i, g in enumerate(gens))
        lines.append(f'aut: {images}')
    return '\n'.join(lines) + '\n'
