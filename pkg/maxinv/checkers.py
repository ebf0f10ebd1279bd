"""Executable forms of the classification theorems, their corollaries and lemmas.

Every scan is deterministic: primes ascending, subgroups by ``(order, bitset)``,
first witness wins. Universal statements over an empty range hold with the
``vacuous`` flag set.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from maxinv.action import (ActionGroup, induced_action, invariant_subgroups, invariant_sylows,
                           is_invariant, is_invariant_under_closure,
                           maximal_invariant_subgroups, trivial_action)
from maxinv.group import GroupTable, Subgroup
from maxinv.structure import (all_subgroups, conjugacy_class, is_hall, is_nilpotent,
                              is_nilpotent_by_central_series, is_normal, is_p_closed,
                              is_p_nilpotent, is_p_solvable, is_solvable, is_ti, index_kind,
                              IndexKind, maximal_elements, normal_subgroups, normal_sylow,
                              normalizer, product_bits, sylow_subgroups, sylow_tower)
from maxinv.utils import is_prime_power, number_of_divisors, p_part, prime_divisors

logger = logging.getLogger(__name__)


class Status(Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    VACUOUS = 'vacuous'
    NOT_APPLICABLE = 'not-applicable'


class Outcome(Enum):
    EQUIVALENT = 'equivalent'
    DISCREPANCY = 'discrepancy'
    OUT_OF_HYPOTHESIS = 'out-of-hypothesis'


@dataclass(frozen=True)
class Verdict:
    name: str
    holds: bool
    vacuous: bool = False
    applicable: bool = True
    witnesses: dict[str, Subgroup] = field(default_factory=dict)
    counterexample: Optional[tuple[str, Subgroup]] = None
    detail: str = ''

    @property
    def status(self) -> Status:
        if not self.applicable:
            return Status.NOT_APPLICABLE
        if not self.holds:
            return Status.FAILS
        if self.vacuous:
            return Status.VACUOUS
        return Status.HOLDS


@dataclass(frozen=True)
class Decomposition:
    """``G = (P_1 x ... x P_{s-1}) x (P_s : V)`` with ``V = Q_1 x ... x Q_t``."""
    normal_sylows: tuple[Subgroup, ...]
    acting_factor_index: int
    nonnormal_sylows: tuple[Subgroup, ...]
    complement: Subgroup
    E: Subgroup
    admissible_roles: int = 1

    @property
    def s(self) -> int:
        return len(self.normal_sylows)

    @property
    def t(self) -> int:
        return len(self.nonnormal_sylows)

    @property
    def acting_factor(self) -> Subgroup:
        return self.normal_sylows[self.acting_factor_index]

    @property
    def central_factors(self) -> tuple[Subgroup, ...]:
        return tuple(P for i, P in enumerate(self.normal_sylows) if i != self.acting_factor_index)

    def witnesses(self) -> dict[str, Subgroup]:
        named = {f'P{i + 1}': P for i, P in enumerate(self.normal_sylows)}
        named['Ps'] = self.acting_factor
        named.update({f'Q{i + 1}': Q for i, Q in enumerate(self.nonnormal_sylows)})
        named['V'] = self.complement
        named['E'] = self.E
        return named


@dataclass(frozen=True)
class EquivalenceReport:
    name: str
    statements: dict[str, Verdict]
    equivalent: bool
    outcome: Outcome
    detail: str = ''
    decomposition: Optional[Decomposition] = None
    group: Optional[GroupTable] = None

    @property
    def holds(self) -> bool:
        return self.outcome is not Outcome.DISCREPANCY

    @property
    def counterexample(self) -> Optional[tuple[str, Subgroup]]:
        if self.holds:
            return None
        for verdict in self.statements.values():
            if verdict.counterexample is not None:
                return verdict.counterexample
        for verdict in self.statements.values():
            for label, H in verdict.witnesses.items():
                return f'{verdict.name}:{label}', H
        return ('G', self.group.full()) if self.group is not None else None


Result = Union[Verdict, EquivalenceReport]


def _commute(H: Subgroup, K: Subgroup) -> bool:
    mul = H.parent.mul
    h, k = H.id_array, K.id_array
    return bool(np.array_equal(mul[np.ix_(h, k)], mul[np.ix_(k, h)].T))


def _product(G: GroupTable, factors: Iterable[Subgroup]) -> Subgroup:
    result = G.trivial()
    for factor in factors:
        result = G.subgroup(product_bits(result, factor))
    return result


# Normalizer hypothesis

def _sylow_scan(G: GroupTable, maximal: Sequence[Subgroup],
                P: Subgroup) -> tuple[int, Subgroup, Optional[Subgroup]]:
    """(number of maximal invariant subgroups over N_G(P), N_G(P), a non-nilpotent one or None)."""
    N = normalizer(G, P)
    if N.is_full():
        return 0, N, None
    containing = [M for M in maximal if N.issubset(M)]
    return len(containing), N, next((M for M in containing if not is_nilpotent(M)), None)


def _hypothesis_failure(name: str, p: int, P: Subgroup, N: Subgroup, M: Subgroup) -> Verdict:
    return Verdict(name, False, witnesses={'sylow': P, 'normalizer': N}, counterexample=('maximal', M),
                   detail=f'non-nilpotent maximal invariant subgroup of order {M.order} '
                          f'contains the normalizer of an invariant Sylow {p}-subgroup')


def hypothesis_normalizer_nilpotent(G: GroupTable, A: ActionGroup) -> Verdict:
    """Every maximal invariant subgroup containing N_G(P), P any invariant Sylow, is nilpotent."""
    maximal = maximal_invariant_subgroups(G, A)
    qualifying = 0
    for p in prime_divisors(G.order):
        for P in invariant_sylows(G, A, p):
            count, N, bad = _sylow_scan(G, maximal, P)
            qualifying += count
            if bad is not None:
                return _hypothesis_failure('hypothesis', p, P, N, bad)
    return Verdict('hypothesis', True, vacuous=qualifying == 0)


def hypothesis_some_sylow(G: GroupTable, A: ActionGroup) -> Verdict:
    """For each prime, some invariant Sylow P has only nilpotent maximal invariant subgroups over N_G(P)."""
    maximal = maximal_invariant_subgroups(G, A)
    qualifying = 0
    for p in prime_divisors(G.order):
        failure = None
        for P in invariant_sylows(G, A, p):
            count, N, bad = _sylow_scan(G, maximal, P)
            qualifying += count
            if bad is None:
                break
            failure = failure or (P, N, bad)
        else:
            if failure is not None:
                return _hypothesis_failure('hypothesis-some', p, *failure)
    return Verdict('hypothesis-some', True, vacuous=qualifying == 0)


# Decomposition search

def _find_E(G: GroupTable, A: ActionGroup, P: Subgroup, V: Subgroup) -> Optional[Subgroup]:
    PV = G.subgroup(product_bits(P, V))
    invariant = invariant_subgroups(G, A)
    maximal = {M.members for M in maximal_elements(
        H for H in invariant if H.issubset(PV) and H.order < PV.order)}
    for E in invariant:
        if not E.issubset(P) or not is_normal(G, E):
            continue
        EV = G.subgroup(product_bits(E, V))
        if EV.members in maximal and is_nilpotent(EV):
            return E
    return None


@lru_cache(maxsize=64)
def find_decomposition(G: GroupTable, A: ActionGroup) -> Optional[Decomposition]:
    primes = prime_divisors(G.order)
    normal = {p: normal_sylow(G, p) for p in primes}
    normal_primes = [p for p in primes if normal[p] is not None]
    other_primes = [p for p in primes if normal[p] is None]
    if not normal_primes or not other_primes:
        return None
    normal_factors = tuple(normal[p] for p in normal_primes)
    choices = [invariant_sylows(G, A, q) for q in other_primes]
    for combo in product(*choices):
        if not all(_commute(Q, R) for Q, R in combinations(combo, 2)):
            continue
        V = G.generate(i for Q in combo for i in Q.ids)
        if not is_nilpotent(V):
            continue
        roles = []
        for index, P in enumerate(normal_factors):
            if not all(_commute(R, V) for i, R in enumerate(normal_factors) if i != index):
                continue
            E = _find_E(G, A, P, V)
            if E is not None:
                roles.append((index, E))
        if roles:
            index, E = roles[0]
            logger.debug('decomposition of %r: P_s of order %d, |V| = %d, |E| = %d, %d admissible roles',
                         G, normal_factors[index].order, V.order, E.order, len(roles))
            return Decomposition(normal_factors, index, tuple(combo), V, E, len(roles))
    return None


def verify_decomposition(G: GroupTable, A: ActionGroup, D: Decomposition) -> Verdict:
    name = 'decomposition-verified'

    def fail(label: str, H: Subgroup, reason: str) -> Verdict:
        return Verdict(name, False, witnesses=D.witnesses(), counterexample=(label, H), detail=reason)

    for P in D.normal_sylows:
        (p,) = prime_divisors(P.order)
        if P.order != p_part(G.order, p) or not is_normal(G, P):
            return fail('P', P, 'not a normal Sylow subgroup')
    for Q in D.nonnormal_sylows:
        (q,) = prime_divisors(Q.order)
        if Q.order != p_part(G.order, q) or is_normal(G, Q) or not is_invariant(Q, A):
            return fail('Q', Q, 'not a non-normal invariant Sylow subgroup')
    for Q, R in combinations(D.nonnormal_sylows, 2):
        if not _commute(Q, R):
            return fail('Q', R, 'Sylow factors of V do not commute')
    V = D.complement
    if V != _product(G, D.nonnormal_sylows) or not is_nilpotent(V):
        return fail('V', V, 'V is not the nilpotent product of the Q factors')
    for P in D.central_factors:
        if not _commute(P, V):
            return fail('P', P, 'direct factor does not centralize V')
    L = _product(G, D.normal_sylows)
    if not (L & V).is_trivial() or not G.subgroup(product_bits(L, V)).is_full():
        return fail('V', V, 'factorization does not reproduce G')
    P_s, E = D.acting_factor, D.E
    if not E.issubset(P_s) or not is_invariant(E, A) or not is_normal(G, E):
        return fail('E', E, 'E is not an invariant normal subgroup of P_s')
    EV = G.subgroup(product_bits(E, V))
    PV = G.subgroup(product_bits(P_s, V))
    maximal = maximal_elements(H for H in invariant_subgroups(G, A)
                               if H.issubset(PV) and H.order < PV.order)
    if not is_nilpotent(EV) or EV not in maximal:
        return fail('EV', EV, 'EV is not a nilpotent maximal invariant subgroup of P_s V')
    return Verdict(name, True, witnesses=D.witnesses())


def verify_sufficiency(G: GroupTable, A: ActionGroup, D: Decomposition) -> Verdict:
    """(P_1 x ... x P_{s-1}) x E x V is nilpotent, maximal invariant, and N_G(Q_i) for every i."""
    X = _product(G, D.central_factors + (D.E, D.complement))
    witnesses = {'X': X}
    if not is_nilpotent(X) or X not in maximal_invariant_subgroups(G, A):
        return Verdict('sufficiency', False, witnesses=witnesses, counterexample=('X', X),
                       detail='X is not a nilpotent maximal invariant subgroup')
    for i, Q in enumerate(D.nonnormal_sylows):
        N = normalizer(G, Q)
        if N != X:
            return Verdict('sufficiency', False, witnesses=witnesses,
                           counterexample=(f'N(Q{i + 1})', N), detail='normalizer differs from X')
    return Verdict('sufficiency', True, witnesses=witnesses)


def _decomposition_verdicts(G: GroupTable, A: ActionGroup) -> tuple[Optional[Decomposition], dict[str, Verdict]]:
    D = find_decomposition(G, A)
    if D is None:
        return None, {'decomposition': Verdict('decomposition', False, detail='no witness')}
    verdicts = {
        'decomposition': Verdict('decomposition', True, witnesses=D.witnesses(),
                                 detail=f's={D.s} t={D.t} admissible P_s roles={D.admissible_roles}'),
        'decomposition-verified': verify_decomposition(G, A, D),
        'sufficiency': verify_sufficiency(G, A, D),
    }
    return D, verdicts


def _verified(verdicts: dict[str, Verdict]) -> bool:
    return all(verdicts[key].holds for key in ('decomposition-verified', 'sufficiency') if key in verdicts)


# Statements about non-nilpotent maximal invariant subgroups

def _nonnilpotent_maximal(G: GroupTable, A: ActionGroup) -> list[Subgroup]:
    return [M for M in maximal_invariant_subgroups(G, A) if not is_nilpotent(M)]


def statement_nonnilpotent_normal(G: GroupTable, A: ActionGroup) -> Verdict:
    candidates = _nonnilpotent_maximal(G, A)
    for M in candidates:
        if not is_normal(G, M):
            return Verdict('statement-normal', False, counterexample=('maximal', M),
                           detail=f'non-nilpotent maximal invariant subgroup of order {M.order} is not normal')
    witnesses = {f'M{i + 1}': M for i, M in enumerate(candidates)}
    return Verdict('statement-normal', True, vacuous=not candidates, witnesses=witnesses)


def statement_nonnilpotent_ti(G: GroupTable, A: ActionGroup) -> Verdict:
    candidates = _nonnilpotent_maximal(G, A)
    for M in candidates:
        if not is_ti(G, M):
            return Verdict('statement-ti', False, counterexample=('maximal', M),
                           detail=f'non-nilpotent maximal invariant subgroup of order {M.order} is not TI')
    witnesses = {f'M{i + 1}': M for i, M in enumerate(candidates)}
    return Verdict('statement-ti', True, vacuous=not candidates, witnesses=witnesses)


def _all_maximal_nilpotent(G: GroupTable, A: ActionGroup) -> Verdict:
    candidates = _nonnilpotent_maximal(G, A)
    if candidates:
        return Verdict('all-maximal-nilpotent', False, counterexample=('maximal', candidates[0]))
    return Verdict('all-maximal-nilpotent', True, vacuous=not maximal_invariant_subgroups(G, A))


def _report(G: GroupTable, name: str, statements: dict[str, Verdict], keys: tuple[str, ...],
            notes: list[str], D: Optional[Decomposition]) -> EquivalenceReport:
    values = {statements[key].holds for key in keys}
    equivalent = len(values) == 1 and _verified(statements)
    if len(values) != 1:
        notes.insert(0, ' vs '.join(f'{key}={statements[key].holds}' for key in keys))
    elif not _verified(statements):
        notes.insert(0, 'decomposition witness failed re-verification')
    outcome = Outcome.EQUIVALENT if equivalent else Outcome.DISCREPANCY
    return EquivalenceReport(name, statements, equivalent, outcome, '; '.join(notes), D, G)


def _out_of_hypothesis(name: str) -> EquivalenceReport:
    return EquivalenceReport(name, {}, True, Outcome.OUT_OF_HYPOTHESIS, 'G is nilpotent')


def verify_thm_1_3(G: GroupTable, A: ActionGroup, name: str = 'thm1.3') -> EquivalenceReport:
    hypothesis = hypothesis_normalizer_nilpotent(G, A)
    some = hypothesis_some_sylow(G, A)
    nilpotent = is_nilpotent(G)
    D, statements = _decomposition_verdicts(G, A)
    classification = Verdict('classification', nilpotent or D is not None,
                             detail='nilpotent' if nilpotent else ('decomposition' if D else ''))
    statements.update({
        'hypothesis': hypothesis,
        'hypothesis-some': some,
        'nilpotent': Verdict('nilpotent', nilpotent),
        'classification': classification,
        'all-maximal-nilpotent': _all_maximal_nilpotent(G, A),
    })
    notes = []
    if nilpotent and D is not None:
        notes.append('nilpotent and decomposition cases overlap')
    if some.holds != hypothesis.holds:
        notes.append('quantifier readings diverge')
    return _report(G, name, statements, ('hypothesis', 'classification'), notes, D)


def verify_thm_1_9(G: GroupTable, A: ActionGroup, name: str = 'thm1.9') -> EquivalenceReport:
    if is_nilpotent(G):
        return _out_of_hypothesis(name)
    D, statements = _decomposition_verdicts(G, A)
    statements['statement-normal'] = statement_nonnilpotent_normal(G, A)
    statements['hypothesis'] = hypothesis_normalizer_nilpotent(G, A)
    return _report(G, name, statements, ('statement-normal', 'hypothesis', 'decomposition'), [], D)


def verify_cor_1_4(G: GroupTable) -> EquivalenceReport:
    return verify_thm_1_3(G, trivial_action(G), name='cor1.4')


def verify_cor_1_10(G: GroupTable) -> EquivalenceReport:
    return verify_thm_1_9(G, trivial_action(G), name='cor1.10')


def verify_thm_1_11(G: GroupTable, A: ActionGroup) -> EquivalenceReport:
    statements = {
        'statement-ti': statement_nonnilpotent_ti(G, A),
        'statement-normal': statement_nonnilpotent_normal(G, A),
    }
    return _report(G, 'thm1.11', statements, ('statement-ti', 'statement-normal'), [], None)


def verify_cor_1_12(G: GroupTable, A: ActionGroup) -> EquivalenceReport:
    if is_nilpotent(G):
        return _out_of_hypothesis('cor1.12')
    D, statements = _decomposition_verdicts(G, A)
    statements['statement-ti'] = statement_nonnilpotent_ti(G, A)
    statements['statement-normal'] = statement_nonnilpotent_normal(G, A)
    return _report(G, 'cor1.12', statements, ('statement-ti', 'statement-normal', 'decomposition'), [], D)


# Lemmas

def check_lemma_2_1(G: GroupTable, A: ActionGroup, p: Optional[int] = None) -> Verdict:
    primes = prime_divisors(G.order) if p is None else [p]
    checked = [q for q in primes if is_p_solvable(G, q)]
    maximal = maximal_invariant_subgroups(G, A)
    for q in checked:
        for H in maximal:
            if index_kind(G, H, q) is IndexKind.MIXED:
                return Verdict('lemma2.1', False, counterexample=('maximal', H),
                               detail=f'index {G.order // H.order} is mixed for p={q}')
    return Verdict('lemma2.1', True, vacuous=not (checked and maximal),
                   detail='p-solvable for ' + ','.join(map(str, checked)) if checked else 'no p-solvable prime')


def check_lemma_2_2(G: GroupTable, A: ActionGroup) -> Verdict:
    fired = [M for M in maximal_invariant_subgroups(G, A) if M.order % 2 == 1 and is_nilpotent(M)]
    if not fired:
        return Verdict('lemma2.2', True, vacuous=True)
    witnesses = {'odd-nilpotent-maximal': fired[0]}
    if not is_solvable(G):
        return Verdict('lemma2.2', False, witnesses=witnesses,
                       counterexample=('odd-nilpotent-maximal', fired[0]), detail='G is not solvable')
    return Verdict('lemma2.2', True, witnesses=witnesses)


def check_lemma_2_3(G: GroupTable, A: ActionGroup) -> Verdict:
    maximal = maximal_invariant_subgroups(G, A)
    for M in maximal:
        N = normalizer(G, M)
        if N != M and not N.is_full():
            return Verdict('lemma2.3', False, witnesses={'normalizer': N}, counterexample=('maximal', M),
                           detail='neither self-normalizing nor normal')
    return Verdict('lemma2.3', True, vacuous=not maximal)


def _not_applicable(reason: str, H: Subgroup) -> Verdict:
    return Verdict('lemma2.4', True, applicable=False, witnesses={'H': H}, detail=reason)


def check_lemma_2_4(G: GroupTable, H: Subgroup) -> Verdict:
    if not 1 < H.order < G.order:
        return _not_applicable('H is not a proper nontrivial subgroup', H)
    if not is_hall(G, H):
        return _not_applicable('H is not a Hall subgroup', H)
    if is_prime_power(H.order):
        return _not_applicable('H is a Sylow subgroup', H)
    if not is_nilpotent(H):
        return _not_applicable('H is not nilpotent', H)
    for p in prime_divisors(H.order):
        P = normal_sylow(H, p)
        if normalizer(G, P) != H:
            return _not_applicable(f'the normalizer of the Sylow {p}-subgroup of H is not H', H)
    index = G.order // H.order
    for K in normal_subgroups(G):
        if K.order == index and (K & H).is_trivial() and G.subgroup(product_bits(K, H)).is_full():
            return Verdict('lemma2.4', True, witnesses={'H': H, 'K': K})
    return Verdict('lemma2.4', False, counterexample=('H', H), detail='no normal complement')


def check_lemma_2_4_maximal(G: GroupTable, A: ActionGroup) -> Verdict:
    applied = None
    for M in maximal_invariant_subgroups(G, A):
        verdict = check_lemma_2_4(G, M)
        if not verdict.applicable:
            continue
        if not verdict.holds:
            return verdict
        applied = applied or verdict
    if applied is None:
        return Verdict('lemma2.4', True, vacuous=True, detail='no maximal invariant subgroup meets the hypotheses')
    return applied


# Downstream results

def _thm_1_1(G: GroupTable, A: ActionGroup) -> Verdict:
    maximal = maximal_invariant_subgroups(G, A)
    if is_nilpotent(G) or not all(is_nilpotent(M) for M in maximal):
        return Verdict('thm1.1', True, vacuous=True)
    primes = prime_divisors(G.order)
    normal = [P for P in (normal_sylow(G, p) for p in primes) if P is not None and is_invariant(P, A)]
    if not is_solvable(G) or len(primes) != 2 or not normal:
        return Verdict('thm1.1', False, counterexample=('G', G.full()),
                       detail=f'primes={primes} solvable={is_solvable(G)} normal invariant Sylows={len(normal)}')
    return Verdict('thm1.1', True, witnesses={'normal-sylow': normal[0]})


def _thm_1_2(G: GroupTable, A: ActionGroup) -> Verdict:
    maximal = maximal_invariant_subgroups(G, A)
    fired = [p for p in prime_divisors(G.order)
             if all(is_nilpotent(M) for M in maximal if M.order % p == 0)]
    if not fired:
        return Verdict('thm1.2', True, vacuous=True)
    if not is_solvable(G):
        return Verdict('thm1.2', False, counterexample=('G', G.full()), detail=f'antecedent holds for p={fired[0]}')
    return Verdict('thm1.2', True, detail='antecedent holds for p=' + ','.join(map(str, fired)))


def _thm_1_6(G: GroupTable, A: ActionGroup) -> Verdict:
    if not statement_nonnilpotent_normal(G, A).holds:
        return Verdict('thm1.6', True, vacuous=True)
    ordering = sylow_tower(G)
    if ordering is None:
        return Verdict('thm1.6', False, counterexample=('G', G.full()), detail='no Sylow tower')
    return Verdict('thm1.6', True, detail='tower ' + ','.join(map(str, ordering)))


def _thm_1_7(G: GroupTable, A: ActionGroup) -> Verdict:
    maximal = maximal_invariant_subgroups(G, A)
    if not all(is_nilpotent(M) or is_normal(G, M) for M in maximal):
        return Verdict('thm1.7', True, vacuous=True)
    if G.order == 1:
        return Verdict('thm1.7', True, detail='trivial group')
    for p in prime_divisors(G.order):
        if is_p_nilpotent(G, p):
            return Verdict('thm1.7', True, detail=f'{p}-nilpotent')
    return Verdict('thm1.7', False, counterexample=('G', G.full()), detail='not p-nilpotent for any prime')


def _thm_1_8(G: GroupTable, A: ActionGroup) -> Verdict:
    if not statement_nonnilpotent_normal(G, A).holds:
        return Verdict('thm1.8', True, vacuous=True)
    for p in prime_divisors(G.order):
        if not (is_p_nilpotent(G, p) or is_p_closed(G, p)):
            return Verdict('thm1.8', False, counterexample=('G', G.full()),
                           detail=f'neither {p}-nilpotent nor {p}-closed')
    return Verdict('thm1.8', True)


def check_downstream(G: GroupTable, A: ActionGroup) -> list[Verdict]:
    return [check(G, A) for check in (_thm_1_1, _thm_1_2, _thm_1_6, _thm_1_7, _thm_1_8)]


def check_quotient_inheritance(G: GroupTable, A: ActionGroup) -> Verdict:
    """The normalizer hypothesis passes to quotients by invariant normal subgroups."""
    if not hypothesis_normalizer_nilpotent(G, A).holds:
        return Verdict('quotients', True, vacuous=True)
    candidates = [N for N in normal_subgroups(G) if 1 < N.order < G.order and is_invariant(N, A)]
    for N in candidates:
        Q, B = induced_action(G, A, N)
        if not hypothesis_normalizer_nilpotent(Q, B).holds:
            return Verdict('quotients', False, counterexample=('normal-subgroup', N),
                           detail=f'hypothesis fails on the quotient of order {Q.order}')
    return Verdict('quotients', True, vacuous=not candidates, detail=f'{len(candidates)} quotients')


def check_oracles(G: GroupTable, A: ActionGroup) -> Verdict:
    def fail(label: str, H: Subgroup, reason: str) -> Verdict:
        return Verdict('oracles', False, counterexample=(label, H), detail=reason)

    lattice = all_subgroups(G)
    for H in (G.full(), *maximal_invariant_subgroups(G, A)):
        if is_nilpotent(H) != is_nilpotent_by_central_series(H):
            return fail('subgroup', H, 'nilpotency oracles disagree')
    for H in lattice:
        if G.order % H.order != 0:
            return fail('subgroup', H, 'Lagrange')
        if is_invariant(H, A) != is_invariant_under_closure(H, A):
            return fail('subgroup', H, 'generator and closure invariance disagree')
    for p in prime_divisors(G.order):
        sylows = sylow_subgroups(G, p)
        if len(sylows) % p != 1:
            return fail('sylow', sylows[0], f'Sylow {p}-count {len(sylows)} is not 1 mod {p}')
        if conjugacy_class(G, sylows[0]) != sylows:
            return fail('sylow', sylows[0], f'Sylow {p}-subgroups are not all conjugate')
        if not invariant_sylows(G, A, p):
            return fail('sylow', sylows[0], f'no invariant Sylow {p}-subgroup')
    if G.element_orders.max() == G.order and len(lattice) != number_of_divisors(G.order):
        return fail('G', G.full(), 'cyclic subgroup count differs from divisor count')
    return Verdict('oracles', True)


def _single(check: Callable[[GroupTable, ActionGroup], Result]) -> Callable[[GroupTable, ActionGroup], list[Result]]:
    return lambda G, A: [check(G, A)]


CHECKERS: dict[str, Callable[[GroupTable, ActionGroup], list[Result]]] = {
    'thm1.3':     _single(verify_thm_1_3),
    'thm1.9':     _single(verify_thm_1_9),
    'cor1.4':     lambda G, A: [verify_cor_1_4(G)],
    'cor1.10':    lambda G, A: [verify_cor_1_10(G)],
    'thm1.11':    _single(verify_thm_1_11),
    'cor1.12':    _single(verify_cor_1_12),
    'lemma2.1':   _single(check_lemma_2_1),
    'lemma2.2':   _single(check_lemma_2_2),
    'lemma2.3':   _single(check_lemma_2_3),
    'lemma2.4':   _single(check_lemma_2_4_maximal),
    'downstream': check_downstream,
    'quotients':  _single(check_quotient_inheritance),
    'oracles':    _single(check_oracles),
}

# Checkers that ignore the action and only run once per group.
ACTION_FREE = {'cor1.4', 'cor1.10'}
