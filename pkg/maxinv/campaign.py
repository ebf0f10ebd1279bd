import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Optional

from maxinv.action import ActionGroup, maximal_invariant_subgroups
from maxinv.catalog import Fixture, standard_campaign
from maxinv.checkers import (ACTION_FREE, CHECKERS, find_decomposition, statement_nonnilpotent_ti,
                             verify_thm_1_3, verify_thm_1_9)
from maxinv.group import GroupTable
from maxinv.report import CheckResult, Entry, Report, encode, fingerprint
from maxinv.structure import is_nilpotent, is_normal, is_solvable, normal_sylow
from maxinv.utils import prime_divisors

logger = logging.getLogger(__name__)


def run_checkers(G: GroupTable, A: ActionGroup, names: Optional[Iterable[str]] = None) -> list[CheckResult]:
    if names is None:
        names = [name for name in CHECKERS if A.is_trivial() or name not in ACTION_FREE]
    results = []
    for name in names:
        for result in CHECKERS[name](G, A):
            results.append(encode(name, result))
    return results


def check_expected(fixture: Fixture) -> Optional[CheckResult]:
    if not fixture.expected:
        return None
    G, A = fixture.group, fixture.primary_action
    statements = dict(verify_thm_1_3(G, A).statements)
    statements.update(verify_thm_1_9(G, A).statements)
    statements['statement-ti'] = statement_nonnilpotent_ti(G, A)
    mismatched = sorted(name for name, value in fixture.expected.items()
                        if name not in statements or statements[name].holds != value)
    status = 'fails' if mismatched else 'holds'
    return CheckResult('expected', status, {name: str(value).lower() for name, value in fixture.expected.items()},
                       detail=', '.join(mismatched))


def facts(G: GroupTable, A: ActionGroup) -> dict:
    maximal = [{'ids': list(M.ids), 'order': M.order, 'nilpotent': is_nilpotent(M), 'normal': is_normal(G, M)}
               for M in maximal_invariant_subgroups(G, A)]
    sylows = {str(p): list(P.ids) for p in prime_divisors(G.order) if (P := normal_sylow(G, p)) is not None}
    D = find_decomposition(G, A)
    decomposition = None
    if D is not None:
        decomposition = {name: list(H.ids) for name, H in D.witnesses().items()}
        decomposition['admissible_roles'] = D.admissible_roles
    return {
        'order': G.order,
        'primes': prime_divisors(G.order),
        'abelian': G.is_abelian,
        'nilpotent': is_nilpotent(G),
        'solvable': is_solvable(G),
        'action_order': A.order,
        'normal_sylows': sylows,
        'maximal_invariant': maximal,
        'decomposition': decomposition,
    }


def analyze(G: GroupTable, A: ActionGroup, fixture: str = '') -> Report:
    start = time.perf_counter()
    entry = Entry(fixture or G.name, G.name, fingerprint(G), A.name, A.order,
                  run_checkers(G, A, ['thm1.3', 'thm1.9']), facts(G, A))
    report = Report(entries=[entry]).finish()
    report.timing[entry.key] = time.perf_counter() - start
    return report


def evaluate_fixture(fixture: Fixture) -> list[tuple[Entry, float]]:
    evaluated = []
    expected = check_expected(fixture)
    for A in fixture.actions:
        start = time.perf_counter()
        results = run_checkers(fixture.group, A)
        if expected is not None and A is fixture.primary_action:
            results.append(expected)
        entry = Entry(fixture.name, fixture.group.name, fingerprint(fixture.group), A.name, A.order, results)
        evaluated.append((entry, time.perf_counter() - start))
        logger.debug('%s: %d checks', entry.key, len(results))
    return evaluated


def run_campaign(max_order: int, jobs: Optional[int] = 1) -> Report:
    start = time.perf_counter()
    fixtures = standard_campaign(max_order)
    logger.info('running %d fixtures with %s jobs', len(fixtures), jobs)
    if jobs == 1:
        batches = map(evaluate_fixture, fixtures)
        report = _collect(batches)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            report = _collect(executor.map(evaluate_fixture, fixtures))
    report.finish()
    report.timing['total'] = time.perf_counter() - start
    logger.info('campaign finished: %d entries, %d failures', len(report.entries), report.failures)
    return report


def _collect(batches: Iterable[list[tuple[Entry, float]]]) -> Report:
    report = Report()
    for batch in batches:
        for entry, seconds in batch:
            report.entries.append(entry)
            report.timing[entry.key] = seconds
    return report
