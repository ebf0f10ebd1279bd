"""JSON report schema for single-group analyses, verifications and campaigns.

Documents are UTF-8, keys sorted, subgroups as sorted element-id lists. All
wall-clock data sits under the top-level ``"timing"`` key.
"""
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from maxinv import __version__
from maxinv.checkers import EquivalenceReport, Outcome, Result, Status, Verdict
from maxinv.group import GroupTable, Subgroup

FAILING = {Status.FAILS.value, Outcome.DISCREPANCY.value}
DOWNSTREAM = ('thm1.1', 'thm1.2', 'thm1.6', 'thm1.7', 'thm1.8')
# Checkers whose antecedent firing is counted in the summary.
TRIGGERED = DOWNSTREAM + ('lemma2.2',)


@dataclass
class CheckResult:
    checker: str
    status: str
    statements: dict[str, str] = field(default_factory=dict)
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    counterexample: Optional[dict[str, Any]] = None
    detail: str = ''

    @property
    def failed(self) -> bool:
        return self.status in FAILING


@dataclass
class Entry:
    fixture: str
    group: str
    fingerprint: list
    action: str
    action_order: int
    results: list[CheckResult] = field(default_factory=list)
    facts: Optional[dict[str, Any]] = None

    @property
    def key(self) -> str:
        return f'{self.fixture}/{self.action}'

    @property
    def sort_key(self) -> tuple:
        return self.fingerprint, self.fixture, self.action


@dataclass
class Report:
    version: str = __version__
    entries: list[Entry] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)
    timing: dict[str, float] = field(default_factory=dict)

    def finish(self) -> 'Report':
        self.entries.sort(key=lambda e: e.sort_key)
        for entry in self.entries:
            entry.results.sort(key=lambda r: r.checker)
        self.summary = summarize(self.entries)
        return self

    @property
    def failures(self) -> int:
        return self.summary.get('failures', 0)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        raw = json.loads(text)
        entries = []
        for item in raw['entries']:
            results = [CheckResult(**result) for result in item.pop('results')]
            entries.append(Entry(results=results, **item))
        return cls(raw['version'], entries, raw['summary'], raw.get('timing', {}))


def strip_timing(text: str) -> str:
    raw = json.loads(text)
    raw.pop('timing', None)
    return json.dumps(raw, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def fingerprint(G: GroupTable) -> list:
    order, counts, abelian = G.fingerprint()
    return [order, [list(pair) for pair in counts], abelian]


def _ids(H: Subgroup) -> list[int]:
    return list(H.ids)


def encode(checker: str, result: Result) -> CheckResult:
    if isinstance(result, Verdict):
        witnesses = {name: _ids(H) for name, H in result.witnesses.items()}
        counterexample = None
        if result.counterexample is not None:
            name, H = result.counterexample
            counterexample = {'name': name, 'order': H.order, 'ids': _ids(H)}
        return CheckResult(result.name if checker == 'downstream' else checker,
                           result.status.value, {}, witnesses, counterexample, result.detail)
    statements = {name: verdict.status.value for name, verdict in result.statements.items()}
    witnesses = {}
    if result.decomposition is not None:
        witnesses = {name: _ids(H) for name, H in result.decomposition.witnesses().items()}
    counterexample = None
    if result.counterexample is not None:
        name, H = result.counterexample
        counterexample = {'name': name, 'order': H.order, 'ids': _ids(H)}
    return CheckResult(checker, result.outcome.value, statements, witnesses, counterexample, result.detail)


def summarize(entries: list[Entry]) -> dict[str, Any]:
    statuses: dict[str, int] = {}
    triggers = {name: 0 for name in TRIGGERED}
    failures = []
    for entry in entries:
        for result in entry.results:
            statuses[result.status] = statuses.get(result.status, 0) + 1
            if result.checker in triggers and result.status == Status.HOLDS.value:
                triggers[result.checker] += 1
            if result.failed:
                failures.append(f'{entry.key}:{result.checker}')
    return {
        'fixtures': len({entry.fixture for entry in entries}),
        'entries': len(entries),
        'checks': sum(statuses.values()),
        'failures': len(failures),
        'failed': failures,
        'statuses': statuses,
        'vacuous': statuses.get(Status.VACUOUS.value, 0),
        'triggers': triggers,
    }


def exit_code(results: list[CheckResult]) -> int:
    """0 when the claim holds, 1 on a counterexample, 3 when out of hypothesis."""
    if any(result.failed for result in results):
        return 1
    if results and all(result.status == Outcome.OUT_OF_HYPOTHESIS.value for result in results):
        return 3
    return 0
