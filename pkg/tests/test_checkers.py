from dataclasses import replace

import pytest

from maxinv import catalog
from maxinv.action import trivial_action
from maxinv.checkers import (CHECKERS, Outcome, Status, check_downstream, check_lemma_2_1,
                             check_lemma_2_2, check_lemma_2_3, check_lemma_2_4,
                             check_lemma_2_4_maximal, check_oracles, check_quotient_inheritance,
                             find_decomposition, hypothesis_normalizer_nilpotent,
                             hypothesis_some_sylow, statement_nonnilpotent_normal,
                             statement_nonnilpotent_ti, verify_cor_1_4, verify_cor_1_10,
                             verify_cor_1_12, verify_decomposition, verify_sufficiency,
                             verify_thm_1_3, verify_thm_1_9, verify_thm_1_11)
from maxinv.structure import all_subgroups, is_nilpotent, normalizer

from conftest import of_order


def trivial(G):
    return G, trivial_action(G)


def downstream(G, A):
    return {verdict.name: verdict for verdict in check_downstream(G, A)}


def test_remark_group(remark):
    G, A = trivial(remark)
    hypothesis = hypothesis_normalizer_nilpotent(G, A)
    assert hypothesis.status is Status.HOLDS
    assert any(not is_nilpotent(M) for M in all_subgroups(G).maximal)
    normal = statement_nonnilpotent_normal(G, A)
    assert normal.status is Status.HOLDS
    assert [M.order for M in normal.witnesses.values()] == [6]


def test_remark_decomposition(remark):
    G, A = trivial(remark)
    D = find_decomposition(G, A)
    assert [P.order for P in D.normal_sylows] == [3, 5]
    assert D.acting_factor.order == 3
    assert [P.order for P in D.central_factors] == [5]
    assert [Q.order for Q in D.nonnormal_sylows] == [2]
    assert D.E.is_trivial()
    assert D.admissible_roles == 1
    assert verify_decomposition(G, A, D).holds
    sufficiency = verify_sufficiency(G, A, D)
    assert sufficiency.holds
    assert sufficiency.witnesses['X'] == normalizer(G, D.nonnormal_sylows[0])
    assert sufficiency.witnesses['X'].order == 10


@pytest.mark.parametrize('name, p_order, q_order', [('sym3', 3, 2), ('alt4', 4, 3), ('frobenius-42', 7, 6)])
def test_decomposition_witnesses(name, p_order, q_order):
    G = catalog.fixture_by_name(name).group
    A = trivial_action(G)
    D = find_decomposition(G, A)
    assert D.s == 1
    assert D.acting_factor.order == p_order
    assert D.complement.order == q_order
    assert D.E.is_trivial()
    assert verify_decomposition(G, A, D).holds
    assert verify_sufficiency(G, A, D).holds


def test_tampered_decomposition_fails(s3):
    G, A = trivial(s3)
    D = find_decomposition(G, A)
    bad = replace(D, E=D.acting_factor)
    verdict = verify_decomposition(G, A, bad)
    assert not verdict.holds
    assert verdict.counterexample[0] == 'EV'
    assert not verify_sufficiency(G, A, bad).holds


def test_no_decomposition_for_nilpotent_or_sylow_free(q8, s4):
    assert find_decomposition(*trivial(q8)) is None
    assert find_decomposition(*trivial(s4)) is None


def test_symmetric_4_negative_control(s4):
    G, A = trivial(s4)
    hypothesis = hypothesis_normalizer_nilpotent(G, A)
    assert not hypothesis.holds
    label, M = hypothesis.counterexample
    assert M.order == 6
    assert not statement_nonnilpotent_normal(G, A).holds
    assert not statement_nonnilpotent_ti(G, A).holds
    report = verify_thm_1_9(G, A)
    assert report.outcome is Outcome.EQUIVALENT
    assert {v.holds for k, v in report.statements.items()
            if k in ('statement-normal', 'hypothesis', 'decomposition')} == {False}
    assert verify_thm_1_3(G, A).equivalent


def test_d14_with_order_3_action(d14_act3):
    G, A = d14_act3.group, d14_act3.primary_action
    hypothesis = hypothesis_normalizer_nilpotent(G, A)
    assert hypothesis.status is Status.HOLDS
    report = verify_thm_1_9(G, A)
    assert report.outcome is Outcome.EQUIVALENT
    assert report.statements['statement-normal'].status is Status.VACUOUS
    assert report.statements['decomposition'].holds
    assert report.decomposition.nonnormal_sylows[0].order == 2


def test_alternating_4_is_vacuous_for_normal_statement(a4):
    verdict = statement_nonnilpotent_normal(*trivial(a4))
    assert verdict.status is Status.VACUOUS


def test_ti_statement_vacuous_on_sym3(s3):
    assert statement_nonnilpotent_ti(*trivial(s3)).status is Status.VACUOUS


@pytest.mark.parametrize('name', ['sym3', 'sym4', 'remark-1.5', 'quaternion8', 'alt4', 'alt5', 'frobenius-42'])
def test_theorem_1_3_equivalence(name):
    G = catalog.fixture_by_name(name).group
    report = verify_thm_1_3(*trivial(G))
    assert report.equivalent
    assert report.statements['hypothesis'].holds == report.statements['classification'].holds
    assert report.statements['hypothesis'].holds == report.statements['hypothesis-some'].holds


def test_all_fixture_equivalences(fixtures):
    for fixture in fixtures:
        for A in fixture.actions:
            for check in (verify_thm_1_3, verify_thm_1_9, verify_thm_1_11, verify_cor_1_12):
                report = check(fixture.group, A)
                assert report.holds, (fixture.name, A.name, report.name, report.detail)


def test_fixture_expectations(fixtures):
    for fixture in fixtures:
        G, A = fixture.group, fixture.primary_action
        statements = dict(verify_thm_1_3(G, A).statements)
        statements.update(verify_thm_1_9(G, A).statements)
        statements['statement-ti'] = statement_nonnilpotent_ti(G, A)
        for name, expected in fixture.expected.items():
            assert statements[name].holds is expected, (fixture.name, name)


def test_nilpotent_is_out_of_hypothesis(q8):
    G, A = trivial(q8)
    assert verify_thm_1_9(G, A).outcome is Outcome.OUT_OF_HYPOTHESIS
    assert verify_cor_1_12(G, A).outcome is Outcome.OUT_OF_HYPOTHESIS
    report = verify_thm_1_3(G, A)
    assert report.outcome is Outcome.EQUIVALENT
    assert report.statements['hypothesis'].status is Status.VACUOUS


def test_abelian_groups_fall_in_the_nilpotent_case():
    G, A = trivial(catalog.cyclic(6))
    report = verify_thm_1_3(G, A)
    assert report.equivalent
    assert report.decomposition is None


def test_trivial_action_corollaries(s3, s4):
    assert verify_cor_1_4(s3).equivalent
    assert verify_cor_1_10(s4).equivalent
    assert verify_cor_1_10(s3).statements['statement-normal'].status is Status.VACUOUS


def test_quantifier_readings_agree(fixtures):
    for fixture in fixtures:
        for A in fixture.actions:
            G = fixture.group
            assert hypothesis_some_sylow(G, A).holds == hypothesis_normalizer_nilpotent(G, A).holds, fixture.name


def test_existential_reading_on_symmetric_4(s4):
    verdict = hypothesis_some_sylow(*trivial(s4))
    assert verdict.status is Status.FAILS
    label, M = verdict.counterexample
    assert label == 'maximal' and M.order == 6
    assert verdict.witnesses['sylow'].order == 3
    assert hypothesis_some_sylow(*trivial(catalog.remark_group())).status is Status.HOLDS


def test_lemma_2_1(s3, s4):
    for G in (s3, s4, catalog.cyclic(12)):
        verdict = check_lemma_2_1(*trivial(G))
        assert verdict.holds and not verdict.vacuous
    assert check_lemma_2_1(*trivial(s4), p=2).holds


def test_lemma_2_2(s3, q8):
    assert check_lemma_2_2(*trivial(s3)).status is Status.HOLDS
    assert check_lemma_2_2(*trivial(q8)).status is Status.VACUOUS
    assert check_lemma_2_2(*trivial(catalog.frobenius(7, 3))).status is Status.HOLDS
    assert check_lemma_2_2(*trivial(catalog.cyclic(3))).witnesses['odd-nilpotent-maximal'].is_trivial()
    assert check_lemma_2_2(*trivial(catalog.alternating(4))).status is Status.HOLDS
    assert check_lemma_2_2(*trivial(catalog.alternating(5))).status is Status.VACUOUS


def test_lemma_2_3(s4, v4_act3):
    assert check_lemma_2_3(*trivial(s4)).holds
    assert check_lemma_2_3(*trivial(catalog.cyclic(10))).holds
    assert check_lemma_2_3(v4_act3.group, v4_act3.primary_action).holds


def test_lemma_2_4(f42, s3):
    H = of_order(f42, 6)[0]
    verdict = check_lemma_2_4(f42, H)
    assert verdict.status is Status.HOLDS
    K = verdict.witnesses['K']
    assert K.order == 7
    assert (K & H).is_trivial()
    assert check_lemma_2_4(s3, of_order(s3, 2)[0]).status is Status.NOT_APPLICABLE
    assert check_lemma_2_4(s3, s3.full()).status is Status.NOT_APPLICABLE


def test_lemma_2_4_on_maximal_subgroups(f42, s4):
    verdict = check_lemma_2_4_maximal(*trivial(f42))
    assert verdict.status is Status.HOLDS
    assert verdict.witnesses['K'].order == 7
    assert check_lemma_2_4_maximal(*trivial(s4)).status is Status.VACUOUS


def test_downstream_alternating_4(a4):
    results = downstream(*trivial(a4))
    assert results['thm1.1'].status is Status.HOLDS


def test_downstream_remark(remark):
    results = downstream(*trivial(remark))
    assert results['thm1.6'].status is Status.HOLDS
    assert results['thm1.8'].status is Status.HOLDS
    assert all(verdict.holds for verdict in results.values())


def test_downstream_symmetric_4_is_vacuous(s4):
    results = downstream(*trivial(s4))
    assert all(verdict.status is Status.VACUOUS for verdict in results.values())


def test_theorem_1_7_on_trivial_group():
    results = downstream(*trivial(catalog.trivial_group()))
    assert results['thm1.7'].status is Status.HOLDS


def test_quotient_inheritance(remark, d14_act3):
    assert check_quotient_inheritance(*trivial(remark)).status is Status.HOLDS
    assert check_quotient_inheritance(d14_act3.group, d14_act3.primary_action).holds
    assert check_quotient_inheritance(*trivial(catalog.symmetric(4))).status is Status.VACUOUS


def test_oracles(fixtures):
    for fixture in fixtures:
        for A in fixture.actions:
            assert check_oracles(fixture.group, A).holds, fixture.name


def test_registry_covers_checker_names(s3):
    G, A = trivial(s3)
    for name, check in CHECKERS.items():
        assert check(G, A), name
