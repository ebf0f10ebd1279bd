import pytest

from maxinv import catalog
from maxinv.structure import all_subgroups


def of_order(G, order):
    return all_subgroups(G).of_order(order)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv('MAXINV_ORDER_CAP', raising=False)
    monkeypatch.delenv('MAXINV_DEBUG_CHECKS', raising=False)


@pytest.fixture(scope='session')
def s3():
    return catalog.symmetric(3)


@pytest.fixture(scope='session')
def s4():
    return catalog.symmetric(4)


@pytest.fixture(scope='session')
def a4():
    return catalog.alternating(4)


@pytest.fixture(scope='session')
def a5():
    return catalog.alternating(5)


@pytest.fixture(scope='session')
def q8():
    return catalog.quaternion8()


@pytest.fixture(scope='session')
def remark():
    return catalog.remark_group()


@pytest.fixture(scope='session')
def f42():
    return catalog.frobenius(7, 6)


@pytest.fixture(scope='session')
def d14_act3():
    return catalog.fixture_by_name('d14-act3')


@pytest.fixture(scope='session')
def v4_act3():
    return catalog.fixture_by_name('v4-act3')


@pytest.fixture(scope='session')
def f21_act2():
    return catalog.fixture_by_name('frobenius-21')


@pytest.fixture(scope='session')
def fixtures():
    return catalog.paper_fixtures()
