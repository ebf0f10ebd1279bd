import pytest

from maxinv import catalog, exceptions
from maxinv.backend import load, parse_group_file
from maxinv.structure import all_subgroups, center, is_nilpotent, is_normal, normal_sylow

from conftest import of_order


def test_cyclic():
    assert catalog.cyclic(1).order == 1
    Z12 = catalog.cyclic(12)
    assert Z12.is_abelian and int(Z12.element_orders.max()) == 12
    assert catalog.trivial_group().name == '1'


@pytest.mark.parametrize('make, message', [
    (lambda: catalog.cyclic(0), 'constructor constraint'),
    (lambda: catalog.cyclic(400), 'group too large'),
    (lambda: catalog.dihedral(7), 'not even'),
    (lambda: catalog.symmetric(5), r'not in 1\.\.4'),
    (lambda: catalog.alternating(6), r'not in 1\.\.5'),
    (lambda: catalog.frobenius(7, 4), 'does not divide'),
    (lambda: catalog.frobenius(9, 2), 'not prime'),
    (lambda: catalog.elementary_abelian(4, 2), 'not prime'),
])
def test_constructor_constraints(make, message):
    with pytest.raises(exceptions.GroupError, match=message):
        make()


def test_cap_from_environment(monkeypatch):
    monkeypatch.setenv('MAXINV_ORDER_CAP', '10')
    with pytest.raises(exceptions.GroupError, match='cap 10'):
        catalog.cyclic(12)
    assert catalog.cyclic(12, cap=12).order == 12


def test_frobenius_21():
    G = catalog.frobenius(7, 3)
    assert G.order == 21 and G.name == 'F21'
    assert center(G).is_trivial()
    assert not is_nilpotent(G)
    assert normal_sylow(G, 7) is not None
    assert normal_sylow(G, 3) is None


@pytest.mark.parametrize('order', [6, 8, 10, 14])
def test_dihedral(order):
    G = catalog.dihedral(order)
    assert G.order == order and not G.is_abelian
    rotations = [H for H in of_order(G, order // 2)
                 if is_normal(G, H) and int(G.element_orders[H.id_array].max()) == order // 2]
    assert rotations
    assert int((G.element_orders == 2).sum()) == order // 2 + (1 if order % 4 == 0 else 0)


def test_symmetric_and_alternating(s4, a4, a5):
    assert [catalog.symmetric(k).order for k in (1, 2, 3)] == [1, 2, 6]
    assert (s4.order, a4.order, a5.order) == (24, 12, 60)
    assert all(normal_sylow(s4, p) is None for p in (2, 3))
    assert normal_sylow(a4, 2).order == 4


def test_elementary_abelian():
    G = catalog.elementary_abelian(3, 2)
    assert G.order == 9 and G.is_abelian
    assert sorted(set(int(k) for k in G.element_orders)) == [1, 3]
    assert catalog.elementary_abelian(5, 0).order == 1


def test_quaternion(q8):
    assert q8.order == 8
    assert int((q8.element_orders == 2).sum()) == 1
    assert len(of_order(q8, 2)) == 1


def test_remark_group(remark):
    assert remark.order == 30 and remark.name == 'Z5 x S3'
    assert center(remark).order == 5


def test_paper_fixtures(fixtures):
    names = [fixture.name for fixture in fixtures]
    assert len(names) == len(set(names))
    for fixture in fixtures:
        assert fixture.actions[0].is_trivial()
        assert fixture.expected
    with pytest.raises(KeyError):
        catalog.fixture_by_name('no-such-fixture')


def test_fixture_adds_trivial_action(s3):
    fixture = catalog.Fixture('s3', s3)
    assert len(fixture.actions) == 1 and fixture.primary_action.is_trivial()


@pytest.mark.parametrize('name', ['sym3', 'alt4', 'frobenius-21', 'd14-act3'])
def test_export_reloads(name):
    fixture = catalog.fixture_by_name(name)
    G, A = fixture.group, fixture.primary_action
    H = parse_group_file(catalog.export_group(G))
    assert H.fingerprint() == G.fingerprint()
    assert len(all_subgroups(H)) == len(all_subgroups(G))
    _, B = load(catalog.export_group(G), catalog.export_action(G, A))
    assert B.order == A.order


def test_campaign_respects_cap(monkeypatch):
    monkeypatch.setenv('MAXINV_ORDER_CAP', '20')
    with pytest.raises(exceptions.GroupError, match='group too large'):
        catalog.standard_campaign(24)
