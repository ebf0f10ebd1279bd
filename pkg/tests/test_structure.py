from itertools import combinations

import pytest

from maxinv import catalog, exceptions
from maxinv.structure import (IndexKind, all_subgroups, center, centralizer, conjugacy_class, conjugate,
                              derived_series, derived_subgroup, has_sylow_tower, index_kind,
                              is_hall, is_nilpotent, is_nilpotent_by_central_series, is_normal,
                              is_p_closed, is_p_nilpotent, is_p_solvable, is_solvable, is_ti,
                              lower_central_series, maximal_elements, normal_subgroups,
                              normal_sylow, normalizer, quotient_table, sylow_subgroups,
                              sylow_tower)
from maxinv.utils import number_of_divisors

from conftest import of_order


@pytest.mark.parametrize('make, count', [
    (lambda: catalog.cyclic(6), 4),
    (lambda: catalog.symmetric(3), 6),
    (lambda: catalog.quaternion8(), 6),
    (lambda: catalog.dihedral(8), 10),
    (lambda: catalog.alternating(4), 10),
    (lambda: catalog.symmetric(4), 30),
])
def test_lattice_sizes(make, count):
    assert len(all_subgroups(make())) == count


def test_alternating_5_lattice(a5):
    assert len(all_subgroups(a5)) == 59


@pytest.mark.parametrize('n', range(1, 31))
def test_cyclic_lattice_matches_divisor_count(n):
    assert len(all_subgroups(catalog.cyclic(n))) == number_of_divisors(n)


def test_lattice_invariants(s4):
    lattice = all_subgroups(s4)
    assert lattice[0].is_trivial() and lattice[-1].is_full()
    for H in lattice:
        assert s4.order % H.order == 0
        assert s4.is_closed(H.members)
    for H, K in combinations(lattice.subgroups[::3], 2):
        assert H & K in lattice
        assert H.join(K) in lattice
    proper = [H for H in lattice if not H.is_full()]
    assert lattice.maximal == maximal_elements(proper)
    assert sorted(H.order for H in lattice.maximal) == [6, 6, 6, 6, 8, 8, 8, 12]


def test_lattice_respects_cap(s4):
    with pytest.raises(exceptions.GroupError, match='group too large'):
        all_subgroups(s4, cap=12)


def test_normalizer(s3):
    (C3,) = of_order(s3, 3)
    C2 = of_order(s3, 2)[0]
    assert normalizer(s3, s3.full()).is_full()
    assert normalizer(s3, C2) == C2
    assert normalizer(s3, C3).is_full()


def test_normalizer_contains_subgroup_as_normal(s4):
    for H in all_subgroups(s4):
        N = normalizer(s4, H)
        assert H.issubset(N)
        assert is_normal(N, H)


def test_centralizer_and_center(s3, q8):
    Z6 = catalog.cyclic(6)
    assert centralizer(Z6, Z6.generate([1])).is_full()
    assert center(s3).is_trivial()
    assert center(q8).order == 2


def test_is_normal(s3):
    (C3,) = of_order(s3, 3)
    assert is_normal(s3, C3)
    assert not is_normal(s3, of_order(s3, 2)[0])
    Z12 = catalog.cyclic(12)
    assert all(is_normal(Z12, H) for H in all_subgroups(Z12))
    assert len(normal_subgroups(s3)) == 3


def test_sylow_subgroups(s3, s4):
    assert len(sylow_subgroups(s3, 3)) == 1
    assert len(sylow_subgroups(s3, 2)) == 3
    sylow2 = sylow_subgroups(s4, 2)
    assert len(sylow2) == 3 and all(P.order == 8 for P in sylow2)
    assert sylow_subgroups(s3, 5) == [s3.trivial()]
    with pytest.raises(exceptions.GroupError, match='not prime'):
        sylow_subgroups(s3, 4)


@pytest.mark.parametrize('name', ['sym4', 'alt5', 'frobenius-42', 'remark-1.5'])
def test_sylow_counting_and_conjugacy(name):
    G = catalog.fixture_by_name(name).group
    for p in (2, 3, 5, 7):
        if G.order % p:
            continue
        sylows = sylow_subgroups(G, p)
        assert len(sylows) % p == 1
        assert conjugacy_class(G, sylows[0]) == sylows


def test_normal_sylow(s3, s4):
    assert normal_sylow(s3, 3).order == 3
    assert normal_sylow(s3, 2) is None
    assert all(normal_sylow(s4, p) is None for p in (2, 3))


@pytest.mark.parametrize('name, nilpotent', [
    ('sym3', False), ('quaternion8', True), ('v4-act3', True), ('alt4', False), ('remark-1.5', False),
])
def test_nilpotency_oracles_agree(name, nilpotent):
    G = catalog.fixture_by_name(name).group
    assert is_nilpotent(G) is nilpotent
    assert is_nilpotent_by_central_series(G) is nilpotent


def test_nilpotency_of_subgroups(s4):
    for H in all_subgroups(s4):
        assert is_nilpotent(H) == is_nilpotent_by_central_series(H)


def test_abelian_groups_are_nilpotent():
    for n in (1, 7, 12, 30):
        assert is_nilpotent(catalog.cyclic(n))


def test_derived_subgroups(s3, s4, a5):
    assert derived_subgroup(catalog.cyclic(8)).is_trivial()
    assert derived_subgroup(s3).order == 3
    assert is_solvable(s3)
    assert [H.order for H in derived_series(s4)] == [24, 12, 4, 1]
    assert derived_subgroup(a5).is_full()
    assert not is_solvable(a5)


def test_lower_central_series(q8, s3):
    assert [H.order for H in lower_central_series(q8)] == [8, 2, 1]
    assert [H.order for H in lower_central_series(s3)] == [6, 3]


def test_is_hall(s3):
    assert is_hall(s3, s3.full())
    assert is_hall(s3, of_order(s3, 2)[0])
    Z4 = catalog.cyclic(4)
    assert not is_hall(Z4, of_order(Z4, 2)[0])


def test_is_ti(s3, s4):
    (C3,) = of_order(s3, 3)
    assert is_ti(s3, C3)
    assert is_ti(s3, of_order(s3, 2)[0])
    assert not is_ti(s4, sylow_subgroups(s4, 2)[0])
    for H in normal_subgroups(s4):
        assert is_ti(s4, H)


def test_sylow_tower(s3, s4, q8, remark):
    assert has_sylow_tower(q8)
    assert sylow_tower(s3) == (3, 2)
    assert not has_sylow_tower(s4)
    assert sylow_tower(remark) == (3, 2, 5)


def test_p_nilpotent_and_p_closed(s3):
    assert is_p_nilpotent(s3, 2) and not is_p_closed(s3, 2)
    assert is_p_closed(s3, 3)
    Z10 = catalog.cyclic(10)
    assert all(is_p_nilpotent(Z10, p) and is_p_closed(Z10, p) for p in (2, 5))


def test_quotients(s3, s4):
    assert quotient_table(s3, s3.full()).order == 1
    (C3,) = of_order(s3, 3)
    assert quotient_table(s3, C3).order == 2
    (V,) = [H for H in of_order(s4, 4) if is_normal(s4, H)]
    Q = quotient_table(s4, V)
    assert Q.order == 6 and not Q.is_abelian
    with pytest.raises(exceptions.GroupError, match='not normal'):
        quotient_table(s3, of_order(s3, 2)[0])


def test_index_kind(s3, a4):
    assert index_kind(s3, s3.full(), 2) is IndexKind.P_POWER
    assert index_kind(s3, of_order(s3, 2)[0], 2) is IndexKind.P_COPRIME
    assert index_kind(a4, a4.trivial(), 2) is IndexKind.MIXED


def test_p_solvable(s4, a5):
    assert all(is_p_solvable(s4, p) for p in (2, 3))
    assert not any(is_p_solvable(a5, p) for p in (2, 3, 5))
    assert is_p_solvable(a5, 7)


def test_conjugate(s4):
    P = sylow_subgroups(s4, 3)[0]
    images = {conjugate(s4, P, g) for g in range(s4.order)}
    assert images == set(sylow_subgroups(s4, 3))
    assert all(conjugate(s4, P, g) == P for g in normalizer(s4, P).ids)
