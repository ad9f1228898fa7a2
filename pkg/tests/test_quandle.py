import itertools
import threading

import pytest

from quandloid.errors import (
    ColumnNotBijective,
    DistributivityViolation,
    IdempotenceViolation,
    OutOfRange,
    OutOfRangeEntry,
    SizeCapExceeded,
)
from quandloid.quandle import (
    FiniteQuandle,
    algebraic_components,
    are_isomorphic,
    automorphism_group,
    compose,
    cycles,
    generate_group,
    identity,
    inner_group,
    invert,
    is_connected,
    is_cyclic_type,
    is_faithful,
    is_homogeneous,
    make_dihedral,
    make_tetrahedron,
    make_trivial,
    make_v3,
    quandle_inv_op,
    quandle_op,
    relabel,
    validate_table,
)

R3 = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


def brute_automorphisms(Q):
    k = Q.size
    return sorted(p for p in itertools.permutations(range(k))
                  if all(p[Q.table[x][y]] == Q.table[p[x]][p[y]] for x in range(k) for y in range(k)))


def test_validate_r3_and_t1():
    Q = validate_table(3, R3)
    assert Q.table == tuple(map(tuple, R3))
    assert validate_table(1, [[0]]).size == 1


def test_validated_value_is_immutable():
    Q = validate_table(3, R3)
    with pytest.raises(Exception):
        Q.size = 4
    with pytest.raises(TypeError):
        Q.table[0][0] = 1


def test_constant_column_rejected():
    with pytest.raises(ColumnNotBijective) as e:
        validate_table(2, [[0, 1], [0, 1]])
    y = e.value.witness[0]
    assert y in (0, 1) and len({row[y] for row in [[0, 1], [0, 1]]}) == 1


def test_idempotence_witness():
    with pytest.raises(IdempotenceViolation) as e:
        validate_table(2, [[1, 0], [0, 1]])
    assert e.value.witness[0] == 0


def test_out_of_range_entry():
    with pytest.raises(OutOfRangeEntry):
        validate_table(2, [[0, 2], [1, 1]])


def test_distributivity_witness_is_real():
    # column bijections fixing their own point, but not distributive
    table = [[0, 2, 3, 0], [1, 1, 0, 2], [2, 0, 2, 1], [3, 3, 1, 3]]
    with pytest.raises(DistributivityViolation) as e:
        validate_table(4, table)
    x, y, z = e.value.witness
    assert table[table[x][y]][z] != table[table[x][z]][table[y][z]]


def test_named_tables():
    assert make_dihedral(3).table == tuple(map(tuple, R3))
    assert make_v3().table == ((0, 0, 0), (2, 1, 1), (1, 2, 2))
    assert make_trivial(4).table == tuple((i,) * 4 for i in range(4))
    T = make_tetrahedron()
    want = [[(0,), (1, 2, 3)], [(0, 3, 2), (1,)], [(0, 1, 3), (2,)], [(0, 2, 1), (3,)]]
    assert [sorted(cycles(T.columns[y])) for y in range(4)] == want


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
def test_constructors_satisfy_axioms(n):
    for Q in (make_trivial(n), make_dihedral(n)):
        assert validate_table(Q.size, Q.table) == Q


def test_op_and_inverse():
    Q = make_dihedral(3)
    assert quandle_op(Q, 0, 1) == 2
    assert quandle_inv_op(Q, 2, 1) == 0
    for Q in (make_dihedral(5), make_v3(), make_tetrahedron()):
        for x, y in itertools.product(range(Q.size), repeat=2):
            assert quandle_op(Q, x, x) == x
            assert quandle_inv_op(Q, quandle_op(Q, x, y), y) == x
            assert quandle_op(Q, quandle_inv_op(Q, x, y), y) == x
    with pytest.raises(OutOfRange):
        quandle_op(Q, 0, 9)


def test_permutation_helpers():
    f, g = (1, 2, 0), (0, 2, 1)
    assert compose(f, g) == tuple(f[g[i]] for i in range(3))
    assert compose(f, invert(f)) == identity(3)
    assert cycles((1, 0, 2)) == [(0, 1), (2,)]
    assert generate_group(3, [(1, 0, 2), (1, 2, 0)]).order == 6


def test_automorphism_groups():
    assert automorphism_group(make_dihedral(3)).order == 6
    assert automorphism_group(make_trivial(3)).order == 6
    assert list(automorphism_group(make_v3()).elements) == [(0, 1, 2), (0, 2, 1)]


def test_automorphism_cap():
    with pytest.raises(SizeCapExceeded):
        automorphism_group(make_trivial(9))
    assert automorphism_group(make_dihedral(9), cap=9).order == 54  # x -> ax + b, a a unit mod 9


def test_inner_groups():
    assert inner_group(make_trivial(4)).order == 1
    assert inner_group(make_dihedral(3)).order == 6
    assert list(inner_group(make_v3()).elements) == [(0, 1, 2), (0, 2, 1)]


def test_components_and_flags():
    assert algebraic_components(make_dihedral(3)) == [(0, 1, 2)]
    assert algebraic_components(make_trivial(3)) == [(0,), (1,), (2,)]
    assert algebraic_components(make_v3()) == [(0,), (1, 2)]
    assert is_faithful(make_dihedral(3))
    assert not is_faithful(make_trivial(2))
    assert is_cyclic_type(make_tetrahedron())
    assert not is_cyclic_type(make_dihedral(5))
    assert is_connected(make_tetrahedron())
    assert not is_connected(make_v3())


def test_are_isomorphic():
    R = make_dihedral(3)
    assert are_isomorphic(R, R) == (0, 1, 2)
    assert are_isomorphic(R, make_trivial(3)) is None
    V = make_v3()
    p = (1, 0, 2)
    W = relabel(V, p)
    f = are_isomorphic(W, V)
    assert f == invert(p)
    assert all(f[W.table[x][y]] == V.table[f[x]][f[y]] for x in range(3) for y in range(3))


def test_group_laws_over_census(census4):
    for Q in census4 + [make_tetrahedron(), make_dihedral(5)]:
        G = automorphism_group(Q)
        assert list(G.elements) == brute_automorphisms(Q)
        assert identity(Q.size) in G
        for f in G.elements:
            assert invert(f) in G
            for g in G.elements[:5]:
                assert compose(f, g) in G
        inn = inner_group(Q)
        assert inn.is_subgroup_of(G)
        if is_connected(Q):
            assert is_homogeneous(Q)
        assert is_connected(Q) == (len(algebraic_components(Q)) == 1)


def test_concurrent_group_calls():
    Q = make_dihedral(7)
    results = []
    threads = [threading.Thread(target=lambda: results.append(automorphism_group(Q).order)) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == [42] * 4


def test_json_shape():
    assert make_v3().to_dict() == {"size": 3, "table": [[0, 0, 0], [2, 1, 1], [1, 2, 2]]}
    assert isinstance(make_v3(), FiniteQuandle)
