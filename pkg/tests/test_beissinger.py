from itertools import permutations

import pytest

from gelfand_wgraphs.beissinger import (
    PsiStats,
    cbs_insert,
    p_cbs,
    p_cbs_inverse,
    p_rbs,
    p_rbs_inverse,
    psi,
    psi_cycle_stats,
    psi_orbit,
    rbs_insert,
    simcbs_partner,
    simrbs_partner,
)
from gelfand_wgraphs.perm import Involution, cycles_sorted, enumerate_involutions
from gelfand_wgraphs.tableau import (
    EMPTY,
    Tableau,
    dual_equiv,
    odd_lines,
    pq_rs,
    standard_tableaux,
    transpose,
)


def T(rows):
    return Tableau(rows)


def inv(word):
    return Involution(word)


def test_rbs_insert_examples():
    assert rbs_insert(T([[2, 4], [3]]), 5, 5) == T([[2, 4, 5], [3]])
    assert rbs_insert(T([[1, 3], [4]]), 2, 5) == T([[1, 2], [3], [4], [5]])
    assert rbs_insert(T([[1, 4], [3]]), 2, 5) == T([[1, 2], [3, 4], [5]])
    assert rbs_insert(T([[1, 4, 6], [3]]), 2, 5) == T([[1, 2, 6], [3, 4], [5]])
    assert rbs_insert(T([[1, 2, 3], [4]]), 5, 5) == T([[1, 2, 3, 5], [4]])
    # fixed-point case appends to row 1 whatever is there already
    assert rbs_insert(T([[2, 3], [4]]), 5, 5) == T([[2, 3, 5], [4]])


def test_cbs_insert_examples():
    assert cbs_insert(T([[2, 3], [4]]), 5, 5) == T([[2, 3], [4], [5]])
    assert cbs_insert(T([[1, 4], [3]]), 2, 5) == T([[1, 2, 5], [3, 4]])
    assert cbs_insert(T([[1, 2, 3], [4]]), 5, 5) == T([[1, 2, 3], [4], [5]])
    # arbitrary pairs can leave a non-standard filling, exactly as defined
    out = cbs_insert(T([[1, 4, 6], [3]]), 2, 5)
    assert out.rows == ((1, 2, 6), (3, 4, 5))
    assert not out.is_partially_standard()


def test_insert_error_cases():
    with pytest.raises(ValueError):
        rbs_insert(T([[1, 2]]), 2, 5)
    with pytest.raises(ValueError):
        cbs_insert(T([[1, 2]]), 5, 3)
    with pytest.raises(ValueError):
        cbs_insert(T([[1, 2]]), 3, 5, "sideways")


def test_transposed_variant_is_transpose_conjugate():
    # checked along every p-map insertion order up to n=7, where the native
    # column-bumping path is exercised against the row implementation
    for n in range(1, 8):
        for y in enumerate_involutions(n):
            U = EMPTY
            for a, b in cycles_sorted(y):
                lhs = cbs_insert(U, a, b, "transposed")
                assert lhs == transpose(cbs_insert(transpose(U), a, b, "standard"))
                U = lhs


def test_p_rbs_examples():
    assert p_rbs(inv([4, 2, 3, 1])) == T([[1, 3], [2], [4]])
    assert p_rbs(inv([1])) == T([[1]])
    assert p_rbs(inv([2, 1])) == T([[1], [2]])


def test_p_cbs_examples():
    assert p_cbs(inv([4, 2, 3, 1])) == T([[1, 4], [2], [3]])
    assert p_cbs(inv([1, 2, 3])) == T([[1], [2], [3]])
    assert p_cbs(inv([2, 1, 4, 3])) == T([[1, 2, 3, 4]])
    assert p_cbs(inv([4, 3, 2, 1])) == T([[1, 3], [2, 4]])


def test_p_cbs_inverse_examples():
    assert p_cbs_inverse(T([[1, 4], [2], [3]])) == inv([4, 2, 3, 1])
    assert p_cbs_inverse(T([[1], [2], [3]])) == inv([1, 2, 3])
    assert p_cbs_inverse(T([[1, 2, 3], [4]])).cycle_string() == "(2,3)"
    with pytest.raises(ValueError):
        p_cbs_inverse(T([[2, 3], [4]]))


def test_p_rbs_inverse_examples():
    assert p_rbs_inverse(T([[1, 3], [2], [4]])) == inv([4, 2, 3, 1])
    assert p_rbs_inverse(T([[1]])) == inv([1])
    assert p_rbs_inverse(T([[1, 2], [3, 4]])) == inv([3, 4, 1, 2])
    with pytest.raises(ValueError):
        p_rbs_inverse(T([[2, 3], [4]]))


def test_p_rbs_equals_rs_tableau():
    for n in range(1, 9):
        for y in enumerate_involutions(n):
            assert p_rbs(y) == pq_rs(y.perm)[0]


def test_bijections_with_parity_refinement():
    for n in range(1, 9):
        syt = {t.rows for t in standard_tableaux(n)}
        seen_r, seen_c = set(), set()
        for y in enumerate_involutions(n):
            k = len(y.fixed_points())
            tr, tc = p_rbs(y), p_cbs(y)
            seen_r.add(tr.rows)
            seen_c.add(tc.rows)
            assert odd_lines(tr, "columns") == k
            assert odd_lines(tc, "rows") == k
        assert seen_r == syt
        assert seen_c == syt


def test_round_trips():
    for n in range(1, 9):
        for y in enumerate_involutions(n):
            assert p_rbs_inverse(p_rbs(y)) == y
            assert p_cbs_inverse(p_cbs(y)) == y


def test_psi_examples():
    assert psi(Involution.from_cycles(4, [(1, 3)])) == Involution.from_cycles(4, [(2, 3)])
    assert psi(Involution.from_cycles(4, [(1, 2), (3, 4)])) == Involution.from_cycles(4, [(1, 3), (2, 4)])
    assert psi(Involution.identity(4)) == Involution.identity(4)
    orbit = psi_orbit(Involution.from_cycles(4, [(1, 4)]))
    assert [z.cycle_string() for z in orbit] == ["(1,4)", "(2,4)", "(3,4)"]
    orbit2 = psi_orbit(Involution.from_cycles(4, [(1, 2), (3, 4)]))
    assert [z.cycle_string() for z in orbit2] == ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]


def test_psi_cycle_stats_examples():
    st = psi_cycle_stats(5)
    assert st.longest_cycle == 12
    assert [f.word for f in st.fixed_points] == [(1, 2, 3, 4, 5), (2, 1, 3, 4, 5)]
    assert psi_cycle_stats(1) == PsiStats(1, (Involution.identity(1),), (1,))
    assert psi_cycle_stats(6).longest_cycle == 15


def test_psi_preserves_fixed_point_count():
    for n in range(1, 9):
        for y in enumerate_involutions(n):
            assert len(psi(y).fixed_points()) == len(y.fixed_points())


def test_psi_commutes_with_inclusion():
    for n in range(1, 7):
        for y in enumerate_involutions(n):
            bigger = Involution(y.word + (n + 1,))
            assert psi(bigger) == Involution(psi(y).word + (n + 1,))


def test_simrbs_partner_examples():
    assert simrbs_partner(inv([4, 2, 3, 1]), 3) == inv([3, 2, 1, 4])
    assert simrbs_partner(inv([4, 2, 3, 1]), 2) == inv([1, 4, 3, 2])
    assert simrbs_partner(inv([1, 2, 3]), 2) == inv([1, 2, 3])
    with pytest.raises(ValueError):
        simrbs_partner(inv([1, 2, 3]), 1)


def test_simcbs_partner_examples():
    assert simcbs_partner(inv([4, 2, 3, 1]), 2) == inv([4, 2, 3, 1])
    assert simcbs_partner(inv([4, 2, 3, 1]), 3) == inv([3, 2, 1, 4])
    assert simcbs_partner(inv([1, 2, 3]), 2) == inv([1, 2, 3])
    assert p_cbs(inv([3, 2, 1, 4])) == T([[1, 3], [2], [4]])
    assert dual_equiv(T([[1, 3], [2], [4]]), 3) == T([[1, 4], [2], [3]])
    with pytest.raises(ValueError):
        simcbs_partner(inv([1, 2, 3]), 3)


def partner_by_search(tabs, i, y):
    target = tabs[y]
    found = [z for z, t in tabs.items() if dual_equiv(t, i) == target]
    assert len(found) == 1
    return found[0]


def test_partner_formulas_match_search():
    for n in range(3, 7):
        invs = list(enumerate_involutions(n))
        rt = {y: p_rbs(y) for y in invs}
        ct = {y: p_cbs(y) for y in invs}
        for y in invs:
            for i in range(2, n):
                zr = simrbs_partner(y, i)
                assert zr == partner_by_search(rt, i, y)
                assert simrbs_partner(zr, i) == y
                zc = simcbs_partner(y, i)
                assert zc == partner_by_search(ct, i, y)
                assert simcbs_partner(zc, i) == y
