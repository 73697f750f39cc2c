import pytest

from domlat import (
    Partition,
    build_hasse,
    conjugate,
    dominance_leq,
    down_arrow,
    enumerate_partitions,
    find_pentagon,
    is_chain,
    is_distributive,
    join,
    meet,
    partition_count,
    to_dot,
)
from domlat.oracles import brute_meet


def P(*parts):
    return Partition(parts)


class TestEnumerate:
    def test_weight_four(self):
        assert enumerate_partitions(4) == [
            P(4),
            P(3, 1),
            P(2, 2),
            P(2, 1, 1),
            P(1, 1, 1, 1),
        ]

    def test_weight_one(self):
        assert enumerate_partitions(1) == [P(1)]

    def test_weight_seven_count(self):
        assert len(enumerate_partitions(7)) == 15

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            enumerate_partitions(0)

    def test_descending_lex_no_duplicates(self):
        for n in range(1, 16):
            nodes = enumerate_partitions(n)
            assert all(p.weight == n for p in nodes)
            assert sorted(nodes, reverse=True) == nodes
            assert len(set(nodes)) == len(nodes)

    def test_counts_match_oracle(self):
        for n in range(1, 31):
            assert len(enumerate_partitions(n)) == partition_count(n)


class TestHasse:
    def test_weight_six_shape(self):
        d = build_hasse(6)
        assert len(d.nodes) == 11
        assert d.edge_count == 12
        assert d.top == P(6)
        assert d.bottom == P(1, 1, 1, 1, 1, 1)

    def test_weight_six_edges_golden(self):
        # the full cover relation of the 11-element diagram
        d = build_hasse(6)
        expected = {
            P(6): {P(5, 1)},
            P(5, 1): {P(4, 2)},
            P(4, 2): {P(4, 1, 1), P(3, 3)},
            P(4, 1, 1): {P(3, 2, 1)},
            P(3, 3): {P(3, 2, 1)},
            P(3, 2, 1): {P(3, 1, 1, 1), P(2, 2, 2)},
            P(3, 1, 1, 1): {P(2, 2, 1, 1)},
            P(2, 2, 2): {P(2, 2, 1, 1)},
            P(2, 2, 1, 1): {P(2, 1, 1, 1, 1)},
            P(2, 1, 1, 1, 1): {P(1, 1, 1, 1, 1, 1)},
            P(1, 1, 1, 1, 1, 1): set(),
        }
        assert {p: set(qs) for p, qs in d.cover_edges.items()} == expected

    def test_two_element_chain(self):
        d = build_hasse(2)
        assert d.nodes == (P(2), P(1, 1))
        assert d.edge_count == 1

    def test_weight_five_chain(self):
        d = build_hasse(5)
        assert len(d.nodes) == 7
        assert is_chain(d)
        assert d.edge_count == 6

    def test_chain_up_to_five(self):
        for n in range(1, 6):
            assert is_chain(build_hasse(n))
        assert not is_chain(build_hasse(6))


class TestMeetJoin:
    def test_pentagon_bottom(self):
        assert meet(P(4, 1, 1, 1), P(3, 3, 1)) == P(3, 2, 1, 1)

    def test_pentagon_top(self):
        assert join(P(4, 1, 1, 1), P(3, 3, 1)) == P(4, 2, 1)

    def test_idempotent(self):
        for p in enumerate_partitions(7):
            assert meet(p, p) == p
            assert join(p, p) == p

    def test_bottom_absorbs(self):
        bottom = P(1, 1, 1, 1, 1, 1)
        assert meet(P(6), bottom) == bottom
        assert join(P(6), bottom) == P(6)

    def test_comparable_pair(self):
        assert join(P(5, 1), P(4, 2)) == P(5, 1)

    def test_weight_mismatch(self):
        with pytest.raises(ValueError):
            meet(P(3), P(2, 2))

    def test_against_exhaustive_oracle(self):
        for n in range(1, 11):
            nodes = enumerate_partitions(n)
            for a in nodes:
                for b in nodes:
                    m = meet(a, b)
                    assert m == brute_meet(a, b)
                    j = join(a, b)
                    assert j == conjugate(brute_meet(conjugate(a), conjugate(b)))

    def test_bounds_are_bounds(self):
        for n in range(1, 9):
            nodes = enumerate_partitions(n)
            for a in nodes:
                for b in nodes:
                    m, j = meet(a, b), join(a, b)
                    assert dominance_leq(m, a) and dominance_leq(m, b)
                    assert dominance_leq(a, j) and dominance_leq(b, j)


class TestEmbedding:
    def test_order_embedding(self):
        for n in range(1, 13):
            nodes = enumerate_partitions(n)
            for a in nodes:
                for b in nodes:
                    lifted = dominance_leq(down_arrow(a, 1), down_arrow(b, 1))
                    assert dominance_leq(a, b) == lifted

    def test_sublattice(self):
        for n in range(1, 11):
            nodes = enumerate_partitions(n)
            for a in nodes:
                for b in nodes:
                    a1, b1 = down_arrow(a, 1), down_arrow(b, 1)
                    assert meet(a1, b1) == down_arrow(meet(a, b), 1)
                    assert join(a1, b1) == down_arrow(join(a, b), 1)


class TestPentagon:
    def test_absent_up_to_six(self):
        for n in range(1, 7):
            assert find_pentagon(n) is None

    def test_weight_seven(self):
        assert find_pentagon(7) == {
            P(4, 2, 1),
            P(4, 1, 1, 1),
            P(3, 3, 1),
            P(3, 2, 2),
            P(3, 2, 1, 1),
        }

    def test_weight_eight_lifts_first_column(self):
        assert find_pentagon(8) == {
            P(5, 2, 1),
            P(5, 1, 1, 1),
            P(4, 3, 1),
            P(4, 2, 2),
            P(4, 2, 1, 1),
        }

    @pytest.mark.parametrize("n", [7, 8, 9])
    def test_closed_under_meet_and_join(self, n):
        pent = find_pentagon(n)
        for a in pent:
            for b in pent:
                assert meet(a, b) in pent
                assert join(a, b) in pent

    def test_order_isomorphic_to_pentagon(self):
        pent = sorted(find_pentagon(7), reverse=True)
        comparable = sum(
            dominance_leq(a, b) + dominance_leq(b, a)
            for i, a in enumerate(pent)
            for b in pent[i + 1 :]
        )
        # a five-element non-modular lattice has exactly 8 strict
        # comparabilities: top/bottom against everyone plus one chain pair
        assert comparable == 8
        top, bottom = P(4, 2, 1), P(3, 2, 1, 1)
        chain = {P(3, 3, 1), P(3, 2, 2)}
        lone = P(4, 1, 1, 1)
        assert dominance_leq(min(chain), max(chain))
        assert not any(
            dominance_leq(lone, c) or dominance_leq(c, lone) for c in chain
        )
        assert all(dominance_leq(p, top) for p in pent)
        assert all(dominance_leq(bottom, p) for p in pent)


class TestDistributivity:
    def test_weight_six(self):
        assert is_distributive(build_hasse(6))

    def test_weight_seven(self):
        assert not is_distributive(build_hasse(7))

    def test_singleton(self):
        assert is_distributive(build_hasse(1))

    def test_guard(self):
        with pytest.raises(ValueError):
            is_distributive(build_hasse(11))


class TestDot:
    def test_two_node_export(self):
        text = to_dot(build_hasse(2))
        assert text == (
            'digraph "dominance_order_2" {\n'
            "  rankdir=TB;\n"
            '  "2";\n'
            '  "1,1";\n'
            '  "2" -> "1,1";\n'
            "}\n"
        )

    def test_counts_and_marks(self):
        d = build_hasse(6)
        text = to_dot(d, filled={P(6)}, outlined={P(3, 3)})
        assert text.count("->") == 12
        assert '"6" [style=filled fillcolor=gray85];' in text
        assert '"3,3" [peripheries=2];' in text
        assert text == to_dot(d, filled={P(6)}, outlined={P(3, 3)})
