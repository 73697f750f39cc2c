import pytest

from domlat import (
    IrreducibleLayer,
    IrreducibleType,
    Partition,
    build_hasse,
    classify_irreducible,
    conjugate,
    count_closed,
    count_recursive,
    enumerate_partitions,
    exceptional_sets,
    irreducible_son,
    join_irreducibles,
    meet_irreducibles,
    next_layer,
    sons,
)
from domlat.irreducibles import LayerOverlapError
from domlat.oracles import brute_join_irreducibles


def P(*parts):
    return Partition(parts)


J6 = {
    P(2, 1, 1, 1, 1),
    P(2, 2, 1, 1),
    P(2, 2, 2),
    P(3, 1, 1, 1),
    P(3, 3),
    P(4, 1, 1),
    P(5, 1),
    P(6),
}

M6 = {
    P(1, 1, 1, 1, 1, 1),
    P(2, 1, 1, 1, 1),
    P(2, 2, 2),
    P(3, 1, 1, 1),
    P(3, 3),
    P(4, 1, 1),
    P(4, 2),
    P(5, 1),
}


class TestClassifyIrreducible:
    @pytest.mark.parametrize(
        "parts,expected",
        [
            ((2, 2, 1, 1), IrreducibleType("B", k=2, m=2, l=2)),
            ((4, 1, 1), IrreducibleType("C", k=4, m=1, l=2)),
            ((6,), IrreducibleType("A", k=6, m=1)),
            ((5, 4, 1, 1), IrreducibleType("D", k=3, m=1, l=1, s=2)),
        ],
    )
    def test_examples(self, parts, expected):
        assert classify_irreducible(P(*parts)) == expected

    @pytest.mark.parametrize("parts", [(4, 2), (1, 1, 1), (3, 2, 1), (3, 2, 2)])
    def test_non_irreducible(self, parts):
        assert classify_irreducible(P(*parts)) is None

    def test_reconstruction(self):
        for n in range(2, 20):
            for p in enumerate_partitions(n):
                typ = classify_irreducible(p)
                if typ is not None:
                    assert typ.partition() == p

    def test_soundness_vs_cover_counting(self):
        # a non-bottom partition matches a type iff it covers exactly one
        for n in range(1, 26):
            diagram = build_hasse(n)
            for p in diagram.nodes:
                matched = classify_irreducible(p) is not None
                assert matched == (len(diagram.cover_edges[p]) == 1), p

    def test_invalid_parameters_rejected(self):
        with pytest.raises(ValueError):
            IrreducibleType("A", k=1, m=1)
        with pytest.raises(ValueError):
            IrreducibleType("C", k=2, m=1, l=1)
        with pytest.raises(ValueError):
            IrreducibleType("D", k=2, m=1, l=1)


class TestIrreducibleSon:
    def test_staircase_takes_right_son(self):
        assert irreducible_son(P(2, 1, 1, 1)) == P(2, 2, 1, 1)

    def test_single_column(self):
        assert irreducible_son(P(6)) == P(7)

    def test_plateau_grows_first_column(self):
        assert irreducible_son(P(3, 3)) == P(4, 3)
        # (4,3) covers exactly one element of the weight-7 diagram
        diagram = build_hasse(7)
        assert len(diagram.cover_edges[P(4, 3)]) == 1

    def test_rejects_non_irreducible(self):
        with pytest.raises(ValueError):
            irreducible_son(P(4, 2))

    def test_injective(self):
        for n in range(2, 26):
            members = join_irreducibles(n).members
            images = {irreducible_son(p) for p in members}
            assert len(images) == len(members)

    def test_exactly_one_irreducible_son(self):
        for n in range(3, 16):
            members = join_irreducibles(n).members
            above = join_irreducibles(n + 1).members
            staircase = P(*((2,) + (1,) * (n - 2)))
            for p in members:
                left, right = sons(p)
                hits = sum(q in above for q in (left, right) if q is not None)
                assert hits == (2 if p == staircase else 1), p


class TestExceptionalSets:
    def test_weight_seven(self):
        e1, e2 = exceptional_sets(7)
        assert e1 == {P(2, 1, 1, 1, 1, 1)}
        assert e2 == {P(3, 3, 1), P(3, 1, 1, 1, 1)}

    def test_weight_four(self):
        assert exceptional_sets(4) == ({P(2, 1, 1)}, {P(3, 1)})

    def test_sizes(self):
        for target in range(4, 40):
            e1, e2 = exceptional_sets(target)
            assert len(e1) == 1
            assert len(e2) == (target - 1) // 3


class TestLayers:
    def test_layer_progression(self):
        layer = join_irreducibles(6)
        assert layer.members == J6
        layer7 = next_layer(layer)
        assert len(layer7.members) == 11
        assert len(next_layer(layer7).members) == 14

    def test_small_seed(self):
        assert join_irreducibles(1).members == frozenset()
        assert join_irreducibles(2).members == {P(2)}
        layer4 = next_layer(join_irreducibles(3))
        assert len(layer4.members) == 4

    def test_buckets_partition_members(self):
        for n in range(2, 15):
            layer = join_irreducibles(n)
            combined = frozenset().union(*layer.buckets.values()) if layer.buckets else frozenset()
            assert combined == layer.members
            assert sum(len(b) for b in layer.buckets.values()) == len(layer.members)

    def test_matches_brute_force(self):
        for n in range(1, 26):
            assert join_irreducibles(n).members == brute_join_irreducibles(n)

    def test_overlap_is_signalled(self):
        # a smuggled-in (3,2,1) sends its right son onto (3,3,1), which the
        # exceptional family of weight 7 also contributes
        good = join_irreducibles(6)
        corrupted = IrreducibleLayer.from_members(6, good.members | {P(3, 2, 1)})
        with pytest.raises(LayerOverlapError):
            next_layer(corrupted)

    def test_weight_guard(self):
        with pytest.raises(ValueError):
            next_layer(join_irreducibles(2))


class TestMeetIrreducibles:
    def test_weight_six(self):
        assert meet_irreducibles(6) == M6

    def test_weight_two(self):
        assert meet_irreducibles(2) == {P(1, 1)}

    def test_weight_seven_count(self):
        assert len(meet_irreducibles(7)) == 11

    def test_conjugation_duality(self):
        for n in range(1, 21):
            assert meet_irreducibles(n) == {
                conjugate(p) for p in join_irreducibles(n).members
            }

    def test_covered_by_exactly_one(self):
        for n in range(1, 21):
            diagram = build_hasse(n)
            indegree = {p: 0 for p in diagram.nodes}
            for p in diagram.nodes:
                for q in diagram.cover_edges[p]:
                    indegree[q] += 1
            assert meet_irreducibles(n) == {p for p, d in indegree.items() if d == 1}


class TestCounts:
    def test_recursive_table(self):
        assert [count_recursive(n) for n in range(1, 9)] == [0, 1, 2, 4, 6, 8, 11, 14]

    def test_closed_table(self):
        assert count_closed(6) == 8
        assert count_closed(8) == 14
        assert count_closed(2) == 1

    def test_three_way_agreement(self):
        for n in range(1, 41):
            size_by_formula = count_closed(n)
            assert count_recursive(n) == size_by_formula
            assert len(join_irreducibles(n).members) == size_by_formula

    def test_weight_twelve(self):
        # recursion, closed form and brute force all settle on 29
        assert count_recursive(12) == count_closed(12) == 29
        assert len(brute_join_irreducibles(12)) == 29
