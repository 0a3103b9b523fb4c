import pytest

from meadows import (
    CR, REF, RIL,
    NotRegular, UniquenessViolated,
    build_mdk, check_axiom_set, expand_inverse_table, expand_to_meadow,
    explicit_inverse_check, is_regular, is_squarefree, pseudoinverses,
    unique_double_pseudoinverse, zmod_ring,
)


class TestRawRings:
    def test_zmod_satisfies_ring_laws(self):
        for k in (1, 2, 4, 6, 9, 10):
            ring = zmod_ring(k)
            assert ring.inv is None
            assert all(v.holds for v in check_axiom_set(ring, CR).values())

    def test_bad_modulus(self):
        with pytest.raises(ValueError):
            zmod_ring(0)


class TestRegularity:
    def test_squarefree_modulus_is_regular(self):
        report = is_regular(zmod_ring(6))
        assert report.regular and report.witness is None

    def test_z4_not_regular_with_witness_two(self):
        report = is_regular(zmod_ring(4))
        assert not report.regular
        assert report.witness == 2
        # Oracle: 2*y*2 = 4y = 0 mod 4 for every y.
        assert all((2 * y * 2) % 4 == 0 for y in range(4))

    def test_prime_moduli_regular(self):
        for p in (2, 3, 5, 7, 11):
            assert is_regular(zmod_ring(p)).regular

    def test_pseudoinverses_of_zero_is_everything(self):
        assert pseudoinverses(zmod_ring(6), 0) == list(range(6))


class TestExpansion:
    def test_z6_expands_to_identity_inverse(self):
        assert expand_to_meadow(zmod_ring(6)).inv == (0, 1, 2, 3, 4, 5)

    def test_z10_inverse_of_two(self):
        assert expand_to_meadow(zmod_ring(10)).inv[2] == 8

    def test_z2(self):
        assert expand_to_meadow(zmod_ring(2)).inv == (0, 1)

    @pytest.mark.parametrize("k", [4, 8])
    def test_non_regular_rejected_with_witness(self, k):
        with pytest.raises(NotRegular) as err:
            expand_to_meadow(zmod_ring(k))
        assert err.value.witness == 2

    def test_selector_order_does_not_matter(self):
        for k in (2, 6, 10, 15, 30, 42):
            ring = zmod_ring(k)
            ascending = expand_inverse_table(ring, prefer_greatest=False)
            descending = expand_inverse_table(ring, prefer_greatest=True)
            assert ascending == descending

    def test_expansion_satisfies_reflection_and_ril(self):
        for k in (2, 6, 10, 30):
            expanded = expand_to_meadow(zmod_ring(k))
            report = check_axiom_set(expanded, {**REF, **RIL})
            assert all(v.holds for v in report.values())

    def test_expansion_matches_mdk_tables(self):
        for k in range(1, 61):
            if not is_squarefree(k):
                continue
            expanded = expand_to_meadow(zmod_ring(k))
            assert expanded.inv == build_mdk(k).inv, k


class TestDoublePseudoinverse:
    def test_two_mod_six(self):
        assert unique_double_pseudoinverse(zmod_ring(6), 2) == 2

    def test_absent_for_two_mod_four(self):
        assert unique_double_pseudoinverse(zmod_ring(4), 2) is None

    def test_zero_always_maps_to_zero(self):
        for k in (2, 4, 6, 9, 10):
            assert unique_double_pseudoinverse(zmod_ring(k), 0) == 0

    def test_corrupt_tables_detected(self):
        from meadows import FiniteStructure

        # Left projection x*y = x is not commutative; every y passes both
        # double-pseudoinverse equations, which the scan must refuse.
        skew = FiniteStructure(
            "skew", 2, 0, 1,
            ((0, 1), (1, 0)),
            ((0, 0), (1, 1)),
            (0, 1),
        )
        with pytest.raises(UniquenessViolated):
            unique_double_pseudoinverse(skew, 0)


class TestExplicitDefinition:
    @pytest.mark.parametrize("k", [2, 6, 30])
    def test_singleton_image_equals_expansion(self, k):
        assert explicit_inverse_check(zmod_ring(k))

    def test_matches_expanded_table_elementwise(self):
        ring = zmod_ring(30)
        table = expand_inverse_table(ring)
        for x in range(30):
            images = {
                (z * x * z) % 30
                for z in range(30)
                if (x * z * x) % 30 == x
            }
            assert images == {table[x]}
