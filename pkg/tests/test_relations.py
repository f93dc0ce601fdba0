import pytest

from braidforge import (Presentation, exponent_invariants, expand_fusing,
                        pair_counts, permutation_of, relation_table)
from braidforge.relations import (elementary_string_relation_instances,
                                  fusing_moves, pure_relation_instances,
                                  standard_relation_instances, standard_moves)


def test_both_sides_share_every_invariant():
    for n in (2, 3, 4, 5):
        for rel in standard_relation_instances(n):
            assert permutation_of(rel.lhs) == permutation_of(rel.rhs), rel.name
            assert exponent_invariants(rel.lhs) == exponent_invariants(rel.rhs), rel.name


def test_family_counts_small():
    by_family = {}
    for rel in standard_relation_instances(3):
        by_family[rel.family] = by_family.get(rel.family, 0) + 1
    assert by_family == {1: 8, 2: 2, 3: 1, 4: 1, 5: 4, 6: 4, 7: 4}


def test_distant_relations_appear_from_four_strands():
    assert not [r for r in standard_relation_instances(3) if r.family == 8]
    distant = [r for r in standard_relation_instances(4) if r.family == 8]
    assert len(distant) == 16


def test_string_relation_sides_agree_on_invariants():
    for n in (2, 3, 4):
        for rel in elementary_string_relation_instances(n):
            assert permutation_of(rel.lhs) == permutation_of(rel.rhs), rel.name
            assert exponent_invariants(rel.lhs) == exponent_invariants(rel.rhs), rel.name


def test_pure_relation_sides_are_pure_and_balanced():
    for n in (3, 4):
        for rel in pure_relation_instances(n):
            lhs = expand_fusing(rel.lhs)
            rhs = expand_fusing(rel.rhs)
            assert permutation_of(lhs).is_identity(), rel.name
            assert permutation_of(rhs).is_identity(), rel.name
            assert pair_counts(rel.lhs) == pair_counts(rel.rhs), rel.name


def test_relation_table_dispatch():
    std = relation_table(Presentation.STANDARD, 3)
    fus = relation_table(Presentation.FUSING, 3)
    pure = relation_table(Presentation.PURE, 3)
    assert len(std) == 24
    assert len(fus) == 14
    assert len(pure) == 24
    for lhs, rhs in std + fus:
        assert permutation_of(lhs) == permutation_of(rhs)


def test_relation_table_accepts_enum_values_and_rejects_garbage():
    assert relation_table("standard", 3) == relation_table(Presentation.STANDARD, 3)
    with pytest.raises(ValueError):
        relation_table("nonsense", 3)


def test_move_tables_are_orientation_closed():
    """Every substitution runs both ways and survives reverse-invert, so
    chains can be inverted and mirrored without leaving the table."""
    from braidforge.relations import reverse_invert_codes

    for table in (standard_moves(3), fusing_moves(3)):
        for a, b in table.allowed:
            assert (b, a) in table.allowed
            assert (reverse_invert_codes(a, table.inverse_table),
                    reverse_invert_codes(b, table.inverse_table)
                    ) in table.allowed
        moves = set(zip(table.patterns, table.replacements))
        for a, b in moves:
            assert (a, b) in table.allowed
        # empty left sides stay out of the scan list: they would match at
        # every position and drown the search
        assert all(a for a, _ in moves)


def test_inverse_table_is_involutive():
    for table in (standard_moves(4), fusing_moves(4)):
        inv = table.inverse_table
        for code in set(b"".join(a + b for a, b in
                                 zip(table.patterns, table.replacements))):
            assert inv[inv[code]] == code
