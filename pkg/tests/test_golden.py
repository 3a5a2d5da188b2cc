import pytest

from weylnorm import golden


@pytest.mark.parametrize("table_id", sorted(golden.NORMALIZATION_TABLES))
def test_normalization_tables_reproduce(table_id):
    diffs = golden.compare_normalization(table_id)
    unexpected = [d for d in diffs if not d.known_typo]
    assert not unexpected, "\n".join(d.describe() for d in unexpected)


def test_known_typo_is_the_only_deviation():
    diffs = golden.compare_normalization("E6-normalization")
    assert [d for d in diffs if d.known_typo], "expected the recorded typo to surface"
    assert all(d.known_typo for d in diffs)


@pytest.mark.parametrize("table_id", sorted(golden.ACTION_TABLES))
def test_action_tables_reproduce(table_id):
    diffs = golden.compare_action(table_id)
    assert not diffs, "\n".join(d.describe() for d in diffs)


def test_f4_way_assignments_reproduce():
    diffs = golden.compare_f4_way_assignments()
    assert not diffs, "\n".join(d.describe() for d in diffs)


def test_reproduce_all_aggregates():
    diffs = golden.reproduce_all()
    assert set(diffs) == set(golden.ALL_TABLE_IDS)
    assert not golden.unexpected_diffs(diffs)


def test_reproduce_all_only_filter():
    diffs = golden.reproduce_all(only="F4")
    assert set(diffs) == {"F4-normalization", "F4-table1-ways"}
