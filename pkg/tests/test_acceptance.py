"""The release gate: every advertised guarantee, run at full size.

Each test drives one suite from braidforge.acceptance and prints its
one-line result, so `pytest -v tests/test_acceptance.py` reads as a
checklist.  These are the slow, end-to-end batteries; the rest of the
test tree covers the same machinery at unit granularity.
"""

from braidforge.acceptance import (DEFAULT_SEED, conjugation_rule_suite,
                                   coset_system_suite,
                                   defining_relations_suite,
                                   derived_relations_suite, relabeling_suite,
                                   round_trip_suite, stability_suite,
                                   string_presentation_suite)


def report(result):
    print(result.line())
    for failure in result.failures:
        print(f"       {failure}")
    assert result.passed, result.summary


def test_defining_relations_all_hold_up_to_five_strands():
    report(defining_relations_suite(5))


def test_string_presentation_relations_hold_up_to_four_strands():
    report(string_presentation_suite(4))


def test_derived_relations_match_the_advertised_presentation():
    report(derived_relations_suite((3, 4)))


def test_conjugation_rule_identities_hold():
    report(conjugation_rule_suite())


def test_relabeling_action_is_coherent():
    report(relabeling_suite(4))


def test_normal_form_round_trips_and_preserves_invariants():
    report(round_trip_suite(1000, 1000, DEFAULT_SEED))


def test_normal_forms_are_stable_under_strict_families():
    report(stability_suite(500, DEFAULT_SEED))


def test_coset_system_is_complete_and_prefix_closed():
    report(coset_system_suite(6))
