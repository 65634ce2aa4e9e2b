import random
from fractions import Fraction

import pytest

from qamont.classifier import (Branch, Reason, Status, classify,
                               enumerate_family, explain, render_explain,
                               verify)
from qamont.montesinos import (MontesinosLink, canonical_form, determinant,
                               format_link, reflect, slide)


def M(e, *tangles):
    return MontesinosLink(e, tuple(Fraction(t) for t in tangles))


class TestClassify:
    def test_condition1(self):
        verdict = classify(M(0, Fraction(5, 2), Fraction(7, 3)))
        assert (verdict.status, verdict.reason) == (Status.QA, Reason.CONDITION1)

    def test_det_zero(self):
        verdict = classify(M(1, Fraction(3, 2), 3))
        assert (verdict.status, verdict.reason) == (Status.NOT_QA, Reason.DET_ZERO)
        assert verdict.det == 0

    def test_no_condition(self):
        verdict = classify(M(1, 2, 2, 2))
        assert (verdict.status, verdict.reason) == (Status.NOT_QA, Reason.NO_CONDITION)

    def test_condition4_with_witness(self):
        verdict = classify(M(2, 3, 3, 3))
        assert (verdict.status, verdict.reason) == (Status.QA, Reason.CONDITION4)
        i, j = verdict.witness_pair
        assert i != j

    def test_condition2(self):
        # refl(3/2) = 3 > 2
        verdict = classify(M(1, Fraction(3, 2), 2))
        assert verdict.reason is Reason.CONDITION2
        assert verdict.witness_pair is not None

    def test_condition3(self):
        assert classify(M(3, 2, 2, 2)).reason is Reason.CONDITION3

    def test_normalizes_first(self):
        # M(0; -7/3) normalizes to M(1; 7/4): p = 1, e = 1 > p - 1 = 0
        verdict = classify(M(0, Fraction(-7, 3)))
        assert verdict.normalized == M(1, Fraction(7, 4))
        assert verdict.status is Status.QA

    def test_p_equals_one_always_qa(self):
        for link in enumerate_family(1, 5, -4, 4):
            assert classify(link).status is Status.QA

    def test_p_equals_two_sanity(self):
        # NotQA happens exactly at e = 1 with refl(t1) = t2, i.e. det = 0
        for link in enumerate_family(2, 5, -2, 3, p_min=2):
            verdict = classify(link)
            if verdict.status is Status.NOT_QA:
                assert verdict.reason is Reason.DET_ZERO
                assert link.e == 1
            else:
                assert determinant(link) != 0

    def test_conditions_imply_nonzero_det(self):
        for link in enumerate_family(3, 4, -2, 3):
            verdict = classify(link)
            if verdict.reason in (Reason.CONDITION1, Reason.CONDITION2,
                                  Reason.CONDITION3, Reason.CONDITION4):
                assert verdict.det >= 1

    def test_reflection_invariance_of_status(self):
        for link in enumerate_family(3, 3, -2, 4):
            assert classify(link).status is classify(reflect(link)).status

    def test_slide_invariance_of_full_verdict(self):
        rng = random.Random(5)
        links = list(enumerate_family(3, 4, -1, 3, p_min=2))
        for _ in range(300):
            link = rng.choice(links)
            slid = link
            for _ in range(rng.randint(1, 10)):
                slid = slide(slid, rng.randrange(slid.p), rng.choice([-1, 1]))
            assert classify(slid) == classify(link)


class TestVerify:
    def test_laufer_branch(self):
        evidence = verify(M(2, 2, 2, 2, 2, 2))
        assert evidence.branch is Branch.LAUFER_NOT_LSPACE
        assert evidence.laufer.steps == 0
        assert evidence.laufer.witness == 0

    def test_lattice_branch(self):
        evidence = verify(M(1, 2, 2, 2))
        assert evidence.branch is Branch.LATTICE_OBSTRUCTED
        assert not evidence.reflected
        assert evidence.obstruction.obstructed

    def test_positive_branch(self):
        evidence = verify(M(0, Fraction(3, 2)))
        assert evidence.branch is Branch.POSITIVE_CHECK
        assert evidence.laufer.verdict.value == "Rational"
        assert evidence.obstruction.witness is not None

    def test_det_zero_branch(self):
        evidence = verify(M(1, Fraction(3, 2), 3))
        assert evidence.branch is Branch.DET_ZERO

    def test_equivalence_on_small_family(self):
        for link in enumerate_family(2, 4, -2, 3):
            qa = classify(link).status is Status.QA
            positive = verify(link).branch is Branch.POSITIVE_CHECK
            assert qa == positive, format_link(link)


class TestEnumerateFamily:
    def test_single_option(self):
        assert list(enumerate_family(1, 2, 0, 0)) == [M(0, 2)]

    def test_three_tangles_alpha_three(self):
        family = set(enumerate_family(1, 3, 1, 1))
        assert family == {M(1, 2), M(1, 3), M(1, Fraction(3, 2))}

    def test_multiset_count(self):
        family = [link for link in enumerate_family(3, 3, 1, 1, p_min=3)]
        assert len(family) == 10  # multisets of size 3 from {2, 3, 3/2}
        assert len(set(family)) == 10

    def test_canonical_and_deterministic(self):
        first = list(enumerate_family(3, 4, -1, 2))
        second = list(enumerate_family(3, 4, -1, 2))
        assert first == second
        for link in first:
            assert link == canonical_form(link)

    def test_bounds_validation(self):
        with pytest.raises(ValueError):
            list(enumerate_family(0, 4, 0, 1))
        with pytest.raises(ValueError):
            list(enumerate_family(2, 1, 0, 1))
        with pytest.raises(ValueError):
            list(enumerate_family(2, 4, 2, 1))


class TestExplain:
    def test_det_computation_string(self):
        report = explain(M(1, Fraction(3, 2), 3))
        assert "9(1 - 2/3 - 1/3)" in report["det_computation"]
        assert report["det_computation"].endswith("= 0")

    def test_condition1_without_verify(self):
        report = explain(M(0, 2))
        assert report["status"] == "QA"
        assert report["conditions"][0]["holds"] is True
        assert report["verify"] is None  # no obstruction run needed

    def test_all_conditions_false_with_numbers(self):
        report = explain(M(1, 2, 2, 2))
        assert all(not row["holds"] for row in report["conditions"])
        condition2 = next(r for r in report["conditions"] if r["name"] == "Condition2")
        assert "2 > " in condition2["detail"] and "= 2" in condition2["detail"]

    def test_verify_trace(self):
        report = explain(M(1, 2, 2, 2), include_verify=True)
        trace = report["verify"]
        assert trace["branch"] == "LatticeObstructed"
        assert trace["laufer"]["verdict"] == "Rational"
        assert trace["embedding_search"]["obstructed"] is True
        text = render_explain(report)
        assert "no embedding has surjective transpose" in text

    def test_render_is_text(self):
        text = render_explain(explain(M(0, Fraction(5, 2), Fraction(7, 3))))
        assert "Condition1: holds" in text
