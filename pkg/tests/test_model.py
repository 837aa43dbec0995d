import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from teachdim import (
    Concept,
    ConceptClass,
    InvalidArgumentError,
    InvalidPlanError,
    MalformedPlanError,
    ParseError,
    TeachingPlan,
    check_plan,
    is_teaching_set,
    parse_class,
    parse_plan,
    restrict,
    serialize_class,
    serialize_plan,
)
from conftest import make_class, random_class


# -- restrict ------------------------------------------------------------------


def test_restrict_unrolled():
    c = Concept("c", (1, 0, 1))
    assert restrict(c, {0, 2}) == {0: 1, 2: 1}


def test_restrict_empty():
    assert restrict(Concept("c", (1, 0, 1)), set()) == {}


def test_restrict_four_points():
    c = Concept("c", (0, 1, 1, 0))
    assert restrict(c, {1, 2, 3}) == {1: 1, 2: 1, 3: 0}


def test_restrict_out_of_range():
    with pytest.raises(InvalidArgumentError):
        restrict(Concept("c", (1, 0)), {2})
    with pytest.raises(InvalidArgumentError):
        restrict(Concept("c", (1, 0)), {-1})


@given(st.data())
@settings(max_examples=60)
def test_restrict_composition(data):
    width = data.draw(st.integers(1, 8))
    bits = data.draw(st.lists(st.booleans(), min_size=width, max_size=width))
    c = Concept("c", tuple(int(b) for b in bits))
    s = data.draw(st.sets(st.integers(0, width - 1)))
    t = data.draw(st.sets(st.integers(0, width - 1)))
    whole = restrict(c, s | t)
    assert {i: whole[i] for i in s} == restrict(c, s)


# -- is_teaching_set -------------------------------------------------------------


def test_teaching_set_gadget_k1():
    klass = make_class(["100", "010", "001"])
    assert is_teaching_set(klass.concept("100"), klass, {0})


def test_not_teaching_set():
    klass = make_class(["100", "010", "001"])
    # 001 agrees with 100 on index 1, so {1} cannot teach 100.
    assert not is_teaching_set(klass.concept("100"), klass, {1})


def test_singleton_empty_set_teaches():
    klass = make_class(["101"])
    assert is_teaching_set(klass.concept("101"), klass, set())


def test_teaching_set_requires_membership():
    klass = make_class(["10", "01"])
    with pytest.raises(InvalidArgumentError):
        is_teaching_set(Concept("zz", (1, 1)), klass, {0})
    with pytest.raises(InvalidArgumentError):
        is_teaching_set(Concept("10", (1, 1)), klass, {0})


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_teaching_set_monotone_in_s(seed):
    rng = random.Random(seed)
    klass = random_class(rng, max_concepts=6, max_points=6)
    c = rng.choice(klass.concepts)
    pts = list(range(klass.width))
    s = set(rng.sample(pts, rng.randint(0, klass.width)))
    bigger = s | set(rng.sample(pts, rng.randint(0, klass.width)))
    if is_teaching_set(c, klass, s):
        assert is_teaching_set(c, klass, bigger)


# -- construction invariants -----------------------------------------------------


def test_duplicate_rows_rejected():
    with pytest.raises(InvalidArgumentError):
        make_class(["10", "10"], labels=["a", "b"])


def test_duplicate_labels_rejected():
    with pytest.raises(InvalidArgumentError):
        make_class(["10", "01"], labels=["a", "a"])


def test_row_width_must_match_domain():
    with pytest.raises(InvalidArgumentError):
        ConceptClass.from_rows(["10", "011"])


def test_empty_domain_single_concept_ok():
    klass = make_class([""], labels=["only"])
    assert klass.width == 0
    assert len(klass.concepts) == 1


def test_empty_domain_two_concepts_impossible():
    with pytest.raises(InvalidArgumentError):
        make_class(["", ""], labels=["a", "b"])


def test_labels_must_be_clean():
    with pytest.raises(InvalidArgumentError):
        make_class(["10"], labels=["has space"])
    with pytest.raises(InvalidArgumentError):
        make_class(["10"], labels=["ha#sh"])


def test_wide_classes_supported():
    # 4096 columns must work
    width = 4096
    rows = ["0" * width, "1" + "0" * (width - 1), "01" + "0" * (width - 2)]
    klass = make_class(rows, labels=["a", "b", "c"])
    assert klass.width == width
    assert is_teaching_set(klass.concept("a"), klass, {0, 1})
    assert not is_teaching_set(klass.concept("a"), klass, {2})
    assert parse_class(serialize_class(klass)) == klass


# -- check_plan ------------------------------------------------------------------


def test_point_function_plan(point_functions):
    plan = TeachingPlan((("100", (0,)), ("010", (1,)), ("001", (2,)), ("000", ())))
    assert check_plan(point_functions, plan) == 1


def test_singleton_plan_width_zero():
    klass = make_class(["11"], labels=["c"])
    assert check_plan(klass, TeachingPlan((("c", ()),))) == 0


def test_all_zero_first_is_rejected(point_functions):
    plan = TeachingPlan((("000", (0,)), ("100", (0,)), ("010", (1,)), ("001", (2,))))
    with pytest.raises(InvalidPlanError) as ei:
        check_plan(point_functions, plan)
    assert ei.value.step == 0
    # the witness must actually agree with 000 on index 0
    assert ei.value.witness in ("010", "001")
    agree = point_functions.concept(ei.value.witness)
    assert agree.values[0] == 0


def test_plan_missing_concept(point_functions):
    with pytest.raises(MalformedPlanError):
        check_plan(point_functions, TeachingPlan((("100", (0,)),)))


def test_plan_duplicate_concept(point_functions):
    steps = (("100", (0,)), ("100", (0,)), ("010", (1,)), ("001", (2,)))
    with pytest.raises(MalformedPlanError):
        check_plan(point_functions, TeachingPlan(steps))


def test_plan_bad_index(point_functions):
    steps = (("100", (9,)), ("010", (1,)), ("001", (2,)), ("000", ()))
    with pytest.raises(MalformedPlanError):
        check_plan(point_functions, TeachingPlan(steps))


def test_accepted_plan_may_break_under_permutation(point_functions):
    ok = TeachingPlan((("100", (0,)), ("010", (1,)), ("001", (2,)), ("000", ())))
    assert check_plan(point_functions, ok) == 1
    permuted = TeachingPlan((("000", ()), ("100", (0,)), ("010", (1,)), ("001", (2,))))
    with pytest.raises(InvalidPlanError):
        check_plan(point_functions, permuted)


# -- text format -------------------------------------------------------------------


def test_parse_basic():
    klass = parse_class("2 3\nA 101\nB 010\n")
    assert len(klass.concepts) == 2
    assert klass.width == 3
    assert klass.concept("A").values == (1, 0, 1)
    assert [p.label for p in klass.domain] == ["x0", "x1", "x2"]


def test_parse_labels_line_and_comments():
    text = "# a class\n2 2\nlabels: left right\nA 10  # row A\nB 01\n"
    klass = parse_class(text)
    assert [p.label for p in klass.domain] == ["left", "right"]
    assert klass.concept("B").values == (0, 1)


def test_parse_empty_domain_singleton():
    klass = parse_class("1 0\nA \n")
    assert klass.width == 0
    assert klass.labels() == ("A",)


def test_parse_duplicate_row_errors_with_line():
    with pytest.raises(ParseError) as ei:
        parse_class("2 2\nA 10\nB 10\n")
    assert ei.value.line == 3


@pytest.mark.parametrize(
    "text",
    [
        "",  # no header
        "x y\nA 10\n",  # non-integer header
        "1\nA 10\n",  # short header
        "2 2\nA 10\n",  # missing row
        "1 2\nA 10\nB 01\n",  # extra row
        "1 2\nA 1\n",  # wrong length
        "1 2\nA 1x\n",  # bad character
        "2 2\nA 10\nA 01\n",  # duplicate label
        "1 2\nlabels: p\nA 10\n",  # labels count mismatch
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_class(text)


def test_serialize_shape(point_functions):
    text = serialize_class(point_functions)
    assert text == (
        "4 3\nlabels: x0 x1 x2\n100 100\n010 010\n001 001\n000 000\n"
    )
    assert parse_class(text) == point_functions


def test_serialize_empty_domain_no_trailing_whitespace():
    klass = make_class([""], labels=["only"])
    text = serialize_class(klass)
    assert text == "1 0\nonly\n"
    assert all(line == line.rstrip() for line in text.splitlines())
    assert parse_class(text) == klass


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60)
def test_roundtrip_random_classes(seed):
    klass = random_class(random.Random(seed))
    assert parse_class(serialize_class(klass)) == klass


# -- plan text format -----------------------------------------------------------


def test_plan_roundtrip():
    plan = TeachingPlan((("a", (2, 0)), ("b", ())))
    text = serialize_plan(plan)
    assert text == "a 0 2\nb\n"
    assert parse_plan(text) == plan


def test_plan_parse_rejects_junk():
    with pytest.raises(ParseError):
        parse_plan("a one two\n")
    with pytest.raises(ParseError):
        parse_plan("a -1\n")
