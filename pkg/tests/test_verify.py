import pytest

from wordpower import verify


def test_suite_registry_is_complete_and_ordered():
    assert verify.suite_names() == [
        "tmmorph",
        "shur",
        "stronger",
        "fact",
        "pansiot",
        "square",
        "conj",
        "extend",
        "main",
        "finite-overlaps",
        "infinite",
        "uncount",
        "automatic",
        "beta",
    ]


@pytest.mark.parametrize("name", ["extend", "fact", "conj", "square", "beta", "automatic"])
def test_cheap_suites_pass(name):
    result = verify.run_suite(name)
    assert result.passed, result.detail
    assert result.suite == name
    assert result.seconds >= 0
    assert result.detail


def test_unknown_suite_raises():
    with pytest.raises(ValueError, match="unknown suite"):
        verify.run_suite("nosuch")
