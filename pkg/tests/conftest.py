import hypothesis
import pytest

from jmb import builtin_catalog

hypothesis.settings.register_profile(
    "suite", max_examples=60, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("suite")


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog("paper-verbatim")
