from hypothesis import HealthCheck, settings
from pytest import fixture

from biext.cli import builtin_motive_file
from biext.utils import logging


# Exact arithmetic has no timing guarantees worth asserting on.
settings.register_profile("default", deadline=None, max_examples=50, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@fixture(scope="session")
def builtin():
    """The built-in motive file: E = elliptic(w), its dual, a Kummer motive and the Tate structures."""
    return builtin_motive_file()


@fixture(scope="session", autouse=True)
def propagate_library_logs():
    """Let pytest capture the records of the biext loggers."""
    logging.enable_propagation()
    yield
    logging.disable_propagation()
