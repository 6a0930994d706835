import time

import pytest

SESSION_START = time.perf_counter()


@pytest.fixture(scope="session")
def session_start() -> float:
    return SESSION_START
