import pytest

from fitlab.builders import build_group

_built: dict = {}


@pytest.fixture
def G():
    """Shared group builder; groups are immutable so one instance per
    spec serves the whole session and keeps caches warm."""

    def get(spec: str):
        got = _built.get(spec)
        if got is None:
            got = build_group(spec)
            _built[spec] = got
        return got

    return get
