import pytest

from d4syl import build_tower
from d4syl import characters as ch
from d4syl import conjugacy as cj


@pytest.fixture(scope="session")
def ctx3():
    return build_tower(3, 1)


@pytest.fixture(scope="session")
def ctx5():
    return build_tower(5, 1)


@pytest.fixture(scope="session")
def ctx7():
    return build_tower(7, 1)


@pytest.fixture(scope="session")
def ctx9():
    return build_tower(3, 2)


@pytest.fixture(scope="session")
def table3(ctx3):
    return ch.build_table(ctx3)


@pytest.fixture(scope="session")
def oracle3(ctx3, table3):
    return ch.oracle_grid(ctx3, labels=table3.labels, classes=table3.classes)


@pytest.fixture(scope="session")
def orbit_labels3(ctx3):
    return cj.brute_force_classes(ctx3)


@pytest.fixture(scope="session")
def class_index3(ctx3):
    return cj.classify_all(ctx3)
