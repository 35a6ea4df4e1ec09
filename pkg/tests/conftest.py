import pytest

from cage_spectra import catalog


@pytest.fixture(scope="session")
def heawood():
    return catalog("heawood")


@pytest.fixture(scope="session")
def tutte_coxeter():
    return catalog("tutte_coxeter")


@pytest.fixture(scope="session")
def moebius_kantor():
    return catalog("moebius_kantor")


@pytest.fixture(scope="session")
def pg23():
    return catalog("pg23_incidence")
