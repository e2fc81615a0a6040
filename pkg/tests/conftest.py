# coding: utf-8
# Standard Python libraries
from pathlib import Path

# https://docs.pytest.org/
import pytest

# naipm imports
from naipm.ban import using_length
from naipm.fixtures import load_fixture
from naipm.model import prepare
from naipm.solver import SolverConfig, solve

@pytest.fixture(autouse=True)
def ban_length():
    """Pins the process-wide Ban length for every test."""
    with using_length(5):
        yield 5

@pytest.fixture(autouse=True)
def home(tmp_path, monkeypatch):
    """Points the user's home, and so the saved settings, to a scratch directory."""
    home = Path(tmp_path, 'home')
    home.mkdir()
    monkeypatch.setattr(Path, 'home', classmethod(lambda cls: home))
    return home

@pytest.fixture(scope='session')
def solve_fixture():
    """Solves bundled fixtures once per session."""
    cache = {}
    def solve_named(name):
        if name not in cache:
            with using_length(5):
                problem = load_fixture(name, length=5)
                cache[name] = solve(prepare(problem), SolverConfig(ban_length=5))
        return cache[name]
    return solve_named
