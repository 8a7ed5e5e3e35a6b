"""Shared fixtures."""

import pytest

from core.game_setup import new_game
from data_management.content_loader import load_default_content
from models.content import Card, Noble
from models.game_params import GameParams
from utils.config import Config, set_config


@pytest.fixture(autouse=True, scope="module")
def default_config():
    """Fresh built-in configuration for every test module."""
    set_config(Config())
    yield


@pytest.fixture(scope="session")
def content():
    """Bundled 90-card / 10-noble content."""
    return load_default_content()


@pytest.fixture
def params():
    """Four-player default parameters."""
    return GameParams()


@pytest.fixture
def state(params, content):
    """Fresh four-player game."""
    return new_game(params, content, 42)


@pytest.fixture
def two_player_state(content):
    """Fresh two-player game."""
    return new_game(GameParams(players=2), content, 7)


def make_card(price, bonus=0, value=1, level=1, card_id=1000):
    """Card with a five-suit price (joker entry appended)."""
    return Card(card_id=card_id, level=level, bonus=bonus, price=tuple(price) + (0,), value=value)


def make_noble(requirement, value=3, noble_id=100):
    """Noble with a five-suit requirement (joker entry appended)."""
    return Noble(noble_id=noble_id, value=value, requirement=tuple(requirement) + (0,))
