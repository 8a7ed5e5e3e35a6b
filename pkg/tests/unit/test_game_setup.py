"""Unit tests for game setup, scoring and determinization."""

import pytest

from core import rules
from core.action_generators import random_action
from core.exceptions import SetupError, UsageError
from core.game_setup import check_content, copy_for_player, new_game, score
from core.rng import derive_seed
from models.action import Action
from models.content import ContentSet
from models.enums import ActionKind
from models.game_params import GameParams
from models.game_state import ReservedCard


class TestNewGame:
    """Tests for new_game."""

    def test_four_player_setup(self, state):
        """Test the four-player opening table."""
        assert len(state.nobles) == 5
        assert state.table_tokens == [6, 6, 6, 6, 6, 5]
        assert [len(row) for row in state.face_up] == [4, 4, 4]
        assert [len(deck) for deck in state.decks] == [36, 26, 16]
        assert state.tick == 0
        assert state.current_player == 0
        assert not state.final_round
        assert state.conservation_errors() == []

    def test_two_player_setup(self, two_player_state):
        """Test the two-player opening table."""
        assert len(two_player_state.nobles) == 3
        assert two_player_state.table_tokens == [4, 4, 4, 4, 4, 5]
        assert [len(deck) for deck in two_player_state.decks] == [36, 26, 16]
        assert two_player_state.conservation_errors() == []

    def test_face_up_levels(self, state):
        """Test face-up rows and decks hold cards of their own level."""
        for index, (row, deck) in enumerate(zip(state.face_up, state.decks)):
            assert all(card.level == index + 1 for card in row + deck)

    def test_same_seed_same_state(self, params, content):
        """Test setup is reproducible."""
        assert new_game(params, content, 9).fingerprint() == new_game(params, content, 9).fingerprint()

    def test_different_seed_different_state(self, params, content):
        """Test different seeds shuffle differently."""
        assert new_game(params, content, 9).fingerprint() != new_game(params, content, 10).fingerprint()

    def test_players_start_empty(self, state):
        """Test every player starts without tokens, cards or nobles."""
        for player in state.players:
            assert player.token_count == 0
            assert player.card_count == 0
            assert player.prestige == 0
            assert player.reserved == []


class TestCheckContent:
    """Tests for content/parameter compatibility."""

    def test_default_content_accepted(self, params, content):
        """Test the bundled content supports the default parameters."""
        check_content(params, content)

    def test_token_type_mismatch(self, content):
        """Test a suit count the content does not have."""
        with pytest.raises(SetupError, match="nTT"):
            new_game(GameParams(token_types=4), content, 0)

    def test_deck_count_mismatch(self, content):
        """Test a deck count the content does not have."""
        with pytest.raises(SetupError, match="D="):
            new_game(GameParams(decks=2), content, 0)

    def test_too_many_face_up(self, content):
        """Test FUC larger than the smallest deck."""
        with pytest.raises(SetupError):
            new_game(GameParams(face_up_cards=21), content, 0)

    def test_too_few_nobles(self, content):
        """Test more nobles needed than the content holds."""
        with pytest.raises(SetupError, match="nobles"):
            new_game(GameParams(extra_nobles=7), content, 0)

    def test_empty_noble_set(self, content):
        """Test a content set without nobles is rejected."""
        bare = ContentSet(cards=content.cards, nobles=(), token_types=5, levels=3)
        with pytest.raises(SetupError):
            new_game(GameParams(), bare, 0)


class TestScore:
    """Tests for score."""

    def test_initial_score(self, state):
        """Test everyone starts at zero."""
        assert [score(state, p) for p in range(4)] == [0, 0, 0, 0]

    @pytest.mark.parametrize("player", [-1, 4])
    def test_player_out_of_range(self, state, player):
        """Test invalid player indices."""
        with pytest.raises(UsageError):
            score(state, player)


class TestCopyForPlayer:
    """Tests for hidden-information determinization."""

    @pytest.fixture
    def reserved_state(self, state):
        """Four-player game where players 0 and 1 each reserved from a deck."""
        for player in (0, 1):
            rules.apply(state, Action(ActionKind.RESERVE_DECK, player, deck=0))
        return state

    def test_observer_keeps_own_reserved(self, reserved_state):
        """Test the observer's reserved cards are unchanged."""
        view = copy_for_player(reserved_state, 0, 123)
        assert view.players[0].reserved == reserved_state.players[0].reserved

    def test_conservation_preserved(self, reserved_state):
        """Test determinized views keep every invariant."""
        for seed in range(20):
            view = copy_for_player(reserved_state, 0, seed)
            assert view.conservation_errors() == []
            assert view.players[1].reserved[0].from_deck
            assert view.players[1].reserved[0].card.level == 1

    def test_public_information_preserved(self, reserved_state):
        """Test face-up cards, tokens and nobles are copied exactly."""
        view = copy_for_player(reserved_state, 2, 5)
        assert view.face_up == reserved_state.face_up
        assert view.table_tokens == reserved_state.table_tokens
        assert view.nobles == reserved_state.nobles
        assert [len(d) for d in view.decks] == [len(d) for d in reserved_state.decks]

    def test_original_untouched(self, reserved_state):
        """Test the source state is not modified."""
        before = reserved_state.fingerprint()
        copy_for_player(reserved_state, 3, 77)
        assert reserved_state.fingerprint() == before

    def test_hidden_card_resampled(self, reserved_state):
        """Test opponents' hidden reserved cards vary across seeds."""
        seen = {copy_for_player(reserved_state, 0, seed).players[1].reserved[0].card.card_id
                for seed in range(30)}
        assert len(seen) > 1

    def test_table_reserved_card_kept(self, state):
        """Test cards reserved from the table are public."""
        card = state.face_up[0][0]
        state.players[1].reserved.append(ReservedCard(card, False))
        state.face_up[0][0] = state.decks[0].pop()
        view = copy_for_player(state, 0, 1)
        assert view.players[1].reserved[0].card == card

    def test_same_seed_same_view(self, reserved_state):
        """Test views are reproducible."""
        a = copy_for_player(reserved_state, 0, 42)
        b = copy_for_player(reserved_state, 0, 42)
        assert a.fingerprint() == b.fingerprint()

    def test_view_is_playable(self, reserved_state):
        """Test a view can be advanced by the forward model."""
        view = copy_for_player(reserved_state, 2, derive_seed(1, 2))
        action = random_action(view, 2, 0)
        rules.apply(view, action)
        assert view.conservation_errors() == []

    def test_invalid_observer(self, state):
        """Test observer index validation."""
        with pytest.raises(UsageError):
            copy_for_player(state, 4, 0)
