"""Game creation, scoring and hidden-information determinization."""

from core.exceptions import SetupError
from core.rng import GameRNG
from core.rules import check_player
from models.content import ContentSet
from models.game_params import GameParams
from models.game_state import GameState, PlayerState, ReservedCard
from utils.logger import get_logger

logger = get_logger(__name__)


def check_content(params: GameParams, content: ContentSet):
    """Reject parameters the content set cannot support.

    Raises:
        SetupError: If suit or deck counts differ from the content, or the
            content is too small to deal the opening table
    """
    if content.token_types != params.token_types:
        raise SetupError(
            f"nTT={params.token_types} unsupported: content has {content.token_types} suits"
        )
    if content.levels != params.decks:
        raise SetupError(f"D={params.decks} unsupported: content has {content.levels} levels")
    for level, size in content.level_sizes().items():
        if size < params.face_up_cards:
            raise SetupError(
                f"Deck {level} has {size} cards, cannot deal {params.face_up_cards} face-up"
            )
    if len(content.nobles) < params.noble_count:
        raise SetupError(
            f"Content has {len(content.nobles)} nobles, setup needs {params.noble_count}"
        )


def new_game(params: GameParams, content: ContentSet, seed: int) -> GameState:
    """Set up a new game.

    Decks are shuffled and P+EN nobles drawn from the seed; P+2 tokens of
    each suit and all jokers go on the table; FUC cards are dealt face-up
    from every deck. Identical arguments give identical states.

    Args:
        params: Game parameters
        content: Cards and nobles
        seed: 64-bit seed

    Returns:
        Fresh game state with player 0 to move
    """
    check_content(params, content)
    rng = GameRNG(seed)

    decks = []
    face_up = []
    for level in range(1, params.decks + 1):
        deck = content.cards_of_level(level)
        rng.shuffle(deck)
        face_up.append([deck.pop() for _ in range(params.face_up_cards)])
        decks.append(deck)

    nobles = rng.sample(content.nobles, params.noble_count)
    table_tokens = [params.tokens_per_suit] * params.token_types + [params.jokers]

    return GameState(
        params=params,
        content=content,
        table_tokens=table_tokens,
        decks=decks,
        face_up=face_up,
        nobles=nobles,
        players=[PlayerState.empty(params.token_types) for _ in range(params.players)],
        rng=rng,
    )


def score(state: GameState, player: int) -> int:
    """Prestige points of a player.

    Raises:
        UsageError: If the player index is out of range
    """
    check_player(state, player)
    return state.players[player].prestige


def copy_for_player(state: GameState, observer: int, seed: int) -> GameState:
    """Deep copy with hidden information re-sampled for an observer.

    Opponents' face-down reserved cards are swapped with random undealt
    cards of the same level and every deck is reshuffled. The observer's own
    reserved cards, all public information and every conservation invariant
    are preserved.
    """
    check_player(state, observer)
    rng = GameRNG(seed)
    view = state.copy()

    for index, player in enumerate(view.players):
        if index == observer:
            continue
        for slot, reserved in enumerate(player.reserved):
            if not reserved.from_deck:
                continue
            deck = view.decks[reserved.card.level - 1]
            deck.append(reserved.card)
            pick = rng.randbelow(len(deck))
            deck[pick], deck[-1] = deck[-1], deck[pick]
            player.reserved[slot] = ReservedCard(deck.pop(), True)

    for deck in view.decks:
        rng.shuffle(deck)
    view.rng = rng.split()
    return view
