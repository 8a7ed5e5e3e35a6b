"""Random action generators (RAGs).

Each generator samples one legal action of its kind for a player, keyed by
a 64-bit seed, and returns None exactly when no legal action of that kind
exists. :func:`random_action` combines the six generators; when all of them
return None the player is in a stalemate.
"""

from itertools import combinations, permutations
from typing import Callable, Dict, List, Optional, Tuple

from core.exceptions import StalemateError
from core.rng import GameRNG
from core.rules import post_effect_hand, canonical_payment, check_player, is_legal
from models.action import Action
from models.enums import ActionKind
from models.game_state import GameState

Generator = Callable[[GameState, int, int], Optional[Action]]


def sample_give_back(hand: List[int], max_tokens: int, rng: GameRNG) -> Tuple[int, ...]:
    """Tokens to return so the hand holds ``max_tokens``.

    Tokens are drawn uniformly one at a time from the hand, jokers
    included. Returns an empty tuple when nothing must be returned.
    """
    excess = sum(hand) - max_tokens
    if excess <= 0:
        return ()
    remaining = hand[:]
    left = sum(remaining)
    give_back = [0] * len(hand)
    for _ in range(excess):
        pick = rng.randbelow(left)
        for suit, count in enumerate(remaining):
            if pick < count:
                remaining[suit] -= 1
                give_back[suit] += 1
                break
            pick -= count
        left -= 1
    return tuple(give_back)


def _with_give_back(state: GameState, action: Action, rng: GameRNG) -> Action:
    params = state.params
    kind = action.kind
    if kind == ActionKind.PICK_DIFFERENT:
        gained = params.pick_different_tokens * len(action.suits)
    elif kind == ActionKind.PICK_SAME:
        gained = params.pick_same_tokens
    else:
        gained = 1 if state.table_tokens[params.joker_index] > 0 else 0
    if sum(state.players[action.player].hand) + gained <= params.max_tokens:
        return action
    hand = post_effect_hand(state, action)
    give_back = sample_give_back(hand, params.max_tokens, rng)
    if not give_back:
        return action
    return Action(
        kind=action.kind,
        player=action.player,
        suits=action.suits,
        deck=action.deck,
        slot=action.slot,
        give_back=give_back,
    )


def generate_pick_different(state: GameState, player: int, seed: int) -> Optional[Action]:
    """Pick up to nTTPD distinct suits, each with at least nTPD tokens on the table."""
    params = state.params
    qualifying = [s for s in range(params.token_types)
                  if state.table_tokens[s] >= params.pick_different_tokens]
    if not qualifying:
        return None
    rng = GameRNG(seed)
    k = rng.randint(1, min(params.pick_different_types, len(qualifying)))
    suits = tuple(sorted(rng.sample(qualifying, k)))
    return _with_give_back(state, Action(ActionKind.PICK_DIFFERENT, player, suits=suits), rng)


def generate_pick_same(state: GameState, player: int, seed: int) -> Optional[Action]:
    """Pick nTPS tokens of one suit whose stack holds at least minTPS."""
    params = state.params
    threshold = max(params.pick_same_min_stack, params.pick_same_tokens)
    qualifying = [s for s in range(params.token_types) if state.table_tokens[s] >= threshold]
    if not qualifying:
        return None
    rng = GameRNG(seed)
    suit = rng.choice(qualifying)
    return _with_give_back(state, Action(ActionKind.PICK_SAME, player, suits=(suit,)), rng)


def generate_reserve_table(state: GameState, player: int, seed: int) -> Optional[Action]:
    """Reserve a face-up card."""
    if len(state.players[player].reserved) >= state.params.max_reserved:
        return None
    slots = [(d, s) for d, row in enumerate(state.face_up) for s in range(len(row))]
    if not slots:
        return None
    rng = GameRNG(seed)
    deck, slot = rng.choice(slots)
    return _with_give_back(state, Action(ActionKind.RESERVE_TABLE, player, deck=deck, slot=slot), rng)


def generate_reserve_deck(state: GameState, player: int, seed: int) -> Optional[Action]:
    """Reserve the top card of a non-empty deck."""
    if len(state.players[player].reserved) >= state.params.max_reserved:
        return None
    decks = [d for d, deck in enumerate(state.decks) if deck]
    if not decks:
        return None
    rng = GameRNG(seed)
    deck = rng.choice(decks)
    return _with_give_back(state, Action(ActionKind.RESERVE_DECK, player, deck=deck), rng)


def generate_buy_table(state: GameState, player: int, seed: int) -> Optional[Action]:
    """Buy an affordable face-up card with the canonical payment."""
    holder = state.players[player]
    options = []
    for deck, row in enumerate(state.face_up):
        for slot, card in enumerate(row):
            payment = canonical_payment(card, holder)
            if payment is not None:
                options.append((deck, slot, payment))
    if not options:
        return None
    deck, slot, payment = GameRNG(seed).choice(options)
    return Action(ActionKind.BUY_TABLE, player, deck=deck, slot=slot, payment=payment)


def generate_buy_reserved(state: GameState, player: int, seed: int) -> Optional[Action]:
    """Buy an affordable reserved card with the canonical payment."""
    holder = state.players[player]
    options = []
    for slot, reserved in enumerate(holder.reserved):
        payment = canonical_payment(reserved.card, holder)
        if payment is not None:
            options.append((slot, payment))
    if not options:
        return None
    slot, payment = GameRNG(seed).choice(options)
    return Action(ActionKind.BUY_RESERVED, player, slot=slot, payment=payment)


GENERATORS: Dict[ActionKind, Generator] = {
    ActionKind.PICK_DIFFERENT: generate_pick_different,
    ActionKind.PICK_SAME: generate_pick_same,
    ActionKind.RESERVE_TABLE: generate_reserve_table,
    ActionKind.RESERVE_DECK: generate_reserve_deck,
    ActionKind.BUY_TABLE: generate_buy_table,
    ActionKind.BUY_RESERVED: generate_buy_reserved,
}

_KINDS = list(GENERATORS)
_ORDERS = list(permutations(_KINDS))


def rag_generate(kind: ActionKind, state: GameState, player: int, seed: int) -> Optional[Action]:
    """Sample a legal action of one kind, or None if none exists."""
    check_player(state, player)
    return GENERATORS[kind](state, player, seed)


def random_action(state: GameState, player: int, seed: int) -> Action:
    """First action produced by the six generators tried in a seeded random order.

    The order is one uniformly drawn permutation of the six kinds.

    Raises:
        StalemateError: If no generator can produce an action
    """
    check_player(state, player)
    rng = GameRNG(seed)
    for kind in _ORDERS[rng.randbelow(len(_ORDERS))]:
        action = GENERATORS[kind](state, player, rng.next64())
        if action is not None:
            return action
    raise StalemateError(player, state.tick)


def _greedy_give_back(state: GameState, action: Action) -> Action:
    """Attach a deterministic valid give-back (suits in index order)."""
    hand = post_effect_hand(state, action)
    excess = sum(hand) - state.params.max_tokens
    if excess <= 0:
        return action
    give_back = [0] * len(hand)
    for suit, count in enumerate(hand):
        returned = min(count, excess)
        give_back[suit] = returned
        excess -= returned
    return Action(action.kind, action.player, suits=action.suits, deck=action.deck,
                  slot=action.slot, give_back=tuple(give_back))


def _candidate_actions(state: GameState, player: int, kind: ActionKind) -> List[Action]:
    """Every structurally possible action of a kind, before legality."""
    params = state.params
    holder = state.players[player]
    if kind == ActionKind.PICK_DIFFERENT:
        return [Action(kind, player, suits=suits)
                for size in range(1, params.pick_different_types + 1)
                for suits in combinations(range(params.token_types), size)]
    if kind == ActionKind.PICK_SAME:
        return [Action(kind, player, suits=(suit,)) for suit in range(params.token_types)]
    if kind == ActionKind.RESERVE_TABLE:
        return [Action(kind, player, deck=d, slot=s)
                for d, row in enumerate(state.face_up) for s in range(len(row))]
    if kind == ActionKind.RESERVE_DECK:
        return [Action(kind, player, deck=d) for d in range(len(state.decks))]
    if kind == ActionKind.BUY_TABLE:
        return [Action(kind, player, deck=d, slot=s,
                       payment=canonical_payment(card, holder) or ())
                for d, row in enumerate(state.face_up) for s, card in enumerate(row)]
    return [Action(kind, player, slot=s, payment=canonical_payment(r.card, holder) or ())
            for s, r in enumerate(holder.reserved)]


def legal_kinds(state: GameState, player: int) -> List[ActionKind]:
    """Action kinds with at least one legal action, by exhaustive scan.

    Independent of the generators' sampling logic; used to verify that a
    generator returns None only when its kind has no legal action.
    """
    check_player(state, player)
    kinds = []
    for kind in _KINDS:
        for candidate in _candidate_actions(state, player, kind):
            if not kind.is_buy:
                candidate = _greedy_give_back(state, candidate)
            if is_legal(state, candidate):
                kinds.append(kind)
                break
    return kinds
