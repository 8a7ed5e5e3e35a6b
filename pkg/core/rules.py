"""Action rules: legality, state transition, payment and the noble rule."""

from typing import List, Optional, Tuple

from core.exceptions import RuleViolationError, UsageError
from models.action import Action
from models.content import Card, Noble
from models.enums import ActionKind
from models.game_state import GameState, PlayerState, ReservedCard


def discounted_price(card: Card, player: PlayerState) -> List[int]:
    """Card price after the player's bonus discounts; joker entry is 0."""
    bonus = player.bonus_counts
    discounted = [0] * len(card.price)
    for suit in range(len(card.price) - 1):
        remaining = card.price[suit] - bonus[suit]
        if remaining > 0:
            discounted[suit] = remaining
    return discounted


def canonical_payment(card: Card, player: PlayerState) -> Optional[Tuple[int, ...]]:
    """Payment using suit tokens first and jokers for any shortfall.

    Returns:
        Payment token vector, or None if jokers cannot cover the shortfall
    """
    hand = player.hand
    bonus = player.bonus_counts
    if card.cost - sum(bonus) > sum(hand):
        return None
    joker = len(card.price) - 1
    payment = [0] * len(card.price)
    shortfall = 0
    for suit in range(joker):
        need = card.price[suit] - bonus[suit]
        if need <= 0:
            continue
        paid = need if hand[suit] >= need else hand[suit]
        payment[suit] = paid
        shortfall += need - paid
    if shortfall > hand[joker]:
        return None
    payment[joker] = shortfall
    return tuple(payment)


def check_player(state: GameState, player: int):
    """Raise UsageError for a player index outside [0, P)."""
    if not 0 <= player < state.params.players:
        raise UsageError(f"Player {player} out of range for {state.params.players} players")


def face_up_card(state: GameState, deck: int, slot: int) -> Card:
    """Face-up card at (deck, slot); raises RuleViolationError if absent."""
    if not 0 <= deck < len(state.face_up) or not 0 <= slot < len(state.face_up[deck]):
        raise RuleViolationError('face_up_slot', f"no face-up card at deck {deck} slot {slot}")
    return state.face_up[deck][slot]


def post_effect_hand(state: GameState, action: Action) -> List[int]:
    """Hand of the acting player after the active effect, before give-back."""
    params = state.params
    hand = state.players[action.player].hand[:]
    kind = action.kind
    if kind == ActionKind.PICK_DIFFERENT:
        for suit in action.suits:
            hand[suit] += params.pick_different_tokens
    elif kind == ActionKind.PICK_SAME:
        hand[action.suits[0]] += params.pick_same_tokens
    elif kind.is_reserve and state.table_tokens[params.joker_index] > 0:
        hand[params.joker_index] += 1
    return hand


def _validate_give_back(state: GameState, action: Action):
    params = state.params
    give_back = action.give_back
    if action.kind.is_buy:
        if any(give_back):
            raise RuleViolationError('give_back_on_buy', "buy actions cannot give tokens back")
        return

    hand = post_effect_hand(state, action)
    excess = sum(hand) - params.max_tokens
    if not give_back:
        if excess > 0:
            raise RuleViolationError('max_tokens', f"hand would hold {sum(hand)} tokens, give back {excess}")
        return
    if len(give_back) != params.token_types + 1 or any(t < 0 for t in give_back):
        raise RuleViolationError('give_back_shape', "give-back must be a non-negative token vector")
    returned = sum(give_back)
    if returned != max(0, excess):
        raise RuleViolationError(
            'give_back_amount',
            f"must give back exactly {max(0, excess)} tokens, got {returned}",
        )
    for suit, count in enumerate(give_back):
        if count > hand[suit]:
            raise RuleViolationError('give_back_exceeds_hand', f"cannot return {count} of suit {suit}")


def validate_action(state: GameState, action: Action):
    """Check an action against the rules.

    Raises:
        UsageError: If the acting player does not exist
        RuleViolationError: Naming the first violated rule
    """
    check_player(state, action.player)
    params = state.params
    player = state.players[action.player]
    kind = action.kind

    if not kind.is_buy and action.payment:
        raise RuleViolationError('payment_on_non_buy', f"{kind} carries a payment")

    if kind == ActionKind.PICK_DIFFERENT:
        suits = action.suits
        if not 1 <= len(suits) <= params.pick_different_types:
            raise RuleViolationError('pick_different_count', f"{len(suits)} suits picked")
        if len(set(suits)) != len(suits):
            raise RuleViolationError('pick_different_distinct', "suits must be distinct")
        for suit in suits:
            if not 0 <= suit < params.token_types:
                raise RuleViolationError('suit_range', f"suit {suit}")
            if state.table_tokens[suit] < params.pick_different_tokens:
                raise RuleViolationError('pick_different_stack', f"suit {suit} has too few tokens")

    elif kind == ActionKind.PICK_SAME:
        if len(action.suits) != 1:
            raise RuleViolationError('pick_same_single_suit', "exactly one suit required")
        suit = action.suits[0]
        if not 0 <= suit < params.token_types:
            raise RuleViolationError('suit_range', f"suit {suit}")
        stack = state.table_tokens[suit]
        if stack < params.pick_same_min_stack or stack < params.pick_same_tokens:
            raise RuleViolationError('pick_same_min_stack', f"suit {suit} stack is {stack}")

    elif kind == ActionKind.RESERVE_TABLE:
        if len(player.reserved) >= params.max_reserved:
            raise RuleViolationError('max_reserved', f"already {len(player.reserved)} reserved")
        face_up_card(state, action.deck, action.slot)

    elif kind == ActionKind.RESERVE_DECK:
        if len(player.reserved) >= params.max_reserved:
            raise RuleViolationError('max_reserved', f"already {len(player.reserved)} reserved")
        if not 0 <= action.deck < len(state.decks) or not state.decks[action.deck]:
            raise RuleViolationError('reserve_empty_deck', f"deck {action.deck} is empty")

    elif kind == ActionKind.BUY_TABLE:
        card = face_up_card(state, action.deck, action.slot)
        _validate_payment(card, player, action)

    elif kind == ActionKind.BUY_RESERVED:
        if not 0 <= action.slot < len(player.reserved):
            raise RuleViolationError('reserved_slot', f"no reserved card at slot {action.slot}")
        _validate_payment(player.reserved[action.slot].card, player, action)

    _validate_give_back(state, action)


def _validate_payment(card: Card, player: PlayerState, action: Action):
    expected = canonical_payment(card, player)
    if expected is None:
        raise RuleViolationError('unaffordable', f"card {card.card_id} cannot be paid")
    if tuple(action.payment) != expected:
        raise RuleViolationError('payment_mismatch', f"expected payment {list(expected)}")


def is_legal(state: GameState, action: Action) -> bool:
    """Boolean form of :func:`validate_action`."""
    try:
        validate_action(state, action)
    except (RuleViolationError, UsageError):
        return False
    return True


def _take_from_table(state: GameState, deck: int, slot: int) -> Card:
    """Remove a face-up card and refill its slot from the deck."""
    row = state.face_up[deck]
    card = row[slot]
    if state.decks[deck]:
        row[slot] = state.decks[deck].pop()
    else:
        del row[slot]
    return card


def _buy(state: GameState, player: PlayerState, card: Card, payment: Tuple[int, ...]):
    for suit, count in enumerate(payment):
        if count:
            player.hand[suit] -= count
            state.table_tokens[suit] += count
    player.purchased.append(card)
    player.bonus_counts[card.bonus] += 1
    player.prestige += card.value


def apply(state: GameState, action: Action, validate: bool = True) -> GameState:
    """Apply an action in place.

    Order: active effect, give-back, noble pass for the acting player, then
    the tick advances and the turn passes to the next seat.

    Args:
        state: State to mutate
        action: Action to apply
        validate: Check legality first (callers that just generated the
            action from the same state may skip it)

    Returns:
        The mutated state

    Raises:
        RuleViolationError: If the action is illegal
        UsageError: If the acting player does not exist
    """
    if validate:
        validate_action(state, action)

    params = state.params
    joker = params.joker_index
    player = state.players[action.player]
    kind = action.kind
    table = state.table_tokens

    if kind == ActionKind.PICK_DIFFERENT:
        amount = params.pick_different_tokens
        for suit in action.suits:
            table[suit] -= amount
            player.hand[suit] += amount
    elif kind == ActionKind.PICK_SAME:
        suit = action.suits[0]
        table[suit] -= params.pick_same_tokens
        player.hand[suit] += params.pick_same_tokens
    elif kind == ActionKind.RESERVE_TABLE:
        card = _take_from_table(state, action.deck, action.slot)
        player.reserved.append(ReservedCard(card, False))
        if table[joker] > 0:
            table[joker] -= 1
            player.hand[joker] += 1
    elif kind == ActionKind.RESERVE_DECK:
        card = state.decks[action.deck].pop()
        player.reserved.append(ReservedCard(card, True))
        if table[joker] > 0:
            table[joker] -= 1
            player.hand[joker] += 1
    elif kind == ActionKind.BUY_TABLE:
        card = _take_from_table(state, action.deck, action.slot)
        _buy(state, player, card, action.payment)
    elif kind == ActionKind.BUY_RESERVED:
        card = player.reserved.pop(action.slot).card
        _buy(state, player, card, action.payment)

    for suit, count in enumerate(action.give_back):
        if count:
            player.hand[suit] -= count
            table[suit] += count

    noble_pass(state, action.player)

    state.tick += 1
    state.current_player = (action.player + 1) % params.players
    return state


def pass_turn(state: GameState, player: int) -> GameState:
    """Skip the turn of a player with no legal action.

    Holdings are untouched; the tick advances and the turn passes on.
    """
    check_player(state, player)
    state.passes += 1
    state.tick += 1
    state.current_player = (player + 1) % state.params.players
    return state


def noble_pass(state: GameState, player: int) -> Optional[Noble]:
    """Passive noble rule: at most one qualifying noble (lowest table index) joins the player.

    Returns:
        The acquired noble, or None
    """
    holder = state.players[player]
    cards = sum(holder.bonus_counts)
    for index, noble in enumerate(state.nobles):
        if noble.total <= cards and noble.is_satisfied_by(holder.bonus_counts):
            del state.nobles[index]
            holder.nobles.append(noble)
            holder.prestige += noble.value
            return noble
    return None
