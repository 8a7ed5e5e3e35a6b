"""Test suite for the game engine, agents and tuning."""
