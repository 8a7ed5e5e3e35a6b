"""Unit tests for the game engine, agents and tuning."""
