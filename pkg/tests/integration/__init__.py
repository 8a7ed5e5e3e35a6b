"""Integration tests: full games, command line and throughput."""
