"""Content-file loading and experiment result export."""
