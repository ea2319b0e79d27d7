"""Top-level test package for stanleyDepth."""
