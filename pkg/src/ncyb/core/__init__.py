"""Report model, suite runner and seeded randomness."""
