# Keeps the tests directory importable (oracles.py) regardless of cwd.
