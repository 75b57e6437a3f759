#!/usr/bin/env python3
"""Emit the Bruhat Hasse diagram of a small ball as DOT text."""

from zerohecke.cli import bruhat_dot
from zerohecke.rootdata import build_root_system

print(bruhat_dot(build_root_system("A", 1), 3, max_elements=10_000), end="")
