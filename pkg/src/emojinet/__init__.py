"""Machine-readable emoji sense inventory: build pipeline, lookup service and disambiguator."""

from .inventory import (
    EmojiEntry,
    EmojiImage,
    SenseAssignment,
    canonicalize_codepoint,
    inventory_stats,
    load_inventory,
    save_inventory,
)

__version__ = "0.1.0"

__all__ = [
    "EmojiEntry",
    "EmojiImage",
    "SenseAssignment",
    "canonicalize_codepoint",
    "inventory_stats",
    "load_inventory",
    "save_inventory",
]
