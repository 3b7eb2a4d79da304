"""Range-based argumentation semantics (semi-stable, stage) via 2-valued models of logic programs."""

__version__ = "0.1.0"
