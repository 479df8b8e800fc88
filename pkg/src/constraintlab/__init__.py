"""Label-free constraint supervision lab: train small CNNs from output-space
constraints (free-fall parabolas, constant velocity, causal implications)
instead of labels, on deterministic synthetic scenes."""

__version__ = "0.1.0"
