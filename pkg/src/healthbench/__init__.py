"""Code-health benchmarking toolkit.

Scores git repositories on a 1-10 code-health scale, mines churn hotspots,
aggregates projects into segmented benchmark distributions, and publishes
anonymous leaderboards.
"""

__version__ = "0.1.0"
